#include "fibfull/scalar.hpp"

#include <stdexcept>

#include "fibfull/error.hpp"

namespace fibfull {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw std::domain_error("inverse of zero in F_p");
  // Extended Euclid on signed 64-bit values.
  std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
  }
  std::int64_t res = s0 % static_cast<std::int64_t>(p);
  if (res < 0) res += p;
  return static_cast<std::uint32_t>(res);
}

std::uint32_t reduce_mpz(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

Residue to_residue(const mpq_class& q, std::uint32_t p) {
  std::uint32_t num = reduce_mpz(q.get_num(), p);
  std::uint32_t den = reduce_mpz(q.get_den(), p);
  if (den == 0) {
    throw InputError("rational " + q.get_str() + " has denominator divisible by " +
                     std::to_string(p));
  }
  return Residue{static_cast<std::uint32_t>(
                     (static_cast<std::uint64_t>(num) * inv_mod(den, p)) % p),
                 p};
}

// Brings a and b to a common representation.
// Returns the modulus if residue arithmetic applies, 0 for rationals.
std::uint32_t common_modulus(const Scalar& a, const Scalar& b) {
  if (a.is_rational() && b.is_rational()) return 0;
  if (!a.is_rational() && !b.is_rational()) {
    if (a.residue().modulus != b.residue().modulus) {
      throw InputError("mixing residues of different characteristics");
    }
    return a.residue().modulus;
  }
  return a.is_rational() ? b.residue().modulus : a.residue().modulus;
}

Residue as_residue(const Scalar& s, std::uint32_t p) {
  return s.is_rational() ? to_residue(s.rational(), p) : s.residue();
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31)) {
    throw InputError("prime fields require p < 2^31, got " + std::to_string(p));
  }
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  return Field(static_cast<std::uint32_t>(p));
}

Scalar Field::from_int(long v) const {
  if (is_rationals()) return Scalar(v);
  return Scalar(to_residue(mpq_class(v), p_));
}

Scalar Field::from_rational(const mpq_class& q) const {
  if (is_rationals()) return Scalar(q);
  return Scalar(to_residue(q, p_));
}

Scalar Field::coerce(const Scalar& s) const {
  if (s.is_rational()) return from_rational(s.rational());
  if (is_rationals() || s.residue().modulus != p_) {
    throw InputError("scalar " + s.to_string() + " does not belong to field " + name());
  }
  return s;
}

std::string Field::name() const {
  return is_rationals() ? std::string("Q") : "F " + std::to_string(p_);
}

Scalar Scalar::residue(std::uint64_t value, std::uint32_t p) {
  return Scalar(Residue{static_cast<std::uint32_t>(value % p), p});
}

bool Scalar::is_zero() const {
  return is_rational() ? sgn(rational()) == 0 : residue().value == 0;
}

bool Scalar::is_one() const {
  return is_rational() ? rational() == 1 : residue().value == 1;
}

bool Scalar::is_integer() const {
  return is_rational() ? rational().get_den() == 1 : true;
}

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(mpq_class(-rational()));
  const Residue& r = residue();
  return Scalar(Residue{r.value == 0 ? 0u : r.modulus - r.value, r.modulus});
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero scalar");
  if (is_rational()) return Scalar(mpq_class(1 / rational()));
  const Residue& r = residue();
  return Scalar(Residue{inv_mod(r.value, r.modulus), r.modulus});
}

Scalar& Scalar::operator+=(const Scalar& o) {
  std::uint32_t p = common_modulus(*this, o);
  if (p == 0) {
    std::get<0>(v_) += o.rational();
  } else {
    Residue a = as_residue(*this, p), b = as_residue(o, p);
    std::uint64_t s = static_cast<std::uint64_t>(a.value) + b.value;
    v_ = Residue{static_cast<std::uint32_t>(s % p), p};
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  std::uint32_t p = common_modulus(*this, o);
  if (p == 0) {
    std::get<0>(v_) -= o.rational();
  } else {
    Residue a = as_residue(*this, p), b = as_residue(o, p);
    std::uint64_t s = static_cast<std::uint64_t>(a.value) + p - b.value;
    v_ = Residue{static_cast<std::uint32_t>(s % p), p};
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  std::uint32_t p = common_modulus(*this, o);
  if (p == 0) {
    std::get<0>(v_) *= o.rational();
  } else {
    Residue a = as_residue(*this, p), b = as_residue(o, p);
    v_ = Residue{static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value) * b.value % p), p};
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero scalar");
  std::uint32_t p = common_modulus(*this, o);
  if (p == 0) {
    std::get<0>(v_) /= o.rational();
  } else {
    Residue a = as_residue(*this, p), b = as_residue(o, p);
    v_ = Residue{static_cast<std::uint32_t>(
                     static_cast<std::uint64_t>(a.value) * inv_mod(b.value, p) % p),
                 p};
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  std::uint32_t p = common_modulus(a, b);
  if (p == 0) return a.rational() == b.rational();
  return as_residue(a, p).value == as_residue(b, p).value;
}

std::string Scalar::to_string() const {
  if (is_rational()) return rational().get_str();
  return std::to_string(residue().value);
}

}  // namespace fibfull
