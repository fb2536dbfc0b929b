#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace fibfull {

class Scalar;

/// Residue class modulo a prime p < 2^31.
struct Residue {
  std::uint32_t value = 0;
  std::uint32_t modulus = 2;
  friend bool operator==(const Residue&, const Residue&) = default;
};

/// Coefficient field: the rationals or a prime field F_p.
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws InputError unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);

  bool is_rationals() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }

  Scalar from_int(long v) const;
  Scalar from_rational(const mpq_class& q) const;
  /// Brings a scalar of either kind into this field.
  Scalar coerce(const Scalar& s) const;

  /// "Q" or "F 32003"; matches the input-file header syntax.
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

/// Exact element of Q or F_p.
///
/// Rationals act as "untyped" constants: combining a rational with a residue
/// reduces the rational modulo p first, so integer literals can be mixed
/// freely with F_p data. Combining residues of different moduli throws.
class Scalar {
 public:
  Scalar() : v_(mpq_class(0)) {}
  Scalar(long v) : v_(mpq_class(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : v_(mpq_class(v)) {}   // NOLINT(google-explicit-constructor)
  explicit Scalar(const mpq_class& q) : v_(q) { std::get<0>(v_).canonicalize(); }
  explicit Scalar(Residue r) : v_(r) {}

  static Scalar residue(std::uint64_t value, std::uint32_t p);

  bool is_rational() const { return v_.index() == 0; }
  const mpq_class& rational() const { return std::get<0>(v_); }
  const Residue& residue() const { return std::get<1>(v_); }

  bool is_zero() const;
  bool is_one() const;
  bool is_integer() const;

  Scalar operator-() const;
  Scalar inverse() const;  // throws std::domain_error on zero

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Rationals print as "3", "-1/2"; residues print their representative in [0, p).
  std::string to_string() const;

 private:
  std::variant<mpq_class, Residue> v_;
};

}  // namespace fibfull
