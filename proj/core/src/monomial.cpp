#include "fibfull/monomial.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "fibfull/error.hpp"

namespace fibfull {

Monomial::Monomial(std::size_t nvars) : n_(static_cast<std::uint32_t>(nvars)) {
  if (nvars > kMaxVariables) {
    throw InputError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
}

Monomial::Monomial(std::initializer_list<std::uint32_t> exps) : Monomial(exps.size()) {
  std::copy(exps.begin(), exps.end(), e_.begin());
}

Monomial::Monomial(std::span<const std::uint32_t> exps) : Monomial(exps.size()) {
  std::copy(exps.begin(), exps.end(), e_.begin());
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i, std::uint32_t power) {
  Monomial m(nvars);
  m.e_[i] = power;
  return m;
}

long Monomial::degree() const {
  long d = 0;
  for (std::uint32_t i = 0; i < n_; ++i) d += e_[i];
  return d;
}

long Monomial::degree_prefix(std::size_t k) const {
  long d = 0;
  for (std::size_t i = 0; i < std::min<std::size_t>(k, n_); ++i) d += e_[i];
  return d;
}

long Monomial::weighted_degree(std::span<const long> w) const {
  if (w.size() != n_) throw InputError("weight vector length does not match variable count");
  long d = 0;
  for (std::uint32_t i = 0; i < n_; ++i) d += static_cast<long>(e_[i]) * w[i];
  return d;
}

bool Monomial::is_one() const {
  for (std::uint32_t i = 0; i < n_; ++i)
    if (e_[i] != 0) return false;
  return true;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::uint32_t i = 0; i < n_; ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

bool Monomial::is_squarefree() const {
  for (std::uint32_t i = 0; i < n_; ++i)
    if (e_[i] > 1) return false;
  return true;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::uint32_t i = 0; i < n_; ++i)
    if (e_[i] != 0 && o.e_[i] != 0) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a.n_);
  for (std::uint32_t i = 0; i < a.n_; ++i) {
    std::uint64_t s = static_cast<std::uint64_t>(a.e_[i]) + b.e_[i];
    if (s > std::numeric_limits<std::uint32_t>::max()) {
      throw std::overflow_error("monomial exponent overflow");
    }
    r.e_[i] = static_cast<std::uint32_t>(s);
  }
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r(a.n_);
  for (std::uint32_t i = 0; i < a.n_; ++i) r.e_[i] = a.e_[i] - b.e_[i];
  return r;
}

bool operator==(const Monomial& a, const Monomial& b) {
  if (a.n_ != b.n_) return false;
  return std::equal(a.e_.begin(), a.e_.begin() + a.n_, b.e_.begin());
}

bool operator<(const Monomial& a, const Monomial& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  return std::lexicographical_compare(a.e_.begin(), a.e_.begin() + a.n_, b.e_.begin(),
                                      b.e_.begin() + b.n_);
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::uint32_t i = 0; i < n_; ++i) {
    h ^= e_[i];
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
  std::string out;
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (e_[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names.at(i);
    if (e_[i] > 1) out += "^" + std::to_string(e_[i]);
  }
  return out.empty() ? "1" : out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.set(i, std::max(a[i], b[i]));
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.set(i, std::min(a[i], b[i]));
  return r;
}

namespace {

void gen_monomials(std::size_t nvars, std::size_t pos, long left, Monomial& cur,
                   std::vector<Monomial>& out) {
  if (pos + 1 == nvars) {
    cur.set(pos, static_cast<std::uint32_t>(left));
    out.push_back(cur);
    return;
  }
  for (long e = left; e >= 0; --e) {
    cur.set(pos, static_cast<std::uint32_t>(e));
    gen_monomials(nvars, pos + 1, left - e, cur, out);
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, long d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  Monomial cur(nvars);
  gen_monomials(nvars, 0, d, cur, out);
  return out;
}

long count_monomials(std::size_t nvars, long d) {
  if (d < 0) return 0;
  if (nvars == 0) return d == 0 ? 1 : 0;
  // C(d + n - 1, n - 1)
  long k = static_cast<long>(nvars) - 1;
  __int128 r = 1;
  for (long i = 1; i <= k; ++i) r = r * (d + i) / i;
  return static_cast<long>(r);
}

std::vector<std::string> variable_names(std::size_t nx, bool with_t) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nx; ++i) names.push_back("x" + std::to_string(i));
  if (with_t) names.emplace_back("t");
  return names;
}

}  // namespace fibfull
