#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fibfull/scalar.hpp"

namespace fibfull {

/// Dense univariate polynomial in the parameter t over Q or F_p.
class UniPoly {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr long kZeroDegree = -1;

  UniPoly() = default;
  explicit UniPoly(std::vector<Scalar> coeffs);  // coeffs[i] multiplies t^i
  UniPoly(const Scalar& c);                      // NOLINT(google-explicit-constructor)
  static UniPoly t_power(long e, const Scalar& c = Scalar(1));

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(long i) const;
  Scalar leading() const;

  /// Lowest exponent carrying a nonzero coefficient; kZeroDegree for zero.
  long valuation() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b);

  /// Euclidean division; throws std::domain_error for a zero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
  bool divides(const UniPoly& f) const;

  UniPoly monic() const;
  UniPoly derivative() const;
  Scalar evaluate(const Scalar& a) const;

  /// Reduction modulo t^q and multiplication by t^{-k} (exact shift down).
  UniPoly truncated(long q) const;
  UniPoly shifted_down(long k) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
UniPoly uni_gcd(const UniPoly& a, const UniPoly& b);

/// Extended gcd: returns (g, s, u) with s*a + u*b = g, g monic (or zero).
struct UniXgcd {
  UniPoly g, s, u;
};
UniXgcd uni_xgcd(const UniPoly& a, const UniPoly& b);

/// Product of the distinct monic irreducible factors of f (the radical).
UniPoly squarefree_part(const UniPoly& f);

/// Refines a list of polynomials into pairwise coprime monic squarefree
/// factors such that every input's radical is a product of some of them.
std::vector<UniPoly> gcd_free_basis(const std::vector<UniPoly>& polys);

/// Inverse of a unit (nonzero constant term) modulo t^q.
UniPoly inverse_mod_t_power(const UniPoly& u, long q);

}  // namespace fibfull
