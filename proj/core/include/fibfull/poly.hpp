#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fibfull/monomial.hpp"
#include "fibfull/order.hpp"
#include "fibfull/scalar.hpp"
#include "fibfull/unipoly.hpp"

namespace fibfull {

struct Term {
  Monomial mon;
  Scalar coef;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial in a fixed number of variables.
///
/// Terms are stored without zeros, in descending grevlex order. Family
/// polynomials in k[t][x_0..x_r] use r+2 variables with t last; their
/// x-degree ignores the final variable.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::size_t nvars) : n_(nvars) {}
  Poly(std::size_t nvars, std::vector<Term> terms);  // combines and sorts
  static Poly constant(std::size_t nvars, const Scalar& c);
  static Poly monomial(const Monomial& m, const Scalar& c = Scalar(1));
  static Poly variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  /// Maximal total degree; -1 for zero.
  long degree() const;
  /// Maximal degree in the first k variables; -1 for zero.
  long degree_prefix(std::size_t k) const;
  bool is_homogeneous() const;
  /// Homogeneous in the first k variables.
  bool is_homogeneous_prefix(std::size_t k) const;

  /// Leading term under an order; precondition: nonzero.
  const Term& leading(const MonomialOrder& order) const;
  /// Terms sorted descending under an order.
  std::vector<Term> sorted_terms(const MonomialOrder& order) const;
  Scalar coefficient(const Monomial& m) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Scalar& c) const;
  Poly times_monomial(const Monomial& m, const Scalar& c = Scalar(1)) const;
  friend bool operator==(const Poly& a, const Poly& b);

  /// Divides by the leading coefficient under an order.
  Poly monic(const MonomialOrder& order) const;
  /// Brings every coefficient into a field.
  Poly coerced(const Field& f) const;

  /// Substitutes variable i = value; the variable count is unchanged.
  Poly substitute(std::size_t i, const Scalar& value) const;
  /// Removes the last variable after substituting it = value.
  Poly drop_last(const Scalar& value) const;
  /// Appends a fresh variable with exponent 0 everywhere.
  Poly add_variable() const;
  /// Reorders variables: new variable perm[i] receives old variable i.
  Poly permuted(const std::vector<std::size_t>& perm, std::size_t new_nvars) const;

  /// Coefficient of x^m viewed as a polynomial in the last variable t, where
  /// m ranges over monomials in the other variables (t-exponent 0).
  UniPoly t_coefficient(const Monomial& x_part) const;

  std::string to_string(const std::vector<std::string>& names) const;
  /// Uses x0..x{n-1}, or x0..x{n-2},t when family is set.
  std::string to_string(bool family = false) const;

 private:
  void normalize();
  std::size_t n_ = 0;
  std::vector<Term> terms_;
};

/// in_omega(f): the terms of maximal omega-degree.
Poly omega_initial(const WeightVector& w, const Poly& f);

/// hom_omega(f) in k[t][x]: each term x^a receives t^{deg_w(f) - deg_w(x^a)}.
/// The result has one more variable (t, last).
Poly omega_homogenize(const WeightVector& w, const Poly& f);

/// omega-degree of f (maximum over its terms); precondition: nonzero.
long weight_degree(const WeightVector& w, const Poly& f);

/// Parses the textual polynomial grammar: terms joined by + and -, '^' for
/// powers, optional '*', integer and rational coefficients, parentheses.
/// Throws InputError naming the offending position.
Poly parse_poly(const std::string& text, const std::vector<std::string>& names);

}  // namespace fibfull
