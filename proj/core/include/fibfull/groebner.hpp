#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fibfull/monomial.hpp"
#include "fibfull/order.hpp"
#include "fibfull/poly.hpp"
#include "fibfull/scalar.hpp"

namespace fibfull {

/// Monomial ideal given by its minimal generators, sorted in storage order.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens);  // minimalizes

  std::size_t nvars() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool contains(const Monomial& m) const;
  bool is_squarefree() const;

  std::string to_string(const std::vector<std::string>& names) const;
  std::string to_string() const { return to_string(variable_names(n_)); }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.n_ == b.n_ && a.gens_ == b.gens_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Monomial> gens_;
};

/// Homogeneous or inhomogeneous ideal of k[x_0..x_{n-1}] with cached reduced
/// Groebner bases. Copies share the cache; the cache is safe for concurrent
/// readers and a single writer per order.
class Ideal {
 public:
  Ideal() = default;
  Ideal(std::size_t nvars, Field field, std::vector<Poly> gens);
  static Ideal zero(std::size_t nvars, Field field) { return Ideal(nvars, field, {}); }
  static Ideal unit(std::size_t nvars, Field field);
  static Ideal from_monomials(const MonomialIdeal& m, Field field);

  std::size_t nvars() const { return n_; }
  const Field& field() const { return field_; }
  const std::vector<Poly>& generators() const { return gens_; }

  bool is_homogeneous() const { return homogeneous_; }
  /// Homogeneous in the first k variables (x-homogeneity of family ideals).
  bool is_homogeneous_prefix(std::size_t k) const;

  /// Tri-state flag: known saturated, known not saturated, or unknown.
  std::optional<bool> saturated_flag() const;
  void set_saturated_flag(bool v) const;

  /// Reduced Groebner basis, monic, sorted by (degree, order).
  const std::vector<Poly>& groebner(const MonomialOrder& order) const;

  bool is_zero() const;
  bool is_unit() const;

  /// Canonical text of the grevlex reduced basis; equal ideals give equal text.
  std::string canonical_text() const;

 private:
  struct Cache;
  std::size_t n_ = 0;
  Field field_ = Field::rationals();
  std::vector<Poly> gens_;
  bool homogeneous_ = true;
  std::shared_ptr<Cache> cache_;
};

std::vector<Poly> reduced_groebner(const Ideal& I, const MonomialOrder& order);
Poly normal_form(const Poly& f, const Ideal& I, const MonomialOrder& order);
bool contains(const Ideal& I, const Poly& f);
bool same_ideal(const Ideal& a, const Ideal& b);
MonomialIdeal initial_ideal(const Ideal& I, const MonomialOrder& order);
bool is_squarefree(const MonomialIdeal& m);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
/// I : f; throws InputError for f = 0.
Ideal colon(const Ideal& I, const Poly& f);
/// I : x_i^infinity for homogeneous I.
Ideal saturate_variable(const Ideal& I, std::size_t i);
/// I : m^infinity with m = (x_0, ..., x_{n-1}); throws InputError for
/// inhomogeneous input.
Ideal saturate_irrelevant(const Ideal& I);
/// I intersected with the subring free of the masked variables; the result
/// lives in the same ring.
Ideal eliminate(const Ideal& I, const std::vector<bool>& mask);

/// Exact quotient a / f; throws InternalError if f does not divide a.
Poly exact_divide(const Poly& a, const Poly& f);
/// Monic (under grevlex) greatest common divisor of multivariate polynomials.
Poly poly_gcd(const Poly& a, const Poly& b, const Field& field);

}  // namespace fibfull
