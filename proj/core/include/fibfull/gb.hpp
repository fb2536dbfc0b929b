#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fibfull/monomial.hpp"
#include "fibfull/order.hpp"
#include "fibfull/poly.hpp"
#include "fibfull/scalar.hpp"

namespace fibfull {

/// Term c * x^m * e_comp of a free module S^k.
struct ModTerm {
  Monomial mon;
  std::uint32_t comp = 0;
  Scalar coef;
};

/// Module element: terms strictly descending under a ModuleOrder, no zeros.
using ModVec = std::vector<ModTerm>;

/// Total order on module monomials x^m e_i.
class ModuleOrder {
 public:
  using Cmp = std::function<std::strong_ordering(const Monomial&, std::uint32_t, const Monomial&,
                                                 std::uint32_t)>;
  explicit ModuleOrder(Cmp cmp) : cmp_(std::move(cmp)) {}

  /// Ideals: a single component compared by the monomial order.
  static ModuleOrder rank_one(const MonomialOrder& o);
  /// Position over term: e_0 > e_1 > ..., then the monomial order.
  static ModuleOrder position_over_term(const MonomialOrder& o);
  /// Term over position on shifted degrees deg(m) + shift[i], then the
  /// monomial order, then e_0 > e_1 > ... .
  static ModuleOrder term_over_position(const MonomialOrder& o, std::vector<long> shifts);

  std::strong_ordering operator()(const Monomial& a, std::uint32_t ca, const Monomial& b,
                                  std::uint32_t cb) const {
    return cmp_(a, ca, b, cb);
  }
  std::strong_ordering operator()(const ModTerm& a, const ModTerm& b) const {
    return cmp_(a.mon, a.comp, b.mon, b.comp);
  }

 private:
  Cmp cmp_;
};

/// Sorts, merges equal module monomials and drops zeros.
void normalize(ModVec& v, const ModuleOrder& ord);

/// a + c * x^m * b for sorted inputs.
ModVec add_scaled(const ModVec& a, const ModVec& b, const Monomial& m, const Scalar& c,
                  const ModuleOrder& ord);

ModVec to_modvec(const Poly& p, const ModuleOrder& ord, std::uint32_t comp = 0);
Poly to_poly(const ModVec& v, std::size_t nvars);

struct GbOptions {
  /// Degree of a module monomial; defaults to the total degree.
  std::function<long(const Monomial&, std::uint32_t)> degree;
  /// Pairs whose lcm has degree above this bound are skipped.
  std::optional<long> degree_bound;
  /// Buchberger's coprime-leads criterion; only valid for rank one.
  bool product_criterion = true;
};

/// Reduced Groebner basis: monic, inter-reduced, sorted by (degree, order).
std::vector<ModVec> buchberger(std::vector<ModVec> gens, const ModuleOrder& ord,
                               const GbOptions& opt = {});

/// Full normal form of f with respect to basis g (any order-compatible set).
ModVec reduce(ModVec f, const std::vector<ModVec>& g, const ModuleOrder& ord);

/// Division with quotients: f = sum_k q_k g_k + remainder, where the
/// quotient terms record the multiplier x^m * c in component k.
struct Division {
  ModVec quotient;
  ModVec remainder;
};
/// With top_only, stops at the first irreducible leading term and returns
/// the rest as remainder (enough for syzygy computations on a GB).
Division divide(ModVec f, const std::vector<ModVec>& g, const ModuleOrder& ord,
                bool top_only = false);

}  // namespace fibfull
