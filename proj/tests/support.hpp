#pragma once

#include <string>
#include <vector>

#include "fibfull/degeneration.hpp"
#include "fibfull/groebner.hpp"
#include "fibfull/poly.hpp"

namespace fibfull::test {

inline Poly P(const std::string& s, std::size_t n = 4) { return parse_poly(s, variable_names(n)); }

inline Ideal ideal(const std::vector<std::string>& gens, std::size_t n = 4, Field k = Field::rationals()) {
  std::vector<Poly> ps;
  for (const auto& g : gens) ps.push_back(parse_poly(g, variable_names(n)));
  return Ideal(n, k, std::move(ps));
}

inline FamilyIdeal family(const std::vector<std::string>& gens, std::size_t nx, Field k = Field::rationals()) {
  std::vector<Poly> ps;
  for (const auto& g : gens) ps.push_back(parse_poly(g, variable_names(nx, true)));
  return FamilyIdeal::from_generators(nx, k, std::move(ps));
}

inline Ideal twisted_cubic(Field k = Field::rationals()) {
  return ideal({"x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"}, 4, k);
}
inline Ideal skew_lines() { return ideal_intersect(ideal({"x0", "x1"}), ideal({"x2", "x3"})); }
inline Ideal conic_point() { return ideal_intersect(ideal({"x3", "x0*x2 - x1^2"}), ideal({"x0", "x1", "x2"})); }
inline Ideal plane_cubic_point() {
  return ideal_intersect(ideal({"x3", "x0^3 + x1^3 + x2^3"}), ideal({"x0", "x1", "x2"}));
}
inline Ideal minors_2x3() { return ideal({"x0*x4 - x1*x3", "x0*x5 - x2*x3", "x1*x5 - x2*x4"}, 6); }

/// Corpus used by property checks.
inline std::vector<Ideal> corpus() {
  return {twisted_cubic(),
          skew_lines(),
          conic_point(),
          plane_cubic_point(),
          ideal({"x0^2", "x1^2"}),
          ideal({"x0*x1", "x0*x2"}),
          ideal({"x0*x1", "x2*x3", "x0*x3 - x1*x2"}),
          ideal({"x0^2 + x1*x2", "x0*x1*x2"}, 3),
          ideal({"x0*x1 - x2^2"}, 3),
          minors_2x3()};
}

}  // namespace fibfull::test
