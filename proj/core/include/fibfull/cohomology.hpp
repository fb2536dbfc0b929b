#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "fibfull/groebner.hpp"
#include "fibfull/hilbert.hpp"
#include "fibfull/resolution.hpp"

namespace fibfull {

/// Closed integer interval [lo, hi].
struct Window {
  long lo = 0;
  long hi = 0;
  /// Throws InputError when lo > hi.
  void validate() const;
  long size() const { return hi - lo + 1; }
  bool contains(long x) const { return lo <= x && x <= hi; }
  friend bool operator==(const Window&, const Window&) = default;
};

/// Everything derived from the minimal resolution of S/I.
struct ExtData {
  Ideal ideal;
  FreeResolution minimal;
  BettiTable betti;
  FreeComplex dual;
  /// Hilbert series of Ext^i(S/I, S) for i = 0..n (zero past the length).
  std::vector<HilbertSeries> ext_series;
  HilbertSeries quotient_series;
};

ExtData compute_ext_data(const Ideal& I);

/// dims[i][mu - mu_min] = dim_k Ext^i_S(S/I, S)_mu for i = 0..n.
struct ExtTable {
  std::size_t n = 0;
  Window window;
  std::vector<std::vector<long>> dims;
  /// Hilbert polynomial of Ext^i, valid for mu >= stable_from[i].
  std::vector<NumericalPolynomial> tails;
  std::vector<long> stable_from;

  long at(std::size_t i, long mu) const { return dims[i][static_cast<std::size_t>(mu - window.lo)]; }
};

/// Ext dimensions from the degree-mu strands of the dual complex; the strand
/// values are checked against the Hilbert-series route and a mismatch raises
/// InternalError.
ExtTable ext_dimensions(const Ideal& I, Window mu_window);
ExtTable ext_dimensions(const ExtData& e, Window mu_window);

/// dims[j][nu - nu_min] = dim_k H^j_m(S/I)_nu for j = 0..n, by local duality
/// with delta = n: H^j_m(M)_nu = Ext^{n-j}(M, S)_{-nu-n}.
struct LocalCohTable {
  std::size_t n = 0;
  Window window;
  std::vector<std::vector<long>> dims;
  /// Polynomial in nu equal to dims[j] for nu <= tail_until[j].
  std::vector<NumericalPolynomial> tails;
  std::vector<long> tail_until;

  long at(std::size_t j, long nu) const { return dims[j][static_cast<std::size_t>(nu - window.lo)]; }
};

LocalCohTable local_cohomology_table(const Ideal& I, Window nu_window);
LocalCohTable local_cohomology_table(const ExtData& e, Window nu_window);

/// The index flip j <-> n - j, nu <-> -nu - n between an Ext table and a
/// local cohomology table on the mirrored window.
LocalCohTable flip_to_local(const ExtTable& ext);
ExtTable flip_to_ext(const LocalCohTable& loc);

/// Cohomology table h = (h_0, ..., h_r) of the sheaf O_X(nu) for X = V(I) in
/// P^r, on a window, with polynomial tails for nu -> -infinity.
struct CohomologySignature {
  long r = 0;
  Window window;
  std::vector<std::vector<mpz_class>> h;  // h[i][nu - window.lo]
  /// tails[i](nu) = h_i(nu) for nu <= tail_until[i].
  std::vector<NumericalPolynomial> tails;
  std::vector<long> tail_until;
  NumericalPolynomial P_h;
  std::string field;
  std::string hash;
  std::string order = "grevlex";
  /// dim_k [S/I]_nu of the input ideal before saturation.
  std::vector<mpz_class> hilbert_raw;

  mpz_class at(std::size_t i, long nu) const { return h[i][static_cast<std::size_t>(nu - window.lo)]; }
  /// h_i(nu) for any nu: window value, lower tail, or the Serre-vanishing
  /// regime above the window (h_0 = P_h, others 0).
  mpz_class value(std::size_t i, long nu) const;
};

/// Default window [-(reg + n + 2), reg + n + 2] for the saturation of I,
/// widened below until the Ext Hilbert functions have reached their
/// polynomials.
Window signatures_window(const Ideal& I);
Window signatures_window(const ExtData& saturated);

CohomologySignature sheaf_cohomology_table(const Ideal& I, std::optional<Window> window = {});

/// FNV-1a hash (hex) of a text.
std::string fnv1a_hex(const std::string& text);

}  // namespace fibfull
