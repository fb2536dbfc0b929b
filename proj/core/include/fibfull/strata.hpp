#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fibfull/cohomology.hpp"
#include "fibfull/hilbert.hpp"

namespace fibfull {

/// Both routes to arithmetic Cohen-Macaulayness of S/I^sat.
struct AcmReport {
  bool acm = false;
  long codim = 0;
  long projective_dimension = 0;
  /// Indices i with Ext^i(S/I^sat, S) != 0.
  std::vector<long> nonzero_ext;
  long type = 0;  // last minimal Betti number
};

/// Computes both the Auslander-Buchsbaum test (pd = codim) and the Ext test
/// (a single nonzero Ext); disagreement raises InternalError. The empty
/// scheme is rejected with InputError.
AcmReport acm_report(const Ideal& I);
bool is_acm(const Ideal& I);
/// ACM and Cohen-Macaulay type 1.
bool is_ag(const Ideal& I);

struct StratumClass {
  CohomologySignature signature;
  bool acm = false;
  bool ag = false;
};
StratumClass classify(const Ideal& I, std::optional<Window> window = {});

struct Divergence {
  std::size_t i = 0;
  long nu = 0;
};

/// Result of comparing two signatures: equal windows values and tails, or
/// the first divergence (smallest i, then largest nu).
struct StratumComparison {
  bool same = true;
  std::optional<Divergence> first;
};

/// Throws InputError for different r or disjoint windows.
StratumComparison compare_signatures(const CohomologySignature& a, const CohomologySignature& b);
bool same_stratum(const CohomologySignature& a, const CohomologySignature& b);

struct LexIdealData {
  IntegerPartition lambda;
  long r = 0;
  std::vector<long> a;  // a_1..a_r
  Ideal ideal;
};

/// L(lambda) in k[x_0..x_r]. lambda = (r+1) gives the zero ideal; otherwise
/// r >= lambda_1 is required.
LexIdealData lex_ideal(const IntegerPartition& lambda, long r, Field field = Field::rationals());

/// Closed-form h_i(nu) of V(L(lambda)) for 0 <= i <= r (h_r = 0).
mpz_class lex_cohomology_closed_form(const IntegerPartition& lambda, long r, std::size_t i, long nu);

struct DetachResult {
  Poly f;
  Ideal rest;
  long degree = 0;
};

/// I = f * I' with f the gcd of the generators.
DetachResult detach(const Ideal& I);

/// Checks the cohomology relation between V(I) and V(I') on a window:
/// h_i(V(I))(nu) = h_i(V(I'))(nu - deg f) for 1 <= i <= r - 2, and
/// h_{r-1}(V(I))(nu) = C(deg f - nu - 1, r) - C(-nu - 1, r). Raises
/// InternalError on failure.
void check_detach(const Ideal& I, const DetachResult& d, Window window);

}  // namespace fibfull
