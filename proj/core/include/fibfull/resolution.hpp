#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fibfull/groebner.hpp"
#include "fibfull/hilbert.hpp"
#include "fibfull/matrix.hpp"
#include "fibfull/poly.hpp"

namespace fibfull {

using PolyMatrix = Matrix<Poly>;

/// Graded free module sum_j S(-degrees[j]).
struct GradedFreeModule {
  std::vector<long> degrees;
  std::size_t rank() const { return degrees.size(); }
  friend bool operator==(const GradedFreeModule&, const GradedFreeModule&) = default;
};

/// Graded free resolution F_0 <- F_1 <- ... <- F_L of S/I with F_0 = S.
///
/// maps[i-1] is d_i : F_i -> F_{i-1}, a rank(F_{i-1}) x rank(F_i) matrix
/// whose column j is the image of the j-th basis vector. Degrees use the
/// grading weights (all 1 for S; x-degree with t of weight 0 for families).
struct FreeResolution {
  std::size_t nvars = 0;
  Field field = Field::rationals();
  std::vector<long> weights;
  std::vector<GradedFreeModule> modules;
  std::vector<PolyMatrix> maps;

  /// Largest i with F_i != 0; -1 when every module is zero.
  long length() const;
  /// Checks d_i * d_{i+1} = 0 exactly.
  bool is_complex() const;
  /// True when no differential has a nonzero constant entry.
  bool is_minimal() const;
};

struct ResolutionOptions {
  MonomialOrder order = MonomialOrder::grevlex();
  /// Per-variable degree; empty means all 1.
  std::vector<long> weights;
};

/// Schreyer resolution of S/I from the reduced Groebner basis.
FreeResolution free_resolution(const Ideal& I, const ResolutionOptions& opt = {});

/// Graded Betti numbers in the ideal convention: beta(i, j) is the number of
/// degree-j generators of F_{i+1}, so beta(0, .) lists the minimal
/// generators of I.
class BettiTable {
 public:
  BettiTable() = default;
  explicit BettiTable(const FreeResolution& minimal);

  long operator()(long i, long j) const;
  const std::map<std::pair<long, long>, long>& entries() const { return beta_; }
  bool empty() const { return beta_.empty(); }
  /// Rank of the last nonzero module (Cohen-Macaulay type for CM quotients).
  long last_rank() const;
  /// Projective dimension of S/I.
  long projective_dimension() const;
  /// Aligned text in the usual layout (columns i, rows j - i).
  std::string to_text() const;
  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<std::pair<long, long>, long> beta_;
  long pd_ = 0;
};

/// reg(S/I) = max{j - i : beta(i, j) != 0} - 1; 0 for an empty table.
long regularity(const BettiTable& b);

/// Cancels unit entries until every differential has entries in m.
std::pair<FreeResolution, BettiTable> minimize(const FreeResolution& res);

/// Bounded cochain complex K^lo -> K^{lo+1} -> ... of graded free modules.
/// maps[k] : terms[k] -> terms[k+1] is a rank(terms[k+1]) x rank(terms[k])
/// matrix.
struct FreeComplex {
  std::size_t nvars = 0;
  Field field = Field::rationals();
  std::vector<long> weights;
  long lo = 0;
  std::vector<GradedFreeModule> terms;
  std::vector<PolyMatrix> maps;

  long hi() const { return lo + static_cast<long>(terms.size()) - 1; }
  bool is_complex() const;
};

/// Hom(F_., S): K^i = sum_j S(d_j) for F_i = sum_j S(-d_j), with transposed
/// differentials.
FreeComplex dual_complex(const FreeResolution& res);
/// The resolution as a cochain complex with K^{-i} = F_i.
FreeComplex as_cochain(const FreeResolution& res);

/// dim_k K^i_nu for the term at offset k.
long strand_dimension(const FreeComplex& K, std::size_t k, long nu);
/// dim_k H^i(K)_nu for every position i = lo..hi, by rank-nullity on the
/// degree-nu strand. Requires all weights positive.
std::vector<long> complex_cohomology_dims(const FreeComplex& K, long nu);

/// Hilbert series of the cokernel C^i of K^{i-1} -> K^i, from a module
/// Groebner basis (position over term, grevlex).
HilbertSeries cokernel_series(const FreeComplex& K, std::size_t k);
/// Hilbert series of H^i(K) via h_{H^i} = h_{C^i} + h_{C^{i+1}} - h_{K^{i+1}}.
std::vector<HilbertSeries> complex_cohomology_series(const FreeComplex& K);

/// Strand of maps[k] in x-degree nu over k[t]: K has nx degree-carrying
/// variables followed by at most one parameter variable of weight 0.
/// Rows index the basis of terms[k+1]_nu, columns that of terms[k]_nu.
PolyTMatrix family_strand(const FreeComplex& K, std::size_t k, long nu, std::size_t nx);
/// Rank over k[t] basis count of terms[k]_nu for a family complex.
long family_strand_dimension(const FreeComplex& K, std::size_t k, long nu, std::size_t nx);

}  // namespace fibfull
