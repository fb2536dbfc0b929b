#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fibfull/cohomology.hpp"
#include "fibfull/groebner.hpp"
#include "fibfull/order.hpp"
#include "fibfull/unipoly.hpp"

namespace fibfull {

/// Ideal of k[t][x_0..x_{nx-1}], stored in nx + 1 variables with t last.
struct FamilyIdeal {
  std::size_t nx = 0;
  Ideal ideal;
  /// Set when built by homogenization.
  std::optional<Ideal> source;
  std::optional<WeightVector> omega;
  std::string order;

  /// Throws InputError unless every generator is x-homogeneous.
  static FamilyIdeal from_generators(std::size_t nx, Field field, std::vector<Poly> gens);
  /// I x k[t].
  static FamilyIdeal constant(const Ideal& I);
};

/// Checks mu(LT(g)).w > mu(m).w for every non-lead monomial m of every
/// reduced Groebner basis element g.
bool weight_realizes(const Ideal& I, const MonomialOrder& order, const WeightVector& w);

/// Integral positive weight with in_w(I) = in_>(I), by Fourier-Motzkin on the
/// lead-versus-tail inequalities. Post-verified on the t = 0 fiber of the
/// homogenization.
WeightVector realize_weight(const Ideal& I, const MonomialOrder& order);

/// hom_w over the reduced Groebner basis for the weight order w.
FamilyIdeal homogenize_ideal(const Ideal& I, const WeightVector& w);
/// realize_weight followed by homogenize_ideal; records the order.
FamilyIdeal homogenize_ideal(const Ideal& I, const MonomialOrder& order);

/// Fiber at t = alpha.
Ideal specialize(const FamilyIdeal& F, const Scalar& alpha);

struct ConcaVarbaroReport {
  MonomialIdeal initial;
  bool squarefree = false;
  bool tables_equal = false;
  LocalCohTable ideal_table, initial_table;
  /// Sheaf-level comparison, present when both I and in(I) are saturated.
  std::optional<bool> sheaf_equal;
  /// squarefree with unequal tables.
  bool falsified() const { return squarefree && !tables_equal; }
};

/// Compares the local cohomology of S/I and S/in_>(I) on a window (default:
/// the larger of the two signature windows).
ConcaVarbaroReport verify_conca_varbaro(const Ideal& I, const MonomialOrder& order,
                                        std::optional<Window> window = {});

/// One stratum of the t-line: the zero set of a monic squarefree polynomial,
/// or the generic stratum (complement of `excluded`).
struct Stratum {
  bool generic = false;
  UniPoly locus;  // closed strata
  UniPoly excluded;  // generic stratum
  std::map<long, long> h;
};

struct StratumReport {
  Window window;
  std::vector<Stratum> strata;  // closed strata first, generic last
  /// Nonzero invariant factors of the presentation of [R/F]_nu.
  std::map<long, std::vector<UniPoly>> invariant_factors;
  std::map<long, long> generic_rank;
  /// Every invariant factor is a unit on the window.
  bool flat = true;
};

/// Presents [R/F]_nu over k[t] by the monomial multiples of the generators,
/// reduces to Smith form and stratifies by the vanishing of invariant factors.
StratumReport fitting_stratify(const FamilyIdeal& F, Window window);

/// rank over k of [R/F]_nu specialized at t = alpha.
long fiber_rank(const FamilyIdeal& F, long nu, const Scalar& alpha);

struct FiberFullObstruction {
  long q = 0;
  std::size_t i = 0;
  long mu = 0;
};

struct FiberFullReport {
  bool flat = false;
  long q_max = 0;
  Window window;  // sheaf degrees nu
  std::vector<bool> free_at_q;  // index q - 1
  std::vector<FiberFullObstruction> obstructions;
  bool fiber_full() const;
};

/// Default window for family checks: the larger of the signature windows of
/// the fibers at t = 0 and t = 1.
Window family_window(const FamilyIdeal& F);

/// For q = 1..q_max decides whether each Ext^i(R/F, R) (x) k[t]/(t^q) is free
/// over k[t]/(t^q) in the Ext degrees mirroring the window. Non-flat families
/// report flat = false and every q false.
FiberFullReport fiber_full_family_check(const FamilyIdeal& F, long q_max = 3,
                                        std::optional<Window> window = {});

}  // namespace fibfull
