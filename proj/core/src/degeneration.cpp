#include "fibfull/degeneration.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "fibfull/error.hpp"
#include "fibfull/matrix.hpp"
#include "fibfull/resolution.hpp"
#include "fibfull/strata.hpp"

namespace fibfull {

FamilyIdeal FamilyIdeal::from_generators(std::size_t nx, Field field, std::vector<Poly> gens) {
  FamilyIdeal F;
  F.nx = nx;
  for (const auto& g : gens) {
    if (g.nvars() != nx + 1) throw InputError("family generator has the wrong number of variables");
    if (!g.is_homogeneous_prefix(nx)) {
      throw InputError("family generator " + g.to_string(true) + " is not x-homogeneous");
    }
  }
  F.ideal = Ideal(nx + 1, std::move(field), std::move(gens));
  return F;
}

FamilyIdeal FamilyIdeal::constant(const Ideal& I) {
  std::vector<Poly> gens;
  for (const auto& g : I.generators()) gens.push_back(g.add_variable());
  FamilyIdeal F = from_generators(I.nvars(), I.field(), std::move(gens));
  F.source = I;
  return F;
}

bool weight_realizes(const Ideal& I, const MonomialOrder& order, const WeightVector& w) {
  if (w.size() != I.nvars()) return false;
  for (const auto& g : I.groebner(order)) {
    Monomial lead = g.leading(order).mon;
    long top = weight_degree(w, lead);
    for (const auto& t : g.terms()) {
      if (t.mon == lead) continue;
      if (weight_degree(w, t.mon) >= top) return false;
    }
  }
  return true;
}

namespace {

// a . w >= b
using Constraint = std::pair<std::vector<mpq_class>, mpq_class>;
using System = std::map<std::vector<mpq_class>, mpq_class>;

void add_constraint(System& sys, std::vector<mpq_class> a, mpq_class b) {
  mpq_class scale = 0;
  for (const auto& x : a) scale = std::max(scale, mpq_class(abs(x)));
  if (scale == 0) {
    if (b > 0) throw InternalError("weight realization system is infeasible");
    return;
  }
  for (auto& x : a) x /= scale;
  b /= scale;
  auto [it, fresh] = sys.emplace(std::move(a), b);
  if (!fresh && it->second < b) it->second = b;
}

System eliminate_last(const System& sys, std::size_t k) {
  std::vector<Constraint> lower, upper;
  System out;
  for (const auto& [a, b] : sys) {
    int s = sgn(a[k]);
    if (s > 0) lower.emplace_back(a, b);
    else if (s < 0) upper.emplace_back(a, b);
    else add_constraint(out, a, b);
  }
  for (const auto& [al, bl] : lower) {
    for (const auto& [au, bu] : upper) {
      mpq_class fl = -au[k], fu = al[k];
      std::vector<mpq_class> a(al.size());
      for (std::size_t j = 0; j < a.size(); ++j) a[j] = fl * al[j] + fu * au[j];
      a[k] = 0;
      add_constraint(out, std::move(a), fl * bl + fu * bu);
    }
  }
  return out;
}

}  // namespace

WeightVector realize_weight(const Ideal& I, const MonomialOrder& order) {
  const std::size_t n = I.nvars();
  System sys;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<mpq_class> a(n, 0);
    a[i] = 1;
    add_constraint(sys, std::move(a), 1);
  }
  for (const auto& g : I.groebner(order)) {
    Monomial lead = g.leading(order).mon;
    for (const auto& t : g.terms()) {
      if (t.mon == lead) continue;
      std::vector<mpq_class> a(n);
      for (std::size_t i = 0; i < n; ++i) a[i] = mpq_class(static_cast<long>(lead[i])) - static_cast<long>(t.mon[i]);
      add_constraint(sys, std::move(a), 1);
    }
  }
  // stages[k] involves w_0..w_k only.
  std::vector<System> stages(n);
  stages[n - 1] = sys;
  for (std::size_t k = n - 1; k > 0; --k) stages[k - 1] = eliminate_last(stages[k], k);

  std::vector<mpq_class> w(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    mpq_class lo = 1;
    std::optional<mpq_class> hi;
    for (const auto& [a, b] : stages[k]) {
      mpq_class rest = b;
      for (std::size_t j = 0; j < k; ++j) rest -= a[j] * w[j];
      if (a[k] > 0) lo = std::max(lo, mpq_class(rest / a[k]));
      else if (a[k] < 0) hi = hi ? std::min(*hi, mpq_class(rest / a[k])) : mpq_class(rest / a[k]);
      else if (rest > 0) throw InternalError("weight realization back-substitution failed");
    }
    if (hi && *hi < lo) throw InternalError("weight realization back-substitution failed");
    w[k] = lo;
  }
  mpz_class den = 1;
  for (const auto& x : w) den = lcm(den, mpz_class(x.get_den()));
  std::vector<mpz_class> wi(n);
  mpz_class g = 0;
  for (std::size_t i = 0; i < n; ++i) {
    wi[i] = mpz_class(w[i] * den);
    g = gcd(g, wi[i]);
  }
  std::vector<long> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class v = wi[i] / g;
    if (!v.fits_slong_p()) throw InternalError("weight vector entries overflow");
    out[i] = v.get_si();
  }
  WeightVector omega(std::move(out));
  if (!weight_realizes(I, order, omega)) throw InternalError("computed weight does not realize the order");
  FamilyIdeal F = homogenize_ideal(I, omega);
  if (!(initial_ideal(specialize(F, I.field().from_int(0)), MonomialOrder::grevlex()) == initial_ideal(I, order))) {
    throw InternalError("special fiber of the homogenization differs from the initial ideal");
  }
  return omega;
}

FamilyIdeal homogenize_ideal(const Ideal& I, const WeightVector& w) {
  if (!I.is_homogeneous()) throw InputError("homogenization requires a homogeneous ideal");
  if (w.size() != I.nvars()) throw InputError("weight vector length differs from the number of variables");
  std::vector<Poly> gens;
  for (const auto& g : I.groebner(MonomialOrder::weight(w))) gens.push_back(omega_homogenize(w, g));
  FamilyIdeal F = FamilyIdeal::from_generators(I.nvars(), I.field(), std::move(gens));
  F.source = I;
  F.omega = w;
  F.order = MonomialOrder::weight(w).name();
  return F;
}

FamilyIdeal homogenize_ideal(const Ideal& I, const MonomialOrder& order) {
  FamilyIdeal F = homogenize_ideal(I, realize_weight(I, order));
  F.order = order.name();
  return F;
}

Ideal specialize(const FamilyIdeal& F, const Scalar& alpha) {
  Scalar a = F.ideal.field().coerce(alpha);
  std::vector<Poly> gens;
  for (const auto& g : F.ideal.generators()) gens.push_back(g.drop_last(a));
  return Ideal(F.nx, F.ideal.field(), std::move(gens));
}

ConcaVarbaroReport verify_conca_varbaro(const Ideal& I, const MonomialOrder& order, std::optional<Window> window) {
  if (!I.is_homogeneous()) throw InputError("Conca-Varbaro check requires a homogeneous ideal");
  ConcaVarbaroReport rep;
  rep.initial = initial_ideal(I, order);
  rep.squarefree = rep.initial.is_squarefree();
  Ideal in = Ideal::from_monomials(rep.initial, I.field());
  ExtData e_i = compute_ext_data(I);
  ExtData e_in = compute_ext_data(in);
  Window w;
  if (window) {
    w = *window;
  } else {
    Window a = signatures_window(e_i), b = signatures_window(e_in);
    w = {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
  }
  w.validate();
  rep.ideal_table = local_cohomology_table(e_i, w);
  rep.initial_table = local_cohomology_table(e_in, w);
  rep.tables_equal = rep.ideal_table.dims == rep.initial_table.dims &&
                     rep.ideal_table.tails == rep.initial_table.tails;
  bool sat_i = same_ideal(saturate_irrelevant(I), I);
  bool sat_in = same_ideal(saturate_irrelevant(in), in);
  if (sat_i && sat_in) {
    rep.sheaf_equal = same_stratum(sheaf_cohomology_table(I, w), sheaf_cohomology_table(in, w));
  }
  return rep;
}

namespace {

struct Presentation {
  std::size_t rows = 0;
  PolyTMatrix m;
};

Presentation present(const FamilyIdeal& F, long nu) {
  Presentation p;
  if (nu < 0) return p;
  auto basis = monomials_of_degree(F.nx, nu);
  p.rows = basis.size();
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  std::vector<std::vector<UniPoly>> cols;
  for (const auto& g : F.ideal.generators()) {
    long d = g.degree_prefix(F.nx);
    if (d > nu) continue;
    for (const auto& m : monomials_of_degree(F.nx, nu - d)) {
      std::vector<UniPoly> col(p.rows);
      for (const auto& t : g.terms()) {
        Monomial x(F.nx);
        for (std::size_t k = 0; k < F.nx; ++k) x.set(k, t.mon[k] + m[k]);
        col[index.at(x)] += UniPoly::t_power(t.mon[F.nx], t.coef);
      }
      cols.push_back(std::move(col));
    }
  }
  p.m = PolyTMatrix(p.rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < p.rows; ++r) p.m(r, c) = cols[c][r];
  return p;
}

bool shares_root(const UniPoly& p, const UniPoly& d) { return !uni_gcd(p, d).is_constant(); }

}  // namespace

long fiber_rank(const FamilyIdeal& F, long nu, const Scalar& alpha) {
  Presentation p = present(F, nu);
  if (p.rows == 0) return 0;
  return static_cast<long>(p.rows) -
         static_cast<long>(specialized_rank(p.m, F.ideal.field().coerce(alpha)));
}

StratumReport fitting_stratify(const FamilyIdeal& F, Window window) {
  window.validate();
  StratumReport rep;
  rep.window = window;
  std::map<long, std::size_t> rows;
  std::vector<UniPoly> bad;
  for (long nu = window.lo; nu <= window.hi; ++nu) {
    Presentation p = present(F, nu);
    rows[nu] = p.rows;
    std::vector<UniPoly> inv;
    if (p.rows > 0 && p.m.cols() > 0) inv = smith_normal_form(p.m).invariant_factors;
    for (const auto& d : inv) {
      if (!d.is_constant()) bad.push_back(d);
    }
    rep.generic_rank[nu] = static_cast<long>(p.rows) - static_cast<long>(inv.size());
    rep.invariant_factors[nu] = std::move(inv);
  }
  rep.flat = bad.empty();

  UniPoly one(F.ideal.field().from_int(1));
  std::vector<Stratum> closed;
  UniPoly excluded = one;
  for (const auto& p : gcd_free_basis(bad)) {
    excluded = excluded * p;
    std::map<long, long> h;
    for (long nu = window.lo; nu <= window.hi; ++nu) {
      long drop = 0;
      for (const auto& d : rep.invariant_factors[nu]) drop += shares_root(p, d) ? 1 : 0;
      h[nu] = rep.generic_rank[nu] + drop;
    }
    auto same = std::find_if(closed.begin(), closed.end(), [&](const Stratum& s) { return s.h == h; });
    if (same != closed.end()) {
      same->locus = same->locus * p;
    } else {
      closed.push_back(Stratum{false, p, {}, std::move(h)});
    }
  }
  std::sort(closed.begin(), closed.end(), [](const Stratum& a, const Stratum& b) {
    if (a.locus.degree() != b.locus.degree()) return a.locus.degree() < b.locus.degree();
    return a.locus.to_string() < b.locus.to_string();
  });
  rep.strata = std::move(closed);
  rep.strata.push_back(Stratum{true, {}, excluded, rep.generic_rank});
  return rep;
}

bool FiberFullReport::fiber_full() const {
  return flat && std::all_of(free_at_q.begin(), free_at_q.end(), [](bool b) { return b; });
}

Window family_window(const FamilyIdeal& F) {
  const Field& k = F.ideal.field();
  Window a = signatures_window(specialize(F, k.from_int(0)));
  Window b = signatures_window(specialize(F, k.from_int(1)));
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

namespace {

PolyTMatrix identity_t(std::size_t n, const Field& k) {
  PolyTMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = UniPoly(k.from_int(1));
  return m;
}

HowellForm times_t(const HowellForm& h, const Field& k) {
  const UniPoly t = UniPoly::t_power(1, k.from_int(1));
  PolyTMatrix m = h.rows;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = t * m(r, c);
  return howell_reduce(m, h.q);
}

}  // namespace

FiberFullReport fiber_full_family_check(const FamilyIdeal& F, long q_max, std::optional<Window> window) {
  if (q_max < 1) throw InputError("q must be at least 1");
  FiberFullReport rep;
  rep.q_max = q_max;
  rep.window = window ? *window : family_window(F);
  rep.window.validate();
  long top = std::max(rep.window.hi, 0L);
  for (const auto& g : F.ideal.generators()) top = std::max(top, g.degree_prefix(F.nx) + 1);
  rep.flat = fitting_stratify(F, Window{0, top}).flat;
  rep.free_at_q.assign(static_cast<std::size_t>(q_max), false);
  if (!rep.flat) return rep;

  const std::size_t nv = F.nx + 1;
  ResolutionOptions opt;
  opt.order = MonomialOrder::grevlex();
  opt.weights.assign(nv, 1);
  opt.weights[F.nx] = 0;
  FreeResolution res = free_resolution(F.ideal, opt);
  if (!res.is_complex()) throw InternalError("family resolution differentials do not compose to zero");
  FreeComplex K = dual_complex(res);
  const long n = static_cast<long>(F.nx);

  for (long q = 1; q <= q_max; ++q) {
    bool ok = true;
    for (std::size_t k = 0; k < K.terms.size(); ++k) {
      for (long mu = -rep.window.hi - n; mu <= -rep.window.lo - n; ++mu) {
        auto N = static_cast<std::size_t>(family_strand_dimension(K, k, mu, F.nx));
        if (N == 0) continue;
        HowellForm Z = k < K.maps.size() ? howell_kernel(family_strand(K, k, mu, F.nx), q)
                                         : howell_reduce(identity_t(N, F.ideal.field()), q);
        HowellForm Im;
        Im.q = q;
        Im.rows = PolyTMatrix(0, N);
        if (k >= 1) Im = howell_reduce(family_strand(K, k - 1, mu, F.nx).transposed(), q);
        long lz = Z.length(), li = Im.length();
        long lmin = howell_sum(times_t(Z, F.ideal.field()), Im).length();
        if (lz - li != q * (lz - lmin)) {
          ok = false;
          rep.obstructions.push_back({q, static_cast<std::size_t>(K.lo) + k, mu});
        }
      }
    }
    rep.free_at_q[static_cast<std::size_t>(q - 1)] = ok;
  }
  return rep;
}

}  // namespace fibfull
