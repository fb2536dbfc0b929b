#include "fibfull/strata.hpp"

#include <algorithm>

#include "fibfull/error.hpp"

namespace fibfull {

AcmReport acm_report(const Ideal& I) {
  if (!I.is_homogeneous()) throw InputError("ACM test requires a homogeneous ideal");
  Ideal J = saturate_irrelevant(I);
  if (J.is_unit()) throw InputError("the scheme is empty");
  ExtData e = compute_ext_data(J);
  const long n = static_cast<long>(J.nvars());
  AcmReport rep;
  rep.codim = n - e.quotient_series.dimension();
  rep.projective_dimension = e.betti.projective_dimension();
  for (std::size_t i = 0; i < e.ext_series.size(); ++i) {
    if (!e.ext_series[i].is_zero()) rep.nonzero_ext.push_back(static_cast<long>(i));
  }
  bool by_pd = rep.projective_dimension == rep.codim;
  bool by_ext = rep.nonzero_ext.size() == 1 && rep.nonzero_ext.front() == rep.codim;
  if (by_pd != by_ext) {
    throw InternalError("ACM routes disagree: pd = " + std::to_string(rep.projective_dimension) +
                        ", codim = " + std::to_string(rep.codim));
  }
  rep.acm = by_pd;
  rep.type = e.betti.last_rank();
  return rep;
}

bool is_acm(const Ideal& I) { return acm_report(I).acm; }

bool is_ag(const Ideal& I) {
  auto rep = acm_report(I);
  return rep.acm && rep.type == 1;
}

StratumClass classify(const Ideal& I, std::optional<Window> window) {
  StratumClass c;
  c.signature = sheaf_cohomology_table(I, window);
  auto rep = acm_report(I);
  c.acm = rep.acm;
  c.ag = rep.acm && rep.type == 1;
  return c;
}

namespace {

constexpr long kSearchSteps = 512;

std::optional<long> tail_divergence(const CohomologySignature& a, const CohomologySignature& b,
                                    std::size_t i, long below) {
  if (a.tails[i] == b.tails[i]) {
    // Equal tails; only the stretch between the windows and the tail ranges can differ.
    long until = std::min(a.tail_until[i], b.tail_until[i]);
    for (long nu = below; nu > until && nu > below - kSearchSteps; --nu) {
      if (a.value(i, nu) != b.value(i, nu)) return nu;
    }
    return std::nullopt;
  }
  for (long nu = below; nu > below - kSearchSteps; --nu) {
    if (a.value(i, nu) != b.value(i, nu)) return nu;
  }
  return below;
}

}  // namespace

StratumComparison compare_signatures(const CohomologySignature& a, const CohomologySignature& b) {
  if (a.r != b.r) throw InputError("signatures live in projective spaces of different dimension");
  Window w{std::max(a.window.lo, b.window.lo), std::min(a.window.hi, b.window.hi)};
  if (w.lo > w.hi) throw InputError("signature windows are disjoint");
  StratumComparison out;
  for (std::size_t i = 0; i <= static_cast<std::size_t>(a.r); ++i) {
    std::optional<long> hit;
    // Above the common window both tables are in their window or Serre regime.
    long top = std::max(a.window.hi, b.window.hi);
    if (!(a.P_h == b.P_h) && i == 0) top += kSearchSteps;
    for (long nu = top; nu >= w.lo && !hit; --nu) {
      if (a.value(i, nu) != b.value(i, nu)) hit = nu;
    }
    if (!hit) hit = tail_divergence(a, b, i, w.lo - 1);
    if (hit) {
      out.same = false;
      out.first = Divergence{i, *hit};
      return out;
    }
  }
  return out;
}

bool same_stratum(const CohomologySignature& a, const CohomologySignature& b) {
  return compare_signatures(a, b).same;
}

LexIdealData lex_ideal(const IntegerPartition& lambda, long r, Field field) {
  if (r < 1) throw InputError("lex ideal needs r >= 1");
  if (static_cast<std::size_t>(r + 1) > Monomial::kMaxVariables) throw InputError("too many variables");
  LexIdealData d{lambda, r, {}, Ideal::zero(static_cast<std::size_t>(r + 1), field)};
  const auto n = static_cast<std::size_t>(r + 1);
  if (lambda.parts().size() == 1 && lambda.largest() == r + 1) return d;
  if (lambda.largest() > r) {
    throw InputError("partition " + lambda.to_string() + " has a part larger than r = " + std::to_string(r));
  }
  d.a = lambda.multiplicities(r);
  auto a = [&](long j) { return static_cast<std::uint32_t>(d.a[static_cast<std::size_t>(j - 1)]); };
  std::vector<Monomial> gens;
  Monomial prefix(n);
  for (long k = 0; k <= r - 1; ++k) {
    Monomial g = prefix;
    auto kk = static_cast<std::size_t>(k);
    if (k <= r - 2) {
      g.set(kk, a(r - k) + 1);
      prefix.set(kk, a(r - k));
    } else {
      g.set(kk, a(1));
    }
    gens.push_back(g);
  }
  d.ideal = Ideal::from_monomials(MonomialIdeal(n, std::move(gens)), field);
  return d;
}

mpz_class lex_cohomology_closed_form(const IntegerPartition& lambda, long r, std::size_t i, long nu) {
  if (static_cast<long>(i) >= r) return 0;
  auto a = lambda.multiplicities(r);
  auto A = [&](long k) {
    long s = 0;
    for (long j = k; j <= r; ++j) s += a[static_cast<std::size_t>(j - 1)];
    return s;
  };
  auto C = [](long x, long k) { return binom_count(mpz_class(x), k); };
  const long li = static_cast<long>(i);
  if (i > 0) return C(A(li + 1) - nu - 1, li + 1) - C(A(li + 2) - nu - 1, li + 1);
  mpz_class s = 0;
  const auto& parts = lambda.parts();
  for (std::size_t k = 0; k < parts.size(); ++k) {
    long idx = static_cast<long>(k) + 1;
    long low = nu - idx + 1;
    if (low < 0) continue;
    s += C(nu + parts[k] - idx, low);
  }
  return s + C(A(1) - nu - 1, 1) - C(A(2) - nu - 1, 1);
}

DetachResult detach(const Ideal& I) {
  if (!I.is_homogeneous()) throw InputError("detach requires a homogeneous ideal");
  const auto& gens = I.groebner(MonomialOrder::grevlex());
  if (gens.empty()) throw InputError("cannot detach a factor from the zero ideal");
  Poly f = gens.front();
  for (std::size_t k = 1; k < gens.size(); ++k) f = poly_gcd(f, gens[k], I.field());
  f = f.monic(MonomialOrder::grevlex());
  std::vector<Poly> rest;
  for (const auto& g : gens) rest.push_back(exact_divide(g, f));
  return {f, Ideal(I.nvars(), I.field(), std::move(rest)), f.degree()};
}

void check_detach(const Ideal& I, const DetachResult& d, Window window) {
  window.validate();
  const long r = static_cast<long>(I.nvars()) - 1;
  if (r < 2) throw InputError("detach relation needs r >= 2");
  auto big = sheaf_cohomology_table(I, window);
  auto small = sheaf_cohomology_table(d.rest, Window{window.lo - d.degree, window.hi - d.degree});
  for (long nu = window.lo; nu <= window.hi; ++nu) {
    for (long i = 1; i <= r - 2; ++i) {
      auto ii = static_cast<std::size_t>(i);
      if (big.at(ii, nu) != small.at(ii, nu - d.degree)) {
        throw InternalError("detach shift fails for h_" + std::to_string(i) + " at nu = " + std::to_string(nu));
      }
    }
    mpz_class expect = binom_count(mpz_class(d.degree - nu - 1), r) - binom_count(mpz_class(-nu - 1), r);
    if (big.at(static_cast<std::size_t>(r - 1), nu) != expect) {
      throw InternalError("detach formula fails for h_" + std::to_string(r - 1) + " at nu = " +
                          std::to_string(nu));
    }
  }
}

}  // namespace fibfull
