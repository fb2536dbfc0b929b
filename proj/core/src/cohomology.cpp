#include "fibfull/cohomology.hpp"

#include <algorithm>
#include <cstdio>

#include "fibfull/error.hpp"

namespace fibfull {

void Window::validate() const {
  if (lo > hi) {
    throw InputError("window lower bound " + std::to_string(lo) + " exceeds upper bound " +
                     std::to_string(hi));
  }
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ExtData compute_ext_data(const Ideal& I) {
  if (!I.is_homogeneous()) throw InputError("cohomology requires a homogeneous ideal");
  ExtData e;
  e.ideal = I;
  auto [minimal, betti] = minimize(free_resolution(I));
  e.minimal = std::move(minimal);
  e.betti = std::move(betti);
  if (!e.minimal.is_complex()) throw InternalError("resolution differentials do not compose to zero");
  e.dual = dual_complex(e.minimal);
  const std::size_t n = I.nvars();
  e.ext_series.assign(n + 1, HilbertSeries::zero(n));
  if (!e.dual.terms.empty() && e.dual.terms[0].rank() > 0) {
    auto series = complex_cohomology_series(e.dual);
    if (series.size() > n + 1) throw InternalError("Ext beyond the number of variables");
    for (std::size_t i = 0; i < series.size(); ++i) e.ext_series[i] = series[i];
  }
  e.quotient_series = hilbert_series(I);
  return e;
}

namespace {

std::vector<long> strand_ext(const ExtData& e, long mu) {
  const std::size_t n = e.ideal.nvars();
  std::vector<long> out(n + 1, 0);
  if (e.dual.terms.empty() || e.dual.terms[0].rank() == 0) return out;
  auto dims = complex_cohomology_dims(e.dual, mu);
  for (std::size_t i = 0; i < dims.size(); ++i) {
    long hs = e.ext_series[i].value(mu).get_si();
    if (dims[i] != hs) {
      throw InternalError("Ext^" + std::to_string(i) + " in degree " + std::to_string(mu) +
                          ": strand gives " + std::to_string(dims[i]) + ", Hilbert series gives " +
                          std::to_string(hs));
    }
    out[i] = dims[i];
  }
  return out;
}

}  // namespace

ExtTable ext_dimensions(const ExtData& e, Window w) {
  w.validate();
  ExtTable t;
  t.n = e.ideal.nvars();
  t.window = w;
  t.dims.assign(t.n + 1, std::vector<long>(static_cast<std::size_t>(w.size()), 0));
  for (long mu = w.lo; mu <= w.hi; ++mu) {
    auto d = strand_ext(e, mu);
    for (std::size_t i = 0; i <= t.n; ++i) t.dims[i][static_cast<std::size_t>(mu - w.lo)] = d[i];
  }
  for (std::size_t i = 0; i <= t.n; ++i) {
    t.tails.push_back(e.ext_series[i].polynomial());
    // A zero module is polynomial (zero) in every degree.
    t.stable_from.push_back(e.ext_series[i].is_zero() ? -(1L << 40) : e.ext_series[i].stable_from());
  }
  return t;
}

ExtTable ext_dimensions(const Ideal& I, Window w) { return ext_dimensions(compute_ext_data(I), w); }

LocalCohTable flip_to_local(const ExtTable& ext) {
  const long n = static_cast<long>(ext.n);
  LocalCohTable loc;
  loc.n = ext.n;
  loc.window = {-ext.window.hi - n, -ext.window.lo - n};
  loc.dims.assign(ext.n + 1, std::vector<long>(static_cast<std::size_t>(loc.window.size()), 0));
  for (std::size_t j = 0; j <= ext.n; ++j) {
    for (long nu = loc.window.lo; nu <= loc.window.hi; ++nu) {
      loc.dims[j][static_cast<std::size_t>(nu - loc.window.lo)] = ext.at(ext.n - j, -nu - n);
    }
    loc.tails.push_back(ext.tails[ext.n - j].composed(-1, -n));
    loc.tail_until.push_back(-ext.stable_from[ext.n - j] - n);
  }
  return loc;
}

ExtTable flip_to_ext(const LocalCohTable& loc) {
  const long n = static_cast<long>(loc.n);
  ExtTable ext;
  ext.n = loc.n;
  ext.window = {-loc.window.hi - n, -loc.window.lo - n};
  ext.dims.assign(loc.n + 1, std::vector<long>(static_cast<std::size_t>(ext.window.size()), 0));
  for (std::size_t i = 0; i <= loc.n; ++i) {
    for (long mu = ext.window.lo; mu <= ext.window.hi; ++mu) {
      ext.dims[i][static_cast<std::size_t>(mu - ext.window.lo)] = loc.at(loc.n - i, -mu - n);
    }
    ext.tails.push_back(loc.tails[loc.n - i].composed(-1, -n));
    ext.stable_from.push_back(-loc.tail_until[loc.n - i] - n);
  }
  return ext;
}

LocalCohTable local_cohomology_table(const ExtData& e, Window w) {
  w.validate();
  const long n = static_cast<long>(e.ideal.nvars());
  return flip_to_local(ext_dimensions(e, {-w.hi - n, -w.lo - n}));
}

LocalCohTable local_cohomology_table(const Ideal& I, Window w) {
  return local_cohomology_table(compute_ext_data(I), w);
}

Window signatures_window(const ExtData& e) {
  const long n = static_cast<long>(e.ideal.nvars());
  long reg = regularity(e.betti);
  long w = reg + n + 2;
  Window out{-w, w};
  for (const auto& s : e.ext_series) {
    if (s.is_zero()) continue;
    out.lo = std::min(out.lo, -s.stable_from() - n - 1);
  }
  out.hi = std::max(out.hi, e.quotient_series.stable_from() + 1);
  return out;
}

Window signatures_window(const Ideal& I) {
  return signatures_window(compute_ext_data(saturate_irrelevant(I)));
}

mpz_class CohomologySignature::value(std::size_t i, long nu) const {
  if (window.contains(nu)) return at(i, nu);
  if (nu < window.lo) return tails[i](nu);
  return i == 0 ? P_h(nu) : mpz_class(0);
}

CohomologySignature sheaf_cohomology_table(const Ideal& I, std::optional<Window> window) {
  if (!I.is_homogeneous()) throw InputError("cohomology tables require a homogeneous ideal");
  if (I.nvars() < 1) throw InputError("the ambient ring needs at least one variable");
  Ideal J = saturate_irrelevant(I);
  ExtData e = compute_ext_data(J);
  const std::size_t n = I.nvars();
  const long ln = static_cast<long>(n);

  CohomologySignature sig;
  sig.r = ln - 1;
  bool default_window = !window.has_value();
  sig.window = window ? *window : signatures_window(e);
  sig.window.validate();
  sig.field = I.field().name();
  sig.hash = fnv1a_hex(I.field().name() + "|" + I.canonical_text());
  sig.P_h = e.quotient_series.polynomial();

  LocalCohTable loc = local_cohomology_table(e, sig.window);
  HilbertSeries raw = hilbert_series(I);
  const std::size_t r = n - 1;
  sig.h.assign(r + 1, std::vector<mpz_class>(static_cast<std::size_t>(sig.window.size()), 0));
  for (long nu = sig.window.lo; nu <= sig.window.hi; ++nu) {
    auto k = static_cast<std::size_t>(nu - sig.window.lo);
    if (loc.at(0, nu) != 0) throw InternalError("saturated ideal has nonzero H^0_m");
    sig.h[0][k] = e.quotient_series.value(nu) + (n >= 2 ? loc.at(1, nu) : 0);
    for (std::size_t i = 1; i <= r; ++i) sig.h[i][k] = loc.at(i + 1, nu);
    sig.hilbert_raw.push_back(raw.value(nu));
  }
  for (std::size_t i = 0; i <= r; ++i) {
    sig.tails.push_back(loc.tails[i + 1]);
    // h_0 also carries [S/J]_nu, which vanishes only for nu < 0.
    sig.tail_until.push_back(i == 0 ? std::min(loc.tail_until[1], -1L) : loc.tail_until[i + 1]);
  }

  // Euler characteristic: on the window and for the tails.
  for (long nu = sig.window.lo; nu <= sig.window.hi; ++nu) {
    mpz_class chi = 0;
    for (std::size_t i = 0; i <= r; ++i) chi += (i % 2 == 0 ? 1 : -1) * sig.at(i, nu);
    if (chi != sig.P_h(nu)) {
      throw InternalError("Euler identity fails at nu = " + std::to_string(nu));
    }
  }
  NumericalPolynomial tail_chi;
  for (std::size_t i = 0; i <= r; ++i) tail_chi = i % 2 == 0 ? tail_chi + sig.tails[i] : tail_chi - sig.tails[i];
  if (!(tail_chi == sig.P_h)) throw InternalError("alternating sum of tails differs from the Hilbert polynomial");

  if (default_window) {
    for (std::size_t i = 0; i <= r; ++i) {
      for (long nu = sig.window.lo; nu <= sig.window.lo + 1; ++nu) {
        if (nu > sig.tail_until[i] || sig.tails[i](nu) != sig.at(i, nu)) {
          throw InternalError("cohomology table has not reached its tail at the window edge");
        }
      }
    }
  }
  return sig;
}

}  // namespace fibfull
