#include "fibfull/resolution.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "fibfull/error.hpp"
#include "fibfull/gb.hpp"

namespace fibfull {

namespace {

long weighted(const Monomial& m, const std::vector<long>& w) { return m.weighted_degree(w); }

// Basis data of one free module in the Schreyer tower.
struct Level {
  std::vector<Monomial> total;                    // m_a * total(comp_a) down to S
  std::vector<std::vector<std::uint32_t>> chain;  // indices from F_1 up to this level
  std::vector<long> degree;
};

ModuleOrder schreyer_order(const Level& lv, const MonomialOrder& base) {
  return ModuleOrder([&lv, base](const Monomial& a, std::uint32_t ca, const Monomial& b,
                                 std::uint32_t cb) {
    auto c = base.compare(a * lv.total[ca], b * lv.total[cb]);
    if (c != 0) return c;
    const auto& x = lv.chain[ca];
    const auto& y = lv.chain[cb];
    for (std::size_t k = 0; k < x.size() && k < y.size(); ++k) {
      if (x[k] != y[k]) return y[k] <=> x[k];
    }
    return std::strong_ordering::equal;
  });
}

// Sorts basis elements so that within a component the leading monomials
// are lex-descending; this bounds the resolution length by n.
void schreyer_sort(std::vector<ModVec>& v) {
  const MonomialOrder lex = MonomialOrder::lex();
  std::stable_sort(v.begin(), v.end(), [&](const ModVec& a, const ModVec& b) {
    if (a[0].comp != b[0].comp) return a[0].comp < b[0].comp;
    return lex.compare(a[0].mon, b[0].mon) > 0;
  });
}

PolyMatrix columns_to_matrix(const std::vector<ModVec>& cols, std::size_t rows, std::size_t nvars) {
  PolyMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    std::vector<std::vector<Term>> per_row(rows);
    for (const auto& t : cols[c]) per_row[t.comp].push_back({t.mon, t.coef});
    for (std::size_t r = 0; r < rows; ++r) {
      m(r, c) = per_row[r].empty() ? Poly(nvars) : Poly(nvars, std::move(per_row[r]));
    }
  }
  return m;
}

}  // namespace

// ---------------------------------------------------------------- FreeResolution

long FreeResolution::length() const {
  for (long i = static_cast<long>(modules.size()) - 1; i >= 0; --i) {
    if (modules[static_cast<std::size_t>(i)].rank() > 0) return i;
  }
  return -1;
}

namespace {

bool product_is_zero(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Poly s;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        s += a(i, k) * b(k, j);
      }
      if (!s.is_zero()) return false;
    }
  return true;
}

}  // namespace

bool FreeResolution::is_complex() const {
  for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
    if (!product_is_zero(maps[i], maps[i + 1])) return false;
  }
  return true;
}

bool FreeResolution::is_minimal() const {
  for (const auto& m : maps)
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (!m(r, c).is_zero() && m(r, c).is_constant()) return false;
  return true;
}

FreeResolution free_resolution(const Ideal& I, const ResolutionOptions& opt) {
  const std::size_t n = I.nvars();
  std::vector<long> w = opt.weights.empty() ? std::vector<long>(n, 1) : opt.weights;
  if (w.size() != n) throw InputError("grading weights do not match the variable count");
  for (const auto& g : I.generators()) {
    long d = -1;
    for (const auto& t : g.terms()) {
      long e = weighted(t.mon, w);
      if (d >= 0 && e != d) throw InputError("free resolutions require homogeneous generators");
      d = e;
    }
  }

  FreeResolution res;
  res.nvars = n;
  res.field = I.field();
  res.weights = w;
  res.modules.push_back({{0}});

  // Level 0: S with one generator.
  Level prev;
  prev.total = {Monomial(n)};
  prev.chain = {{}};
  prev.degree = {0};

  ModuleOrder ord0 = schreyer_order(prev, opt.order);
  std::vector<ModVec> current;
  for (const auto& g : I.groebner(opt.order)) current.push_back(to_modvec(g, ord0, 0));
  schreyer_sort(current);

  const std::size_t cap = n + 1;
  while (!current.empty()) {
    if (res.modules.size() > cap) {
      throw InternalError("resolution longer than the Hilbert syzygy bound");
    }
    // The elements of `current` live in the module described by `prev` and
    // become the basis of the next module.
    Level next;
    for (std::size_t a = 0; a < current.size(); ++a) {
      const ModTerm& lt = current[a][0];
      next.total.push_back(lt.mon * prev.total[lt.comp]);
      auto ch = prev.chain[lt.comp];
      ch.push_back(static_cast<std::uint32_t>(a));
      next.chain.push_back(std::move(ch));
      next.degree.push_back(weighted(lt.mon, w) + prev.degree[lt.comp]);
    }
    res.modules.push_back({next.degree});
    res.maps.push_back(columns_to_matrix(current, prev.degree.size(), n));

    ModuleOrder ord_prev = schreyer_order(prev, opt.order);
    ModuleOrder ord_next = schreyer_order(next, opt.order);

    std::vector<ModVec> syz;
    for (std::size_t a = 0; a < current.size(); ++a) {
      const ModTerm& la = current[a][0];
      // Minimal generators of the monomial ideal (lcm(L_a, L_b) / L_a : b > a).
      std::vector<std::pair<Monomial, std::size_t>> cands;
      for (std::size_t b = a + 1; b < current.size(); ++b) {
        const ModTerm& lb = current[b][0];
        if (lb.comp != la.comp) continue;
        cands.emplace_back(lcm(la.mon, lb.mon) / la.mon, b);
      }
      std::vector<std::pair<Monomial, std::size_t>> keep;
      for (std::size_t x = 0; x < cands.size(); ++x) {
        bool redundant = false;
        for (std::size_t y = 0; y < cands.size() && !redundant; ++y) {
          if (x == y) continue;
          if (cands[y].first.divides(cands[x].first) &&
              !(cands[y].first == cands[x].first && y > x)) {
            redundant = true;
          }
        }
        if (!redundant) keep.push_back(cands[x]);
      }
      for (const auto& [m_ab, b] : keep) {
        const ModTerm& lb = current[b][0];
        Monomial m_ba = lcm(la.mon, lb.mon) / lb.mon;
        Scalar ca = la.coef.inverse();
        Scalar cb = -lb.coef.inverse();
        ModVec s = add_scaled(ModVec{}, current[a], m_ab, ca, ord_prev);
        s = add_scaled(s, current[b], m_ba, cb, ord_prev);
        Division d = divide(std::move(s), current, ord_prev);
        if (!d.remainder.empty()) throw InternalError("S-pair does not reduce to zero in Schreyer step");
        ModVec sigma;
        sigma.push_back({m_ab, static_cast<std::uint32_t>(a), ca});
        sigma.push_back({m_ba, static_cast<std::uint32_t>(b), cb});
        for (auto& q : d.quotient) sigma.push_back({q.mon, q.comp, -q.coef});
        normalize(sigma, ord_next);
        if (sigma.empty() || sigma[0].comp != a || !(sigma[0].mon == m_ab)) {
          throw InternalError("Schreyer syzygy has an unexpected leading term");
        }
        syz.push_back(std::move(sigma));
      }
    }
    schreyer_sort(syz);
    prev = std::move(next);
    current = std::move(syz);
  }
  return res;
}

// ---------------------------------------------------------------- minimize

std::pair<FreeResolution, BettiTable> minimize(const FreeResolution& in) {
  FreeResolution res = in;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < res.maps.size() && !changed; ++k) {
      PolyMatrix& d = res.maps[k];  // d_{k+1}: F_{k+1} -> F_k
      for (std::size_t r = 0; r < d.rows() && !changed; ++r) {
        for (std::size_t c = 0; c < d.cols() && !changed; ++c) {
          if (d(r, c).is_zero() || !d(r, c).is_constant()) continue;
          Scalar u = d(r, c).terms()[0].coef;
          // Clear row r outside column c by column operations.
          for (std::size_t c2 = 0; c2 < d.cols(); ++c2) {
            if (c2 == c || d(r, c2).is_zero()) continue;
            Poly f = d(r, c2).scaled(u.inverse());
            for (std::size_t r2 = 0; r2 < d.rows(); ++r2) {
              if (!d(r2, c).is_zero()) d(r2, c2) -= f * d(r2, c);
            }
          }
          auto drop_row = [](const PolyMatrix& m, std::size_t row) {
            PolyMatrix out(m.rows() - 1, m.cols());
            for (std::size_t i = 0, o = 0; i < m.rows(); ++i) {
              if (i == row) continue;
              for (std::size_t j = 0; j < m.cols(); ++j) out(o, j) = m(i, j);
              ++o;
            }
            return out;
          };
          auto drop_col = [](const PolyMatrix& m, std::size_t col) {
            PolyMatrix out(m.rows(), m.cols() - 1);
            for (std::size_t i = 0; i < m.rows(); ++i)
              for (std::size_t j = 0, o = 0; j < m.cols(); ++j) {
                if (j == col) continue;
                out(i, o++) = m(i, j);
              }
            return out;
          };
          d = drop_col(drop_row(d, r), c);
          if (k > 0) res.maps[k - 1] = drop_col(res.maps[k - 1], r);
          if (k + 1 < res.maps.size()) res.maps[k + 1] = drop_row(res.maps[k + 1], c);
          auto& fk = res.modules[k].degrees;
          fk.erase(fk.begin() + static_cast<long>(r));
          auto& fk1 = res.modules[k + 1].degrees;
          fk1.erase(fk1.begin() + static_cast<long>(c));
          changed = true;
        }
      }
    }
  }
  // Drop trailing zero modules.
  while (res.modules.size() > 1 && res.modules.back().rank() == 0) {
    res.modules.pop_back();
    res.maps.pop_back();
  }
  BettiTable b(res);
  return {std::move(res), std::move(b)};
}

// ---------------------------------------------------------------- Betti tables

BettiTable::BettiTable(const FreeResolution& minimal) {
  for (std::size_t i = 1; i < minimal.modules.size(); ++i) {
    for (long d : minimal.modules[i].degrees) ++beta_[{static_cast<long>(i) - 1, d}];
  }
  long len = minimal.length();
  pd_ = minimal.modules.empty() || minimal.modules[0].rank() == 0 ? -1 : std::max(len, 0L);
}

long BettiTable::operator()(long i, long j) const {
  auto it = beta_.find({i, j});
  return it == beta_.end() ? 0 : it->second;
}

long BettiTable::last_rank() const {
  if (beta_.empty()) return 1;  // S/0 = S is resolved by itself
  long last = beta_.rbegin()->first.first;
  long r = 0;
  for (const auto& [ij, v] : beta_)
    if (ij.first == last) r += v;
  return r;
}

long BettiTable::projective_dimension() const { return pd_; }

std::string BettiTable::to_text() const {
  if (beta_.empty()) return "(empty)\n";
  long imax = 0, smin = 0, smax = 0;
  bool first = true;
  for (const auto& [ij, v] : beta_) {
    imax = std::max(imax, ij.first);
    long s = ij.second - ij.first;
    if (first) {
      smin = smax = s;
      first = false;
    }
    smin = std::min(smin, s);
    smax = std::max(smax, s);
  }
  std::ostringstream out;
  const int w = 5;
  out << "     ";
  for (long i = 0; i <= imax; ++i) {
    std::string h = std::to_string(i);
    out << std::string(static_cast<std::size_t>(w) - h.size(), ' ') << h;
  }
  out << "\n";
  for (long s = smin; s <= smax; ++s) {
    std::string lbl = std::to_string(s) + ":";
    out << std::string(5 - std::min<std::size_t>(5, lbl.size()), ' ') << lbl;
    for (long i = 0; i <= imax; ++i) {
      long v = (*this)(i, s + i);
      std::string c = v ? std::to_string(v) : "-";
      out << std::string(static_cast<std::size_t>(w) - std::min<std::size_t>(w, c.size()), ' ') << c;
    }
    out << "\n";
  }
  return out.str();
}

long regularity(const BettiTable& b) {
  if (b.empty()) return 0;
  long best = 0;
  bool first = true;
  for (const auto& [ij, v] : b.entries()) {
    long s = ij.second - ij.first;
    if (first || s > best) best = s;
    first = false;
  }
  return best - 1;
}

// ---------------------------------------------------------------- complexes

bool FreeComplex::is_complex() const {
  for (std::size_t k = 0; k + 1 < maps.size(); ++k) {
    if (!product_is_zero(maps[k + 1], maps[k])) return false;
  }
  return true;
}

FreeComplex dual_complex(const FreeResolution& res) {
  FreeComplex K;
  K.nvars = res.nvars;
  K.field = res.field;
  K.weights = res.weights;
  K.lo = 0;
  for (const auto& F : res.modules) {
    GradedFreeModule g;
    for (long d : F.degrees) g.degrees.push_back(-d);
    K.terms.push_back(std::move(g));
  }
  for (const auto& d : res.maps) K.maps.push_back(d.transposed());
  return K;
}

FreeComplex as_cochain(const FreeResolution& res) {
  FreeComplex K;
  K.nvars = res.nvars;
  K.field = res.field;
  K.weights = res.weights;
  long L = static_cast<long>(res.modules.size()) - 1;
  K.lo = -L;
  for (long i = L; i >= 0; --i) K.terms.push_back(res.modules[static_cast<std::size_t>(i)]);
  for (long i = L; i >= 1; --i) K.maps.push_back(res.maps[static_cast<std::size_t>(i - 1)]);
  return K;
}

namespace {

// Basis of the degree-nu part of a graded free module over the first nx
// variables: pairs (generator j, monomial of degree nu - deg_j).
struct StrandBasis {
  std::vector<std::pair<std::size_t, Monomial>> elems;
  std::unordered_map<std::string, std::size_t> index;

  static std::string key(std::size_t j, const Monomial& m) {
    std::string k = std::to_string(j) + ":";
    for (auto e : m.exponents()) k += std::to_string(e) + ",";
    return k;
  }
};

StrandBasis strand_basis(const GradedFreeModule& F, long nu, std::size_t nx, std::size_t nvars) {
  StrandBasis b;
  for (std::size_t j = 0; j < F.rank(); ++j) {
    for (const auto& mx : monomials_of_degree(nx, nu - F.degrees[j])) {
      Monomial m(nvars);
      for (std::size_t i = 0; i < nx; ++i) m.set(i, mx[i]);
      b.index.emplace(StrandBasis::key(j, m), b.elems.size());
      b.elems.emplace_back(j, m);
    }
  }
  return b;
}

void require_standard(const FreeComplex& K) {
  for (long x : K.weights) {
    if (x != 1) throw InputError("field strands require the standard grading");
  }
}

}  // namespace

long strand_dimension(const FreeComplex& K, std::size_t k, long nu) {
  long d = 0;
  for (long g : K.terms[k].degrees) d += count_monomials(K.nvars, nu - g);
  return d;
}

std::vector<long> complex_cohomology_dims(const FreeComplex& K, long nu) {
  require_standard(K);
  const std::size_t len = K.terms.size();
  std::vector<long> rank(K.maps.size(), 0);
  std::vector<StrandBasis> bases;
  for (std::size_t k = 0; k < len; ++k) bases.push_back(strand_basis(K.terms[k], nu, K.nvars, K.nvars));
  for (std::size_t k = 0; k < K.maps.size(); ++k) {
    const PolyMatrix& m = K.maps[k];
    const StrandBasis& src = bases[k];
    const StrandBasis& dst = bases[k + 1];
    if (src.elems.empty() || dst.elems.empty()) continue;
    std::vector<SparseRow> rows;
    rows.reserve(src.elems.size());
    for (const auto& [j, mon] : src.elems) {
      std::map<std::uint32_t, Scalar> acc;
      for (std::size_t r = 0; r < m.rows(); ++r) {
        for (const auto& t : m(r, j).terms()) {
          auto it = dst.index.find(StrandBasis::key(r, t.mon * mon));
          if (it == dst.index.end()) throw InputError("complex differential is not homogeneous");
          acc[static_cast<std::uint32_t>(it->second)] += t.coef;
        }
      }
      SparseRow row;
      for (auto& [c, v] : acc)
        if (!v.is_zero()) row.emplace_back(c, v);
      if (!row.empty()) rows.push_back(std::move(row));
    }
    rank[k] = static_cast<long>(sparse_rank(std::move(rows)));
  }
  std::vector<long> dims(len);
  for (std::size_t k = 0; k < len; ++k) {
    long d = static_cast<long>(bases[k].elems.size());
    if (k < K.maps.size()) d -= rank[k];
    if (k > 0) d -= rank[k - 1];
    dims[k] = d;
  }
  return dims;
}

namespace {

HilbertSeries free_series(const FreeComplex& K, std::size_t k) {
  HilbertSeries s = HilbertSeries::zero(K.nvars);
  for (long g : K.terms[k].degrees) s = s + HilbertSeries(K.nvars, g, {mpz_class(1)});
  return s;
}

}  // namespace

HilbertSeries cokernel_series(const FreeComplex& K, std::size_t k) {
  require_standard(K);
  const auto& shifts = K.terms[k].degrees;
  if (k == 0 || K.maps[k - 1].cols() == 0) return free_series(K, k);
  const PolyMatrix& m = K.maps[k - 1];
  ModuleOrder ord = ModuleOrder::position_over_term(MonomialOrder::grevlex());
  std::vector<ModVec> gens;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    ModVec v;
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (const auto& t : m(r, c).terms()) v.push_back({t.mon, static_cast<std::uint32_t>(r), t.coef});
    normalize(v, ord);
    if (!v.empty()) gens.push_back(std::move(v));
  }
  GbOptions opt;
  opt.degree = [&shifts](const Monomial& mon, std::uint32_t comp) { return mon.degree() + shifts[comp]; };
  opt.product_criterion = false;
  std::vector<ModVec> gb = buchberger(std::move(gens), ord, opt);
  std::vector<std::vector<Monomial>> leads(shifts.size());
  for (const auto& g : gb) leads[g[0].comp].push_back(g[0].mon);
  HilbertSeries s = HilbertSeries::zero(K.nvars);
  for (std::size_t c = 0; c < shifts.size(); ++c) {
    s = s + hilbert_series(MonomialIdeal(K.nvars, leads[c])).shifted(shifts[c]);
  }
  return s;
}

std::vector<HilbertSeries> complex_cohomology_series(const FreeComplex& K) {
  const std::size_t len = K.terms.size();
  std::vector<HilbertSeries> coker(len);
  for (std::size_t k = 0; k < len; ++k) coker[k] = cokernel_series(K, k);
  std::vector<HilbertSeries> out(len);
  for (std::size_t k = 0; k < len; ++k) {
    if (k + 1 < len) {
      out[k] = coker[k] + coker[k + 1] - free_series(K, k + 1);
    } else {
      out[k] = coker[k];
    }
  }
  return out;
}

long family_strand_dimension(const FreeComplex& K, std::size_t k, long nu, std::size_t nx) {
  long d = 0;
  for (long g : K.terms[k].degrees) d += count_monomials(nx, nu - g);
  return d;
}

PolyTMatrix family_strand(const FreeComplex& K, std::size_t k, long nu, std::size_t nx) {
  if (K.nvars != nx && K.nvars != nx + 1) throw InputError("family strands allow one parameter variable");
  StrandBasis src = strand_basis(K.terms[k], nu, nx, K.nvars);
  StrandBasis dst = strand_basis(K.terms[k + 1], nu, nx, K.nvars);
  PolyTMatrix out(dst.elems.size(), src.elems.size());
  const PolyMatrix& m = K.maps[k];
  for (std::size_t c = 0; c < src.elems.size(); ++c) {
    const auto& [j, mon] = src.elems[c];
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (const auto& t : m(r, j).terms()) {
        Monomial x = t.mon * mon;
        std::uint32_t tdeg = 0;
        if (K.nvars == nx + 1) {
          tdeg = x[nx];
          x.set(nx, 0);
        }
        auto it = dst.index.find(StrandBasis::key(r, x));
        if (it == dst.index.end()) throw InputError("family differential is not x-homogeneous");
        out(it->second, c) += UniPoly::t_power(tdeg, t.coef);
      }
    }
  }
  return out;
}

}  // namespace fibfull
