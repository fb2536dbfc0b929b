#include "fibfull/gb.hpp"

#include <algorithm>

#include "fibfull/error.hpp"

namespace fibfull {

ModuleOrder ModuleOrder::rank_one(const MonomialOrder& o) {
  return ModuleOrder([o](const Monomial& a, std::uint32_t, const Monomial& b, std::uint32_t) {
    return o.compare(a, b);
  });
}

ModuleOrder ModuleOrder::position_over_term(const MonomialOrder& o) {
  return ModuleOrder([o](const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) {
    if (ca != cb) return cb <=> ca;
    return o.compare(a, b);
  });
}

ModuleOrder ModuleOrder::term_over_position(const MonomialOrder& o, std::vector<long> shifts) {
  return ModuleOrder(
      [o, s = std::move(shifts)](const Monomial& a, std::uint32_t ca, const Monomial& b,
                                 std::uint32_t cb) {
        long da = a.degree() + s[ca], db = b.degree() + s[cb];
        if (da != db) return da <=> db;
        auto c = o.compare(a, b);
        if (c != 0) return c;
        return cb <=> ca;
      });
}

void normalize(ModVec& v, const ModuleOrder& ord) {
  std::sort(v.begin(), v.end(), [&](const ModTerm& a, const ModTerm& b) { return ord(a, b) > 0; });
  ModVec out;
  out.reserve(v.size());
  for (auto& t : v) {
    if (!out.empty() && out.back().comp == t.comp && out.back().mon == t.mon) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
  v = std::move(out);
}

ModVec add_scaled(const ModVec& a, const ModVec& b, const Monomial& m, const Scalar& c,
                  const ModuleOrder& ord) {
  ModVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  Monomial bm;
  bool have_bm = false;
  while (i < a.size() || j < b.size()) {
    if (j < b.size() && !have_bm) {
      bm = b[j].mon * m;
      have_bm = true;
    }
    std::strong_ordering cmp = std::strong_ordering::equal;
    if (i == a.size()) {
      cmp = std::strong_ordering::less;
    } else if (j == b.size()) {
      cmp = std::strong_ordering::greater;
    } else {
      cmp = ord(a[i].mon, a[i].comp, bm, b[j].comp);
    }
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({bm, b[j].comp, b[j].coef * c});
      ++j;
      have_bm = false;
    } else {
      Scalar s = a[i].coef + b[j].coef * c;
      if (!s.is_zero()) out.push_back({a[i].mon, a[i].comp, std::move(s)});
      ++i;
      ++j;
      have_bm = false;
    }
  }
  return out;
}

ModVec to_modvec(const Poly& p, const ModuleOrder& ord, std::uint32_t comp) {
  ModVec v;
  v.reserve(p.size());
  for (const auto& t : p.terms()) v.push_back({t.mon, comp, t.coef});
  normalize(v, ord);
  return v;
}

Poly to_poly(const ModVec& v, std::size_t nvars) {
  std::vector<Term> terms;
  terms.reserve(v.size());
  for (const auto& t : v) terms.push_back({t.mon, t.coef});
  return Poly(nvars, std::move(terms));
}

namespace {

const ModVec* find_reducer(const ModTerm& t, const std::vector<ModVec>& g,
                           const std::vector<char>* active, std::size_t* index = nullptr) {
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (active && !(*active)[k]) continue;
    const ModVec& h = g[k];
    if (h.empty()) continue;
    if (h[0].comp == t.comp && h[0].mon.divides(t.mon)) {
      if (index) *index = k;
      return &h;
    }
  }
  return nullptr;
}

ModVec reduce_impl(ModVec f, const std::vector<ModVec>& g, const std::vector<char>* active,
                   const ModuleOrder& ord) {
  ModVec rem;
  while (!f.empty()) {
    const ModVec* h = find_reducer(f[0], g, active);
    if (!h) {
      rem.push_back(std::move(f[0]));
      f.erase(f.begin());
      continue;
    }
    Scalar c = -(f[0].coef / (*h)[0].coef);
    Monomial m = f[0].mon / (*h)[0].mon;
    f = add_scaled(f, *h, m, c, ord);
  }
  return rem;
}

void make_monic(ModVec& v) {
  if (v.empty() || v[0].coef.is_one()) return;
  Scalar inv = v[0].coef.inverse();
  for (auto& t : v) t.coef *= inv;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint32_t comp;
  long degree;
};

}  // namespace

ModVec reduce(ModVec f, const std::vector<ModVec>& g, const ModuleOrder& ord) {
  return reduce_impl(std::move(f), g, nullptr, ord);
}

Division divide(ModVec f, const std::vector<ModVec>& g, const ModuleOrder& ord, bool top_only) {
  Division d;
  while (!f.empty()) {
    std::size_t k = 0;
    const ModVec* h = find_reducer(f[0], g, nullptr, &k);
    if (!h) {
      if (top_only) {
        d.remainder.insert(d.remainder.end(), f.begin(), f.end());
        break;
      }
      d.remainder.push_back(std::move(f[0]));
      f.erase(f.begin());
      continue;
    }
    Scalar c = f[0].coef / (*h)[0].coef;
    Monomial m = f[0].mon / (*h)[0].mon;
    d.quotient.push_back({m, static_cast<std::uint32_t>(k), c});
    f = add_scaled(f, *h, m, -c, ord);
  }
  return d;
}

std::vector<ModVec> buchberger(std::vector<ModVec> gens, const ModuleOrder& ord,
                               const GbOptions& opt) {
  auto degree = opt.degree ? opt.degree
                           : std::function<long(const Monomial&, std::uint32_t)>(
                                 [](const Monomial& m, std::uint32_t) { return m.degree(); });

  std::vector<ModVec> basis;
  std::vector<char> active;
  std::vector<Pair> pairs;

  auto lead = [&](std::size_t k) -> const ModTerm& { return basis[k][0]; };

  auto insert = [&](ModVec h) {
    make_monic(h);
    std::size_t hi = basis.size();
    basis.push_back(std::move(h));
    active.push_back(1);
    const ModTerm& lh = lead(hi);

    // Gebauer-Moeller update.
    std::vector<Pair> cand;
    std::vector<char> coprime;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!active[g] || lead(g).comp != lh.comp) continue;
      Monomial l = lcm(lh.mon, lead(g).mon);
      cand.push_back({g, hi, l, lh.comp, degree(l, lh.comp)});
      coprime.push_back(opt.product_criterion && lh.mon.coprime(lead(g).mon));
    }
    std::vector<char> keep(cand.size(), 1);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (coprime[a]) continue;
      for (std::size_t b = 0; b < cand.size(); ++b) {
        if (a == b || !keep[b]) continue;
        if (cand[b].lcm.divides(cand[a].lcm) && !(cand[b].lcm == cand[a].lcm && b > a)) {
          keep[a] = 0;
          break;
        }
      }
    }
    std::vector<Pair> fresh;
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (keep[a] && !coprime[a]) fresh.push_back(cand[a]);
    }
    std::vector<Pair> old;
    old.reserve(pairs.size());
    for (auto& p : pairs) {
      bool drop = p.comp == lh.comp && lh.mon.divides(p.lcm) &&
                  !(lcm(lead(p.i).mon, lh.mon) == p.lcm) && !(lcm(lead(p.j).mon, lh.mon) == p.lcm);
      if (!drop) old.push_back(std::move(p));
    }
    pairs = std::move(old);
    for (auto& p : fresh) pairs.push_back(std::move(p));
    for (std::size_t g = 0; g < hi; ++g) {
      if (active[g] && lh.comp == lead(g).comp && lh.mon.divides(lead(g).mon)) active[g] = 0;
    }
  };

  // Seed with the inter-reduced input, lowest degrees first.
  for (auto& g : gens) normalize(g, ord);
  gens.erase(std::remove_if(gens.begin(), gens.end(), [](const ModVec& v) { return v.empty(); }),
             gens.end());
  std::stable_sort(gens.begin(), gens.end(), [&](const ModVec& a, const ModVec& b) {
    long da = degree(a[0].mon, a[0].comp), db = degree(b[0].mon, b[0].comp);
    if (da != db) return da < db;
    return ord(a[0], b[0]) < 0;
  });
  for (auto& g : gens) {
    ModVec h = reduce_impl(std::move(g), basis, &active, ord);
    if (!h.empty()) insert(std::move(h));
  }

  while (!pairs.empty()) {
    // Normal strategy: smallest lcm first, by degree then order.
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const Pair& a = pairs[k];
      const Pair& b = pairs[best];
      if (a.degree != b.degree ? a.degree < b.degree : ord(a.lcm, a.comp, b.lcm, b.comp) < 0) best = k;
    }
    Pair p = std::move(pairs[best]);
    pairs.erase(pairs.begin() + static_cast<long>(best));
    if (opt.degree_bound && p.degree > *opt.degree_bound) continue;

    const ModVec& f = basis[p.i];
    const ModVec& g = basis[p.j];
    ModVec s = add_scaled(ModVec{}, f, p.lcm / f[0].mon, Scalar(1), ord);
    s = add_scaled(s, g, p.lcm / g[0].mon, Scalar(-1), ord);
    ModVec h = reduce_impl(std::move(s), basis, &active, ord);
    if (!h.empty()) insert(std::move(h));
  }

  // Minimal basis, then full inter-reduction.
  std::vector<ModVec> minimal;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (active[k]) minimal.push_back(std::move(basis[k]));
  }
  std::vector<ModVec> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    ModVec head{minimal[k][0]};
    ModVec tail(minimal[k].begin() + 1, minimal[k].end());
    std::vector<ModVec> others;
    for (std::size_t l = 0; l < minimal.size(); ++l) {
      if (l != k) others.push_back(minimal[l]);
    }
    ModVec r = reduce(std::move(tail), others, ord);
    head.insert(head.end(), r.begin(), r.end());
    make_monic(head);
    reduced.push_back(std::move(head));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const ModVec& a, const ModVec& b) {
    long da = degree(a[0].mon, a[0].comp), db = degree(b[0].mon, b[0].comp);
    if (da != db) return da < db;
    return ord(a[0], b[0]) < 0;
  });
  return reduced;
}

}  // namespace fibfull
