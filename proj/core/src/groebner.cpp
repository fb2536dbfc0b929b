#include "fibfull/groebner.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "fibfull/error.hpp"
#include "fibfull/gb.hpp"

namespace fibfull {

// ---------------------------------------------------------------- MonomialIdeal

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens) : n_(nvars) {
  for (const auto& m : gens) {
    if (m.size() != nvars) throw InputError("monomial generator has the wrong number of variables");
  }
  const MonomialOrder lex = MonomialOrder::lex();
  std::sort(gens.begin(), gens.end(), [&](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return lex.compare(a, b) > 0;
  });
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& g : gens_) {
      if (g.divides(m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) gens_.push_back(m);
  }
}

bool MonomialIdeal::is_unit() const {
  return std::any_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.is_one(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.is_squarefree(); });
}

std::string MonomialIdeal::to_string(const std::vector<std::string>& names) const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string(names);
  }
  if (gens_.empty()) s += "0";
  return s + ")";
}

bool is_squarefree(const MonomialIdeal& m) { return m.is_squarefree(); }

// ---------------------------------------------------------------- Ideal

struct Ideal::Cache {
  std::mutex mu;
  std::map<std::string, std::vector<Poly>> bases;
  std::optional<bool> saturated;
};

Ideal::Ideal(std::size_t nvars, Field field, std::vector<Poly> gens)
    : n_(nvars), field_(field), cache_(std::make_shared<Cache>()) {
  if (nvars > Monomial::kMaxVariables) {
    throw InputError("at most " + std::to_string(Monomial::kMaxVariables) + " variables are supported");
  }
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.nvars() != nvars) throw InputError("generator has the wrong number of variables");
    Poly c = g.coerced(field);
    if (c.is_zero()) continue;
    homogeneous_ = homogeneous_ && c.is_homogeneous();
    gens_.push_back(std::move(c));
  }
}

Ideal Ideal::unit(std::size_t nvars, Field field) {
  return Ideal(nvars, field, {Poly::constant(nvars, Scalar(1))});
}

Ideal Ideal::from_monomials(const MonomialIdeal& m, Field field) {
  std::vector<Poly> gens;
  for (const auto& g : m.generators()) gens.push_back(Poly::monomial(g));
  return Ideal(m.nvars(), field, std::move(gens));
}

bool Ideal::is_homogeneous_prefix(std::size_t k) const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [k](const Poly& g) { return g.is_homogeneous_prefix(k); });
}

std::optional<bool> Ideal::saturated_flag() const {
  if (!cache_) return std::nullopt;
  std::lock_guard lock(cache_->mu);
  return cache_->saturated;
}

void Ideal::set_saturated_flag(bool v) const {
  if (!cache_) return;
  std::lock_guard lock(cache_->mu);
  cache_->saturated = v;
}

const std::vector<Poly>& Ideal::groebner(const MonomialOrder& order) const {
  static const std::vector<Poly> empty;
  if (!cache_) return empty;
  std::string key = order.name();
  {
    std::lock_guard lock(cache_->mu);
    auto it = cache_->bases.find(key);
    if (it != cache_->bases.end()) return it->second;
  }
  ModuleOrder mo = ModuleOrder::rank_one(order);
  std::vector<ModVec> gens;
  gens.reserve(gens_.size());
  for (const auto& g : gens_) gens.push_back(to_modvec(g, mo));
  std::vector<ModVec> gb = buchberger(std::move(gens), mo);
  std::vector<Poly> out;
  out.reserve(gb.size());
  for (const auto& v : gb) out.push_back(to_poly(v, n_));
  std::lock_guard lock(cache_->mu);
  auto [it, fresh] = cache_->bases.emplace(key, std::move(out));
  return it->second;
}

bool Ideal::is_zero() const { return gens_.empty(); }

bool Ideal::is_unit() const {
  if (gens_.empty()) return false;
  const auto& gb = groebner(MonomialOrder::grevlex());
  return gb.size() == 1 && gb[0].is_constant();
}

std::string Ideal::canonical_text() const {
  const auto& gb = groebner(MonomialOrder::grevlex());
  std::string s;
  for (const auto& g : gb) {
    if (!s.empty()) s += "; ";
    s += g.to_string(variable_names(n_));
  }
  return s;
}

// ---------------------------------------------------------------- operations

std::vector<Poly> reduced_groebner(const Ideal& I, const MonomialOrder& order) {
  return I.groebner(order);
}

Poly normal_form(const Poly& f, const Ideal& I, const MonomialOrder& order) {
  if (f.nvars() != I.nvars() && !f.is_zero()) throw InputError("polynomial and ideal rings differ");
  ModuleOrder mo = ModuleOrder::rank_one(order);
  std::vector<ModVec> g;
  for (const auto& p : I.groebner(order)) g.push_back(to_modvec(p, mo));
  return to_poly(reduce(to_modvec(f.coerced(I.field()), mo), g, mo), I.nvars());
}

bool contains(const Ideal& I, const Poly& f) {
  return normal_form(f, I, MonomialOrder::grevlex()).is_zero();
}

bool same_ideal(const Ideal& a, const Ideal& b) {
  if (a.nvars() != b.nvars()) return false;
  return a.groebner(MonomialOrder::grevlex()) == b.groebner(MonomialOrder::grevlex());
}

MonomialIdeal initial_ideal(const Ideal& I, const MonomialOrder& order) {
  std::vector<Monomial> leads;
  for (const auto& g : I.groebner(order)) leads.push_back(g.leading(order).mon);
  return MonomialIdeal(I.nvars(), std::move(leads));
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  std::vector<Poly> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.nvars(), a.field(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  std::vector<Poly> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return Ideal(a.nvars(), a.field(), std::move(gens));
}

Ideal eliminate(const Ideal& I, const std::vector<bool>& mask) {
  MonomialOrder o = MonomialOrder::elimination(mask);
  std::vector<Poly> kept;
  for (const auto& g : I.groebner(o)) {
    bool free = true;
    for (const auto& t : g.terms()) {
      for (std::size_t k = 0; k < mask.size() && k < I.nvars(); ++k) {
        if (mask[k] && t.mon[k] != 0) free = false;
      }
    }
    if (free) kept.push_back(g);
  }
  return Ideal(I.nvars(), I.field(), std::move(kept));
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  if (a.nvars() != b.nvars()) throw InputError("intersecting ideals from different rings");
  std::size_t n = a.nvars();
  if (a.is_zero() || b.is_zero()) return Ideal::zero(n, a.field());
  if (n + 1 > Monomial::kMaxVariables) throw InputError("too many variables for an intersection");
  Poly y = Poly::variable(n + 1, n);
  Poly one_minus_y = Poly::constant(n + 1, Scalar(1)) - y;
  std::vector<Poly> gens;
  for (const auto& f : a.generators()) gens.push_back(y * f.add_variable());
  for (const auto& g : b.generators()) gens.push_back(one_minus_y * g.add_variable());
  std::vector<bool> mask(n + 1, false);
  mask[n] = true;
  Ideal big(n + 1, a.field(), std::move(gens));
  Ideal elim = eliminate(big, mask);
  std::vector<Poly> out;
  for (const auto& g : elim.generators()) out.push_back(g.drop_last(Scalar(0)));
  return Ideal(n, a.field(), std::move(out));
}

Poly exact_divide(const Poly& a, const Poly& f) {
  if (f.is_zero()) throw InputError("division by the zero polynomial");
  ModuleOrder mo = ModuleOrder::rank_one(MonomialOrder::grevlex());
  Division d = divide(to_modvec(a, mo), {to_modvec(f, mo)}, mo);
  if (!d.remainder.empty()) throw InternalError("exact division has a remainder");
  std::vector<Term> terms;
  for (const auto& t : d.quotient) terms.push_back({t.mon, t.coef});
  return Poly(a.nvars(), std::move(terms));
}

Ideal colon(const Ideal& I, const Poly& f) {
  if (f.is_zero()) throw InputError("colon by the zero polynomial");
  Ideal fi(I.nvars(), I.field(), {f});
  Ideal k = ideal_intersect(I, fi);
  std::vector<Poly> gens;
  Poly fc = f.coerced(I.field());
  for (const auto& g : k.generators()) gens.push_back(exact_divide(g, fc));
  return Ideal(I.nvars(), I.field(), std::move(gens));
}

Ideal saturate_variable(const Ideal& I, std::size_t i) {
  if (!I.is_homogeneous()) throw InputError("saturation requires a homogeneous ideal");
  // For grevlex with x_i smallest, dividing the reduced basis by the
  // largest power of x_i gives a basis of I : x_i^infinity.
  MonomialOrder o = MonomialOrder::grevlex(static_cast<long>(i));
  std::vector<Poly> gens;
  for (const auto& g : I.groebner(o)) {
    std::uint32_t e = UINT32_MAX;
    for (const auto& t : g.terms()) e = std::min(e, t.mon[i]);
    if (e == 0) {
      gens.push_back(g);
    } else {
      gens.push_back(exact_divide(g, Poly::monomial(Monomial::variable(I.nvars(), i, e))));
    }
  }
  return Ideal(I.nvars(), I.field(), std::move(gens));
}

Ideal saturate_irrelevant(const Ideal& I) {
  if (!I.is_homogeneous()) throw InputError("saturation requires a homogeneous ideal");
  if (I.saturated_flag() == true) return I;
  if (I.is_zero()) {
    I.set_saturated_flag(true);
    return I;
  }
  std::vector<Ideal> parts;
  for (std::size_t i = 0; i < I.nvars(); ++i) {
    Ideal J = saturate_variable(I, i);
    if (same_ideal(J, I)) {
      // x_i is a nonzerodivisor on S/I, so I is already saturated.
      I.set_saturated_flag(true);
      return I;
    }
    if (!J.is_unit()) parts.push_back(std::move(J));
  }
  Ideal out = Ideal::unit(I.nvars(), I.field());
  if (!parts.empty()) {
    out = parts[0];
    for (std::size_t k = 1; k < parts.size(); ++k) out = ideal_intersect(out, parts[k]);
    out = Ideal(I.nvars(), I.field(), out.groebner(MonomialOrder::grevlex()));
  }
  I.set_saturated_flag(false);
  out.set_saturated_flag(true);
  return out;
}

Poly poly_gcd(const Poly& a, const Poly& b, const Field& field) {
  const MonomialOrder o = MonomialOrder::grevlex();
  if (a.is_zero()) return b.coerced(field).monic(o);
  if (b.is_zero()) return a.coerced(field).monic(o);
  if (a.is_constant() || b.is_constant()) return Poly::constant(a.nvars(), Scalar(1));
  Ideal ia(a.nvars(), field, {a});
  Ideal ib(b.nvars(), field, {b});
  Ideal l = ideal_intersect(ia, ib);
  const auto& gb = l.groebner(o);
  if (gb.size() != 1) throw InternalError("intersection of principal ideals is not principal");
  Poly prod = a.coerced(field) * b.coerced(field);
  return exact_divide(prod, gb[0]).monic(o);
}

}  // namespace fibfull
