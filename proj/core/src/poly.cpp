#include "fibfull/poly.hpp"

#include <algorithm>
#include <unordered_map>

#include "fibfull/error.hpp"

namespace fibfull {

namespace {

const MonomialOrder& storage_order() {
  static const MonomialOrder o = MonomialOrder::grevlex();
  return o;
}

bool storage_greater(const Term& a, const Term& b) {
  return storage_order().compare(a.mon, b.mon) > 0;
}

}  // namespace

Poly::Poly(std::size_t nvars, std::vector<Term> terms) : n_(nvars), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.mon.size() != n_) throw InputError("term has the wrong number of variables");
  }
  normalize();
}

void Poly::normalize() {
  std::sort(terms_.begin(), terms_.end(), storage_greater);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mon == t.mon) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
  terms_ = std::move(out);
}

Poly Poly::constant(std::size_t nvars, const Scalar& c) {
  Poly p(nvars);
  if (!c.is_zero()) p.terms_.push_back({Monomial(nvars), c});
  return p;
}

Poly Poly::monomial(const Monomial& m, const Scalar& c) {
  Poly p(m.size());
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i) {
  return monomial(Monomial::variable(nvars, i));
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.is_one());
}

long Poly::degree() const {
  long d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mon.degree());
  return d;
}

long Poly::degree_prefix(std::size_t k) const {
  long d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mon.degree_prefix(k));
  return d;
}

bool Poly::is_homogeneous() const { return is_homogeneous_prefix(n_); }

bool Poly::is_homogeneous_prefix(std::size_t k) const {
  if (terms_.empty()) return true;
  long d = terms_[0].mon.degree_prefix(k);
  for (const auto& t : terms_) {
    if (t.mon.degree_prefix(k) != d) return false;
  }
  return true;
}

const Term& Poly::leading(const MonomialOrder& order) const {
  if (terms_.empty()) throw InternalError("leading term of the zero polynomial");
  const Term* best = &terms_[0];
  for (const auto& t : terms_) {
    if (order.compare(t.mon, best->mon) > 0) best = &t;
  }
  return *best;
}

std::vector<Term> Poly::sorted_terms(const MonomialOrder& order) const {
  std::vector<Term> out = terms_;
  std::sort(out.begin(), out.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.mon, b.mon) > 0; });
  return out;
}

Scalar Poly::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.mon == m) return t.coef;
  }
  return Scalar(0);
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.n_ != n_ && !o.is_zero() && !is_zero()) throw InputError("adding polynomials from different rings");
  if (is_zero()) {
    *this = o;
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && storage_greater(terms_[i], o.terms_[j]))) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || storage_greater(o.terms_[j], terms_[i])) {
      out.push_back(o.terms_[j++]);
    } else {
      Scalar c = terms_[i].coef + o.terms_[j].coef;
      if (!c.is_zero()) out.push_back({terms_[i].mon, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(std::max(a.n_, b.n_));
  if (a.n_ != b.n_) throw InputError("multiplying polynomials from different rings");
  std::unordered_map<Monomial, Scalar, MonomialHash> acc;
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      auto [it, fresh] = acc.try_emplace(s.mon * t.mon, s.coef * t.coef);
      if (!fresh) it->second += s.coef * t.coef;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) terms.push_back({m, std::move(c)});
  }
  return Poly(a.n_, std::move(terms));
}

Poly Poly::scaled(const Scalar& c) const {
  if (c.is_zero()) return Poly(n_);
  Poly r = *this;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

Poly Poly::times_monomial(const Monomial& m, const Scalar& c) const {
  if (c.is_zero()) return Poly(n_);
  Poly r = *this;
  for (auto& t : r.terms_) {
    t.mon = t.mon * m;
    t.coef *= c;
  }
  return r;  // multiplication by a monomial preserves grevlex order
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.n_ == b.n_ && a.terms_ == b.terms_;
}

Poly Poly::monic(const MonomialOrder& order) const {
  if (is_zero()) return *this;
  return scaled(leading(order).coef.inverse());
}

Poly Poly::coerced(const Field& f) const {
  Poly r(n_);
  for (const auto& t : terms_) r.terms_.push_back({t.mon, f.coerce(t.coef)});
  r.normalize();
  return r;
}

Poly Poly::substitute(std::size_t i, const Scalar& value) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Scalar c = t.coef;
    for (std::uint32_t k = 0; k < t.mon[i]; ++k) c *= value;
    Monomial m = t.mon;
    m.set(i, 0);
    out.push_back({m, std::move(c)});
  }
  return Poly(n_, std::move(out));
}

Poly Poly::drop_last(const Scalar& value) const {
  if (n_ == 0) throw InputError("no variable to drop");
  Poly s = substitute(n_ - 1, value);
  std::vector<Term> out;
  for (const auto& t : s.terms_) {
    Monomial m(n_ - 1);
    for (std::size_t k = 0; k + 1 < n_; ++k) m.set(k, t.mon[k]);
    out.push_back({m, t.coef});
  }
  return Poly(n_ - 1, std::move(out));
}

Poly Poly::add_variable() const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Monomial m(n_ + 1);
    for (std::size_t k = 0; k < n_; ++k) m.set(k, t.mon[k]);
    out.push_back({m, t.coef});
  }
  return Poly(n_ + 1, std::move(out));
}

Poly Poly::permuted(const std::vector<std::size_t>& perm, std::size_t new_nvars) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Monomial m(new_nvars);
    for (std::size_t k = 0; k < n_; ++k) {
      if (t.mon[k] == 0) continue;
      m.set(perm.at(k), t.mon[k]);
    }
    out.push_back({m, t.coef});
  }
  return Poly(new_nvars, std::move(out));
}

UniPoly Poly::t_coefficient(const Monomial& x_part) const {
  std::vector<Scalar> c;
  for (const auto& t : terms_) {
    bool match = true;
    for (std::size_t k = 0; k + 1 < n_; ++k) {
      if (t.mon[k] != x_part[k]) {
        match = false;
        break;
      }
    }
    if (!match) continue;
    std::size_t e = t.mon[n_ - 1];
    if (c.size() <= e) c.resize(e + 1);
    c[e] += t.coef;
  }
  return UniPoly(std::move(c));
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    std::string c = t.coef.to_string();
    bool neg = t.coef.is_rational() && c[0] == '-';
    if (neg) c = c.substr(1);
    if (i == 0) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    bool unit = c == "1";
    if (t.mon.is_one()) {
      out += c;
    } else {
      if (!unit) out += c + "*";
      out += t.mon.to_string(names);
    }
  }
  return out;
}

std::string Poly::to_string(bool family) const {
  if (family && n_ == 0) throw InputError("family polynomial without a parameter");
  return to_string(family ? variable_names(n_ - 1, true) : variable_names(n_));
}

long weight_degree(const WeightVector& w, const Poly& f) {
  if (f.is_zero()) throw InputError("omega-degree of the zero polynomial");
  long d = weight_degree(w, f.terms()[0].mon);
  for (const auto& t : f.terms()) d = std::max(d, weight_degree(w, t.mon));
  return d;
}

Poly omega_initial(const WeightVector& w, const Poly& f) {
  if (f.is_zero()) return f;
  long d = weight_degree(w, f);
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    if (weight_degree(w, t.mon) == d) out.push_back(t);
  }
  return Poly(f.nvars(), std::move(out));
}

Poly omega_homogenize(const WeightVector& w, const Poly& f) {
  std::size_t n = f.nvars();
  if (f.is_zero()) return Poly(n + 1);
  long d = weight_degree(w, f);
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    Monomial m(n + 1);
    for (std::size_t k = 0; k < n; ++k) m.set(k, t.mon[k]);
    m.set(n, static_cast<std::uint32_t>(d - weight_degree(w, t.mon)));
    out.push_back({m, t.coef});
  }
  return Poly(n + 1, std::move(out));
}

}  // namespace fibfull
