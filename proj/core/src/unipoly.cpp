#include "fibfull/unipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace fibfull {

UniPoly::UniPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(const Scalar& c) {
  if (!c.is_zero()) c_.push_back(c);
}

UniPoly UniPoly::t_power(long e, const Scalar& c) {
  if (c.is_zero()) return {};
  std::vector<Scalar> v(static_cast<std::size_t>(e) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar UniPoly::coeff(long i) const {
  if (i < 0 || i >= static_cast<long>(c_.size())) return Scalar(0);
  return c_[static_cast<std::size_t>(i)];
}

Scalar UniPoly::leading() const { return c_.empty() ? Scalar(0) : c_.back(); }

long UniPoly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) return static_cast<long>(i);
  }
  return kZeroDegree;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(r));
}

bool operator==(const UniPoly& a, const UniPoly& b) {
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (!(a.c_[i] == b.c_[i])) return false;
  }
  return true;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw std::domain_error("UniPoly division by zero");
  if (degree() < d.degree()) return {UniPoly(), *this};
  std::vector<Scalar> rem = c_;
  std::vector<Scalar> quo(c_.size() - d.c_.size() + 1);
  Scalar inv = d.leading().inverse();
  for (long i = degree(); i >= d.degree(); --i) {
    const Scalar& top = rem[static_cast<std::size_t>(i)];
    if (top.is_zero()) continue;
    Scalar q = top * inv;
    long shift = i - d.degree();
    quo[static_cast<std::size_t>(shift)] = q;
    for (std::size_t j = 0; j < d.c_.size(); ++j) {
      rem[static_cast<std::size_t>(shift) + j] -= q * d.c_[j];
    }
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

bool UniPoly::divides(const UniPoly& f) const {
  if (is_zero()) return f.is_zero();
  return f.divmod(*this).second.is_zero();
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  Scalar inv = leading().inverse();
  UniPoly r = *this;
  for (auto& c : r.c_) c *= inv;
  return r;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Scalar> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Scalar(static_cast<long>(i));
  return UniPoly(std::move(r));
}

Scalar UniPoly::evaluate(const Scalar& a) const {
  Scalar acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * a + c_[i];
  return acc;
}

UniPoly UniPoly::truncated(long q) const {
  if (static_cast<long>(c_.size()) <= q) return *this;
  return UniPoly(std::vector<Scalar>(c_.begin(), c_.begin() + std::max(0L, q)));
}

UniPoly UniPoly::shifted_down(long k) const {
  if (k <= 0) return *this;
  if (static_cast<long>(c_.size()) <= k) return {};
  return UniPoly(std::vector<Scalar>(c_.begin() + k, c_.end()));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (long i = degree(); i >= 0; --i) {
    const Scalar& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs.erase(0, 1);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    if (i == 0) {
      out += cs;
      continue;
    }
    if (cs != "1") out += cs + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

UniPoly uni_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UniXgcd uni_xgcd(const UniPoly& a, const UniPoly& b) {
  UniPoly r0 = a, r1 = b;
  UniPoly s0(Scalar(1)), s1, u0, u1(Scalar(1));
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UniPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    UniPoly u2 = u0 - q * u1;
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  if (r0.is_zero()) return {r0, s0, u0};
  Scalar inv = r0.leading().inverse();
  return {r0 * UniPoly(inv), s0 * UniPoly(inv), u0 * UniPoly(inv)};
}

namespace {

std::uint32_t characteristic_of(const UniPoly& f) {
  for (const auto& c : f.coeffs()) {
    if (!c.is_rational()) return c.residue().modulus;
  }
  return 0;
}

}  // namespace

UniPoly squarefree_part(const UniPoly& f) {
  if (f.is_zero()) return {};
  if (f.degree() == 0) return UniPoly(Scalar(1));
  UniPoly fp = f.derivative();
  if (fp.is_zero()) {
    // Characteristic p and f = g(t^p); over F_p the p-th root of g(t^p) is g(t).
    std::uint32_t p = characteristic_of(f);
    std::vector<Scalar> g;
    for (long i = 0; i <= f.degree(); i += p) g.push_back(f.coeff(i));
    return squarefree_part(UniPoly(std::move(g)));
  }
  UniPoly g = uni_gcd(f, fp);
  UniPoly core = f.divmod(g).first.monic();
  if (g.degree() == 0) return core;
  // Factors whose multiplicity is divisible by p survive in g but not in f'.
  // Their radical is recovered recursively from the cofactor.
  UniPoly rest = squarefree_part(g);
  UniPoly missing = rest.divmod(uni_gcd(rest, core)).first;
  return (core * missing).monic();
}

std::vector<UniPoly> gcd_free_basis(const std::vector<UniPoly>& polys) {
  std::vector<UniPoly> basis;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    UniPoly r = squarefree_part(p);
    if (r.degree() > 0) basis.push_back(r);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < basis.size() && !changed; ++j) {
        UniPoly g = uni_gcd(basis[i], basis[j]);
        if (g.degree() <= 0) continue;
        UniPoly a = basis[i].divmod(g).first.monic();
        UniPoly b = basis[j].divmod(g).first.monic();
        basis.erase(basis.begin() + static_cast<long>(j));
        basis.erase(basis.begin() + static_cast<long>(i));
        for (auto* q : {&g, &a, &b}) {
          if (q->degree() > 0) basis.push_back(*q);
        }
        changed = true;
      }
    }
  }
  std::sort(basis.begin(), basis.end(), [](const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.to_string() < b.to_string();
  });
  return basis;
}

UniPoly inverse_mod_t_power(const UniPoly& u, long q) {
  if (u.coeff(0).is_zero()) throw std::domain_error("not a unit modulo t^q");
  // Newton-free recurrence: inv_k = -(1/u_0) * sum_{j=1..k} u_j inv_{k-j}.
  std::vector<Scalar> inv(static_cast<std::size_t>(q));
  Scalar u0inv = u.coeff(0).inverse();
  if (q > 0) inv[0] = u0inv;
  for (long k = 1; k < q; ++k) {
    Scalar acc(0);
    for (long j = 1; j <= k; ++j) acc += u.coeff(j) * inv[static_cast<std::size_t>(k - j)];
    inv[static_cast<std::size_t>(k)] = -acc * u0inv;
  }
  return UniPoly(std::move(inv));
}

}  // namespace fibfull
