#include "fibfull/order.hpp"

#include <sstream>

#include "fibfull/error.hpp"

namespace fibfull {

WeightVector::WeightVector(std::vector<long> w) : w_(std::move(w)) {
  for (long x : w_) {
    if (x < 1) throw InputError("weight vectors must have entries >= 1");
  }
}

std::string WeightVector::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w_[i]);
  }
  return s;
}

long weight_degree(const WeightVector& w, const Monomial& m) {
  return m.weighted_degree(w.values());
}

MonomialOrder MonomialOrder::grevlex(long last_var) {
  MonomialOrder o(Kind::GrevLex);
  o.last_var_ = last_var;
  return o;
}

MonomialOrder MonomialOrder::weight(WeightVector w, const MonomialOrder& tiebreak) {
  MonomialOrder o(Kind::Weight);
  o.weights_ = std::move(w);
  o.tiebreak_ = std::make_shared<const MonomialOrder>(tiebreak);
  return o;
}

MonomialOrder MonomialOrder::elimination(std::vector<bool> mask) {
  MonomialOrder o(Kind::Elimination);
  o.mask_ = std::move(mask);
  return o;
}

namespace {

std::strong_ordering lex_cmp(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering revlex_tail(const Monomial& a, const Monomial& b, long last_var) {
  // The variable with the smaller exponent at the last differing position
  // (scanning from the designated smallest variable) gives the larger monomial.
  if (last_var >= 0) {
    auto i = static_cast<std::size_t>(last_var);
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  for (std::size_t i = a.size(); i-- > 0;) {
    if (static_cast<long>(i) == last_var) continue;
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size()) throw InputError("comparing monomials from different rings");
  switch (kind_) {
    case Kind::Lex:
      return lex_cmp(a, b);
    case Kind::GrevLex: {
      long da = a.degree(), db = b.degree();
      if (da != db) return da <=> db;
      return revlex_tail(a, b, last_var_);
    }
    case Kind::Weight: {
      long wa = a.weighted_degree(weights_.values());
      long wb = b.weighted_degree(weights_.values());
      if (wa != wb) return wa <=> wb;
      return tiebreak_->compare(a, b);
    }
    case Kind::Elimination: {
      long ea = 0, eb = 0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (i < mask_.size() && mask_[i]) {
          ea += a[i];
          eb += b[i];
        }
      }
      if (ea != eb) return ea <=> eb;
      long da = a.degree(), db = b.degree();
      if (da != db) return da <=> db;
      return revlex_tail(a, b, -1);
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::Lex:
      return "lex";
    case Kind::GrevLex:
      return last_var_ < 0 ? "grevlex" : "grevlex(last=" + std::to_string(last_var_) + ")";
    case Kind::Weight:
      return "weight(" + weights_.to_string() + ";" + tiebreak_->name() + ")";
    case Kind::Elimination: {
      std::string s = "elim(";
      for (bool b : mask_) s += b ? '1' : '0';
      return s + ")";
    }
  }
  return "?";
}

MonomialOrder parse_order(const std::string& text, std::size_t nvars) {
  std::istringstream in(text);
  std::string kind;
  in >> kind;
  if (kind == "lex") return MonomialOrder::lex();
  if (kind == "grevlex") return MonomialOrder::grevlex();
  if (kind == "weight") {
    std::string rest;
    std::getline(in, rest);
    std::vector<long> w;
    std::string tok;
    std::istringstream ws(rest);
    while (std::getline(ws, tok, ',')) {
      try {
        w.push_back(std::stol(tok));
      } catch (const std::exception&) {
        throw InputError("malformed weight entry '" + tok + "'");
      }
    }
    if (w.size() != nvars) {
      throw InputError("weight vector has " + std::to_string(w.size()) + " entries, expected " +
                       std::to_string(nvars));
    }
    return MonomialOrder::weight(WeightVector(std::move(w)));
  }
  throw InputError("unknown monomial order '" + text + "'");
}

}  // namespace fibfull
