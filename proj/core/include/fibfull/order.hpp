#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "fibfull/monomial.hpp"

namespace fibfull {

/// Strictly positive integral weight vector omega.
class WeightVector {
 public:
  WeightVector() = default;
  /// Throws InputError if any entry is < 1.
  explicit WeightVector(std::vector<long> w);
  static WeightVector ones(std::size_t n) { return WeightVector(std::vector<long>(n, 1)); }

  std::size_t size() const { return w_.size(); }
  long operator[](std::size_t i) const { return w_[i]; }
  const std::vector<long>& values() const { return w_; }
  std::string to_string() const;  // "8,4,2,1"

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<long> w_;
};

/// omega-degree mu(m) . omega.
long weight_degree(const WeightVector& w, const Monomial& m);

/// A monomial order on k[x_0, ..., x_{n-1}].
///
/// Lex and grevlex use x_0 > x_1 > ... . Weight orders compare omega-degree
/// first and break ties with a nested order (grevlex by default).
/// Elimination orders compare the degree in a block of variables first, and
/// are used internally for intersections and elimination.
class MonomialOrder {
 public:
  enum class Kind { Lex, GrevLex, Weight, Elimination };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
  /// Grevlex; when last_var is given, that variable is treated as the
  /// smallest one in the reverse-lexicographic tie break.
  static MonomialOrder grevlex(long last_var = -1);
  static MonomialOrder weight(WeightVector w, const MonomialOrder& tiebreak = grevlex());
  /// Variables with mask[i] = true are eliminated.
  static MonomialOrder elimination(std::vector<bool> mask);

  Kind kind() const { return kind_; }
  const WeightVector& weights() const { return weights_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// Canonical textual name, used as cache key and in reports
  /// ("lex", "grevlex", "weight(8,4,2,1;grevlex)").
  std::string name() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.name() == b.name();
  }

 private:
  explicit MonomialOrder(Kind k) : kind_(k) {}
  Kind kind_;
  long last_var_ = -1;
  WeightVector weights_;
  std::shared_ptr<const MonomialOrder> tiebreak_;
  std::vector<bool> mask_;
};

/// Parses "lex", "grevlex", or "weight w0,..,wN" (tie break grevlex).
MonomialOrder parse_order(const std::string& text, std::size_t nvars);

}  // namespace fibfull
