#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace fibfull {

/// Exponent vector x_0^{e_0} ... x_{n-1}^{e_{n-1}} with a fixed number of
/// variables. Storage is inline; rings are limited to kMaxVariables.
class Monomial {
 public:
  static constexpr std::size_t kMaxVariables = 16;

  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<std::uint32_t> exps);
  explicit Monomial(std::span<const std::uint32_t> exps);
  static Monomial variable(std::size_t nvars, std::size_t i, std::uint32_t power = 1);

  std::size_t size() const { return n_; }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, std::uint32_t v) { e_[i] = v; }
  std::span<const std::uint32_t> exponents() const { return {e_.data(), n_}; }

  /// Total degree over all variables.
  long degree() const;
  /// Degree restricted to the first k variables.
  long degree_prefix(std::size_t k) const;
  /// Weighted degree mu(m) . w.
  long weighted_degree(std::span<const long> w) const;

  bool is_one() const;
  bool divides(const Monomial& o) const;
  bool is_squarefree() const;
  bool coprime(const Monomial& o) const;

  /// Throws std::overflow_error if an exponent would exceed 2^32 - 1.
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; precondition b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b);
  friend bool operator<(const Monomial& a, const Monomial& b);  // storage order only

  std::size_t hash() const;
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::array<std::uint32_t, kMaxVariables> e_{};
  std::uint32_t n_ = 0;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

/// All monomials of total degree d in n variables, in lex-descending order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, long d);

/// Number of monomials of degree d in n variables (0 for d < 0).
long count_monomials(std::size_t nvars, long d);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Default variable names x0..x{n-1}, optionally followed by t.
std::vector<std::string> variable_names(std::size_t nx, bool with_t = false);

}  // namespace fibfull
