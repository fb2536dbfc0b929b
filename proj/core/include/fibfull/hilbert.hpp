#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "fibfull/groebner.hpp"

namespace fibfull {

/// Binomial C(x, k) as a polynomial in x: x(x-1)...(x-k+1)/k!. Defined for
/// every integer x; zero for k < 0.
mpz_class binom_poly(const mpz_class& x, long k);
/// Counting binomial: C(x, k) when 0 <= k <= x, else 0.
mpz_class binom_count(const mpz_class& x, long k);

/// Integer-valued polynomial P(m) = sum_i b_i C(m, i), stored in the
/// binomial (Newton) basis so integrality holds by construction.
class NumericalPolynomial {
 public:
  NumericalPolynomial() = default;
  explicit NumericalPolynomial(std::vector<mpz_class> newton);
  static NumericalPolynomial constant(long c);
  /// Interpolates values P(start), P(start+1), ... by the polynomial of
  /// degree < values.size().
  static NumericalPolynomial from_values(long start, const std::vector<mpz_class>& values);

  mpz_class operator()(long m) const;
  long degree() const { return static_cast<long>(b_.size()) - 1; }
  bool is_zero() const { return b_.empty(); }
  const std::vector<mpz_class>& newton() const { return b_; }
  /// Coefficients c_k of m^k, k = 0..degree.
  std::vector<mpq_class> coefficients() const;

  /// Q(m) = P(sign * m + offset), sign = +1 or -1.
  NumericalPolynomial composed(int sign, long offset) const;

  friend NumericalPolynomial operator+(const NumericalPolynomial& a, const NumericalPolynomial& b);
  friend NumericalPolynomial operator-(const NumericalPolynomial& a, const NumericalPolynomial& b);
  NumericalPolynomial scaled(long c) const;
  friend bool operator==(const NumericalPolynomial&, const NumericalPolynomial&) = default;

  /// "3*m+1", "1/2*m^2+3/2*m+1", "0".
  std::string to_string(const std::string& var = "m") const;

 private:
  void trim();
  std::vector<mpz_class> b_;
};

/// Hilbert series N(T) / (1 - T)^n of a graded module over k[x_0..x_{n-1}],
/// with a Laurent numerator N(T) = sum_k num[k - low] T^k.
class HilbertSeries {
 public:
  HilbertSeries() = default;
  HilbertSeries(std::size_t nvars, long low, std::vector<mpz_class> num);
  static HilbertSeries zero(std::size_t nvars) { return HilbertSeries(nvars, 0, {}); }

  std::size_t nvars() const { return n_; }
  long low() const { return low_; }
  const std::vector<mpz_class>& numerator() const { return num_; }
  bool is_zero() const { return num_.empty(); }

  /// Coefficient of T^nu in the expansion.
  mpz_class value(long nu) const;
  /// Polynomial agreeing with value(nu) for nu >= stable_from().
  NumericalPolynomial polynomial() const;
  /// Degree from which the Hilbert function equals the polynomial.
  long stable_from() const;
  /// Krull dimension: deg(polynomial) + 1; 0 for nonzero finite length; -1 for zero.
  long dimension() const;

  HilbertSeries shifted(long d) const;  // multiplies by T^d
  friend HilbertSeries operator+(const HilbertSeries& a, const HilbertSeries& b);
  friend HilbertSeries operator-(const HilbertSeries& a, const HilbertSeries& b);
  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;

  std::string numerator_string() const;

 private:
  void trim();
  std::size_t n_ = 0;
  long low_ = 0;
  std::vector<mpz_class> num_;
};

/// Hilbert series of S/J for a monomial ideal J, by pivot recursion.
HilbertSeries hilbert_series(const MonomialIdeal& J);
/// Hilbert series of S/I via in_grevlex(I).
HilbertSeries hilbert_series(const Ideal& I);

/// dim_k [S/I]_nu; 0 for nu < 0.
mpz_class hilbert_function(const MonomialIdeal& J, long nu);
mpz_class hilbert_function(const Ideal& I, long nu);
/// Oracle: enumerates the standard monomials of degree nu one by one.
long count_standard_monomials(const MonomialIdeal& J, long nu);

NumericalPolynomial hilbert_polynomial(const Ideal& I);

/// Integer partition lambda_1 >= ... >= lambda_k >= 1.
class IntegerPartition {
 public:
  /// Throws InputError unless weakly decreasing and positive.
  explicit IntegerPartition(std::vector<long> parts);
  /// Parses "2,2,2,1".
  static IntegerPartition parse(const std::string& text);
  /// All partitions of size at most max_size with parts at most max_part.
  static std::vector<IntegerPartition> enumerate(long max_size, long max_part);

  const std::vector<long>& parts() const { return parts_; }
  long size() const;
  long largest() const { return parts_.front(); }
  /// a_j = #{i : lambda_i = j}, for j = 1..r.
  std::vector<long> multiplicities(long r) const;
  std::string to_string() const;

 private:
  std::vector<long> parts_;
};

/// P_lambda(m) = sum_i C(m + lambda_i - i, lambda_i - 1).
NumericalPolynomial partition_polynomial(const IntegerPartition& lambda);

/// Alternating sum sum_i (-1)^i h_i over a window starting at nu_min, fitted
/// to a polynomial of degree <= h.size() - 1; nullopt when the sum is not
/// polynomial on the window. Throws InputError for ragged rows.
std::optional<NumericalPolynomial> euler_polynomial(long nu_min,
                                                    const std::vector<std::vector<mpz_class>>& h);

}  // namespace fibfull
