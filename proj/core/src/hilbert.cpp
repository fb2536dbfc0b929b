#include "fibfull/hilbert.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "fibfull/error.hpp"

namespace fibfull {

mpz_class binom_poly(const mpz_class& x, long k) {
  if (k < 0) return 0;
  mpz_class num = 1, den = 1;
  for (long j = 0; j < k; ++j) {
    num *= x - j;
    den *= j + 1;
  }
  return num / den;
}

mpz_class binom_count(const mpz_class& x, long k) {
  if (k < 0 || x < k) return 0;
  return binom_poly(x, k);
}

// ---------------------------------------------------------------- NumericalPolynomial

NumericalPolynomial::NumericalPolynomial(std::vector<mpz_class> newton) : b_(std::move(newton)) {
  trim();
}

void NumericalPolynomial::trim() {
  while (!b_.empty() && b_.back() == 0) b_.pop_back();
}

NumericalPolynomial NumericalPolynomial::constant(long c) {
  return NumericalPolynomial(std::vector<mpz_class>{mpz_class(c)});
}

NumericalPolynomial NumericalPolynomial::from_values(long start,
                                                     const std::vector<mpz_class>& values) {
  // Forward differences at start give P(m) = sum_i d_i C(m - start, i).
  std::vector<mpz_class> d = values;
  std::vector<mpz_class> diffs;
  while (!d.empty()) {
    diffs.push_back(d[0]);
    for (std::size_t i = 0; i + 1 < d.size(); ++i) d[i] = d[i + 1] - d[i];
    d.pop_back();
  }
  // Re-expand around 0.
  std::vector<mpz_class> at_zero(diffs.size());
  for (std::size_t m = 0; m < diffs.size(); ++m) {
    mpz_class v = 0;
    for (std::size_t i = 0; i < diffs.size(); ++i) {
      v += diffs[i] * binom_poly(mpz_class(static_cast<long>(m) - start), static_cast<long>(i));
    }
    at_zero[m] = v;
  }
  std::vector<mpz_class> b;
  while (!at_zero.empty()) {
    b.push_back(at_zero[0]);
    for (std::size_t i = 0; i + 1 < at_zero.size(); ++i) at_zero[i] = at_zero[i + 1] - at_zero[i];
    at_zero.pop_back();
  }
  return NumericalPolynomial(std::move(b));
}

mpz_class NumericalPolynomial::operator()(long m) const {
  mpz_class v = 0;
  for (std::size_t i = 0; i < b_.size(); ++i) v += b_[i] * binom_poly(mpz_class(m), static_cast<long>(i));
  return v;
}

std::vector<mpq_class> NumericalPolynomial::coefficients() const {
  std::vector<mpq_class> out(b_.size());
  // basis holds the monomial coefficients of C(m, i), built incrementally.
  std::vector<mpq_class> basis{mpq_class(1)};
  for (std::size_t i = 0; i < b_.size(); ++i) {
    if (i > 0) {
      // C(m, i) = C(m, i-1) * (m - i + 1) / i
      std::vector<mpq_class> next(basis.size() + 1);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * static_cast<long>(i - 1);
      }
      for (auto& c : next) c /= static_cast<long>(i);
      basis = std::move(next);
    }
    for (std::size_t k = 0; k < basis.size(); ++k) out[k] += basis[k] * b_[i];
  }
  for (auto& c : out) c.canonicalize();
  return out;
}

NumericalPolynomial NumericalPolynomial::composed(int sign, long offset) const {
  if (b_.empty()) return *this;
  std::vector<mpz_class> vals;
  for (long m = 0; m < static_cast<long>(b_.size()); ++m) vals.push_back((*this)(sign * m + offset));
  return from_values(0, vals);
}

NumericalPolynomial operator+(const NumericalPolynomial& a, const NumericalPolynomial& b) {
  std::vector<mpz_class> r(std::max(a.b_.size(), b.b_.size()));
  for (std::size_t i = 0; i < a.b_.size(); ++i) r[i] += a.b_[i];
  for (std::size_t i = 0; i < b.b_.size(); ++i) r[i] += b.b_[i];
  return NumericalPolynomial(std::move(r));
}

NumericalPolynomial operator-(const NumericalPolynomial& a, const NumericalPolynomial& b) {
  return a + b.scaled(-1);
}

NumericalPolynomial NumericalPolynomial::scaled(long c) const {
  std::vector<mpz_class> r = b_;
  for (auto& x : r) x *= c;
  return NumericalPolynomial(std::move(r));
}

std::string NumericalPolynomial::to_string(const std::string& var) const {
  auto c = coefficients();
  std::string out;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    mpq_class a = abs(c[k]);
    bool neg = c[k] < 0;
    if (!out.empty()) {
      out += neg ? "-" : "+";
    } else if (neg) {
      out += "-";
    }
    if (k == 0) {
      out += a.get_str();
      continue;
    }
    if (a != 1) out += a.get_str() + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------- HilbertSeries

HilbertSeries::HilbertSeries(std::size_t nvars, long low, std::vector<mpz_class> num)
    : n_(nvars), low_(low), num_(std::move(num)) {
  trim();
}

void HilbertSeries::trim() {
  while (!num_.empty() && num_.back() == 0) num_.pop_back();
  std::size_t lead = 0;
  while (lead < num_.size() && num_[lead] == 0) ++lead;
  if (lead > 0) {
    num_.erase(num_.begin(), num_.begin() + static_cast<long>(lead));
    low_ += static_cast<long>(lead);
  }
  if (num_.empty()) low_ = 0;
}

mpz_class HilbertSeries::value(long nu) const {
  mpz_class v = 0;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    long k = low_ + static_cast<long>(i);
    if (n_ == 0) {
      if (k == nu) v += num_[i];
      continue;
    }
    v += num_[i] * binom_count(mpz_class(nu - k + static_cast<long>(n_) - 1), static_cast<long>(n_) - 1);
  }
  return v;
}

long HilbertSeries::stable_from() const {
  if (num_.empty()) return 0;
  long high = low_ + static_cast<long>(num_.size()) - 1;
  return high - static_cast<long>(n_) + 1;
}

NumericalPolynomial HilbertSeries::polynomial() const {
  if (num_.empty() || n_ == 0) return NumericalPolynomial();
  long s = stable_from();
  std::vector<mpz_class> vals;
  for (long m = s; m < s + static_cast<long>(n_); ++m) vals.push_back(value(m));
  return NumericalPolynomial::from_values(s, vals);
}

long HilbertSeries::dimension() const {
  if (num_.empty()) return -1;
  NumericalPolynomial p = polynomial();
  return p.is_zero() ? 0 : p.degree() + 1;
}

HilbertSeries HilbertSeries::shifted(long d) const {
  HilbertSeries r = *this;
  if (!r.num_.empty()) r.low_ += d;
  return r;
}

HilbertSeries operator+(const HilbertSeries& a, const HilbertSeries& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.n_ != b.n_) throw InputError("adding Hilbert series over different rings");
  long low = std::min(a.low_, b.low_);
  long high = std::max(a.low_ + static_cast<long>(a.num_.size()), b.low_ + static_cast<long>(b.num_.size()));
  std::vector<mpz_class> num(static_cast<std::size_t>(high - low));
  for (std::size_t i = 0; i < a.num_.size(); ++i) num[static_cast<std::size_t>(a.low_ - low) + i] += a.num_[i];
  for (std::size_t i = 0; i < b.num_.size(); ++i) num[static_cast<std::size_t>(b.low_ - low) + i] += b.num_[i];
  return HilbertSeries(a.n_, low, std::move(num));
}

HilbertSeries operator-(const HilbertSeries& a, const HilbertSeries& b) {
  HilbertSeries nb = b;
  for (auto& c : nb.num_) c = -c;
  if (a.is_zero()) return nb;
  return a + nb;
}

std::string HilbertSeries::numerator_string() const {
  if (num_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    long k = low_ + static_cast<long>(i);
    mpz_class a = abs(num_[i]);
    if (!out.empty() || num_[i] < 0) out += num_[i] < 0 ? "-" : "+";
    if (k == 0) {
      out += a.get_str();
      continue;
    }
    if (a != 1) out += a.get_str() + "*";
    out += "T";
    if (k != 1) out += "^" + std::to_string(k);
  }
  return out;
}

// ---------------------------------------------------------------- monomial ideals

namespace {

using Numerator = std::vector<mpz_class>;  // coefficients from T^0

Numerator mul_one_minus(const Numerator& a, long d) {
  Numerator r(a.size() + static_cast<std::size_t>(d));
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] += a[i];
    r[i + static_cast<std::size_t>(d)] -= a[i];
  }
  return r;
}

std::string memo_key(const std::vector<Monomial>& gens) {
  std::string k;
  for (const auto& m : gens) {
    for (auto e : m.exponents()) k += std::to_string(e) + ",";
    k += ";";
  }
  return k;
}

class NumeratorSolver {
 public:
  explicit NumeratorSolver(std::size_t n) : n_(n) {}

  Numerator solve(const std::vector<Monomial>& gens_in) {
    MonomialIdeal J(n_, gens_in);
    const auto& gens = J.generators();
    if (gens.empty()) return {1};
    if (J.is_unit()) return {};
    std::string key = memo_key(gens);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    Numerator result;
    // Pure powers (and more generally pairwise coprime generators) factor.
    bool coprime = true;
    for (std::size_t a = 0; a < gens.size() && coprime; ++a)
      for (std::size_t b = a + 1; b < gens.size(); ++b)
        if (!gens[a].coprime(gens[b])) {
          coprime = false;
          break;
        }
    if (coprime) {
      result = {1};
      for (const auto& g : gens) result = mul_one_minus(result, g.degree());
    } else {
      // Pivot x_var^e on the variable occurring in the most mixed generators,
      // with e the median of its exponents there; then p is not in J and
      // both J + (p) and J : p strictly grow.
      auto mixed = [](const Monomial& g) {
        int support = 0;
        for (auto x : g.exponents()) support += x > 0;
        return support > 1;
      };
      std::vector<long> count(n_, 0);
      for (const auto& g : gens)
        if (mixed(g))
          for (std::size_t i = 0; i < n_; ++i)
            if (g[i] > 0) ++count[i];
      std::size_t var = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
      std::vector<std::uint32_t> exps;
      for (const auto& g : gens)
        if (mixed(g) && g[var] > 0) exps.push_back(g[var]);
      std::sort(exps.begin(), exps.end());
      std::uint32_t e = exps[(exps.size() - 1) / 2];
      Monomial p = Monomial::variable(n_, var, e);

      std::vector<Monomial> with_p = gens;
      with_p.push_back(p);
      std::vector<Monomial> quot;
      for (const auto& g : gens) {
        Monomial q = g;
        q.set(var, g[var] > e ? g[var] - e : 0);
        quot.push_back(q);
      }
      Numerator a = solve(with_p);
      Numerator b = solve(quot);
      result.assign(std::max(a.size(), b.size() + e), 0);
      for (std::size_t i = 0; i < a.size(); ++i) result[i] += a[i];
      for (std::size_t i = 0; i < b.size(); ++i) result[i + e] += b[i];
      while (!result.empty() && result.back() == 0) result.pop_back();
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  std::size_t n_;
  std::map<std::string, Numerator> memo_;
};

}  // namespace

HilbertSeries hilbert_series(const MonomialIdeal& J) {
  NumeratorSolver solver(J.nvars());
  return HilbertSeries(J.nvars(), 0, solver.solve(J.generators()));
}

HilbertSeries hilbert_series(const Ideal& I) {
  if (!I.is_homogeneous()) throw InputError("Hilbert series requires a homogeneous ideal");
  return hilbert_series(initial_ideal(I, MonomialOrder::grevlex()));
}

mpz_class hilbert_function(const MonomialIdeal& J, long nu) {
  if (nu < 0) return 0;
  return hilbert_series(J).value(nu);
}

mpz_class hilbert_function(const Ideal& I, long nu) {
  if (nu < 0) return 0;
  return hilbert_series(I).value(nu);
}

long count_standard_monomials(const MonomialIdeal& J, long nu) {
  long c = 0;
  for (const auto& m : monomials_of_degree(J.nvars(), nu)) {
    if (!J.contains(m)) ++c;
  }
  return c;
}

NumericalPolynomial hilbert_polynomial(const Ideal& I) { return hilbert_series(I).polynomial(); }

// ---------------------------------------------------------------- partitions

IntegerPartition::IntegerPartition(std::vector<long> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InputError("a partition needs at least one part");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw InputError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InputError("partition parts must be weakly decreasing");
  }
}

IntegerPartition IntegerPartition::parse(const std::string& text) {
  std::vector<long> parts;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stol(tok, &used));
      if (tok.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw InputError("malformed partition entry '" + tok + "'");
    }
  }
  return IntegerPartition(std::move(parts));
}

std::vector<IntegerPartition> IntegerPartition::enumerate(long max_size, long max_part) {
  std::vector<IntegerPartition> out;
  std::vector<long> cur;
  std::function<void(long, long)> rec = [&](long left, long cap) {
    if (!cur.empty()) out.emplace_back(cur);
    for (long p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(max_size, max_part);
  return out;
}

long IntegerPartition::size() const {
  long s = 0;
  for (long p : parts_) s += p;
  return s;
}

std::vector<long> IntegerPartition::multiplicities(long r) const {
  std::vector<long> a(static_cast<std::size_t>(std::max<long>(r, 0)), 0);
  for (long p : parts_) {
    if (p <= r) ++a[static_cast<std::size_t>(p - 1)];
  }
  return a;
}

std::string IntegerPartition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s;
}

NumericalPolynomial partition_polynomial(const IntegerPartition& lambda) {
  long d = lambda.largest() - 1;
  std::vector<mpz_class> vals;
  for (long m = 0; m <= d; ++m) {
    mpz_class v = 0;
    const auto& parts = lambda.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      long li = parts[i];
      v += binom_poly(mpz_class(m + li - static_cast<long>(i + 1)), li - 1);
    }
    vals.push_back(v);
  }
  return NumericalPolynomial::from_values(0, vals);
}

std::optional<NumericalPolynomial> euler_polynomial(long nu_min,
                                                    const std::vector<std::vector<mpz_class>>& h) {
  if (h.empty()) throw InputError("empty cohomology table");
  std::size_t len = h[0].size();
  for (const auto& row : h) {
    if (row.size() != len) throw InputError("inconsistent window in cohomology table");
  }
  std::size_t pts = h.size();  // degree <= r = h.size() - 1
  if (len < pts) throw InputError("window too narrow to determine the Euler polynomial");
  std::vector<mpz_class> chi(len, 0);
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t k = 0; k < len; ++k) chi[k] += (i % 2 == 0 ? 1 : -1) * h[i][k];
  std::vector<mpz_class> tail(chi.end() - static_cast<long>(pts), chi.end());
  auto p = NumericalPolynomial::from_values(nu_min + static_cast<long>(len - pts), tail);
  for (std::size_t k = 0; k < len; ++k) {
    if (p(nu_min + static_cast<long>(k)) != chi[k]) return std::nullopt;
  }
  return p;
}

}  // namespace fibfull
