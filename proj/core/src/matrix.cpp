#include "fibfull/matrix.hpp"

#include <algorithm>
#include <map>

namespace fibfull {

// ---------------------------------------------------------------- fields

RrefResult rref(const ScalarMatrix& m) {
  RrefResult res;
  res.reduced = m;
  ScalarMatrix& a = res.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    a.swap_rows(piv, row);
    Scalar inv = a(row, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      Scalar f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
    }
    res.pivots.push_back(col);
    ++row;
  }
  res.rank = row;
  return res;
}

namespace {

// r <- r - f * p, both sorted sparse rows.
SparseRow axpy(const SparseRow& r, const Scalar& f, const SparseRow& p) {
  SparseRow out;
  out.reserve(r.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.push_back(r[i++]);
    } else if (i == r.size() || p[j].first < r[i].first) {
      out.emplace_back(p[j].first, -(f * p[j].second));
      ++j;
    } else {
      Scalar v = r[i].second - f * p[j].second;
      if (!v.is_zero()) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::size_t sparse_rank(std::vector<SparseRow> rows) {
  std::sort(rows.begin(), rows.end(),
            [](const SparseRow& a, const SparseRow& b) { return a.size() < b.size(); });
  std::map<std::uint32_t, SparseRow> pivots;  // leading column -> monic row
  for (auto& row : rows) {
    SparseRow r = std::move(row);
    while (!r.empty()) {
      auto it = pivots.find(r.front().first);
      if (it == pivots.end()) break;
      Scalar f = r.front().second;
      r = axpy(r, f, it->second);
    }
    if (r.empty()) continue;
    Scalar inv = r.front().second.inverse();
    for (auto& e : r) e.second *= inv;
    std::uint32_t lead = r.front().first;
    pivots.emplace(lead, std::move(r));
  }
  return pivots.size();
}

// ---------------------------------------------------------------- k[t]

namespace {

struct SmithWork {
  PolyTMatrix a;
  std::optional<PolyTMatrix> left, right;

  void swap_rows(std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    if (left) left->swap_rows(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    if (right) right->swap_cols(i, j);
  }
  // row_i -= f * row_k
  void row_sub(std::size_t i, std::size_t k, const UniPoly& f) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (!a(k, c).is_zero()) a(i, c) -= f * a(k, c);
    }
    if (left) {
      for (std::size_t c = 0; c < left->cols(); ++c) {
        if (!(*left)(k, c).is_zero()) (*left)(i, c) -= f * (*left)(k, c);
      }
    }
  }
  void col_sub(std::size_t j, std::size_t k, const UniPoly& f) {
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (!a(r, k).is_zero()) a(r, j) -= f * a(r, k);
    }
    if (right) {
      for (std::size_t r = 0; r < right->rows(); ++r) {
        if (!(*right)(r, k).is_zero()) (*right)(r, j) -= f * (*right)(r, k);
      }
    }
  }
  void row_scale(std::size_t i, const Scalar& s) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = a(i, c) * UniPoly(s);
    if (left) {
      for (std::size_t c = 0; c < left->cols(); ++c) (*left)(i, c) = (*left)(i, c) * UniPoly(s);
    }
  }
};

}  // namespace

SmithResult smith_normal_form(const PolyTMatrix& m, bool want_transforms) {
  SmithWork w{m, std::nullopt, std::nullopt};
  if (want_transforms) {
    w.left = PolyTMatrix::identity(m.rows());
    w.right = PolyTMatrix::identity(m.cols());
  }
  PolyTMatrix& a = w.a;
  const std::size_t n = std::min(a.rows(), a.cols());
  std::size_t k = 0;
  for (; k < n; ++k) {
    // Minimal-degree pivot in the trailing block.
    long best = -1;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = k; i < a.rows(); ++i)
      for (std::size_t j = k; j < a.cols(); ++j) {
        const UniPoly& e = a(i, j);
        if (!e.is_zero() && (best < 0 || e.degree() < best)) {
          best = e.degree();
          bi = i;
          bj = j;
        }
      }
    if (best < 0) break;
    w.swap_rows(k, bi);
    w.swap_cols(k, bj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = k + 1; i < a.rows(); ++i) {
        if (a(i, k).is_zero()) continue;
        auto [q, r] = a(i, k).divmod(a(k, k));
        w.row_sub(i, k, q);
        if (!r.is_zero()) clean = false;
      }
      for (std::size_t j = k + 1; j < a.cols(); ++j) {
        if (a(k, j).is_zero()) continue;
        auto [q, r] = a(k, j).divmod(a(k, k));
        w.col_sub(j, k, q);
        if (!r.is_zero()) clean = false;
      }
      if (!clean) {
        // A remainder of smaller degree appeared in row or column k.
        long d = a(k, k).degree();
        std::size_t pi = k, pj = k;
        for (std::size_t i = k + 1; i < a.rows(); ++i)
          if (!a(i, k).is_zero() && a(i, k).degree() < d) d = a(i, k).degree(), pi = i, pj = k;
        for (std::size_t j = k + 1; j < a.cols(); ++j)
          if (!a(k, j).is_zero() && a(k, j).degree() < d) d = a(k, j).degree(), pi = k, pj = j;
        w.swap_rows(k, pi);
        w.swap_cols(k, pj);
        continue;
      }
      // Row and column k are clear; enforce divisibility of the trailing block.
      bool divisible = true;
      for (std::size_t i = k + 1; i < a.rows() && divisible; ++i)
        for (std::size_t j = k + 1; j < a.cols(); ++j) {
          if (!a(i, j).is_zero() && !a(k, k).divides(a(i, j))) {
            w.row_sub(k, i, UniPoly(Scalar(-1)));  // row_k += row_i
            divisible = false;
            break;
          }
        }
      if (divisible) break;
    }
    w.row_scale(k, a(k, k).leading().inverse());
  }

  SmithResult res;
  for (std::size_t i = 0; i < k; ++i) res.invariant_factors.push_back(a(i, i));
  res.left = std::move(w.left);
  res.right = std::move(w.right);
  return res;
}

std::size_t specialized_rank(const PolyTMatrix& m, const Scalar& alpha) {
  ScalarMatrix s(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s(i, j) = m(i, j).evaluate(alpha);
  return rref(s).rank;
}

// ---------------------------------------------------------------- k[t]/(t^q)

namespace {

using Row = std::vector<UniPoly>;

bool row_zero(const Row& r) {
  return std::all_of(r.begin(), r.end(), [](const UniPoly& e) { return e.is_zero(); });
}

// r <- r - f * p (mod t^q)
void row_axpy(Row& r, const UniPoly& f, const Row& p, long q) {
  for (std::size_t c = 0; c < r.size(); ++c) {
    if (p[c].is_zero()) continue;
    r[c] = (r[c] - (f * p[c]).truncated(q)).truncated(q);
  }
}

void row_mul(Row& r, const UniPoly& f, long q) {
  for (auto& e : r) e = (e * f).truncated(q);
}

}  // namespace

long HowellForm::length() const {
  long len = 0;
  for (long v : pivot_vals) len += q - v;
  return len;
}

HowellForm howell_reduce(const PolyTMatrix& m, long q) {
  const std::size_t ncols = m.cols();
  std::vector<Row> pool;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Row r(ncols);
    for (std::size_t c = 0; c < ncols; ++c) r[c] = m(i, c).truncated(q);
    if (!row_zero(r)) pool.push_back(std::move(r));
  }

  HowellForm out;
  out.q = q;
  std::vector<Row> echelon;
  for (std::size_t c = 0; c < ncols && !pool.empty(); ++c) {
    long best = -1;
    std::size_t bi = 0;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      long v = pool[i][c].valuation();
      if (v >= 0 && (best < 0 || v < best)) best = v, bi = i;
    }
    if (best < 0) continue;
    Row piv = std::move(pool[bi]);
    pool.erase(pool.begin() + static_cast<long>(bi));
    // Normalise the pivot entry to exactly t^best.
    UniPoly unit = piv[c].shifted_down(best);
    row_mul(piv, inverse_mod_t_power(unit, q - best), q);

    for (auto& r : pool) {
      if (r[c].is_zero()) continue;
      row_axpy(r, r[c].shifted_down(best), piv, q);
    }
    // Howell closure: t^{q-v} * pivot row vanishes at column c.
    Row ann = piv;
    row_mul(ann, UniPoly::t_power(q - best), q);
    if (!row_zero(ann)) pool.push_back(std::move(ann));
    pool.erase(std::remove_if(pool.begin(), pool.end(), row_zero), pool.end());

    echelon.push_back(std::move(piv));
    out.pivot_cols.push_back(c);
    out.pivot_vals.push_back(best);
  }

  // Reduce entries above each pivot to degree < v.
  for (std::size_t i = 0; i < echelon.size(); ++i) {
    std::size_t c = out.pivot_cols[i];
    long v = out.pivot_vals[i];
    for (std::size_t j = 0; j < i; ++j) {
      UniPoly quo = echelon[j][c].shifted_down(v);
      if (!quo.is_zero()) row_axpy(echelon[j], quo, echelon[i], q);
    }
  }

  out.rows = PolyTMatrix(echelon.size(), ncols);
  for (std::size_t i = 0; i < echelon.size(); ++i)
    for (std::size_t c = 0; c < ncols; ++c) out.rows(i, c) = echelon[i][c];
  return out;
}

HowellForm howell_kernel(const PolyTMatrix& m, long q) {
  // Rows of [m^T | I]; rows of the Howell form vanishing on the first block
  // carry the kernel.
  const std::size_t n = m.cols(), k = m.rows();
  PolyTMatrix aug(n, k + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = m(j, i);
    aug(i, k + i) = UniPoly(Scalar(1));
  }
  HowellForm h = howell_reduce(aug, q);
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < h.pivot_cols.size(); ++i) {
    if (h.pivot_cols[i] >= k) keep.push_back(i);
  }
  PolyTMatrix ker(keep.size(), n);
  for (std::size_t r = 0; r < keep.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) ker(r, c) = h.rows(keep[r], k + c);
  return howell_reduce(ker, q);
}

HowellForm howell_sum(const HowellForm& a, const HowellForm& b) {
  const std::size_t ncols = std::max(a.rows.cols(), b.rows.cols());
  PolyTMatrix st(a.rows.rows() + b.rows.rows(), ncols);
  for (std::size_t i = 0; i < a.rows.rows(); ++i)
    for (std::size_t c = 0; c < a.rows.cols(); ++c) st(i, c) = a.rows(i, c);
  for (std::size_t i = 0; i < b.rows.rows(); ++i)
    for (std::size_t c = 0; c < b.rows.cols(); ++c) st(a.rows.rows() + i, c) = b.rows(i, c);
  return howell_reduce(st, std::max(a.q, b.q));
}

}  // namespace fibfull
