#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fibfull/scalar.hpp"
#include "fibfull/unipoly.hpp"

namespace fibfull {

/// Dense rectangular matrix over a uniform base ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(Scalar(1));
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using ScalarMatrix = Matrix<Scalar>;
using PolyTMatrix = Matrix<UniPoly>;

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == T()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

// ---------------------------------------------------------------- fields

struct RrefResult {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  ScalarMatrix reduced;
};

/// Reduced row-echelon form over Q or F_p.
RrefResult rref(const ScalarMatrix& m);

/// Sparse row with strictly increasing column indices and nonzero entries.
using SparseRow = std::vector<std::pair<std::uint32_t, Scalar>>;

/// Rank of a sparse matrix given by rows; consumes the rows.
std::size_t sparse_rank(std::vector<SparseRow> rows);

// ---------------------------------------------------------------- k[t]

struct SmithResult {
  /// Nonzero invariant factors d_1 | d_2 | ... | d_s, each monic.
  std::vector<UniPoly> invariant_factors;
  /// Unimodular transforms with left * m * right = diag(d_i); present only
  /// when requested.
  std::optional<PolyTMatrix> left, right;
};

/// Smith normal form over k[t] by gcd-driven elimination with minimal-degree
/// pivots.
SmithResult smith_normal_form(const PolyTMatrix& m, bool want_transforms = false);

/// Rank of m after substituting t = alpha.
std::size_t specialized_rank(const PolyTMatrix& m, const Scalar& alpha);

// ---------------------------------------------------------------- k[t]/(t^q)

/// Howell form over the chain ring k[t]/(t^q): rows in echelon form, each
/// pivot a power t^v, entries above a pivot reduced to degree < v, and every
/// row multiple that kills a pivot lies in the span of the rows below it.
/// Canonical: equal row modules give equal forms.
struct HowellForm {
  long q = 1;
  PolyTMatrix rows;
  std::vector<std::size_t> pivot_cols;
  std::vector<long> pivot_vals;  // valuation v_i of each pivot

  /// Length (k-dimension) of the row module: sum of (q - v_i).
  long length() const;
};

HowellForm howell_reduce(const PolyTMatrix& m, long q);

/// Generators (as rows, in Howell form) of the right kernel {x : m x = 0}
/// over k[t]/(t^q).
HowellForm howell_kernel(const PolyTMatrix& m, long q);

/// Howell form of the row module spanned by the rows of both forms.
HowellForm howell_sum(const HowellForm& a, const HowellForm& b);

}  // namespace fibfull
