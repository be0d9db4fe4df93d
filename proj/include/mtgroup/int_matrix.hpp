#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mtgroup/errors.hpp"
#include "mtgroup/integer.hpp"

namespace mtg {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw InvalidInput("ragged matrix literal");
      for (long long x : r) data_.emplace_back(x);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Builds a matrix whose columns are the given vectors (all of length `rows`).
  static IntMatrix from_columns(std::size_t rows, const std::vector<std::vector<Integer>>& columns) {
    IntMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw InvalidInput("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Integer> column(std::size_t j) const {
    std::vector<Integer> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  std::vector<Integer> row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Rows [first, first + count).
  IntMatrix row_block(std::size_t first, std::size_t count) const {
    IntMatrix b(count, cols_);
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < cols_; ++j) b(i, j) = (*this)(first + i, j);
    return b;
  }

  /// Columns [first, first + count).
  IntMatrix column_block(std::size_t first, std::size_t count) const {
    IntMatrix b(rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < count; ++j) b(i, j) = (*this)(i, first + j);
    return b;
  }

  /// [this | other]
  IntMatrix hcat(const IntMatrix& other) const {
    if (other.rows_ != rows_) throw InvalidInput("hcat: row count mismatch");
    IntMatrix m(rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
      for (std::size_t j = 0; j < other.cols_; ++j) m(i, cols_ + j) = other(i, j);
    }
    return m;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
  }

  // Elementary operations. Each keeps the matrix over Z.
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
  }
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }
  void negate_col(std::size_t c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw InvalidInput("matrix product: dimension mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend std::vector<Integer> operator*(const IntMatrix& a, std::span<const Integer> x) {
    if (a.cols_ != x.size()) throw InvalidInput("matrix-vector product: dimension mismatch");
    std::vector<Integer> y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) y[i] += a(i, j) * x[j];
    return y;
  }

  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("matrix difference: shape mismatch");
    IntMatrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
    return c;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? "; " : "";
      for (std::size_t j = 0; j < cols_; ++j) s += (j ? " " : "") + (*this)(i, j).str();
    }
    return s + "]";
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Fraction-free (Bareiss) determinant of a square matrix.
inline Integer determinant(IntMatrix m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw InvalidInput("determinant of a non-square matrix");
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// U * A * V == S with U, V unimodular and S = diag(d_1, ..., d_r, 0, ...),
/// d_i > 0 and d_i | d_{i+1}. `left_inverse` is U^{-1}.
struct SmithForm {
  IntMatrix left;
  IntMatrix left_inverse;
  IntMatrix diagonal;
  IntMatrix right;
  std::size_t rank = 0;

  std::vector<Integer> invariant_factors() const {
    std::vector<Integer> d;
    for (std::size_t i = 0; i < rank; ++i) d.push_back(diagonal(i, i));
    return d;
  }
};

inline SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SmithForm f{IntMatrix::identity(m), IntMatrix::identity(m), a, IntMatrix::identity(n), 0};
  IntMatrix& s = f.diagonal;

  // Row op on S mirrored into U, inverse op into U^{-1}.
  auto row_add = [&](std::size_t dst, std::size_t src, const Integer& k) {
    s.add_row_multiple(dst, src, k);
    f.left.add_row_multiple(dst, src, k);
    f.left_inverse.add_col_multiple(src, dst, -k);
  };
  auto row_swap = [&](std::size_t x, std::size_t y) {
    s.swap_rows(x, y);
    f.left.swap_rows(x, y);
    f.left_inverse.swap_cols(x, y);
  };
  auto row_negate = [&](std::size_t r) {
    s.negate_row(r);
    f.left.negate_row(r);
    f.left_inverse.negate_col(r);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const Integer& k) {
    s.add_col_multiple(dst, src, k);
    f.right.add_col_multiple(dst, src, k);
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    s.swap_cols(x, y);
    f.right.swap_cols(x, y);
  };

  const std::size_t steps = std::min(m, n);
  std::size_t t = 0;
  for (; t < steps; ++t) {
    while (true) {
      // Bring the smallest nonzero entry of the trailing block to (t, t).
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (s(i, j) != 0 && (!best || abs(s(i, j)) < abs(s(best->first, best->second)))) best = {i, j};
      if (!best) break;
      row_swap(t, best->first);
      col_swap(t, best->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (s(i, t) == 0) continue;
        row_add(i, t, -(s(i, t) / s(t, t)));
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (s(t, j) == 0) continue;
        col_add(j, t, -(s(t, j) / s(t, t)));
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: a stray entry not divisible by the pivot is folded into row t.
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (s(i, j) % s(t, t) != 0) {
            row_add(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (s(t, t) == 0) break;
    if (s(t, t) < 0) row_negate(t);
  }
  f.rank = t;
  return f;
}

inline std::size_t matrix_rank(const IntMatrix& a) { return smith_normal_form(a).rank; }

/// Some integer x with A x = b, or nullopt when b is not in the column lattice of A.
inline std::optional<std::vector<Integer>> solve_integer(const IntMatrix& a, std::span<const Integer> b) {
  if (b.size() != a.rows()) throw InvalidInput("solve: right-hand side has wrong length");
  SmithForm f = smith_normal_form(a);
  std::vector<Integer> ub = f.left * b;
  std::vector<Integer> y(a.cols());
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (i < f.rank) {
      if (ub[i] % f.diagonal(i, i) != 0) return std::nullopt;
      y[i] = ub[i] / f.diagonal(i, i);
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return f.right * std::span<const Integer>(y);
}

inline bool in_column_lattice(const IntMatrix& a, std::span<const Integer> b) {
  return solve_integer(a, b).has_value();
}

/// Columns form a Z-basis of {x : A x = 0}.
inline IntMatrix integer_kernel(const IntMatrix& a) {
  SmithForm f = smith_normal_form(a);
  return f.right.column_block(f.rank, a.cols() - f.rank);
}

/// Columns form a Z-basis of the lattice spanned by the columns of A.
inline IntMatrix column_lattice_basis(const IntMatrix& a) {
  SmithForm f = smith_normal_form(a);
  IntMatrix basis = f.left_inverse.column_block(0, f.rank);
  for (std::size_t j = 0; j < f.rank; ++j)
    for (std::size_t i = 0; i < basis.rows(); ++i) basis(i, j) *= f.diagonal(j, j);
  return basis;
}

}  // namespace mtg
