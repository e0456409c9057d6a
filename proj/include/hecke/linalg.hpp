#pragma once

// Dense exact linear algebra over a FieldScalar. Vectors are rows and matrices act on the right: x
// -> x * M. Row reduction pivots on the leftmost available column and the first non-zero row below,
// so results are deterministic.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace hecke {

template <FieldScalar S>
using Vec = std::vector<S>;

template <FieldScalar S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const S& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix zero(std::size_t rows, std::size_t cols, const FieldOf<S>& f) { return Matrix(rows, cols, f.zero()); }
  static Matrix identity(std::size_t n, const FieldOf<S>& f) {
    Matrix m(n, n, f.zero());
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
  }
  static Matrix from_rows(const std::vector<Vec<S>>& rows, std::size_t cols, const FieldOf<S>& f) {
    Matrix m(rows.size(), cols, f.zero());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("matrix: ragged rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec<S> row(std::size_t i) const { return Vec<S>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }
  void set_row(std::size_t i, const Vec<S>& v) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, data_.empty() ? S{} : data_.front());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    require_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const S& c) {
    for (auto& x : data_) x *= c;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const S& c, Matrix a) { return a *= c; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix c(a.rows_, b.cols_, a.zero_like(b));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const S& y = b(k, j);
          if (!y.is_zero()) c(i, j) += x * y;
        }
      }
    return c;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  void require_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix: shape mismatch");
  }
  S zero_like(const Matrix& other) const {
    for (const auto* m : {this, &other})
      for (const auto& x : m->data_)
        if (x.field_ptr()) return x.field_ptr()->zero();
    return S{};
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<S> data_;
};

/// x * M for a row vector x.
template <FieldScalar S>
Vec<S> vec_mat(const Vec<S>& x, const Matrix<S>& M, const S& zero) {
  if (x.size() != M.rows()) throw std::invalid_argument("vec_mat: shape mismatch");
  Vec<S> y(M.cols(), zero);
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k].is_zero()) continue;
    for (std::size_t j = 0; j < M.cols(); ++j)
      if (!M(k, j).is_zero()) y[j] += x[k] * M(k, j);
  }
  return y;
}

template <FieldScalar S>
bool is_zero_vec(const Vec<S>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

/// Kronecker product A (x) B.
template <FieldScalar S>
Matrix<S> kronecker(const Matrix<S>& A, const Matrix<S>& B, const S& zero) {
  Matrix<S> K(A.rows() * B.rows(), A.cols() * B.cols(), zero);
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) {
      if (A(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < B.rows(); ++k)
        for (std::size_t l = 0; l < B.cols(); ++l)
          if (!B(k, l).is_zero()) K(i * B.rows() + k, j * B.cols() + l) = A(i, j) * B(k, l);
    }
  return K;
}

template <FieldScalar S>
struct Echelon {
  Matrix<S> reduced;                ///< reduced row echelon form, rank rows
  std::vector<std::size_t> pivots;  ///< pivot column of each row
};

/// Reduced row echelon form; zero rows are dropped.
template <FieldScalar S>
Echelon<S> row_reduce(Matrix<S> M) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
    std::size_t p = r;
    while (p < M.rows() && M(p, c).is_zero()) ++p;
    if (p == M.rows()) continue;
    M.swap_rows(p, r);
    const S inv = M(r, c).inverse();
    for (std::size_t j = c; j < M.cols(); ++j) M(r, j) *= inv;
    for (std::size_t i = 0; i < M.rows(); ++i) {
      if (i == r || M(i, c).is_zero()) continue;
      const S f = M(i, c);
      for (std::size_t j = c; j < M.cols(); ++j)
        if (!M(r, j).is_zero()) M(i, j) -= f * M(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  Echelon<S> e;
  e.reduced = Matrix<S>(r, M.cols(), M.rows() && M.cols() ? M(0, 0) : S{});
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) e.reduced(i, j) = M(i, j);
  e.pivots = std::move(pivots);
  return e;
}

template <FieldScalar S>
std::size_t rank(const Matrix<S>& M) {
  return row_reduce(M).pivots.size();
}

/// Basis (as rows) of {x : M x^T = 0}, i.e. the right kernel of M.
template <FieldScalar S>
std::vector<Vec<S>> right_kernel(const Matrix<S>& M, const FieldOf<S>& f) {
  const auto e = row_reduce(M);
  std::vector<char> is_pivot(M.cols(), 0);
  for (auto c : e.pivots) is_pivot[c] = 1;
  std::vector<Vec<S>> out;
  for (std::size_t free = 0; free < M.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<S> v(M.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
    out.push_back(std::move(v));
  }
  return out;
}

/// Basis (as rows) of {x : x M = 0}.
template <FieldScalar S>
std::vector<Vec<S>> left_kernel(const Matrix<S>& M, const FieldOf<S>& f) {
  return right_kernel(M.transpose(), f);
}

/// Some x with x A = b, if one exists.
template <FieldScalar S>
std::optional<Vec<S>> solve_left(const Matrix<S>& A, const Vec<S>& b, const FieldOf<S>& f) {
  if (b.size() != A.cols()) throw std::invalid_argument("solve_left: shape mismatch");
  // Columns of [A^T | b^T]: unknowns are the rows of A.
  Matrix<S> aug(A.cols(), A.rows() + 1, f.zero());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) aug(j, i) = A(i, j);
  for (std::size_t j = 0; j < A.cols(); ++j) aug(j, A.rows()) = b[j];
  const auto e = row_reduce(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == A.rows()) return std::nullopt;
  Vec<S> x(A.rows(), f.zero());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, A.rows());
  return x;
}

/// Incrementally maintained echelon basis of a subspace of K^n.
template <FieldScalar S>
class EchelonBasis {
 public:
  EchelonBasis(std::size_t n, const FieldOf<S>& f) : n_(n), field_(&f) {}

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return n_; }
  /// The vectors added so far that were independent, in insertion order.
  const std::vector<Vec<S>>& originals() const { return originals_; }

  Vec<S> reduce(Vec<S> v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const S c = v[pivots_[i]];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (!rows_[i][j].is_zero()) v[j] -= c * rows_[i][j];
    }
    return v;
  }

  bool contains(const Vec<S>& v) const { return is_zero_vec(reduce(v)); }

  /// Adds v; returns false if it was already in the span.
  bool add(const Vec<S>& v) {
    if (v.size() != n_) throw std::invalid_argument("echelon basis: wrong length");
    Vec<S> w = reduce(v);
    std::size_t p = 0;
    while (p < n_ && w[p].is_zero()) ++p;
    if (p == n_) return false;
    const S inv = w[p].inverse();
    for (auto& x : w) x *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const S c = rows_[i][p];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (!w[j].is_zero()) rows_[i][j] -= c * w[j];
    }
    rows_.push_back(std::move(w));
    pivots_.push_back(p);
    originals_.push_back(v);
    return true;
  }

 private:
  std::size_t n_;
  const FieldOf<S>* field_;
  std::vector<Vec<S>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<Vec<S>> originals_;
};

/// Coordinates of vectors in a fixed independent family b_1..b_k.
template <FieldScalar S>
class CoordinateSystem {
 public:
  CoordinateSystem(std::vector<Vec<S>> basis, std::size_t n, const FieldOf<S>& f) : basis_(std::move(basis)), field_(&f) {
    const std::size_t k = basis_.size();
    Matrix<S> B = Matrix<S>::from_rows(basis_, n, f);
    // Pick k independent columns and invert that square block.
    EchelonBasis<S> colspace(k, f);
    for (std::size_t c = 0; c < n && cols_.size() < k; ++c) {
      Vec<S> col(k, f.zero());
      for (std::size_t i = 0; i < k; ++i) col[i] = B(i, c);
      if (colspace.add(col)) cols_.push_back(c);
    }
    if (cols_.size() != k) throw std::invalid_argument("coordinate system: basis is dependent");
    Matrix<S> sq(k, 2 * k, f.zero());
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) sq(i, j) = B(i, cols_[j]);
      sq(i, k + i) = f.one();
    }
    auto red = row_reduce(std::move(sq));
    inverse_ = Matrix<S>(k, k, f.zero());
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) inverse_(i, j) = red.reduced(i, k + j);
  }

  std::size_t size() const { return basis_.size(); }
  const std::vector<Vec<S>>& basis() const { return basis_; }

  /// x with sum_i x_i b_i = v, or nullopt if v is outside the span.
  std::optional<Vec<S>> coordinates(const Vec<S>& v) const {
    const std::size_t k = basis_.size();
    Vec<S> vp(k, field_->zero());
    for (std::size_t j = 0; j < k; ++j) vp[j] = v[cols_[j]];
    // x B_P = v_P  =>  x = v_P B_P^{-1}
    Vec<S> x = vec_mat(vp, inverse_, field_->zero());
    Vec<S> back(v.size(), field_->zero());
    for (std::size_t i = 0; i < k; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (!basis_[i][j].is_zero()) back[j] += x[i] * basis_[i][j];
    }
    if (back != v) return std::nullopt;
    return x;
  }

 private:
  std::vector<Vec<S>> basis_;
  const FieldOf<S>* field_;
  std::vector<std::size_t> cols_;
  Matrix<S> inverse_;
};

}  // namespace hecke
