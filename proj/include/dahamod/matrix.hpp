/*
 Copyright 2026 The dahamod Authors
 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/
#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dahamod/errors.hpp"
#include "dahamod/scalar.hpp"

namespace dahamod {

template <ScalarField S>
using Vec = std::vector<S>;

// Dense row-major matrix over an exact field.
template <ScalarField S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<S> entries)
      : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows * cols) throw ContractViolation("matrix entry count mismatch");
  }

  static Matrix identity(std::size_t n) { return scalar(n, S(1)); }
  static Matrix scalar(std::size_t n, const S& s) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<S>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.front().size() : 0;
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw ContractViolation("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const std::vector<S>& entries() const { return e_; }

  S& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  Vec<S> column(std::size_t j) const {
    Vec<S> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  bool is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const S& x) { return x.is_zero(); });
  }

  // The scalar s when this matrix equals s*I.
  std::optional<S> scalar_value() const {
    if (!is_square() || rows_ == 0) return std::nullopt;
    const S s = (*this)(0, 0);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!((*this)(i, j) == (i == j ? s : S())))
          return std::nullopt;
    return s;
  }

  Vec<S> apply(const Vec<S>& v) const {
    if (v.size() != cols_) throw ContractViolation("matrix-vector dimension mismatch");
    Vec<S> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  Matrix operator-() const { return *this * S(-1); }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.check_same_shape(b);
    for (std::size_t i = 0; i < a.e_.size(); ++i) a.e_[i] += b.e_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.check_same_shape(b);
    for (std::size_t i = 0; i < a.e_.size(); ++i) a.e_[i] -= b.e_[i];
    return a;
  }
  friend Matrix operator*(Matrix a, const S& s) {
    for (auto& x : a.e_) x *= s;
    return a;
  }
  friend Matrix operator*(const S& s, Matrix a) { return std::move(a) * s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ContractViolation("matrix product dimension mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const S& x = a(i, l);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(l, j).is_zero()) out(i, j) += x * b(l, j);
      }
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

 private:
  void check_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw ContractViolation("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> e_;
};

// Linear subspace of S^ambient held as a reduced row-echelon basis.
template <ScalarField S>
struct Subspace {
  std::size_t ambient = 0;
  std::vector<Vec<S>> basis;

  std::size_t dim() const { return basis.size(); }
};

template <ScalarField S>
struct RrefResult {
  Matrix<S> reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

template <ScalarField S>
RrefResult<S> rref(Matrix<S> m) {
  RrefResult<S> out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const S inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const S f = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(r, j) -= f * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  out.reduced = std::move(m);
  return out;
}

// Row-reduced span of the given vectors.
template <ScalarField S>
Subspace<S> span_of(std::size_t ambient, const std::vector<Vec<S>>& vectors) {
  Subspace<S> out{ambient, {}};
  if (vectors.empty()) return out;
  Matrix<S> m(vectors.size(), ambient);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < ambient; ++j) m(i, j) = vectors[i][j];
  auto r = rref(std::move(m));
  for (std::size_t i = 0; i < r.rank; ++i) {
    Vec<S> v(ambient);
    for (std::size_t j = 0; j < ambient; ++j) v[j] = r.reduced(i, j);
    out.basis.push_back(std::move(v));
  }
  return out;
}

template <ScalarField S>
Subspace<S> kernel(const Matrix<S>& m) {
  const auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vec<S>> raw;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<S> v(m.cols());
    v[free] = S(1);
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced(i, free);
    raw.push_back(std::move(v));
  }
  return span_of(m.cols(), raw);
}

template <ScalarField S>
S det(Matrix<S> m) {
  if (!m.is_square()) throw ContractViolation("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  S result(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return S();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      result = -result;
    }
    result *= m(c, c);
    const S inv = m(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      const S f = m(r, c) * inv;
      for (std::size_t j = c; j < n; ++j)
        if (!m(c, j).is_zero()) m(r, j) -= f * m(c, j);
    }
  }
  return result;
}

template <ScalarField S>
Matrix<S> inverse(const Matrix<S>& m) {
  if (!m.is_square()) throw ContractViolation("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<S> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = S(1);
  }
  const auto r = rref(std::move(aug));
  if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1))
    throw SingularMatrixError("matrix is singular");
  Matrix<S> out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = r.reduced(i, n + j);
  return out;
}

template <ScalarField S>
Matrix<S> matrix_power(const Matrix<S>& m, int e) {
  Matrix<S> base = e < 0 ? inverse(m) : m;
  Matrix<S> out = Matrix<S>::identity(m.rows());
  for (int i = 0; i < (e < 0 ? -e : e); ++i) out = out * base;
  return out;
}

// Reshape a coordinate vector of length rows*cols into a row-major matrix.
template <ScalarField S>
Matrix<S> reshape(const Vec<S>& v, std::size_t rows, std::size_t cols) {
  return Matrix<S>(rows, cols, std::vector<S>(v.begin(), v.end()));
}

// All m x n matrices T with T*A_i == B_i*T for every pair, as a subspace of
// row-major coordinate vectors of length m*n.
template <ScalarField S>
Subspace<S> solve_sylvester_homogeneous(std::span<const std::pair<Matrix<S>, Matrix<S>>> pairs) {
  if (pairs.empty()) throw ContractViolation("no Sylvester equations given");
  const std::size_t n = pairs.front().first.rows();
  const std::size_t m = pairs.front().second.rows();
  for (const auto& [a, b] : pairs)
    if (!a.is_square() || !b.is_square() || a.rows() != n || b.rows() != m)
      throw ContractViolation("Sylvester pair dimension mismatch");

  // Unknown T(r, l) sits at coordinate r*n + l. Equation (r, c) of pair k:
  //   sum_l T(r, l) A(l, c) - sum_l B(r, l) T(l, c) = 0.
  Matrix<S> sys(pairs.size() * m * n, m * n);
  std::size_t row = 0;
  for (const auto& [a, b] : pairs) {
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < n; ++c, ++row) {
        for (std::size_t l = 0; l < n; ++l)
          if (!a(l, c).is_zero()) sys(row, r * n + l) += a(l, c);
        for (std::size_t l = 0; l < m; ++l)
          if (!b(r, l).is_zero()) sys(row, l * n + c) -= b(r, l);
      }
  }
  return kernel(sys);
}

// Incrementally maintained echelon basis; insert() reports whether the span
// grew.
template <ScalarField S>
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t ambient) : ambient_(ambient) {}

  bool insert(Vec<S> v) {
    for (const auto& [pivot, b] : rows_) {
      if (v[pivot].is_zero()) continue;
      const S f = v[pivot];
      for (std::size_t j = 0; j < ambient_; ++j)
        if (!b[j].is_zero()) v[j] -= f * b[j];
    }
    std::size_t p = 0;
    while (p < ambient_ && v[p].is_zero()) ++p;
    if (p == ambient_) return false;
    const S inv = v[p].inverse();
    for (auto& x : v) x *= inv;
    // Keep existing rows reduced against the new pivot.
    for (auto& [pivot, b] : rows_) {
      if (b[p].is_zero()) continue;
      const S f = b[p];
      for (std::size_t j = 0; j < ambient_; ++j)
        if (!v[j].is_zero()) b[j] -= f * v[j];
    }
    rows_.emplace_back(p, std::move(v));
    return true;
  }

  std::size_t dim() const { return rows_.size(); }

 private:
  std::size_t ambient_;
  std::vector<std::pair<std::size_t, Vec<S>>> rows_;
};

// Dimension of the unital algebra generated by square matrices of equal size.
template <ScalarField S>
std::size_t span_closure(std::span<const Matrix<S>> gens) {
  if (gens.empty()) return 1;
  const std::size_t n = gens.front().rows();
  for (const auto& g : gens)
    if (!g.is_square() || g.rows() != n) throw ContractViolation("closure generator size mismatch");

  EchelonBasis<S> basis(n * n);
  std::vector<Matrix<S>> found{Matrix<S>::identity(n)};
  basis.insert(found.front().entries());
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& g : gens) {
      Matrix<S> w = g * found[i];
      if (basis.insert(w.entries())) {
        found.push_back(std::move(w));
        if (found.size() > n * n) throw InternalError("span closure exceeded n^2 elements");
      }
    }
  }
  return found.size();
}

}  // namespace dahamod
