// Copyright 2026 The foliage Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "foliage/detail/field.hpp"

namespace foliage::detail {

// Small dense row-major matrix over K.
template <class K>
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<K> data;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, Field<K>::zero()) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Field<K>::one();
    return m;
  }

  K& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
  const K& operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }

  std::vector<K> column(int j) const {
    std::vector<K> v(rows);
    for (int i = 0; i < rows; ++i) v[i] = (*this)(i, j);
    return v;
  }
};

template <class K>
Matrix<K> operator*(const Matrix<K>& a, const Matrix<K>& b) {
  Matrix<K> c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      if (Field<K>::is_zero(a(i, k))) continue;
      for (int j = 0; j < b.cols; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

template <class K>
std::vector<K> operator*(const Matrix<K>& a, const std::vector<K>& v) {
  std::vector<K> out(a.rows, Field<K>::zero());
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) out[i] += a(i, j) * v[j];
  return out;
}

template <class K>
double max_norm(const Matrix<K>& a) {
  double m = 0.0;
  for (const auto& x : a.data) m = std::max(m, Field<K>::magnitude(x));
  return m;
}

// Incrementally built echelon basis of a subspace of K^n.
template <class K>
class Span {
 public:
  Span(int n, double tol) : n_(n), tol_(tol) {}

  // Adds v when it is independent of the current span; returns whether it was.
  bool add(std::vector<K> v) {
    reduce(v);
    int pivot = -1;
    double best = tol_;
    for (int j = 0; j < n_; ++j) {
      double mag = Field<K>::magnitude(v[j]);
      if (Field<K>::exact ? !Field<K>::is_zero(v[j]) : mag > best) {
        pivot = j;
        if (Field<K>::exact) break;
        best = mag;
      }
    }
    if (pivot < 0) return false;
    K inv = Field<K>::one() / v[pivot];
    for (auto& x : v) x = x * inv;
    rows_.push_back({pivot, std::move(v)});
    return true;
  }

  int dimension() const { return static_cast<int>(rows_.size()); }

 private:
  void reduce(std::vector<K>& v) const {
    for (const auto& [p, row] : rows_) {
      K f = v[p];
      if (Field<K>::is_zero(f)) continue;
      for (int j = 0; j < n_; ++j) v[j] -= f * row[j];
    }
  }

  int n_;
  double tol_;
  std::vector<std::pair<int, std::vector<K>>> rows_;
};

// Basis of the null space of `a`, via reduced row echelon form.
template <class K>
std::vector<std::vector<K>> kernel(Matrix<K> a, double tol) {
  const int r = a.rows, c = a.cols;
  std::vector<int> pivot_cols;
  int row = 0;
  for (int col = 0; col < c && row < r; ++col) {
    int best = -1;
    double best_mag = tol;
    for (int i = row; i < r; ++i) {
      double mag = Field<K>::magnitude(a(i, col));
      if (Field<K>::exact ? !Field<K>::is_zero(a(i, col)) : mag > best_mag) {
        best = i;
        if (Field<K>::exact) break;
        best_mag = mag;
      }
    }
    if (best < 0) {
      for (int i = row; i < r; ++i) a(i, col) = Field<K>::zero();
      continue;
    }
    for (int j = 0; j < c; ++j) std::swap(a(row, j), a(best, j));
    K inv = Field<K>::one() / a(row, col);
    for (int j = 0; j < c; ++j) a(row, j) = a(row, j) * inv;
    for (int i = 0; i < r; ++i) {
      if (i == row || Field<K>::is_zero(a(i, col))) continue;
      K f = a(i, col);
      for (int j = 0; j < c; ++j) a(i, j) -= f * a(row, j);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(c, false);
  for (int p : pivot_cols) is_pivot[p] = true;
  std::vector<std::vector<K>> basis;
  for (int free = 0; free < c; ++free) {
    if (is_pivot[free]) continue;
    std::vector<K> v(c, Field<K>::zero());
    v[free] = Field<K>::one();
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -a(static_cast<int>(k), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class K>
std::optional<Matrix<K>> inverse(Matrix<K> a, double tol) {
  const int n = a.rows;
  Matrix<K> inv = Matrix<K>::identity(n);
  for (int col = 0; col < n; ++col) {
    int best = -1;
    double best_mag = tol;
    for (int i = col; i < n; ++i) {
      double mag = Field<K>::magnitude(a(i, col));
      if (Field<K>::exact ? !Field<K>::is_zero(a(i, col)) : mag > best_mag) {
        best = i;
        if (Field<K>::exact) break;
        best_mag = mag;
      }
    }
    if (best < 0) return std::nullopt;
    for (int j = 0; j < n; ++j) {
      std::swap(a(col, j), a(best, j));
      std::swap(inv(col, j), inv(best, j));
    }
    K p = Field<K>::one() / a(col, col);
    for (int j = 0; j < n; ++j) {
      a(col, j) = a(col, j) * p;
      inv(col, j) = inv(col, j) * p;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || Field<K>::is_zero(a(i, col))) continue;
      K f = a(i, col);
      for (int j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

// Monic characteristic polynomial det(xI - A), coefficients from x^0 to x^n.
template <class K>
std::vector<K> characteristic_polynomial(const Matrix<K>& a) {
  const int n = a.rows;
  std::vector<K> coeff(n + 1, Field<K>::zero());
  coeff[n] = Field<K>::one();
  Matrix<K> m(n, n);
  for (int k = 1; k <= n; ++k) {
    Matrix<K> next = a * m;
    for (int i = 0; i < n; ++i) next(i, i) += coeff[n - k + 1];
    m = std::move(next);
    Matrix<K> am = a * m;
    K trace = Field<K>::zero();
    for (int i = 0; i < n; ++i) trace += am(i, i);
    coeff[n - k] = -trace / Field<K>::from_int(k);
  }
  return coeff;
}

template <class K>
K evaluate_polynomial(const std::vector<K>& coeff, const K& x) {
  K acc = Field<K>::zero();
  for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Divides by (x - root); the remainder is dropped.
template <class K>
std::vector<K> deflate(const std::vector<K>& coeff, const K& root) {
  const int n = static_cast<int>(coeff.size()) - 1;
  std::vector<K> out(n, Field<K>::zero());
  K carry = Field<K>::zero();
  for (int k = n; k >= 1; --k) {
    carry = carry * root + coeff[k];
    out[k - 1] = carry;
  }
  return out;
}

template <class K>
struct JordanBlock {
  K eigenvalue;
  int size = 1;
};

// Jordan basis for A given its distinct eigenvalues with algebraic
// multiplicities. Columns of P form chains (N^{k-1}v, ..., Nv, v) so that
// P^{-1} A P is upper bidiagonal with unit superdiagonal inside blocks.
// Blocks follow the order of `eigs`, larger blocks first.
template <class K>
bool jordan_basis(const Matrix<K>& a, const std::vector<std::pair<K, int>>& eigs, double tol,
                  Matrix<K>& p, std::vector<JordanBlock<K>>& blocks) {
  const int n = a.rows;
  std::vector<std::vector<K>> columns;
  blocks.clear();
  const double scale = std::max(1.0, max_norm(a));
  for (const auto& [mu, mult] : eigs) {
    Matrix<K> nmat = a;
    for (int i = 0; i < n; ++i) nmat(i, i) -= mu;
    std::vector<Matrix<K>> powers{Matrix<K>::identity(n), nmat};
    std::vector<std::vector<std::vector<K>>> kernels{{}};
    int top = 0;
    for (int j = 1; j <= mult; ++j) {
      if (j >= static_cast<int>(powers.size())) powers.push_back(powers.back() * nmat);
      double tj = tol * std::pow(scale, j);
      kernels.push_back(kernel(powers[j], tj));
      if (static_cast<int>(kernels[j].size()) >= mult) {
        top = j;
        break;
      }
    }
    if (top == 0 || static_cast<int>(kernels[top].size()) != mult) return false;

    std::vector<std::pair<std::vector<K>, int>> tops;
    for (int j = top; j >= 1; --j) {
      Span<K> span(n, tol * scale);
      for (const auto& v : kernels[j - 1]) span.add(v);
      for (const auto& [v, len] : tops) {
        std::vector<K> w = v;
        for (int s = 0; s < len - j; ++s) w = nmat * w;
        span.add(w);
      }
      for (const auto& b : kernels[j]) {
        if (span.add(b)) tops.push_back({b, j});
      }
    }
    for (const auto& [v, len] : tops) {
      std::vector<std::vector<K>> chain(len);
      chain[len - 1] = v;
      for (int s = len - 2; s >= 0; --s) chain[s] = nmat * chain[s + 1];
      for (auto& col : chain) columns.push_back(std::move(col));
      blocks.push_back({mu, len});
    }
  }
  if (static_cast<int>(columns.size()) != n) return false;
  p = Matrix<K>(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) p(i, j) = columns[j][i];
  return true;
}

}  // namespace foliage::detail
