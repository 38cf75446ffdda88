#pragma once

#include <cstddef>
#include <vector>

#include "ikeda/arith/integer.hpp"
#include "ikeda/arith/poly.hpp"
#include "ikeda/errors.hpp"

namespace ikeda {

template <class R>
using Matrix = std::vector<std::vector<R>>;

template <class R>
Matrix<R> zero_matrix(std::size_t rows, std::size_t cols) {
  return Matrix<R>(rows, std::vector<R>(cols, R(0)));
}

template <class R>
Matrix<R> transpose(const Matrix<R>& a) {
  if (a.empty()) return a;
  Matrix<R> t = zero_matrix<R>(a[0].size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

template <class R>
Matrix<R> matmul(const Matrix<R>& a, const Matrix<R>& b) {
  std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
  Matrix<R> c = zero_matrix<R>(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (is_zero(a[i][l])) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] = c[i][j] + a[i][l] * b[l][j];
    }
  return c;
}

// Reduced row echelon form in place over a field; returns pivot columns.
template <class R>
std::vector<std::size_t> rref(Matrix<R>& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  std::size_t rows = a.size(), cols = a[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(a[p][c])) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    R inv = inverse(a[r][c]);
    for (std::size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(a[i][c])) continue;
      R f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Basis of {v : a v = 0}, one vector per free column (free entry set to 1).
template <class R>
std::vector<std::vector<R>> nullspace(Matrix<R> a, std::size_t cols) {
  std::vector<std::size_t> piv = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::vector<R>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<R> v(cols, R(0));
    v[f] = R(1);
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -a[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class R>
std::size_t rank(Matrix<R> a) {
  return rref(a).size();
}

template <class R>
R determinant(Matrix<R> a) {
  std::size_t n = a.size();
  R det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(a[p][c])) ++p;
    if (p == n) return R(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det = det * a[c][c];
    R inv = inverse(a[c][c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(a[i][c])) continue;
      R f = a[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) a[i][j] = a[i][j] - f * a[c][j];
    }
  }
  return det;
}

// Characteristic polynomial det(Y*I - a) over Q (Faddeev-LeVerrier).
Poly<Rat> charpoly(const Matrix<Rat>& a);

}  // namespace ikeda
