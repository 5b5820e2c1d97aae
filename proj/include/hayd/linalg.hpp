#pragma once

// Dense exact Gaussian elimination.  Matrices act on row vectors
// (v -> v * M), matching the input-first convention of Tensor.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hayd/tensor.hpp"

namespace hayd {

template <class K>
struct Matrix {
  using V = typename K::value_type;

  K field;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<V> data;

  Matrix(K f, std::size_t r, std::size_t c)
      : field(std::move(f)), rows(r), cols(c), data(r * c, field.zero()) {}

  static Matrix from_tensor(const Tensor<K>& t) {
    if (t.rank() != 2) throw InputError("matrix must be a rank-2 tensor");
    Matrix m(t.field(), t.dim(0), t.dim(1));
    for (const auto& e : t.entries()) m.data[e.index] = e.value;
    return m;
  }

  /// Rows are the given vectors of length `cols`.
  static Matrix from_rows(K f, std::size_t c, const std::vector<std::vector<V>>& rs) {
    Matrix m(std::move(f), rs.size(), c);
    for (std::size_t i = 0; i < rs.size(); ++i) {
      if (rs[i].size() != c) throw InputError("row length mismatch");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rs[i][j];
    }
    return m;
  }

  V& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const V& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  std::vector<V> row(std::size_t i) const {
    return {data.begin() + static_cast<std::ptrdiff_t>(i * cols),
            data.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols)};
  }

  Tensor<K> to_tensor() const { return Tensor<K>::from_dense(field, {rows, cols}, data); }

  Matrix transposed() const {
    Matrix t(field, cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
};

template <class K>
struct Echelon {
  Matrix<K> reduced;                // reduced row echelon form, zero rows at the bottom
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

template <class K>
Echelon<K> rref(Matrix<K> m) {
  using V = typename K::value_type;
  const K& f = m.field;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && f.is_zero(m(p, c))) ++p;
    if (p == m.rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
    V inv = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols; ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || f.is_zero(m(i, c))) continue;
      V factor = m(i, c);
      for (std::size_t j = c; j < m.cols; ++j) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <class K>
std::size_t rank(const Matrix<K>& m) {
  return rref(m).rank();
}

template <class K>
struct InverseResult {
  std::optional<Tensor<K>> inverse;  // empty when singular
  std::size_t rank = 0;
  bool invertible() const { return inverse.has_value(); }
};

template <class K>
InverseResult<K> invert_matrix(const Tensor<K>& t) {
  if (t.rank() != 2 || t.dim(0) != t.dim(1)) throw InputError("invert_matrix needs a square matrix");
  const std::size_t n = t.dim(0);
  const K& f = t.field();
  Matrix<K> aug(f, n, 2 * n);
  for (const auto& e : t.entries()) aug(e.index / n, e.index % n) = e.value;
  for (std::size_t i = 0; i < n; ++i) aug(i, n + i) = f.one();
  auto ech = rref(std::move(aug));
  std::size_t left_rank = 0;
  for (auto c : ech.pivots)
    if (c < n) ++left_rank;
  if (left_rank < n) return {std::nullopt, left_rank};
  std::vector<typename K::value_type> inv(n * n, f.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i * n + j] = ech.reduced(i, n + j);
  return {Tensor<K>::from_dense(f, {n, n}, inv), n};
}

/// Basis of {x : M x = 0}.
template <class K>
std::vector<std::vector<typename K::value_type>> nullspace(const Matrix<K>& m) {
  const K& f = m.field;
  auto ech = rref(m);
  std::vector<char> is_pivot(m.cols, 0);
  for (auto c : ech.pivots) is_pivot[c] = 1;
  std::vector<std::vector<typename K::value_type>> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename K::value_type> x(m.cols, f.zero());
    x[free] = f.one();
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) x[ech.pivots[r]] = -ech.reduced(r, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Basis of {v : v A = 0} for a map written in the row convention.
template <class K>
std::vector<std::vector<typename K::value_type>> left_kernel(const Matrix<K>& a) {
  return nullspace(a.transposed());
}

/// Coefficients c with sum_i c_i basis[i] = v, if v lies in the span.
/// The basis vectors must be linearly independent.
template <class K>
std::optional<std::vector<typename K::value_type>> coordinates(
    const K& f, const std::vector<std::vector<typename K::value_type>>& basis,
    const std::vector<typename K::value_type>& v) {
  const std::size_t k = basis.size();
  const std::size_t len = v.size();
  // Columns = basis vectors, last column = v.
  Matrix<K> m(f, len, k + 1);
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = 0; j < k; ++j) m(i, j) = basis[j].at(i);
    m(i, k) = v[i];
  }
  auto ech = rref(std::move(m));
  std::vector<typename K::value_type> c(k, f.zero());
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    if (ech.pivots[r] == k) return std::nullopt;
    c[ech.pivots[r]] = ech.reduced(r, k);
  }
  if (ech.pivots.size() < k) throw InputError("coordinates: basis is linearly dependent");
  return c;
}

/// Subspace held by a reduced row echelon basis; coordinates of a member
/// are its values at the pivot columns.
template <class K>
struct Subspace {
  using V = typename K::value_type;

  K field;
  std::size_t ambient = 0;
  std::vector<std::vector<V>> basis;
  std::vector<std::size_t> pivots;

  static Subspace span(K f, std::size_t ambient, const std::vector<std::vector<V>>& vectors) {
    Subspace s{f, ambient, {}, {}};
    if (vectors.empty()) return s;
    auto ech = rref(Matrix<K>::from_rows(f, ambient, vectors));
    for (std::size_t r = 0; r < ech.rank(); ++r) s.basis.push_back(ech.reduced.row(r));
    s.pivots = ech.pivots;
    return s;
  }

  std::size_t dim() const { return basis.size(); }

  std::optional<std::vector<V>> coords(const std::vector<V>& v) const {
    std::vector<V> c(dim(), field.zero());
    std::vector<V> rest = v;
    for (std::size_t r = 0; r < dim(); ++r) {
      c[r] = v[pivots[r]];
      if (field.is_zero(c[r])) continue;
      for (std::size_t j = 0; j < ambient; ++j) rest[j] -= c[r] * basis[r][j];
    }
    for (const auto& x : rest)
      if (!field.is_zero(x)) return std::nullopt;
    return c;
  }

  bool contains(const std::vector<V>& v) const { return coords(v).has_value(); }
};

}  // namespace hayd
