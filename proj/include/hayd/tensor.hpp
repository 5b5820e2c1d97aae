#pragma once

// Sparse exact tensors.
//
// A Tensor stores only its nonzero entries, keyed by the row-major linear
// index of the multi-index and kept sorted.  Sorting by linear index is the
// same as lexicographic order on multi-indices, so the first difference
// between two tensors is the lexicographically first violating tuple, and
// every prefix of axes selects a contiguous run of entries (a fiber).
//
// Linear maps are stored input axes first, output axes last.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hayd/field.hpp"

namespace hayd {

using Shape = std::vector<std::size_t>;
using Index = std::vector<std::size_t>;

template <class K>
struct Entry {
  std::uint64_t index;
  typename K::value_type value;

  friend bool operator==(const Entry& a, const Entry& b) {
    return a.index == b.index && a.value == b.value;
  }
};

/// Sorted, zero-free list of (linear index, value).
template <class K>
using SparseVec = std::vector<Entry<K>>;

inline std::uint64_t shape_size(const Shape& shape) {
  std::uint64_t n = 1;
  for (auto d : shape) n *= d;
  return n;
}

inline std::uint64_t ravel(const Shape& shape, std::span<const std::size_t> idx) {
  if (idx.size() != shape.size()) throw InputError("index rank does not match tensor rank");
  std::uint64_t lin = 0;
  for (std::size_t a = 0; a < shape.size(); ++a) {
    if (idx[a] >= shape[a]) throw InputError("index out of range");
    lin = lin * shape[a] + idx[a];
  }
  return lin;
}

inline Index unravel(const Shape& shape, std::uint64_t lin) {
  Index idx(shape.size());
  for (std::size_t a = shape.size(); a-- > 0;) {
    idx[a] = static_cast<std::size_t>(lin % shape[a]);
    lin /= shape[a];
  }
  return idx;
}

/// Scatter-add buffer with a touched list; reset cost is proportional to the
/// number of touched slots.
template <class K>
class Accumulator {
 public:
  using V = typename K::value_type;

  Accumulator(K field, std::uint64_t size)
      : field_(std::move(field)), dense_(size, field_.zero()), mark_(size, 0) {}

  std::uint64_t size() const { return dense_.size(); }

  void add(std::uint64_t i, const V& v) {
    if (!mark_[i]) {
      mark_[i] = 1;
      touched_.push_back(i);
    }
    dense_[i] += v;
  }

  /// Collects the nonzero entries in index order and resets the buffer.
  SparseVec<K> take() {
    std::sort(touched_.begin(), touched_.end());
    SparseVec<K> out;
    out.reserve(touched_.size());
    for (auto i : touched_) {
      if (!field_.is_zero(dense_[i])) out.push_back({i, dense_[i]});
      dense_[i] = field_.zero();
      mark_[i] = 0;
    }
    touched_.clear();
    return out;
  }

 private:
  K field_;
  std::vector<V> dense_;
  std::vector<unsigned char> mark_;
  std::vector<std::uint64_t> touched_;
};

template <class K>
class Tensor {
 public:
  using V = typename K::value_type;
  using value_type = V;

  Tensor(K field, Shape shape) : field_(std::move(field)), shape_(std::move(shape)) {}

  /// Takes ownership of already sorted, zero-free entries.
  Tensor(K field, Shape shape, SparseVec<K> entries)
      : field_(std::move(field)), shape_(std::move(shape)), entries_(std::move(entries)) {}

  static Tensor from_dense(K field, Shape shape, const std::vector<V>& dense) {
    if (dense.size() != shape_size(shape)) throw InputError("dense data does not match shape");
    SparseVec<K> e;
    for (std::uint64_t i = 0; i < dense.size(); ++i)
      if (!field.is_zero(dense[i])) e.push_back({i, dense[i]});
    return Tensor(std::move(field), std::move(shape), std::move(e));
  }

  /// Duplicate indices are summed.
  static Tensor from_entries(K field, Shape shape,
                             const std::vector<std::pair<Index, V>>& items) {
    std::unordered_map<std::uint64_t, V> acc;
    for (const auto& [idx, v] : items) {
      auto lin = ravel(shape, idx);
      auto it = acc.find(lin);
      if (it == acc.end())
        acc.emplace(lin, v);
      else
        it->second += v;
    }
    SparseVec<K> e;
    for (auto& [lin, v] : acc)
      if (!field.is_zero(v)) e.push_back({lin, v});
    std::sort(e.begin(), e.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
    return Tensor(std::move(field), std::move(shape), std::move(e));
  }

  static Tensor identity(K field, std::size_t n) {
    SparseVec<K> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back({i * n + i, field.one()});
    return Tensor(field, {n, n}, std::move(e));
  }

  const K& field() const { return field_; }
  const Shape& shape() const { return shape_; }
  std::size_t rank() const { return shape_.size(); }
  std::size_t dim(std::size_t axis) const { return shape_.at(axis); }
  std::uint64_t size() const { return shape_size(shape_); }
  std::size_t nnz() const { return entries_.size(); }
  const SparseVec<K>& entries() const { return entries_; }

  V at(std::span<const std::size_t> idx) const { return at_linear(ravel(shape_, idx)); }
  V at(std::initializer_list<std::size_t> idx) const {
    return at(std::span<const std::size_t>(idx.begin(), idx.size()));
  }
  V at_linear(std::uint64_t lin) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), lin,
                               [](const auto& e, std::uint64_t l) { return e.index < l; });
    if (it != entries_.end() && it->index == lin) return it->value;
    return field_.zero();
  }

  std::vector<V> to_dense() const {
    std::vector<V> d(size(), field_.zero());
    for (const auto& e : entries_) d[e.index] = e.value;
    return d;
  }

  Tensor scaled(const V& c) const {
    if (field_.is_zero(c)) return Tensor(field_, shape_);
    SparseVec<K> e = entries_;
    for (auto& x : e) x.value = x.value * c;
    return Tensor(field_, shape_, std::move(e));
  }

  Tensor reshaped(Shape shape) const {
    if (shape_size(shape) != size()) throw InputError("reshape changes size");
    return Tensor(field_, std::move(shape), entries_);
  }

  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.shape_ == b.shape_ && a.entries_ == b.entries_;
  }

 private:
  K field_;
  Shape shape_;
  SparseVec<K> entries_;
};

/// Merge of two sparse vectors, `a + c * b`.
template <class K>
SparseVec<K> axpy(const K& field, const SparseVec<K>& a, const typename K::value_type& c,
                  const SparseVec<K>& b) {
  SparseVec<K> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].index < b[j].index)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].index < a[i].index) {
      typename K::value_type v = c * b[j].value;
      if (!field.is_zero(v)) out.push_back({b[j].index, v});
      ++j;
    } else {
      typename K::value_type v = a[i].value + c * b[j].value;
      if (!field.is_zero(v)) out.push_back({a[i].index, v});
      ++i;
      ++j;
    }
  }
  return out;
}

template <class K>
Tensor<K> operator+(const Tensor<K>& a, const Tensor<K>& b) {
  if (a.shape() != b.shape()) throw InputError("shape mismatch in tensor sum");
  return Tensor<K>(a.field(), a.shape(), axpy(a.field(), a.entries(), a.field().one(), b.entries()));
}

template <class K>
Tensor<K> operator-(const Tensor<K>& a, const Tensor<K>& b) {
  if (a.shape() != b.shape()) throw InputError("shape mismatch in tensor difference");
  return Tensor<K>(a.field(), a.shape(),
                   axpy(a.field(), a.entries(), -a.field().one(), b.entries()));
}

/// Lexicographically first multi-index where the two tensors differ.
template <class K>
std::optional<Index> first_difference(const Tensor<K>& a, const Tensor<K>& b) {
  if (a.shape() != b.shape()) throw InputError("shape mismatch in comparison");
  const auto& x = a.entries();
  const auto& y = b.entries();
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].index < y[j].index))
      return unravel(a.shape(), x[i].index);
    if (i == x.size() || y[j].index < x[i].index) return unravel(a.shape(), y[j].index);
    if (!(x[i].value == y[j].value)) return unravel(a.shape(), x[i].index);
    ++i;
    ++j;
  }
  return std::nullopt;
}

/// Sums over each pair (axis of t, axis of u).  Output axes: the unpaired axes
/// of t in order, then the unpaired axes of u in order.  An empty pair list is
/// the outer (Kronecker) product.
template <class K>
Tensor<K> contract(const Tensor<K>& t, const Tensor<K>& u,
                   std::span<const std::pair<std::size_t, std::size_t>> pairs) {
  std::vector<char> t_paired(t.rank(), 0), u_paired(u.rank(), 0);
  for (auto [a, b] : pairs) {
    if (a >= t.rank() || b >= u.rank()) throw InputError("contraction axis out of range");
    if (t_paired[a] || u_paired[b]) throw InputError("contraction axis paired twice");
    if (t.dim(a) != u.dim(b)) throw InputError("contraction pairs axes of different dimension");
    t_paired[a] = u_paired[b] = 1;
  }
  Shape t_rest, u_rest, out_shape;
  for (std::size_t a = 0; a < t.rank(); ++a)
    if (!t_paired[a]) t_rest.push_back(t.dim(a));
  for (std::size_t b = 0; b < u.rank(); ++b)
    if (!u_paired[b]) u_rest.push_back(u.dim(b));
  out_shape = t_rest;
  out_shape.insert(out_shape.end(), u_rest.begin(), u_rest.end());
  const std::uint64_t u_rest_size = shape_size(u_rest);

  // Key = paired coordinates in pair order; rest = unpaired coordinates.
  auto split = [&](const Shape& shape, std::uint64_t lin, const std::vector<char>& paired,
                   bool t_side) {
    Index idx = unravel(shape, lin);
    std::uint64_t key = 0, rest = 0;
    for (auto [a, b] : pairs) key = key * shape[t_side ? a : b] + idx[t_side ? a : b];
    for (std::size_t ax = 0; ax < shape.size(); ++ax)
      if (!paired[ax]) rest = rest * shape[ax] + idx[ax];
    return std::pair{key, rest};
  };

  std::unordered_map<std::uint64_t, std::vector<std::pair<std::uint64_t, typename K::value_type>>>
      by_key;
  for (const auto& e : u.entries()) {
    auto [key, rest] = split(u.shape(), e.index, u_paired, false);
    by_key[key].emplace_back(rest, e.value);
  }

  std::unordered_map<std::uint64_t, typename K::value_type> acc;
  for (const auto& e : t.entries()) {
    auto [key, rest] = split(t.shape(), e.index, t_paired, true);
    auto it = by_key.find(key);
    if (it == by_key.end()) continue;
    for (const auto& [urest, uv] : it->second) {
      std::uint64_t lin = rest * u_rest_size + urest;
      typename K::value_type prod = e.value * uv;
      auto [slot, fresh] = acc.try_emplace(lin, prod);
      if (!fresh) slot->second += prod;
    }
  }
  SparseVec<K> out;
  out.reserve(acc.size());
  for (auto& [lin, v] : acc)
    if (!t.field().is_zero(v)) out.push_back({lin, v});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
  return Tensor<K>(t.field(), std::move(out_shape), std::move(out));
}

template <class K>
Tensor<K> contract(const Tensor<K>& t, const Tensor<K>& u,
                   std::initializer_list<std::pair<std::size_t, std::size_t>> pairs) {
  return contract(t, u, std::span<const std::pair<std::size_t, std::size_t>>(pairs.begin(), pairs.size()));
}

/// Output axis k is input axis perm[k].
template <class K>
Tensor<K> permute(const Tensor<K>& t, const std::vector<std::size_t>& perm) {
  if (perm.size() != t.rank()) throw InputError("permutation rank mismatch");
  std::vector<char> seen(perm.size(), 0);
  Shape out_shape(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) {
    if (perm[k] >= perm.size() || seen[perm[k]]) throw InputError("not a permutation");
    seen[perm[k]] = 1;
    out_shape[k] = t.dim(perm[k]);
  }
  SparseVec<K> out;
  out.reserve(t.nnz());
  Index dst(perm.size());
  for (const auto& e : t.entries()) {
    Index src = unravel(t.shape(), e.index);
    for (std::size_t k = 0; k < perm.size(); ++k) dst[k] = src[perm[k]];
    out.push_back({ravel(out_shape, dst), e.value});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
  return Tensor<K>(t.field(), std::move(out_shape), std::move(out));
}

/// Matrix product in the input-first convention: (a then b).
template <class K>
Tensor<K> compose(const Tensor<K>& a, const Tensor<K>& b) {
  return contract(a, b, {{a.rank() - 1, 0}});
}

/// A tensor together with the offsets of the runs of entries that share
/// their leading `prefix_rank` coordinates.  Copies stay valid because only
/// offsets are stored.
template <class K>
class Fibered {
 public:
  Fibered(Tensor<K> t, std::size_t prefix_rank) : tensor_(std::move(t)) {
    Shape lead(tensor_.shape().begin(), tensor_.shape().begin() + prefix_rank);
    Shape trail(tensor_.shape().begin() + prefix_rank, tensor_.shape().end());
    trailing_ = shape_size(trail);
    const std::uint64_t count = shape_size(lead);
    offsets_.assign(count + 1, 0);
    for (const auto& e : tensor_.entries()) ++offsets_[e.index / trailing_ + 1];
    for (std::uint64_t i = 0; i < count; ++i) offsets_[i + 1] += offsets_[i];
  }

  const Tensor<K>& tensor() const { return tensor_; }

  std::span<const Entry<K>> operator[](std::uint64_t prefix) const {
    const auto* base = tensor_.entries().data();
    return {base + offsets_[prefix], base + offsets_[prefix + 1]};
  }
  std::uint64_t trailing(const Entry<K>& e) const { return e.index % trailing_; }

 private:
  Tensor<K> tensor_;
  std::vector<std::uint64_t> offsets_;
  std::uint64_t trailing_ = 1;
};

inline std::string format_index(const Index& idx) {
  std::string s = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
  return s + ")";
}

}  // namespace hayd
