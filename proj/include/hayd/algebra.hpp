#pragma once

// Associative unital algebras given by structure constants, their modules,
// and enumeration of characters over prime fields.

#include <cstdint>
#include <deque>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "hayd/linalg.hpp"
#include "hayd/report.hpp"

namespace hayd {

template <class K>
SparseVec<K> basis_vector(const K& f, std::size_t i) {
  return {{i, f.one()}};
}

template <class K>
SparseVec<K> to_sparse(const K& f, const std::vector<typename K::value_type>& dense) {
  SparseVec<K> out;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (!f.is_zero(dense[i])) out.push_back({i, dense[i]});
  return out;
}

template <class K>
std::vector<typename K::value_type> to_dense(const K& f, const SparseVec<K>& v, std::size_t n) {
  std::vector<typename K::value_type> out(n, f.zero());
  for (const auto& e : v) out.at(e.index) = e.value;
  return out;
}

template <class K>
SparseVec<K> scale(const SparseVec<K>& v, const typename K::value_type& c, const K& f) {
  SparseVec<K> out;
  if (f.is_zero(c)) return out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back({e.index, e.value * c});
  return out;
}

/// e_i e_j = sum_k mult[i,j,k] e_k, unit = sum_k unit[k] e_k.
template <class K>
class FinAlgebra {
 public:
  using V = typename K::value_type;

  FinAlgebra(K field, Tensor<K> mult, Tensor<K> unit, std::vector<std::string> names = {})
      : field_(field), dim_(unit.rank() == 1 ? unit.dim(0) : 0), unit_(std::move(unit)),
        mult_(std::move(mult), 2), names_(std::move(names)) {
    const std::size_t n = dim_;
    if (unit_.rank() != 1 || n == 0) throw InputError("algebra unit must be a nonzero-length vector");
    if (mult_.tensor().shape() != Shape{n, n, n}) throw InputError("algebra multiplication must have shape (n,n,n)");
    if (names_.empty())
      for (std::size_t i = 0; i < n; ++i) names_.push_back("e" + std::to_string(i));
    if (names_.size() != n) throw InputError("basis name count does not match dimension");
  }

  const K& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Tensor<K>& mult() const { return mult_.tensor(); }
  const Tensor<K>& unit() const { return unit_; }
  const std::vector<std::string>& basis_names() const { return names_; }

  /// Nonzero entries of e_i e_j; output coordinate via `mult_index`.
  std::span<const Entry<K>> product(std::size_t i, std::size_t j) const { return mult_[i * dim_ + j]; }
  std::uint64_t mult_index(const Entry<K>& e) const { return mult_.trailing(e); }

  SparseVec<K> unit_vec() const { return unit_.entries(); }

  /// Adds c * a * b into acc at offset `base + k * stride`.
  void multiply_into(const SparseVec<K>& a, const SparseVec<K>& b, const V& c, Accumulator<K>& acc,
                     std::uint64_t base = 0, std::uint64_t stride = 1) const {
    for (const auto& x : a)
      for (const auto& y : b) {
        V xy = c * x.value * y.value;
        for (const auto& e : product(x.index, y.index)) acc.add(base + mult_.trailing(e) * stride, xy * e.value);
      }
  }

  SparseVec<K> multiply(const SparseVec<K>& a, const SparseVec<K>& b) const {
    Accumulator<K> acc(field_, dim_);
    multiply_into(a, b, field_.one(), acc);
    return acc.take();
  }

 private:
  K field_;
  std::size_t dim_;
  Tensor<K> unit_;
  Fibered<K> mult_;
  std::vector<std::string> names_;
};

/// Exhaustive associativity and unit checks.
template <class K>
Report<K> verify_algebra(const FinAlgebra<K>& a) {
  const std::size_t n = a.dim();
  const K& f = a.field();
  Accumulator<K> acc(f, n);
  auto assoc = check_tuples(f, "associativity", {n, n, n}, {n}, [&](const Index& t) {
    // (e_i e_j) e_k versus e_i (e_j e_k)
    for (const auto& l : a.product(t[0], t[1]))
      for (const auto& o : a.product(a.mult_index(l), t[2])) acc.add(a.mult_index(o), l.value * o.value);
    auto lhs = acc.take();
    for (const auto& l : a.product(t[1], t[2]))
      for (const auto& o : a.product(t[0], a.mult_index(l))) acc.add(a.mult_index(o), l.value * o.value);
    return std::pair{lhs, acc.take()};
  });
  if (!assoc) return assoc;
  const auto one = a.unit_vec();
  auto left_unit = check_tuples(f, "unit", {n}, {n}, [&](const Index& t) {
    return std::pair{a.multiply(one, basis_vector(f, t[0])), basis_vector(f, t[0])};
  });
  if (!left_unit) return left_unit;
  return check_tuples(f, "unit", {n}, {n}, [&](const Index& t) {
    return std::pair{a.multiply(basis_vector(f, t[0]), one), basis_vector(f, t[0])};
  });
}

template <class K>
FinAlgebra<K> algebra_opposite(const FinAlgebra<K>& a) {
  return FinAlgebra<K>(a.field(), permute(a.mult(), {1, 0, 2}), a.unit(), a.basis_names());
}

/// Left module: action[a, v, w] is the coefficient of f_w in e_a . f_v.
template <class K>
struct AlgebraModule {
  FinAlgebra<K> algebra;
  std::size_t dim;
  Tensor<K> action;

  AlgebraModule(FinAlgebra<K> alg, std::size_t d, Tensor<K> act)
      : algebra(std::move(alg)), dim(d), action(std::move(act)) {
    if (action.shape() != Shape{algebra.dim(), dim, dim})
      throw InputError("module action must have shape (dim A, m, m)");
  }
};

/// Applies the left action of algebra element `a` to module vector `v`.
template <class K>
SparseVec<K> act_left(const Fibered<K>& action, std::size_t mdim, const SparseVec<K>& a,
                      const SparseVec<K>& v) {
  Accumulator<K> acc(action.tensor().field(), mdim);
  for (const auto& x : a)
    for (const auto& y : v)
      for (const auto& e : action[x.index * mdim + y.index]) acc.add(action.trailing(e), x.value * y.value * e.value);
  return acc.take();
}

/// Unit acts as identity and (ab)v = a(bv) on all basis triples.
template <class K>
Report<K> verify_module(const AlgebraModule<K>& m) {
  const auto& alg = m.algebra;
  const K& f = alg.field();
  const std::size_t n = alg.dim(), d = m.dim;
  Fibered<K> act(m.action, 2);
  auto unit = check_tuples(f, "module_unit", {d}, {d}, [&](const Index& t) {
    return std::pair{act_left(act, d, alg.unit_vec(), basis_vector(f, t[0])), basis_vector(f, t[0])};
  });
  if (!unit) return unit;
  return check_tuples(f, "module_associativity", {n, n, d}, {d}, [&](const Index& t) {
    auto ab = alg.multiply(basis_vector(f, t[0]), basis_vector(f, t[1]));
    auto lhs = act_left(act, d, ab, basis_vector(f, t[2]));
    auto rhs = act_left(act, d, basis_vector(f, t[0]), act_left(act, d, basis_vector(f, t[1]), basis_vector(f, t[2])));
    return std::pair{lhs, rhs};
  });
}

template <class K>
AlgebraModule<K> regular_module(const FinAlgebra<K>& a) {
  return AlgebraModule<K>(a, a.dim(), a.mult());
}

/// Linear functional is multiplicative on all basis pairs and sends 1 to 1.
template <class K>
bool is_character(const FinAlgebra<K>& a, const std::vector<typename K::value_type>& chi) {
  const K& f = a.field();
  const std::size_t n = a.dim();
  if (chi.size() != n) throw InputError("functional length does not match algebra dimension");
  auto eval = [&](std::span<const Entry<K>> v) {
    typename K::value_type s = f.zero();
    for (const auto& e : v) s += e.value * chi[a.mult_index(e)];
    return s;
  };
  typename K::value_type at_one = f.zero();
  for (const auto& e : a.unit().entries()) at_one += e.value * chi[e.index];
  if (!(at_one == f.one())) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(eval(a.product(i, j)) == chi[i] * chi[j])) return false;
  return true;
}

namespace detail {

/// Incrementally maintained reduced echelon basis whose rows carry one
/// extra tracked scalar (the value of a linear functional on the row).
template <class K>
class TrackedSpan {
 public:
  using V = typename K::value_type;
  TrackedSpan(K f, std::size_t n) : f_(std::move(f)), n_(n) {}

  std::size_t size() const { return rows_.size(); }

  /// Reduces (v, c).  Returns true if v was independent (and is now added).
  /// If v is dependent, `consistent` reports whether c matches the value
  /// implied by the span.
  bool insert(std::vector<V> v, V c, bool& consistent) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const V coef = v[pivots_[r]];
      if (f_.is_zero(coef)) continue;
      for (std::size_t j = 0; j < n_; ++j) v[j] -= coef * rows_[r][j];
      c -= coef * values_[r];
    }
    std::size_t piv = 0;
    while (piv < n_ && f_.is_zero(v[piv])) ++piv;
    if (piv == n_) {
      consistent = f_.is_zero(c);
      return false;
    }
    consistent = true;
    const V inv = f_.inv(v[piv]);
    for (auto& x : v) x = x * inv;
    c = c * inv;
    // keep rows fully reduced against the new pivot
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const V coef = rows_[r][piv];
      if (f_.is_zero(coef)) continue;
      for (std::size_t j = 0; j < n_; ++j) rows_[r][j] -= coef * v[j];
      values_[r] -= coef * c;
    }
    rows_.push_back(std::move(v));
    values_.push_back(c);
    pivots_.push_back(piv);
    return true;
  }

  bool contains(std::vector<V> v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const V coef = v[pivots_[r]];
      if (f_.is_zero(coef)) continue;
      for (std::size_t j = 0; j < n_; ++j) v[j] -= coef * rows_[r][j];
    }
    for (const auto& x : v)
      if (!f_.is_zero(x)) return false;
    return true;
  }

  /// When the span is everything, the functional's value on e_i.
  std::vector<V> functional() const {
    std::vector<V> chi(n_, f_.zero());
    for (std::size_t r = 0; r < rows_.size(); ++r) chi[pivots_[r]] = values_[r];
    return chi;
  }

 private:
  K f_;
  std::size_t n_;
  std::vector<std::vector<V>> rows_;
  std::vector<V> values_;
  std::vector<std::size_t> pivots_;
};

/// Closure of span{1} under right multiplication by the generators; the
/// tracked values follow chi(w s) = chi(w) chi(s).  Returns false on an
/// inconsistency (no character with these generator values).
template <class K>
bool close_under_generators(const FinAlgebra<K>& a, const std::vector<std::size_t>& gens,
                            const std::vector<typename K::value_type>& gen_values,
                            TrackedSpan<K>& span, bool stop_on_inconsistency = true) {
  const K& f = a.field();
  const std::size_t n = a.dim();
  std::deque<std::pair<SparseVec<K>, typename K::value_type>> queue;
  bool ok = true;
  span.insert(to_dense(f, a.unit_vec(), n), f.one(), ok);
  queue.emplace_back(a.unit_vec(), f.one());
  while (!queue.empty()) {
    auto [w, c] = std::move(queue.front());
    queue.pop_front();
    for (std::size_t g = 0; g < gens.size(); ++g) {
      auto ws = a.multiply(w, basis_vector(f, gens[g]));
      typename K::value_type cs = c * gen_values[g];
      bool consistent = true;
      if (span.insert(to_dense(f, ws, n), cs, consistent))
        queue.emplace_back(std::move(ws), cs);
      else if (!consistent && stop_on_inconsistency)
        return false;
    }
  }
  return true;
}

}  // namespace detail

/// Greedy generating set: basis elements not in the subalgebra generated by
/// the earlier choices.
template <class K>
std::vector<std::size_t> algebra_generators(const FinAlgebra<K>& a) {
  const K& f = a.field();
  const std::size_t n = a.dim();
  std::vector<std::size_t> gens;
  auto closure = [&] {
    detail::TrackedSpan<K> span(f, n);
    std::vector<typename K::value_type> zeros(gens.size(), f.zero());
    detail::close_under_generators(a, gens, zeros, span, false);
    return span;
  };
  auto span = closure();
  for (std::size_t i = 0; i < n && span.size() < n; ++i) {
    if (span.contains(to_dense(f, basis_vector(f, i), n))) continue;
    gens.push_back(i);
    span = closure();
  }
  return gens;
}

inline constexpr std::uint64_t kEnumerationGuard = std::uint64_t{1} << 20;

/// All characters of a finite-dimensional algebra over a prime field, by
/// enumerating values on a generating set (p^#generators candidates, guarded
/// by kEnumerationGuard).  Results are in lexicographic order of the
/// generator values.
template <class K>
std::vector<std::vector<typename K::value_type>> find_characters(const FinAlgebra<K>& a) {
  if constexpr (!std::is_same_v<K, PrimeField>) {
    throw InputError("exhaustive enumeration needs a prime field; supply candidates to check_element");
  } else {
    const K& f = a.field();
    const std::size_t n = a.dim();
    const auto gens = algebra_generators(a);
    const std::uint64_t p = f.characteristic();
    std::uint64_t count = 1;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      count *= p;
      if (count > kEnumerationGuard)
        throw InputError("enumeration guard exceeded (p^#generators > 2^20); supply candidates to check_element");
    }
    std::vector<std::vector<Fp>> found;
    std::vector<Fp> values(gens.size(), f.zero());
    for (std::uint64_t code = 0; code < count; ++code) {
      std::uint64_t c = code;
      for (std::size_t g = gens.size(); g-- > 0;) {
        values[g] = f.from_int(static_cast<long long>(c % p));
        c /= p;
      }
      detail::TrackedSpan<K> span(f, n);
      if (!detail::close_under_generators(a, gens, values, span)) continue;
      if (span.size() != n) continue;
      auto chi = span.functional();
      if (is_character(a, chi)) found.push_back(std::move(chi));
    }
    return found;
  }
}

}  // namespace hayd
