#pragma once

// Modules and comodules over a FinHopfAlgebra on finite-dimensional spaces,
// and the comodule <-> dual-module conversions.
//
// Action tensor (n, m, m), either side:  e_h . f_a  (or f_a . e_h)
//   = sum_b action[h, a, b] f_b.
// Left coaction  (m, n, m):  f_a -> sum coaction[a, u, b] e_u (x) f_b.
// Right coaction (m, m, n):  f_a -> sum coaction[a, b, u] f_b (x) e_u.

#include <string>
#include <utility>

#include "hayd/hopf.hpp"

namespace hayd {

enum class Side { left, right };

inline const char* side_name(Side s) { return s == Side::left ? "left" : "right"; }

template <class K>
class ActionStructure {
 public:
  ActionStructure(Side side, std::size_t dim, Tensor<K> action)
      : side_(side), dim_(dim), action_(std::move(action), 2) {
    const auto& sh = action_.tensor().shape();
    if (sh.size() != 3 || sh[1] != dim || sh[2] != dim) throw InputError("action tensor must have shape (n, m, m)");
  }

  Side side() const { return side_; }
  std::size_t dim() const { return dim_; }
  std::size_t hopf_dim() const { return action_.tensor().dim(0); }
  const Tensor<K>& tensor() const { return action_.tensor(); }

  /// Operator of e_h applied to v (for either side).
  SparseVec<K> apply(std::size_t h, const SparseVec<K>& v) const {
    Accumulator<K> acc(action_.tensor().field(), dim_);
    apply_into(h, v, action_.tensor().field().one(), acc);
    return acc.take();
  }

  void apply_into(std::size_t h, const SparseVec<K>& v, const typename K::value_type& c, Accumulator<K>& acc,
                  std::uint64_t base = 0, std::uint64_t stride = 1) const {
    for (const auto& x : v)
      for (const auto& e : action_[h * dim_ + x.index]) acc.add(base + action_.trailing(e) * stride, c * x.value * e.value);
  }

  /// Operator of an arbitrary element.
  SparseVec<K> apply(const SparseVec<K>& h, const SparseVec<K>& v) const {
    Accumulator<K> acc(action_.tensor().field(), dim_);
    for (const auto& x : h) apply_into(x.index, v, x.value, acc);
    return acc.take();
  }

  std::span<const Entry<K>> row(std::size_t h, std::size_t a) const { return action_[h * dim_ + a]; }
  std::uint64_t target(const Entry<K>& e) const { return action_.trailing(e); }

 private:
  Side side_;
  std::size_t dim_;
  Fibered<K> action_;
};

template <class K>
class CoactionStructure {
 public:
  CoactionStructure(Side side, std::size_t dim, Tensor<K> coaction)
      : side_(side), dim_(dim), coaction_(std::move(coaction), 1) {
    const auto& sh = coaction_.tensor().shape();
    if (sh.size() != 3 || sh[0] != dim || (side == Side::left ? sh[2] : sh[1]) != dim)
      throw InputError(side == Side::left ? "left coaction must have shape (m, n, m)" : "right coaction must have shape (m, m, n)");
  }

  Side side() const { return side_; }
  std::size_t dim() const { return dim_; }
  std::size_t hopf_dim() const { return coaction_.tensor().dim(side_ == Side::left ? 1 : 2); }
  const Tensor<K>& tensor() const { return coaction_.tensor(); }

  /// Coaction of f_a as a list of (H index, M index, coefficient).
  struct Term {
    std::size_t h;
    std::size_t m;
    typename K::value_type c;
  };
  std::vector<Term> terms(std::size_t a) const {
    std::vector<Term> out;
    const std::size_t n = hopf_dim();
    for (const auto& e : coaction_[a]) {
      const auto t = coaction_.trailing(e);
      if (side_ == Side::left)
        out.push_back({static_cast<std::size_t>(t / dim_), static_cast<std::size_t>(t % dim_), e.value});
      else
        out.push_back({static_cast<std::size_t>(t % n), static_cast<std::size_t>(t / n), e.value});
    }
    return out;
  }

  /// Coaction of v laid out as H (x) M (left) or M (x) H (right).
  SparseVec<K> apply(const SparseVec<K>& v) const {
    Accumulator<K> acc(coaction_.tensor().field(), dim_ * hopf_dim());
    for (const auto& x : v)
      for (const auto& e : coaction_[x.index]) acc.add(coaction_.trailing(e), x.value * e.value);
    return acc.take();
  }

 private:
  Side side_;
  std::size_t dim_;
  Fibered<K> coaction_;
};

/// Unit acts as identity; associativity on all basis pairs.
template <class K>
Report<K> verify_action(const FinHopfAlgebra<K>& h, const ActionStructure<K>& a) {
  const K& f = h.field();
  const std::size_t n = h.dim(), m = a.dim();
  if (a.hopf_dim() != n) throw InputError("action tensor does not match Hopf dimension");
  auto unit = check_tuples(f, "action_unit", {m}, {m}, [&](const Index& t) {
    return std::pair{a.apply(h.unit_vec(), basis_vector(f, t[0])), basis_vector(f, t[0])};
  });
  if (!unit) return unit;
  // left: (e_i e_j) v = e_i (e_j v);  right: v (e_i e_j) = (v e_i) e_j
  return check_tuples(f, "action_associativity", {n, n, m}, {m}, [&](const Index& t) {
    auto v = basis_vector(f, t[2]);
    auto lhs = a.apply(h.multiply(basis_vector(f, t[0]), basis_vector(f, t[1])), v);
    auto rhs = a.side() == Side::left ? a.apply(t[0], a.apply(t[1], v)) : a.apply(t[1], a.apply(t[0], v));
    return std::pair{lhs, rhs};
  });
}

/// Coassociativity and counit law on every basis vector.
template <class K>
Report<K> verify_coaction(const FinHopfAlgebra<K>& h, const CoactionStructure<K>& c) {
  const K& f = h.field();
  const std::size_t n = h.dim(), m = c.dim();
  if (c.hopf_dim() != n) throw InputError("coaction tensor does not match Hopf dimension");
  const bool left = c.side() == Side::left;
  Accumulator<K> acc(f, n * n * m);
  auto coassoc = check_tuples(f, "coaction_coassociativity", {m}, left ? Shape{n, n, m} : Shape{m, n, n},
                              [&](const Index& t) {
    // left: (Delta (x) id) lambda = (id (x) lambda) lambda, on H (x) H (x) M
    // right: (lambda (x) id) lambda = (id (x) Delta) lambda, on M (x) H (x) H
    for (const auto& term : c.terms(t[0]))
      for (const auto& d : h.coproduct_of(term.h)) {
        const auto uv = d.index % (n * n);
        acc.add(left ? uv * m + term.m : term.m * n * n + uv, term.c * d.value);
      }
    auto via_delta = acc.take();
    for (const auto& term : c.terms(t[0]))
      for (const auto& inner : c.terms(term.m))
        acc.add(left ? (term.h * n + inner.h) * m + inner.m : (inner.m * n + inner.h) * n + term.h, term.c * inner.c);
    return std::pair{via_delta, acc.take()};
  });
  if (!coassoc) return coassoc;
  return check_tuples(f, "coaction_counit", {m}, {m}, [&](const Index& t) {
    Accumulator<K> a1(f, m);
    for (const auto& term : c.terms(t[0])) a1.add(term.m, term.c * h.counit().at_linear(term.h));
    return std::pair{a1.take(), basis_vector(f, t[0])};
  });
}

/// Right H-comodule -> left H*-module: phi . m = phi(m(1)) m(0).
template <class K>
ActionStructure<K> comodule_to_dual_action(const FinHopfAlgebra<K>&, const CoactionStructure<K>& c) {
  if (c.side() != Side::right) throw InputError("comodule_to_dual_action needs a right coaction");
  return ActionStructure<K>(Side::left, c.dim(), permute(c.tensor(), {2, 0, 1}));
}

/// Left H*-module -> right H-comodule: m -> sum_i h_i* . m (x) h_i.
template <class K>
CoactionStructure<K> dual_action_to_comodule(const FinHopfAlgebra<K>&, const ActionStructure<K>& a) {
  if (a.side() != Side::left) throw InputError("dual_action_to_comodule needs a left action");
  return CoactionStructure<K>(Side::right, a.dim(), permute(a.tensor(), {1, 2, 0}));
}

template <class K>
ActionStructure<K> regular_action(const FinHopfAlgebra<K>& h, Side side) {
  // left: e_h e_a;  right: e_a e_h
  return ActionStructure<K>(side, h.dim(), side == Side::left ? h.mult() : permute(h.mult(), {1, 0, 2}));
}

template <class K>
ActionStructure<K> trivial_action(const FinHopfAlgebra<K>& h, Side side, std::size_t m) {
  std::vector<std::pair<Index, typename K::value_type>> items;
  for (const auto& e : h.counit().entries())
    for (std::size_t a = 0; a < m; ++a) items.push_back({{static_cast<std::size_t>(e.index), a, a}, e.value});
  return ActionStructure<K>(side, m, Tensor<K>::from_entries(h.field(), {h.dim(), m, m}, items));
}

template <class K>
CoactionStructure<K> regular_coaction(const FinHopfAlgebra<K>& h, Side side) {
  return CoactionStructure<K>(side, h.dim(), h.comult());
}

template <class K>
CoactionStructure<K> trivial_coaction(const FinHopfAlgebra<K>& h, Side side, std::size_t m) {
  std::vector<std::pair<Index, typename K::value_type>> items;
  for (const auto& e : h.unit().entries())
    for (std::size_t a = 0; a < m; ++a) {
      const auto u = static_cast<std::size_t>(e.index);
      items.push_back({side == Side::left ? Index{a, u, a} : Index{a, a, u}, e.value});
    }
  const std::size_t n = h.dim();
  return CoactionStructure<K>(side, m,
                              Tensor<K>::from_entries(h.field(), side == Side::left ? Shape{m, n, m} : Shape{m, m, n}, items));
}

/// Structure constants of H in the basis e'_i = sum_j p[i,j] e_j.
template <class K>
FinHopfAlgebra<K> change_basis(const FinHopfAlgebra<K>& h, const Tensor<K>& p) {
  auto inv = invert_matrix(p);
  if (!inv.invertible()) throw InputError("change of basis matrix is singular");
  const Tensor<K>& q = *inv.inverse;
  // mult'[i,j,k] = p[i,a] p[j,b] mult[a,b,c] q[c,k]
  // contract(p, mult) over b has axes (j, a, c); contracting p over a gives (i, j, c)
  Tensor<K> mult = contract(contract(p, contract(p, h.mult(), {{1, 1}}), {{1, 1}}), q, {{2, 0}});
  Tensor<K> unit = contract(h.unit(), q, {{0, 0}});
  Tensor<K> comult = contract(contract(contract(p, h.comult(), {{1, 0}}), q, {{1, 0}}), q, {{1, 0}});
  Tensor<K> counit = contract(p, h.counit(), {{1, 0}});
  Tensor<K> antipode = compose(compose(p, h.antipode()), q);
  return verified(FinHopfAlgebra<K>(h.field(), mult, unit, comult, counit, antipode));
}

}  // namespace hayd
