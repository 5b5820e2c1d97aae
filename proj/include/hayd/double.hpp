#pragma once

// The algebra A(H) on H* (x) H, the Drinfeld double D(H) on the same space,
// conversions between lr-case (anti-)Yetter-Drinfeld modules and their
// modules, and the right D(H)-comodule algebra structure on A(H).
//
// Basis index i * n + j stands for e_i* (x) e_j.  The product is
//   (phi (x) h)(phi' (x) h') = phi'(1)(S^-1(h(3))) phi'(3)(T(h(1))) phi phi'(2) (x) h(2) h'
// with T = S^2 for A(H) and T = id for D(H).

#include <string>
#include <utility>
#include <vector>

#include "hayd/galois.hpp"

namespace hayd {

namespace detail {

/// Coefficients of e_k in every triple product e_a e_b e_c, grouped by k:
/// the legs of Delta^(3)(e_k*) in H*.
template <class K>
std::vector<std::vector<Sweedler3<K>>> dual_coproduct3_table(const FinHopfAlgebra<K>& h) {
  const std::size_t n = h.dim();
  std::vector<std::vector<Sweedler3<K>>> table(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto ab = h.multiply(basis_vector(h.field(), a), basis_vector(h.field(), b));
      for (std::size_t c = 0; c < n; ++c)
        for (const auto& e : h.multiply(ab, basis_vector(h.field(), c))) table[e.index].push_back({a, b, c, e.value});
    }
  return table;
}

template <class K>
std::vector<std::string> pair_names(const FinHopfAlgebra<K>& h) {
  const auto dual = starred(h.basis_names());
  std::vector<std::string> names;
  for (const auto& phi : dual)
    for (const auto& x : h.basis_names()) names.push_back(phi + " " + x);
  return names;
}

/// Shared builder; `twisted` selects T = S^2.
template <class K>
FinAlgebra<K> build_twisted_product(const FinHopfAlgebra<K>& h, bool twisted) {
  using V = typename K::value_type;
  require_verified(h);
  const K& f = h.field();
  const std::size_t n = h.dim(), d = n * n;
  const Tensor<K>& sinv = h.antipode_inverse();
  const Tensor<K> t = twisted ? compose(h.antipode(), h.antipode()) : Tensor<K>::identity(f, n);
  const auto d3 = coproduct3_table(h);
  const auto dual3 = dual_coproduct3_table(h);
  const FinAlgebra<K> dual = dual_algebra(h);

  // w[j * n + k] lists (b, q, c): the phi'(2) and h(2) legs with their weight
  std::vector<std::vector<std::tuple<std::size_t, std::size_t, V>>> w(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      Accumulator<K> acc(f, n * n);
      for (const auto& s : d3[j])
        for (const auto& u : dual3[k]) {
          const V x = sinv.at({s.r, u.p});
          if (f.is_zero(x)) continue;
          const V y = t.at({s.p, u.r});
          if (f.is_zero(y)) continue;
          acc.add(u.q * n + s.q, s.c * u.c * x * y);
        }
      for (const auto& e : acc.take()) w[j * n + k].emplace_back(e.index / n, e.index % n, e.value);
    }

  std::vector<std::pair<Index, V>> items;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          for (const auto& [b, q, c] : w[j * n + k])
            for (const auto& phi : dual.product(i, b))
              for (const auto& e : h.algebra().product(q, l))
                items.push_back({{i * n + j, k * n + l, static_cast<std::size_t>(dual.mult_index(phi) * n + h.algebra().mult_index(e))},
                                 c * phi.value * e.value});
  std::vector<std::pair<Index, V>> unit;
  for (const auto& x : h.counit().entries())
    for (const auto& y : h.unit().entries()) unit.push_back({{static_cast<std::size_t>(x.index * n + y.index)}, x.value * y.value});
  FinAlgebra<K> out(f, Tensor<K>::from_entries(f, {d, d, d}, items), Tensor<K>::from_entries(f, {d}, unit), pair_names(h));
  require(verify_algebra(out), twisted ? "build_AH" : "build_double");
  return out;
}

}  // namespace detail

/// A(H); aborts with VerificationError if associativity or unit fails.
template <class K>
FinAlgebra<K> build_AH(const FinHopfAlgebra<K>& h) {
  return detail::build_twisted_product(h, true);
}

/// D(H) as an algebra: the A(H) product with S^2 replaced by the identity.
template <class K>
FinAlgebra<K> build_double(const FinHopfAlgebra<K>& h) {
  return detail::build_twisted_product(h, false);
}

namespace detail {

/// Delta_D(e_i* (x) e_j) = sum (e_i*(2) (x) e_j(1)) (x) (e_i*(1) (x) e_j(2)), as a
/// (d, d, d) tensor.
template <class K>
Tensor<K> double_comultiplication(const FinHopfAlgebra<K>& h) {
  const std::size_t n = h.dim(), d = n * n;
  std::vector<std::pair<Index, typename K::value_type>> items;
  // Delta_{H*}(e_i*) = sum mult[a, b, i] e_a* (x) e_b*
  for (const auto& m : h.mult().entries()) {
    const Index abi = unravel(h.mult().shape(), m.index);
    for (const auto& c : h.comult().entries()) {
      const Index jpq = unravel(h.comult().shape(), c.index);
      items.push_back({{abi[2] * n + jpq[0], abi[1] * n + jpq[1], abi[0] * n + jpq[2]}, m.value * c.value});
    }
  }
  return Tensor<K>::from_entries(h.field(), {d, d, d}, items);
}

}  // namespace detail

/// D(H) as a Hopf algebra: coproduct above, counit phi(1) eps(h), antipode
/// S_D(phi (x) h) = (eps (x) S(h)) (phi o S^-1 (x) 1).
template <class K>
FinHopfAlgebra<K> double_hopf(const FinHopfAlgebra<K>& h) {
  using V = typename K::value_type;
  const K& f = h.field();
  const std::size_t n = h.dim(), d = n * n;
  FinAlgebra<K> alg = build_double(h);
  std::vector<std::pair<Index, V>> counit, antipode;
  for (const auto& u : h.unit().entries())
    for (const auto& e : h.counit().entries())
      counit.push_back({{static_cast<std::size_t>(u.index * n + e.index)}, u.value * e.value});
  SparseVec<K> eps_star;  // eps as an element of H*
  for (const auto& e : h.counit().entries()) eps_star.push_back(e);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // left factor eps (x) S(e_j), right factor (e_i* o S^-1) (x) 1
      Accumulator<K> left(f, d), right(f, d);
      for (const auto& e : eps_star)
        for (const auto& s : h.antipode_of(j)) left.add(e.index * n + s.index % n, e.value * s.value);
      for (std::size_t c = 0; c < n; ++c) {
        const V x = h.antipode_inverse().at({c, i});
        if (f.is_zero(x)) continue;
        for (const auto& u : h.unit().entries()) right.add(c * n + u.index, x * u.value);
      }
      for (const auto& e : alg.multiply(left.take(), right.take())) antipode.push_back({{i * n + j, static_cast<std::size_t>(e.index)}, e.value});
    }
  return verified(FinHopfAlgebra<K>(f, alg.mult(), alg.unit(), detail::double_comultiplication(h),
                                    Tensor<K>::from_entries(f, {d}, counit), Tensor<K>::from_entries(f, {d, d}, antipode),
                                    alg.basis_names()));
}

/// Right D(H)-coaction on A(H): (phi (x) h) -> (phi(2) (x) h(1)) (x) (phi(1) (x) h(2)).
template <class K>
CoactionStructure<K> AH_double_coaction(const FinHopfAlgebra<K>& h) {
  require_verified(h);
  return CoactionStructure<K>(Side::right, h.dim() * h.dim(), detail::double_comultiplication(h));
}

namespace detail {

/// action[(i, j), a, c] = sum_b rho[j, a, b] lambda[b, c, i]:
/// (phi (x) h) m = phi((hm)(1)) (hm)(0).
template <class K>
Tensor<K> pair_action(const TwoSidedStructure<K>& m) {
  const std::size_t n = m.hopf().dim(), d = m.dim();
  std::vector<std::pair<Index, typename K::value_type>> items;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t a = 0; a < d; ++a)
      for (const auto& x : m.action().row(j, a)) {
        const auto b = static_cast<std::size_t>(m.action().target(x));
        for (const auto& t : m.coaction().terms(b)) items.push_back({{t.h * n + j, a, t.m}, x.value * t.c});
      }
  return Tensor<K>::from_entries(m.hopf().field(), {n * n, d, d}, items);
}

}  // namespace detail

/// Left A(H)-module from an lr-case aYD module.
template <class K>
AlgebraModule<K> ayd_to_AH_module(const FinHopfAlgebra<K>& h, const TwoSidedStructure<K>& m) {
  if (m.structure_case() != Case::lr) throw InputError("ayd_to_AH_module needs the lr case");
  if (auto r = check_ayd(m); !r) throw InputError("ayd_to_AH_module: input fails check_ayd: " + r.summary());
  AlgebraModule<K> out(build_AH(h), m.dim(), detail::pair_action(m));
  require(verify_module(out), "ayd_to_AH_module");
  return out;
}

/// Left D(H)-module from an lr-case YD module.
template <class K>
AlgebraModule<K> yd_to_double_module(const FinHopfAlgebra<K>& h, const TwoSidedStructure<K>& m) {
  if (m.structure_case() != Case::lr) throw InputError("yd_to_double_module needs the lr case");
  if (auto r = check_yd(m); !r) throw InputError("yd_to_double_module: input fails check_yd: " + r.summary());
  AlgebraModule<K> out(build_double(h), m.dim(), detail::pair_action(m));
  require(verify_module(out), "yd_to_double_module");
  return out;
}

/// h m = (eps (x) h) m and Delta_M(m) = sum_i (e_i* (x) 1) m (x) e_i.
template <class K>
TwoSidedStructure<K> AH_module_to_ayd(const FinHopfAlgebra<K>& h, const AlgebraModule<K>& v) {
  using V = typename K::value_type;
  const K& f = h.field();
  const std::size_t n = h.dim(), d = v.dim;
  if (v.algebra.dim() != n * n) throw InputError("module is not over an algebra of dimension n^2");
  std::vector<std::pair<Index, V>> act, coact;
  for (const auto& e : v.action.entries()) {
    const Index t = unravel(v.action.shape(), e.index);
    const std::size_t i = t[0] / n, j = t[0] % n;
    const V eps = h.counit().at_linear(i), eta = h.unit().at_linear(j);
    if (!f.is_zero(eps)) act.push_back({{j, t[1], t[2]}, eps * e.value});
    if (!f.is_zero(eta)) coact.push_back({{t[1], t[2], i}, eta * e.value});
  }
  return TwoSidedStructure<K>(h, ActionStructure<K>(Side::left, d, Tensor<K>::from_entries(f, {n, d, d}, act)),
                              CoactionStructure<K>(Side::right, d, Tensor<K>::from_entries(f, {d, d, n}, coact)));
}

}  // namespace hayd
