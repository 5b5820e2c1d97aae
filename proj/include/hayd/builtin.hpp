#pragma once

// Builtin example Hopf algebras: group algebras kG, function algebras k^G,
// Sweedler's 4-dimensional algebra and the Taft algebras.

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "hayd/hopf.hpp"

namespace hayd {

/// Finite group as a Cayley table: table[a * order + b] = a b.
struct Group {
  std::size_t order = 0;
  std::vector<std::size_t> table;
  std::size_t identity = 0;
  std::vector<std::string> names;

  std::size_t mul(std::size_t a, std::size_t b) const { return table[a * order + b]; }
  std::size_t inverse(std::size_t a) const {
    for (std::size_t b = 0; b < order; ++b)
      if (mul(a, b) == identity) return b;
    throw InputError("element has no inverse");
  }
};

/// Throws InputError unless the table is a group with the given identity.
inline void validate_group(const Group& g) {
  const std::size_t n = g.order;
  if (n == 0 || g.table.size() != n * n) throw InputError("Cayley table must be order x order");
  if (g.identity >= n) throw InputError("identity index out of range");
  if (!g.names.empty() && g.names.size() != n) throw InputError("group name count mismatch");
  for (auto v : g.table)
    if (v >= n) throw InputError("Cayley table entry out of range");
  for (std::size_t a = 0; a < n; ++a)
    if (g.mul(g.identity, a) != a || g.mul(a, g.identity) != a) throw InputError("identity element is not neutral");
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<char> seen(n, 0);
    for (std::size_t b = 0; b < n; ++b) seen[g.mul(a, b)] = 1;
    if (std::count(seen.begin(), seen.end(), 1) != static_cast<long>(n)) throw InputError("Cayley table row is not a permutation");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) throw InputError("Cayley table is not associative");
}

inline Group cyclic_group(std::size_t n) {
  Group g;
  g.order = n;
  g.table.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g.table[a * n + b] = (a + b) % n;
  for (std::size_t a = 0; a < n; ++a) g.names.push_back(a == 0 ? "1" : a == 1 ? "c" : "c^" + std::to_string(a));
  return g;
}

/// S_3 as permutations of {1,2,3} in lexicographic order; (s t)(x) = s(t(x)).
/// Index 0 is the identity; the transpositions are indices 1, 2, 5.
inline Group symmetric_group3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  Group g;
  g.order = perms.size();
  g.table.resize(g.order * g.order);
  for (std::size_t a = 0; a < g.order; ++a)
    for (std::size_t b = 0; b < g.order; ++b) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      g.table[a * g.order + b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  g.names = {"e", "(23)", "(12)", "(123)", "(132)", "(13)"};
  return g;
}

template <class K>
FinHopfAlgebra<K> group_algebra(const Group& g, K f) {
  validate_group(g);
  const std::size_t n = g.order;
  std::vector<std::pair<Index, typename K::value_type>> mult, unit, comult, counit, antipode;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mult.push_back({{a, b, g.mul(a, b)}, f.one()});
    comult.push_back({{a, a, a}, f.one()});
    counit.push_back({{a}, f.one()});
    antipode.push_back({{a, g.inverse(a)}, f.one()});
  }
  unit.push_back({{g.identity}, f.one()});
  auto names = g.names;
  return verified(FinHopfAlgebra<K>(f, Tensor<K>::from_entries(f, {n, n, n}, mult), Tensor<K>::from_entries(f, {n}, unit),
                                    Tensor<K>::from_entries(f, {n, n, n}, comult), Tensor<K>::from_entries(f, {n}, counit),
                                    Tensor<K>::from_entries(f, {n, n}, antipode), names));
}

/// k^G on the basis of point indicators delta_g.
template <class K>
FinHopfAlgebra<K> function_algebra(const Group& g, K f) {
  validate_group(g);
  const std::size_t n = g.order;
  std::vector<std::pair<Index, typename K::value_type>> mult, unit, comult, counit, antipode;
  for (std::size_t a = 0; a < n; ++a) {
    mult.push_back({{a, a, a}, f.one()});
    unit.push_back({{a}, f.one()});
    for (std::size_t b = 0; b < n; ++b) comult.push_back({{g.mul(a, b), a, b}, f.one()});
    antipode.push_back({{a, g.inverse(a)}, f.one()});
  }
  counit.push_back({{g.identity}, f.one()});
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) names.push_back("d[" + (g.names.empty() ? std::to_string(a) : g.names[a]) + "]");
  return verified(FinHopfAlgebra<K>(f, Tensor<K>::from_entries(f, {n, n, n}, mult), Tensor<K>::from_entries(f, {n}, unit),
                                    Tensor<K>::from_entries(f, {n, n, n}, comult), Tensor<K>::from_entries(f, {n}, counit),
                                    Tensor<K>::from_entries(f, {n, n}, antipode), names));
}

/// Multiplicative order of z, or 0 if z = 0.
template <class K>
std::size_t multiplicative_order(const K& f, const typename K::value_type& z, std::size_t limit) {
  if (f.is_zero(z)) return 0;
  typename K::value_type w = z;
  for (std::size_t k = 1; k <= limit; ++k) {
    if (w == f.one()) return k;
    w = w * z;
  }
  return 0;
}

/// Taft algebra of dimension n^2: generated by g, x with g^n = 1, x^n = 0,
/// x g = zeta g x, Delta g = g (x) g, Delta x = x (x) 1 + g (x) x,
/// S g = g^{-1}, S x = -g^{-1} x.  Basis index b * n + a is g^a x^b.
/// zeta must have multiplicative order exactly n.
template <class K>
FinHopfAlgebra<K> taft(std::size_t n, K f, const typename K::value_type& zeta) {
  using V = typename K::value_type;
  if (n < 2) throw InputError("taft needs n >= 2");
  if (multiplicative_order(f, zeta, n) != n)
    throw InputError("taft: zeta must have multiplicative order " + std::to_string(n) + " in " + f.name());
  const std::size_t d = n * n;
  auto idx = [n](std::size_t a, std::size_t b) { return b * n + a; };
  std::vector<V> zpow(n * n, f.one());
  for (std::size_t k = 1; k < zpow.size(); ++k) zpow[k] = zpow[k - 1] * zeta;

  std::vector<std::pair<Index, V>> mult;
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t dd = 0; dd < n; ++dd)
        for (std::size_t c = 0; c < n; ++c) {
          if (b + dd >= n) continue;
          // (g^a x^b)(g^c x^d) = zeta^{bc} g^{a+c} x^{b+d}
          mult.push_back({{idx(a, b), idx(c, dd), idx((a + c) % n, b + dd)}, zpow[(b * c) % n]});
        }
  Tensor<K> mult_t = Tensor<K>::from_entries(f, {d, d, d}, mult);
  Tensor<K> unit_t = Tensor<K>::from_entries(f, {d}, {{{idx(0, 0)}, f.one()}});
  FinAlgebra<K> alg(f, mult_t, unit_t);

  // Delta and S on basis words from their values on the generators.
  auto tensor_mult = [&](const SparseVec<K>& u, const SparseVec<K>& v) {
    Accumulator<K> acc(f, d * d);
    for (const auto& p : u)
      for (const auto& q : v)
        for (const auto& r : alg.product(p.index / d, q.index / d))
          for (const auto& s : alg.product(p.index % d, q.index % d))
            acc.add(alg.mult_index(r) * d + alg.mult_index(s), p.value * q.value * r.value * s.value);
    return acc.take();
  };
  const SparseVec<K> delta_g{{idx(1, 0) * d + idx(1, 0), f.one()}};
  SparseVec<K> delta_x{{idx(0, 1) * d + idx(0, 0), f.one()}, {idx(1, 0) * d + idx(0, 1), f.one()}};
  std::sort(delta_x.begin(), delta_x.end(), [](const auto& p, const auto& q) { return p.index < q.index; });
  const SparseVec<K> s_g = basis_vector(f, idx(n - 1, 0));
  const SparseVec<K> s_x{{idx(n - 1, 1), -f.one()}};

  std::vector<std::pair<Index, V>> comult, antipode, counit;
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a) {
      SparseVec<K> dv{{idx(0, 0) * d + idx(0, 0), f.one()}};
      SparseVec<K> sv = alg.unit_vec();
      for (std::size_t k = 0; k < a; ++k) dv = tensor_mult(dv, delta_g);
      for (std::size_t k = 0; k < b; ++k) dv = tensor_mult(dv, delta_x);
      // S(g^a x^b) = S(x)^b S(g)^a
      for (std::size_t k = 0; k < b; ++k) sv = alg.multiply(sv, s_x);
      for (std::size_t k = 0; k < a; ++k) sv = alg.multiply(sv, s_g);
      for (const auto& e : dv) comult.push_back({{idx(a, b), e.index / d, e.index % d}, e.value});
      for (const auto& e : sv) antipode.push_back({{idx(a, b), e.index}, e.value});
      if (b == 0) counit.push_back({{idx(a, b)}, f.one()});
    }

  std::vector<std::string> names;
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a) {
      std::string gpart = a == 0 ? "" : a == 1 ? "g" : "g^" + std::to_string(a);
      std::string xpart = b == 0 ? "" : b == 1 ? "x" : "x^" + std::to_string(b);
      names.push_back(gpart.empty() && xpart.empty() ? "1" : gpart + xpart);
    }
  return verified(FinHopfAlgebra<K>(f, mult_t, unit_t, Tensor<K>::from_entries(f, {d, d, d}, comult),
                                    Tensor<K>::from_entries(f, {d}, counit), Tensor<K>::from_entries(f, {d, d}, antipode),
                                    names));
}

/// Sweedler's algebra: basis {1, g, x, gx}, the Taft algebra with zeta = -1.
template <class K>
FinHopfAlgebra<K> sweedler(K f) {
  return taft<K>(2, f, -f.one());
}

/// The one-dimensional Hopf algebra k.
template <class K>
FinHopfAlgebra<K> trivial_hopf(K f) {
  Tensor<K> one1 = Tensor<K>::from_entries(f, {1}, {{{0}, f.one()}});
  Tensor<K> one2 = Tensor<K>::from_entries(f, {1, 1}, {{{0, 0}, f.one()}});
  Tensor<K> one3 = Tensor<K>::from_entries(f, {1, 1, 1}, {{{0, 0, 0}, f.one()}});
  return verified(FinHopfAlgebra<K>(f, one3, one1, one3, one1, one2, {"1"}));
}

}  // namespace hayd
