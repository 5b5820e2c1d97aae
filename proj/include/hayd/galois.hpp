#pragma once

// Right H-comodule algebras and the Hopf-Galois pipeline:
// coinvariants -> P (x)_B P -> can -> translation map -> Miyashita-Ulbrich
// actions.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hayd/ayd.hpp"

namespace hayd {

/// Coassociativity, counit, lambda(ab) = lambda(a) lambda(b), lambda(1) = 1 (x) 1.
template <class K>
Report<K> check_comodule_algebra(const FinAlgebra<K>& a, const FinHopfAlgebra<K>& h, const CoactionStructure<K>& c) {
  if (c.side() != Side::right) throw InputError("comodule algebras use a right coaction");
  if (c.dim() != a.dim()) throw InputError("coaction dimension does not match the algebra");
  const K& f = a.field();
  const std::size_t m = a.dim(), n = h.dim();
  if (auto r = verify_coaction(h, c); !r) return r;
  Accumulator<K> acc(f, m * n);
  auto tensor_product = [&](const SparseVec<K>& x, const SparseVec<K>& y) {
    for (const auto& p : x)
      for (const auto& q : y)
        for (const auto& s : a.product(p.index / n, q.index / n))
          for (const auto& t : h.algebra().product(p.index % n, q.index % n))
            acc.add(a.mult_index(s) * n + h.algebra().mult_index(t), p.value * q.value * s.value * t.value);
    return acc.take();
  };
  auto mult = check_tuples(f, "comodule_multiplicativity", {m, m}, {m, n}, [&](const Index& t) {
    auto lhs = c.apply(a.multiply(basis_vector(f, t[0]), basis_vector(f, t[1])));
    return std::pair{lhs, tensor_product(c.apply(basis_vector(f, t[0])), c.apply(basis_vector(f, t[1])))};
  });
  if (!mult) return mult;
  auto unit = check_tuples(f, "comodule_unit", {1}, {m, n}, [&](const Index&) {
    for (const auto& x : a.unit_vec())
      for (const auto& y : h.unit_vec()) acc.add(x.index * n + y.index, x.value * y.value);
    return std::pair{c.apply(a.unit_vec()), acc.take()};
  });
  if (!unit) return unit;
  return Report<K>::pass("comodule_algebra");
}

/// Algebra P with a right H-coaction that is an algebra map; verified on
/// construction.
template <class K>
class ComoduleAlgebra {
 public:
  ComoduleAlgebra(FinAlgebra<K> p, FinHopfAlgebra<K> h, CoactionStructure<K> coaction)
      : p_(std::move(p)), h_(std::move(h)), coaction_(std::move(coaction)) {
    require_verified(h_);
    require(verify_algebra(p_), "comodule algebra");
    require(check_comodule_algebra(p_, h_, coaction_), "comodule algebra");
  }

  const FinAlgebra<K>& algebra() const { return p_; }
  const FinHopfAlgebra<K>& hopf() const { return h_; }
  const CoactionStructure<K>& coaction() const { return coaction_; }
  std::size_t dim() const { return p_.dim(); }

 private:
  FinAlgebra<K> p_;
  FinHopfAlgebra<K> h_;
  CoactionStructure<K> coaction_;
};

/// H over itself via Delta.
template <class K>
ComoduleAlgebra<K> regular_comodule_algebra(const FinHopfAlgebra<K>& h) {
  return ComoduleAlgebra<K>(h.algebra(), h, regular_coaction(h, Side::right));
}

/// Basis of B = {p : Delta_P(p) = p (x) 1}, in reduced echelon form.
template <class K>
Subspace<K> coinvariants(const ComoduleAlgebra<K>& p) {
  const K& f = p.algebra().field();
  const std::size_t m = p.dim(), n = p.hopf().dim();
  Matrix<K> map(f, m, m * n);
  for (std::size_t a = 0; a < m; ++a) {
    for (const auto& e : p.coaction().apply(basis_vector(f, a))) map(a, e.index) += e.value;
    for (const auto& u : p.hopf().unit_vec()) map(a, a * n + u.index) -= u.value;
  }
  auto b = Subspace<K>::span(f, m, left_kernel(map));
  for (const auto& x : b.basis)
    for (const auto& y : b.basis) {
      auto xy = to_dense(f, p.algebra().multiply(to_sparse(f, x), to_sparse(f, y)), m);
      if (!b.contains(xy)) throw VerificationError("coinvariants are not closed under multiplication");
    }
  return b;
}

/// Coaction of P restricted to a subcomodule, in the subspace's coordinates.
template <class K>
CoactionStructure<K> restrict_coaction(const ComoduleAlgebra<K>& p, const Subspace<K>& sub) {
  const K& f = p.algebra().field();
  const std::size_t m = p.dim(), n = p.hopf().dim(), d = sub.dim();
  std::vector<std::pair<Index, typename K::value_type>> items;
  for (std::size_t a = 0; a < d; ++a) {
    // component u of Delta_P(z_a) lies in the subspace
    std::vector<std::vector<typename K::value_type>> comp(n, std::vector<typename K::value_type>(m, f.zero()));
    for (const auto& e : p.coaction().apply(to_sparse(f, sub.basis[a]))) comp[e.index % n][e.index / n] = e.value;
    for (std::size_t u = 0; u < n; ++u) {
      auto c = sub.coords(comp[u]);
      if (!c) throw VerificationError("subspace is not a subcomodule");
      for (std::size_t b = 0; b < d; ++b)
        if (!f.is_zero((*c)[b])) items.push_back({{a, b, u}, (*c)[b]});
    }
  }
  return CoactionStructure<K>(Side::right, d, Tensor<K>::from_entries(f, {d, d, n}, items));
}

/// Z_B(P) = {p : bp = pb for all b in B}; verified to be a subcomodule.
template <class K>
Subspace<K> centralizer(const ComoduleAlgebra<K>& p, const Subspace<K>& b) {
  const K& f = p.algebra().field();
  const std::size_t m = p.dim(), k = b.dim();
  if (b.ambient != m) throw InputError("centralizer: B does not live in P");
  Matrix<K> map(f, m, std::max<std::size_t>(1, m * k));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t r = 0; r < k; ++r) {
      const auto br = to_sparse(f, b.basis[r]);
      for (const auto& e : p.algebra().multiply(br, basis_vector(f, a))) map(a, r * m + e.index) += e.value;
      for (const auto& e : p.algebra().multiply(basis_vector(f, a), br)) map(a, r * m + e.index) -= e.value;
    }
  auto z = Subspace<K>::span(f, m, left_kernel(map));
  restrict_coaction(p, z);
  return z;
}

template <class K>
bool is_central(const FinAlgebra<K>& a, const Subspace<K>& b) {
  const K& f = a.field();
  for (const auto& x : b.basis) {
    const auto xs = to_sparse(f, x);
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (a.multiply(xs, basis_vector(f, i)) != a.multiply(basis_vector(f, i), xs)) return false;
  }
  return true;
}

/// P (x)_B P as the quotient of P (x) P by span{pb (x) p' - p (x) bp'}.
/// projection: (m^2, d); section and alt_section: (d, m^2), with
/// alt_section differing from section by a relation vector.
template <class K>
struct RelativeTensor {
  std::size_t dim_p = 0;
  std::size_t dim = 0;
  Tensor<K> relations;  // (rank, m^2), reduced echelon rows
  Tensor<K> projection;
  Tensor<K> section;
  Tensor<K> alt_section;
};

template <class K>
RelativeTensor<K> relative_tensor(const FinAlgebra<K>& p, const Subspace<K>& b) {
  using V = typename K::value_type;
  const K& f = p.field();
  const std::size_t m = p.dim(), mm = m * m;
  std::vector<std::vector<V>> rows;
  for (const auto& bv : b.basis) {
    const auto bs = to_sparse(f, bv);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        std::vector<V> r(mm, f.zero());
        for (const auto& e : p.multiply(basis_vector(f, i), bs)) r[e.index * m + j] += e.value;
        for (const auto& e : p.multiply(bs, basis_vector(f, j))) r[i * m + e.index] -= e.value;
        rows.push_back(std::move(r));
      }
  }
  const auto rel = Subspace<K>::span(f, mm, rows);
  std::vector<long> pivot_row(mm, -1);
  for (std::size_t r = 0; r < rel.dim(); ++r) pivot_row[rel.pivots[r]] = static_cast<long>(r);
  std::vector<std::size_t> free;
  for (std::size_t k = 0; k < mm; ++k)
    if (pivot_row[k] < 0) free.push_back(k);
  const std::size_t d = free.size();

  std::vector<std::pair<Index, V>> proj, sec, alt, relt;
  for (std::size_t k = 0; k < mm; ++k)
    for (std::size_t q = 0; q < d; ++q) {
      if (k == free[q])
        proj.push_back({{k, q}, f.one()});
      else if (pivot_row[k] >= 0)
        proj.push_back({{k, q}, -rel.basis[static_cast<std::size_t>(pivot_row[k])][free[q]]});
    }
  for (std::size_t q = 0; q < d; ++q) {
    sec.push_back({{q, free[q]}, f.one()});
    alt.push_back({{q, free[q]}, f.one()});
    if (rel.dim() > 0) {
      const auto& r = rel.basis[q % rel.dim()];
      for (std::size_t k = 0; k < mm; ++k)
        if (!f.is_zero(r[k])) alt.push_back({{q, k}, r[k]});
    }
  }
  for (std::size_t r = 0; r < rel.dim(); ++r)
    for (std::size_t k = 0; k < mm; ++k)
      if (!f.is_zero(rel.basis[r][k])) relt.push_back({{r, k}, rel.basis[r][k]});
  return {m,
          d,
          Tensor<K>::from_entries(f, {rel.dim(), mm}, relt),
          Tensor<K>::from_entries(f, {mm, d}, proj),
          Tensor<K>::from_entries(f, {d, mm}, sec),
          Tensor<K>::from_entries(f, {d, mm}, alt)};
}

/// Everything built from a comodule algebra P on the way to the Galois test.
template <class K>
struct GaloisData {
  ComoduleAlgebra<K> source;
  Subspace<K> coinvariants;
  RelativeTensor<K> quotient;
  Tensor<K> can;  // (dim Q, m n) on P (x)_B P
  std::size_t can_rank = 0;
  bool bijective = false;
  std::optional<Tensor<K>> can_inverse;  // (m n, dim Q)
};

/// can(p (x) p') = p p'(0) (x) p'(1) as a (m^2, m n) matrix on P (x) P.
template <class K>
Tensor<K> canonical_map_on_pp(const ComoduleAlgebra<K>& p) {
  const auto& a = p.algebra();
  const std::size_t m = p.dim(), n = p.hopf().dim();
  std::vector<std::pair<Index, typename K::value_type>> items;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (const auto& t : p.coaction().terms(j))
        for (const auto& e : a.product(i, t.m))
          items.push_back({{i * m + j, static_cast<std::size_t>(a.mult_index(e) * n + t.h)}, t.c * e.value});
  return Tensor<K>::from_entries(a.field(), {m * m, m * n}, items);
}

/// Builds B, P (x)_B P and can, and decides bijectivity by dimension and rank.
template <class K>
GaloisData<K> canonical_map(const ComoduleAlgebra<K>& p) {
  const std::size_t m = p.dim(), n = p.hopf().dim();
  auto b = coinvariants(p);
  auto q = relative_tensor(p.algebra(), b);
  Tensor<K> full = canonical_map_on_pp(p);
  if (q.relations.dim(0) > 0 && compose(q.relations, full).nnz() != 0)
    throw VerificationError("can does not vanish on the relations of P (x)_B P");
  Tensor<K> can = compose(q.section, full);
  const std::size_t r = rank(Matrix<K>::from_tensor(can));
  GaloisData<K> g{p, std::move(b), std::move(q), can, r, false, std::nullopt};
  if (g.quotient.dim == m * n && r == m * n) {
    g.can_inverse = invert_matrix(can).inverse;
    g.bijective = true;
  }
  return g;
}

/// T(h_i) = can^-1(1 (x) h_i) as rows of an (n, dim Q) table; checks can T = 1 (x) h.
template <class K>
Tensor<K> translation_map(const GaloisData<K>& g) {
  if (!g.bijective) throw InputError("translation map needs a Hopf-Galois extension");
  const auto& p = g.source;
  const K& f = p.algebra().field();
  const std::size_t n = p.hopf().dim();
  std::vector<std::pair<Index, typename K::value_type>> ones;
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& u : p.algebra().unit_vec()) ones.push_back({{i, static_cast<std::size_t>(u.index * n + i)}, u.value});
  Tensor<K> one_h = Tensor<K>::from_entries(f, {n, p.dim() * n}, ones);
  Tensor<K> t = compose(one_h, *g.can_inverse);
  if (!(compose(t, g.can) == one_h)) throw VerificationError("can(T(h)) differs from 1 (x) h");
  return t;
}

/// Right action on a subspace of P together with that subspace.
template <class K>
struct MuAction {
  Subspace<K> carrier;
  ActionStructure<K> action;
};

namespace detail {

/// p . h_i from the lifted translation element sum c_kl e_k (x) e_l:
/// standard e_k p e_l, flipped e_l p e_k.
template <class K>
SparseVec<K> mu_apply(const FinAlgebra<K>& a, const SparseVec<K>& lifted, const SparseVec<K>& p, bool flipped) {
  const std::size_t m = a.dim();
  Accumulator<K> acc(a.field(), m);
  for (const auto& e : lifted) {
    const std::size_t k = e.index / m, l = e.index % m;
    const auto left = basis_vector(a.field(), flipped ? l : k), right = basis_vector(a.field(), flipped ? k : l);
    for (const auto& x : a.multiply(a.multiply(left, p), right)) acc.add(x.index, e.value * x.value);
  }
  return acc.take();
}

/// Row i of `table` lifted to P (x) P through `section`.
template <class K>
SparseVec<K> lift(const Tensor<K>& table, std::size_t i, const Tensor<K>& section) {
  SparseVec<K> row;
  const std::size_t d = table.dim(1);
  for (const auto& e : table.entries())
    if (e.index / d == i) row.push_back({e.index % d, e.value});
  return apply_matrix(section, row);
}

/// Translation elements used by the (flipped) action: T(h_i), or T(S^-1 h_i).
template <class K>
Tensor<K> mu_table(const GaloisData<K>& g, bool flipped) {
  Tensor<K> t = translation_map(g);
  return flipped ? compose(antipode_inverse(g.source.hopf()), t) : t;
}

}  // namespace detail

/// Evaluates the (flipped) action through two different section
/// representatives on every carrier basis vector; witness (h, carrier index).
template <class K>
Report<K> check_mu_well_defined(const GaloisData<K>& g, bool flipped) {
  const auto& a = g.source.algebra();
  const K& f = a.field();
  const std::size_t n = g.source.hopf().dim();
  const Subspace<K> carrier = flipped ? Subspace<K>::span(f, a.dim(), {}) : centralizer(g.source, g.coinvariants);
  const std::size_t d = flipped ? a.dim() : carrier.dim();
  const Tensor<K> table = detail::mu_table(g, flipped);
  return check_tuples(f, flipped ? "flipped_mu_well_defined" : "mu_well_defined", {n, d}, {a.dim()}, [&](const Index& t) {
    const auto p = flipped ? basis_vector(f, t[1]) : to_sparse(f, carrier.basis[t[1]]);
    return std::pair{detail::mu_apply(a, detail::lift(table, t[0], g.quotient.section), p, flipped),
                     detail::mu_apply(a, detail::lift(table, t[0], g.quotient.alt_section), p, flipped)};
  });
}

/// Standard: p h = h^[1] p h^[2] on Z_B(P).  Flipped: p h = S^-1(h)^[2] p
/// S^-1(h)^[1] on all of P, which requires B central.
template <class K>
MuAction<K> mu_action(const GaloisData<K>& g, bool flipped) {
  using V = typename K::value_type;
  const auto& a = g.source.algebra();
  const K& f = a.field();
  const std::size_t m = a.dim(), n = g.source.hopf().dim();
  if (!g.bijective) throw InputError("Miyashita-Ulbrich action needs a Hopf-Galois extension");
  if (flipped && !is_central(a, g.coinvariants)) throw InputError("flipped action needs coinvariants central in P");
  require(check_mu_well_defined(g, flipped), "Miyashita-Ulbrich action");

  std::vector<std::vector<V>> ident;
  for (std::size_t i = 0; i < m; ++i) ident.push_back(to_dense(f, basis_vector(f, i), m));
  Subspace<K> carrier = flipped ? Subspace<K>::span(f, m, ident) : centralizer(g.source, g.coinvariants);
  const std::size_t d = carrier.dim();
  const Tensor<K> table = detail::mu_table(g, flipped);
  std::vector<std::pair<Index, V>> items;
  for (std::size_t i = 0; i < n; ++i) {
    const auto lifted = detail::lift(table, i, g.quotient.section);
    for (std::size_t r = 0; r < d; ++r) {
      auto image = to_dense(f, detail::mu_apply(a, lifted, to_sparse(f, carrier.basis[r]), flipped), m);
      auto c = carrier.coords(image);
      if (!c) throw VerificationError("Miyashita-Ulbrich action leaves the centralizer");
      for (std::size_t s = 0; s < d; ++s)
        if (!f.is_zero((*c)[s])) items.push_back({{i, r, s}, (*c)[s]});
    }
  }
  ActionStructure<K> action(Side::right, d, Tensor<K>::from_entries(f, {n, d, d}, items));
  require(verify_action(g.source.hopf(), action), "Miyashita-Ulbrich action");
  return {std::move(carrier), std::move(action)};
}

/// Z_B(P) with the standard action and the restricted coaction (rr case).
template <class K>
TwoSidedStructure<K> mu_module(const GaloisData<K>& g) {
  auto mu = mu_action(g, false);
  return TwoSidedStructure<K>(g.source.hopf(), mu.action, restrict_coaction(g.source, mu.carrier));
}

/// P with the flipped action and Delta_P; asserted to be a stable rr aYD module.
template <class K>
TwoSidedStructure<K> make_stable_ayd(const ComoduleAlgebra<K>& p) {
  auto g = canonical_map(p);
  if (!g.bijective) throw InputError("make_stable_ayd: canonical map is not bijective");
  if (!is_central(p.algebra(), g.coinvariants)) throw InputError("make_stable_ayd: coinvariants are not central in P");
  auto mu = mu_action(g, true);
  TwoSidedStructure<K> out(p.hopf(), mu.action, p.coaction());
  require(check_ayd(out), "make_stable_ayd");
  require(check_stability(out), "make_stable_ayd");
  return out;
}

}  // namespace hayd
