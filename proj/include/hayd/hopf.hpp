#pragma once

// Finite-dimensional Hopf algebras as structure constants.
//
//   e_i e_j     = sum_k mult[i,j,k] e_k          unit    = sum_k unit[k] e_k
//   Delta(e_i)  = sum_{j,k} comult[i,j,k] e_j (x) e_k
//   eps(e_i)    = counit[i]
//   S(e_i)      = sum_j antipode[i,j] e_j

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hayd/algebra.hpp"

namespace hayd {

template <class K>
class FinHopfAlgebra;

template <class K>
FinHopfAlgebra<K> verified(FinHopfAlgebra<K> h);

template <class K>
class FinHopfAlgebra {
 public:
  using V = typename K::value_type;

  FinHopfAlgebra(K field, Tensor<K> mult, Tensor<K> unit, Tensor<K> comult, Tensor<K> counit,
                 Tensor<K> antipode, std::vector<std::string> names = {})
      : algebra_(field, std::move(mult), std::move(unit), std::move(names)),
        comult_(std::move(comult), 1),
        counit_(std::move(counit)),
        antipode_(std::move(antipode), 1) {
    const std::size_t n = algebra_.dim();
    if (comult_.tensor().shape() != Shape{n, n, n}) throw InputError("comultiplication must have shape (n,n,n)");
    if (counit_.shape() != Shape{n}) throw InputError("counit must have shape (n)");
    if (antipode_.tensor().shape() != Shape{n, n}) throw InputError("antipode must have shape (n,n)");
  }

  const K& field() const { return algebra_.field(); }
  std::size_t dim() const { return algebra_.dim(); }
  const FinAlgebra<K>& algebra() const { return algebra_; }
  const Tensor<K>& mult() const { return algebra_.mult(); }
  const Tensor<K>& unit() const { return algebra_.unit(); }
  const Tensor<K>& comult() const { return comult_.tensor(); }
  const Tensor<K>& counit() const { return counit_; }
  const Tensor<K>& antipode() const { return antipode_.tensor(); }
  const std::vector<std::string>& basis_names() const { return algebra_.basis_names(); }

  bool is_verified() const { return verified_; }

  /// Cached at verification time.
  const Tensor<K>& antipode_inverse() const {
    if (!antipode_inv_) throw InputError("Hopf algebra has not been verified");
    return antipode_inv_->tensor();
  }

  // Element-level helpers.  Elements are SparseVecs over the basis; tensor
  // powers use row-major linear indices.

  SparseVec<K> unit_vec() const { return algebra_.unit_vec(); }

  SparseVec<K> multiply(const SparseVec<K>& a, const SparseVec<K>& b) const { return algebra_.multiply(a, b); }

  std::span<const Entry<K>> coproduct_of(std::size_t i) const { return comult_[i]; }

  SparseVec<K> coproduct(const SparseVec<K>& a) const {
    Accumulator<K> acc(field(), dim() * dim());
    for (const auto& x : a)
      for (const auto& e : comult_[x.index]) acc.add(comult_.trailing(e), x.value * e.value);
    return acc.take();
  }

  V counit_of(const SparseVec<K>& a) const {
    V s = field().zero();
    for (const auto& x : a) s += x.value * counit_.at_linear(x.index);
    return s;
  }

  SparseVec<K> apply_antipode(const SparseVec<K>& a) const { return apply_map(antipode_, a); }
  SparseVec<K> apply_antipode_inverse(const SparseVec<K>& a) const {
    if (!antipode_inv_) throw InputError("Hopf algebra has not been verified");
    return apply_map(*antipode_inv_, a);
  }

  std::span<const Entry<K>> antipode_of(std::size_t i) const { return antipode_[i]; }

 private:
  SparseVec<K> apply_map(const Fibered<K>& m, const SparseVec<K>& a) const {
    Accumulator<K> acc(field(), dim());
    for (const auto& x : a)
      for (const auto& e : m[x.index]) acc.add(m.trailing(e), x.value * e.value);
    return acc.take();
  }

  FinAlgebra<K> algebra_;
  Fibered<K> comult_;
  Tensor<K> counit_;
  Fibered<K> antipode_;
  std::optional<Fibered<K>> antipode_inv_;
  bool verified_ = false;

  friend FinHopfAlgebra verified<K>(FinHopfAlgebra h);
};

/// Applies a matrix (input-first) to a vector.
template <class K>
SparseVec<K> apply_matrix(const Tensor<K>& m, const SparseVec<K>& v) {
  Fibered<K> fm(m, 1);
  Accumulator<K> acc(m.field(), m.dim(1));
  for (const auto& x : v)
    for (const auto& e : fm[x.index]) acc.add(fm.trailing(e), x.value * e.value);
  return acc.take();
}

/// Checks, in order: associativity, unit, coassociativity, counit,
/// bialgebra compatibility, antipode, antipode bijectivity.  Returns the
/// first failure.
template <class K>
Report<K> verify_hopf_axioms(const FinHopfAlgebra<K>& h) {
  const K& f = h.field();
  const std::size_t n = h.dim();
  const auto& alg = h.algebra();

  if (auto r = verify_algebra(alg); !r) return r;

  Accumulator<K> acc3(f, n * n * n);
  auto coassoc = check_tuples(f, "coassociativity", {n}, {n, n, n}, [&](const Index& t) {
    for (const auto& e : h.coproduct_of(t[0])) {
      const std::size_t a = e.index / n % n, b = e.index % n;
      for (const auto& d : h.coproduct_of(a)) acc3.add((d.index % (n * n)) * n + b, e.value * d.value);
    }
    auto lhs = acc3.take();
    for (const auto& e : h.coproduct_of(t[0])) {
      const std::size_t a = e.index / n % n, b = e.index % n;
      for (const auto& d : h.coproduct_of(b)) acc3.add(a * n * n + d.index % (n * n), e.value * d.value);
    }
    return std::pair{lhs, acc3.take()};
  });
  if (!coassoc) return coassoc;

  Accumulator<K> acc1(f, n);
  auto counit = check_tuples(f, "counit", {n, 2}, {n}, [&](const Index& t) {
    for (const auto& e : h.coproduct_of(t[0])) {
      const std::size_t a = e.index / n % n, b = e.index % n;
      if (t[1] == 0)
        acc1.add(b, e.value * h.counit().at_linear(a));
      else
        acc1.add(a, e.value * h.counit().at_linear(b));
    }
    return std::pair{acc1.take(), basis_vector(f, t[0])};
  });
  if (!counit) return counit;

  // Delta(e_i e_j) = Delta(e_i) Delta(e_j)
  Accumulator<K> acc2(f, n * n);
  auto bialg = check_tuples(f, "bialgebra", {n, n}, {n, n}, [&](const Index& t) {
    auto lhs = h.coproduct(alg.multiply(basis_vector(f, t[0]), basis_vector(f, t[1])));
    for (const auto& x : h.coproduct_of(t[0]))
      for (const auto& y : h.coproduct_of(t[1])) {
        const std::size_t x1 = x.index / n % n, x2 = x.index % n;
        const std::size_t y1 = y.index / n % n, y2 = y.index % n;
        for (const auto& p : alg.product(x1, y1))
          for (const auto& q : alg.product(x2, y2))
            acc2.add(alg.mult_index(p) * n + alg.mult_index(q), x.value * y.value * p.value * q.value);
      }
    return std::pair{lhs, acc2.take()};
  });
  if (!bialg) return bialg;

  const auto one = h.unit_vec();
  auto unit_coproduct = check_tuples(f, "bialgebra", {1}, {n, n}, [&](const Index&) {
    for (const auto& x : one)
      for (const auto& y : one) acc2.add(x.index * n + y.index, x.value * y.value);
    return std::pair{h.coproduct(one), acc2.take()};
  });
  if (!unit_coproduct) return unit_coproduct;

  auto counit_mult = check_tuples(f, "bialgebra", {n, n}, {1}, [&](const Index& t) {
    typename K::value_type l = h.counit_of(alg.multiply(basis_vector(f, t[0]), basis_vector(f, t[1])));
    typename K::value_type r = h.counit().at_linear(t[0]) * h.counit().at_linear(t[1]);
    return std::pair{to_sparse(f, std::vector{l}), to_sparse(f, std::vector{r})};
  });
  if (!counit_mult) return counit_mult;

  auto counit_unit = check_tuples(f, "bialgebra", {1}, {1}, [&](const Index&) {
    return std::pair{to_sparse(f, std::vector<typename K::value_type>{h.counit_of(one)}),
                     basis_vector(f, 0)};
  });
  if (!counit_unit) return counit_unit;

  // m(S (x) id)Delta = m(id (x) S)Delta = eta eps
  auto antipode = check_tuples(f, "antipode", {n, 2}, {n}, [&](const Index& t) {
    for (const auto& e : h.coproduct_of(t[0])) {
      const std::size_t a = e.index / n % n, b = e.index % n;
      if (t[1] == 0) {
        for (const auto& s : h.antipode_of(a))
          for (const auto& p : alg.product(s.index % n, b)) acc1.add(alg.mult_index(p), e.value * s.value * p.value);
      } else {
        for (const auto& s : h.antipode_of(b))
          for (const auto& p : alg.product(a, s.index % n)) acc1.add(alg.mult_index(p), e.value * s.value * p.value);
      }
    }
    return std::pair{acc1.take(), scale(one, h.counit().at_linear(t[0]), f)};
  });
  if (!antipode) return antipode;

  auto inv = invert_matrix(h.antipode());
  if (!inv.invertible())
    return Report<K>::fail("antipode_bijective", {}, std::nullopt, std::nullopt,
                           "antipode not bijective, rank " + std::to_string(inv.rank));
  return Report<K>::pass("hopf_axioms");
}

/// Verifies and marks the algebra, caching the antipode inverse.  Throws
/// VerificationError naming the first failed axiom.
template <class K>
FinHopfAlgebra<K> verified(FinHopfAlgebra<K> h) {
  if (h.verified_) return h;
  auto report = verify_hopf_axioms(h);
  require(report, "Hopf axioms");
  h.antipode_inv_.emplace(*invert_matrix(h.antipode()).inverse, 1);
  h.verified_ = true;
  return h;
}

template <class K>
void require_verified(const FinHopfAlgebra<K>& h) {
  if (!h.is_verified()) throw InputError("operation requires a verified Hopf algebra");
}

/// Matrix inverse of the antipode.
template <class K>
Tensor<K> antipode_inverse(const FinHopfAlgebra<K>& h) {
  if (h.is_verified()) return h.antipode_inverse();
  auto inv = invert_matrix(h.antipode());
  if (!inv.invertible()) throw VerificationError("antipode not bijective (rank " + std::to_string(inv.rank) + ")");
  return *inv.inverse;
}

/// Tensor (n, n, ..., n) with k output axes: e_i -> e_i(1) (x) ... (x) e_i(k).
template <class K>
Tensor<K> iterated_coproduct(const FinHopfAlgebra<K>& h, std::size_t k) {
  if (k == 0) throw InputError("iterated_coproduct needs k >= 1");
  Tensor<K> d = Tensor<K>::identity(h.field(), h.dim());
  for (std::size_t level = 1; level < k; ++level) {
    // split the first output leg: axes (i, a1..a_level) -> (i, a2.., b1, b2)
    Tensor<K> next = contract(d, h.comult(), {{1, 0}});
    std::vector<std::size_t> perm{0, next.rank() - 2, next.rank() - 1};
    for (std::size_t ax = 1; ax + 2 < next.rank(); ++ax) perm.push_back(ax);
    d = permute(next, perm);
  }
  return d;
}

inline std::vector<std::string> starred(const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& s : names) out.push_back(s.size() > 1 && s.back() == '*' ? s.substr(0, s.size() - 1) : s + "*");
  return out;
}

/// Hopf algebra H* on the dual basis.
template <class K>
FinHopfAlgebra<K> dual_hopf(const FinHopfAlgebra<K>& h) {
  require_verified(h);
  return verified(FinHopfAlgebra<K>(h.field(), permute(h.comult(), {1, 2, 0}), h.counit(),
                                    permute(h.mult(), {2, 0, 1}), h.unit(), permute(h.antipode(), {1, 0}),
                                    starred(h.basis_names())));
}

/// The algebra H* alone (multiplication = transpose of the coproduct).
template <class K>
FinAlgebra<K> dual_algebra(const FinHopfAlgebra<K>& h) {
  return FinAlgebra<K>(h.field(), permute(h.comult(), {1, 2, 0}), h.counit(), starred(h.basis_names()));
}

enum class Variant { op, cop, op_cop };

template <class K>
FinHopfAlgebra<K> variant(const FinHopfAlgebra<K>& h, Variant which) {
  require_verified(h);
  const bool flip_mult = which != Variant::cop;
  const bool flip_comult = which != Variant::op;
  return verified(FinHopfAlgebra<K>(
      h.field(), flip_mult ? permute(h.mult(), {1, 0, 2}) : h.mult(), h.unit(),
      flip_comult ? permute(h.comult(), {0, 2, 1}) : h.comult(), h.counit(),
      which == Variant::op_cop ? h.antipode() : h.antipode_inverse(), h.basis_names()));
}

enum class ElementKind { group_like, character };

/// group_like: Delta v = v (x) v and eps(v) = 1.  character: v read as a
/// functional (v[i] = delta(e_i)), multiplicative with delta(1) = 1.
template <class K>
bool check_element(const FinHopfAlgebra<K>& h, const std::vector<typename K::value_type>& v,
                   ElementKind kind) {
  const K& f = h.field();
  const std::size_t n = h.dim();
  if (v.size() != n) throw InputError("element length does not match dimension");
  if (kind == ElementKind::character) return is_character(h.algebra(), v);
  auto sv = to_sparse(f, v);
  if (!(h.counit_of(sv) == f.one())) return false;
  SparseVec<K> vv;
  for (const auto& x : sv)
    for (const auto& y : sv) vv.push_back({x.index * n + y.index, x.value * y.value});
  return h.coproduct(sv) == vv;
}

/// All group-like elements, found as the characters of H* (prime fields
/// only, guarded).
template <class K>
std::vector<std::vector<typename K::value_type>> find_group_likes(const FinHopfAlgebra<K>& h) {
  return find_characters(dual_algebra(h));
}

template <class K>
std::vector<std::vector<typename K::value_type>> find_characters(const FinHopfAlgebra<K>& h) {
  return find_characters(h.algebra());
}

template <class K>
bool squared_antipode_is_identity(const FinHopfAlgebra<K>& h) {
  return compose(h.antipode(), h.antipode()) == Tensor<K>::identity(h.field(), h.dim());
}

}  // namespace hayd
