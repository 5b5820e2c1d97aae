#pragma once

// Yetter-Drinfeld and anti-Yetter-Drinfeld compatibility in the four
// side conventions, stability, tensor products with YD modules, the
// associated entwining structures, and one-dimensional modules from a
// character and a group-like.
//
// With Delta^(3)(h) = h1 (x) h2 (x) h3 the anti-Yetter-Drinfeld conditions are
//   ll:  lambda(h m)  = h1 m(-1) S^-1(h3) (x) h2 m(0)
//   lr:  Delta_M(h m) = h2 m(0) (x) h3 m(1) S(h1)
//   rl:  lambda(m h)  = S(h3) m(-1) h1 (x) m(0) h2
//   rr:  Delta_M(m h) = m(0) h2 (x) S^-1(h1) m(1) h3
// and the Yetter-Drinfeld conditions are the same with S and S^-1 swapped.

#include <string>
#include <utility>
#include <vector>

#include "hayd/rep.hpp"

namespace hayd {

enum class Case { ll, lr, rl, rr };

inline const char* case_name(Case c) {
  switch (c) {
    case Case::ll: return "ll";
    case Case::lr: return "lr";
    case Case::rl: return "rl";
    case Case::rr: return "rr";
  }
  return "?";
}

inline Case case_of(Side action, Side coaction) {
  if (action == Side::left) return coaction == Side::left ? Case::ll : Case::lr;
  return coaction == Side::left ? Case::rl : Case::rr;
}

inline Side action_side(Case c) { return c == Case::ll || c == Case::lr ? Side::left : Side::right; }
inline Side coaction_side(Case c) { return c == Case::ll || c == Case::rl ? Side::left : Side::right; }

/// A space with one H-action and one H-coaction, both verified.
template <class K>
class TwoSidedStructure {
 public:
  TwoSidedStructure(FinHopfAlgebra<K> h, ActionStructure<K> action, CoactionStructure<K> coaction)
      : h_(std::move(h)), action_(std::move(action)), coaction_(std::move(coaction)) {
    require_verified(h_);
    if (action_.dim() != coaction_.dim()) throw InputError("action and coaction live on spaces of different dimension");
    require(verify_action(h_, action_), "module structure");
    require(verify_coaction(h_, coaction_), "comodule structure");
  }

  const FinHopfAlgebra<K>& hopf() const { return h_; }
  const ActionStructure<K>& action() const { return action_; }
  const CoactionStructure<K>& coaction() const { return coaction_; }
  std::size_t dim() const { return action_.dim(); }
  Case structure_case() const { return case_of(action_.side(), coaction_.side()); }

 private:
  FinHopfAlgebra<K> h_;
  ActionStructure<K> action_;
  CoactionStructure<K> coaction_;
};

namespace detail {

template <class K>
struct Sweedler3 {
  std::size_t p, q, r;
  typename K::value_type c;
};

template <class K>
std::vector<std::vector<Sweedler3<K>>> coproduct3_table(const FinHopfAlgebra<K>& h) {
  const std::size_t n = h.dim();
  Tensor<K> d3 = iterated_coproduct(h, 3);
  std::vector<std::vector<Sweedler3<K>>> table(n);
  for (const auto& e : d3.entries()) {
    Index idx = unravel(d3.shape(), e.index);
    table[idx[0]].push_back({idx[1], idx[2], idx[3], e.value});
  }
  return table;
}

template <class K>
SparseVec<K> mult3(const FinHopfAlgebra<K>& h, const SparseVec<K>& a, const SparseVec<K>& b, const SparseVec<K>& c) {
  return h.multiply(h.multiply(a, b), c);
}

/// Shared evaluator for the eight YD/aYD equations.  `anti` selects aYD.
template <class K>
Report<K> check_compatibility(const TwoSidedStructure<K>& m, bool anti) {
  const auto& h = m.hopf();
  const K& f = h.field();
  const std::size_t n = h.dim(), d = m.dim();
  const Case cs = m.structure_case();
  // Which antipode power appears: aYD uses S^-1 for ll/rr and S for lr/rl.
  const bool use_inverse = (cs == Case::ll || cs == Case::rr) == anti;
  auto twist = [&](std::size_t i) {
    return use_inverse ? h.apply_antipode_inverse(basis_vector(f, i)) : h.apply_antipode(basis_vector(f, i));
  };
  const auto d3 = coproduct3_table(h);
  const bool left_coaction = coaction_side(cs) == Side::left;
  const Shape out = left_coaction ? Shape{n, d} : Shape{d, n};
  Accumulator<K> acc(f, n * d);
  std::string label = std::string(anti ? "ayd_" : "yd_") + case_name(cs);

  return check_tuples(f, label, {n, d}, out, [&](const Index& t) {
    const std::size_t i = t[0];
    const auto fa = basis_vector(f, t[1]);
    auto lhs = m.coaction().apply(m.action().apply(i, fa));
    const auto terms = m.coaction().terms(t[1]);
    for (const auto& s : d3[i]) {
      const auto hp = basis_vector(f, s.p), hr = basis_vector(f, s.r);
      for (const auto& term : terms) {
        const auto hu = basis_vector(f, term.h);
        SparseVec<K> hpart;
        switch (cs) {
          case Case::ll: hpart = mult3(h, hp, hu, twist(s.r)); break;  // h1 m(-1) T(h3)
          case Case::lr: hpart = mult3(h, hr, hu, twist(s.p)); break;  // h3 m(1) T(h1)
          case Case::rl: hpart = mult3(h, twist(s.r), hu, hp); break;  // T(h3) m(-1) h1
          case Case::rr: hpart = mult3(h, twist(s.p), hu, hr); break;  // T(h1) m(1) h3
        }
        if (hpart.empty()) continue;
        // M part: h2 acting on m(0), same tensor for either side
        auto mpart = m.action().apply(s.q, basis_vector(f, term.m));
        for (const auto& x : hpart)
          for (const auto& y : mpart) {
            const typename K::value_type v = s.c * term.c * x.value * y.value;
            acc.add(left_coaction ? x.index * d + y.index : y.index * n + x.index, v);
          }
      }
    }
    return std::pair{lhs, acc.take()};
  });
}

}  // namespace detail

template <class K>
Report<K> check_ayd(const TwoSidedStructure<K>& m) {
  return detail::check_compatibility(m, true);
}

template <class K>
Report<K> check_yd(const TwoSidedStructure<K>& m) {
  return detail::check_compatibility(m, false);
}

/// Action composed with coaction is the identity: m(-1)m(0), m(1)m(0),
/// m(0)m(-1) or m(0)m(1) equals m, depending on the case.
template <class K>
Report<K> check_stability(const TwoSidedStructure<K>& m) {
  const K& f = m.hopf().field();
  const std::size_t d = m.dim();
  Accumulator<K> acc(f, d);
  return check_tuples(f, "stability", {d}, {d}, [&](const Index& t) {
    for (const auto& term : m.coaction().terms(t[0])) m.action().apply_into(term.h, basis_vector(f, term.m), term.c, acc);
    return std::pair{acc.take(), basis_vector(f, t[0])};
  });
}

/// Reinterprets a left (right) H-action as a right (left) H^op-action.
template <class K>
TwoSidedStructure<K> mirror_action(const TwoSidedStructure<K>& m) {
  const Side flipped = m.action().side() == Side::left ? Side::right : Side::left;
  return TwoSidedStructure<K>(variant(m.hopf(), Variant::op), ActionStructure<K>(flipped, m.dim(), m.action().tensor()),
                              m.coaction());
}

/// Reinterprets a left (right) H-coaction as a right (left) H^cop-coaction.
template <class K>
TwoSidedStructure<K> mirror_coaction(const TwoSidedStructure<K>& m) {
  const Side flipped = m.coaction().side() == Side::left ? Side::right : Side::left;
  return TwoSidedStructure<K>(variant(m.hopf(), Variant::cop), m.action(),
                              CoactionStructure<K>(flipped, m.dim(), permute(m.coaction().tensor(), {0, 2, 1})));
}

/// Mirrors both sides; lands over H^{op,cop}.
template <class K>
TwoSidedStructure<K> mirror_both(const TwoSidedStructure<K>& m) {
  return mirror_action(mirror_coaction(m));
}

/// Tensor product of a YD module N and an aYD module M in the same case.
/// ll and lr live on N (x) M, rl and rr on M (x) N:
///   ll: h(n (x) m) = h1 n (x) h2 m,  coaction n(-1) m(-1) (x) n (x) m
///   lr: h(n (x) m) = h2 n (x) h1 m,  coaction n (x) m (x) n(1) m(1)
///   rl: (m (x) n)h = m h2 (x) n h1,  coaction m(-1) n(-1) (x) m (x) n
///   rr: (m (x) n)h = m h1 (x) n h2,  coaction m (x) n (x) m(1) n(1)
template <class K>
TwoSidedStructure<K> tensor_product(const TwoSidedStructure<K>& yd, const TwoSidedStructure<K>& ayd, Case c) {
  if (yd.structure_case() != c) throw InputError(std::string("tensor_product: YD input is not in case ") + case_name(c));
  if (ayd.structure_case() != c) throw InputError(std::string("tensor_product: aYD input is not in case ") + case_name(c));
  if (!(yd.hopf().mult() == ayd.hopf().mult() && yd.hopf().comult() == ayd.hopf().comult()))
    throw InputError("tensor_product: inputs live over different Hopf algebras");
  if (auto r = check_yd(yd); !r) throw InputError("tensor_product: first input fails check_yd: " + r.summary());
  if (auto r = check_ayd(ayd); !r) throw InputError("tensor_product: second input fails check_ayd: " + r.summary());

  const auto& h = yd.hopf();
  const K& f = h.field();
  const std::size_t n = h.dim();
  const bool yd_first = c == Case::ll || c == Case::lr;
  const auto& x = yd_first ? yd : ayd;  // first tensor factor
  const auto& y = yd_first ? ayd : yd;
  const std::size_t dx = x.dim(), dy = y.dim(), d = dx * dy;
  const bool first_gets_h1 = c == Case::ll || c == Case::rr;

  std::vector<std::pair<Index, typename K::value_type>> act, coact;
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& e : h.coproduct_of(i)) {
      const std::size_t h1 = e.index / n % n, h2 = e.index % n;
      const std::size_t hx = first_gets_h1 ? h1 : h2, hy = first_gets_h1 ? h2 : h1;
      for (std::size_t a = 0; a < dx; ++a)
        for (std::size_t b = 0; b < dy; ++b)
          for (const auto& ex : x.action().row(hx, a))
            for (const auto& ey : y.action().row(hy, b))
              act.push_back({{i, a * dy + b, x.action().target(ex) * dy + y.action().target(ey)}, e.value * ex.value * ey.value});
    }
  const bool left = coaction_side(c) == Side::left;
  for (std::size_t a = 0; a < dx; ++a)
    for (std::size_t b = 0; b < dy; ++b)
      for (const auto& tx : x.coaction().terms(a))
        for (const auto& ty : y.coaction().terms(b))
          for (const auto& p : h.algebra().product(tx.h, ty.h)) {
            const std::size_t u = h.algebra().mult_index(p);
            const std::size_t src = a * dy + b, dst = tx.m * dy + ty.m;
            coact.push_back({left ? Index{src, u, dst} : Index{src, dst, u}, tx.c * ty.c * p.value});
          }
  return TwoSidedStructure<K>(
      h, ActionStructure<K>(action_side(c), d, Tensor<K>::from_entries(f, {n, d, d}, act)),
      CoactionStructure<K>(coaction_side(c), d, Tensor<K>::from_entries(f, left ? Shape{d, n, d} : Shape{d, d, n}, coact)));
}

/// psi: C (x) A -> A (x) C with A = C = H; psi[c, a, a', c'].
template <class K>
struct EntwiningData {
  FinHopfAlgebra<K> hopf;
  Tensor<K> psi;
};

enum class EntwiningKind { yd, ayd };

/// psi(h' (x) h) = h2 (x) T(h1) h' h3 with T = S^-1 (ayd) or S (yd).
template <class K>
EntwiningData<K> entwining_map(const FinHopfAlgebra<K>& h, EntwiningKind kind) {
  require_verified(h);
  const K& f = h.field();
  const std::size_t n = h.dim();
  const auto d3 = detail::coproduct3_table(h);
  std::vector<std::pair<Index, typename K::value_type>> items;
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t a = 0; a < n; ++a)
      for (const auto& s : d3[a]) {
        auto t = kind == EntwiningKind::ayd ? h.apply_antipode_inverse(basis_vector(f, s.p))
                                            : h.apply_antipode(basis_vector(f, s.p));
        for (const auto& e : detail::mult3(h, t, basis_vector(f, c), basis_vector(f, s.r)))
          items.push_back({{c, a, s.q, static_cast<std::size_t>(e.index)}, s.c * e.value});
      }
  return {h, Tensor<K>::from_entries(f, {n, n, n, n}, items)};
}

/// The four entwining identities (right-right convention):
///   psi(c (x) ab)           = a_A b_B (x) c^{AB}
///   a_A (x) Delta(c^A)      = a_{AB} (x) c1^B (x) c2^A
///   psi(c (x) 1)            = 1 (x) c
///   a_A eps(c^A)            = eps(c) a
template <class K>
Report<K> verify_entwining(const EntwiningData<K>& e) {
  const auto& h = e.hopf;
  const K& f = h.field();
  const std::size_t n = h.dim();
  Fibered<K> psi(e.psi, 2);
  auto apply_psi = [&](std::size_t c, std::size_t a) {
    std::vector<std::tuple<std::size_t, std::size_t, typename K::value_type>> out;
    for (const auto& x : psi[c * n + a]) {
      const auto t = psi.trailing(x);
      out.emplace_back(t / n, t % n, x.value);
    }
    return out;
  };
  Accumulator<K> acc2(f, n * n), acc3(f, n * n * n);

  auto mult = check_tuples(f, "entwining_multiplication", {n, n, n}, {n, n}, [&](const Index& t) {
    for (const auto& p : h.algebra().product(t[1], t[2]))
      for (auto [a2, c2, v] : apply_psi(t[0], h.algebra().mult_index(p))) acc2.add(a2 * n + c2, p.value * v);
    auto lhs = acc2.take();
    for (auto [a1, c1, v1] : apply_psi(t[0], t[1]))
      for (auto [b1, c2, v2] : apply_psi(c1, t[2]))
        for (const auto& p : h.algebra().product(a1, b1)) acc2.add(h.algebra().mult_index(p) * n + c2, v1 * v2 * p.value);
    return std::pair{lhs, acc2.take()};
  });
  if (!mult) return mult;

  auto comult = check_tuples(f, "entwining_comultiplication", {n, n}, {n, n, n}, [&](const Index& t) {
    for (auto [a1, c1, v] : apply_psi(t[0], t[1]))
      for (const auto& d : h.coproduct_of(c1)) acc3.add(a1 * n * n + d.index % (n * n), v * d.value);
    auto lhs = acc3.take();
    for (const auto& d : h.coproduct_of(t[0])) {
      const std::size_t c1 = d.index / n % n, c2 = d.index % n;
      for (auto [a1, c2p, v1] : apply_psi(c2, t[1]))
        for (auto [a2, c1p, v2] : apply_psi(c1, a1)) acc3.add((a2 * n + c1p) * n + c2p, d.value * v1 * v2);
    }
    return std::pair{lhs, acc3.take()};
  });
  if (!comult) return comult;

  auto unit = check_tuples(f, "entwining_unit", {n}, {n, n}, [&](const Index& t) {
    for (const auto& u : h.unit_vec())
      for (auto [a1, c1, v] : apply_psi(t[0], u.index)) acc2.add(a1 * n + c1, u.value * v);
    auto lhs = acc2.take();
    for (const auto& u : h.unit_vec()) acc2.add(u.index * n + t[0], u.value);
    return std::pair{lhs, acc2.take()};
  });
  if (!unit) return unit;

  Accumulator<K> acc1(f, n);
  auto counit = check_tuples(f, "entwining_counit", {n, n}, {n}, [&](const Index& t) {
    for (auto [a1, c1, v] : apply_psi(t[0], t[1])) acc1.add(a1, v * h.counit().at_linear(c1));
    auto lhs = acc1.take();
    return std::pair{lhs, scale(basis_vector(f, t[1]), h.counit().at_linear(t[0]), f)};
  });
  if (!counit) return counit;
  return Report<K>::pass("entwining");
}

/// Right-right entwined module: Delta_M(m a) = m(0) a_A (x) m(1)^A.
template <class K>
Report<K> check_entwined_module(const EntwiningData<K>& e, const TwoSidedStructure<K>& m) {
  if (m.structure_case() != Case::rr) throw InputError("entwined modules use a right action and a right coaction");
  const auto& h = e.hopf;
  const K& f = h.field();
  const std::size_t n = h.dim(), d = m.dim();
  Fibered<K> psi(e.psi, 2);
  Accumulator<K> acc(f, d * n);
  return check_tuples(f, "entwined_module", {d, n}, {d, n}, [&](const Index& t) {
    auto lhs = m.coaction().apply(m.action().apply(t[1], basis_vector(f, t[0])));
    for (const auto& term : m.coaction().terms(t[0]))
      for (const auto& x : psi[term.h * n + t[1]]) {
        const auto tr = psi.trailing(x);
        const std::size_t a1 = tr / n, c1 = tr % n;
        for (const auto& y : m.action().row(a1, term.m)) acc.add(m.action().target(y) * n + c1, term.c * x.value * y.value);
      }
    return std::pair{lhs, acc.take()};
  });
}

/// The ground field as a right H-module via a character delta and a left
/// H-comodule via a group-like sigma (rl case).
template <class K>
TwoSidedStructure<K> one_dim_module(const FinHopfAlgebra<K>& h, const std::vector<typename K::value_type>& delta,
                                    const std::vector<typename K::value_type>& sigma) {
  require_verified(h);
  if (!check_element(h, delta, ElementKind::character)) throw InputError("one_dim_module: delta is not a character");
  if (!check_element(h, sigma, ElementKind::group_like)) throw InputError("one_dim_module: sigma is not group-like");
  const K& f = h.field();
  const std::size_t n = h.dim();
  std::vector<typename K::value_type> act(n * 1 * 1), coact(1 * n * 1);
  for (std::size_t i = 0; i < n; ++i) {
    act[i] = delta[i];
    coact[i] = sigma[i];
  }
  return TwoSidedStructure<K>(h, ActionStructure<K>(Side::right, 1, Tensor<K>::from_dense(f, {n, 1, 1}, act)),
                              CoactionStructure<K>(Side::left, 1, Tensor<K>::from_dense(f, {1, n, 1}, coact)));
}

/// delta(sigma) = 1 and S_delta^2(h) = sigma h sigma^-1 on every basis
/// element, where S_delta(h) = delta(h1) S(h2).
template <class K>
bool check_modular_pair(const FinHopfAlgebra<K>& h, const std::vector<typename K::value_type>& delta,
                        const std::vector<typename K::value_type>& sigma) {
  require_verified(h);
  const K& f = h.field();
  const std::size_t n = h.dim();
  if (delta.size() != n || sigma.size() != n) throw InputError("check_modular_pair: length mismatch");
  typename K::value_type pairing = f.zero();
  for (std::size_t i = 0; i < n; ++i) pairing += delta[i] * sigma[i];
  if (!(pairing == f.one())) return false;

  std::vector<std::pair<Index, typename K::value_type>> twisted;
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& e : h.coproduct_of(i)) {
      const std::size_t a = e.index / n % n, b = e.index % n;
      if (f.is_zero(delta[a])) continue;
      for (const auto& s : h.antipode_of(b)) twisted.push_back({{i, static_cast<std::size_t>(s.index % n)}, e.value * delta[a] * s.value});
    }
  Tensor<K> s_delta = Tensor<K>::from_entries(f, {n, n}, twisted);
  Tensor<K> squared = compose(s_delta, s_delta);
  const auto sv = to_sparse(f, sigma);
  const auto sv_inv = h.apply_antipode(sv);
  for (std::size_t i = 0; i < n; ++i) {
    auto conj = detail::mult3(h, sv, basis_vector(f, i), sv_inv);
    SparseVec<K> row;
    for (const auto& e : squared.entries())
      if (e.index / n == i) row.push_back({e.index % n, e.value});
    if (row != conj) return false;
  }
  return true;
}

/// Hypotheses, in order: the coaction is a left comodule structure, pi is
/// an algebra map, pi is surjective, h.m = pi(h)m satisfies the ll aYD
/// condition, and pi(1(-1)) 1(0) = 1.  Then checks stability.
template <class K>
Report<K> check_pi_stability(const FinHopfAlgebra<K>& h, const FinAlgebra<K>& m, const CoactionStructure<K>& coaction,
                             const Tensor<K>& pi) {
  require_verified(h);
  const K& f = h.field();
  const std::size_t n = h.dim(), d = m.dim();
  if (coaction.side() != Side::left) throw InputError("check_pi_stability needs a left coaction");
  if (pi.shape() != Shape{n, d}) throw InputError("pi must have shape (dim H, dim M)");
  if (coaction.dim() != d) throw InputError("coaction dimension does not match the algebra");

  if (auto r = verify_coaction(h, coaction); !r) {
    r.axiom = "pi_coaction: " + r.axiom;
    return r;
  }
  if (auto r = verify_algebra(m); !r) {
    r.axiom = "pi_target_algebra: " + r.axiom;
    return r;
  }
  auto pi_of = [&](const SparseVec<K>& v) { return apply_matrix(pi, v); };
  auto mult_map = check_tuples(f, "pi_algebra_map", {n, n}, {d}, [&](const Index& t) {
    return std::pair{pi_of(h.multiply(basis_vector(f, t[0]), basis_vector(f, t[1]))),
                     m.multiply(pi_of(basis_vector(f, t[0])), pi_of(basis_vector(f, t[1])))};
  });
  if (!mult_map) return mult_map;
  auto unit_map = check_tuples(f, "pi_algebra_map", {1}, {d}, [&](const Index&) {
    return std::pair{pi_of(h.unit_vec()), m.unit_vec()};
  });
  if (!unit_map) return unit_map;
  if (const auto r = rank(Matrix<K>::from_tensor(pi)); r < d)
    return Report<K>::fail("pi_surjective", {}, std::nullopt, std::nullopt, "rank " + std::to_string(r) + " < " + std::to_string(d));

  // action[h, a, b]: coefficient of f_b in pi(e_h) f_a
  std::vector<std::pair<Index, typename K::value_type>> act;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < d; ++a)
      for (const auto& e : m.multiply(pi_of(basis_vector(f, i)), basis_vector(f, a)))
        act.push_back({{i, a, static_cast<std::size_t>(e.index)}, e.value});
  ActionStructure<K> action(Side::left, d, Tensor<K>::from_entries(f, {n, d, d}, act));
  if (auto r = verify_action(h, action); !r) {
    r.axiom = "pi_action: " + r.axiom;
    return r;
  }
  TwoSidedStructure<K> module(h, action, coaction);
  if (auto r = check_ayd(module); !r) {
    r.axiom = "pi_ayd: " + r.axiom;
    return r;
  }
  auto unit_cond = check_tuples(f, "pi_unit_condition", {1}, {d}, [&](const Index&) {
    Accumulator<K> acc(f, d);
    for (const auto& u : m.unit_vec())
      for (const auto& term : coaction.terms(u.index))
        for (const auto& p : pi_of(basis_vector(f, term.h)))
          for (const auto& q : m.product(p.index, term.m)) acc.add(m.mult_index(q), u.value * term.c * p.value * q.value);
    return std::pair{acc.take(), m.unit_vec()};
  });
  if (!unit_cond) return unit_cond;
  if (auto r = check_stability(module); !r) return r;
  return Report<K>::pass("pi_stability");
}

/// ll structure over kG: coaction f_a -> g_a (x) f_a for the grading g_a,
/// and the given action matrices action[g, a, b].
template <class K>
TwoSidedStructure<K> group_graded_module(const FinHopfAlgebra<K>& kg, std::size_t identity,
                                         const std::vector<std::size_t>& grading, const Tensor<K>& action) {
  require_verified(kg);
  const K& f = kg.field();
  const std::size_t n = kg.dim(), d = grading.size();
  if (action.shape() != Shape{n, d, d}) throw InputError("group action must have shape (|G|, m, m)");
  for (auto g : grading)
    if (g >= n) throw InputError("grading refers to a group element out of range");
  ActionStructure<K> act(Side::left, d, action);
  for (std::size_t a = 0; a < d; ++a)
    if (act.apply(identity, basis_vector(f, a)) != basis_vector(f, a)) throw InputError("group action is not unital");
  if (auto r = verify_action(kg, act); !r) throw InputError("group action is not an action: " + r.summary());
  std::vector<std::pair<Index, typename K::value_type>> coact;
  for (std::size_t a = 0; a < d; ++a) coact.push_back({{a, grading[a], a}, f.one()});
  return TwoSidedStructure<K>(kg, act, CoactionStructure<K>(Side::left, d, Tensor<K>::from_entries(f, {d, n, d}, coact)));
}

}  // namespace hayd
