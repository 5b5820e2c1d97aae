#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace hayd;
using fixtures::Q;
using fixtures::Zp;

namespace {

std::vector<FinHopfAlgebra<Zp>> builtins_over_f7() {
  Zp f(7);
  return {group_algebra(cyclic_group(2), f),     group_algebra(cyclic_group(3), f),     group_algebra(symmetric_group3(), f),
          function_algebra(cyclic_group(2), f),  function_algebra(symmetric_group3(), f), sweedler(f),
          taft(3, f, f.from_int(2))};
}

bool is_commutative(const FinAlgebra<Zp>& a) { return a.mult() == algebra_opposite(a).mult(); }

/// H x H with Delta on each factor.
template <class K>
ComoduleAlgebra<K> doubled(const FinHopfAlgebra<K>& h) {
  const K& f = h.field();
  const std::size_t n = h.dim(), m = 2 * n;
  fixtures::Items<K> mult, unit, coaction;
  for (std::size_t c = 0; c < 2; ++c) {
    for (const auto& e : h.mult().entries()) {
      const Index t = unravel(h.mult().shape(), e.index);
      mult.push_back({{c * n + t[0], c * n + t[1], c * n + t[2]}, e.value});
    }
    for (const auto& e : h.unit().entries()) unit.push_back({{c * n + e.index}, e.value});
    for (const auto& e : h.comult().entries()) {
      const Index t = unravel(h.comult().shape(), e.index);
      coaction.push_back({{c * n + t[0], c * n + t[1], t[2]}, e.value});
    }
  }
  FinAlgebra<K> p(f, Tensor<K>::from_entries(f, {m, m, m}, mult), Tensor<K>::from_entries(f, {m}, unit));
  return ComoduleAlgebra<K>(p, h, CoactionStructure<K>(Side::right, m, Tensor<K>::from_entries(f, {m, m, n}, coaction)));
}

}  // namespace

TEST(ComoduleAlgebra, RegularPasses) {
  for (const auto& h : builtins_over_f7()) EXPECT_TRUE(check_comodule_algebra(h.algebra(), h, regular_coaction(h, Side::right)));
}

TEST(ComoduleAlgebra, UnitNotMappedToOneTensorOneFails) {
  Q f;
  auto h = group_algebra(cyclic_group(2), f);
  // e_a -> e_a (x) g sends 1 to 1 (x) g
  auto bad = Tensor<Q>::from_entries(f, {2, 2, 2}, {{{0, 0, 1}, 1}, {{1, 1, 1}, 1}});
  EXPECT_FALSE(check_comodule_algebra(h.algebra(), h, CoactionStructure<Q>(Side::right, 2, bad)));
}

TEST(ComoduleAlgebra, NonMultiplicativeCoactionFails) {
  Q f;
  auto h = sweedler(f);
  // Delta is not an algebra map out of the opposite algebra
  auto r = check_comodule_algebra(algebra_opposite(h.algebra()), h, regular_coaction(h, Side::right));
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.axiom, "comodule_multiplicativity");
}

TEST(Coinvariants, RegularIsSpanOfOne) {
  for (const auto& h : builtins_over_f7()) {
    auto b = coinvariants(regular_comodule_algebra(h));
    ASSERT_EQ(b.dim(), 1u);
    EXPECT_TRUE(b.contains(h.unit().to_dense()));
  }
}

TEST(Coinvariants, TrivialCoactionGivesEverything) {
  Q f;
  auto h = sweedler(f);
  ComoduleAlgebra<Q> p(h.algebra(), h, trivial_coaction(h, Side::right, 4));
  EXPECT_EQ(coinvariants(p).dim(), 4u);
}

TEST(Centralizer, CommutativeOrScalarCoinvariants) {
  Q f;
  auto fun = function_algebra(symmetric_group3(), f);
  auto p = regular_comodule_algebra(fun);
  EXPECT_EQ(centralizer(p, coinvariants(p)).dim(), 6u);
  auto sw = regular_comodule_algebra(sweedler(f));
  EXPECT_EQ(centralizer(sw, coinvariants(sw)).dim(), 4u);
  ComoduleAlgebra<Q> triv(sweedler(f).algebra(), sweedler(f), trivial_coaction(sweedler(f), Side::right, 4));
  // centralizer of all of sweedler's algebra is its centre, span{1}
  EXPECT_EQ(centralizer(triv, coinvariants(triv)).dim(), 1u);
}

TEST(RelativeTensor, OverScalarsIsFullTensor) {
  Q f;
  auto p = regular_comodule_algebra(sweedler(f));
  EXPECT_EQ(relative_tensor(p.algebra(), coinvariants(p)).dim, 16u);
}

TEST(RelativeTensor, OverWholeCommutativeAlgebra) {
  Q f;
  auto h = function_algebra(cyclic_group(2), f);
  ComoduleAlgebra<Q> p(h.algebra(), h, trivial_coaction(h, Side::right, 2));
  EXPECT_EQ(relative_tensor(p.algebra(), coinvariants(p)).dim, 2u);
}

TEST(Galois, RegularIsBijectiveWithTranslationMap) {
  for (const auto& h : builtins_over_f7()) {
    auto g = canonical_map(regular_comodule_algebra(h));
    ASSERT_TRUE(g.bijective);
    const std::size_t n = h.dim();
    auto t = translation_map(g);
    fixtures::Items<Zp> ones;
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& u : h.unit().entries()) ones.push_back({{i, static_cast<std::size_t>(u.index * n + i)}, u.value});
    EXPECT_EQ(compose(t, g.can), Tensor<Zp>::from_entries(h.field(), {n, n * n}, ones));
  }
}

TEST(Galois, TrivialCoactionIsNotGalois) {
  Q f;
  auto h = sweedler(f);
  auto g = canonical_map(ComoduleAlgebra<Q>(h.algebra(), h, trivial_coaction(h, Side::right, 4)));
  EXPECT_FALSE(g.bijective);
  EXPECT_THROW(translation_map(g), InputError);
  EXPECT_THROW(make_stable_ayd(g.source), InputError);
}

TEST(Galois, ProductOfTwoCopiesIsGaloisOverIdempotents) {
  Q f;
  auto g = canonical_map(doubled(group_algebra(cyclic_group(2), f)));
  EXPECT_EQ(g.coinvariants.dim(), 2u);
  EXPECT_EQ(g.quotient.dim, 8u);
  EXPECT_TRUE(g.bijective);
}

TEST(MiyashitaUlbrich, WellDefinedOnRegular) {
  Q f;
  for (const auto& h : {sweedler(f), group_algebra(symmetric_group3(), f)}) {
    auto g = canonical_map(regular_comodule_algebra(h));
    EXPECT_TRUE(check_mu_well_defined(g, false));
    EXPECT_TRUE(check_mu_well_defined(g, true));
  }
}

TEST(MiyashitaUlbrich, TrivialOnCommutativeAlgebras) {
  for (const auto& h : builtins_over_f7()) {
    if (!is_commutative(h.algebra())) continue;
    auto g = canonical_map(regular_comodule_algebra(h));
    fixtures::Items<Zp> eps_id;
    for (const auto& e : h.counit().entries())
      for (std::size_t a = 0; a < h.dim(); ++a) eps_id.push_back({{static_cast<std::size_t>(e.index), a, a}, e.value});
    const auto expected = Tensor<Zp>::from_entries(h.field(), {h.dim(), h.dim(), h.dim()}, eps_id);
    EXPECT_EQ(mu_action(g, false).action.tensor(), expected);
    EXPECT_EQ(mu_action(g, true).action.tensor(), expected);
  }
}

TEST(MiyashitaUlbrich, S3IsAdjointWithCoproductCoaction) {
  Q f;
  const Group s3 = symmetric_group3();
  auto h = group_algebra(s3, f);
  auto g = canonical_map(regular_comodule_algebra(h));
  auto mu = mu_action(g, false);
  ASSERT_EQ(mu.carrier.dim(), 6u);
  // p . x = x^-1 p x
  for (std::size_t x = 0; x < 6; ++x)
    for (std::size_t p = 0; p < 6; ++p) EXPECT_EQ(mu.action.tensor().at({x, p, s3.mul(s3.mul(s3.inverse(x), p), x)}), 1);
  auto m = mu_module(g);
  EXPECT_EQ(m.coaction().tensor(), h.comult());
}

TEST(MiyashitaUlbrich, StandardIsYdFlippedIsStableAyd) {
  for (const auto& h : builtins_over_f7()) {
    auto g = canonical_map(regular_comodule_algebra(h));
    EXPECT_TRUE(check_yd(mu_module(g)));
    auto s = make_stable_ayd(g.source);
    EXPECT_TRUE(check_ayd(s));
    EXPECT_TRUE(check_stability(s));
  }
}

TEST(MiyashitaUlbrich, FunctionAlgebraOfC2HasTrivialAction) {
  Q f;
  auto h = function_algebra(cyclic_group(2), f);
  auto s = make_stable_ayd(regular_comodule_algebra(h));
  EXPECT_EQ(s.action().tensor(), trivial_action(h, Side::right, 2).tensor());
}
