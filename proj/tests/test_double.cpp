#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace hayd;
using fixtures::Q;
using fixtures::Zp;

namespace {

/// lr structure over h from an ll structure over a cocommutative h.
template <class K>
TwoSidedStructure<K> ll_to_lr_cocommutative(const TwoSidedStructure<K>& m) {
  auto x = mirror_coaction(m);
  return TwoSidedStructure<K>(m.hopf(), x.action(), x.coaction());
}

/// The one-dimensional rl module (delta, sigma) over H^{op,cop}, mirrored to lr over h.
template <class K>
TwoSidedStructure<K> one_dim_lr(const FinHopfAlgebra<K>& h, const std::vector<typename K::value_type>& delta,
                                const std::vector<typename K::value_type>& sigma) {
  return mirror_both(one_dim_module(verified(variant(h, Variant::op_cop)), delta, sigma));
}

}  // namespace

TEST(AH, TrivialHopfGivesGroundField) {
  Q f;
  auto a = build_AH(trivial_hopf(f));
  EXPECT_EQ(a.dim(), 1u);
  EXPECT_EQ(a.mult().at({0, 0, 0}), 1);
  EXPECT_EQ(a.unit().at({0}), 1);
}

TEST(AH, GroupAlgebraC2EqualsDouble) {
  Q f;
  auto h = group_algebra(cyclic_group(2), f);
  auto a = build_AH(h);
  EXPECT_EQ(a.dim(), 4u);
  EXPECT_TRUE(verify_algebra(a));
  EXPECT_EQ(a.mult(), build_double(h).mult());
  EXPECT_EQ(a.unit(), build_double(h).unit());
}

TEST(AH, SweedlerDiffersFromDouble) {
  Q f;
  auto h = sweedler(f);
  auto a = build_AH(h), d = build_double(h);
  EXPECT_TRUE(verify_algebra(a));
  EXPECT_TRUE(verify_algebra(d));
  EXPECT_TRUE(first_difference(a.mult(), d.mult()).has_value());
}

TEST(Double, GroupAlgebraIsSemidirectProduct) {
  Q f;
  const Group g = symmetric_group3();
  auto d = build_double(group_algebra(g, f));
  const std::size_t n = 6;
  // (d_a (x) x)(d_b (x) y) = [a = x b x^-1] d_a (x) xy
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t y = 0; y < n; ++y) {
          const bool hit = a == g.mul(g.mul(x, b), g.inverse(x));
          EXPECT_EQ(d.mult().at({a * n + x, b * n + y, a * n + g.mul(x, y)}), hit ? 1 : 0);
        }
}

TEST(Double, HopfStructureVerifies) {
  Zp f(7);
  for (const auto& h : {sweedler(f), group_algebra(symmetric_group3(), f)}) {
    auto d = double_hopf(h);
    EXPECT_EQ(d.dim(), h.dim() * h.dim());
    EXPECT_TRUE(verify_hopf_axioms(d));
  }
}

TEST(AHModule, TrivialModuleActsByCounit) {
  Q f;
  auto h = group_algebra(symmetric_group3(), f);
  auto m = one_dim_lr(h, h.counit().to_dense(), h.unit().to_dense());
  ASSERT_EQ(m.structure_case(), Case::lr);
  auto v = ayd_to_AH_module(h, m);
  EXPECT_EQ(v.dim, 1u);
  const std::size_t n = h.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(v.action.at({i * n + j, 0, 0}), h.unit().at({i}) * h.counit().at({j}));
}

TEST(AHModule, AdjointS3RoundTrip) {
  Q f;
  auto m = ll_to_lr_cocommutative(fixtures::adjoint_graded(symmetric_group3(), f));
  ASSERT_TRUE(check_ayd(m));
  auto back = AH_module_to_ayd(m.hopf(), ayd_to_AH_module(m.hopf(), m));
  EXPECT_EQ(back.action().tensor(), m.action().tensor());
  EXPECT_EQ(back.coaction().tensor(), m.coaction().tensor());
}

TEST(AHModule, SweedlerRoundTrip) {
  Q f;
  auto h = sweedler(f);
  auto m = one_dim_lr(h, h.counit().to_dense(), fixtures::unit_dense(f, 4, 1));
  ASSERT_TRUE(check_ayd(m));
  auto v = ayd_to_AH_module(h, m);
  EXPECT_TRUE(verify_module(v));
  auto back = AH_module_to_ayd(h, v);
  EXPECT_EQ(back.action().tensor(), m.action().tensor());
  EXPECT_EQ(back.coaction().tensor(), m.coaction().tensor());
}

TEST(AHModule, RejectsNonAyd) {
  Q f;
  auto h = sweedler(f);
  EXPECT_THROW(ayd_to_AH_module(h, one_dim_lr(h, h.counit().to_dense(), h.unit().to_dense())), InputError);
}

TEST(AHModule, RegularModuleOfAC2IsAyd) {
  Q f;
  auto h = group_algebra(cyclic_group(2), f);
  auto m = AH_module_to_ayd(h, regular_module(build_AH(h)));
  EXPECT_EQ(m.dim(), 4u);
  EXPECT_EQ(m.structure_case(), Case::lr);
  EXPECT_TRUE(check_ayd(m));
}

TEST(AHModule, RegularModuleOfASweedlerIsAyd) {
  Q f;
  auto h = sweedler(f);
  auto m = AH_module_to_ayd(h, regular_module(build_AH(h)));
  EXPECT_TRUE(check_ayd(m));
  EXPECT_FALSE(check_yd(m));
}

TEST(AHModule, CharactersGiveOneDimensionalAyd) {
  Zp f(3);
  auto h = group_algebra(cyclic_group(2), f);
  auto a = build_AH(h);
  auto chars = find_characters(a);
  ASSERT_FALSE(chars.empty());
  for (const auto& chi : chars) {
    fixtures::Items<Zp> act;
    for (std::size_t x = 0; x < a.dim(); ++x)
      if (!f.is_zero(chi[x])) act.push_back({{x, 0, 0}, chi[x]});
    AlgebraModule<Zp> v(a, 1, Tensor<Zp>::from_entries(f, {a.dim(), 1, 1}, act));
    ASSERT_TRUE(verify_module(v));
    auto m = AH_module_to_ayd(h, v);
    EXPECT_TRUE(check_ayd(m));
  }
}

TEST(DoubleModule, TrivialYd) {
  Q f;
  auto h = sweedler(f);
  auto m = one_dim_lr(h, h.counit().to_dense(), h.unit().to_dense());
  ASSERT_TRUE(check_yd(m));
  auto v = yd_to_double_module(h, m);
  EXPECT_EQ(v.dim, 1u);
  EXPECT_TRUE(verify_module(v));
}

TEST(DoubleModule, CrossedC2Module) {
  Q f;
  auto m = ll_to_lr_cocommutative(fixtures::adjoint_graded(cyclic_group(2), f));
  ASSERT_TRUE(check_yd(m));
  EXPECT_TRUE(verify_module(yd_to_double_module(m.hopf(), m)));
}

TEST(DoubleModule, RejectsNonYd) {
  Q f;
  auto h = sweedler(f);
  auto m = one_dim_lr(h, h.counit().to_dense(), fixtures::unit_dense(f, 4, 1));
  EXPECT_THROW(yd_to_double_module(h, m), InputError);
}

TEST(DoubleCoaction, TrivialHopf) {
  Q f;
  auto c = AH_double_coaction(trivial_hopf(f));
  EXPECT_EQ(c.tensor(), Tensor<Q>::from_entries(f, {1, 1, 1}, {{{0, 0, 0}, 1}}));
}

TEST(DoubleCoaction, ComoduleAlgebraOnBuiltins) {
  Q f;
  for (const auto& h : {sweedler(f), group_algebra(cyclic_group(3), f)})
    EXPECT_TRUE(check_comodule_algebra(build_AH(h), double_hopf(h), AH_double_coaction(h)));
}
