#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace hayd;
using fixtures::Zp;
using fixtures::Q;

TEST(Action, RegularAndTrivialPass) {
  Q f;
  auto h = sweedler(f);
  for (auto side : {Side::left, Side::right}) {
    EXPECT_TRUE(verify_action(h, regular_action(h, side)));
    EXPECT_TRUE(verify_action(h, trivial_action(h, side, 3)));
  }
}

TEST(Action, UnitNotIdentityFailsWithWitness) {
  Q f;
  auto h = group_algebra(cyclic_group(2), f);
  auto bad = regular_action(h, Side::left).tensor().scaled(2);
  auto r = verify_action(h, ActionStructure<Q>(Side::left, 2, bad));
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.axiom, "action_unit");
  EXPECT_EQ(*r.witness, (Index{0}));
}

TEST(Action, LeftRegularIsNotRightActionOfNoncommutative) {
  Q f;
  auto h = sweedler(f);
  EXPECT_FALSE(verify_action(h, ActionStructure<Q>(Side::right, 4, h.mult())).passed);
}

TEST(Action, ShapeMismatchIsInputError) {
  Q f;
  EXPECT_THROW(ActionStructure<Q>(Side::left, 3, Tensor<Q>(f, {2, 2, 2})), InputError);
}

TEST(Coaction, RegularAndTrivialPass) {
  Zp f(7);
  auto h = taft(3, f, f.from_int(2));
  for (auto side : {Side::left, Side::right}) {
    EXPECT_TRUE(verify_coaction(h, regular_coaction(h, side)));
    EXPECT_TRUE(verify_coaction(h, trivial_coaction(h, side, 2)));
  }
}

TEST(Coaction, ZeroCoactionFailsCounitLaw) {
  Q f;
  auto h = group_algebra(cyclic_group(2), f);
  auto r = verify_coaction(h, CoactionStructure<Q>(Side::left, 2, Tensor<Q>(f, {2, 2, 2})));
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.axiom, "coaction_counit");
  EXPECT_EQ(*r.witness, (Index{0}));
}

TEST(Coaction, NonCoassociativeFails) {
  Q f;
  auto h = sweedler(f);
  // f_0 -> x (x) f_0
  auto t = Tensor<Q>::from_entries(f, {1, 4, 1}, {{{0, 2, 0}, 1}});
  auto r = verify_coaction(h, CoactionStructure<Q>(Side::left, 1, t));
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.axiom, "coaction_coassociativity");
}

TEST(DualConversion, TrivialCoactionGivesEvaluationAtUnit) {
  Q f;
  auto h = sweedler(f);
  auto a = comodule_to_dual_action(h, trivial_coaction(h, Side::right, 2));
  // phi . m = phi(1) m
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t m = 0; m < 2; ++m) EXPECT_EQ(a.tensor().at({i, m, m}), h.unit().at({i}));
  EXPECT_TRUE(verify_action(dual_hopf(h), a));
}

TEST(DualConversion, RegularComoduleOfC2IsFunctionMultiplication) {
  Q f;
  auto h = group_algebra(cyclic_group(2), f);
  auto a = comodule_to_dual_action(h, regular_coaction(h, Side::right));
  EXPECT_EQ(a.tensor(), function_algebra(cyclic_group(2), f).mult());
}

TEST(DualConversion, RoundTripIsIdentity) {
  Zp f(7);
  auto h = taft(3, f, f.from_int(2));
  auto c = regular_coaction(h, Side::right);
  auto back = dual_action_to_comodule(h, comodule_to_dual_action(h, c));
  EXPECT_EQ(back.tensor(), c.tensor());
}

TEST(DualConversion, EvaluationActionGivesTrivialCoaction) {
  Q f;
  auto h = sweedler(f);
  auto c = trivial_coaction(h, Side::right, 3);
  auto a = comodule_to_dual_action(h, c);
  EXPECT_EQ(dual_action_to_comodule(h, a).tensor(), c.tensor());
}

TEST(DualConversion, RegularDualActionOnC2) {
  Q f;
  auto h = group_algebra(cyclic_group(2), f);
  auto hd = dual_hopf(h);
  auto c = dual_action_to_comodule(h, regular_action(hd, Side::left));
  EXPECT_TRUE(verify_coaction(h, c));
  EXPECT_EQ(c.tensor(), permute(hd.mult(), {1, 2, 0}));
}
