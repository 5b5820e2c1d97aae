#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace hayd;
using fixtures::Zp;
using fixtures::Q;

namespace {

template <class K>
Tensor<K> matrix(const K& f, std::size_t r, std::size_t c, const std::vector<long long>& dense) {
  std::vector<typename K::value_type> v;
  for (auto x : dense) v.push_back(f.from_int(x));
  return Tensor<K>::from_dense(f, {r, c}, v);
}

}  // namespace

TEST(Field, InverseOverRationals) {
  Q f;
  EXPECT_EQ(f.inv(f.from_int(2)), mpq_class(1, 2));
  EXPECT_THROW(f.inv(f.zero()), DivisionByZero);
}

TEST(Field, InverseOverF7) {
  Zp f(7);
  EXPECT_EQ(f.inv(f.from_int(2)), f.from_int(4));
  EXPECT_THROW(f.inv(f.zero()), DivisionByZero);
  EXPECT_EQ(f.from_int(-1), f.from_int(6));
}

TEST(Field, RejectsComposite) { EXPECT_THROW(Zp(6), InputError); }

TEST(Field, ParseAndPrint) {
  Q q;
  EXPECT_EQ(q.to_string(q.parse("6/4")), "3/2");
  EXPECT_THROW(q.parse("1/0"), InputError);
  Zp f(5);
  EXPECT_EQ(f.to_string(f.parse("3")), "3");
}

TEST(Tensor, SparseEntriesStaySortedAndZeroFree) {
  Q f;
  auto t = Tensor<Q>::from_entries(f, {2, 2}, {{{1, 1}, 1}, {{0, 1}, 2}, {{0, 1}, -2}});
  EXPECT_EQ(t.nnz(), 1u);
  EXPECT_EQ(t.at({1, 1}), 1);
  EXPECT_EQ(t.at({0, 1}), 0);
}

TEST(Tensor, FirstDifferenceIsLexicographic) {
  Q f;
  auto a = Tensor<Q>::from_entries(f, {2, 2}, {{{1, 0}, 1}, {{0, 1}, 1}});
  auto b = Tensor<Q>::from_entries(f, {2, 2}, {{{1, 0}, 2}, {{0, 1}, 3}});
  EXPECT_EQ(*first_difference(a, b), (Index{0, 1}));
  EXPECT_FALSE(first_difference(a, a).has_value());
}

TEST(Invert, Identity) {
  Q f;
  auto r = invert_matrix(Tensor<Q>::identity(f, 3));
  ASSERT_TRUE(r.invertible());
  EXPECT_EQ(*r.inverse, Tensor<Q>::identity(f, 3));
}

TEST(Invert, SwapIsInvolution) {
  Q f;
  auto swap = matrix(f, 2, 2, {0, 1, 1, 0});
  auto r = invert_matrix(swap);
  ASSERT_TRUE(r.invertible());
  EXPECT_EQ(*r.inverse, swap);
}

TEST(Invert, SingularReportsRank) {
  Zp f(7);
  auto r = invert_matrix(matrix(f, 2, 2, {1, 1, 1, 1}));
  EXPECT_FALSE(r.invertible());
  EXPECT_EQ(r.rank, 1u);
}

TEST(Invert, GeneralRationalMatrix) {
  Q f;
  auto m = matrix(f, 3, 3, {2, 1, 0, 1, 3, 1, 0, 1, 4});
  auto r = invert_matrix(m);
  ASSERT_TRUE(r.invertible());
  EXPECT_EQ(compose(m, *r.inverse), Tensor<Q>::identity(f, 3));
}

TEST(Contract, IdentityWithIdentity) {
  Q f;
  auto id = Tensor<Q>::identity(f, 2);
  EXPECT_EQ(contract(id, id, {{1, 0}}), id);
}

TEST(Contract, EmptyPairingIsOuterProduct) {
  Q f;
  auto v = Tensor<Q>::from_entries(f, {2}, {{{0}, 1}, {{1}, 2}});
  auto w = Tensor<Q>::from_entries(f, {3}, {{{2}, 5}});
  auto t = contract(v, w, {});
  EXPECT_EQ(t.shape(), (Shape{2, 3}));
  EXPECT_EQ(t.at({1, 2}), 10);
  EXPECT_EQ(t.nnz(), 2u);
}

TEST(Contract, CoproductAgainstCounitIsIdentity) {
  Q f;
  auto h = group_algebra(cyclic_group(2), f);
  EXPECT_EQ(contract(h.comult(), h.counit(), {{1, 0}}), Tensor<Q>::identity(f, 2));
  EXPECT_EQ(contract(h.comult(), h.counit(), {{2, 0}}), Tensor<Q>::identity(f, 2));
}

TEST(Permute, SwapsAxes) {
  Q f;
  auto t = Tensor<Q>::from_entries(f, {2, 3, 4}, {{{1, 2, 3}, 7}});
  auto p = permute(t, {2, 0, 1});
  EXPECT_EQ(p.shape(), (Shape{4, 2, 3}));
  EXPECT_EQ(p.at({3, 1, 2}), 7);
}

TEST(Rref, RankAndNullspace) {
  Zp f(5);
  auto m = Matrix<Zp>::from_tensor(matrix(f, 2, 3, {1, 2, 3, 2, 4, 0}));
  EXPECT_EQ(rank(m), 2u);
  auto ns = nullspace(m);
  ASSERT_EQ(ns.size(), 1u);
  for (std::size_t r = 0; r < 2; ++r) {
    auto acc = f.zero();
    for (std::size_t c = 0; c < 3; ++c) acc += m(r, c) * ns[0][c];
    EXPECT_TRUE(f.is_zero(acc));
  }
}

TEST(Subspace, CoordinatesAndMembership) {
  Q f;
  std::vector<std::vector<mpq_class>> vs{{1, 1, 0}, {2, 2, 0}, {0, 1, 1}};
  auto s = Subspace<Q>::span(f, 3, vs);
  EXPECT_EQ(s.dim(), 2u);
  EXPECT_TRUE(s.contains({1, 2, 1}));
  EXPECT_FALSE(s.contains({0, 0, 1}));
}

TEST(Coordinates, RejectsDependentBasis) {
  Q f;
  std::vector<std::vector<mpq_class>> basis{{1, 0}, {2, 0}};
  EXPECT_THROW(coordinates(f, basis, std::vector<mpq_class>{1, 0}), InputError);
}
