#pragma once

// Hand-built structures shared by the unit tests and the acceptance binary.

#include <algorithm>
#include <vector>

#include "hayd/hayd.hpp"

namespace fixtures {

using Q = hayd::RationalField;
using Zp = hayd::PrimeField;

template <class K>
using Items = std::vector<std::pair<hayd::Index, typename K::value_type>>;

/// Conjugation action of G on kG: g . e_a = e_{g a g^-1}.
template <class K>
hayd::Tensor<K> conjugation_action(const hayd::Group& g, const K& f) {
  Items<K> act;
  const std::size_t n = g.order;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t a = 0; a < n; ++a) act.push_back({{x, a, g.mul(g.mul(x, a), g.inverse(x))}, f.one()});
  return hayd::Tensor<K>::from_entries(f, {n, n, n}, act);
}

/// kG graded by the identity map with the conjugation action (ll case).
template <class K>
hayd::TwoSidedStructure<K> adjoint_graded(const hayd::Group& g, const K& f) {
  std::vector<std::size_t> grading(g.order);
  for (std::size_t a = 0; a < g.order; ++a) grading[a] = a;
  return hayd::group_graded_module(hayd::group_algebra(g, f), g.identity, grading, conjugation_action(g, f));
}

/// The finite fibration model: H = k^S3, M = k^X on the transpositions X,
/// pi = restriction, coaction dual to conjugation.
struct PiModel {
  hayd::FinHopfAlgebra<Q> h;
  hayd::FinAlgebra<Q> m;
  hayd::CoactionStructure<Q> coaction;
  hayd::Tensor<Q> pi;
};

inline PiModel pi_model() {
  const Q f;
  const hayd::Group g = hayd::symmetric_group3();
  std::vector<std::size_t> xs;
  for (std::size_t a = 0; a < g.order; ++a)
    if (a != g.identity && g.mul(a, a) == g.identity) xs.push_back(a);
  const std::size_t d = xs.size(), n = g.order;
  Items<Q> mult, unit, coaction, pi;
  for (std::size_t a = 0; a < d; ++a) {
    mult.push_back({{a, a, a}, 1});
    unit.push_back({{a}, 1});
    pi.push_back({{xs[a], a}, 1});
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t a = 0; a < d; ++a) {
      const std::size_t y = g.mul(g.mul(x, xs[a]), g.inverse(x));
      const auto b = static_cast<std::size_t>(std::find(xs.begin(), xs.end(), y) - xs.begin());
      coaction.push_back({{b, x, a}, 1});
    }
  return {hayd::function_algebra(g, f),
          hayd::FinAlgebra<Q>(f, hayd::Tensor<Q>::from_entries(f, {d, d, d}, mult), hayd::Tensor<Q>::from_entries(f, {d}, unit)),
          hayd::CoactionStructure<Q>(hayd::Side::left, d, hayd::Tensor<Q>::from_entries(f, {d, n, d}, coaction)),
          hayd::Tensor<Q>::from_entries(f, {n, d}, pi)};
}

/// Dense vector with a single 1.
template <class K>
std::vector<typename K::value_type> unit_dense(const K& f, std::size_t n, std::size_t i) {
  std::vector<typename K::value_type> v(n, f.zero());
  v[i] = f.one();
  return v;
}

/// Counit as a dense vector.
template <class K>
std::vector<typename K::value_type> counit_dense(const hayd::FinHopfAlgebra<K>& h) {
  return h.counit().to_dense();
}

}  // namespace fixtures
