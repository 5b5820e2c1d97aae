#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "hayd/tensor.hpp"

namespace hayd {

/// Verdict of an exhaustive identity check.  On failure `witness` is the
/// lexicographically first violating basis tuple and `lhs`/`rhs` are the
/// two sides evaluated there.
template <class K>
struct Report {
  bool passed = true;
  std::string axiom;
  std::optional<Index> witness;
  std::optional<Tensor<K>> lhs;
  std::optional<Tensor<K>> rhs;
  std::string detail;

  static Report pass(std::string axiom) {
    Report r;
    r.axiom = std::move(axiom);
    return r;
  }

  static Report fail(std::string axiom, Index witness, std::optional<Tensor<K>> lhs = std::nullopt,
                     std::optional<Tensor<K>> rhs = std::nullopt, std::string detail = {}) {
    Report r;
    r.passed = false;
    r.axiom = std::move(axiom);
    r.witness = std::move(witness);
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.detail = std::move(detail);
    return r;
  }

  explicit operator bool() const { return passed; }

  std::string summary() const {
    if (passed) return axiom + ": pass";
    std::string s = axiom + ": FAIL";
    if (witness) s += " at " + format_index(*witness);
    if (!detail.empty()) s += " (" + detail + ")";
    return s;
  }
};

/// Thrown when a structure that must satisfy an identity does not; carries
/// the failing report's summary.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class K>
void require(const Report<K>& r, const std::string& what) {
  if (!r.passed) throw VerificationError(what + ": " + r.summary());
}

/// Runs `sides(tuple)` over every tuple of `input_dims` in lexicographic
/// order and returns the first tuple whose two sides differ.  `sides`
/// returns a pair of SparseVecs indexed by `out_shape`.
template <class K, class F>
Report<K> check_tuples(const K& field, std::string axiom, const Shape& input_dims,
                       const Shape& out_shape, F&& sides) {
  const std::uint64_t total = shape_size(input_dims);
  for (std::uint64_t lin = 0; lin < total; ++lin) {
    Index tuple = unravel(input_dims, lin);
    auto [l, r] = sides(static_cast<const Index&>(tuple));
    if (l != r)
      return Report<K>::fail(std::move(axiom), std::move(tuple),
                             Tensor<K>(field, out_shape, std::move(l)),
                             Tensor<K>(field, out_shape, std::move(r)));
  }
  return Report<K>::pass(std::move(axiom));
}

}  // namespace hayd
