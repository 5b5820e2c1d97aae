#pragma once

// Builtin registry and the check battery run by `suite`.

#include <algorithm>
#include <chrono>
#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hayd/builtin.hpp"
#include "hayd/io.hpp"

namespace hayd {

using AnyHopf = std::variant<FinHopfAlgebra<RationalField>, FinHopfAlgebra<PrimeField>>;

struct BuiltinInfo {
  const char* name;
  const char* description;
};

inline const std::vector<BuiltinInfo>& builtin_catalog() {
  static const std::vector<BuiltinInfo> catalog{
      {"kC2", "group algebra of C2 over Q"},
      {"kC3", "group algebra of C3 over Q"},
      {"kS3", "group algebra of S3 over Q"},
      {"funC2", "function algebra on C2 over Q"},
      {"funS3", "function algebra on S3 over Q"},
      {"sweedler", "Sweedler's 4-dimensional algebra over Q"},
      {"taft3", "Taft algebra of dimension 9 over F7 with zeta = 2"},
  };
  return catalog;
}

namespace detail {

template <class K>
FinHopfAlgebra<K> make_builtin_over(const std::string& base, K f) {
  if (base == "kC2") return group_algebra(cyclic_group(2), f);
  if (base == "kC3") return group_algebra(cyclic_group(3), f);
  if (base == "kS3") return group_algebra(symmetric_group3(), f);
  if (base == "funC2") return function_algebra(cyclic_group(2), f);
  if (base == "funS3") return function_algebra(symmetric_group3(), f);
  if (base == "sweedler") return sweedler(f);
  if (base == "taft3") {
    if constexpr (std::is_same_v<K, PrimeField>) {
      if (f.characteristic() == 7) return taft(3, f, f.from_int(2));
      for (std::uint32_t z = 2; z < f.characteristic(); ++z)
        if (multiplicative_order(f, f.from_int(z), 3) == 3) return taft(3, f, f.from_int(z));
      throw InputError("taft3: F" + std::to_string(f.characteristic()) + " has no element of order 3");
    } else {
      throw InputError("taft3 needs a prime field with a primitive cube root of unity");
    }
  }
  throw InputError("unknown builtin '" + base + "'; see list-builtins");
}

}  // namespace detail

/// "name" or "name@p" (the same algebra over F_p).
inline AnyHopf make_builtin(const std::string& spec) {
  const auto at = spec.find('@');
  const std::string base = spec.substr(0, at);
  if (at == std::string::npos) {
    if (base == "taft3") return detail::make_builtin_over(base, PrimeField(7));
    return detail::make_builtin_over(base, RationalField{});
  }
  unsigned long p = 0;
  try {
    std::size_t used = 0;
    p = std::stoul(spec.substr(at + 1), &used);
    if (used != spec.size() - at - 1) throw InputError("");
  } catch (const std::exception&) {
    throw InputError("bad field suffix in '" + spec + "'");
  }
  if (p >= (1ul << 31)) throw InputError("characteristic too large in '" + spec + "'");
  return detail::make_builtin_over(base, PrimeField(static_cast<std::uint32_t>(p)));
}

inline std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& b : builtin_catalog()) out.push_back(b.name);
  return out;
}

/// One row of a suite report.
struct SuiteItem {
  std::string check;
  std::string target;
  bool passed = false;
  std::optional<Index> witness;
  std::string axiom;
  std::string detail;
  io::json lhs, rhs;
  double millis = 0;
};

struct SuiteResult {
  std::vector<SuiteItem> items;
  bool passed() const {
    return std::all_of(items.begin(), items.end(), [](const SuiteItem& i) { return i.passed; });
  }
};

namespace detail {

template <class K>
SuiteItem to_item(const std::string& check, const std::string& target, const Report<K>& r) {
  SuiteItem it{check, target, r.passed, r.witness, r.axiom, r.detail, nullptr, nullptr, 0};
  if (r.lhs) it.lhs = io::tensor_json(*r.lhs);
  if (r.rhs) it.rhs = io::tensor_json(*r.rhs);
  return it;
}

template <class K>
Report<K> agreement(const std::string& label, const std::vector<std::pair<std::string, bool>>& mismatches) {
  for (const auto& [what, ok] : mismatches)
    if (!ok) return Report<K>::fail(label, {}, std::nullopt, std::nullopt, what);
  return Report<K>::pass(label);
}

/// Small test modules over H in every case: one-dimensional modules from
/// (character, group-like) pairs, the flipped and standard
/// Miyashita-Ulbrich modules of P = H, all mirrored into the requested case.
template <class K>
struct ModuleCorpus {
  std::vector<TwoSidedStructure<K>> ayd, yd, other;
};

template <class K>
std::vector<std::pair<std::vector<typename K::value_type>, std::vector<typename K::value_type>>> character_pairs(
    const FinHopfAlgebra<K>& h) {
  const K& f = h.field();
  const std::size_t n = h.dim();
  std::vector<std::vector<typename K::value_type>> chars{to_dense(f, SparseVec<K>(h.counit().entries()), n)};
  std::vector<std::vector<typename K::value_type>> gls{to_dense(f, h.unit_vec(), n)};
  if constexpr (std::is_same_v<K, PrimeField>) {
    chars = find_characters(h);
    gls = find_group_likes(h);
  }
  std::vector<std::pair<std::vector<typename K::value_type>, std::vector<typename K::value_type>>> out;
  for (const auto& d : chars)
    for (const auto& s : gls) out.emplace_back(d, s);
  return out;
}

/// Structures in case `c` over exactly `h` built from the rr-case
/// structures over the matching variant.
template <class K>
TwoSidedStructure<K> rr_to_case(const TwoSidedStructure<K>& rr, Case c) {
  switch (c) {
    case Case::rr: return rr;
    case Case::ll: return mirror_both(rr);
    case Case::lr: return mirror_action(rr);
    case Case::rl: return mirror_coaction(rr);
  }
  return rr;
}

inline Variant variant_for_case(Case c) {
  return c == Case::ll ? Variant::op_cop : c == Case::lr ? Variant::op : Variant::cop;
}

template <class K>
ModuleCorpus<K> module_corpus(const FinHopfAlgebra<K>& h, Case c) {
  ModuleCorpus<K> out;
  const FinHopfAlgebra<K> base = c == Case::rr ? h : variant(h, variant_for_case(c));
  auto keep = [&](const TwoSidedStructure<K>& m) {
    const bool a = check_ayd(m).passed, y = check_yd(m).passed;
    if (a) out.ayd.push_back(m);
    if (y) out.yd.push_back(m);
    if (!a && !y) out.other.push_back(m);
  };
  // one-dimensional modules are rl; bring them to rr over `base` through H^cop
  const FinHopfAlgebra<K> base_cop = variant(base, Variant::cop);
  for (const auto& [d, s] : character_pairs(base_cop)) keep(rr_to_case(mirror_coaction(one_dim_module(base_cop, d, s)), c));
  if (base.dim() <= 4) {
    auto g = canonical_map(regular_comodule_algebra(base));
    keep(rr_to_case(make_stable_ayd(g.source), c));
    keep(rr_to_case(mu_module(g), c));
  }
  return out;
}

}  // namespace detail

/// Checks run on every suite target, in name order.
inline const std::vector<std::string>& suite_check_names() {
  static const std::vector<std::string> names{
      "ah_algebra",        "ah_roundtrip",     "comodule_dual_roundtrip", "double_algebra",
      "double_comodule_algebra", "dual_involution", "entwined_equivalence", "entwining_axioms",
      "galois_regular",    "hopf_axioms",      "modular_pair_lemma",      "mu_yd",
      "stable_ayd",        "tensor_product",
  };
  return names;
}

namespace detail {

template <class K>
Report<K> run_check(const std::string& name, const FinHopfAlgebra<K>& h) {
  const K& f = h.field();
  const std::size_t n = h.dim();
  if (name == "hopf_axioms") return verify_hopf_axioms(h);
  if (name == "dual_involution") {
    auto dd = dual_hopf(dual_hopf(h));
    for (auto [a, b, what] : {std::tuple{&dd.mult(), &h.mult(), "mult"}, {&dd.comult(), &h.comult(), "comult"},
                              {&dd.unit(), &h.unit(), "unit"}, {&dd.counit(), &h.counit(), "counit"},
                              {&dd.antipode(), &h.antipode(), "antipode"}})
      if (auto w = first_difference(*a, *b)) return Report<K>::fail(name, *w, *a, *b, what);
    return Report<K>::pass(name);
  }
  if (name == "comodule_dual_roundtrip") {
    auto c = regular_coaction(h, Side::right);
    auto act = comodule_to_dual_action(h, c);
    if (auto r = verify_action(dual_hopf(h), act); !r) return r;
    auto back = dual_action_to_comodule(h, act);
    if (auto w = first_difference(back.tensor(), c.tensor())) return Report<K>::fail(name, *w, back.tensor(), c.tensor());
    return Report<K>::pass(name);
  }
  if (name == "modular_pair_lemma") {
    std::vector<std::pair<std::string, bool>> checks;
    std::size_t k = 0;
    for (const auto& [d, s] : character_pairs(h)) {
      auto m = one_dim_module(h, d, s);
      const bool stable = check_stability(m).passed;
      typename K::value_type pairing = f.zero();
      for (std::size_t i = 0; i < n; ++i) pairing += d[i] * s[i];
      const std::string tag = "pair " + std::to_string(k++);
      checks.push_back({tag + ": modular pair vs aYD and stable", check_modular_pair(h, d, s) == (check_ayd(m).passed && stable)});
      checks.push_back({tag + ": stability vs delta(sigma) = 1", stable == (pairing == f.one())});
    }
    return agreement<K>(name, checks);
  }
  if (name == "entwining_axioms") {
    if (auto r = verify_entwining(entwining_map(h, EntwiningKind::ayd)); !r) return r;
    if (auto r = verify_entwining(entwining_map(h, EntwiningKind::yd)); !r) return r;
    return Report<K>::pass(name);
  }
  if (name == "entwined_equivalence") {
    auto ea = entwining_map(h, EntwiningKind::ayd), ey = entwining_map(h, EntwiningKind::yd);
    auto corpus = module_corpus(h, Case::rr);
    std::vector<std::pair<std::string, bool>> checks;
    std::size_t k = 0;
    for (const auto* list : {&corpus.ayd, &corpus.yd, &corpus.other})
      for (const auto& m : *list) {
        const std::string tag = "module " + std::to_string(k++);
        checks.push_back({tag + ": aYD vs entwined", check_ayd(m).passed == check_entwined_module(ea, m).passed});
        checks.push_back({tag + ": YD vs entwined", check_yd(m).passed == check_entwined_module(ey, m).passed});
      }
    return agreement<K>(name, checks);
  }
  if (name == "tensor_product") {
    for (Case c : {Case::ll, Case::lr, Case::rl, Case::rr}) {
      auto corpus = module_corpus(h, c);
      for (const auto& y : corpus.yd)
        for (const auto& a : corpus.ayd)
          if (auto r = check_ayd(tensor_product(y, a, c)); !r) return r;
    }
    return Report<K>::pass(name);
  }
  if (name == "galois_regular") {
    auto g = canonical_map(regular_comodule_algebra(h));
    if (!g.bijective)
      return Report<K>::fail(name, {}, std::nullopt, std::nullopt, "canonical map has rank " + std::to_string(g.can_rank));
    translation_map(g);
    return Report<K>::pass(name);
  }
  if (name == "stable_ayd") {
    auto m = make_stable_ayd(regular_comodule_algebra(h));
    if (auto r = check_ayd(m); !r) return r;
    if (auto r = check_stability(m); !r) return r;
    return Report<K>::pass(name);
  }
  if (name == "mu_yd") return check_yd(mu_module(canonical_map(regular_comodule_algebra(h))));
  if (name == "ah_algebra") return verify_algebra(build_AH(h));
  if (name == "double_algebra") return verify_algebra(build_double(h));
  if (name == "ah_roundtrip") {
    auto corpus = module_corpus(h, Case::lr);
    for (const auto& m : corpus.ayd) {
      auto back = AH_module_to_ayd(h, ayd_to_AH_module(h, m));
      if (auto w = first_difference(back.action().tensor(), m.action().tensor()))
        return Report<K>::fail(name, *w, back.action().tensor(), m.action().tensor(), "action");
      if (auto w = first_difference(back.coaction().tensor(), m.coaction().tensor()))
        return Report<K>::fail(name, *w, back.coaction().tensor(), m.coaction().tensor(), "coaction");
    }
    return Report<K>::pass(name);
  }
  if (name == "double_comodule_algebra") return check_comodule_algebra(build_AH(h), double_hopf(h), AH_double_coaction(h));
  throw InputError("unknown check '" + name + "'");
}

}  // namespace detail

/// Runs `checks` on one Hopf algebra.  If hopf_axioms fails, the
/// remaining checks are not run.
template <class K>
std::vector<SuiteItem> run_checks(const FinHopfAlgebra<K>& input, const std::string& target, const std::vector<std::string>& checks) {
  std::vector<SuiteItem> out;
  auto timed = [&](const std::string& name, auto&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    SuiteItem item;
    try {
      item = body();
    } catch (const VerificationError& e) {
      item = SuiteItem{name, target, false, std::nullopt, name, e.what(), nullptr, nullptr, 0};
    }
    item.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(item));
  };
  std::optional<FinHopfAlgebra<K>> h;
  timed("hopf_axioms", [&] {
    auto r = verify_hopf_axioms(input);
    if (r) h = verified(input);
    return detail::to_item("hopf_axioms", target, r);
  });
  const bool want_axioms = std::find(checks.begin(), checks.end(), "hopf_axioms") != checks.end();
  if (!h) return out;
  if (!want_axioms) out.clear();
  for (const auto& name : checks) {
    if (name == "hopf_axioms") continue;
    timed(name, [&] { return detail::to_item(name, target, detail::run_check(name, *h)); });
  }
  return out;
}

inline void sort_items(std::vector<SuiteItem>& items) {
  std::stable_sort(items.begin(), items.end(),
                   [](const SuiteItem& a, const SuiteItem& b) { return std::tie(a.check, a.target) < std::tie(b.check, b.target); });
}

inline std::vector<SuiteItem> run_checks_any(const AnyHopf& h, const std::string& target, const std::vector<std::string>& checks) {
  return std::visit([&](const auto& x) { return run_checks(x, target, checks); }, h);
}

inline io::json item_json(const SuiteItem& it, bool timing) {
  io::json out{{"check", it.check}, {"target", it.target}, {"passed", it.passed}};
  if (it.witness) out["witness"] = *it.witness;
  if (!it.passed && it.axiom != it.check) out["axiom"] = it.axiom;
  if (!it.detail.empty()) out["detail"] = it.detail;
  if (!it.lhs.is_null()) out["lhs"] = it.lhs;
  if (!it.rhs.is_null()) out["rhs"] = it.rhs;
  if (timing) out["millis"] = static_cast<std::int64_t>(it.millis + 0.5);
  return out;
}

inline std::string item_line(const SuiteItem& it, bool timing) {
  std::string s = std::string(it.passed ? "PASS " : "FAIL ") + it.check + " [" + it.target + "]";
  if (!it.passed) {
    if (it.axiom != it.check) s += " " + it.axiom;
    if (it.witness) s += " witness " + format_index(*it.witness);
    if (!it.detail.empty()) s += " (" + it.detail + ")";
  }
  if (timing) s += " " + std::to_string(static_cast<long long>(it.millis + 0.5)) + " ms";
  return s;
}

}  // namespace hayd
