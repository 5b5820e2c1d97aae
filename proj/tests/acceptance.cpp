// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Usage: acceptance <path to hayd executable>

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "fixtures.hpp"

using namespace hayd;
using fixtures::Q;
using fixtures::Zp;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    if (!ok && passed) {
      passed = false;
      detail = what;
    }
  }
};

std::string cli_path;

template <class F>
void for_each_builtin(const std::vector<std::string>& names, F&& f) {
  for (const auto& name : names) std::visit([&](const auto& h) { f(name, h); }, make_builtin(name));
}

/// Prime-field forms of the builtins, where characters and group-likes are enumerable.
std::vector<std::string> prime_builtins() {
  std::vector<std::string> out;
  for (const auto& n : builtin_names()) out.push_back(n == "taft3" ? n : n + "@7");
  return out;
}

template <class K>
std::vector<typename K::value_type> dense(const Tensor<K>& t, std::size_t n) {
  std::vector<typename K::value_type> v(n, t.field().zero());
  for (const auto& e : t.entries()) v[e.index] = e.value;
  return v;
}

template <class K>
Tensor<K> one_tensor_h(const FinHopfAlgebra<K>& h) {
  const std::size_t n = h.dim();
  fixtures::Items<K> ones;
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& u : h.unit().entries()) ones.push_back({{i, static_cast<std::size_t>(u.index * n + i)}, u.value});
  return Tensor<K>::from_entries(h.field(), {n, n * n}, ones);
}

template <class K>
bool commutative(const FinAlgebra<K>& a) {
  return a.mult() == algebra_opposite(a).mult();
}

int run_cli(const std::string& args) {
  const std::string cmd = "\"" + cli_path + "\" " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome c1_hopf_axioms() {
  Outcome o;
  for_each_builtin(builtin_names(), [&](const std::string& name, const auto& h) {
    auto r = verify_hopf_axioms(h);
    o.expect(r.passed, name + ": " + r.summary());
  });
  o.detail = o.passed ? "7 builtins" : o.detail;
  return o;
}

Outcome c2_adjoint_stability() {
  Outcome o;
  Q f;
  const Group g = symmetric_group3();
  auto m = fixtures::adjoint_graded(g, f);
  o.expect(check_ayd(m).passed, "adjoint kS3 fails aYD");
  o.expect(check_stability(m).passed, "adjoint kS3 not stable");
  std::vector<std::size_t> grading{0, 1, 2, 3, 4, 5};
  grading[1] = 2;
  auto bad = group_graded_module(group_algebra(g, f), g.identity, grading, fixtures::conjugation_action(g, f));
  auto r = check_ayd(bad);
  Index expected;
  for (std::size_t x = 0; x < 6 && expected.empty(); ++x)
    for (std::size_t a = 0; a < 6 && expected.empty(); ++a)
      if (grading[g.mul(g.mul(x, a), g.inverse(x))] != g.mul(g.mul(x, grading[a]), g.inverse(x))) expected = {x, a};
  o.expect(!r.passed, "corrupted grading passes");
  o.expect(r.witness && *r.witness == expected, "witness is not the lexicographically first failure");
  if (o.passed) o.detail = "corrupted grading witness " + format_index(expected);
  return o;
}

Outcome c3_modular_pairs() {
  Outcome o;
  std::size_t pairs = 0;
  for_each_builtin(prime_builtins(), [&](const std::string& name, const auto& h) {
    using K = std::decay_t<decltype(h.field())>;
    auto deltas = find_characters(h);
    const auto eps = dense(h.counit(), h.dim());
    if (std::find(deltas.begin(), deltas.end(), eps) == deltas.end()) deltas.push_back(eps);
    for (const auto& d : deltas)
      for (const auto& s : find_group_likes(h)) {
        auto m = one_dim_module<K>(h, d, s);
        const bool lemma = check_ayd(m).passed && check_stability(m).passed;
        o.expect(check_modular_pair(h, d, s) == lemma, name + ": modular pair disagrees with stable aYD");
        ++pairs;
      }
  });
  Q f;
  auto sw = verified(sweedler(f));
  const auto eps = dense(sw.counit(), 4);
  o.expect(check_modular_pair(sw, eps, fixtures::unit_dense(f, 4, 1)), "(eps, g) on sweedler is not a modular pair");
  o.expect(!check_modular_pair(sw, eps, fixtures::unit_dense(f, 4, 0)), "(eps, 1) on sweedler is a modular pair");
  if (o.passed) o.detail = std::to_string(pairs) + " pairs";
  return o;
}

Outcome c4_tensor_products() {
  Outcome o;
  std::size_t per_case[4] = {0, 0, 0, 0};
  for_each_builtin(prime_builtins(), [&](const std::string& name, const auto& h) {
    for (Case c : {Case::ll, Case::lr, Case::rl, Case::rr}) {
      auto corpus = detail::module_corpus(h, c);
      for (const auto& y : corpus.yd)
        for (const auto& a : corpus.ayd) {
          if (y.dim() > 4 || a.dim() > 4) continue;
          auto r = check_ayd(tensor_product(y, a, c));
          o.expect(r.passed, name + " " + case_name(c) + ": " + r.summary());
          ++per_case[static_cast<int>(c)];
        }
    }
  });
  std::size_t least = *std::min_element(std::begin(per_case), std::end(per_case));
  o.expect(least >= 20, "only " + std::to_string(least) + " pairs in some case");
  if (o.passed) o.detail = "at least " + std::to_string(least) + " pairs per case";
  return o;
}

Outcome c5_entwining() {
  Outcome o;
  std::size_t modules = 0;
  bool separated = false;
  for_each_builtin(prime_builtins(), [&](const std::string& name, const auto& h) {
    auto ea = entwining_map(h, EntwiningKind::ayd), ey = entwining_map(h, EntwiningKind::yd);
    o.expect(verify_entwining(ea).passed, name + ": aYD entwining axioms fail");
    o.expect(verify_entwining(ey).passed, name + ": YD entwining axioms fail");
    auto corpus = detail::module_corpus(h, Case::rr);
    for (const auto* list : {&corpus.ayd, &corpus.yd, &corpus.other})
      for (const auto& m : *list) {
        const bool a = check_ayd(m).passed, y = check_yd(m).passed;
        o.expect(a == check_entwined_module(ea, m).passed, name + ": aYD and entwined disagree");
        o.expect(y == check_entwined_module(ey, m).passed, name + ": YD and entwined disagree");
        if (name.rfind("sweedler", 0) == 0 && a != y) separated = true;
        ++modules;
      }
  });
  o.expect(separated, "no sweedler module separates YD from aYD");
  if (o.passed) o.detail = std::to_string(modules) + " modules";
  return o;
}

Outcome c6_pi_stability() {
  Outcome o;
  auto model = fixtures::pi_model();
  auto r = check_pi_stability(verified(model.h), model.m, model.coaction, model.pi);
  o.expect(r.passed, r.summary());
  return o;
}

Outcome c7_galois() {
  Outcome o;
  for_each_builtin(builtin_names(), [&](const std::string& name, const auto& h) {
    auto g = canonical_map(regular_comodule_algebra(h));
    o.expect(g.bijective, name + ": canonical map not bijective");
    if (!g.bijective) return;
    o.expect(compose(translation_map(g), g.can) == one_tensor_h(h), name + ": can T != 1 (x) h");
    auto s = make_stable_ayd(g.source);
    o.expect(s.structure_case() == Case::rr, name + ": flipped module not rr");
    o.expect(check_ayd(s).passed && check_stability(s).passed, name + ": flipped module not stable aYD");
    o.expect(check_yd(mu_module(g)).passed, name + ": standard action not YD");
    if (commutative(h.algebra())) {
      using K = std::decay_t<decltype(h.field())>;
      fixtures::Items<K> eps_id;
      for (const auto& e : h.counit().entries())
        for (std::size_t a = 0; a < h.dim(); ++a) eps_id.push_back({{static_cast<std::size_t>(e.index), a, a}, e.value});
      const auto expected = Tensor<K>::from_entries(h.field(), {h.dim(), h.dim(), h.dim()}, eps_id);
      o.expect(mu_action(g, false).action.tensor() == expected, name + ": MU action is not eps (x) id");
      o.expect(mu_action(g, true).action.tensor() == expected, name + ": flipped MU action is not eps (x) id");
    }
  });
  return o;
}

Outcome c8_ah() {
  Outcome o;
  std::size_t roundtrips = 0;
  for_each_builtin(builtin_names(), [&](const std::string& name, const auto& h) {
    auto a = build_AH(h);
    auto r = verify_algebra(a);
    o.expect(r.passed, name + ": A(H) " + r.summary());
    const bool equal = a.mult() == build_double(h).mult() && a.unit() == build_double(h).unit();
    o.expect(equal == squared_antipode_is_identity(h), name + ": A(H) = D(H) does not match S^2 = id");
    if (name == "sweedler") o.expect(!equal, "A(H) = D(H) on sweedler");
    auto c = check_comodule_algebra(a, double_hopf(h), AH_double_coaction(h));
    o.expect(c.passed, name + ": " + c.summary());
  });
  for_each_builtin(prime_builtins(), [&](const std::string& name, const auto& h) {
    for (const auto& m : detail::module_corpus(h, Case::lr).ayd) {
      auto v = ayd_to_AH_module(h, m);
      auto back = AH_module_to_ayd(h, v);
      o.expect(back.action().tensor() == m.action().tensor() && back.coaction().tensor() == m.coaction().tensor(),
               name + ": aYD -> A(H) -> aYD is not the identity");
      auto again = ayd_to_AH_module(h, back);
      o.expect(again.action == v.action, name + ": A(H) -> aYD -> A(H) is not the identity");
      ++roundtrips;
    }
  });
  if (o.passed) o.detail = std::to_string(roundtrips) + " round trips";
  return o;
}

/// Every single structure-constant change of every builtin export, parsed and verified.
template <class K>
void sweep_corruptions(const std::string& name, const FinHopfAlgebra<K>& h, Outcome& o, std::size_t& count) {
  const K& f = h.field();
  const io::json base = io::hopf_json(h);
  const std::pair<const char*, const Tensor<K>*> parts[] = {
      {"mult", &h.mult()}, {"unit", &h.unit()}, {"comult", &h.comult()}, {"counit", &h.counit()}, {"antipode", &h.antipode()}};
  for (const auto& [key, t] : parts) {
    const Shape& shape = t->shape();
    std::size_t total = 1;
    for (auto s : shape) total *= s;
    for (std::size_t lin = 0; lin < total; ++lin) {
      const Index idx = unravel(shape, lin);
      const typename K::value_type old = t->at(idx);
      typename K::value_type bumped = old + f.one();
      if (f.is_zero(bumped)) bumped = bumped + f.one();
      io::json doc = base;
      io::json& entries = doc[key];
      bool found = false;
      for (auto& e : entries) {
        bool same = true;
        for (std::size_t a = 0; a < idx.size(); ++a) same = same && e[io::kAxisKeys[a]].template get<std::size_t>() == idx[a];
        if (same) {
          e["c"] = io::scalar_json(f, bumped);
          found = true;
        }
      }
      if (!found) {
        io::json e = io::json::object();
        for (std::size_t a = 0; a < idx.size(); ++a) e[io::kAxisKeys[a]] = idx[a];
        e["c"] = io::scalar_json(f, bumped);
        entries.push_back(e);
      }
      auto parsed = io::parse_document_text(io::dump(doc));
      const auto& hopf = *std::get<io::Document<K>>(parsed).hopf;
      auto r = verify_hopf_axioms(hopf);
      o.expect(!r.passed && r.witness.has_value(),
               name + ": changing " + key + format_index(idx) + (r.passed ? " still verifies" : " fails without a witness"));
      ++count;
    }
  }
}

Outcome c9_cli() {
  Outcome o;
  std::size_t count = 0;
  for_each_builtin(builtin_names(), [&](const std::string& name, const auto& h) { sweep_corruptions(name, h, o, count); });
  o.expect(run_cli("suite --builtin all --no-timing") == 0, "suite --builtin all does not exit 0");
  const auto dir = std::filesystem::temp_directory_path() / ("hayd-acceptance-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  for (const auto& name : builtin_names()) {
    const auto file = (dir / (name + ".json")).string();
    o.expect(run_cli("export " + name + " -o \"" + file + "\"") == 0, "export " + name + " failed");
    o.expect(run_cli("verify \"" + file + "\"") == 0, name + ": exported file does not verify");
    io::json doc = io::parse_json_text(io::read_file(file));
    auto& e = doc["mult"][0]["c"];
    e = e.is_string() ? io::json("7/3") : io::json((e.get<int>() + 1) % 7 == 0 ? 2 : (e.get<int>() + 1) % 7);
    std::ofstream(file) << io::dump(doc);
    o.expect(run_cli("verify \"" + file + "\"") == 1, name + ": corrupted export does not exit 1");
  }
  std::filesystem::remove_all(dir);
  if (o.passed) o.detail = std::to_string(count) + " corruptions";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <hayd executable>\n";
    return 2;
  }
  cli_path = argv[1];
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"1 hopf axioms on builtins", c1_hopf_axioms},
      {"2 adjoint kS3 stable aYD, corrupted grading witness", c2_adjoint_stability},
      {"3 modular pairs equal one-dimensional stable aYD", c3_modular_pairs},
      {"4 tensor product of YD and aYD is aYD in all cases", c4_tensor_products},
      {"5 entwining equivalence", c5_entwining},
      {"6 pi-stability of the finite fibration model", c6_pi_stability},
      {"7 Galois objects and Miyashita-Ulbrich modules", c7_galois},
      {"8 A(H), round trips, A(H) vs D(H), comodule algebra", c8_ah},
      {"9 CLI suite and single-constant corruptions", c9_cli},
  };
  int failed = 0;
  for (const auto& [label, run] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (o.passed ? "PASS " : "FAIL ") << "criterion " << label;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << " " << static_cast<long long>(ms + 0.5) << " ms" << std::endl;
    failed += !o.passed;
  }
  return failed == 0 ? 0 : 1;
}
