// hayd: verify and build Hopf-algebraic structures given by structure constants.
//
// Exit codes: 0 every check passed, 1 some check failed, 2 input or usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "hayd/hayd.hpp"

namespace {

using hayd::io::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct Output {
  bool json_mode = false;
  bool timing = true;
  std::string path;  // build output; empty = stdout
};

int emit(std::vector<hayd::SuiteItem> items, const Output& out) {
  hayd::sort_items(items);
  if (out.json_mode) {
    json arr = json::array();
    for (const auto& it : items) arr.push_back(hayd::item_json(it, out.timing));
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const auto& it : items) {
      std::cout << hayd::item_line(it, out.timing) << "\n";
      if (!it.passed && !it.lhs.is_null()) std::cout << "  lhs: " << it.lhs.dump() << "\n  rhs: " << it.rhs.dump() << "\n";
    }
  }
  bool ok = true;
  for (const auto& it : items) ok = ok && it.passed;
  return ok ? kExitPass : kExitFail;
}

void write_document(const json& doc, const Output& out) {
  if (out.path.empty()) {
    std::cout << hayd::io::dump(doc);
    return;
  }
  std::ofstream f(out.path, std::ios::binary);
  if (!f) throw hayd::InputError("cannot write '" + out.path + "'");
  f << hayd::io::dump(doc);
}

hayd::AnyHopf resolve_hopf(const std::string& ref) {
  if (ref.rfind("builtin:", 0) == 0) return hayd::make_builtin(ref.substr(8));
  auto doc = hayd::io::load_document(ref);
  return std::visit(
      [&](auto& d) -> hayd::AnyHopf {
        if (d.kind != hayd::io::DocKind::hopf) throw hayd::InputError("'" + ref + "' is not a hopf document");
        return *d.hopf;
      },
      doc);
}

/// The Hopf algebra a document refers to: --hopf wins, then an embedded
/// document, then the document's reference string.
template <class K>
hayd::FinHopfAlgebra<K> hopf_for(const hayd::io::Document<K>& doc, const std::string& flag) {
  std::optional<hayd::AnyHopf> any;
  if (!flag.empty())
    any = resolve_hopf(flag);
  else if (doc.hopf)
    return *doc.hopf;
  else if (doc.hopf_ref)
    any = resolve_hopf(*doc.hopf_ref);
  else
    throw hayd::InputError("no Hopf algebra given; pass --hopf or embed one in the document");
  auto* h = std::get_if<hayd::FinHopfAlgebra<K>>(&*any);
  if (!h || !(h->field() == doc.field))
    throw hayd::InputError("the Hopf algebra and the document are over different fields");
  if (doc.kind != hayd::io::DocKind::hopf && doc.kind != hayd::io::DocKind::algebra && h->dim() != doc.hopf_dim)
    throw hayd::InputError("hopf_dim " + std::to_string(doc.hopf_dim) + " does not match the Hopf algebra of dimension " +
                           std::to_string(h->dim()));
  return *h;
}

template <class K>
hayd::SuiteItem item(const std::string& check, const std::string& target, const hayd::Report<K>& r) {
  return hayd::detail::to_item(check, target, r);
}

/// Verified copy of h, or nullopt after recording the failing axiom.
template <class K>
std::optional<hayd::FinHopfAlgebra<K>> verified_hopf(const hayd::FinHopfAlgebra<K>& h, const std::string& target,
                                                     std::vector<hayd::SuiteItem>& items, bool always_report) {
  auto r = hayd::verify_hopf_axioms(h);
  if (!r || always_report) items.push_back(item("hopf_axioms", target, r));
  if (!r) return std::nullopt;
  return hayd::verified(h);
}

/// Builds the two-sided structure after reporting any module or comodule
/// axiom failure.
template <class K>
std::optional<hayd::TwoSidedStructure<K>> two_sided(const hayd::FinHopfAlgebra<K>& h, const hayd::io::Document<K>& doc,
                                                    const std::string& target, std::vector<hayd::SuiteItem>& items) {
  if (doc.kind != hayd::io::DocKind::two_sided) throw hayd::InputError("expected a two_sided document");
  auto ra = hayd::verify_action(h, *doc.action);
  auto rc = hayd::verify_coaction(h, *doc.coaction);
  if (!ra) items.push_back(item("action", target, ra));
  if (!rc) items.push_back(item("coaction", target, rc));
  if (!ra || !rc) return std::nullopt;
  return hayd::TwoSidedStructure<K>(h, *doc.action, *doc.coaction);
}

template <class K>
std::optional<hayd::ComoduleAlgebra<K>> comodule_algebra(const hayd::FinHopfAlgebra<K>& h, const hayd::io::Document<K>& doc,
                                                         const std::string& target, std::vector<hayd::SuiteItem>& items) {
  if (doc.kind != hayd::io::DocKind::comodule_algebra) throw hayd::InputError("expected a comodule_algebra document");
  auto ra = hayd::verify_algebra(*doc.algebra);
  auto rc = hayd::check_comodule_algebra(*doc.algebra, h, *doc.coaction);
  if (!ra) items.push_back(item("algebra", target, ra));
  if (!rc) items.push_back(item("comodule_algebra", target, rc));
  if (!ra || !rc) return std::nullopt;
  return hayd::ComoduleAlgebra<K>(*doc.algebra, h, *doc.coaction);
}

std::optional<hayd::Case> parse_case(const std::string& s) {
  if (s.empty()) return std::nullopt;
  for (auto c : {hayd::Case::ll, hayd::Case::lr, hayd::Case::rl, hayd::Case::rr})
    if (s == hayd::case_name(c)) return c;
  throw hayd::InputError("--case must be one of ll, lr, rl, rr");
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const std::string& file, const std::string& hopf_flag, const Output& out) {
  auto any = hayd::io::load_document(file);
  std::vector<hayd::SuiteItem> items;
  std::visit(
      [&](const auto& doc) {
        using K = std::decay_t<decltype(doc.field)>;
        using hayd::io::DocKind;
        if (doc.kind == DocKind::algebra) {
          items.push_back(item("algebra", file, hayd::verify_algebra(*doc.algebra)));
          return;
        }
        auto h = verified_hopf(hopf_for(doc, doc.kind == DocKind::hopf ? std::string() : hopf_flag), file, items, doc.kind == DocKind::hopf);
        if (!h) return;
        switch (doc.kind) {
          case DocKind::action: items.push_back(item("action", file, hayd::verify_action(*h, *doc.action))); break;
          case DocKind::coaction: items.push_back(item("coaction", file, hayd::verify_coaction(*h, *doc.coaction))); break;
          case DocKind::two_sided:
            items.push_back(item("action", file, hayd::verify_action(*h, *doc.action)));
            items.push_back(item("coaction", file, hayd::verify_coaction(*h, *doc.coaction)));
            break;
          case DocKind::comodule_algebra:
            items.push_back(item("algebra", file, hayd::verify_algebra(*doc.algebra)));
            items.push_back(item("comodule_algebra", file, hayd::check_comodule_algebra<K>(*doc.algebra, *h, *doc.coaction)));
            break;
          default: break;
        }
      },
      any);
  return emit(std::move(items), out);
}

// ---------------------------------------------------------------------------
// check

const std::vector<std::string>& module_checks() {
  static const std::vector<std::string> names{"ayd", "yd", "stability", "entwined_ayd", "entwined_yd", "action", "coaction",
                                              "comodule_algebra", "galois", "stable_ayd", "mu_yd", "modular_pair"};
  return names;
}

template <class K>
void check_on_module(const std::string& name, const hayd::FinHopfAlgebra<K>& h, const hayd::io::Document<K>& doc,
                     const std::string& target, std::optional<hayd::Case> want, std::vector<hayd::SuiteItem>& items) {
  using hayd::io::DocKind;
  if (name == "action" || name == "coaction") {
    if (doc.action && name == "action") return items.push_back(item(name, target, hayd::verify_action(h, *doc.action)));
    if (doc.coaction && name == "coaction") return items.push_back(item(name, target, hayd::verify_coaction(h, *doc.coaction)));
    throw hayd::InputError("document has no " + name);
  }
  if (name == "comodule_algebra" || name == "galois" || name == "stable_ayd" || name == "mu_yd") {
    auto p = comodule_algebra(h, doc, target, items);
    if (!p) return;
    if (name == "comodule_algebra") return items.push_back(item(name, target, hayd::Report<K>::pass(name)));
    auto g = hayd::canonical_map(*p);
    if (!g.bijective)
      return items.push_back(item(name, target,
                                  hayd::Report<K>::fail("canonical_map", {}, std::nullopt, std::nullopt,
                                                        "not bijective: dim P (x)_B P = " + std::to_string(g.quotient.dim) +
                                                            ", rank " + std::to_string(g.can_rank) + ", dim P (x) H = " +
                                                            std::to_string(p->dim() * h.dim()))));
    if (name == "galois") {
      hayd::translation_map(g);
      return items.push_back(item(name, target, hayd::Report<K>::pass(name)));
    }
    if (name == "mu_yd") return items.push_back(item(name, target, hayd::check_yd(hayd::mu_module(g))));
    if (!hayd::is_central(p->algebra(), g.coinvariants))
      throw hayd::InputError("stable_ayd: coinvariants are not central in P");
    auto m = hayd::TwoSidedStructure<K>(h, hayd::mu_action(g, true).action, p->coaction());
    auto r = hayd::check_ayd(m);
    if (r) r = hayd::check_stability(m);
    if (r) r = hayd::Report<K>::pass(name);
    return items.push_back(item(name, target, r));
  }
  auto m = two_sided(h, doc, target, items);
  if (!m) return;
  if (want && m->structure_case() != *want)
    throw hayd::InputError(std::string("module is in case ") + hayd::case_name(m->structure_case()) + ", not " +
                           hayd::case_name(*want));
  if (name == "ayd") return items.push_back(item(name, target, hayd::check_ayd(*m)));
  if (name == "yd") return items.push_back(item(name, target, hayd::check_yd(*m)));
  if (name == "stability") return items.push_back(item(name, target, hayd::check_stability(*m)));
  if (name == "entwined_ayd" || name == "entwined_yd") {
    auto e = hayd::entwining_map(h, name == "entwined_ayd" ? hayd::EntwiningKind::ayd : hayd::EntwiningKind::yd);
    return items.push_back(item(name, target, hayd::check_entwined_module(e, *m)));
  }
  if (name == "modular_pair") {
    if (m->dim() != 1 || m->structure_case() != hayd::Case::rl)
      throw hayd::InputError("modular_pair needs a one-dimensional rl-case module");
    std::vector<typename K::value_type> delta(h.dim(), h.field().zero()), sigma(h.dim(), h.field().zero());
    for (const auto& e : m->action().tensor().entries()) delta[e.index] = e.value;
    for (const auto& e : m->coaction().tensor().entries()) sigma[e.index] = e.value;
    if (!hayd::check_element(h, delta, hayd::ElementKind::character)) throw hayd::InputError("action is not a character");
    if (!hayd::check_element(h, sigma, hayd::ElementKind::group_like)) throw hayd::InputError("coaction is not group-like");
    const bool mp = hayd::check_modular_pair(h, delta, sigma);
    return items.push_back(item(name, target,
                                mp ? hayd::Report<K>::pass(name)
                                   : hayd::Report<K>::fail(name, {}, std::nullopt, std::nullopt, "not a modular pair in involution")));
  }
  throw hayd::InputError("unknown check '" + name + "'");
}

int cmd_check(const std::string& name, const std::string& hopf_flag, const std::string& module, const std::string& case_flag,
              const Output& out) {
  const auto want = parse_case(case_flag);
  const bool is_suite_check = std::find(hayd::suite_check_names().begin(), hayd::suite_check_names().end(), name) !=
                              hayd::suite_check_names().end();
  const bool is_module_check = std::find(module_checks().begin(), module_checks().end(), name) != module_checks().end();
  if (!is_suite_check && !is_module_check) throw hayd::InputError("unknown check '" + name + "'");
  if (is_suite_check && !(is_module_check && !module.empty())) {
    if (hopf_flag.empty()) throw hayd::InputError("check " + name + " needs --hopf");
    if (!module.empty()) throw hayd::InputError("check " + name + " takes no --module");
    return emit(hayd::run_checks_any(resolve_hopf(hopf_flag), hopf_flag, {name}), out);
  }
  if (module.empty()) throw hayd::InputError("check " + name + " needs --module");
  auto any = hayd::io::load_document(module);
  std::vector<hayd::SuiteItem> items;
  std::visit(
      [&](const auto& doc) {
        auto h = verified_hopf(hopf_for(doc, hopf_flag), module, items, false);
        if (h) check_on_module(name, *h, doc, module, want, items);
      },
      any);
  return emit(std::move(items), out);
}

// ---------------------------------------------------------------------------
// build

template <class K>
hayd::FinHopfAlgebra<K> verified_or_throw(const hayd::FinHopfAlgebra<K>& h) {
  hayd::require(hayd::verify_hopf_axioms(h), "Hopf algebra");
  return hayd::verified(h);
}

int cmd_build(const std::string& what, const std::string& hopf_flag, const std::string& module, const std::string& yd_file,
              const std::string& ayd_file, const std::string& case_flag, const Output& out) {
  if (what == "ah" || what == "double") {
    if (hopf_flag.empty()) throw hayd::InputError("build " + what + " needs --hopf");
    std::visit(
        [&](const auto& raw) {
          auto h = verified_or_throw(raw);
          write_document(what == "ah" ? hayd::io::algebra_json(hayd::build_AH(h)) : hayd::io::hopf_json(hayd::double_hopf(h)), out);
        },
        resolve_hopf(hopf_flag));
    return kExitPass;
  }
  if (what == "stable-ayd") {
    if (module.empty()) {
      if (hopf_flag.empty()) throw hayd::InputError("build stable-ayd needs --hopf or --module");
      std::visit(
          [&](const auto& raw) {
            auto h = verified_or_throw(raw);
            write_document(hayd::io::two_sided_json(hayd::make_stable_ayd(hayd::regular_comodule_algebra(h))), out);
          },
          resolve_hopf(hopf_flag));
      return kExitPass;
    }
    auto any = hayd::io::load_document(module);
    return std::visit(
        [&](const auto& doc) {
          using K = std::decay_t<decltype(doc.field)>;
          std::vector<hayd::SuiteItem> items;
          auto h = verified_hopf(hopf_for(doc, hopf_flag), module, items, false);
          if (!h) return emit(std::move(items), out);
          auto p = comodule_algebra(*h, doc, module, items);
          if (!p) return emit(std::move(items), out);
          write_document(hayd::io::two_sided_json(hayd::make_stable_ayd<K>(*p)), out);
          return kExitPass;
        },
        any);
  }
  if (what == "tensor") {
    if (yd_file.empty() || ayd_file.empty()) throw hayd::InputError("build tensor needs --yd and --ayd");
    const auto c = parse_case(case_flag);
    if (!c) throw hayd::InputError("build tensor needs --case");
    auto yd_doc = hayd::io::load_document(yd_file);
    auto ayd_doc = hayd::io::load_document(ayd_file);
    return std::visit(
        [&](const auto& n_doc, const auto& m_doc) -> int {
          using K = std::decay_t<decltype(n_doc.field)>;
          if constexpr (!std::is_same_v<K, std::decay_t<decltype(m_doc.field)>>) {
            throw hayd::InputError("--yd and --ayd documents are over different fields");
          } else {
            std::vector<hayd::SuiteItem> items;
            auto hn = verified_hopf(hopf_for(n_doc, hopf_flag), yd_file, items, false);
            auto hm = verified_hopf(hopf_for(m_doc, hopf_flag), ayd_file, items, false);
            if (!hn || !hm) return emit(std::move(items), out);
            auto n = two_sided(*hn, n_doc, yd_file, items);
            auto m = two_sided(*hm, m_doc, ayd_file, items);
            if (!n || !m) return emit(std::move(items), out);
            write_document(hayd::io::two_sided_json(hayd::tensor_product<K>(*n, *m, *c)), out);
            return kExitPass;
          }
        },
        yd_doc, ayd_doc);
  }
  throw hayd::InputError("build target must be ah, double, stable-ayd or tensor");
}

// ---------------------------------------------------------------------------
// suite

int cmd_suite(std::vector<std::string> builtins, const std::vector<std::string>& files, std::vector<std::string> checks,
              const Output& out) {
  if (builtins.empty() && files.empty()) builtins = {"all"};
  if (std::find(builtins.begin(), builtins.end(), "all") != builtins.end()) builtins = hayd::builtin_names();
  if (checks.empty()) checks = hayd::suite_check_names();
  for (const auto& c : checks)
    if (std::find(hayd::suite_check_names().begin(), hayd::suite_check_names().end(), c) == hayd::suite_check_names().end())
      throw hayd::InputError("unknown check '" + c + "'");
  // Resolve every target before running anything.
  std::vector<std::pair<std::string, hayd::AnyHopf>> targets;
  for (const auto& b : builtins) targets.emplace_back(b, hayd::make_builtin(b));
  for (const auto& f : files) targets.emplace_back(f, resolve_hopf(f));
  std::vector<hayd::SuiteItem> items;
  for (const auto& [name, h] : targets) {
    auto part = hayd::run_checks_any(h, name, checks);
    items.insert(items.end(), part.begin(), part.end());
  }
  return emit(std::move(items), out);
}

int cmd_list_builtins() {
  for (const auto& b : hayd::builtin_catalog()) std::cout << b.name << "\t" << b.description << "\n";
  std::cout << "(append @p to any name for the same algebra over F_p, e.g. sweedler@5)\n";
  return kExitPass;
}

int cmd_export(const std::string& name, const Output& out) {
  std::visit([&](const auto& h) { write_document(hayd::io::hopf_json(h), out); }, hayd::make_builtin(name));
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Hopf-algebraic structures given by structure constants"};
  app.require_subcommand(1);
  Output out;

  std::string file, hopf, module, case_flag, check_name, build_what, yd_file, ayd_file, export_name;
  std::vector<std::string> builtins, files, checks;

  auto* verify = app.add_subcommand("verify", "check the axioms of a document");
  verify->add_option("file", file, "JSON document")->required();
  verify->add_option("--hopf", hopf, "Hopf algebra (file or builtin:<name>) for module documents");

  auto* check = app.add_subcommand("check", "run one named check");
  check->add_option("name", check_name, "check name")->required();
  check->add_option("--hopf", hopf, "Hopf algebra (file or builtin:<name>)");
  check->add_option("--module", module, "two_sided, action, coaction or comodule_algebra document");
  check->add_option("--case", case_flag, "expected case: ll, lr, rl or rr");

  auto* build = app.add_subcommand("build", "construct a structure and print it as JSON");
  build->add_option("what", build_what, "ah, double, stable-ayd or tensor")->required();
  build->add_option("--hopf", hopf, "Hopf algebra (file or builtin:<name>)");
  build->add_option("--module", module, "comodule_algebra document for stable-ayd");
  build->add_option("--yd", yd_file, "Yetter-Drinfeld module for tensor");
  build->add_option("--ayd", ayd_file, "anti-Yetter-Drinfeld module for tensor");
  build->add_option("--case", case_flag, "ll, lr, rl or rr for tensor");
  build->add_option("-o,--output", out.path, "output file");

  auto* suite = app.add_subcommand("suite", "run the check battery on builtins and files");
  suite->add_option("--builtin", builtins, "builtin names or 'all'");
  suite->add_option("--file", files, "hopf documents");
  std::string check_help = "restrict to these checks:";
  for (const auto& c : hayd::suite_check_names()) check_help += " " + c;
  suite->add_option("--check", checks, check_help);

  auto* list = app.add_subcommand("list-builtins", "list builtin Hopf algebras");

  auto* exp = app.add_subcommand("export", "print a builtin Hopf algebra as JSON");
  exp->add_option("name", export_name, "builtin name")->required();
  exp->add_option("-o,--output", out.path, "output file");

  for (auto* sub : {verify, check, suite}) {
    sub->add_flag("--json", out.json_mode, "machine-readable report");
    sub->add_flag("!--no-timing", out.timing, "omit wall times");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*verify) return cmd_verify(file, hopf, out);
    if (*check) return cmd_check(check_name, hopf, module, case_flag, out);
    if (*build) return cmd_build(build_what, hopf, module, yd_file, ayd_file, case_flag, out);
    if (*suite) return cmd_suite(builtins, files, checks, out);
    if (*list) return cmd_list_builtins();
    if (*exp) return cmd_export(export_name, out);
  } catch (const hayd::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const hayd::VerificationError& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kExitFail;
  } catch (const hayd::DivisionByZero& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
