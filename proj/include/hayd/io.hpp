#pragma once

// JSON interchange format.
//
// Every document is an object with "kind" and "field":
//   field: {"kind": "rationals"} | {"kind": "prime", "p": 7}
// Tensors are lists of sparse entries {"i": .., "j": .., "k": .., "l": .., "c": ..}
// with one index key per axis in that order; "c" is a string ("3/2") over
// the rationals and an integer in [0, p) over F_p.  Entries are nonzero and
// unique.
//
//   hopf:             dim, basis_names?, mult, unit, comult, counit, antipode
//   algebra:          dim, basis_names?, mult, unit
//   action:           dim, hopf_dim, side, entries
//   coaction:         dim, hopf_dim, side, entries
//   two_sided:        dim, hopf_dim, action {side, entries}, coaction {side, entries}
//   comodule_algebra: dim, hopf_dim, basis_names?, mult, unit, coaction {entries}
// Documents other than hopf may carry "hopf": an embedded hopf document or a
// reference string ("builtin:<name>" or a file path).

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "hayd/double.hpp"

namespace hayd::io {

using json = nlohmann::json;

struct Violation {
  std::string pointer;
  std::string message;
};

/// Schema violations, each located by a JSON pointer.
class SchemaError : public InputError {
 public:
  explicit SchemaError(std::vector<Violation> v) : InputError(render(v)), violations_(std::move(v)) {}
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  static std::string render(const std::vector<Violation>& v) {
    std::string s = "schema violation";
    for (const auto& x : v) s += "\n  " + (x.pointer.empty() ? std::string("/") : x.pointer) + ": " + x.message;
    return s;
  }
  std::vector<Violation> violations_;
};

/// Malformed JSON text.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : InputError("JSON parse error at line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

/// Largest accepted dimension: HAYD_MAX_DIM, default 64.
inline std::size_t max_dim() {
  if (const char* s = std::getenv("HAYD_MAX_DIM")) {
    try {
      const long v = std::stol(s);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::logic_error&) {
    }
    throw InputError(std::string("HAYD_MAX_DIM must be a positive integer, got '") + s + "'");
  }
  return 64;
}

inline json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    if (auto p = what.find(": "); p != std::string::npos) what = what.substr(p + 2);
    throw ParseError(line, col, what);
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------------------
// Validation

class Validator {
 public:
  void fail(const std::string& pointer, const std::string& message) { violations_.push_back({pointer, message}); }
  bool ok() const { return violations_.empty(); }
  void throw_if_failed() const {
    if (!ok()) throw SchemaError(violations_);
  }

  const json* member(const json& obj, const std::string& ptr, const char* key, bool required = true) {
    if (!obj.is_object()) {
      fail(ptr, "expected an object");
      return nullptr;
    }
    auto it = obj.find(key);
    if (it == obj.end()) {
      if (required) fail(ptr + "/" + key, "missing required member");
      return nullptr;
    }
    return &*it;
  }

  std::optional<std::size_t> dimension(const json& obj, const std::string& ptr, const char* key) {
    const json* v = member(obj, ptr, key);
    if (!v) return std::nullopt;
    if (!v->is_number_unsigned() || v->get<std::uint64_t>() == 0) {
      fail(ptr + "/" + key, "expected a positive integer");
      return std::nullopt;
    }
    const auto d = v->get<std::uint64_t>();
    if (d > max_dim()) {
      fail(ptr + "/" + key, "dimension " + std::to_string(d) + " exceeds HAYD_MAX_DIM = " + std::to_string(max_dim()));
      return std::nullopt;
    }
    return static_cast<std::size_t>(d);
  }

  std::optional<Side> side(const json& obj, const std::string& ptr) {
    const json* v = member(obj, ptr, "side");
    if (!v) return std::nullopt;
    if (*v == "left") return Side::left;
    if (*v == "right") return Side::right;
    fail(ptr + "/side", "expected \"left\" or \"right\"");
    return std::nullopt;
  }

 private:
  std::vector<Violation> violations_;
};

inline std::optional<FieldSpec> parse_field(const json& doc, Validator& v) {
  const json* f = v.member(doc, "", "field");
  if (!f) return std::nullopt;
  const json* kind = v.member(*f, "/field", "kind");
  if (!kind) return std::nullopt;
  if (*kind == "rationals") return FieldSpec{RationalField{}};
  if (*kind == "prime") {
    const json* p = v.member(*f, "/field", "p");
    if (!p) return std::nullopt;
    if (!p->is_number_unsigned() || !is_prime(p->get<std::uint64_t>()) || p->get<std::uint64_t>() >= (1u << 31)) {
      v.fail("/field/p", "characteristic must be a prime below 2^31");
      return std::nullopt;
    }
    return FieldSpec{PrimeField(static_cast<std::uint32_t>(p->get<std::uint64_t>()))};
  }
  v.fail("/field/kind", "expected \"rationals\" or \"prime\"");
  return std::nullopt;
}

inline constexpr const char* kAxisKeys[] = {"i", "j", "k", "l"};

template <class K>
std::optional<typename K::value_type> parse_scalar(const K& f, const json& c, const std::string& ptr, Validator& v) {
  if constexpr (std::is_same_v<K, RationalField>) {
    if (!c.is_string()) {
      v.fail(ptr, "rational coefficients are strings such as \"3/2\"");
      return std::nullopt;
    }
    try {
      return f.parse(c.get<std::string>());
    } catch (const InputError& e) {
      v.fail(ptr, e.what());
      return std::nullopt;
    }
  } else {
    if (!c.is_number_unsigned() || c.get<std::uint64_t>() >= f.characteristic()) {
      v.fail(ptr, "prime-field coefficients are integers in [0, " + std::to_string(f.characteristic()) + ")");
      return std::nullopt;
    }
    return f.from_int(static_cast<long long>(c.get<std::uint64_t>()));
  }
}

template <class K>
std::optional<Tensor<K>> parse_tensor(const K& f, const json& obj, const std::string& ptr, const char* key, const Shape& shape,
                                      Validator& v) {
  const json* list = v.member(obj, ptr, key);
  if (!list) return std::nullopt;
  const std::string lp = ptr + "/" + key;
  if (!list->is_array()) {
    v.fail(lp, "expected an array of entries");
    return std::nullopt;
  }
  std::vector<Entry<K>> entries;
  bool good = true;
  for (std::size_t e = 0; e < list->size(); ++e) {
    const json& item = (*list)[e];
    const std::string ep = lp + "/" + std::to_string(e);
    if (!item.is_object()) {
      v.fail(ep, "expected an entry object");
      good = false;
      continue;
    }
    Index idx(shape.size());
    bool entry_ok = true;
    for (std::size_t ax = 0; ax < shape.size(); ++ax) {
      auto it = item.find(kAxisKeys[ax]);
      if (it == item.end()) {
        v.fail(ep + "/" + kAxisKeys[ax], "missing index");
        entry_ok = false;
      } else if (!it->is_number_unsigned() || it->get<std::uint64_t>() >= shape[ax]) {
        v.fail(ep + "/" + kAxisKeys[ax], "index out of range [0, " + std::to_string(shape[ax]) + ")");
        entry_ok = false;
      } else {
        idx[ax] = it->get<std::size_t>();
      }
    }
    for (auto it = item.begin(); it != item.end(); ++it) {
      bool known = it.key() == "c";
      for (std::size_t ax = 0; ax < shape.size(); ++ax) known = known || it.key() == kAxisKeys[ax];
      if (!known) {
        v.fail(ep + "/" + it.key(), "unexpected member");
        entry_ok = false;
      }
    }
    auto c = item.find("c");
    std::optional<typename K::value_type> value;
    if (c == item.end()) {
      v.fail(ep + "/c", "missing coefficient");
      entry_ok = false;
    } else if ((value = parse_scalar(f, *c, ep + "/c", v))) {
      if (f.is_zero(*value)) {
        v.fail(ep + "/c", "zero coefficients are not stored");
        entry_ok = false;
      }
    } else {
      entry_ok = false;
    }
    if (!entry_ok) {
      good = false;
      continue;
    }
    entries.push_back({ravel(shape, idx), *value});
  }
  if (!good) return std::nullopt;
  std::vector<std::size_t> order(entries.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return entries[a].index < entries[b].index; });
  SparseVec<K> sorted;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto& e = entries[order[k]];
    if (!sorted.empty() && sorted.back().index == e.index) {
      v.fail(lp + "/" + std::to_string(order[k]), "duplicate index " + format_index(unravel(shape, e.index)));
      good = false;
      continue;
    }
    sorted.push_back(e);
  }
  if (!good) return std::nullopt;
  return Tensor<K>(f, shape, std::move(sorted));
}

inline std::optional<std::vector<std::string>> parse_names(const json& obj, const std::string& ptr, std::size_t dim, Validator& v) {
  const json* names = v.member(obj, ptr, "basis_names", false);
  if (!names) return std::vector<std::string>{};
  if (!names->is_array() || names->size() != dim) {
    v.fail(ptr + "/basis_names", "expected an array of " + std::to_string(dim) + " strings");
    return std::nullopt;
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < names->size(); ++i) {
    if (!(*names)[i].is_string()) {
      v.fail(ptr + "/basis_names/" + std::to_string(i), "expected a string");
      return std::nullopt;
    }
    out.push_back((*names)[i].get<std::string>());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Typed documents

enum class DocKind { hopf, algebra, action, coaction, two_sided, comodule_algebra };

inline const char* kind_name(DocKind k) {
  switch (k) {
    case DocKind::hopf: return "hopf";
    case DocKind::algebra: return "algebra";
    case DocKind::action: return "action";
    case DocKind::coaction: return "coaction";
    case DocKind::two_sided: return "two_sided";
    case DocKind::comodule_algebra: return "comodule_algebra";
  }
  return "?";
}

inline std::optional<DocKind> kind_from_name(const std::string& s) {
  for (auto k : {DocKind::hopf, DocKind::algebra, DocKind::action, DocKind::coaction, DocKind::two_sided, DocKind::comodule_algebra})
    if (s == kind_name(k)) return k;
  return std::nullopt;
}

/// A parsed, schema-valid document.  Structures are shape-checked only;
/// axioms are checked by the caller.
template <class K>
struct Document {
  DocKind kind;
  K field;
  std::optional<FinHopfAlgebra<K>> hopf;
  std::optional<std::string> hopf_ref;
  std::size_t hopf_dim = 0;
  std::optional<FinAlgebra<K>> algebra;
  std::optional<ActionStructure<K>> action;
  std::optional<CoactionStructure<K>> coaction;
};

using AnyDocument = std::variant<Document<RationalField>, Document<PrimeField>>;

namespace detail {

template <class K>
std::optional<FinHopfAlgebra<K>> parse_hopf_body(const K& f, const json& doc, const std::string& ptr, Validator& v) {
  auto n = v.dimension(doc, ptr, "dim");
  if (!n) return std::nullopt;
  auto names = parse_names(doc, ptr, *n, v);
  auto mult = parse_tensor(f, doc, ptr, "mult", {*n, *n, *n}, v);
  auto unit = parse_tensor(f, doc, ptr, "unit", {*n}, v);
  auto comult = parse_tensor(f, doc, ptr, "comult", {*n, *n, *n}, v);
  auto counit = parse_tensor(f, doc, ptr, "counit", {*n}, v);
  auto antipode = parse_tensor(f, doc, ptr, "antipode", {*n, *n}, v);
  if (!names || !mult || !unit || !comult || !counit || !antipode) return std::nullopt;
  return FinHopfAlgebra<K>(f, *mult, *unit, *comult, *counit, *antipode, *names);
}

template <class K>
std::optional<FinAlgebra<K>> parse_algebra_body(const K& f, const json& doc, Validator& v, std::size_t n) {
  auto names = parse_names(doc, "", n, v);
  auto mult = parse_tensor(f, doc, "", "mult", {n, n, n}, v);
  auto unit = parse_tensor(f, doc, "", "unit", {n}, v);
  if (!names || !mult || !unit) return std::nullopt;
  return FinAlgebra<K>(f, *mult, *unit, *names);
}

template <class K>
std::optional<ActionStructure<K>> parse_action(const K& f, const json& obj, const std::string& ptr, const char* key, std::size_t m,
                                               std::size_t n, Validator& v, std::optional<Side> fixed = std::nullopt) {
  auto side = fixed ? fixed : v.side(obj, ptr);
  auto t = parse_tensor(f, obj, ptr, key, {n, m, m}, v);
  if (!side || !t) return std::nullopt;
  return ActionStructure<K>(*side, m, *t);
}

template <class K>
std::optional<CoactionStructure<K>> parse_coaction(const K& f, const json& obj, const std::string& ptr, const char* key,
                                                   std::size_t m, std::size_t n, Validator& v,
                                                   std::optional<Side> fixed = std::nullopt) {
  auto side = fixed ? fixed : v.side(obj, ptr);
  if (!side) return std::nullopt;
  auto t = parse_tensor(f, obj, ptr, key, *side == Side::left ? Shape{m, n, m} : Shape{m, m, n}, v);
  if (!t) return std::nullopt;
  return CoactionStructure<K>(*side, m, *t);
}

template <class K>
Document<K> parse_typed(const json& doc, DocKind kind, const K& f, Validator& v) {
  Document<K> out{kind, f, std::nullopt, std::nullopt, 0, std::nullopt, std::nullopt, std::nullopt};
  if (kind == DocKind::hopf) {
    out.hopf = parse_hopf_body(f, doc, "", v);
    if (out.hopf) out.hopf_dim = out.hopf->dim();
    return out;
  }
  if (const json* h = v.member(doc, "", "hopf", false)) {
    if (h->is_string()) {
      out.hopf_ref = h->get<std::string>();
    } else if (h->is_object()) {
      const json* hk = v.member(*h, "/hopf", "kind");
      if (hk && *hk != "hopf") v.fail("/hopf/kind", "embedded document must have kind \"hopf\"");
      out.hopf = parse_hopf_body(f, *h, "/hopf", v);
    } else {
      v.fail("/hopf", "expected a hopf document or a reference string");
    }
  }
  auto m = v.dimension(doc, "", "dim");
  if (kind == DocKind::algebra) {
    if (m) out.algebra = parse_algebra_body(f, doc, v, *m);
    return out;
  }
  auto n = v.dimension(doc, "", "hopf_dim");
  if (n && out.hopf && out.hopf->dim() != *n) v.fail("/hopf_dim", "does not match the embedded hopf document");
  if (!m || !n) return out;
  out.hopf_dim = *n;
  switch (kind) {
    case DocKind::action: out.action = parse_action(f, doc, "", "entries", *m, *n, v); break;
    case DocKind::coaction: out.coaction = parse_coaction(f, doc, "", "entries", *m, *n, v); break;
    case DocKind::two_sided: {
      if (const json* a = v.member(doc, "", "action")) out.action = parse_action(f, *a, "/action", "entries", *m, *n, v);
      if (const json* c = v.member(doc, "", "coaction")) out.coaction = parse_coaction(f, *c, "/coaction", "entries", *m, *n, v);
      break;
    }
    case DocKind::comodule_algebra: {
      out.algebra = parse_algebra_body(f, doc, v, *m);
      if (const json* c = v.member(doc, "", "coaction"))
        out.coaction = parse_coaction(f, *c, "/coaction", "entries", *m, *n, v, Side::right);
      break;
    }
    default: break;
  }
  return out;
}

}  // namespace detail

inline AnyDocument parse_document(const json& doc) {
  Validator v;
  if (!doc.is_object()) {
    v.fail("", "document must be an object");
    v.throw_if_failed();
  }
  std::optional<DocKind> kind;
  if (const json* k = v.member(doc, "", "kind")) {
    if (k->is_string()) kind = kind_from_name(k->get<std::string>());
    if (!kind) v.fail("/kind", "expected one of hopf, algebra, action, coaction, two_sided, comodule_algebra");
  }
  auto field = parse_field(doc, v);
  if (!kind || !field) v.throw_if_failed();
  AnyDocument out = std::visit([&](const auto& f) -> AnyDocument { return detail::parse_typed(doc, *kind, f, v); }, *field);
  v.throw_if_failed();
  return out;
}

inline AnyDocument parse_document_text(const std::string& text) { return parse_document(parse_json_text(text)); }

inline AnyDocument load_document(const std::string& path) { return parse_document_text(read_file(path)); }

// ---------------------------------------------------------------------------
// Serialization

template <class K>
json scalar_json(const K& f, const typename K::value_type& c) {
  if constexpr (std::is_same_v<K, RationalField>)
    return f.to_string(c);
  else
    return c.v;
}

template <class K>
json field_json(const K& f) {
  if constexpr (std::is_same_v<K, RationalField>)
    return json{{"kind", "rationals"}};
  else
    return json{{"kind", "prime"}, {"p", f.characteristic()}};
}

template <class K>
json tensor_json(const Tensor<K>& t) {
  json out = json::array();
  for (const auto& e : t.entries()) {
    json item = json::object();
    const Index idx = unravel(t.shape(), e.index);
    for (std::size_t ax = 0; ax < idx.size(); ++ax) item[kAxisKeys[ax]] = idx[ax];
    item["c"] = scalar_json(t.field(), e.value);
    out.push_back(std::move(item));
  }
  return out;
}

template <class K>
json hopf_json(const FinHopfAlgebra<K>& h) {
  return json{{"kind", "hopf"},
              {"field", field_json(h.field())},
              {"dim", h.dim()},
              {"basis_names", h.basis_names()},
              {"mult", tensor_json(h.mult())},
              {"unit", tensor_json(h.unit())},
              {"comult", tensor_json(h.comult())},
              {"counit", tensor_json(h.counit())},
              {"antipode", tensor_json(h.antipode())}};
}

template <class K>
json algebra_json(const FinAlgebra<K>& a) {
  return json{{"kind", "algebra"},
              {"field", field_json(a.field())},
              {"dim", a.dim()},
              {"basis_names", a.basis_names()},
              {"mult", tensor_json(a.mult())},
              {"unit", tensor_json(a.unit())}};
}

template <class K>
json action_json(const ActionStructure<K>& a) {
  return json{{"kind", "action"}, {"field", field_json(a.tensor().field())}, {"dim", a.dim()},
              {"hopf_dim", a.hopf_dim()}, {"side", side_name(a.side())}, {"entries", tensor_json(a.tensor())}};
}

template <class K>
json coaction_json(const CoactionStructure<K>& c) {
  return json{{"kind", "coaction"}, {"field", field_json(c.tensor().field())}, {"dim", c.dim()},
              {"hopf_dim", c.hopf_dim()}, {"side", side_name(c.side())}, {"entries", tensor_json(c.tensor())}};
}

template <class K>
json two_sided_json(const TwoSidedStructure<K>& m, bool embed_hopf = true) {
  json out{{"kind", "two_sided"},
           {"field", field_json(m.hopf().field())},
           {"dim", m.dim()},
           {"hopf_dim", m.hopf().dim()},
           {"action", {{"side", side_name(m.action().side())}, {"entries", tensor_json(m.action().tensor())}}},
           {"coaction", {{"side", side_name(m.coaction().side())}, {"entries", tensor_json(m.coaction().tensor())}}}};
  if (embed_hopf) out["hopf"] = hopf_json(m.hopf());
  return out;
}

template <class K>
json comodule_algebra_json(const ComoduleAlgebra<K>& p, bool embed_hopf = true) {
  json out{{"kind", "comodule_algebra"},
           {"field", field_json(p.algebra().field())},
           {"dim", p.dim()},
           {"hopf_dim", p.hopf().dim()},
           {"basis_names", p.algebra().basis_names()},
           {"mult", tensor_json(p.algebra().mult())},
           {"unit", tensor_json(p.algebra().unit())},
           {"coaction", {{"side", "right"}, {"entries", tensor_json(p.coaction().tensor())}}}};
  if (embed_hopf) out["hopf"] = hopf_json(p.hopf());
  return out;
}

/// Document back to JSON; inverse of parse_document on valid input.
template <class K>
json document_json(const Document<K>& d) {
  json out;
  switch (d.kind) {
    case DocKind::hopf: return hopf_json(*d.hopf);
    case DocKind::algebra: return algebra_json(*d.algebra);
    case DocKind::action: out = action_json(*d.action); break;
    case DocKind::coaction: out = coaction_json(*d.coaction); break;
    case DocKind::two_sided:
      out = json{{"kind", "two_sided"},
                 {"field", field_json(d.field)},
                 {"dim", d.action->dim()},
                 {"hopf_dim", d.hopf_dim},
                 {"action", {{"side", side_name(d.action->side())}, {"entries", tensor_json(d.action->tensor())}}},
                 {"coaction", {{"side", side_name(d.coaction->side())}, {"entries", tensor_json(d.coaction->tensor())}}}};
      break;
    case DocKind::comodule_algebra: {
      const auto& a = *d.algebra;
      out = json{{"kind", "comodule_algebra"},
                 {"field", field_json(d.field)},
                 {"dim", a.dim()},
                 {"hopf_dim", d.hopf_dim},
                 {"basis_names", a.basis_names()},
                 {"mult", tensor_json(a.mult())},
                 {"unit", tensor_json(a.unit())},
                 {"coaction", {{"side", "right"}, {"entries", tensor_json(d.coaction->tensor())}}}};
      break;
    }
  }
  if (d.hopf) out["hopf"] = hopf_json(*d.hopf);
  if (d.hopf_ref) out["hopf"] = *d.hopf_ref;
  return out;
}

inline json any_document_json(const AnyDocument& d) {
  return std::visit([](const auto& x) { return document_json(x); }, d);
}

/// Text form used for export: two-space indentation, trailing newline.
inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

template <class K>
json report_json(const Report<K>& r) {
  json out{{"passed", r.passed}, {"axiom", r.axiom}};
  if (r.witness) out["witness"] = *r.witness;
  if (r.lhs) out["lhs"] = tensor_json(*r.lhs);
  if (r.rhs) out["rhs"] = tensor_json(*r.rhs);
  if (!r.detail.empty()) out["detail"] = r.detail;
  return out;
}

}  // namespace hayd::io
