#include "tcd/bindings.hpp"

#include <json.hpp>

#include "tcd/errors.hpp"

namespace tcd {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Map the byte offset back to line/column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SyntaxError("malformed JSON", line, col);
  }
}

[[noreturn]] void schema(const std::string& what) { throw SyntaxError("bindings: " + what); }

const json& member(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) schema(where + " is missing \"" + key + "\"");
  return *it;
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) schema(where + " must be a string");
  return j.get<std::string>();
}

GroupPtr parse_group(const json& spec, PermutationSyntax syntax) {
  if (!spec.is_object()) schema("\"group\" must be an object");
  if (spec.contains("builtin")) return make_builtin_group(as_string(spec["builtin"], "group.builtin"));
  if (spec.contains("perm_degree")) {
    const json& deg = spec["perm_degree"];
    if (!deg.is_number_integer()) schema("group.perm_degree must be an integer");
    const json& gens = member(spec, "generators", "group");
    if (!gens.is_array()) schema("group.generators must be an array");
    std::vector<std::string> lits;
    for (const auto& g : gens) lits.push_back(as_string(g, "group generator"));
    return make_permutation_group(deg.get<int>(), lits, syntax);
  }
  if (spec.contains("table")) {
    const json& t = spec["table"];
    if (!t.is_array()) schema("group.table must be an array of rows");
    std::vector<std::vector<int>> rows;
    for (const auto& row : t) {
      if (!row.is_array()) schema("group.table rows must be arrays");
      std::vector<int> r;
      for (const auto& v : row) {
        if (!v.is_number_integer()) schema("group.table entries must be integers");
        r.push_back(v.get<int>());
      }
      rows.push_back(std::move(r));
    }
    return make_table_group(rows);
  }
  schema("group needs one of \"builtin\", \"perm_degree\", \"table\"");
}

CoordLiteral parse_coord(const json& c, const FiniteGroup& g, PermutationSyntax syntax) {
  if (c.is_string()) return {std::nullopt, g.parse_element(c.get<std::string>(), syntax)};
  if (c.is_array() && c.size() == 2 && c[0].is_string() && c[1].is_string())
    return {c[0].get<std::string>(), g.parse_element(c[1].get<std::string>(), syntax)};
  schema("coordinate must be an element literal or [symbol, literal]");
}

}  // namespace

TrelBindings parse_trel_bindings(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) schema("top level must be an object");

  PermutationSyntax syntax;
  if (doc.contains("compact_transpositions")) {
    if (!doc["compact_transpositions"].is_boolean()) schema("compact_transpositions must be a boolean");
    syntax.compact_transpositions = doc["compact_transpositions"].get<bool>();
  }

  TrelBindings b;
  b.group = parse_group(member(doc, "group", "bindings"), syntax);

  if (doc.contains("data")) {
    const json& data = doc["data"];
    if (!data.is_object()) schema("\"data\" must be an object");
    for (const auto& [wire, syms] : data.items()) {
      if (!syms.is_array() || syms.empty()) schema("data." + wire + " must be a non-empty array");
      std::vector<std::string> alphabet;
      for (const auto& s : syms) {
        std::string sym = as_string(s, "data symbol");
        for (const auto& prev : alphabet)
          if (prev == sym) schema("data." + wire + " repeats symbol '" + sym + "'");
        alphabet.push_back(sym);
      }
      b.data.emplace(wire, std::move(alphabet));
    }
  }

  const json& comps = member(doc, "components", "bindings");
  if (!comps.is_object()) schema("\"components\" must be an object");
  for (const auto& [name, spec] : comps.items()) {
    if (!spec.is_object() || spec.size() != 1)
      schema("component " + name + " needs exactly one of \"explicit\", \"conj_closure\"");
    RelationSpec rs;
    const json* tuples = nullptr;
    if (spec.contains("explicit")) {
      tuples = &spec["explicit"];
    } else if (spec.contains("conj_closure")) {
      rs.mode = RelationSpec::Mode::ConjClosure;
      tuples = &spec["conj_closure"];
    } else {
      schema("component " + name + " needs one of \"explicit\", \"conj_closure\"");
    }
    if (!tuples->is_array()) schema("component " + name + " tuples must be an array");
    for (const auto& t : *tuples) {
      if (!t.is_array()) schema("component " + name + " tuple must be an array");
      std::vector<CoordLiteral> row;
      for (const auto& c : t) row.push_back(parse_coord(c, *b.group, syntax));
      if (!rs.tuples.empty() && rs.tuples.front().size() != row.size())
        throw WidthMismatch("component " + name + ": tuple of width " + std::to_string(row.size()) +
                            " after tuples of width " + std::to_string(rs.tuples.front().size()));
      rs.tuples.push_back(std::move(row));
    }
    b.components.emplace(name, std::move(rs));
  }
  return b;
}

std::string kind_name(LinresKind k) {
  switch (k) {
    case LinresKind::Resistor: return "resistor";
    case LinresKind::Capacitor: return "capacitor";
    case LinresKind::Inductor: return "inductor";
  }
  return "?";
}

LinresBindings parse_linres_bindings(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) schema("top level must be an object");
  const json& comps = member(doc, "components", "bindings");
  if (!comps.is_object()) schema("\"components\" must be an object");
  LinresBindings b;
  for (const auto& [name, spec] : comps.items()) {
    if (!spec.is_object()) schema("component " + name + " must be an object");
    const std::string kind = as_string(member(spec, "kind", "component " + name), "kind");
    LinresKind k;
    const char* param;
    if (kind == "resistor") {
      k = LinresKind::Resistor;
      param = "ohms";
    } else if (kind == "capacitor") {
      k = LinresKind::Capacitor;
      param = "farads";
    } else if (kind == "inductor") {
      k = LinresKind::Inductor;
      param = "henries";
    } else {
      schema("component " + name + " has unknown kind '" + kind + "'");
    }
    const json& pv = member(spec, param, "component " + name);
    std::string lit;
    if (pv.is_string()) lit = pv.get<std::string>();
    else if (pv.is_number_integer()) lit = std::to_string(pv.get<long long>());
    else schema("component " + name + ": " + param + " must be a rational string");
    Rational value = parse_rational(lit);
    if (value <= 0)
      throw BadParam("component " + name + ": " + param + " must be positive, got " + lit);
    b.components.emplace(name, LinresComponent{k, value});
  }
  return b;
}

}  // namespace tcd
