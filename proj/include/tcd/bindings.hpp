#pragma once

// Binding files: JSON documents assigning semantics to the components of a
// program, kept separate so one program can be evaluated many ways.
//
// trel:
//   {"group": {"builtin": "S3"} | {"perm_degree": 3, "generators": ["(1 2)", …]}
//             | {"table": [[0,1],[1,0]]},
//    "data": {"X": ["a", "b"]},                        (optional)
//    "compact_transpositions": false,                 (optional)
//    "components": {"R": {"explicit": [[c, …], …]} | {"conj_closure": [[c, …], …]}}}
// where each coordinate c is an element literal, or [symbol, literal] for
// wires with a data alphabet.
//
// linres:
//   {"components": {"r1": {"kind": "resistor", "ohms": "2"},
//                   "c1": {"kind": "capacitor", "farads": "1/2"},
//                   "l1": {"kind": "inductor", "henries": "3"}}}

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tcd/group.hpp"
#include "tcd/rational.hpp"

namespace tcd {

struct CoordLiteral {
  std::optional<std::string> symbol;
  Elem element = 0;
};

struct RelationSpec {
  enum class Mode { Explicit, ConjClosure };
  Mode mode = Mode::Explicit;
  std::vector<std::vector<CoordLiteral>> tuples;
};

struct TrelBindings {
  GroupPtr group;
  std::map<std::string, std::vector<std::string>> data;
  std::map<std::string, RelationSpec> components;
};

enum class LinresKind { Resistor, Capacitor, Inductor };

struct LinresComponent {
  LinresKind kind;
  Rational value;
};

struct LinresBindings {
  std::map<std::string, LinresComponent> components;
};

/// Throws SyntaxError (malformed JSON or schema), BadPermutation,
/// WidthMismatch (tuples of one component of different widths), plus the
/// group construction errors.
TrelBindings parse_trel_bindings(const std::string& text);

/// Throws SyntaxError or BadParam.
LinresBindings parse_linres_bindings(const std::string& text);

std::string kind_name(LinresKind k);

}  // namespace tcd
