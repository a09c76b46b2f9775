#pragma once

// The .tcd program language.
//
//   program := decl*
//   decl    := "wire" IDENT
//            | "comp" IDENT ":" word "->" word
//            | "diagram" IDENT "=" expr
//   word    := "I" | IDENT ("," IDENT)*
//   expr    := term (";" term)*          composition, first factor first
//   term    := factor ("*" factor)*      tensor, top wire first
//   factor  := IDENT | builtin | "(" expr ")"
//   builtin := "id(" word ")" | "braid(" word ";" word ")"
//            | "unbraid(" word ";" word ")"
//            | ("mul"|"comul"|"unit"|"counit"|"cup"|"cap") "(" IDENT ")"
//
// "--" starts a comment running to the end of the line. `f ; g` is g∘f in
// applicative notation. braid(A; B) is the twist τ_{A,B} with the strands of
// A passing over; unbraid(A; B) has the same interface A,B -> B,A with the
// crossing reversed, i.e. it is the inverse of braid(B; A).

#include <string>
#include <utility>
#include <vector>

#include "tcd/diagram.hpp"

namespace tcd {

struct Program {
  Multigraph multigraph;
  /// In declaration order.
  std::vector<std::pair<std::string, Term>> diagrams;

  const Term* find(const std::string& name) const;
};

/// Parses and typechecks every diagram. Throws SyntaxError, UnknownName,
/// InterfaceMismatch; messages carry line:column.
Program parse_program(const std::string& text);

/// Expression text that parses back to the same term.
std::string print_term(const Term& term);

/// Whole-program text: wires, components, diagrams.
std::string print_program(const Program& p);

}  // namespace tcd
