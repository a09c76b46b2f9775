#pragma once

// Tangled circuit diagrams: multigraphs of wire types and components, and
// the term language of the free braided strict monoidal category over them
// with a commutative Frobenius structure on every wire type.
//
// Composition is stored in diagram order: compose(f, g) means "f, then g",
// which reads left to right like the wire pictures. The applicative
// expression g∘f of the algebraic notation is compose(f, g) here.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tcd {

/// A word of wire types; the empty word is the unit object I.
using Word = std::vector<std::string>;

std::string to_string(const Word& w);

struct Interface {
  Word dom;
  Word cod;

  bool operator==(const Interface&) const = default;
};

struct ComponentDecl {
  std::string name;
  Word dom;
  Word cod;
};

class Multigraph {
 public:
  void add_wire(const std::string& name);
  void add_component(const std::string& name, Word dom, Word cod);

  bool has_wire(const std::string& name) const;
  const ComponentDecl* find_component(const std::string& name) const;

  const std::vector<std::string>& wires() const { return wires_; }
  const std::vector<ComponentDecl>& components() const { return components_; }

  /// Throws UnknownName for an entry that is not a declared wire.
  void check_word(const Word& w) const;

 private:
  std::vector<std::string> wires_;
  std::vector<ComponentDecl> components_;
};

enum class TermKind {
  Gen,
  Id,
  Compose,
  Tensor,
  Braid,
  BraidInv,
  Mul,
  Comul,
  Unit,
  Counit,
  Cup,
  Cap,
};

/// Immutable, cheaply copyable diagram term.
///
/// Braid(A, B) and BraidInv(A, B) both have interface A·B → B·A.
/// Braid is the twist τ_{A,B}; BraidInv(A, B) is the inverse of τ_{B,A},
/// i.e. the same strands crossing the other way.
class Term {
 public:
  static Term gen(std::string name);
  static Term id(Word w);
  static Term compose(Term first, Term second);
  static Term tensor(Term left, Term right);
  static Term braid(Word a, Word b);
  static Term braid_inv(Word a, Word b);
  static Term mul(std::string wire);
  static Term comul(std::string wire);
  static Term unit(std::string wire);
  static Term counit(std::string wire);
  static Term cup(std::string wire);
  static Term cap(std::string wire);

  /// Left-nested composite of a non-empty list.
  static Term compose_all(const std::vector<Term>& terms);
  /// Left-nested tensor of a non-empty list.
  static Term tensor_all(const std::vector<Term>& terms);

  TermKind kind() const;
  /// Component name for Gen, wire name for the Frobenius leaves.
  const std::string& name() const;
  /// Id's word, or the first word of a braid.
  const Word& word() const;
  /// Second word of a braid.
  const Word& word2() const;
  /// Operands of Compose (first, second) and Tensor (left, right).
  const Term& lhs() const;
  const Term& rhs() const;

  bool is_leaf() const;

  /// Exact AST equality (no reassociation).
  bool operator==(const Term& other) const;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Term make(TermKind kind, std::string name, Word w1, Word w2, std::vector<Term> kids);
  std::shared_ptr<const Node> node_;
};

/// Computes dom/cod. Throws UnknownName or InterfaceMismatch.
Interface typecheck(const Term& term, const Multigraph& mg);

/// Eliminates cup/cap and multi-wire braids. Interface-preserving and
/// idempotent.
Term desugar(const Term& term);

/// Gen occurrence counts by component name.
std::map<std::string, std::size_t> generator_census(const Term& term);

/// Reassociates Compose and Tensor chains to left-nested form and drops
/// Id(I) tensor factors; structural comparisons go through this.
Term normalize(const Term& term);

bool structurally_equal(const Term& a, const Term& b);

/// True when the term has no Gen leaves.
bool is_structure_only(const Term& term);

/// Interface without a multigraph, for structure-only terms.
Interface structural_interface(const Term& term);

}  // namespace tcd
