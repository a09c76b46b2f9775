#pragma once

// Tangles as cospans of group presentations. A cospan carries one boundary
// word per wire on each side; composing glues matching boundary words by
// adding relators (a pushout of presentations).

#include <cstdint>
#include <string>
#include <vector>

#include "tcd/diagram.hpp"
#include "tcd/group.hpp"

namespace tcd {

/// Letters are 1-based generator numbers, negative for inverses.
using GroupWord = std::vector<int>;

struct Presentation {
  std::vector<std::string> generators;
  std::vector<GroupWord> relators;

  bool operator==(const Presentation&) const = default;
};

struct PresentationCospan {
  Presentation presentation;
  std::vector<GroupWord> left;
  std::vector<GroupWord> right;
};

enum class CospanKind { Id, Cup, Cap, BraidPos, BraidNeg, Mul, Comul, Unit, Counit };

PresentationCospan structure_cospan(CospanKind kind);

PresentationCospan compose_cospans(const PresentationCospan& a, const PresentationCospan& b);
PresentationCospan tensor_cospans(const PresentationCospan& a, const PresentationCospan& b);

/// Cospan image of a structure-only term. Throws HasComponents.
PresentationCospan eval_cospan(const Term& term);

/// Knot group presentation of a closed tangle, generators named a, b, …,
/// z, a1, b1, … in creation order. Throws NotClosed or HasComponents.
Presentation eval_presentation(const Term& term);

GroupWord free_reduce(const GroupWord& w);
/// Free reduction followed by cancelling inverse letters at the two ends.
GroupWord cyclic_reduce(const GroupWord& w);
GroupWord inverse_word(const GroupWord& w);

/// True when b is a cyclic rotation of a or of a's inverse.
bool cyclically_equivalent(const GroupWord& a, const GroupWord& b);

/// Tietze simplification: reduce relators, drop trivial and repeated ones,
/// and eliminate the lowest-numbered generator that occurs exactly once in
/// some relator, until nothing changes or max_passes eliminations.
Presentation tietze_simplify(const Presentation& p, std::size_t max_passes = 1000);

inline constexpr std::uint64_t kDefaultHomBudget = 50'000'000;

/// Homomorphisms into g, by backtracking with relator propagation.
/// Throws BudgetExceeded.
std::uint64_t hom_count(const Presentation& p, const FiniteGroup& g,
                        std::uint64_t budget = kDefaultHomBudget);

/// "a e A" style word text; capitals are inverses.
std::string word_string(const Presentation& p, const GroupWord& w);
/// "⟨ a, b | a b A B ⟩".
std::string render(const Presentation& p);

/// Parses the render format; also accepts "<" and ">" for the brackets.
Presentation parse_presentation(const std::string& text);

std::string generator_name(std::size_t index);

}  // namespace tcd
