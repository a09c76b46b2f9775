#pragma once

// Spans of finite sets between powers of G, up to isomorphism.
//
// An isomorphism class of spans G^l ← S → G^r is determined by the fiber
// sizes |S_(x,y)|, so a span is stored as a multiset of (x, y) pairs.
// Composition by pullback multiplies fiber counts like a matrix product
// over the natural numbers; the coloring count of a closed tangle is the
// apex size of its I → I span.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tcd/diagram.hpp"
#include "tcd/group.hpp"
#include "tcd/kernels.hpp"

namespace tcd {

struct FiniteSpan {
  std::size_t left_width = 0;
  std::size_t right_width = 0;
  /// Distinct (left, right) pairs, sorted.
  kernels::FlatRows pairs;
  /// Fiber size of each pair, all positive.
  std::vector<std::uint64_t> counts;

  std::uint64_t apex_size() const;
  bool operator==(const FiniteSpan&) const = default;
};

/// Span from (left, right, count) entries; merges repeats.
FiniteSpan make_span(std::size_t left_width, std::size_t right_width,
                     const std::vector<std::pair<GroupTuple, std::uint64_t>>& entries);

FiniteSpan compose_spans(const FiniteSpan& s, const FiniteSpan& t);
FiniteSpan tensor_spans(const FiniteSpan& s, const FiniteSpan& t);

/// Span image of a structure-only term. Throws HasComponents.
FiniteSpan eval_span(const Term& term, const FiniteGroup& g);

/// Checks diagonal conjugation invariance of the fiber counts and the
/// center condition on every pair; returns a description of the first
/// failure.
std::optional<std::string> validate_span(const FiniteSpan& s, const FiniteGroup& g);

/// Apex size of the span image. Throws NotClosed or HasComponents.
std::uint64_t eval_colorings(const Term& term, const FiniteGroup& g);

/// A tangle flattened into wire segments and the equations each leaf
/// imposes on them.
struct SegmentModel {
  enum class Kind { Inverse, Product, Identity, Twist, TwistInverse };
  /// Inverse: a·b = e. Product: c = a·b. Identity: a = e.
  /// Twist: (c, d) = (a b a^-1, a). TwistInverse: (a, b) = (c d c^-1, c).
  struct Constraint {
    Kind kind;
    std::size_t a = 0, b = 0, c = 0, d = 0;
  };
  std::size_t segments = 0;
  std::vector<Constraint> constraints;
};

/// Segments are numbered in creation order, scanning the term from the
/// top of each tensor and the start of each composite. Throws NotClosed
/// or HasComponents.
SegmentModel segment_model(const Term& term);

/// Every assignment of group elements to segments satisfying all
/// constraints, by backtracking over segments in order.
std::vector<GroupTuple> enumerate_colorings(const Term& term, const FiniteGroup& g);

std::uint64_t brute_force_colorings(const Term& term, const FiniteGroup& g);

}  // namespace tcd
