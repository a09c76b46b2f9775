#pragma once

// Permutations of {1..n}, stored 0-based as image arrays.
//
// Product convention: (p*q)(i) = p(q(i)), i.e. q acts first. Under this
// convention (1 2)(1 3) = (1 3 2).

#include <cstdint>
#include <string>
#include <vector>

namespace tcd {

using Permutation = std::vector<std::uint8_t>;

Permutation identity_permutation(int degree);

/// p*q with q applied first.
Permutation multiply(const Permutation& p, const Permutation& q);

Permutation inverse(const Permutation& p);

/// Cycle notation with 1-based points, fixed points omitted; "()" for the
/// identity. Cycles start at their smallest point and are ordered by it.
std::string cycle_string(const Permutation& p);

struct PermutationSyntax {
  /// Accept the two-digit shorthand "12" / "(12)" for single transpositions.
  bool compact_transpositions = false;
};

/// Parses "e", "()", "(1 2)", "(1 2 3)(4 5)". Disjoint cycles only.
/// Throws BadPermutation on points outside 1..degree, repeated points, or
/// malformed text.
Permutation parse_permutation(const std::string& text, int degree,
                              PermutationSyntax syntax = {});

}  // namespace tcd
