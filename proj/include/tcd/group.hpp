#pragma once

// Finite groups as dense multiplication tables.
//
// Elements are indices 0..order-1 with 0 the identity. Permutation groups
// list their elements in breadth-first order from the generators (right
// multiplication), so element numbering is deterministic.
// Conjugation follows g^h = h g h^-1.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tcd/permutation.hpp"

namespace tcd {

using Elem = std::uint16_t;
using GroupTuple = std::vector<Elem>;

inline constexpr std::size_t kDefaultClosureCap = 10080;

class FiniteGroup {
 public:
  std::size_t order() const { return order_; }
  Elem identity() const { return 0; }
  Elem mul(Elem a, Elem b) const { return table_[a * order_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  /// a^h = h a h^-1.
  Elem conj(Elem a, Elem h) const { return mul(mul(h, a), inv_[h]); }
  bool is_central(Elem a) const { return central_[a]; }
  const std::vector<Elem>& center() const { return center_; }
  const std::string& name(Elem a) const { return names_[a]; }
  const std::vector<Elem>& table() const { return table_; }

  /// Product of all entries, left to right.
  Elem product(const Elem* first, std::size_t n) const;

  /// 0 for groups given by a table.
  int degree() const { return degree_; }
  bool is_permutation_group() const { return degree_ > 0; }
  const Permutation& permutation(Elem a) const { return perms_.at(a); }

  /// Resolves an element literal: cycle notation for permutation groups,
  /// element names "0".."n-1" for table groups; "e" is always the identity.
  /// Throws BadPermutation if the text is malformed or names no element.
  Elem parse_element(const std::string& text, PermutationSyntax syntax = {}) const;

  /// Full multiplication table as nested rows, for round-trip checks.
  std::vector<std::vector<int>> table_rows() const;

  bool operator==(const FiniteGroup& other) const { return table_ == other.table_; }

 private:
  friend std::shared_ptr<const FiniteGroup> make_table_group(
      const std::vector<std::vector<int>>& table);
  friend std::shared_ptr<const FiniteGroup> make_permutation_group(
      int degree, const std::vector<Permutation>& generators, std::size_t cap);

  void finish();

  std::size_t order_ = 0;
  int degree_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inv_;
  std::vector<bool> central_;
  std::vector<Elem> center_;
  std::vector<std::string> names_;
  std::vector<Permutation> perms_;
  std::unordered_map<std::string, Elem> by_name_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Validates all group laws exhaustively; relabels so the identity is 0.
/// Throws NotAGroup with a witness.
GroupPtr make_table_group(const std::vector<std::vector<int>>& table);

/// Breadth-first closure of the generators. Throws ClosureTooLarge past cap.
GroupPtr make_permutation_group(int degree, const std::vector<Permutation>& generators,
                                std::size_t cap = kDefaultClosureCap);

GroupPtr make_permutation_group(int degree, const std::vector<std::string>& generators,
                                PermutationSyntax syntax = {},
                                std::size_t cap = kDefaultClosureCap);

/// C2..C12, S2..S5, D3 (same table as S3), D4. Throws UnknownGroup.
GroupPtr make_builtin_group(const std::string& name);

std::vector<std::string> builtin_group_names();

/// Smallest superset of seeds closed under simultaneous conjugation of all
/// coordinates. Sorted lexicographically, deduplicated.
std::vector<GroupTuple> conjugacy_closure(const FiniteGroup& g,
                                          const std::vector<GroupTuple>& seeds);

/// Orbit of one tuple under diagonal conjugation, sorted.
std::vector<GroupTuple> conjugacy_orbit(const FiniteGroup& g, const GroupTuple& t);

std::string tuple_string(const FiniteGroup& g, const GroupTuple& t);

}  // namespace tcd
