#pragma once

// Hot loops of the evaluators. The functions in tcd::kernels use OpenMP;
// tcd::kernels::serial holds straightforward single-threaded versions that
// the tests and benchmarks compare against. Both return identical results.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tcd/group.hpp"

namespace tcd::kernels {

/// A set of fixed-width rows of 16-bit codes, stored row-major.
struct FlatRows {
  std::size_t width = 0;
  std::size_t rows = 0;
  std::vector<std::uint16_t> data;

  const std::uint16_t* row(std::size_t i) const { return data.data() + i * width; }
  bool operator==(const FlatRows&) const = default;
};

/// Sorts rows lexicographically and drops duplicates.
void sort_unique(FlatRows& r);

/// Relational composite. r has rows (x, y) with |x| = r_in, s has rows
/// (y, z) and must be sorted. Returns sorted rows (x, z).
FlatRows join(const FlatRows& r, std::size_t r_in, const FlatRows& s);

std::vector<GroupTuple> conjugacy_closure(const FiniteGroup& g,
                                          const std::vector<GroupTuple>& seeds);

/// Number of assignments of ngens generators into g satisfying every
/// relator. Relator letters are 1-based generator numbers, negative for
/// inverses. Throws BudgetExceeded once more than budget search nodes
/// are visited.
std::uint64_t hom_count(const FiniteGroup& g, std::size_t ngens,
                        const std::vector<std::vector<int>>& relators, std::uint64_t budget);

namespace serial {

/// Nested-loop join without an index.
FlatRows join(const FlatRows& r, std::size_t r_in, const FlatRows& s);

/// Worklist orbit closure.
std::vector<GroupTuple> conjugacy_closure(const FiniteGroup& g,
                                          const std::vector<GroupTuple>& seeds);

std::uint64_t hom_count(const FiniteGroup& g, std::size_t ngens,
                        const std::vector<std::vector<int>>& relators, std::uint64_t budget);

}  // namespace serial
}  // namespace tcd::kernels
