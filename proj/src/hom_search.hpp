#pragma once

// Backtracking search for presentation homomorphisms, shared by the serial
// and OpenMP hom counters.

#include <atomic>
#include <cstdlib>
#include <string>
#include <cstdint>
#include <vector>

#include "tcd/errors.hpp"
#include "tcd/group.hpp"

namespace tcd::kernels::detail {

class HomSearch {
 public:
  HomSearch(const FiniteGroup& g, std::size_t ngens, const std::vector<std::vector<int>>& relators,
            std::uint64_t budget, std::atomic<std::uint64_t>& visited)
      : g_(g), ngens_(ngens), relators_(relators), budget_(budget), visited_(visited) {}

  using Assignment = std::vector<int>;  // -1 = unassigned

  /// Forces single-unknown relators to a fixpoint. False on contradiction.
  bool propagate(Assignment& a) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& rel : relators_) {
        int unknown = -1;
        std::size_t unknown_count = 0;
        for (int letter : rel) {
          int gen = std::abs(letter) - 1;
          if (a[gen] >= 0) continue;
          if (unknown >= 0 && unknown != gen) {
            unknown_count = 2;  // two distinct unknowns
            break;
          }
          unknown = gen;
          ++unknown_count;
        }
        if (unknown_count == 0) {
          if (evaluate(a, rel, 0, rel.size()) != 0) return false;
          continue;
        }
        if (unknown_count != 1) continue;
        // rel = u x^s v with x the only unknown.
        std::size_t pos = 0;
        while (std::abs(rel[pos]) - 1 != unknown) ++pos;
        Elem u = evaluate(a, rel, 0, pos);
        Elem v = evaluate(a, rel, pos + 1, rel.size());
        Elem x = rel[pos] > 0 ? g_.mul(g_.inv(u), g_.inv(v)) : g_.mul(v, u);
        a[unknown] = x;
        changed = true;
      }
    }
    return true;
  }

  std::uint64_t count(Assignment a) const {
    tick();
    if (!propagate(a)) return 0;
    std::size_t next = first_unassigned(a);
    if (next == ngens_) return 1;
    std::uint64_t total = 0;
    for (std::size_t x = 0; x < g_.order(); ++x) {
      Assignment b = a;
      b[next] = static_cast<int>(x);
      total += count(std::move(b));
    }
    return total;
  }

  std::size_t first_unassigned(const Assignment& a) const {
    std::size_t i = 0;
    while (i < ngens_ && a[i] >= 0) ++i;
    return i;
  }

  void tick() const {
    if (visited_.fetch_add(1, std::memory_order_relaxed) + 1 > budget_)
      throw BudgetExceeded("homomorphism search exceeded budget of " + std::to_string(budget_) +
                           " nodes");
  }

  std::size_t ngens() const { return ngens_; }
  std::size_t group_order() const { return g_.order(); }

 private:
  Elem evaluate(const Assignment& a, const std::vector<int>& rel, std::size_t from,
                std::size_t to) const {
    Elem acc = 0;
    for (std::size_t k = from; k < to; ++k) {
      Elem x = static_cast<Elem>(a[std::abs(rel[k]) - 1]);
      acc = g_.mul(acc, rel[k] > 0 ? x : g_.inv(x));
    }
    return acc;
  }

  const FiniteGroup& g_;
  std::size_t ngens_;
  const std::vector<std::vector<int>>& relators_;
  std::uint64_t budget_;
  std::atomic<std::uint64_t>& visited_;
};

}  // namespace tcd::kernels::detail
