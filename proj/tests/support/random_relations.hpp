#pragma once

// Random members of Tr_G for property tests: a few seed tuples whose input
// and output products agree modulo the center (found by rejection
// sampling), closed under diagonal conjugation.

#include <random>

#include "tcd/group.hpp"
#include "tcd/trel.hpp"

namespace tcd::test {

inline GroupTuple random_tuple(const FiniteGroup& g, std::size_t width, std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(g.order()) - 1);
  GroupTuple t(width);
  for (auto& x : t) x = static_cast<Elem>(pick(rng));
  return t;
}

inline bool center_condition(const FiniteGroup& g, const GroupTuple& t, std::size_t in_width) {
  const Elem in = g.product(t.data(), in_width);
  const Elem out = g.product(t.data() + in_width, t.size() - in_width);
  return g.is_central(g.mul(in, g.inv(out)));
}

inline GRelation random_relation(const GroupPtr& g, std::size_t in_width, std::size_t out_width,
                                 std::mt19937& rng, std::size_t max_seeds = 3) {
  std::uniform_int_distribution<std::size_t> count(1, max_seeds);
  const std::size_t n = count(rng);
  std::vector<GroupTuple> seeds;
  while (seeds.size() < n) {
    GroupTuple t = random_tuple(*g, in_width + out_width, rng);
    if (center_condition(*g, t, in_width)) seeds.push_back(std::move(t));
  }
  GRelation r = GRelation::plain(g, in_width, out_width, conjugacy_closure(*g, seeds));
  r.mark_validated();
  return r;
}

}  // namespace tcd::test
