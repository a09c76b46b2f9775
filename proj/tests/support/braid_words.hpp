#pragma once

// Braid words on three strands: letter ±1 is the (inverse) crossing of
// strands 1,2 and ±2 of strands 2,3.

#include <algorithm>
#include <array>
#include <cstdlib>
#include <random>

#include "tcd/trel.hpp"

namespace tcd::test {

using BraidWord = std::vector<int>;

inline GRelation word_relation(const GroupPtr& g, const BraidWord& w) {
  GRelation acc = identity_relation(g, 3);
  const GRelation id1 = identity_relation(g, 1);
  for (int letter : w) {
    const GRelation x = braid_relation(g, 1, 1, letter > 0 ? +1 : -1);
    acc = compose_relations(acc, std::abs(letter) == 1 ? tensor_relations(x, id1) : tensor_relations(id1, x));
  }
  return acc;
}

inline std::array<int, 3> permutation_of(const BraidWord& w) {
  std::array<int, 3> p{0, 1, 2};
  for (int letter : w) {
    const int k = std::abs(letter) - 1;
    std::swap(p[k], p[k + 1]);
  }
  return p;
}

inline BraidWord random_word(std::mt19937& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> letter(0, 3);
  BraidWord w(len(rng));
  for (auto& x : w) {
    const int r = letter(rng);
    x = (r % 2 ? 1 : -1) * (r / 2 + 1);
  }
  return w;
}

// A random word with the same underlying permutation as w: a random prefix
// followed by crossings of random sign that sort it into place.
inline BraidWord same_permutation(const BraidWord& w, std::mt19937& rng) {
  BraidWord v = random_word(rng, 6);
  std::uniform_int_distribution<int> sign(0, 1);
  const auto target = permutation_of(w);
  const auto pos = [&](int s) { return std::find(target.begin(), target.end(), s) - target.begin(); };
  for (;;) {
    const auto p = permutation_of(v);
    if (p == target) return v;
    for (int k = 0; k < 2; ++k)
      if (pos(p[k]) > pos(p[k + 1])) {
        v.push_back((sign(rng) ? 1 : -1) * (k + 1));
        break;
      }
  }
}

}  // namespace tcd::test
