#pragma once

// Random closed tangles on one wire type: a row of cups, a sequence of
// crossings and cup/cap pairs at random positions, then a row of caps.

#include <algorithm>
#include <random>

#include "tcd/diagram.hpp"

namespace tcd::test {

inline Term padded(const Term& t, std::size_t before, std::size_t after) {
  std::vector<Term> parts;
  if (before) parts.push_back(Term::id(Word(before, "X")));
  parts.push_back(t);
  if (after) parts.push_back(Term::id(Word(after, "X")));
  return Term::tensor_all(parts);
}

inline Term row_of(Term (*leaf)(std::string), std::size_t n) {
  std::vector<Term> parts(n, leaf("X"));
  return Term::tensor_all(parts);
}

inline Term random_tangle(std::mt19937& rng, std::size_t max_crossings = 8, std::size_t max_width = 8) {
  std::uniform_int_distribution<std::size_t> pairs_d(1, std::min<std::size_t>(3, max_width / 2));
  std::uniform_int_distribution<std::size_t> crossings_d(0, max_crossings);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> die(0, 5);

  std::size_t width = 2 * pairs_d(rng);
  std::vector<Term> steps{row_of(&Term::cup, width / 2)};
  const std::size_t crossings = crossings_d(rng);
  std::size_t made = 0;
  while (made < crossings) {
    const int roll = die(rng);
    if (roll == 0 && width + 2 <= max_width) {
      std::uniform_int_distribution<std::size_t> at(0, width);
      const std::size_t p = at(rng);
      steps.push_back(padded(Term::cup("X"), p, width - p));
      width += 2;
    } else if (roll == 1 && width > 2) {
      std::uniform_int_distribution<std::size_t> at(0, width - 2);
      const std::size_t p = at(rng);
      steps.push_back(padded(Term::cap("X"), p, width - p - 2));
      width -= 2;
    } else {
      std::uniform_int_distribution<std::size_t> at(0, width - 2);
      const std::size_t p = at(rng);
      Term x = coin(rng) ? Term::braid({"X"}, {"X"}) : Term::braid_inv({"X"}, {"X"});
      steps.push_back(padded(x, p, width - p - 2));
      ++made;
    }
  }
  steps.push_back(row_of(&Term::cap, width / 2));
  return Term::compose_all(steps);
}

}  // namespace tcd::test
