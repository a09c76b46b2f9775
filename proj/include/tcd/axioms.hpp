#pragma once

// Executable check of the braided and Frobenius laws in the relation model
// over a given group. Every law is an exact equality of relations.

#include <string>
#include <vector>

#include "tcd/group.hpp"

namespace tcd {

struct LawResult {
  std::string name;
  bool pass;
  std::string detail;
};

std::vector<LawResult> run_axioms(const GroupPtr& group);

}  // namespace tcd
