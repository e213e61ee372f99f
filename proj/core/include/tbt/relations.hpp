#pragma once

#include <cstdint>

#include "tbt/element.hpp"

namespace tbt {

struct RelationResult {
  std::string name;
  int trials = 0;
  int failures = 0;
};

// The eight groupoid relations among permutations, twists, direct sums and
// simple splits, each checked on `trials` random instantiations.  The run is
// fully determined by (action, trials, seed).
std::vector<RelationResult> run_relation_suite(const ActionPtr& a, int trials,
                                               std::uint64_t seed);

}  // namespace tbt
