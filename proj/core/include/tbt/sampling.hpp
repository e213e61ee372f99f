#pragma once

#include "tbt/element.hpp"

namespace tbt {

// Random generators for property suites.  Every draw comes from the supplied
// Rng, so a fixed seed reproduces the run exactly.

// Dyadic partition of C^S(m) grown from the trivial partition by `bricks - m`
// random single-color splits.
Partition random_dyadic_partition(const ActionPtr& a, int m, int bricks, Rng& rng);

// Forest C^S(corank) -> C^S(leaves) over a random domain partition, with a
// random leaf-to-cube assignment.
Element random_forest(const ActionPtr& a, int corank, int leaves, Rng& rng);

TwistedPermutation random_twisted_perm(const ActionPtr& a, int n, Rng& rng);

// f2^-1 t f1 for random forests f1: C^S(corank) -> C^S(leaves),
// f2: C^S(rank) -> C^S(leaves) and a random twisted permutation t.
Element random_element(const ActionPtr& a, int corank, int rank, int leaves, Rng& rng);

// Element of the group: corank = rank = 1, small random complexity.
Element random_group_element(const ActionPtr& a, Rng& rng);

// Same shape with every twist trivial.
Element random_untwisted_group_element(const ActionPtr& a, Rng& rng);

}  // namespace tbt
