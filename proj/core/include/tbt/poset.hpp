#pragma once

#include "tbt/element.hpp"

namespace tbt {

// Expansion order on cosets of the twisted permutations: [v] <= [w] iff
// w v^-1 factors as a twisted permutation followed by a forest.
bool coset_leq(const Element& v, const Element& w);

// v <= w with the connecting forest elementary.
bool is_elementary_interval(const Element& v, const Element& w);

// Least upper bound of two forest cosets: the forest of the common
// refinement of the two domain partitions.
Element forest_join(const Element& f1, const Element& f2);

// Maximum elementary coset in the interval (v, w].  Requires v < w.
Element elementary_core(const Element& v, const Element& w);

// mu[k-1] = number of domain cubes of f carrying exactly k leaves.
std::vector<int> weight_multiplicities(const Element& f, int kmax);

// True iff a stabilizes the coset [h], i.e. h a h^-1 is a twisted
// permutation.
bool stabilizes_coset(const Element& a, const Element& h);

}  // namespace tbt
