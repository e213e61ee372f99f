#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tbt/brick.hpp"

namespace tbt {

// Finite list of bricks intended to partition C^S(m).  Construction only
// checks that cube indices land in 1..m; whether the bricks actually tile the
// space is the job of is_partition, so candidate partitions can be queried.
class Partition {
 public:
  Partition(int m, std::vector<Brick> bricks);

  int ambient() const { return m_; }
  const std::vector<Brick>& bricks() const { return bricks_; }
  std::size_t size() const { return bricks_.size(); }

  // Bricks in canonical order: cube index, then colors, then words.
  Partition sorted() const;

  static Partition trivial(int m);

  friend bool operator==(const Partition&, const Partition&) = default;
  std::string str() const;

 private:
  int m_;
  std::vector<Brick> bricks_;
};

// Pairwise disjointness plus coverage of every cube 1..m.  Coverage recurses
// by halving along colors the bricks disagree on; depth is bounded by the
// longest stored word per color.
bool is_partition(const Partition& p);

// Residue of greedy sibling merging: repeatedly replace two bricks that differ
// only in the last bit of one color's word by their union, until stuck.  The
// seed shuffles merge order; the residue does not depend on it (tests check).
std::vector<Brick> merge_residue(const Partition& p, std::uint64_t seed = 0);

// True iff the partition is reachable from the trivial partition by very
// elementary expansions, i.e. the merge residue is the trivial partition.
// Pre: is_partition(p).
bool is_dyadic_partition(const Partition& p);

// A dyadic partition refining p, built by recursive halving.  When p is
// already dyadic this returns p itself up to brick order.  No minimality
// claim is made for non-dyadic input.  Pre: is_partition(p).
Partition refine_to_dyadic(const Partition& p);

// All nonempty pairwise intersections.  Refines both inputs; the least common
// refinement when both are partitions.  Dyadic inputs give a dyadic result.
Partition common_refinement(const Partition& p, const Partition& q);

// True iff every brick of q lies inside some brick of p.
bool refines(const Partition& q, const Partition& p);

// Partition of (cube of b) minus b into bricks, peeling one address bit at a
// time along each constrained color.  Empty when b is a whole cube.
std::vector<Brick> complement_bricks(const Brick& b);

}  // namespace tbt
