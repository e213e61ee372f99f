#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tbt/color.hpp"

namespace tbt {

// Eventual translation of n rays: outside the exceptional set, (r,k) maps to
// (r, k + offsets[r-1]).  Canonical form stores no entry that agrees with the
// default rule, so structural equality is group equality.  Offsets sum to 0.
struct HoughtonElem {
  std::vector<std::int64_t> offsets;
  std::vector<std::pair<RayPoint, RayPoint>> except;  // sorted by source

  friend bool operator==(const HoughtonElem&, const HoughtonElem&) = default;
};

}  // namespace tbt
