#pragma once
// Partition overlaid patterns: a GT pattern together with one partition
// per position (i,j), 1 <= i <= j < n, confined to the NE_ij x SE_ij box.

#include <functional>
#include <map>
#include <utility>

#include "qwhit/boxed_partition.hpp"
#include "qwhit/gt_pattern.hpp"

namespace qwhit {

using OverlayKey = std::pair<int, int>;  // (i, j)
using OverlayMap = std::map<OverlayKey, BoxedPartition>;

class OverlaidPattern {
 public:
  // Requires an entry for every (i,j) with 1 <= i <= j < n whose box
  // dimensions equal (NE_ij, SE_ij) exactly.
  OverlaidPattern(GTPattern pattern, OverlayMap overlay);

  const GTPattern& pattern() const { return pattern_; }
  const OverlayMap& overlay() const { return overlay_; }
  long long overlay_size() const;  // |Lambda|

  bool operator==(const OverlaidPattern&) const = default;

 private:
  GTPattern pattern_;
  OverlayMap overlay_;
};

// Complement every overlay partition in its bounding box.
OverlaidPattern bcomp(const OverlaidPattern& p);
// Projection to the underlying pattern.
GTPattern pr(const OverlaidPattern& p);
// Delete the bottom pattern row and the overlays with j = n-1.
OverlaidPattern br(const OverlaidPattern& p);

// Every overlay compatible with T, positions iterated in (j,i) order with
// the last position varying fastest, partitions in a box in lexicographic
// order.
void for_each_overlay(const GTPattern& T,
                      const std::function<void(const OverlayMap&)>& fn);

}  // namespace qwhit
