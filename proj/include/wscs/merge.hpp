#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wscs/log_prob.hpp"

namespace wscs {

/// One 2-D point of the Merge problem. The tag is an opaque caller payload
/// (solvers stash a state index there); merge itself never reads it.
struct MergePoint {
  LogProb x;
  LogProb y;
  int32_t tag = -1;
};

/// Points sorted strictly increasing by x with no dominated pair left, so y
/// is strictly decreasing. Build through prune_irrelevant.
struct MergeSet {
  std::vector<MergePoint> points;
};

/// Removes every pair dominated by another one (x' >= x and y' >= y) in a
/// single backward scan. Input must be sorted by x (ties allowed); the
/// decision outcome of merge_decision is unchanged.
MergeSet prune_irrelevant(const std::vector<MergePoint>& sorted_by_x);

struct MergeWitness {
  MergePoint a;
  MergePoint b;
};

/// Do points (x1,y1) in A and (x2,y2) in B exist with x1*x2 >= w and
/// y1*y2 >= w? Two-pointer scan over the pruned sets, O(|A|+|B|); returns
/// a witness pair when the answer is positive.
std::optional<MergeWitness> merge_decision(const MergeSet& a, const MergeSet& b, LogProb w);

}  // namespace wscs
