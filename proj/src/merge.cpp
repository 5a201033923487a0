#include "wscs/merge.hpp"

#include <stdexcept>

namespace wscs {

MergeSet prune_irrelevant(const std::vector<MergePoint>& sorted_by_x) {
  for (size_t k = 1; k < sorted_by_x.size(); ++k)
    if (sorted_by_x[k].x < sorted_by_x[k - 1].x)
      throw std::invalid_argument("merge points must be sorted by x");

  // Equal-x runs collapse to their maximal y; the rest of the run is
  // dominated regardless of scan direction.
  std::vector<MergePoint> collapsed;
  for (const MergePoint& p : sorted_by_x) {
    if (!collapsed.empty() && collapsed.back().x == p.x) {
      if (p.y > collapsed.back().y) collapsed.back() = p;
    } else {
      collapsed.push_back(p);
    }
  }

  MergeSet out;
  LogProb best_y = LogProb::impossible();
  bool have_y = false;
  for (size_t k = collapsed.size(); k-- > 0;) {
    const MergePoint& p = collapsed[k];
    if (have_y && p.y <= best_y) continue;  // dominated by a point to the right
    out.points.push_back(p);
    best_y = p.y;
    have_y = true;
  }
  std::reverse(out.points.begin(), out.points.end());
  return out;
}

std::optional<MergeWitness> merge_decision(const MergeSet& a, const MergeSet& b, LogProb w) {
  if (a.points.empty() || b.points.empty()) return std::nullopt;
  // For each point of A in increasing x, the smallest index of B whose x
  // still satisfies x1*x2 >= w only moves left; its y is maximal among the
  // qualifying suffix because pruned sets have strictly decreasing y.
  size_t j = b.points.size();  // first qualifying index, b.size() = none yet
  for (const MergePoint& pa : a.points) {
    if (pa.x.is_impossible()) continue;
    while (j > 0 && !(pa.x * b.points[j - 1].x < w)) --j;
    if (j == b.points.size()) continue;  // even the largest x2 is too small
    const MergePoint& pb = b.points[j];
    if (!(pa.y * pb.y < w)) return MergeWitness{pa, pb};
  }
  return std::nullopt;
}

}  // namespace wscs
