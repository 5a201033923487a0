#include <doctest.h>

#include <algorithm>
#include <random>

#include "wscs/merge.hpp"

using namespace wscs;

namespace {

LogProb q(double p) { return LogProb::from_probability(p); }

// Quadratic reference over the raw, unpruned pairs.
std::optional<MergeWitness> merge_brute(const std::vector<MergePoint>& a,
                                        const std::vector<MergePoint>& b, LogProb w) {
  for (const MergePoint& pa : a)
    for (const MergePoint& pb : b)
      if (!(pa.x * pb.x < w) && !(pa.y * pb.y < w)) return MergeWitness{pa, pb};
  return std::nullopt;
}

std::vector<MergePoint> random_points(std::mt19937_64& rng, size_t count) {
  std::vector<MergePoint> pts;
  for (size_t k = 0; k < count; ++k) {
    // a coarse grid of quanta provokes plenty of ties and boundary hits
    int64_t x = -static_cast<int64_t>(rng() % 32) * 1000;
    int64_t y = -static_cast<int64_t>(rng() % 32) * 1000;
    pts.push_back({LogProb::from_quanta(x), LogProb::from_quanta(y), static_cast<int32_t>(k)});
  }
  std::sort(pts.begin(), pts.end(),
            [](const MergePoint& p, const MergePoint& r) { return p.x < r.x; });
  return pts;
}

}  // namespace

TEST_CASE("pruning removes dominated pairs") {
  MergeSet s = prune_irrelevant({{q(0.4), q(0.8)}, {q(0.5), q(0.9)}});
  REQUIRE(s.points.size() == 1);
  CHECK(s.points[0].x == q(0.5));
  CHECK(s.points[0].y == q(0.9));

  MergeSet both = prune_irrelevant({{q(0.4), q(0.9)}, {q(0.5), q(0.8)}});
  CHECK(both.points.size() == 2);

  CHECK(prune_irrelevant({}).points.empty());

  CHECK_THROWS_AS(prune_irrelevant({{q(0.5), q(0.5)}, {q(0.4), q(0.5)}}),
                  std::invalid_argument);
}

TEST_CASE("pruned sets have increasing x and decreasing y") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 200; ++round) {
    MergeSet s = prune_irrelevant(random_points(rng, rng() % 40));
    for (size_t k = 1; k < s.points.size(); ++k) {
      CHECK(s.points[k - 1].x < s.points[k].x);
      CHECK(s.points[k - 1].y > s.points[k].y);
    }
  }
}

TEST_CASE("merge decision examples") {
  // 0.5*0.8 = 0.4 and 0.8*0.5 = 0.4 sit exactly on the threshold
  MergeSet a = prune_irrelevant({{q(0.5), q(0.8)}});
  MergeSet b = prune_irrelevant({{q(0.8), q(0.5)}});
  CHECK(merge_decision(a, b, q(0.4)).has_value());

  MergeSet ones = prune_irrelevant({{q(1.0), q(1.0)}});
  CHECK(merge_decision(ones, ones, q(1.0)).has_value());

  MergeSet halves = prune_irrelevant({{q(0.5), q(0.5)}});
  CHECK_FALSE(merge_decision(halves, halves, q(0.5)).has_value());

  CHECK_FALSE(merge_decision(MergeSet{}, ones, q(0.5)).has_value());
}

TEST_CASE("merge decision agrees with the quadratic reference") {
  std::mt19937_64 rng(123);
  for (int round = 0; round < 3000; ++round) {
    auto raw_a = random_points(rng, rng() % 24);
    auto raw_b = random_points(rng, rng() % 24);
    LogProb w = LogProb::from_quanta(-static_cast<int64_t>(rng() % 64) * 1000);
    MergeSet a = prune_irrelevant(raw_a);
    MergeSet b = prune_irrelevant(raw_b);

    auto fast = merge_decision(a, b, w);
    auto slow = merge_brute(raw_a, raw_b, w);
    REQUIRE(fast.has_value() == slow.has_value());
    if (fast) {
      // the returned witness must satisfy both constraints itself
      CHECK_FALSE(fast->a.x * fast->b.x < w);
      CHECK_FALSE(fast->a.y * fast->b.y < w);
    }
  }
}

TEST_CASE("success is monotone in the threshold") {
  std::mt19937_64 rng(321);
  for (int round = 0; round < 500; ++round) {
    MergeSet a = prune_irrelevant(random_points(rng, 1 + rng() % 16));
    MergeSet b = prune_irrelevant(random_points(rng, 1 + rng() % 16));
    int64_t wq = -static_cast<int64_t>(rng() % 64) * 1000;
    if (merge_decision(a, b, LogProb::from_quanta(wq))) {
      CHECK(merge_decision(a, b, LogProb::from_quanta(wq - 1)).has_value());
      CHECK(merge_decision(a, b, LogProb::from_quanta(wq - 5000)).has_value());
    } else {
      CHECK_FALSE(merge_decision(a, b, LogProb::from_quanta(wq + 1)).has_value());
    }
  }
}
