#include <doctest.h>

#include <numeric>
#include <random>

#include "wscs/wlcs.hpp"

using namespace wscs;

TEST_CASE("reduction construction on the worked instance") {
  ReductionInstance inst = construct_reduction({3, 7, 11, 15, 21}, 25, 3);
  CHECK(inst.n() == 5);
  CHECK(inst.w1.length() == 25);
  CHECK(inst.w2.length() == 25);
  CHECK(inst.z().log2z_quanta() == (int64_t{1} << kDefaultScaleBits));

  int64_t expected_s[] = {3, 7, 11, 15, 21};
  for (int i = 1; i <= 5; ++i) {
    CHECK(inst.w1_letter_a(i) == LogProb::from_log2_rational(-expected_s[i - 1], 25));
    CHECK(inst.w2_letter_a(i) ==
          LogProb::from_log2_rational(expected_s[i - 1] - 25, 25 * 2));
  }
  // frozen reference: round(-3*2^40/25) computed independently
  CHECK(inst.w1_letter_a(1).quanta() == -131941395333);

  // every position off the grid is a certain 'b'
  for (int pos = 0; pos < 25; ++pos) {
    if ((pos + 1) % 5 == 0) {
      CHECK_FALSE(inst.w1.prob(pos, 0).is_impossible());
      CHECK(inst.w1.prob(pos, 1) < LogProb::one());
    } else {
      CHECK(inst.w1.prob(pos, 0).is_impossible());
      CHECK(inst.w1.prob(pos, 1) == LogProb::one());
    }
  }
}

TEST_CASE("construction validation") {
  CHECK_THROWS_AS(construct_reduction({3, 7}, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(construct_reduction({3, 25}, 25, 2), std::invalid_argument);  // element == t
  CHECK_THROWS_AS(construct_reduction({3, 7}, 25, 5), std::invalid_argument);   // p > n
  CHECK_THROWS_AS(construct_reduction({3, 7}, 25, 1), std::invalid_argument);
  CHECK_THROWS_AS(construct_reduction({-3, 7}, 25, 2), std::invalid_argument);
  // targets beyond the exact-quantization bound are rejected
  CHECK_THROWS_AS(construct_reduction({3, 7}, int64_t{1} << 20, 2), std::invalid_argument);
  // elements above the target are dropped
  CHECK(construct_reduction({3, 7, 40}, 25, 2).n() == 2);
}

TEST_CASE("letter-a probabilities lie strictly between 1/2 and 1") {
  std::mt19937_64 rng(606);
  for (int round = 0; round < 100; ++round) {
    int64_t t = 5 + static_cast<int64_t>(rng() % 800);
    int n = 2 + static_cast<int>(rng() % 4);
    std::vector<int64_t> s;
    for (int k = 0; k < n; ++k) s.push_back(1 + static_cast<int64_t>(rng() % (t - 1)));
    int p = 2 + static_cast<int>(rng() % (n - 1));
    ReductionInstance inst = construct_reduction(s, t, p);
    for (int i = 1; i <= n; ++i) {
      for (LogProb a : {inst.w1_letter_a(i), inst.w2_letter_a(i)}) {
        CHECK(a.quanta() < 0);
        CHECK(a.quanta() > -(int64_t{1} << kDefaultScaleBits));
      }
    }
  }
}

TEST_CASE("product inequalities match the integer inequalities within the margin") {
  std::mt19937_64 rng(707);
  for (int round = 0; round < 400; ++round) {
    int64_t t = 5 + static_cast<int64_t>(rng() % 400);
    int n = 2 + static_cast<int>(rng() % 4);
    std::vector<int64_t> s;
    for (int k = 0; k < n; ++k) s.push_back(1 + static_cast<int64_t>(rng() % (t - 1)));
    int p = 2 + static_cast<int>(rng() % (n - 1));
    ReductionInstance inst = construct_reduction(s, t, p);
    int64_t zlog = inst.z().log2z_quanta();
    int64_t margin = inst.rounding_margin();

    uint32_t mask = static_cast<uint32_t>(rng()) & ((uint32_t{1} << n) - 1);
    int64_t sum = 0;
    int size = 0;
    int64_t q1 = 0, q2 = 0;
    for (int i = 0; i < n; ++i) {
      if (!(mask >> i & 1)) continue;
      sum += s[static_cast<size_t>(i)];
      ++size;
      q1 += inst.w1_letter_a(i + 1).quanta();
      q2 += inst.w2_letter_a(i + 1).quanta();
    }
    CHECK((q1 >= -zlog - margin) == (sum <= t));
    CHECK((q2 >= -zlog - margin) == (sum >= t * (1 - p + size)));
  }
}

TEST_CASE("structured solver reproduces the worked instance") {
  ReductionInstance inst = construct_reduction({3, 7, 11, 15, 21}, 25, 3);
  StructuredWlcs sol = wlcs_structured_solve(inst);
  CHECK(sol.length == 23);  // n(n-1) + p
  CHECK(sol.subset_indices == std::vector<int>{1, 2, 4});
  CHECK(sol.subset_values == std::vector<int64_t>{3, 7, 15});
}

TEST_CASE("structured solver basics") {
  // the empty subset keeps the b-grid: length at least n(n-1)
  ReductionInstance hard = construct_reduction({2, 4}, 5, 2);
  StructuredWlcs sol = wlcs_structured_solve(hard);
  CHECK(sol.length >= 2);

  ReductionInstance tiny = construct_reduction({1, 2}, 3, 2);
  StructuredWlcs both = wlcs_structured_solve(tiny);
  CHECK(both.length == 4);  // 2*1 + 2
  CHECK(both.subset_values == std::vector<int64_t>{1, 2});
}

TEST_CASE("generic brute agrees with the structured solver on tiny reductions") {
  std::mt19937_64 rng(808);
  for (int round = 0; round < 60; ++round) {
    int64_t t = 3 + static_cast<int64_t>(rng() % 30);
    std::vector<int64_t> s = {1 + static_cast<int64_t>(rng() % (t - 1)),
                              1 + static_cast<int64_t>(rng() % (t - 1))};
    ReductionInstance inst = construct_reduction(s, t, 2);
    StructuredWlcs structured = wlcs_structured_solve(inst);
    WlcsBruteResult brute =
        wlcs_brute_generic(inst.w1, inst.w2, inst.z(), inst.rounding_margin());
    CHECK(brute.length == structured.length);
  }
}

TEST_CASE("generic brute basics") {
  WeightedString det = WeightedString::parse_json(
      R"({"alphabet":["a","b"],"rows":[[0.0,1.0],[1.0,0.0],[1.0,0.0]]})");
  WlcsBruteResult r = wlcs_brute_generic(det, det, Threshold::parse("1"));
  CHECK(r.length == 3);
  CHECK(r.witness == "baa");

  WeightedString only_a = WeightedString::parse_json(R"({"alphabet":["a","b"],"rows":[[1.0,0.0]]})");
  WeightedString only_b = WeightedString::parse_json(R"({"alphabet":["a","b"],"rows":[[0.0,1.0]]})");
  CHECK(wlcs_brute_generic(only_a, only_b, Threshold::parse("1")).length == 0);

  WeightedString big = WeightedString::parse_json(
      R"({"alphabet":["a"],"rows":[[1.0],[1.0],[1.0],[1.0],[1.0],[1.0],[1.0]]})");
  CHECK_THROWS_AS(wlcs_brute_generic(big, big, Threshold::parse("1")), std::invalid_argument);
}

TEST_CASE("subset sum brute force") {
  auto hit = subset_sum_brute({3, 7, 11, 15, 21}, 25);
  REQUIRE(hit.has_value());
  CHECK(*hit == std::vector<int64_t>{3, 7, 15});
  CHECK(std::accumulate(hit->begin(), hit->end(), int64_t{0}) == 25);

  auto zero = subset_sum_brute({2, 4}, 0);
  REQUIRE(zero.has_value());
  CHECK(zero->empty());

  CHECK_FALSE(subset_sum_brute({2, 4}, 5).has_value());
}

TEST_CASE("verify_reduction on fixed instances") {
  ReductionReport pos = verify_reduction({3, 7, 11, 15, 21}, 25);
  CHECK(pos.subset_sum_solvable);
  CHECK(pos.equivalence_holds);
  REQUIRE(pos.witness_p.has_value());
  CHECK(*pos.witness_p == 3);
  CHECK(pos.per_p.size() == 4);

  ReductionReport neg = verify_reduction({2, 4}, 5);
  CHECK_FALSE(neg.subset_sum_solvable);
  CHECK_FALSE(neg.witness_p.has_value());
  CHECK(neg.equivalence_holds);

  ReductionReport ones = verify_reduction({1, 1, 1}, 2);
  CHECK(ones.subset_sum_solvable);
  REQUIRE(ones.witness_p.has_value());
  CHECK(*ones.witness_p == 2);
  CHECK(ones.equivalence_holds);
}

TEST_CASE("verify_reduction holds on random instances") {
  std::mt19937_64 rng(909);
  int positive = 0, negative = 0;
  for (int round = 0; round < 120; ++round) {
    int64_t t = 5 + static_cast<int64_t>(rng() % 46);
    int n = 2 + static_cast<int>(rng() % 4);
    std::vector<int64_t> s;
    if (round % 2 == 0) {
      // plant a solution: split t into n parts, then keep a random subset of
      // the parts plus noise
      int parts = 2 + static_cast<int>(rng() % (n - 1));
      std::vector<int64_t> cuts = {0, t};
      for (int k = 1; k < parts; ++k) cuts.push_back(1 + static_cast<int64_t>(rng() % (t - 1)));
      std::sort(cuts.begin(), cuts.end());
      for (size_t k = 1; k < cuts.size(); ++k)
        if (cuts[k] > cuts[k - 1]) s.push_back(cuts[k] - cuts[k - 1]);
      while (static_cast<int>(s.size()) < n) s.push_back(1 + static_cast<int64_t>(rng() % (t - 1)));
    } else {
      for (int k = 0; k < n; ++k) s.push_back(1 + static_cast<int64_t>(rng() % (t - 1)));
    }
    bool equal_t = false;
    for (int64_t v : s) equal_t |= v == t;
    if (equal_t) continue;

    ReductionReport rep = verify_reduction(s, t);
    REQUIRE(rep.equivalence_holds);
    (rep.subset_sum_solvable ? positive : negative)++;
  }
  CHECK(positive > 10);
  CHECK(negative > 10);
}
