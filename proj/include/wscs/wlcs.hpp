#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wscs/log_prob.hpp"
#include "wscs/weighted_string.hpp"

namespace wscs {

/// A Subset Sum instance together with its derived WLCS instance: two
/// weighted strings over {a,b} of length n^2 with z = 2. Row i*n of w1
/// carries 'a' with probability 2^(-s_i/t), row i*n of w2 carries 'a' with
/// probability 2^((s_i/t - 1)/(p-1)); every other row is a certain 'b'.
/// The 'a' quanta are exact: round(-s_i*2^F/t) and the w2 counterpart.
struct ReductionInstance {
  std::vector<int64_t> s_values;  // elements, all strictly below target
  int64_t target = 0;
  int p = 2;
  int scale_bits = kDefaultScaleBits;
  WeightedString w1;
  WeightedString w2;

  int n() const { return static_cast<int>(s_values.size()); }
  Threshold z() const { return Threshold::from_rational(2, 1, scale_bits); }
  // Quanta sums of a subset differ from the exact rationals by at most half
  // a quantum per element; threshold tests tolerate this margin, which stays
  // far below the 2^F/(t(p-1)) separation between distinct subset sums.
  int64_t rounding_margin() const { return (n() + 1) / 2; }

  LogProb w1_letter_a(int i) const;  // 1-based element index
  LogProb w2_letter_a(int i) const;
};

/// Elements larger than t are dropped; an element equal to t is rejected.
ReductionInstance construct_reduction(const std::vector<int64_t>& s_values, int64_t t,
                                      int p, int scale_bits = kDefaultScaleBits);

/// Optimal WLCS length of a reduction instance via the structure of its
/// common subsequences: all of (b^(n-1) a)^n with a subset I of the a's
/// kept, feasible iff sum(I) <= t and sum(I) >= t(1 - p + |I|). Returns
/// n(n-1) + |I| for a maximizing I. O(2^n * n).
struct StructuredWlcs {
  int64_t length = 0;
  std::vector<int> subset_indices;     // 1-based positions into s_values
  std::vector<int64_t> subset_values;
};
StructuredWlcs wlcs_structured_solve(const ReductionInstance& inst);

/// Exhaustive WLCS for tiny instances: longest S whose maximal-probability
/// embeddings into subsequences of both inputs reach 1/z (minus an optional
/// quanta slack, used when cross-checking quantized reduction instances).
struct WlcsBruteResult {
  int length = 0;
  std::string witness;
};
WlcsBruteResult wlcs_brute_generic(const WeightedString& w1, const WeightedString& w2,
                                   const Threshold& z, int64_t slack_quanta = 0);

/// Max-probability embedding of s into a subsequence of w (all of s used).
LogProb best_embedding(std::string_view s, const WeightedString& w);

std::optional<std::vector<int64_t>> subset_sum_brute(const std::vector<int64_t>& s_values,
                                                     int64_t t);

/// Checks the biconditional: the Subset Sum instance is solvable iff some
/// p in [2..n] makes the WLCS length reach n(n-1)+p.
struct ReductionReport {
  struct PerP {
    int p;
    int64_t wlcs_length;
    bool meets;
  };
  int64_t target = 0;
  std::vector<int64_t> s_values;
  bool subset_sum_solvable = false;
  std::optional<std::vector<int64_t>> subset;
  std::vector<PerP> per_p;
  std::optional<int> witness_p;
  bool equivalence_holds = false;
};
ReductionReport verify_reduction(const std::vector<int64_t>& s_values, int64_t t,
                                 int scale_bits = kDefaultScaleBits);

}  // namespace wscs
