#pragma once

#include <string>
#include <vector>

#include "wscs/log_prob.hpp"
#include "wscs/weighted_string.hpp"

namespace wscs {

struct MatchedString {
  std::string text;
  LogProb prob;
};

/// All standard strings S with P(S, W) >= 1/z, with their probabilities,
/// sorted lexicographically. At most floor(z) strings exist; the search
/// extends surviving prefixes one position at a time, O(n z sigma).
std::vector<MatchedString> matched_set(const WeightedString& w, const Threshold& z);

/// Sorted distinct prefix match-probabilities for one prefix length, with
/// per-letter predecessor links: links[vi][ci] locates values[vi] / pi_i(c)
/// in the previous array, or -1 when that value is not present there.
struct FreqArray {
  std::vector<LogProb> values;
  std::vector<std::vector<int32_t>> links;

  int find(LogProb p) const;  // index of p in values, or -1
};

/// Freq arrays for every prefix 0..n. Index 0 holds the single value 1
/// (the empty product); array i+1 is built by merging the per-letter
/// shifted lists of array i, dropping values below 1/z and deduplicating
/// exactly in quanta.
std::vector<FreqArray> freq_arrays(const WeightedString& w, const Threshold& z);

/// Indices of the values passing the half threshold (p >= 1/sqrt(z)).
std::vector<int32_t> sqrt_filter(const FreqArray& fa, const Threshold& z);

}  // namespace wscs
