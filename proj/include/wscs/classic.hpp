#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace wscs {

struct ScsResult {
  int length;
  std::string witness;
};

/// Shortest common supersequence by the standard quadratic DP. Witness
/// ties are broken in a fixed order (diagonal match, take from s1, take
/// from s2) so results are deterministic.
ScsResult scs(std::string_view s1, std::string_view s2);

int lcs_length(std::string_view s1, std::string_view s2);

/// SCS lengths of all prefix pairs (forward) and all suffix pairs
/// (backward). forward[i][j] = |SCS(h1[1..i], h2[1..j])| and
/// backward[i][j] = |SCS(h1[i..n1], h2[j..n2])| for i in [1..n1+1].
struct ScsTable {
  int n1 = 0;
  int n2 = 0;
  std::vector<std::vector<int>> forward;
  std::vector<std::vector<int>> backward;
};

ScsTable scs_tables(std::string_view h1, std::string_view h2);

int hamming_distance(std::string_view s1, std::string_view s2);

bool is_subsequence(std::string_view needle, std::string_view haystack);

}  // namespace wscs
