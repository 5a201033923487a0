#include "wscs/classic.hpp"

#include <algorithm>
#include <stdexcept>

namespace wscs {

namespace {

std::vector<std::vector<int>> scs_length_table(std::string_view s1, std::string_view s2) {
  size_t n1 = s1.size(), n2 = s2.size();
  std::vector<std::vector<int>> d(n1 + 1, std::vector<int>(n2 + 1, 0));
  for (size_t i = 0; i <= n1; ++i) d[i][0] = static_cast<int>(i);
  for (size_t j = 0; j <= n2; ++j) d[0][j] = static_cast<int>(j);
  for (size_t i = 1; i <= n1; ++i)
    for (size_t j = 1; j <= n2; ++j)
      d[i][j] = s1[i - 1] == s2[j - 1] ? d[i - 1][j - 1] + 1
                                       : 1 + std::min(d[i - 1][j], d[i][j - 1]);
  return d;
}

}  // namespace

ScsResult scs(std::string_view s1, std::string_view s2) {
  auto d = scs_length_table(s1, s2);
  size_t i = s1.size(), j = s2.size();
  std::string out;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && s1[i - 1] == s2[j - 1] && d[i][j] == d[i - 1][j - 1] + 1) {
      out += s1[i - 1];
      --i;
      --j;
    } else if (i > 0 && d[i][j] == d[i - 1][j] + 1) {
      out += s1[i - 1];
      --i;
    } else {
      out += s2[j - 1];
      --j;
    }
  }
  std::reverse(out.begin(), out.end());
  return {d[s1.size()][s2.size()], std::move(out)};
}

int lcs_length(std::string_view s1, std::string_view s2) {
  size_t n1 = s1.size(), n2 = s2.size();
  std::vector<int> prev(n2 + 1, 0), cur(n2 + 1, 0);
  for (size_t i = 1; i <= n1; ++i) {
    for (size_t j = 1; j <= n2; ++j)
      cur[j] = s1[i - 1] == s2[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    std::swap(prev, cur);
  }
  return prev[n2];
}

ScsTable scs_tables(std::string_view h1, std::string_view h2) {
  ScsTable t;
  t.n1 = static_cast<int>(h1.size());
  t.n2 = static_cast<int>(h2.size());
  t.forward = scs_length_table(h1, h2);

  std::string r1(h1.rbegin(), h1.rend());
  std::string r2(h2.rbegin(), h2.rend());
  auto rev = scs_length_table(r1, r2);
  // backward[i][j] = |SCS(h1[i..n1], h2[j..n2])|, valid for i in [1..n1+1].
  t.backward.assign(static_cast<size_t>(t.n1) + 2,
                    std::vector<int>(static_cast<size_t>(t.n2) + 2, 0));
  for (int i = 1; i <= t.n1 + 1; ++i)
    for (int j = 1; j <= t.n2 + 1; ++j)
      t.backward[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          rev[static_cast<size_t>(t.n1 + 1 - i)][static_cast<size_t>(t.n2 + 1 - j)];
  return t;
}

int hamming_distance(std::string_view s1, std::string_view s2) {
  if (s1.size() != s2.size())
    throw std::invalid_argument("hamming distance needs equal lengths");
  int d = 0;
  for (size_t i = 0; i < s1.size(); ++i)
    if (s1[i] != s2[i]) ++d;
  return d;
}

bool is_subsequence(std::string_view needle, std::string_view haystack) {
  size_t k = 0;
  for (char c : haystack) {
    if (k < needle.size() && needle[k] == c) ++k;
  }
  return k == needle.size();
}

}  // namespace wscs
