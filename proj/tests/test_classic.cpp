#include <doctest.h>

#include <random>
#include <stdexcept>

#include "wscs/classic.hpp"

using namespace wscs;

namespace {

std::string random_string(std::mt19937_64& rng, int len, int sigma) {
  std::string s;
  for (int k = 0; k < len; ++k) s += static_cast<char>('a' + rng() % static_cast<uint64_t>(sigma));
  return s;
}

// Exhaustive shortest supersequence for tiny alphabets/lengths.
int scs_brute(const std::string& s1, const std::string& s2, int sigma) {
  for (int len = std::max(s1.size(), s2.size());; ++len) {
    std::string s(static_cast<size_t>(len), 'a');
    std::vector<int> odo(static_cast<size_t>(len), 0);
    while (true) {
      if (is_subsequence(s1, s) && is_subsequence(s2, s)) return len;
      int pos = len - 1;
      while (pos >= 0 && odo[static_cast<size_t>(pos)] == sigma - 1) {
        odo[static_cast<size_t>(pos)] = 0;
        s[static_cast<size_t>(pos)] = 'a';
        --pos;
      }
      if (pos < 0) break;
      ++odo[static_cast<size_t>(pos)];
      s[static_cast<size_t>(pos)] = static_cast<char>('a' + odo[static_cast<size_t>(pos)]);
    }
  }
}

}  // namespace

TEST_CASE("scs examples") {
  auto r = scs("ab", "b");
  CHECK(r.length == 2);
  CHECK(r.witness == "ab");

  auto same = scs("abba", "abba");
  CHECK(same.length == 4);
  CHECK(same.witness == "abba");

  auto cross = scs("ab", "ba");
  CHECK(cross.length == 3);
  CHECK(cross.length == scs_brute("ab", "ba", 2));
  CHECK(is_subsequence("ab", cross.witness));
  CHECK(is_subsequence("ba", cross.witness));
  CHECK(cross.witness == "bab");  // pinned by the tie order

  CHECK(scs("", "").length == 0);
  CHECK(scs("", "abc").witness == "abc");
}

TEST_CASE("lcs examples") {
  CHECK(lcs_length("ab", "b") == 1);
  CHECK(lcs_length("abcd", "abcd") == 4);
  CHECK(lcs_length("ab", "ba") == 1);
  CHECK(lcs_length("", "xyz") == 0);
}

TEST_CASE("scs witness is a minimal supersequence of both inputs") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 300; ++round) {
    std::string s1 = random_string(rng, static_cast<int>(rng() % 7), 2);
    std::string s2 = random_string(rng, static_cast<int>(rng() % 7), 2);
    auto r = scs(s1, s2);
    REQUIRE(static_cast<int>(r.witness.size()) == r.length);
    CHECK(is_subsequence(s1, r.witness));
    CHECK(is_subsequence(s2, r.witness));
    CHECK(r.length == scs_brute(s1, s2, 2));
  }
}

TEST_CASE("lcs + scs additivity on random pairs") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 2000; ++round) {
    std::string s1 = random_string(rng, static_cast<int>(rng() % 20), 3);
    std::string s2 = random_string(rng, static_cast<int>(rng() % 20), 3);
    CHECK(lcs_length(s1, s2) + scs(s1, s2).length ==
          static_cast<int>(s1.size() + s2.size()));
  }
}

TEST_CASE("bounded hamming perturbations move the lcs by at most 2d") {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 500; ++round) {
    int len1 = 4 + static_cast<int>(rng() % 10);
    int len2 = 4 + static_cast<int>(rng() % 10);
    std::string h1 = random_string(rng, len1, 2);
    std::string h2 = random_string(rng, len2, 2);
    int d = static_cast<int>(rng() % 4);
    std::string s1 = h1, s2 = h2;
    for (int k = 0; k < d; ++k) {
      size_t pos1 = rng() % s1.size();
      s1[pos1] = static_cast<char>('a' + rng() % 2);
      size_t pos2 = rng() % s2.size();
      s2[pos2] = static_cast<char>('a' + rng() % 2);
    }
    REQUIRE(hamming_distance(s1, h1) <= d);
    REQUIRE(hamming_distance(s2, h2) <= d);
    int delta = lcs_length(s1, s2) - lcs_length(h1, h2);
    CHECK(std::abs(delta) <= 2 * d);
    int delta_scs = scs(s1, s2).length - scs(h1, h2).length;
    CHECK(std::abs(delta_scs) <= 2 * d);
  }
}

TEST_CASE("scs tables") {
  ScsTable t = scs_tables("aba", "baa");
  CHECK(t.forward[3][3] == scs("aba", "baa").length);
  for (int i = 0; i <= 3; ++i) CHECK(t.forward[static_cast<size_t>(i)][0] == i);
  for (int j = 0; j <= 3; ++j) CHECK(t.forward[0][static_cast<size_t>(j)] == j);
  CHECK(t.backward[1][1] == scs("aba", "baa").length);
  CHECK(t.backward[4][4] == 0);  // both suffixes empty
  CHECK(t.backward[4][1] == 3);  // only h2 remains
  CHECK(t.backward[2][2] == scs("ba", "aa").length);

  std::mt19937_64 rng(17);
  for (int round = 0; round < 50; ++round) {
    std::string h1 = random_string(rng, 1 + static_cast<int>(rng() % 6), 2);
    std::string h2 = random_string(rng, 1 + static_cast<int>(rng() % 6), 2);
    ScsTable tt = scs_tables(h1, h2);
    for (size_t i = 0; i <= h1.size(); ++i)
      for (size_t j = 0; j <= h2.size(); ++j) {
        CHECK(tt.forward[i][j] <= static_cast<int>(i + j));
        if (i > 0) CHECK(tt.forward[i][j] >= tt.forward[i - 1][j]);
        if (j > 0) CHECK(tt.forward[i][j] >= tt.forward[i][j - 1]);
        CHECK(tt.forward[i][j] ==
              scs(h1.substr(0, i), h2.substr(0, j)).length);
        CHECK(tt.backward[i + 1][j + 1] == scs(h1.substr(i), h2.substr(j)).length);
      }
  }
}

TEST_CASE("hamming distance") {
  CHECK(hamming_distance("aba", "abb") == 1);
  CHECK(hamming_distance("abc", "abc") == 0);
  CHECK(hamming_distance("ab", "ba") == 2);
  CHECK_THROWS_AS(hamming_distance("a", "ab"), std::invalid_argument);
}
