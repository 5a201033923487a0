#include "wscs/matched.hpp"

#include <algorithm>

namespace wscs {

namespace {

// One surviving prefix: last letter, running probability, parent in the
// previous level's pool.
struct PrefixEntry {
  char last;
  LogProb prob;
  int32_t parent;
};

}  // namespace

std::vector<MatchedString> matched_set(const WeightedString& w, const Threshold& z) {
  std::vector<std::vector<PrefixEntry>> levels(static_cast<size_t>(w.length()) + 1);
  levels[0].push_back({'\0', LogProb::one(), -1});
  if (!z.meets(LogProb::one())) levels[0].clear();
  for (int i = 1; i <= w.length(); ++i) {
    const auto& prev = levels[static_cast<size_t>(i - 1)];
    auto& cur = levels[static_cast<size_t>(i)];
    for (int32_t k = 0; k < static_cast<int32_t>(prev.size()); ++k) {
      for (int ci = 0; ci < w.sigma(); ++ci) {
        LogProb p = prev[static_cast<size_t>(k)].prob * w.prob(i - 1, ci);
        if (z.meets(p)) cur.push_back({w.symbol(ci), p, k});
      }
    }
  }

  std::vector<MatchedString> out;
  for (const auto& e : levels[static_cast<size_t>(w.length())]) {
    std::string s(static_cast<size_t>(w.length()), '\0');
    const PrefixEntry* cur = &e;
    for (int i = w.length(); i >= 1; --i) {
      s[static_cast<size_t>(i - 1)] = cur->last;
      cur = &levels[static_cast<size_t>(i - 1)][static_cast<size_t>(cur->parent)];
    }
    out.push_back({std::move(s), e.prob});
  }
  std::sort(out.begin(), out.end(),
            [](const MatchedString& a, const MatchedString& b) { return a.text < b.text; });
  return out;
}

int FreqArray::find(LogProb p) const {
  auto it = std::lower_bound(values.begin(), values.end(), p);
  if (it == values.end() || *it != p) return -1;
  return static_cast<int>(it - values.begin());
}

std::vector<FreqArray> freq_arrays(const WeightedString& w, const Threshold& z) {
  std::vector<FreqArray> out(static_cast<size_t>(w.length()) + 1);
  out[0].values.push_back(LogProb::one());
  out[0].links.push_back(std::vector<int32_t>(static_cast<size_t>(w.sigma()), -1));

  for (int i = 1; i <= w.length(); ++i) {
    const FreqArray& prev = out[static_cast<size_t>(i - 1)];
    FreqArray& cur = out[static_cast<size_t>(i)];
    // Per-letter cursors into prev; list L_c is prev shifted by pi_i(c),
    // already sorted. A sigma-way merge emits distinct values in order and
    // records, for every contributing letter, the source index as the link.
    std::vector<size_t> cursor(static_cast<size_t>(w.sigma()), 0);
    // Values below the threshold are skipped by advancing cursors past them.
    while (true) {
      bool any = false;
      LogProb best = LogProb::impossible();
      for (int ci = 0; ci < w.sigma(); ++ci) {
        LogProb step = w.prob(i - 1, ci);
        if (step.is_impossible()) continue;
        auto& k = cursor[static_cast<size_t>(ci)];
        while (k < prev.values.size() && !z.meets(prev.values[k] * step)) ++k;
        if (k == prev.values.size()) continue;
        LogProb candidate = prev.values[k] * step;
        if (!any || candidate < best) best = candidate;
        any = true;
      }
      if (!any) break;
      std::vector<int32_t> links(static_cast<size_t>(w.sigma()), -1);
      for (int ci = 0; ci < w.sigma(); ++ci) {
        LogProb step = w.prob(i - 1, ci);
        if (step.is_impossible()) continue;
        auto& k = cursor[static_cast<size_t>(ci)];
        if (k < prev.values.size() && prev.values[k] * step == best) {
          links[static_cast<size_t>(ci)] = static_cast<int32_t>(k);
          ++k;
        }
      }
      cur.values.push_back(best);
      cur.links.push_back(std::move(links));
    }
  }
  return out;
}

std::vector<int32_t> sqrt_filter(const FreqArray& fa, const Threshold& z) {
  std::vector<int32_t> idx;
  for (int32_t k = 0; k < static_cast<int32_t>(fa.values.size()); ++k)
    if (z.meets_sqrt(fa.values[static_cast<size_t>(k)])) idx.push_back(k);
  return idx;
}

}  // namespace wscs
