#include "wscs/wlcs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace wscs {

namespace {
constexpr int64_t kImp = std::numeric_limits<int64_t>::min();
}

std::string union_alphabet(const WeightedString& w1, const WeightedString& w2);

LogProb ReductionInstance::w1_letter_a(int i) const {
  return w1.prob(i * n() - 1, 0);
}

LogProb ReductionInstance::w2_letter_a(int i) const {
  return w2.prob(i * n() - 1, 0);
}

ReductionInstance construct_reduction(const std::vector<int64_t>& s_values, int64_t t,
                                      int p, int scale_bits) {
  if (t <= 0) throw std::invalid_argument("target must be positive");
  if (t >= (int64_t{1} << 20))
    throw std::invalid_argument("target too large for exact quantization at this scale");
  std::vector<int64_t> kept;
  for (int64_t s : s_values) {
    if (s <= 0) throw std::invalid_argument("elements must be positive");
    if (s == t)
      throw std::invalid_argument("an element equal to the target needs no reduction");
    if (s < t) kept.push_back(s);  // larger elements can never participate
  }
  int n = static_cast<int>(kept.size());
  if (p < 2 || p > n) throw std::invalid_argument("p must lie in [2..n]");

  auto build = [&](bool second) {
    std::vector<std::vector<LogProb>> rows;
    std::vector<std::vector<double>> source;
    rows.reserve(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int r = 1; r <= n * n; ++r) {
      if (r % n == 0) {
        int64_t s = kept[static_cast<size_t>(r / n - 1)];
        LogProb a = second
                        ? LogProb::from_log2_rational(s - t, t * (p - 1), scale_bits)
                        : LogProb::from_log2_rational(-s, t, scale_bits);
        double pa = second ? std::exp2(static_cast<double>(s - t) /
                                       static_cast<double>(t * (p - 1)))
                           : std::exp2(-static_cast<double>(s) / static_cast<double>(t));
        rows.push_back({a, LogProb::from_probability(1.0 - pa, scale_bits)});
        source.push_back({pa, 1.0 - pa});
      } else {
        rows.push_back({LogProb::impossible(), LogProb::one()});
        source.push_back({0.0, 1.0});
      }
    }
    return WeightedString::from_quantized_rows("ab", std::move(rows), std::move(source),
                                               scale_bits);
  };
  WeightedString w1 = build(false);
  WeightedString w2 = build(true);
  return ReductionInstance{std::move(kept), t, p, scale_bits, std::move(w1), std::move(w2)};
}

StructuredWlcs wlcs_structured_solve(const ReductionInstance& inst) {
  int n = inst.n();
  if (n > 30) throw std::invalid_argument("instance too large for subset enumeration");
  int64_t t = inst.target;
  StructuredWlcs best;
  best.length = static_cast<int64_t>(n) * (n - 1);  // the empty subset is always feasible
  int best_size = 0;
  for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
    int64_t sum = 0;
    int size = 0;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) {
        sum += inst.s_values[static_cast<size_t>(i)];
        ++size;
      }
    if (size <= best_size) continue;
    if (sum > t) continue;
    if (sum < t * (1 - inst.p + size)) continue;
    best_size = size;
    best.subset_indices.clear();
    best.subset_values.clear();
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) {
        best.subset_indices.push_back(i + 1);
        best.subset_values.push_back(inst.s_values[static_cast<size_t>(i)]);
      }
  }
  best.length = static_cast<int64_t>(n) * (n - 1) + best_size;
  return best;
}

LogProb best_embedding(std::string_view s, const WeightedString& w) {
  size_t m = s.size();
  size_t n = static_cast<size_t>(w.length());
  if (m > n) return LogProb::impossible();
  // e[k][i]: max probability of embedding s[1..k] into w[1..i].
  std::vector<std::vector<int64_t>> e(m + 1, std::vector<int64_t>(n + 1, kImp));
  for (size_t i = 0; i <= n; ++i) e[0][i] = 0;
  for (size_t k = 1; k <= m; ++k) {
    for (size_t i = k; i <= n; ++i) {
      int64_t v = e[k][i - 1];
      LogProb step = w.prob_of(static_cast<int>(i) - 1, s[k - 1]);
      if (!step.is_impossible() && e[k - 1][i - 1] != kImp) {
        int64_t diag = e[k - 1][i - 1] + step.quanta();
        if (v == kImp || diag > v) v = diag;
      }
      e[k][i] = v;
    }
  }
  return LogProb::from_quanta(e[m][n]);
}

WlcsBruteResult wlcs_brute_generic(const WeightedString& w1, const WeightedString& w2,
                                   const Threshold& z, int64_t slack_quanta) {
  std::string letters = union_alphabet(w1, w2);
  int maxlen = std::min(w1.length(), w2.length());
  if (maxlen > 6 || letters.size() > 3)
    throw std::invalid_argument("instance too large for exhaustive WLCS");
  int64_t cutoff = -z.log2z_quanta() - slack_quanta;
  auto qualifies = [&](const std::string& s) {
    LogProb a = best_embedding(s, w1);
    if (a.is_impossible() || a.quanta() < cutoff) return false;
    LogProb b = best_embedding(s, w2);
    return !b.is_impossible() && b.quanta() >= cutoff;
  };
  for (int len = maxlen; len >= 1; --len) {
    std::string s(static_cast<size_t>(len), letters[0]);
    std::vector<size_t> odo(static_cast<size_t>(len), 0);
    while (true) {
      if (qualifies(s)) return {len, s};
      int pos = len - 1;
      while (pos >= 0 && odo[static_cast<size_t>(pos)] == letters.size() - 1) {
        odo[static_cast<size_t>(pos)] = 0;
        s[static_cast<size_t>(pos)] = letters[0];
        --pos;
      }
      if (pos < 0) break;
      ++odo[static_cast<size_t>(pos)];
      s[static_cast<size_t>(pos)] = letters[odo[static_cast<size_t>(pos)]];
    }
  }
  return {0, ""};
}

std::optional<std::vector<int64_t>> subset_sum_brute(const std::vector<int64_t>& s_values,
                                                     int64_t t) {
  int n = static_cast<int>(s_values.size());
  if (n > 24) throw std::invalid_argument("too many elements for exhaustive search");
  for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
    int64_t sum = 0;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) sum += s_values[static_cast<size_t>(i)];
    if (sum == t) {
      std::vector<int64_t> subset;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) subset.push_back(s_values[static_cast<size_t>(i)]);
      return subset;
    }
  }
  return std::nullopt;
}

ReductionReport verify_reduction(const std::vector<int64_t>& s_values, int64_t t,
                                 int scale_bits) {
  std::vector<int64_t> kept;
  for (int64_t s : s_values) {
    if (s == t) throw std::invalid_argument("an element equal to the target needs no reduction");
    if (s > 0 && s < t) kept.push_back(s);
  }
  ReductionReport rep;
  rep.target = t;
  rep.s_values = kept;
  rep.subset = subset_sum_brute(kept, t);
  rep.subset_sum_solvable = rep.subset.has_value();

  int n = static_cast<int>(kept.size());
  for (int p = 2; p <= n; ++p) {
    ReductionInstance inst = construct_reduction(kept, t, p, scale_bits);
    StructuredWlcs sol = wlcs_structured_solve(inst);
    bool meets = sol.length >= static_cast<int64_t>(n) * (n - 1) + p;
    rep.per_p.push_back({p, sol.length, meets});
    if (meets && !rep.witness_p) rep.witness_p = p;
  }
  rep.equivalence_holds = rep.subset_sum_solvable == rep.witness_p.has_value();
  return rep;
}

}  // namespace wscs
