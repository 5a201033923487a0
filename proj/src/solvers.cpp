#include "wscs/solvers.hpp"

#include <algorithm>
#include <stdexcept>

namespace wscs {

namespace {
constexpr int64_t kImp = std::numeric_limits<int64_t>::min();
}

std::string union_alphabet(const WeightedString& w1, const WeightedString& w2) {
  std::string u = w1.alphabet();
  for (char c : w2.alphabet())
    if (w1.symbol_index(c) < 0) u += c;
  return u;
}

const char* tier_name(Tier t) {
  switch (t) {
    case Tier::baseline: return "baseline";
    case Tier::cube: return "cube";
    case Tier::banded: return "banded";
    case Tier::mitm: return "mitm";
    case Tier::oracle: return "oracle";
  }
  return "?";
}

std::optional<Tier> tier_from_name(std::string_view name) {
  for (Tier t : {Tier::baseline, Tier::cube, Tier::banded, Tier::mitm, Tier::oracle})
    if (name == tier_name(t)) return t;
  return std::nullopt;
}

std::optional<SubsequenceWitness> check_supersequence(std::string_view s,
                                                      const WeightedString& w,
                                                      const Threshold& z) {
  size_t m = s.size();
  size_t n = static_cast<size_t>(w.length());
  // best[i][k]: max probability of covering w[1..k] inside s[1..i].
  std::vector<std::vector<int64_t>> best(m + 1, std::vector<int64_t>(n + 1, kImp));
  for (size_t i = 0; i <= m; ++i) best[i][0] = 0;
  for (size_t i = 1; i <= m; ++i) {
    for (size_t k = 1; k <= n; ++k) {
      int64_t v = best[i - 1][k];
      LogProb step = w.prob_of(static_cast<int>(k - 1), s[i - 1]);
      if (!step.is_impossible() && best[i - 1][k - 1] != kImp) {
        int64_t diag = best[i - 1][k - 1] + step.quanta();
        if (v == kImp || diag > v) v = diag;
      }
      best[i][k] = v;
    }
  }
  int64_t final_v = best[m][n];
  if (final_v == kImp || final_v < -z.log2z_quanta()) return std::nullopt;

  SubsequenceWitness wit;
  wit.prob = LogProb::from_quanta(final_v);
  size_t i = m, k = n;
  while (k > 0) {
    LogProb step = w.prob_of(static_cast<int>(k - 1), s[i - 1]);
    if (!step.is_impossible() && best[i - 1][k - 1] != kImp &&
        best[i - 1][k - 1] + step.quanta() == best[i][k]) {
      wit.positions.push_back(static_cast<int>(i));
      --i;
      --k;
    } else {
      --i;
    }
  }
  std::reverse(wit.positions.begin(), wit.positions.end());
  return wit;
}

namespace {

void require_same_scale(const WeightedString& w1, const WeightedString& w2,
                        const Threshold& z) {
  if (w1.scale_bits() != w2.scale_bits() || w1.scale_bits() != z.scale_bits())
    throw std::invalid_argument("mixed scale bits between inputs");
}

bool instance_feasible(const WeightedString& w, const Threshold& z) {
  return z.meets(match_probability(heavy_string(w), w));
}

// Fills supersequence + both witnesses of an already-validated answer.
WscsResult finish_result(std::string s, const WeightedString& w1, const WeightedString& w2,
                         const Threshold& z, int64_t states) {
  WscsResult r;
  r.length = static_cast<int>(s.size());
  r.supersequence = std::move(s);
  auto c1 = check_supersequence(r.supersequence, w1, z);
  auto c2 = check_supersequence(r.supersequence, w2, z);
  if (!c1 || !c2) throw std::logic_error("solver produced an invalid supersequence");
  r.witness1 = std::move(*c1);
  r.witness2 = std::move(*c2);
  r.states_visited = states;
  return r;
}

WscsResult infeasible_result(int64_t states) {
  WscsResult r;
  r.infeasible = true;
  r.states_visited = states;
  return r;
}

}  // namespace

WscsResult solve_oracle(const WeightedString& w1, const WeightedString& w2,
                        const Threshold& z, int max_len) {
  require_same_scale(w1, w2, z);
  if (max_len < 0) max_len = w1.length() + w2.length();
  int64_t states = 0;
  if (!instance_feasible(w1, z) || !instance_feasible(w2, z)) return infeasible_result(states);

  std::string letters = union_alphabet(w1, w2);
  int start = std::max(w1.length(), w2.length());
  for (int len = start; len <= max_len; ++len) {
    std::string s(static_cast<size_t>(len), letters[0]);
    std::vector<size_t> odo(static_cast<size_t>(len), 0);
    while (true) {
      states += static_cast<int64_t>(len + 1) * (w1.length() + 1);
      auto c1 = check_supersequence(s, w1, z);
      if (c1) {
        states += static_cast<int64_t>(len + 1) * (w2.length() + 1);
        auto c2 = check_supersequence(s, w2, z);
        if (c2) {
          WscsResult r;
          r.length = len;
          r.supersequence = s;
          r.witness1 = std::move(*c1);
          r.witness2 = std::move(*c2);
          r.states_visited = states;
          return r;
        }
      }
      // next string in lexicographic order of the union alphabet
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
  throw std::logic_error("oracle exhausted max_len on a feasible instance");
}

WscsResult solve_baseline(const WeightedString& w1, const WeightedString& w2,
                          const Threshold& z) {
  require_same_scale(w1, w2, z);
  auto m1 = matched_set(w1, z);
  auto m2 = matched_set(w2, z);
  int64_t states = 0;
  if (m1.empty() || m2.empty()) return infeasible_result(states);

  const std::string* best1 = nullptr;
  const std::string* best2 = nullptr;
  int best_len = -1;
  for (const auto& a : m1) {
    for (const auto& b : m2) {
      states += static_cast<int64_t>(a.text.size() + 1) * static_cast<int64_t>(b.text.size() + 1);
      ScsResult r = scs(a.text, b.text);
      if (best_len < 0 || r.length < best_len) {
        best_len = r.length;
        best1 = &a.text;
        best2 = &b.text;
      }
    }
  }
  return finish_result(scs(*best1, *best2).witness, w1, w2, z, states);
}

namespace {

WscsResult solve_with_table(const WeightedString& w1, const WeightedString& w2,
                            const Threshold& z, DpTable::Options opt) {
  DpTable table(w1, w2, z, opt);
  auto fin = table.best_final();
  if (!fin) return infeasible_result(table.state_count());
  std::string s = table.reconstruct(table.n1(), table.n2(), fin->ell, fin->dom_idx);
  if (static_cast<int>(s.size()) != fin->ell)
    throw std::logic_error("reconstructed length mismatch");
  return finish_result(std::move(s), w1, w2, z, table.state_count());
}

}  // namespace

WscsResult solve_dp_cube(const WeightedString& w1, const WeightedString& w2,
                         const Threshold& z) {
  return solve_with_table(w1, w2, z, {});
}

WscsResult solve_dp_banded(const WeightedString& w1, const WeightedString& w2,
                           const Threshold& z) {
  return solve_with_table(w1, w2, z, {.banded = true});
}

MitmTables::MitmTables(const WeightedString& w1, const WeightedString& w2, const Threshold& z)
    : fwd_(w1, w2, z, {.banded = true, .sqrt_filter = true, .augment = true}),
      bwd_(w1.reversed(), w2.reversed(), z,
           {.banded = true, .sqrt_filter = true, .augment = false}) {
  fwd_.run_prefix_maxima();
  bwd_.run_prefix_maxima();
}

std::pair<int, int> MitmTables::forward_band(int i, int j) const {
  return {fwd_.band_lo(i, j), fwd_.band_hi(i, j)};
}

std::pair<int, int> MitmTables::backward_band(int i, int j) const {
  return {bwd_.band_lo(n1() + 1 - i, n2() + 1 - j), bwd_.band_hi(n1() + 1 - i, n2() + 1 - j)};
}

MergeSet MitmTables::forward_set(int i, int j, int ell) const {
  return prune_irrelevant(fwd_.pairs_at(i, j, ell));
}

MergeSet MitmTables::backward_set(int i, int j, int ell) const {
  return prune_irrelevant(bwd_.pairs_at(n1() + 1 - i, n2() + 1 - j, ell));
}

std::optional<MitmTables::CellBest> MitmTables::cell_best(int i, int j) const {
  auto [a, b] = forward_band(i, j);
  auto [a2, b2] = backward_band(i + 1, j + 1);
  LogProb w = fwd_.threshold().min_prob();
  int ell_l = a;
  int ell_r = b2 + 1;
  std::optional<CellBest> best;
  MergeSet A = forward_set(i, j, ell_l);
  while (ell_l <= b && ell_r >= a2) {
    MergeSet B = backward_set(i + 1, j + 1, ell_r - 1);
    if (merge_decision(A, B, w)) {
      --ell_r;  // a shorter right part still merges
    } else {
      if (ell_r <= b2) {
        int total = ell_l + ell_r;
        if (!best || total < best->total) best = CellBest{total, ell_l, ell_r};
      }
      ++ell_l;
      if (ell_l <= b) A = forward_set(i, j, ell_l);
    }
  }
  return best;
}

std::string MitmTables::stitch(int i, int j, int ell_l, int ell_r) const {
  MergeSet A = forward_set(i, j, ell_l);
  MergeSet B = backward_set(i + 1, j + 1, ell_r);
  auto wit = merge_decision(A, B, fwd_.threshold().min_prob());
  if (!wit) throw std::logic_error("stitch on a cell that does not merge");
  int ri = n1() - i, rj = n2() - j;
  int ol = fwd_.origin_of(i, j, ell_l, wit->a.tag);
  int orr = bwd_.origin_of(ri, rj, ell_r, wit->b.tag);
  std::string left = fwd_.reconstruct(i, j, ol, wit->a.tag);
  std::string right_rev = bwd_.reconstruct(ri, rj, orr, wit->b.tag);
  return left + std::string(right_rev.rbegin(), right_rev.rend());
}

WscsResult solve_mitm(const WeightedString& w1, const WeightedString& w2,
                      const Threshold& z) {
  MitmTables tables(w1, w2, z);
  std::optional<MitmTables::CellBest> best;
  int best_i = 0, best_j = 0;
  for (int i = 0; i <= tables.n1(); ++i) {
    for (int j = 0; j <= tables.n2(); ++j) {
      auto cb = tables.cell_best(i, j);
      if (cb && (!best || cb->total < best->total)) {
        best = cb;
        best_i = i;
        best_j = j;
      }
    }
  }
  int64_t states = tables.forward().state_count();
  if (!best) return infeasible_result(states);
  std::string s = tables.stitch(best_i, best_j, best->ell_l, best->ell_r);
  if (static_cast<int>(s.size()) != best->total)
    throw std::logic_error("stitched length mismatch");
  return finish_result(std::move(s), w1, w2, z, states);
}

WscsResult solve(Tier tier, const WeightedString& w1, const WeightedString& w2,
                 const Threshold& z) {
  switch (tier) {
    case Tier::baseline: return solve_baseline(w1, w2, z);
    case Tier::cube: return solve_dp_cube(w1, w2, z);
    case Tier::banded: return solve_dp_banded(w1, w2, z);
    case Tier::mitm: return solve_mitm(w1, w2, z);
    case Tier::oracle: return solve_oracle(w1, w2, z);
  }
  throw std::logic_error("unknown tier");
}

int64_t count_states(Tier tier, const WeightedString& w1, const WeightedString& w2,
                     const Threshold& z) {
  return solve(tier, w1, w2, z).states_visited;
}

}  // namespace wscs
