#include <algorithm>
#include <stdexcept>

#include "wscs/solvers.hpp"

namespace wscs {

namespace {
constexpr int64_t kImp = std::numeric_limits<int64_t>::min();
}

std::string union_alphabet(const WeightedString& w1, const WeightedString& w2);

DpTable::DpTable(const WeightedString& w1, const WeightedString& w2, const Threshold& z,
                 Options opt)
    : w1_(w1), w2_(w2), z_(z) {
  if (w1.scale_bits() != w2.scale_bits() || w1.scale_bits() != z.scale_bits())
    throw std::invalid_argument("mixed scale bits between inputs");
  letters_ = union_alphabet(w1_, w2_);
  for (char c : letters_) {
    letter_in_w1_.push_back(w1_.symbol_index(c));
    letter_in_w2_.push_back(w2_.symbol_index(c));
  }
  freq_ = freq_arrays(w1_, z_);
  build_domains(opt);
  build_bands(opt);
  fill();
}

void DpTable::build_domains(Options opt) {
  dom_.resize(static_cast<size_t>(n1()) + 1);
  dom_inv_.resize(static_cast<size_t>(n1()) + 1);
  for (int i = 0; i <= n1(); ++i) {
    const FreqArray& fa = freq_[static_cast<size_t>(i)];
    std::vector<int32_t> dom;
    if (!opt.sqrt_filter) {
      dom.resize(fa.values.size());
      for (int32_t k = 0; k < static_cast<int32_t>(dom.size()); ++k) dom[static_cast<size_t>(k)] = k;
    } else {
      dom = sqrt_filter(fa, z_);
      if (opt.augment && i >= 1) {
        // One-letter extensions of the half-threshold states: values
        // pi_i(c) * p' with p' >= 1/sqrt(z) that still clear 1/z. These keep
        // the table complete when a single position drops a prefix below
        // the half threshold.
        for (int32_t pf : sqrt_filter(freq_[static_cast<size_t>(i - 1)], z_)) {
          for (int ci = 0; ci < w1_.sigma(); ++ci) {
            LogProb step = w1_.prob(i - 1, ci);
            if (step.is_impossible()) continue;
            LogProb pv = freq_[static_cast<size_t>(i - 1)].values[static_cast<size_t>(pf)] * step;
            if (!z_.meets(pv)) continue;
            int k = fa.find(pv);
            if (k >= 0) dom.push_back(static_cast<int32_t>(k));
          }
        }
        std::sort(dom.begin(), dom.end());
        dom.erase(std::unique(dom.begin(), dom.end()), dom.end());
      }
    }
    dom_inv_[static_cast<size_t>(i)].assign(fa.values.size(), -1);
    for (int32_t d = 0; d < static_cast<int32_t>(dom.size()); ++d)
      dom_inv_[static_cast<size_t>(i)][static_cast<size_t>(dom[static_cast<size_t>(d)])] = d;
    dom_[static_cast<size_t>(i)] = std::move(dom);
  }
}

void DpTable::build_bands(Options opt) {
  size_t cells = static_cast<size_t>(n1() + 1) * static_cast<size_t>(n2() + 1);
  int total = n1() + n2();
  lo_.assign(cells, 0);
  hi_.assign(cells, total);
  if (!opt.banded) return;
  ScsTable t = scs_tables(heavy_string(w1_), heavy_string(w2_));
  int w = z_.band_halfwidth();
  for (int i = 0; i <= n1(); ++i) {
    for (int j = 0; j <= n2(); ++j) {
      int center = t.forward[static_cast<size_t>(i)][static_cast<size_t>(j)];
      lo_[cell(i, j)] = std::max(0, center - w);
      hi_[cell(i, j)] = std::min(total, center + w);
    }
  }
}

void DpTable::fill() {
  size_t cells = static_cast<size_t>(n1() + 1) * static_cast<size_t>(n2() + 1);
  cell_offset_.assign(cells, 0);
  int64_t total = 0;
  for (int i = 0; i <= n1(); ++i) {
    for (int j = 0; j <= n2(); ++j) {
      cell_offset_[cell(i, j)] = total;
      total += static_cast<int64_t>(hi_[cell(i, j)] - lo_[cell(i, j)] + 1) *
               static_cast<int64_t>(dom_[static_cast<size_t>(i)].size());
    }
  }
  val_.assign(static_cast<size_t>(total), kImp);
  parent_term_.assign(static_cast<size_t>(total), 0);
  parent_letter_.assign(static_cast<size_t>(total), -1);

  // DP[0,0,ell,1] = 1 for every in-band ell: an empty pair of subsequences
  // is covered by any string.
  int d0 = dom_inv_[0][0];
  if (d0 >= 0)
    for (int ell = lo_[cell(0, 0)]; ell <= hi_[cell(0, 0)]; ++ell)
      val_[state_index(0, 0, ell, d0)] = 0;

  int nletters = static_cast<int>(letters_.size());
  for (int i = 0; i <= n1(); ++i) {
    const auto& dom = dom_[static_cast<size_t>(i)];
    const FreqArray& fa = freq_[static_cast<size_t>(i)];
    for (int j = 0; j <= n2(); ++j) {
      if (i == 0 && j == 0) continue;
      for (int ell = lo_[cell(i, j)]; ell <= hi_[cell(i, j)]; ++ell) {
        for (int d = 0; d < static_cast<int>(dom.size()); ++d) {
          int32_t full_p = dom[static_cast<size_t>(d)];
          int64_t best = kImp;
          int8_t best_term = 0;
          int16_t best_letter = -1;
          for (int u = 0; u < nletters; ++u) {
            int c1 = letter_in_w1_[static_cast<size_t>(u)];
            int c2 = letter_in_w2_[static_cast<size_t>(u)];
            LogProb y = (j >= 1 && c2 >= 0) ? w2_.prob(j - 1, c2) : LogProb::impossible();
            int pd_prev = -1;
            if (i >= 1 && c1 >= 0) {
              int32_t prev_full = fa.links[static_cast<size_t>(full_p)][static_cast<size_t>(c1)];
              if (prev_full >= 0) pd_prev = dom_inv_[static_cast<size_t>(i - 1)][static_cast<size_t>(prev_full)];
            }
            // letter matches W1[i] only
            if (pd_prev >= 0 && in_band(i - 1, j, ell - 1)) {
              int64_t v = val_[state_index(i - 1, j, ell - 1, pd_prev)];
              if (v != kImp && v > best) {
                best = v;
                best_term = 2;
                best_letter = static_cast<int16_t>(u);
              }
            }
            // letter matches W2[j] only
            if (j >= 1 && !y.is_impossible() && in_band(i, j - 1, ell - 1)) {
              int64_t v = val_[state_index(i, j - 1, ell - 1, d)];
              if (v != kImp && v + y.quanta() > best) {
                best = v + y.quanta();
                best_term = 3;
                best_letter = static_cast<int16_t>(u);
              }
            }
            // letter matches both
            if (pd_prev >= 0 && j >= 1 && !y.is_impossible() && in_band(i - 1, j - 1, ell - 1)) {
              int64_t v = val_[state_index(i - 1, j - 1, ell - 1, pd_prev)];
              if (v != kImp && v + y.quanta() > best) {
                best = v + y.quanta();
                best_term = 4;
                best_letter = static_cast<int16_t>(u);
              }
            }
          }
          size_t idx = state_index(i, j, ell, d);
          val_[idx] = best;
          parent_term_[idx] = best_term;
          parent_letter_[idx] = best_letter;
        }
      }
    }
  }
}

LogProb DpTable::value(int i, int j, int ell, int dom_idx) const {
  if (!in_band(i, j, ell)) return LogProb::impossible();
  return LogProb::from_quanta(val_[state_index(i, j, ell, dom_idx)]);
}

std::optional<LogProb> DpTable::value_at(int i, int j, int ell, LogProb p) const {
  if (!in_band(i, j, ell)) return std::nullopt;
  int full = freq_[static_cast<size_t>(i)].find(p);
  if (full < 0) return std::nullopt;
  int d = dom_inv_[static_cast<size_t>(i)][static_cast<size_t>(full)];
  if (d < 0) return std::nullopt;
  int64_t v = val_[state_index(i, j, ell, d)];
  return LogProb::from_quanta(v);
}

std::vector<MergePoint> DpTable::pairs_at(int i, int j, int ell) const {
  std::vector<MergePoint> out;
  if (!in_band(i, j, ell)) return out;
  const auto& dom = dom_[static_cast<size_t>(i)];
  for (int d = 0; d < static_cast<int>(dom.size()); ++d) {
    int64_t v = val_[state_index(i, j, ell, d)];
    if (v == kImp) continue;
    LogProb p = freq_[static_cast<size_t>(i)].values[static_cast<size_t>(dom[static_cast<size_t>(d)])];
    out.push_back({p, LogProb::from_quanta(v), d});
  }
  return out;
}

void DpTable::run_prefix_maxima() {
  origin_.resize(val_.size());
  for (int i = 0; i <= n1(); ++i) {
    for (int j = 0; j <= n2(); ++j) {
      for (int ell = lo_[cell(i, j)]; ell <= hi_[cell(i, j)]; ++ell)
        for (int d = 0; d < static_cast<int>(dom_[static_cast<size_t>(i)].size()); ++d)
          origin_[state_index(i, j, ell, d)] = ell;
      for (int ell = lo_[cell(i, j)] + 1; ell <= hi_[cell(i, j)]; ++ell) {
        for (int d = 0; d < static_cast<int>(dom_[static_cast<size_t>(i)].size()); ++d) {
          size_t prev = state_index(i, j, ell - 1, d);
          size_t cur = state_index(i, j, ell, d);
          if (val_[prev] != kImp && (val_[cur] == kImp || val_[prev] > val_[cur])) {
            val_[cur] = val_[prev];
            origin_[cur] = origin_[prev];
          }
        }
      }
    }
  }
}

int DpTable::origin_of(int i, int j, int ell, int dom_idx) const {
  if (origin_.empty()) throw std::logic_error("prefix maxima not run");
  return origin_[state_index(i, j, ell, dom_idx)];
}

std::optional<DpTable::Final> DpTable::best_final() const {
  int i = n1(), j = n2();
  for (int ell = lo_[cell(i, j)]; ell <= hi_[cell(i, j)]; ++ell)
    for (int d = 0; d < static_cast<int>(dom_[static_cast<size_t>(i)].size()); ++d) {
      int64_t v = val_[state_index(i, j, ell, d)];
      if (v != kImp && v >= -z_.log2z_quanta()) return Final{ell, d};
    }
  return std::nullopt;
}

std::string DpTable::reconstruct(int i, int j, int ell, int dom_idx) const {
  std::string out;
  while (!(i == 0 && j == 0)) {
    size_t idx = state_index(i, j, ell, dom_idx);
    int8_t term = parent_term_[idx];
    if (term == 0) throw std::logic_error("reconstruction hit a state without parent");
    int u = parent_letter_[idx];
    out += letters_[static_cast<size_t>(u)];
    if (term == 2 || term == 4) {
      int c1 = letter_in_w1_[static_cast<size_t>(u)];
      int32_t full_p = dom_[static_cast<size_t>(i)][static_cast<size_t>(dom_idx)];
      int32_t prev_full = freq_[static_cast<size_t>(i)].links[static_cast<size_t>(full_p)][static_cast<size_t>(c1)];
      dom_idx = dom_inv_[static_cast<size_t>(i - 1)][static_cast<size_t>(prev_full)];
      --i;
      if (term == 4) --j;
    } else {
      --j;
    }
    --ell;
  }
  // Free positions at the base are padded; they are never part of an
  // optimal reconstruction but keep the emitted length honest.
  out.append(static_cast<size_t>(ell), letters_[0]);
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace wscs
