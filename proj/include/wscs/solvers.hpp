#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wscs/classic.hpp"
#include "wscs/log_prob.hpp"
#include "wscs/matched.hpp"
#include "wscs/merge.hpp"
#include "wscs/weighted_string.hpp"

namespace wscs {

enum class Tier { baseline, cube, banded, mitm, oracle };

const char* tier_name(Tier t);
std::optional<Tier> tier_from_name(std::string_view name);

/// A subsequence of some supersequence S matching all of one weighted
/// string: 1-based positions into S, strictly increasing, plus the match
/// probability.
struct SubsequenceWitness {
  std::vector<int> positions;
  LogProb prob;
};

/// Maximizes P(S', W) over subsequences S' of S that cover all of W, via a
/// DP over (prefix of S, prefix of W). Returns a witness iff the maximum
/// reaches 1/z. Symbols of S outside W's alphabet are simply unusable.
std::optional<SubsequenceWitness> check_supersequence(std::string_view s,
                                                      const WeightedString& w,
                                                      const Threshold& z);

struct WscsResult {
  bool infeasible = false;
  int length = 0;
  std::string supersequence;
  SubsequenceWitness witness1;
  SubsequenceWitness witness2;
  int64_t states_visited = 0;
};

/// Brute-force reference: tries every string of increasing length until one
/// passes check_supersequence for both inputs. Intended for tiny instances.
/// max_len < 0 means |w1|+|w2|, which always suffices when feasible.
WscsResult solve_oracle(const WeightedString& w1, const WeightedString& w2,
                        const Threshold& z, int max_len = -1);

/// Pairwise SCS over the two matched sets, O(n^2 z^2).
WscsResult solve_baseline(const WeightedString& w1, const WeightedString& w2,
                          const Threshold& z);

/// Full DP over states (i, j, ell, p), O(n^3 z) states.
WscsResult solve_dp_cube(const WeightedString& w1, const WeightedString& w2,
                         const Threshold& z);

/// Same DP restricted to ell within a band of half-width floor(2 log2 z)
/// around the SCS table of the heavy strings, O(n^2 z log z) states.
WscsResult solve_dp_banded(const WeightedString& w1, const WeightedString& w2,
                           const Threshold& z);

/// Meet in the middle: forward and backward banded tables at the half
/// threshold, prefix maxima along the length dimension, and a two-pointer
/// sweep per (i, j) deciding Merge instances at threshold 1/z.
WscsResult solve_mitm(const WeightedString& w1, const WeightedString& w2,
                      const Threshold& z);

WscsResult solve(Tier tier, const WeightedString& w1, const WeightedString& w2,
                 const Threshold& z);

/// Number of DP states the tier materializes on this instance (for the
/// mitm tier: the forward table). For baseline and oracle this counts the
/// cells of the classic DPs they run.
int64_t count_states(Tier tier, const WeightedString& w1, const WeightedString& w2,
                     const Threshold& z);

// ---------------------------------------------------------------------------
// DP internals, exposed for the mitm combination step and for tests.
// ---------------------------------------------------------------------------

/// The shared table behind the cube, banded and mitm tiers: values q over
/// states (i, j, ell, p) with parents for witness reconstruction. The state
/// space is shaped by the options: per-cell bands L[i,j] over ell, and the
/// per-row p-domain (all of Freq_i, or the half-threshold subset, optionally
/// augmented with its one-letter extensions above 1/z).
class DpTable {
 public:
  struct Options {
    bool banded = false;
    bool sqrt_filter = false;
    bool augment = false;
  };

  DpTable(const WeightedString& w1, const WeightedString& w2, const Threshold& z,
          Options opt);

  int n1() const { return w1_.length(); }
  int n2() const { return w2_.length(); }
  int band_lo(int i, int j) const { return lo_[cell(i, j)]; }
  int band_hi(int i, int j) const { return hi_[cell(i, j)]; }
  const std::vector<int32_t>& domain(int i) const { return dom_[static_cast<size_t>(i)]; }
  const std::vector<FreqArray>& freq() const { return freq_; }
  const std::string& letters() const { return letters_; }
  const Threshold& threshold() const { return z_; }
  int64_t state_count() const { return static_cast<int64_t>(val_.size()); }

  /// Value of a state; IMPOSSIBLE for unreachable or out-of-band states.
  LogProb value(int i, int j, int ell, int dom_idx) const;
  /// Test probe addressing the p dimension by probability value.
  std::optional<LogProb> value_at(int i, int j, int ell, LogProb p) const;

  /// All (p, q) pairs of one (i, j, ell) slice with finite q, x-sorted;
  /// tag carries the domain index. Empty when ell is out of band.
  std::vector<MergePoint> pairs_at(int i, int j, int ell) const;

  /// In-place prefix maxima along ell per (i, j, p); afterwards values are
  /// non-decreasing in ell and origin_of reports where each value came from.
  void run_prefix_maxima();
  int origin_of(int i, int j, int ell, int dom_idx) const;

  /// Smallest ell at (n1, n2) whose slice holds a value >= 1/z, with the
  /// first qualifying domain index. Meaningful before prefix maxima.
  struct Final {
    int ell;
    int dom_idx;
  };
  std::optional<Final> best_final() const;

  /// Walks parent links back to (0, 0) and returns the emitted string of
  /// length ell (free base positions are padded with the first letter).
  std::string reconstruct(int i, int j, int ell, int dom_idx) const;

 private:
  size_t cell(int i, int j) const {
    return static_cast<size_t>(i) * static_cast<size_t>(n2() + 1) + static_cast<size_t>(j);
  }
  bool in_band(int i, int j, int ell) const {
    return ell >= lo_[cell(i, j)] && ell <= hi_[cell(i, j)];
  }
  size_t state_index(int i, int j, int ell, int dom_idx) const {
    return static_cast<size_t>(cell_offset_[cell(i, j)]) +
           static_cast<size_t>(ell - lo_[cell(i, j)]) * dom_[static_cast<size_t>(i)].size() +
           static_cast<size_t>(dom_idx);
  }
  void build_domains(Options opt);
  void build_bands(Options opt);
  void fill();

  WeightedString w1_, w2_;
  Threshold z_;
  std::string letters_;  // union alphabet driving transitions
  std::vector<int> letter_in_w1_, letter_in_w2_;
  std::vector<FreqArray> freq_;
  std::vector<std::vector<int32_t>> dom_;      // per i: indices into freq_[i]
  std::vector<std::vector<int32_t>> dom_inv_;  // per i: freq index -> domain index
  std::vector<int> lo_, hi_;
  std::vector<int64_t> cell_offset_;
  std::vector<int64_t> val_;
  std::vector<int8_t> parent_term_;    // 0 = none, 2/3/4 = recurrence branch
  std::vector<int16_t> parent_letter_;  // index into letters_
  std::vector<int32_t> origin_;        // filled by run_prefix_maxima
};

/// Forward and backward tables of the mitm tier plus the per-cell
/// combination step. The backward table is the forward computation on the
/// reversed inputs; accessors remap indices.
class MitmTables {
 public:
  MitmTables(const WeightedString& w1, const WeightedString& w2, const Threshold& z);

  int n1() const { return fwd_.n1(); }
  int n2() const { return fwd_.n2(); }
  const DpTable& forward() const { return fwd_; }
  const DpTable& backward_reversed() const { return bwd_; }

  std::pair<int, int> forward_band(int i, int j) const;
  /// Band of the backward table addressed in forward coordinates:
  /// suffixes starting at (i, j), i in [1..n1+1].
  std::pair<int, int> backward_band(int i, int j) const;

  MergeSet forward_set(int i, int j, int ell) const;
  /// Backward slice for suffixes starting at (i, j), same addressing as
  /// backward_band.
  MergeSet backward_set(int i, int j, int ell) const;

  struct CellBest {
    int total;
    int ell_l;
    int ell_r;
  };
  /// The two-pointer sweep for one (i, j) split; nullopt when no pair of
  /// in-band lengths merges.
  std::optional<CellBest> cell_best(int i, int j) const;

  /// Stitches the optimal supersequence for a winning cell.
  std::string stitch(int i, int j, int ell_l, int ell_r) const;

 private:
  DpTable fwd_;
  DpTable bwd_;
};

}  // namespace wscs
