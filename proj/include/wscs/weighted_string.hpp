#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "wscs/log_prob.hpp"

namespace wscs {

/// Raised for malformed instance documents and ill-formed inputs.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A weighted string (position weight matrix): an ordered alphabet of
/// single-character symbols and one probability row per position. Rows are
/// validated to sum to 1 within 1e-6 before quantization; the quantized
/// LogProb entries are authoritative afterwards. Immutable once built.
class WeightedString {
 public:
  static constexpr double kRowSumTolerance = 1e-6;

  static WeightedString from_rows(const std::string& alphabet,
                                  std::vector<std::vector<double>> rows,
                                  int scale_bits = kDefaultScaleBits);

  // For callers that already hold exact quanta (the hardness reduction);
  // source_rows are kept for serialization only.
  static WeightedString from_quantized_rows(const std::string& alphabet,
                                            std::vector<std::vector<LogProb>> rows,
                                            std::vector<std::vector<double>> source_rows,
                                            int scale_bits = kDefaultScaleBits);

  // Instance document format: {"alphabet":["a","b"],"rows":[[1.0,0.0],...]}
  static WeightedString parse_json(const std::string& text,
                                   int scale_bits = kDefaultScaleBits);
  static WeightedString load_json_file(const std::string& path,
                                       int scale_bits = kDefaultScaleBits);
  std::string to_json() const;

  int length() const { return static_cast<int>(rows_.size()); }
  int sigma() const { return static_cast<int>(alphabet_.size()); }
  const std::string& alphabet() const { return alphabet_; }
  char symbol(int ci) const { return alphabet_[static_cast<size_t>(ci)]; }
  int symbol_index(char c) const { return symbol_index_[static_cast<unsigned char>(c)]; }
  int scale_bits() const { return scale_bits_; }

  // pos is 0-based.
  LogProb prob(int pos, int ci) const {
    return rows_[static_cast<size_t>(pos)][static_cast<size_t>(ci)];
  }
  LogProb prob_of(int pos, char c) const {
    int ci = symbol_index(c);
    return ci < 0 ? LogProb::impossible() : prob(pos, ci);
  }
  double source_prob(int pos, int ci) const {
    return source_rows_[static_cast<size_t>(pos)][static_cast<size_t>(ci)];
  }

  WeightedString reversed() const;

  friend bool operator==(const WeightedString& a, const WeightedString& b) {
    return a.alphabet_ == b.alphabet_ && a.rows_ == b.rows_ &&
           a.scale_bits_ == b.scale_bits_;
  }

 private:
  WeightedString() = default;

  std::string alphabet_;
  std::array<int, 256> symbol_index_{};
  int scale_bits_ = kDefaultScaleBits;
  std::vector<std::vector<double>> source_rows_;
  std::vector<std::vector<LogProb>> rows_;
};

/// P(S, W) for |S| == |W|: the quanta-sum of the per-position entries,
/// IMPOSSIBLE as soon as one factor is zero.
LogProb match_probability(std::string_view s, const WeightedString& w);

/// The letterwise most probable string; ties go to the smallest alphabet index.
std::string heavy_string(const WeightedString& w);

}  // namespace wscs
