#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace wscs {

inline constexpr int kDefaultScaleBits = 40;
inline constexpr int kMinScaleBits = 8;
inline constexpr int kMaxScaleBits = 56;

/// A probability stored as an exact fixed-point base-2 logarithm:
/// quanta = round(log2(p) * 2^F). Probability zero is a distinguished
/// IMPOSSIBLE value, absorbing under multiplication and smaller than
/// every finite value under comparison. Products of probabilities are
/// integer sums of quanta, so chains of multiplications never drift.
class LogProb {
 public:
  constexpr LogProb() : quanta_(kImpossibleQuanta) {}

  static constexpr LogProb one() { return LogProb(0); }
  static constexpr LogProb impossible() { return LogProb(kImpossibleQuanta); }

  static constexpr LogProb from_quanta(int64_t q) { return LogProb(q); }

  // Quantizes a probability in [0, 1]. Rounds log2(p)*2^F to the nearest
  // integer, halves away from zero.
  static LogProb from_probability(double p, int scale_bits = kDefaultScaleBits) {
    check_scale(scale_bits);
    if (p < 0.0 || p > 1.0 || std::isnan(p))
      throw std::invalid_argument("probability outside [0,1]");
    if (p == 0.0) return impossible();
    long double x = std::log2l(static_cast<long double>(p)) * exp2i(scale_bits);
    return LogProb(llroundl(x));
  }

  // Exact quantization of 2^(num/den): quanta = round(num * 2^F / den),
  // halves away from zero. Used where the exponent is a known rational.
  static LogProb from_log2_rational(int64_t num, int64_t den,
                                    int scale_bits = kDefaultScaleBits) {
    check_scale(scale_bits);
    if (den <= 0) throw std::invalid_argument("nonpositive denominator");
    __int128 scaled = static_cast<__int128>(num) << scale_bits;
    __int128 d = den;
    __int128 q = scaled >= 0 ? (2 * scaled + d) / (2 * d) : -((2 * -scaled + d) / (2 * d));
    return LogProb(static_cast<int64_t>(q));
  }

  constexpr bool is_impossible() const { return quanta_ == kImpossibleQuanta; }
  constexpr int64_t quanta() const { return quanta_; }

  double log2_value(int scale_bits = kDefaultScaleBits) const {
    if (is_impossible()) return -std::numeric_limits<double>::infinity();
    return static_cast<double>(quanta_) / static_cast<double>(exp2i(scale_bits));
  }

  double probability(int scale_bits = kDefaultScaleBits) const {
    if (is_impossible()) return 0.0;
    return std::exp2(log2_value(scale_bits));
  }

  friend constexpr LogProb operator*(LogProb a, LogProb b) {
    if (a.is_impossible() || b.is_impossible()) return impossible();
    return LogProb(a.quanta_ + b.quanta_);
  }
  LogProb& operator*=(LogProb o) { return *this = *this * o; }

  // Division is only defined between finite values.
  friend LogProb operator/(LogProb a, LogProb b) {
    if (a.is_impossible() || b.is_impossible())
      throw std::logic_error("division involving probability zero");
    return LogProb(a.quanta_ - b.quanta_);
  }

  friend constexpr auto operator<=>(LogProb a, LogProb b) { return a.quanta_ <=> b.quanta_; }
  friend constexpr bool operator==(LogProb a, LogProb b) { return a.quanta_ == b.quanta_; }

 private:
  explicit constexpr LogProb(int64_t q) : quanta_(q) {}

  static constexpr int64_t kImpossibleQuanta = std::numeric_limits<int64_t>::min();

  static long double exp2i(int bits) { return std::exp2l(static_cast<long double>(bits)); }

  static void check_scale(int scale_bits) {
    if (scale_bits < kMinScaleBits || scale_bits > kMaxScaleBits)
      throw std::invalid_argument("scale bits out of range");
  }

  int64_t quanta_;
};

/// The threshold 1/z, z >= 1, parsed from a decimal ("2.5") or rational
/// ("5/2") string. Keeps the exact rational alongside the quantized
/// z_log = round(log2(z) * 2^F); all feasibility comparisons happen on
/// quanta against -z_log.
class Threshold {
 public:
  static Threshold from_rational(uint64_t num, uint64_t den,
                                 int scale_bits = kDefaultScaleBits);
  static Threshold parse(const std::string& text, int scale_bits = kDefaultScaleBits);

  int64_t log2z_quanta() const { return z_log_; }
  LogProb min_prob() const { return LogProb::from_quanta(-z_log_); }

  bool meets(LogProb p) const { return !p.is_impossible() && p.quanta() >= -z_log_; }
  // Half-threshold test for sqrt(z): kept when 2*log(p) >= -z_log, which is
  // permissive at the boundary so no feasible split is lost.
  bool meets_sqrt(LogProb p) const { return !p.is_impossible() && 2 * p.quanta() >= -z_log_; }

  uint64_t floor_z() const { return num_ / den_; }
  // floor(2 * log2(z)), the band half-width of the length dimension.
  int band_halfwidth() const { return static_cast<int>((2 * z_log_) >> scale_bits_); }

  uint64_t num() const { return num_; }
  uint64_t den() const { return den_; }
  int scale_bits() const { return scale_bits_; }
  double z_value() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

 private:
  Threshold(uint64_t num, uint64_t den, int64_t z_log, int scale_bits)
      : num_(num), den_(den), z_log_(z_log), scale_bits_(scale_bits) {}

  uint64_t num_;
  uint64_t den_;
  int64_t z_log_;
  int scale_bits_;
};

}  // namespace wscs
