#include "wscs/log_prob.hpp"

#include <cctype>
#include <numeric>

namespace wscs {

namespace {

uint64_t parse_digits(const std::string& s, size_t from, size_t to) {
  if (from == to) throw std::invalid_argument("empty number in threshold");
  if (to - from > 18) throw std::invalid_argument("threshold number too long");
  uint64_t v = 0;
  for (size_t k = from; k < to; ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw std::invalid_argument("invalid character in threshold");
    v = v * 10 + static_cast<uint64_t>(s[k] - '0');
  }
  return v;
}

}  // namespace

Threshold Threshold::from_rational(uint64_t num, uint64_t den, int scale_bits) {
  if (scale_bits < kMinScaleBits || scale_bits > kMaxScaleBits)
    throw std::invalid_argument("scale bits out of range");
  if (den == 0) throw std::invalid_argument("zero denominator in threshold");
  if (num < den) throw std::invalid_argument("threshold requires z >= 1");
  uint64_t g = std::gcd(num, den);
  num /= g;
  den /= g;
  long double x = (std::log2l(static_cast<long double>(num)) -
                   std::log2l(static_cast<long double>(den))) *
                  std::exp2l(static_cast<long double>(scale_bits));
  return Threshold(num, den, llroundl(x), scale_bits);
}

Threshold Threshold::parse(const std::string& text, int scale_bits) {
  if (text.empty()) throw std::invalid_argument("empty threshold");
  size_t slash = text.find('/');
  if (slash != std::string::npos) {
    uint64_t num = parse_digits(text, 0, slash);
    uint64_t den = parse_digits(text, slash + 1, text.size());
    return from_rational(num, den, scale_bits);
  }
  size_t dot = text.find('.');
  if (dot == std::string::npos) {
    return from_rational(parse_digits(text, 0, text.size()), 1, scale_bits);
  }
  uint64_t ipart = dot > 0 ? parse_digits(text, 0, dot) : 0;
  size_t fdigits = text.size() - dot - 1;
  if (fdigits == 0) return from_rational(ipart, 1, scale_bits);
  if (fdigits > 9) throw std::invalid_argument("too many fractional digits in threshold");
  uint64_t fpart = parse_digits(text, dot + 1, text.size());
  uint64_t den = 1;
  for (size_t k = 0; k < fdigits; ++k) den *= 10;
  return from_rational(ipart * den + fpart, den, scale_bits);
}

std::string Threshold::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace wscs
