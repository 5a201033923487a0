#include "wscs/generate.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace wscs {

namespace {

// Portable uniform in (0,1); std distributions are not bit-stable across
// standard libraries.
double next_uniform(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace

std::pair<WeightedString, WeightedString> generate_instance(uint64_t seed, int n, int sigma,
                                                            double sharpness,
                                                            int scale_bits) {
  if (n < 0) throw std::invalid_argument("negative length");
  if (sigma < 1 || sigma > 26) throw std::invalid_argument("sigma out of range");
  if (!(sharpness > 0.0) || sharpness > 1.0)
    throw std::invalid_argument("sharpness must lie in (0,1]");

  std::mt19937_64 rng(seed);
  std::string alphabet;
  for (int c = 0; c < sigma; ++c) alphabet += static_cast<char>('a' + c);

  auto draw_string = [&]() {
    std::vector<std::vector<double>> rows;
    rows.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      std::vector<double> row(static_cast<size_t>(sigma));
      double sum = 0.0;
      for (double& p : row) {
        p = -std::log(next_uniform(rng));  // exponential draw -> Dirichlet(1)
        sum += p;
      }
      for (double& p : row) p /= sum;
      // Temper toward the mode: mix the draw with the deterministic row that
      // puts all mass on the argmax. Keeps the relative spread of the minor
      // letters while sharpness pins how much mass the mode holds.
      size_t mode = 0;
      for (size_t c = 1; c < row.size(); ++c)
        if (row[c] > row[mode]) mode = c;
      for (size_t c = 0; c < row.size(); ++c) {
        row[c] *= 1.0 - sharpness;
        if (c == mode) row[c] += sharpness;
      }
      rows.push_back(std::move(row));
    }
    return WeightedString::from_rows(alphabet, std::move(rows), scale_bits);
  };

  WeightedString w1 = draw_string();
  WeightedString w2 = draw_string();
  return {std::move(w1), std::move(w2)};
}

}  // namespace wscs
