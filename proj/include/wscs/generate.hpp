#pragma once

#include <cstdint>
#include <utility>

#include "wscs/weighted_string.hpp"

namespace wscs {

/// Deterministic random instance pair over the first sigma letters of the
/// latin alphabet. Each row is a uniform simplex draw tempered toward its
/// mode: sharpness 0.5 keeps the draw, 1.0 collapses it to a single letter,
/// values toward 0 flatten it.
std::pair<WeightedString, WeightedString> generate_instance(uint64_t seed, int n, int sigma,
                                                            double sharpness,
                                                            int scale_bits = kDefaultScaleBits);

}  // namespace wscs
