#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wscs/solvers.hpp"

namespace wscs {

struct BenchConfig {
  int n = 10;
  int sigma = 4;
  std::vector<std::string> z_values = {"4", "16", "64", "256"};
  int seeds = 20;
  uint64_t seed_base = 1;
  std::vector<Tier> tiers = {Tier::banded, Tier::mitm};
  double sharpness = 0.78;
  int scale_bits = kDefaultScaleBits;
};

struct BenchRecord {
  uint64_t seed;
  int n;
  int sigma;
  std::string z;
  Tier tier;
  bool infeasible;
  int length;
  int64_t states;
  double millis;
};

/// Per-instance solve records plus, per tier, the least-squares slope of
/// log(mean states) against log(z). State counts, not wall time, carry the
/// scaling signal; times are recorded for orientation only.
struct BenchReport {
  BenchConfig config;
  std::vector<BenchRecord> records;
  std::map<std::string, double> state_exponents;  // tier name -> fitted slope

  std::string to_json() const;
};

/// Runs all tiers on every (z, seed) instance and checks that lengths agree
/// across tiers before recording them.
BenchReport run_bench(const BenchConfig& config);

}  // namespace wscs
