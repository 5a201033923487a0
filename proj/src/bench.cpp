#include "wscs/bench.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "wscs/generate.hpp"

namespace wscs {

namespace {

double fit_slope(const std::vector<std::pair<double, double>>& xy) {
  if (xy.size() < 2) return 0.0;
  double mx = 0.0, my = 0.0;
  for (auto [x, y] : xy) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(xy.size());
  my /= static_cast<double>(xy.size());
  double num = 0.0, den = 0.0;
  for (auto [x, y] : xy) {
    num += (x - mx) * (y - my);
    den += (x - mx) * (x - mx);
  }
  return den == 0.0 ? 0.0 : num / den;
}

}  // namespace

BenchReport run_bench(const BenchConfig& config) {
  BenchReport report;
  report.config = config;

  for (const std::string& ztext : config.z_values) {
    Threshold z = Threshold::parse(ztext, config.scale_bits);
    for (int k = 0; k < config.seeds; ++k) {
      uint64_t seed = config.seed_base + static_cast<uint64_t>(k);
      auto [w1, w2] = generate_instance(seed, config.n, config.sigma, config.sharpness,
                                        config.scale_bits);
      bool have_len = false;
      bool ref_infeasible = false;
      int ref_len = 0;
      for (Tier tier : config.tiers) {
        auto t0 = std::chrono::steady_clock::now();
        WscsResult r = solve(tier, w1, w2, z);
        auto t1 = std::chrono::steady_clock::now();
        double millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
        if (!have_len) {
          have_len = true;
          ref_infeasible = r.infeasible;
          ref_len = r.length;
        } else if (r.infeasible != ref_infeasible || (!r.infeasible && r.length != ref_len)) {
          throw std::logic_error("tier disagreement on seed " + std::to_string(seed) +
                                 " at z=" + ztext);
        }
        report.records.push_back({seed, config.n, config.sigma, ztext, tier, r.infeasible,
                                  r.length, r.states_visited, millis});
      }
    }
  }

  for (Tier tier : config.tiers) {
    std::vector<std::pair<double, double>> xy;
    for (const std::string& ztext : config.z_values) {
      Threshold z = Threshold::parse(ztext, config.scale_bits);
      double sum = 0.0;
      int count = 0;
      for (const BenchRecord& rec : report.records) {
        if (rec.tier != tier || rec.z != ztext) continue;
        sum += static_cast<double>(rec.states);
        ++count;
      }
      if (count > 0) xy.push_back({std::log(z.z_value()), std::log(sum / count)});
    }
    report.state_exponents[tier_name(tier)] = fit_slope(xy);
  }
  return report;
}

std::string BenchReport::to_json() const {
  nlohmann::json doc;
  doc["config"] = {{"n", config.n},
                   {"sigma", config.sigma},
                   {"z_values", config.z_values},
                   {"seeds", config.seeds},
                   {"sharpness", config.sharpness},
                   {"scale_bits", config.scale_bits}};
  auto records_json = nlohmann::json::array();
  for (const BenchRecord& r : records) {
    records_json.push_back({{"seed", r.seed},
                            {"n", r.n},
                            {"sigma", r.sigma},
                            {"z", r.z},
                            {"tier", tier_name(r.tier)},
                            {"infeasible", r.infeasible},
                            {"length", r.length},
                            {"states", r.states},
                            {"millis", r.millis}});
  }
  doc["records"] = records_json;
  doc["state_exponents"] = state_exponents;
  return doc.dump();
}

}  // namespace wscs
