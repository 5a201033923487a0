#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wscs/bench.hpp"
#include "wscs/generate.hpp"
#include "wscs/matched.hpp"
#include "wscs/solvers.hpp"
#include "wscs/wlcs.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;

void emit(const std::string& line, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << line << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw wscs::ParseError("cannot write file: " + out_path);
  out << line << "\n";
}

json witness_json(const wscs::SubsequenceWitness& w, int scale_bits) {
  return {{"positions", w.positions}, {"prob_log2", w.prob.log2_value(scale_bits)}};
}

std::vector<int64_t> parse_set(const std::string& text) {
  std::vector<int64_t> values;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      values.push_back(std::stoll(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) values.push_back(std::stoll(cur));
  if (values.empty()) throw wscs::ParseError("empty element set");
  return values;
}

json reduction_json(const wscs::ReductionInstance& inst) {
  return {{"p", inst.p},
          {"s_values", inst.s_values},
          {"t", inst.target},
          {"w1", json::parse(inst.w1.to_json())},
          {"w2", json::parse(inst.w2.to_json())},
          {"z", inst.z().to_string()}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted shortest common supersequence toolkit"};
  app.require_subcommand(1);

  int scale_bits = wscs::kDefaultScaleBits;
  app.add_option("--scale-bits", scale_bits, "fixed-point log scale F")
      ->capture_default_str();

  std::string w1_path, w2_path, w_path, ztext, tier_text = "mitm", out_path, s_text;
  int max_len = -1;

  auto* solve_cmd = app.add_subcommand("solve", "shortest common supersequence of two instances");
  solve_cmd->add_option("--w1", w1_path, "first instance file")->required();
  solve_cmd->add_option("--w2", w2_path, "second instance file")->required();
  solve_cmd->add_option("--z", ztext, "threshold z (decimal or rational)")->required();
  solve_cmd->add_option("--tier", tier_text, "baseline|cube|banded|mitm|oracle")
      ->capture_default_str();
  solve_cmd->add_option("--out", out_path, "write the result JSON to a file");

  auto* check_cmd = app.add_subcommand("check", "match a string against an instance");
  check_cmd->add_option("--s", s_text, "candidate supersequence")->required();
  check_cmd->add_option("--w", w_path, "instance file")->required();
  check_cmd->add_option("--z", ztext, "threshold z")->required();
  check_cmd->add_option("--out", out_path, "write the result JSON to a file");

  auto* enum_cmd = app.add_subcommand("enumerate", "list all strings matching above 1/z");
  enum_cmd->add_option("--w", w_path, "instance file")->required();
  enum_cmd->add_option("--z", ztext, "threshold z")->required();
  enum_cmd->add_option("--out", out_path, "write the result JSON to a file");

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force solve (tiny instances)");
  oracle_cmd->add_option("--w1", w1_path, "first instance file")->required();
  oracle_cmd->add_option("--w2", w2_path, "second instance file")->required();
  oracle_cmd->add_option("--z", ztext, "threshold z")->required();
  oracle_cmd->add_option("--max-len", max_len, "enumeration cutoff");
  oracle_cmd->add_option("--out", out_path, "write the result JSON to a file");

  uint64_t seed = 1;
  int gen_n = 6, gen_sigma = 2;
  double sharpness = 0.6;
  std::string out_prefix;
  auto* gen_cmd = app.add_subcommand("gen", "generate a random instance pair");
  gen_cmd->add_option("--seed", seed, "rng seed")->capture_default_str();
  gen_cmd->add_option("--n", gen_n, "length")->capture_default_str();
  gen_cmd->add_option("--sigma", gen_sigma, "alphabet size")->capture_default_str();
  gen_cmd->add_option("--sharpness", sharpness, "row peakedness in (0,1]")
      ->capture_default_str();
  gen_cmd->add_option("--out-prefix", out_prefix, "write <prefix>_w1.json and <prefix>_w2.json");
  gen_cmd->add_option("--out", out_path, "write the combined JSON to a file");

  wscs::BenchConfig bench_config;
  std::string z_list = "4,16,64,256", tier_list = "banded,mitm";
  auto* bench_cmd = app.add_subcommand("bench", "state-count scaling harness");
  bench_cmd->add_option("--n", bench_config.n, "length")->capture_default_str();
  bench_cmd->add_option("--sigma", bench_config.sigma, "alphabet size")->capture_default_str();
  bench_cmd->add_option("--z-list", z_list, "comma-separated thresholds")->capture_default_str();
  bench_cmd->add_option("--seeds", bench_config.seeds, "instances per threshold")
      ->capture_default_str();
  bench_cmd->add_option("--seed-base", bench_config.seed_base, "first seed")
      ->capture_default_str();
  bench_cmd->add_option("--sharpness", bench_config.sharpness, "row peakedness")
      ->capture_default_str();
  bench_cmd->add_option("--tiers", tier_list, "comma-separated tiers")->capture_default_str();
  bench_cmd->add_option("--out", out_path, "write the report JSON to a file");

  auto* wlcs_cmd = app.add_subcommand("wlcs", "subset-sum reduction tooling");
  wlcs_cmd->require_subcommand(1);
  std::string set_text;
  int64_t target = 0;
  int p = 2;
  auto* reduce_cmd = wlcs_cmd->add_subcommand("reduce", "emit the derived WLCS instance");
  reduce_cmd->add_option("--set", set_text, "comma-separated elements")->required();
  reduce_cmd->add_option("--target", target, "subset sum target")->required();
  reduce_cmd->add_option("--p", p, "reduction parameter in [2..n]")->required();
  reduce_cmd->add_option("--out", out_path, "write the instance JSON to a file");
  auto* verify_cmd = wlcs_cmd->add_subcommand("verify", "check the reduction equivalence");
  verify_cmd->add_option("--set", set_text, "comma-separated elements")->required();
  verify_cmd->add_option("--target", target, "subset sum target")->required();
  verify_cmd->add_option("--out", out_path, "write the report JSON to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitError;
  }

  try {
    if (solve_cmd->parsed() || oracle_cmd->parsed()) {
      auto tier = oracle_cmd->parsed() ? wscs::Tier::oracle : wscs::tier_from_name(tier_text);
      if (!tier) throw wscs::ParseError("unknown tier: " + tier_text);
      auto w1 = wscs::WeightedString::load_json_file(w1_path, scale_bits);
      auto w2 = wscs::WeightedString::load_json_file(w2_path, scale_bits);
      auto z = wscs::Threshold::parse(ztext, scale_bits);
      wscs::WscsResult r = *tier == wscs::Tier::oracle
                               ? wscs::solve_oracle(w1, w2, z, max_len)
                               : wscs::solve(*tier, w1, w2, z);
      if (r.infeasible) {
        emit(json{{"infeasible", true}, {"states_visited", r.states_visited}}.dump(), out_path);
        return kExitInfeasible;
      }
      json doc{{"length", r.length},
               {"supersequence", r.supersequence},
               {"witness1", witness_json(r.witness1, scale_bits)},
               {"witness2", witness_json(r.witness2, scale_bits)},
               {"states_visited", r.states_visited}};
      emit(doc.dump(), out_path);
      return kExitOk;
    }

    if (check_cmd->parsed()) {
      auto w = wscs::WeightedString::load_json_file(w_path, scale_bits);
      auto z = wscs::Threshold::parse(ztext, scale_bits);
      auto wit = wscs::check_supersequence(s_text, w, z);
      if (!wit) {
        emit(json{{"infeasible", true}}.dump(), out_path);
        return kExitInfeasible;
      }
      emit(witness_json(*wit, scale_bits).dump(), out_path);
      return kExitOk;
    }

    if (enum_cmd->parsed()) {
      auto w = wscs::WeightedString::load_json_file(w_path, scale_bits);
      auto z = wscs::Threshold::parse(ztext, scale_bits);
      auto matched = wscs::matched_set(w, z);
      json list = json::array();
      for (const auto& m : matched)
        list.push_back({{"prob_log2", m.prob.log2_value(scale_bits)}, {"string", m.text}});
      emit(json{{"matched", list}}.dump(), out_path);
      return kExitOk;
    }

    if (gen_cmd->parsed()) {
      auto [w1, w2] = wscs::generate_instance(seed, gen_n, gen_sigma, sharpness, scale_bits);
      if (!out_prefix.empty()) {
        emit(w1.to_json(), out_prefix + "_w1.json");
        emit(w2.to_json(), out_prefix + "_w2.json");
      }
      emit(json{{"w1", json::parse(w1.to_json())}, {"w2", json::parse(w2.to_json())}}.dump(),
           out_path);
      return kExitOk;
    }

    if (bench_cmd->parsed()) {
      bench_config.scale_bits = scale_bits;
      bench_config.z_values.clear();
      std::string cur;
      for (char c : z_list + ",") {
        if (c == ',') {
          if (!cur.empty()) bench_config.z_values.push_back(cur);
          cur.clear();
        } else {
          cur += c;
        }
      }
      bench_config.tiers.clear();
      for (char c : tier_list + ",") {
        if (c == ',') {
          if (!cur.empty()) {
            auto t = wscs::tier_from_name(cur);
            if (!t) throw wscs::ParseError("unknown tier: " + cur);
            bench_config.tiers.push_back(*t);
          }
          cur.clear();
        } else {
          cur += c;
        }
      }
      wscs::BenchReport report = wscs::run_bench(bench_config);
      emit(report.to_json(), out_path);
      return kExitOk;
    }

    if (reduce_cmd->parsed()) {
      auto inst = wscs::construct_reduction(parse_set(set_text), target, p, scale_bits);
      emit(reduction_json(inst).dump(), out_path);
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      auto rep = wscs::verify_reduction(parse_set(set_text), target, scale_bits);
      json per_p = json::array();
      for (const auto& e : rep.per_p)
        per_p.push_back({{"p", e.p}, {"wlcs_length", e.wlcs_length}, {"meets", e.meets}});
      json doc{{"equivalence", rep.equivalence_holds},
               {"per_p", per_p},
               {"s_values", rep.s_values},
               {"subset_sum_solvable", rep.subset_sum_solvable},
               {"t", rep.target}};
      doc["subset"] = rep.subset ? json(*rep.subset) : json(nullptr);
      doc["witness_p"] = rep.witness_p ? json(*rep.witness_p) : json(nullptr);
      emit(doc.dump(), out_path);
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
