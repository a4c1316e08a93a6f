//  Copyright 2026 The hn-games Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hn/hn.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyViolation = 1;
constexpr int kExitDomainError = 2;
constexpr int kExitParseError = 3;

int run_validate(const std::string& path) {
  hn::Analysis an(hn::load_game_file(path));
  std::cout << hn::render_validate_summary(an.report(), an);
  return kExitOk;
}

int run_report(const std::string& path, bool as_json) {
  hn::Analysis an(hn::load_game_file(path));
  hn::GameReport r = an.report();
  if (as_json)
    std::cout << hn::report_to_json(r, an).dump(2) << "\n";
  else
    std::cout << hn::render_report(r, an);
  return kExitOk;
}

int run_filtration(const std::string& path, bool jordan_holder, bool all, bool verify) {
  hn::Analysis an(hn::load_game_file(path));
  if (jordan_holder) {
    if (verify) std::cerr << "note: --verify applies to the canonical filtration only\n";
    auto filtrations = an.jordan_holder(all);
    for (size_t i = 0; i < filtrations.size(); ++i) {
      if (all) std::cout << "filtration " << (i + 1) << " of " << filtrations.size() << "\n";
      std::cout << hn::render_filtration(an, filtrations[i]);
    }
    return kExitOk;
  }
  hn::Filtration f = an.hn_filtration();
  std::cout << hn::render_filtration(an, f);
  if (verify) {
    hn::VerifyResult vr = an.verify_filtration(f);
    std::cout << "verify: " << (vr.ok ? "ok" : ("failed: " + vr.diagnostic)) << "\n";
    if (!vr.ok) return kExitDomainError;
  }
  return kExitOk;
}

int run_dot(const std::string& path, const std::string& out_path) {
  hn::Analysis an(hn::load_game_file(path));
  std::string dot = hn::to_dot(an);
  if (out_path.empty()) {
    std::cout << dot;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) hn::raise(hn::errc::parse_error, "cannot write '" + out_path + "'");
    out << dot;
  }
  return kExitOk;
}

struct FuzzStats {
  int instances = 0;
  int table_games = 0;
  int skipped_tables = 0;
  long long checks = 0;
};

int fail_fuzz(const hn::Game& game, std::uint64_t seed, const std::string& check,
              const std::string& message, const std::string& out_dir) {
  std::string path = out_dir + "/hn-fuzz-counterexample-seed" + std::to_string(seed) + ".json";
  std::ofstream out(path, std::ios::binary);
  if (out) out << hn::serialize_game(game);
  std::cerr << "FAIL seed=" << seed << " check=" << check << ": " << message << "\n";
  std::cerr << "counterexample written to " << path << "\n";
  return kExitPropertyViolation;
}

int run_fuzz(std::uint64_t seed, int count, int size, const std::string& out_dir,
             bool inject_fault) {
  FuzzStats stats;
  for (int i = 0; i < count; ++i) {
    std::uint64_t s = seed + static_cast<std::uint64_t>(i);
    hn::RandomInstanceConfig cfg;
    cfg.seed = s;
    cfg.poset_size = size;
    cfg.payoff_kind = hn::RandomInstanceConfig::PayoffKind::modular_degree_rank;
    hn::GeneratedInstance inst = hn::random_downset_instance(cfg);
    hn::Game game = hn::random_payoff(cfg, inst);

    try {
      hn::Analysis an(game);
      struct NamedCheck {
        const char* name;
        hn::CheckResult result;
      };
      NamedCheck named[] = {
          {"oracle-equivalence", hn::check_engine_matches_brute(an, inject_fault)},
          {"hn-uniqueness", hn::check_hn_uniqueness(an)},
          {"equivalence-theorem", hn::check_equivalence_theorem(an)},
          {"duality", hn::check_duality(an)},
          {"threshold-inequalities", hn::check_threshold_inequalities(an)},
      };
      for (const auto& c : named) {
        ++stats.checks;
        if (c.result) return fail_fuzz(game, s, c.name, *c.result, out_dir);
      }
      if (hn::serialize_game(hn::dualize(hn::dualize(game))) != hn::serialize_game(game))
        return fail_fuzz(game, s, "duality", "double dual serialization differs", out_dir);
      ++stats.checks;
    } catch (const hn::Error& e) {
      return fail_fuzz(game, s, "engine", e.what(), out_dir);
    }
    ++stats.instances;

    if (size <= 3) {
      cfg.payoff_kind = hn::RandomInstanceConfig::PayoffKind::random_table_convex;
      try {
        hn::Game table = hn::random_payoff(cfg, inst);
        hn::Analysis an(table);
        if (auto r = hn::check_engine_matches_brute(an, false))
          return fail_fuzz(table, s, "oracle-equivalence", *r, out_dir);
        if (auto r = hn::check_hn_uniqueness(an))
          return fail_fuzz(table, s, "hn-uniqueness", *r, out_dir);
        if (auto r = hn::check_threshold_inequalities(an))
          return fail_fuzz(table, s, "threshold-inequalities", *r, out_dir);
        stats.checks += 3;
        ++stats.table_games;
      } catch (const hn::Error& e) {
        if (e.code() != hn::errc::rejection_budget_exceeded) throw;
        ++stats.skipped_tables;
      }

      cfg.payoff_kind = hn::RandomInstanceConfig::PayoffKind::random_table_any;
      hn::Game any_table = hn::random_payoff(cfg, inst);
      hn::Analysis an(any_table);
      if (auto r = hn::check_engine_matches_brute(an, false))
        return fail_fuzz(any_table, s, "oracle-equivalence", *r, out_dir);
      if (auto r = hn::check_convexity_witness(any_table))
        return fail_fuzz(any_table, s, "convexity-witness", *r, out_dir);
      stats.checks += 2;
      ++stats.table_games;
    }
  }
  std::cout << "fuzz: " << stats.instances << " modular instances, " << stats.table_games
            << " table games (" << stats.skipped_tables << " skipped), " << stats.checks
            << " checks, all invariants hold\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hn: exact solver for Harder-Narasimhan games on finite bounded lattices"};
  app.require_subcommand(1);

  std::string path;
  std::string out_path;
  bool flag_jh = false, flag_all = false, flag_verify = false, flag_json = false;
  std::uint64_t fuzz_seed = 1;
  int fuzz_count = 100;
  int fuzz_size = 4;
  std::string fuzz_out = ".";
  bool fuzz_inject = false;

  CLI::App* validate = app.add_subcommand("validate", "check a game file and print a summary");
  validate->add_option("path", path, "game file")->required();

  CLI::App* report = app.add_subcommand("report", "print thresholds, St, and stability flags");
  report->add_option("path", path, "game file")->required();
  report->add_flag("--json", flag_json, "emit the machine-readable report");

  CLI::App* filtration =
      app.add_subcommand("filtration", "print the canonical filtration with step thresholds");
  filtration->add_option("path", path, "game file")->required();
  filtration->add_flag("--jordan-holder", flag_jh, "print Jordan-Hölder filtration(s) instead");
  filtration->add_flag("--all", flag_all, "with --jordan-holder, enumerate all of them");
  filtration->add_flag("--verify", flag_verify, "re-verify the canonical filtration");

  CLI::App* dot = app.add_subcommand("dot", "emit the Hasse diagram in DOT form");
  dot->add_option("path", path, "game file")->required();
  dot->add_option("--out", out_path, "output file (default: stdout)");

  CLI::App* fuzz = app.add_subcommand("fuzz", "run the oracle invariants on random instances");
  fuzz->add_option("--seed", fuzz_seed, "base seed (default 1)");
  fuzz->add_option("--count", fuzz_count, "number of instances (default 100)");
  fuzz->add_option("--size", fuzz_size, "generator poset size, 1..7 (default 4)");
  fuzz->add_option("--out", fuzz_out, "directory for counterexample files (default .)");
  fuzz->add_flag("--inject-fault", fuzz_inject,
                 "test-only: perturb the engine to prove a fault is caught");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return run_validate(path);
    if (report->parsed()) return run_report(path, flag_json);
    if (filtration->parsed()) return run_filtration(path, flag_jh, flag_all, flag_verify);
    if (dot->parsed()) return run_dot(path, out_path);
    if (fuzz->parsed()) return run_fuzz(fuzz_seed, fuzz_count, fuzz_size, fuzz_out, fuzz_inject);
  } catch (const hn::Error& e) {
    std::cerr << "error " << e.what() << "\n";
    return e.code() == hn::errc::parse_error ? kExitParseError : kExitDomainError;
  } catch (const std::exception& e) {
    std::cerr << "error Internal: " << e.what() << "\n";
    return kExitDomainError;
  }
  return kExitOk;
}
