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

// Acceptance suite: runs every shipped correctness criterion at its stated
// tolerance (everything here is exact) and prints one PASS/FAIL line per
// criterion. Usage: hn_acceptance [path-to-hn-cli] [path-to-fixtures].

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "test_support.hpp"

using namespace hn;

namespace {

struct Runner {
  int failures = 0;

  void run(int number, const std::string& title,
           const std::function<std::optional<std::string>()>& body) {
    auto start = std::chrono::steady_clock::now();
    std::optional<std::string> failure;
    try {
      failure = body();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    if (failure) {
      ++failures;
      std::cout << "criterion " << number << ": FAIL  " << title << " (" << ms << " ms)\n"
                << "  -> " << *failure << "\n";
    } else {
      std::cout << "criterion " << number << ": PASS  " << title << " (" << ms << " ms)\n";
    }
  }
};

Rational rnd_rat(std::mt19937_64& rng) {
  long long num = static_cast<long long>(rng() % 19) - 9;
  long long den = 1 + static_cast<long long>(rng() % 4);
  return Rational(num, den);
}

Rational rmin(const Rational& a, const Rational& b) { return a < b ? a : b; }
Rational rmax(const Rational& a, const Rational& b) { return a > b ? a : b; }

// Results of the shared 100+ instance sweep, reported under several criteria.
struct SweepResults {
  int instances = 0;
  std::size_t pair_checks = 0;
  std::optional<std::string> uniqueness_failure;
  std::optional<std::string> oracle_failure;
  std::optional<std::string> equivalence_failure;
  std::optional<std::string> inequality_failure;
  std::optional<std::string> duality_failure;
};

SweepResults run_sweep() {
  SweepResults out;
  const int sizes[] = {3, 4, 5, 5};
  for (int i = 0; out.instances < 100 || out.pair_checks < 10000; ++i) {
    if (i > 2000) break;
    RandomInstanceConfig cfg;
    cfg.seed = 1000 + static_cast<std::uint64_t>(i);
    cfg.poset_size = sizes[i % 4];
    GeneratedInstance inst = random_downset_instance(cfg);
    Game game = random_payoff(cfg, inst);
    Analysis an(game);
    ++out.instances;
    out.pair_checks += game.pairs().size();
    auto note = [&](std::optional<std::string>& slot, const CheckResult& r) {
      if (r && !slot) slot = "seed " + std::to_string(cfg.seed) + ": " + *r;
    };
    note(out.oracle_failure, check_engine_matches_brute(an));
    note(out.uniqueness_failure, check_hn_uniqueness(an));
    note(out.equivalence_failure, check_equivalence_theorem(an));
    note(out.inequality_failure, check_threshold_inequalities(an));
    note(out.duality_failure, check_duality(an));
    if (!out.duality_failure &&
        serialize_game(dualize(dualize(game))) != serialize_game(game))
      out.duality_failure = "seed " + std::to_string(cfg.seed) + ": double dual serialization";
  }
  return out;
}

std::optional<std::string> convex_table_inequalities() {
  int found = 0;
  for (std::uint64_t seed = 1; found < 50 && seed < 4000; ++seed) {
    RandomInstanceConfig cfg;
    cfg.seed = 50000 + seed;
    cfg.poset_size = 1 + static_cast<int>(seed % 3);
    cfg.payoff_kind = RandomInstanceConfig::PayoffKind::random_table_convex;
    cfg.rejection_budget = 400;
    GeneratedInstance inst = random_downset_instance(cfg);
    std::optional<Game> game;
    try {
      game = random_payoff(cfg, inst);
    } catch (const Error& e) {
      if (e.code() == errc::rejection_budget_exceeded) continue;  // dense lattice, next seed
      throw;
    }
    Analysis an(*game);
    if (!is_convex(*game).holds) return "rejection sampler returned a non-convex table";
    if (auto r = check_threshold_inequalities(an))
      return "table seed " + std::to_string(cfg.seed) + ": " + *r;
    if (auto r = check_engine_matches_brute(an))
      return "table seed " + std::to_string(cfg.seed) + ": " + *r;
    ++found;
  }
  if (found < 50) return "could not sample 50 convex tables";
  return std::nullopt;
}

struct CliRun {
  int exit_code = -1;
  std::string output;
};

CliRun run_cli(const std::string& cli, const std::string& args) {
  CliRun r;
  std::string cmd = cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.output.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";
  std::string fixtures = argc > 2 ? argv[2] : "fixtures";
  Runner runner;

  runner.run(1, "three-chain closed form, 200 seeded rational triples", [&]() -> std::optional<std::string> {
    std::mt19937_64 rng(20260101);
    for (int t = 0; t < 200; ++t) {
      Rational a = rnd_rat(rng), b = rnd_rat(rng), c = rnd_rat(rng);
      Analysis an(hntest::three_chain_game(a, b, c));
      if (!(an.mu_a_star() == Value::of(rmin(rmax(a, c), b))))
        return "mu_A* != (a v c) ^ b at trial " + std::to_string(t);
      if (an.semistable() != (a <= b)) return "semistability != (a <= b) at trial " + std::to_string(t);
      if (a > b) {
        auto st = an.destabilizing_set();
        if (st.size() != 1 || an.lattice().label(st[0]) != "x")
          return "St != {x} when a > b at trial " + std::to_string(t);
      }
    }
    return std::nullopt;
  });

  runner.run(2, "four-chain instance: mu_A*=2, mu_B*=1, semistable, no equilibrium", [&]() -> std::optional<std::string> {
    Analysis an(hntest::four_chain_game(Rational(1), Rational(0), Rational(3), Rational(4),
                                        Rational(2), Rational(1, 2)));
    GameReport r = an.report();
    if (!(r.mu_a_star == Value::of(2))) return "mu_A* != 2";
    if (!(r.mu_b_star == Value::of(1))) return "mu_B* != 1";
    if (!r.flags.semistable) return "not semistable";
    if (r.flags.nash) return "unexpected equilibrium";
    if (!an.domain().lt(r.mu_b_star, r.mu_a_star)) return "mu_B* is not strictly below mu_A*";
    return std::nullopt;
  });

  runner.run(3, "partial-order case: St = {x, top} and semistable", [&]() -> std::optional<std::string> {
    Analysis an(hntest::poset_three_chain_game());
    auto st = an.destabilizing_set();
    if (hntest::chain_labels(an.lattice(), st) != std::vector<std::string>{"x", "top"})
      return "St != {x, top}";
    if (!an.semistable()) return "not semistable";
    return std::nullopt;
  });

  SweepResults sweep;

  runner.run(4, "uniqueness: exactly one admissible chain on each of >=100 downset instances", [&]() -> std::optional<std::string> {
    sweep = run_sweep();
    if (sweep.instances < 100)
      return "only " + std::to_string(sweep.instances) + " instances generated";
    return sweep.uniqueness_failure;
  });

  runner.run(5, "oracle equivalence on every sweep strict pair (>=10^4 checks)", [&]() -> std::optional<std::string> {
    if (sweep.pair_checks < 10000)
      return "only " + std::to_string(sweep.pair_checks) + " pair checks";
    return sweep.oracle_failure;
  });

  runner.run(6, "equivalence theorem and first-mover identities on every sweep instance", [&]() -> std::optional<std::string> {
    return sweep.equivalence_failure;
  });

  runner.run(7, "threshold inequality suite on sweep instances plus 50 convex tables", [&]() -> std::optional<std::string> {
    if (sweep.inequality_failure) return sweep.inequality_failure;
    return convex_table_inequalities();
  });

  runner.run(8, "coprimary filtrations for every cyclic group of order up to 512", [&]() -> std::optional<std::string> {
    for (std::int64_t n = 2; n <= 512; ++n) {
      auto m = FiniteAbelianModule::create({n});
      CoprimaryFiltration c = coprimary_filtration(m);
      std::vector<std::int64_t> primes_desc = prime_divisors(n);
      std::reverse(primes_desc.begin(), primes_desc.end());
      if (c.primes != primes_desc)
        return "step primes wrong for n=" + std::to_string(n);
      std::int64_t product = 1;
      for (size_t i = 0; i + 1 < c.filtration.chain.size(); ++i) {
        std::int64_t lo = static_cast<std::int64_t>(
            c.carrier.subgroups[static_cast<size_t>(c.filtration.chain[i])].size());
        std::int64_t hi = static_cast<std::int64_t>(
            c.carrier.subgroups[static_cast<size_t>(c.filtration.chain[i + 1])].size());
        std::int64_t q = hi / lo;
        product *= q;
        auto qp = prime_divisors(q);
        if (qp.size() != 1 || qp[0] != c.primes[i])
          return "subquotient not coprimary for n=" + std::to_string(n);
        auto brute = ass_brute(c.carrier, c.filtration.chain[i], c.filtration.chain[i + 1]);
        if (brute != qp) return "ass_brute disagrees on a step for n=" + std::to_string(n);
      }
      if (product != n) return "quotient orders do not multiply to n=" + std::to_string(n);
      auto whole = ass_brute(c.carrier, c.filtration.chain.front(), c.filtration.chain.back());
      std::vector<std::int64_t> primes_asc = prime_divisors(n);
      if (whole != primes_asc) return "Ass(M) mismatch for n=" + std::to_string(n);
      // the subgroup lattice is the divisor lattice
      if (c.carrier.lattice->size() !=
          static_cast<int>([&] {
            int d = 0;
            for (std::int64_t k = 1; k <= n; ++k)
              if (n % k == 0) ++d;
            return d;
          }()))
        return "subgroup count differs from the divisor count for n=" + std::to_string(n);
    }
    // spot fixtures
    if (coprimary_filtration(FiniteAbelianModule::create({12})).primes !=
        std::vector<std::int64_t>{3, 2})
      return "order 12 spot fixture";
    if (coprimary_filtration(FiniteAbelianModule::create({30})).primes !=
        std::vector<std::int64_t>{5, 3, 2})
      return "order 30 spot fixture";
    if (coprimary_filtration(FiniteAbelianModule::create({8})).filtration.chain.size() != 2)
      return "order 8 spot fixture";
    return std::nullopt;
  });

  runner.run(9, "Jordan-Hölder: two chains on the uniform cube; equal lengths on 20 affine instances", [&]() -> std::optional<std::string> {
    DegreeRankData data;
    data.degree = {Value::of(0), Value::of(1), Value::of(1), Value::of(2)};
    data.rank = {Rational(0), Rational(1), Rational(1), Rational(2)};
    Analysis cube(game_from_degree_rank(hntest::cube2(), data, ValueDomain::extended_rational()));
    auto all = cube.jordan_holder(true);
    if (all.size() != 2) return "uniform cube: expected 2 filtrations, got " + std::to_string(all.size());
    for (const Filtration& f : all)
      if (f.chain.size() != 3) return "uniform cube: a filtration is not of length 2";

    int accepted = 0;
    for (std::uint64_t seed = 1; accepted < 20 && seed < 2000; ++seed) {
      RandomInstanceConfig cfg;
      cfg.seed = 90000 + seed;
      cfg.poset_size = 2 + static_cast<int>(seed % 3);
      GeneratedInstance inst = random_downset_instance(cfg);
      Game game = random_payoff(cfg, inst);
      Analysis an(game);
      const FiniteLattice& L = an.lattice();
      if (!an.semistable()) continue;
      if (an.mu(L.bottom(), L.top()).is_pos_infinity()) continue;
      if (!is_affine(game).holds) return "modular instance is not affine";
      auto filtrations = an.jordan_holder(true);
      if (filtrations.empty()) return "no Jordan-Hölder filtration found";
      size_t len = filtrations.front().chain.size();
      for (const Filtration& f : filtrations) {
        if (f.chain.size() != len)
          return "unequal lengths at seed " + std::to_string(cfg.seed);
        // re-check the defining conditions directly on the pay-offs
        for (size_t i = 0; i + 1 < f.chain.size(); ++i) {
          int a = f.chain[i], b = f.chain[i + 1];
          if (!(an.mu(a, b) == an.mu(L.bottom(), L.top())))
            return "step pay-off differs from the top pay-off at seed " + std::to_string(cfg.seed);
          for (int z = 0; z < L.size(); ++z) {
            if (!L.less(a, z) || !L.less(z, b)) continue;
            if (!an.domain().lt(an.mu(a, z), an.mu(a, b)))
              return "non-maximal step at seed " + std::to_string(cfg.seed);
          }
        }
      }
      auto greedy = an.jordan_holder(false);
      bool member = false;
      for (const Filtration& f : filtrations) member = member || f.chain == greedy[0].chain;
      if (!member) return "greedy filtration missing from the enumeration";
      ++accepted;
    }
    if (accepted < 20) return "could not collect 20 affine semistable instances";
    return std::nullopt;
  });

  runner.run(10, "duality identities and double-dual round-trip on every sweep instance", [&]() -> std::optional<std::string> {
    return sweep.duality_failure;
  });

  runner.run(11, "CLI byte-determinism and serialize/parse round-trips on the shipped fixtures", [&]() -> std::optional<std::string> {
    std::vector<std::string> names = {"threechain.json", "fourchain.json", "module12.json"};
    for (const std::string& name : names) {
      std::string path = fixtures + "/" + name;
      Game g = load_game_file(path);
      std::string s1 = serialize_game(g);
      Game g2 = parse_game_text(s1);
      if (!(g2 == g)) return name + ": parse(serialize) changed the game";
      if (serialize_game(g2) != s1) return name + ": serialization is not canonical";
      Analysis a1(g);
      Analysis a2(std::move(g2));
      if (render_report(a1.report(), a1) != render_report(a2.report(), a2))
        return name + ": report changed across the round-trip";
      if (!cli.empty()) {
        CliRun r1 = run_cli(cli, "report " + path);
        CliRun r2 = run_cli(cli, "report " + path);
        if (r1.exit_code != 0 || r2.exit_code != 0) return name + ": cli report failed";
        if (r1.output != r2.output) return name + ": cli reports differ between runs";
        CliRun d1 = run_cli(cli, "dot " + path);
        CliRun d2 = run_cli(cli, "dot " + path);
        if (d1.output != d2.output) return name + ": cli dot output differs between runs";
      }
    }
    if (cli.empty()) return "cli path not supplied";
    return std::nullopt;
  });

  if (runner.failures == 0) {
    std::cout << "acceptance: all 11 criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << runner.failures << " criterion(s) failed\n";
  return 1;
}
