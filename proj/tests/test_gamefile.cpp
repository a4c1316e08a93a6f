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

#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace hn;

namespace {

std::string fixture(const std::string& name) {
  return std::string(HN_FIXTURES_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("fixtures parse to the expected games") {
  SECTION("three-chain") {
    Analysis an(load_game_file(fixture("threechain.json")));
    REQUIRE(an.lattice().size() == 3);
    REQUIRE(an.mu_a_star() == Value::of(1));
    REQUIRE(an.semistable());
  }
  SECTION("four-chain") {
    Analysis an(load_game_file(fixture("fourchain.json")));
    REQUIRE(an.mu_a_star() == Value::of(2));
    REQUIRE(an.mu_b_star() == Value::of(1));
  }
  SECTION("module game derives its own lattice") {
    Game g = load_game_file(fixture("module12.json"));
    REQUIRE(g.lattice().size() == 6);
    REQUIRE(g.domain().mode() == ValueDomain::Mode::prime_set);
  }
  SECTION("poset-valued three-chain") {
    Analysis an(load_game_file(fixture("threechain_poset.json")));
    REQUIRE(an.semistable());
    auto st = an.destabilizing_set();
    REQUIRE(hntest::chain_labels(an.lattice(), st) == std::vector<std::string>{"x", "top"});
  }
  SECTION("degree/rank cube") {
    Analysis an(load_game_file(fixture("cube_degree_rank.json")));
    REQUIRE(an.mu_a_star() == Value::of(1));
    REQUIRE_FALSE(an.semistable());
  }
}

TEST_CASE("parse errors") {
  REQUIRE_THROWS_AS(parse_game_text("not json"), Error);
  try {
    parse_game_text("{\"payoff\": {\"kind\": \"nope\"}}");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    REQUIRE(e.code() == errc::parse_error);
  }
  try {
    parse_game_text("{}");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    REQUIRE(e.code() == errc::parse_error);
  }
  try {
    load_game_file("/nonexistent/game.json");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    REQUIRE(e.code() == errc::parse_error);
  }
  SECTION("bad rational literal") {
    std::string doc = R"({
      "elements": ["a", "b"],
      "order": {"kind": "covers", "pairs": [["a", "b"]]},
      "value_domain": {"mode": "rational"},
      "payoff": {"kind": "table", "entries": [["a", "b", "1/0"]]}
    })";
    REQUIRE_THROWS_AS(parse_game_text(doc), Error);
  }
}

TEST_CASE("semantic file errors keep their codes") {
  SECTION("missing weight") {
    std::string doc = R"({
      "elements": ["bot", "x", "top"],
      "order": {"kind": "covers", "pairs": [["bot", "x"], ["x", "top"]]},
      "value_domain": {"mode": "rational"},
      "payoff": {"kind": "table", "entries": [["bot", "x", "1"], ["x", "top", "2"]]}
    })";
    try {
      parse_game_text(doc);
      FAIL("expected MissingWeight");
    } catch (const Error& e) {
      REQUIRE(e.code() == errc::missing_weight);
    }
  }
  SECTION("module chain violation") {
    try {
      parse_game_text(R"({"payoff": {"kind": "module", "invariant_factors": [4, 3]}})");
      FAIL("expected InvariantFactorChain");
    } catch (const Error& e) {
      REQUIRE(e.code() == errc::invariant_factor_chain);
      REQUIRE(std::string(e.what()).find("[12]") != std::string::npos);
    }
  }
  SECTION("unknown element label in an entry") {
    std::string doc = R"({
      "elements": ["a", "b"],
      "order": {"kind": "covers", "pairs": [["a", "b"]]},
      "value_domain": {"mode": "rational"},
      "payoff": {"kind": "table", "entries": [["a", "zzz", "1"]]}
    })";
    try {
      parse_game_text(doc);
      FAIL("expected UnknownLabel");
    } catch (const Error& e) {
      REQUIRE(e.code() == errc::unknown_label);
    }
  }
}

TEST_CASE("serialization round-trips") {
  std::vector<std::string> names = {"threechain.json", "fourchain.json", "module12.json",
                                    "threechain_poset.json", "cube_degree_rank.json",
                                    "cube_uniform.json"};
  for (const std::string& name : names) {
    Game g = load_game_file(fixture(name));
    std::string s1 = serialize_game(g);
    Game g2 = parse_game_text(s1);
    REQUIRE(g2 == g);
    REQUIRE(serialize_game(g2) == s1);
    Analysis a1(g);
    Analysis a2(std::move(g2));
    REQUIRE(render_report(a1.report(), a1) == render_report(a2.report(), a2));
  }
}

TEST_CASE("value json round-trips per mode") {
  std::mt19937_64 rng(616);
  SECTION("rational") {
    ValueDomain d = ValueDomain::extended_rational();
    for (int t = 0; t < 50; ++t) {
      long long num = static_cast<long long>(rng() % 41) - 20;
      long long den = 1 + static_cast<long long>(rng() % 7);
      Value v = Value::of(Rational(num, den));
      REQUIRE(value_from_json(d, value_to_json(d, v)) == v);
    }
    REQUIRE(value_from_json(d, json::parse("\"+inf\"")) == Value::pos_infinity());
    REQUIRE(value_from_json(d, json::parse("7")) == Value::of(7));
  }
  SECTION("lex tuple") {
    ValueDomain d = ValueDomain::lex_tuple(3);
    Value v = Value::lex({Rational(1, 2), Rational(-3), Rational(0)});
    REQUIRE(value_from_json(d, value_to_json(d, v)) == v);
  }
  SECTION("prime set") {
    ValueDomain d = ValueDomain::prime_set();
    Value v = Value::primes({5, 2, 11});
    REQUIRE(value_from_json(d, value_to_json(d, v)) == v);
    REQUIRE(value_to_json(d, v).dump() == "[2,5,11]");
  }
  SECTION("poset point") {
    ValueDomain d = ValueDomain::finite_poset(hntest::diamond_values());
    Value v = Value::point(d.values().index_of("a"));
    REQUIRE(value_from_json(d, value_to_json(d, v)) == v);
  }
}

TEST_CASE("reports render deterministically") {
  Analysis an(load_game_file(fixture("fourchain.json")));
  GameReport r = an.report();
  REQUIRE(render_report(r, an) == render_report(an.report(), an));
  ordered_json j = report_to_json(r, an);
  REQUIRE(j["mu_A_star"] == "2");
  REQUIRE(j["flags"]["semistable"] == true);
  REQUIRE(j["flags"]["nash"] == false);
  REQUIRE(j["flags"]["slope_like"] == false);
  REQUIRE(j["equivalence"].size() == 5);
}

TEST_CASE("poset reports avoid coercing partial information") {
  Analysis an(load_game_file(fixture("threechain_poset.json")));
  GameReport r = an.report();
  std::string text = render_report(r, an);
  REQUIRE(text.find("slope_like: n/a (finite_poset domain)") != std::string::npos);
  ordered_json j = report_to_json(r, an);
  REQUIRE(j["flags"]["slope_like"].is_null());

  // the incomparable annotation on the nash line
  GameReport fake = r;
  fake.nash_relation = Ordering::incomparable;
  fake.flags.nash = false;
  REQUIRE(render_report(fake, an).find("(mu_A_star and mu_B_star incomparable)") !=
          std::string::npos);
}

TEST_CASE("dot output") {
  SECTION("three-chain diagram") {
    Analysis an(load_game_file(fixture("threechain.json")));
    std::string dot = to_dot(an);
    REQUIRE(dot == to_dot(an));
    REQUIRE(dot.find("digraph hn_game {") == 0);
    REQUIRE(dot.find("\"bot\" -> \"x\" [label=\"1\"]") != std::string::npos);
    REQUIRE(dot.find("\"x\" -> \"top\" [label=\"2\"]") != std::string::npos);
    REQUIRE(dot.find("\"bot\" -> \"top\"") == std::string::npos);  // covers only
  }
  SECTION("module diagram highlights the filtration chain") {
    Analysis an(load_game_file(fixture("module12.json")));
    std::string dot = to_dot(an);
    REQUIRE(dot.find("subgraph cluster_step_1") != std::string::npos);
    REQUIRE(dot.find("\"<4>\" [peripheries=2]") != std::string::npos);
    REQUIRE(dot.find("mu_A = {3}") != std::string::npos);
  }
  SECTION("two-chain has a single edge") {
    Game g = game_from_dag({"bot", "top"}, {{"bot", "top", Value::of(1)}},
                           ValueDomain::extended_rational());
    Analysis an(g);
    std::string dot = to_dot(an);
    REQUIRE(dot.find("\"bot\" -> \"top\" [label=\"1\"]") != std::string::npos);
  }
  SECTION("non-convex games fall back to the plain diagram") {
    Game g = hntest::cube_table_game(
        {Rational(5), Rational(1), Rational(1), Rational(1), Rational(0)});
    std::string dot = to_dot(Analysis(g));
    REQUIRE(dot.find("no filtration shown: NotConvex") != std::string::npos);
    REQUIRE(dot.find("peripheries") == std::string::npos);
  }
}

TEST_CASE("generated games survive the round-trip") {
  for (std::uint64_t seed : {3ull, 9ull}) {
    RandomInstanceConfig cfg;
    cfg.seed = seed;
    cfg.poset_size = 3;
    Game g = random_payoff(cfg, random_downset_instance(cfg));
    Game back = parse_game_text(serialize_game(g));
    REQUIRE(back == g);
    REQUIRE(Analysis(back).mu_a_star() == Analysis(g).mu_a_star());
  }
}
