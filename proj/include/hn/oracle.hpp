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

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hn/engine.hpp"
#include "hn/errors.hpp"
#include "hn/game.hpp"
#include "hn/instances.hpp"

namespace hn {

/// Deterministic description of a generated instance: the same config always
/// reproduces the same lattice and pay-off bit for bit.
struct RandomInstanceConfig {
  enum class PayoffKind { modular_degree_rank, random_table_convex, random_table_any };

  std::uint64_t seed = 0;
  int poset_size = 4;  // generator poset for the downset lattice, at most 7
  PayoffKind payoff_kind = PayoffKind::modular_degree_rank;
  ValueDomain::Mode domain_mode = ValueDomain::Mode::extended_rational;
  int rejection_budget = 500;
};

/// The literal two-level inf/sup evaluation of the optimal threshold, with
/// no shared tables. This is the reference the engine is checked against.
inline Value brute_mu_a(const Game& g, int x, int y) {
  const FiniteLattice& L = g.lattice();
  const ValueDomain& D = g.domain();
  if (!L.less(x, y))
    raise(errc::not_strictly_ordered,
          "'" + L.label(x) + "' is not strictly below '" + L.label(y) + "'");
  std::vector<Value> outer;
  for (int a = 0; a < L.size(); ++a) {
    if (!L.leq(x, a) || !L.less(a, y)) continue;
    std::vector<Value> inner;
    for (int b = 0; b < L.size(); ++b) {
      if (L.less(a, b) && L.leq(b, y)) inner.push_back(g.payoff(a, b));
    }
    outer.push_back(D.sup(inner));
  }
  return D.inf(outer);
}

/// Exhaustively lists every chain from bottom to top whose step restrictions
/// are all semistable with strictly decreasing step thresholds, evaluating
/// everything through brute_mu_a. For a convex game over a total order this
/// must produce exactly one chain.
inline std::vector<Filtration> enumerate_hn_candidates(const Game& g) {
  const FiniteLattice& L = g.lattice();
  const ValueDomain& D = g.domain();
  if (!D.total_order())
    raise(errc::partial_domain_unsupported, "chain enumeration needs a total-order domain");
  const int n = L.size();

  std::vector<int> slot(static_cast<size_t>(n) * n, -1);
  std::vector<Value> brute;
  for (const auto& [x, y] : g.pairs()) {
    slot[static_cast<size_t>(x) * n + y] = static_cast<int>(brute.size());
    brute.push_back(brute_mu_a(g, x, y));
  }
  auto bm = [&](int x, int y) -> const Value& {
    return brute[static_cast<size_t>(slot[static_cast<size_t>(x) * n + y])];
  };

  std::vector<char> step_ok(brute.size(), 1);
  for (const auto& [u, v] : g.pairs()) {
    for (int w = 0; w < n && step_ok[static_cast<size_t>(slot[static_cast<size_t>(u) * n + v])]; ++w) {
      if (!L.less(u, w) || !L.leq(w, v)) continue;
      if (D.compare(bm(u, w), bm(u, v)) == Ordering::greater)
        step_ok[static_cast<size_t>(slot[static_cast<size_t>(u) * n + v])] = 0;
    }
  }

  std::vector<Filtration> found;
  std::vector<int> path{L.bottom()};
  std::vector<Value> slopes;
  auto dfs = [&](auto&& self, int cur) -> void {
    for (int nxt = 0; nxt < n; ++nxt) {
      if (!L.less(cur, nxt)) continue;
      if (!step_ok[static_cast<size_t>(slot[static_cast<size_t>(cur) * n + nxt])]) continue;
      const Value& slope = bm(cur, nxt);
      if (!slopes.empty() && D.compare(slopes.back(), slope) != Ordering::greater) continue;
      path.push_back(nxt);
      slopes.push_back(slope);
      if (nxt == L.top()) {
        found.push_back(Filtration{path, slopes});
      } else {
        self(self, nxt);
      }
      path.pop_back();
      slopes.pop_back();
    }
  };
  dfs(dfs, L.bottom());
  return found;
}

/// Associated primes of the quotient outer/inner, computed literally: every
/// coset is scanned and the primes arising as coset orders are collected.
inline std::vector<std::int64_t> ass_brute(const FiniteAbelianModule& m,
                                           const std::vector<int>& inner,
                                           const std::vector<int>& outer) {
  std::vector<char> in_inner(static_cast<size_t>(m.order()), 0);
  for (int e : inner) in_inner[static_cast<size_t>(e)] = 1;
  std::set<std::int64_t> primes;
  for (int s : outer) {
    std::int64_t k = 1;
    int acc = s;
    while (!in_inner[static_cast<size_t>(acc)]) {
      acc = m.add(acc, s);
      ++k;
    }
    if (is_prime(k)) primes.insert(k);
  }
  return std::vector<std::int64_t>(primes.begin(), primes.end());
}

inline std::vector<std::int64_t> ass_brute(const SubgroupLattice& sl, int inner, int outer) {
  return ass_brute(sl.module, sl.subgroups[static_cast<size_t>(inner)],
                   sl.subgroups[static_cast<size_t>(outer)]);
}

struct GeneratedInstance {
  int points = 0;
  LatticePtr lattice;
  std::vector<std::uint32_t> downset_masks;  // one per lattice element
};

/// Downsets of an explicit poset on `points` generators, ordered by
/// inclusion. relations lists strict pairs (i below j); the transitive
/// closure is taken. Always a (distributive) lattice: meets and joins are
/// intersections and unions.
inline GeneratedInstance downset_lattice_of(int points,
                                            const std::vector<std::pair<int, int>>& relations) {
  if (points < 1 || points > 7)
    raise(errc::size_cap, "generator poset must have between 1 and 7 points");
  std::vector<std::uint32_t> below(static_cast<size_t>(points), 0);
  for (auto [i, j] : relations) below[static_cast<size_t>(j)] |= 1u << i;
  for (int pass = 0; pass < points; ++pass) {
    for (int j = 0; j < points; ++j) {
      std::uint32_t acc = below[static_cast<size_t>(j)];
      for (int i = 0; i < points; ++i)
        if (acc & (1u << i)) acc |= below[static_cast<size_t>(i)];
      below[static_cast<size_t>(j)] = acc;
    }
  }
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 0; m < (1u << points); ++m) {
    bool closed = true;
    for (int p = 0; p < points && closed; ++p)
      if (m & (1u << p)) closed = (below[static_cast<size_t>(p)] & ~m) == 0;
    if (closed) masks.push_back(m);
  }
  std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    if (pa != pb) return pa < pb;
    return a < b;
  });

  auto mask_label = [&](std::uint32_t m) {
    std::string out = "{";
    bool first = true;
    for (int p = 0; p < points; ++p) {
      if (!(m & (1u << p))) continue;
      if (!first) out += ",";
      out += "q" + std::to_string(p);
      first = false;
    }
    return out + "}";
  };

  std::vector<std::string> labels;
  labels.reserve(masks.size());
  for (std::uint32_t m : masks) labels.push_back(mask_label(m));
  std::vector<std::pair<std::string, std::string>> relation;
  for (size_t i = 0; i < masks.size(); ++i)
    for (size_t j = 0; j < masks.size(); ++j)
      if (i != j && (masks[i] & ~masks[j]) == 0) relation.emplace_back(labels[i], labels[j]);

  GeneratedInstance out;
  out.points = points;
  out.lattice = make_lattice(FiniteLattice::build(labels, relation, RelationKind::full_order));
  out.downset_masks = std::move(masks);
  return out;
}

/// Seeded random generator poset; identical configs give identical lattices.
inline GeneratedInstance random_downset_instance(const RandomInstanceConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  std::vector<std::pair<int, int>> relations;
  for (int i = 0; i < cfg.poset_size; ++i)
    for (int j = i + 1; j < cfg.poset_size; ++j)
      if (rng() & 1u) relations.emplace_back(i, j);
  return downset_lattice_of(cfg.poset_size, relations);
}

inline LatticePtr random_downset_lattice(const RandomInstanceConfig& cfg) {
  return random_downset_instance(cfg).lattice;
}

namespace detail {

inline Rational random_small_rational(std::mt19937_64& rng, long long lo, long long hi,
                                      long long max_den) {
  long long num = lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  long long den = 1 + static_cast<long long>(rng() % static_cast<std::uint64_t>(max_den));
  return Rational(num, den);
}

}  // namespace detail

/// A pay-off for the given generated lattice:
///  - modular_degree_rank sums random point weights over downset members, so
///    the potentials are lattice valuations and the game is affine, convex
///    and slope-like by construction;
///  - random_table_convex rejection-samples full tables against is_convex;
///  - random_table_any draws one table with no constraint.
inline Game random_payoff(const RandomInstanceConfig& cfg, const GeneratedInstance& inst) {
  std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ull);
  const int points = inst.points;

  if (cfg.payoff_kind == RandomInstanceConfig::PayoffKind::modular_degree_rank) {
    int lex_len =
        cfg.domain_mode == ValueDomain::Mode::lex_tuple ? 2 : 1;
    if (cfg.domain_mode != ValueDomain::Mode::extended_rational &&
        cfg.domain_mode != ValueDomain::Mode::lex_tuple)
      raise(errc::mode_mismatch, "modular generation supports rational or lex-tuple domains");
    std::vector<Rational> weight_rank(static_cast<size_t>(points));
    std::vector<std::vector<Rational>> weight_degree(static_cast<size_t>(points));
    for (int p = 0; p < points; ++p) {
      weight_rank[static_cast<size_t>(p)] = Rational(static_cast<long long>(rng() % 4));
      std::vector<Rational> coords;
      for (int c = 0; c < lex_len; ++c)
        coords.push_back(detail::random_small_rational(rng, -8, 8, 3));
      if (weight_rank[static_cast<size_t>(p)] == 0)
        coords[0] = Rational(1 + static_cast<long long>(rng() % 8));
      weight_degree[static_cast<size_t>(p)] = std::move(coords);
    }
    DegreeRankData data;
    for (std::uint32_t mask : inst.downset_masks) {
      std::vector<Rational> deg(static_cast<size_t>(lex_len), Rational(0));
      Rational rank(0);
      for (int p = 0; p < points; ++p) {
        if (!(mask & (1u << p))) continue;
        rank += weight_rank[static_cast<size_t>(p)];
        for (int c = 0; c < lex_len; ++c) deg[static_cast<size_t>(c)] += weight_degree[static_cast<size_t>(p)][static_cast<size_t>(c)];
      }
      data.rank.push_back(rank);
      data.degree.push_back(cfg.domain_mode == ValueDomain::Mode::lex_tuple
                                ? Value::lex(std::move(deg))
                                : Value::of(deg[0]));
    }
    ValueDomain domain = cfg.domain_mode == ValueDomain::Mode::lex_tuple
                             ? ValueDomain::lex_tuple(lex_len)
                             : ValueDomain::extended_rational();
    return game_from_degree_rank(inst.lattice, data, domain);
  }

  if (cfg.domain_mode != ValueDomain::Mode::extended_rational)
    raise(errc::mode_mismatch, "table generation supports the rational domain only");
  auto draw_table = [&]() {
    return Game::from_function(inst.lattice, ValueDomain::extended_rational(), [&](int, int) {
      return Value::of(detail::random_small_rational(rng, -12, 12, 4));
    });
  };
  if (cfg.payoff_kind == RandomInstanceConfig::PayoffKind::random_table_any) return draw_table();
  for (int attempt = 0; attempt < cfg.rejection_budget; ++attempt) {
    Game g = draw_table();
    if (is_convex(g).holds) return g;
  }
  raise(errc::rejection_budget_exceeded,
        "no convex table found within " + std::to_string(cfg.rejection_budget) + " draws");
}

// ---------------------------------------------------------------------------
// Invariant checks shared by the fuzz command and the acceptance suite. Each
// returns the first failure description, or nothing when the invariant holds.

using CheckResult = std::optional<std::string>;

/// Engine thresholds must agree with the literal inf/sup evaluation on every
/// strictly ordered pair. inject_fault perturbs the engine side and exists
/// only to prove the harness can catch a broken engine.
inline CheckResult check_engine_matches_brute(const Analysis& an, bool inject_fault = false) {
  const Game& g = an.game();
  for (const auto& [x, y] : g.pairs()) {
    Value expected = brute_mu_a(g, x, y);
    Value actual = an.mu_a(x, y);
    if (inject_fault && x == g.lattice().bottom() && y == g.lattice().top()) {
      if (actual.kind() == Value::Kind::rational)
        actual = Value::of(Rational(actual.rat() + 1));
      else if (actual.is_pos_infinity())
        actual = Value::neg_infinity();
      else
        actual = Value::pos_infinity();
    }
    if (!(actual == expected)) {
      return "threshold mismatch at ('" + g.lattice().label(x) + "', '" + g.lattice().label(y) +
             "'): engine=" + g.domain().to_text(actual) + " brute=" + g.domain().to_text(expected);
    }
  }
  return std::nullopt;
}

/// For convex total-order games the chain enumeration must yield exactly the
/// canonical filtration and that filtration must verify.
inline CheckResult check_hn_uniqueness(const Analysis& an) {
  if (!an.domain().total_order() || !is_convex(an.game()).holds) return std::nullopt;
  std::vector<Filtration> candidates = enumerate_hn_candidates(an.game());
  Filtration canonical = an.hn_filtration();
  if (candidates.size() != 1)
    return "expected exactly one admissible chain, found " + std::to_string(candidates.size());
  if (candidates[0].chain != canonical.chain)
    return "enumerated chain differs from the canonical filtration";
  if (candidates[0].slopes != canonical.slopes)
    return "enumerated slopes differ from the canonical filtration";
  VerifyResult vr = an.verify_filtration(canonical);
  if (!vr.ok) return "canonical filtration failed verification: " + vr.diagnostic;
  return std::nullopt;
}

/// For slope-like total-order games: the five stability statements agree,
/// and both first-mover identities hold.
inline CheckResult check_equivalence_theorem(const Analysis& an) {
  if (!an.domain().total_order() || !is_slope_like(an.game()).holds) return std::nullopt;
  const FiniteLattice& L = an.lattice();
  const Value& top_payoff = an.mu(L.bottom(), L.top());
  Value max_top = an.mu_max(L.bottom(), L.top());
  Value min_top = an.mu_min(L.bottom(), L.top());
  bool stmts[5] = {max_top == top_payoff, min_top == top_payoff, min_top == max_top,
                   an.mu_a_star() == an.mu_b_star(), an.semistable()};
  for (bool s : stmts) {
    if (s != stmts[0]) {
      std::string bits;
      for (bool t : stmts) bits += t ? '1' : '0';
      return "equivalent stability statements disagree: " + bits;
    }
  }
  if (!(an.mu_a_star() == min_top)) return "mu_A* differs from mu_min(top)";
  if (!(an.mu_b_star() == max_top)) return "mu_B* differs from mu_max(top)";
  return std::nullopt;
}

/// The dual game swaps the two optimal thresholds, and dualizing twice is
/// the identity componentwise.
inline CheckResult check_duality(const Analysis& an) {
  Game dual = dualize(an.game());
  Analysis dual_an(dual);
  if (!(dual_an.mu_b_star() == an.mu_a_star()))
    return "dual game's mu_B* does not equal mu_A*";
  if (!(dual_an.mu_a_star() == an.mu_b_star()))
    return "dual game's mu_A* does not equal mu_B*";
  if (!(dualize(dual) == an.game())) return "dualizing twice changed the game";
  return std::nullopt;
}

/// If the convexity predicate fails, its witness must break the defining
/// inequality when re-checked directly.
inline CheckResult check_convexity_witness(const Game& g) {
  PredicateResult cv = is_convex(g);
  if (cv.holds) return std::nullopt;
  const FiniteLattice& L = g.lattice();
  int x = cv.witness[0], y = cv.witness[1];
  if (L.leq(x, y)) return "convexity witness is an ordered pair";
  if (g.domain().leq(g.payoff(L.meet(x, y), x), g.payoff(y, L.join(x, y))))
    return "convexity witness satisfies the defining inequality";
  return std::nullopt;
}

/// The threshold inequalities: monotonicity in the lower endpoint holds
/// unconditionally; for convex pay-offs the chain bound, the comparability
/// split, the join bound and the majoration bound hold as well; and the
/// derived sup pay-off game has identical thresholds and inherits convexity.
inline CheckResult check_threshold_inequalities(const Analysis& an) {
  const FiniteLattice& L = an.lattice();
  const ValueDomain& D = an.domain();
  const int n = L.size();
  const bool convex = is_convex(an.game()).holds;

  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!L.less(x, y)) continue;
      for (int z = 0; z < n; ++z) {
        if (!L.less(y, z)) continue;
        if (!D.geq(an.mu_a(y, z), an.mu_a(x, z)))
          return "monotonicity fails on ('" + L.label(x) + "', '" + L.label(y) + "', '" +
                 L.label(z) + "')";
        if (convex) {
          Value lower = D.inf({an.mu_a(x, y), an.mu_a(y, z)});
          if (!D.geq(an.mu_a(x, z), lower))
            return "chain lower bound fails on ('" + L.label(x) + "', '" + L.label(y) + "', '" +
                   L.label(z) + "')";
          if (D.total_order()) {
            bool flat = an.mu_a(y, z) == an.mu_a(x, z);
            bool wedge = D.leq(an.mu_a(x, y), an.mu_a(x, z)) && D.lt(an.mu_a(x, z), an.mu_a(y, z));
            if (!flat && !wedge)
              return "comparability split fails on ('" + L.label(x) + "', '" + L.label(y) +
                     "', '" + L.label(z) + "')";
          }
        }
      }
    }
  }

  if (convex) {
    for (int u = 0; u < n; ++u) {
      for (int x = 0; x < n; ++x) {
        if (!L.less(u, x)) continue;
        for (int y = x + 1; y < n; ++y) {
          if (!L.less(u, y)) continue;
          int j = L.join(x, y);
          Value lower = D.inf({an.mu_a(u, x), an.mu_a(u, y)});
          if (!D.geq(an.mu_a(u, j), lower))
            return "join bound fails at ('" + L.label(u) + "'; '" + L.label(x) + "', '" +
                   L.label(y) + "')";
        }
      }
    }
    for (int w = 0; w < n; ++w) {
      for (int x = 0; x < n; ++x) {
        if (L.leq(x, w)) continue;
        int m = L.meet(x, w);
        int j = L.join(x, w);
        for (int u = 0; u < n; ++u) {
          if (!L.leq(u, m)) continue;
          if (!D.leq(an.mu_a(u, x), an.mu_a(w, j)))
            return "majoration bound fails at ('" + L.label(u) + "', '" + L.label(x) + "', '" +
                   L.label(w) + "')";
        }
      }
    }
  }

  Game derived = Game::from_function(an.game().lattice_ptr(), D,
                                     [&](int x, int y) { return an.mu_max(x, y); });
  Analysis derived_an(derived);
  for (const auto& [x, y] : an.game().pairs()) {
    if (!(derived_an.mu_a(x, y) == an.mu_a(x, y)))
      return "sup pay-off game changed the threshold at ('" + L.label(x) + "', '" + L.label(y) +
             "')";
  }
  if (convex && !is_convex(derived).holds)
    return "sup pay-off game lost convexity";

  if (D.total_order() && an.semistable() && !D.leq(an.mu_b_star(), an.mu_a_star()))
    return "semistable game has mu_B* above mu_A*";

  bool st_applicable = D.total_order();
  if (!st_applicable && convex) {
    st_applicable = true;
    for (int z = 0; z < n && st_applicable; ++z) {
      if (z == L.bottom()) continue;
      st_applicable = an.mu_a_attained(L.bottom(), z);
    }
  }
  std::vector<int> st = an.destabilizing_set();
  if (st_applicable) {
    for (size_t i = 0; i < st.size(); ++i)
      for (size_t j = i + 1; j < st.size(); ++j)
        if (!L.comparable(st[i], st[j]))
          return "destabilizing set is not totally ordered";
  }
  if (convex) {
    for (int x : st) {
      if (x == L.top()) continue;
      if (!Analysis(restrict_game(an.game(), L.bottom(), x)).semistable())
        return "truncation below '" + L.label(x) + "' is not semistable";
      for (int y = 0; y < n; ++y) {
        if (!L.less(x, y)) continue;
        if (D.leq(an.mu_a(L.bottom(), x), an.mu_a(x, y)))
          return "threshold at '" + L.label(x) + "' is not above the onward threshold";
        if (D.total_order() && !(an.mu_a(L.bottom(), y) == an.mu_a(x, y)))
          return "onward thresholds differ below and above '" + L.label(x) + "'";
      }
    }
  }
  return std::nullopt;
}

}  // namespace hn
