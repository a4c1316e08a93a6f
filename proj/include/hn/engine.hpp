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

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hn/errors.hpp"
#include "hn/game.hpp"

namespace hn {

/// Outcome of a boolean pay-off predicate, with the first counterexample
/// (a pair or a triple of element indices) when it fails.
struct PredicateResult {
  bool holds = true;
  std::vector<int> witness;
};

/// Convexity: whenever x is not below y, the pay-off from x-meet-y up to x
/// is bounded by the pay-off from y up to x-join-y.
inline PredicateResult is_convex(const Game& g) {
  const FiniteLattice& L = g.lattice();
  const ValueDomain& D = g.domain();
  for (int x = 0; x < L.size(); ++x) {
    for (int y = 0; y < L.size(); ++y) {
      if (L.leq(x, y)) continue;
      if (!D.leq(g.payoff(L.meet(x, y), x), g.payoff(y, L.join(x, y))))
        return {false, {x, y}};
    }
  }
  return {true, {}};
}

/// Affinity: the convexity comparison holds with equality. Affine pay-offs
/// are convex; that implication is re-checked here.
inline PredicateResult is_affine(const Game& g) {
  const FiniteLattice& L = g.lattice();
  const ValueDomain& D = g.domain();
  for (int x = 0; x < L.size(); ++x) {
    for (int y = 0; y < L.size(); ++y) {
      if (L.leq(x, y)) continue;
      if (D.compare(g.payoff(L.meet(x, y), x), g.payoff(y, L.join(x, y))) != Ordering::equal)
        return {false, {x, y}};
    }
  }
  if (!is_convex(g).holds)
    raise(errc::internal, "affine pay-off failed the convexity check");
  return {true, {}};
}

/// Slope-likeness: on every chain x < y < z the three pay-offs are strictly
/// increasing, strictly decreasing, or all equal. Requires a total-order
/// value domain.
inline PredicateResult is_slope_like(const Game& g) {
  const ValueDomain& D = g.domain();
  if (!D.total_order())
    raise(errc::partial_domain_unsupported,
          "slope-likeness needs a totally ordered value domain");
  const FiniteLattice& L = g.lattice();
  for (int x = 0; x < L.size(); ++x) {
    for (int y = 0; y < L.size(); ++y) {
      if (!L.less(x, y)) continue;
      for (int z = 0; z < L.size(); ++z) {
        if (!L.less(y, z)) continue;
        Ordering lo = D.compare(g.payoff(x, y), g.payoff(x, z));
        Ordering hi = D.compare(g.payoff(x, z), g.payoff(y, z));
        if (lo != hi) return {false, {x, y, z}};
      }
    }
  }
  return {true, {}};
}

/// A chain from bottom to top together with the per-step optimal thresholds.
struct Filtration {
  std::vector<int> chain;    // bottom = chain[0] < ... < chain[m] = top
  std::vector<Value> slopes;  // slopes[i] is the threshold of step [chain[i], chain[i+1]]

  bool operator==(const Filtration& o) const { return chain == o.chain && slopes == o.slopes; }
  bool operator!=(const Filtration& o) const { return !(*this == o); }
};

struct VerifyResult {
  bool ok = true;
  std::string diagnostic;
};

struct GameFlags {
  bool convex = false;
  bool affine = false;
  bool semistable = false;
  bool stable = false;
  bool nash = false;
  std::optional<bool> slope_like;  // absent in finite-poset domain mode
};

struct GameReport {
  Value mu_a_star;
  Value mu_b_star;
  Value mu_top;
  Value mu_max_top;
  Value mu_min_top;
  std::vector<int> st;
  GameFlags flags;
  // mu_max(top)=mu(bot,top) | mu_min(top)=mu(bot,top) | mu_min=mu_max | nash | semistable
  std::array<bool, 5> equivalence{};
  Ordering nash_relation = Ordering::incomparable;
};

/// Exact solver state for one game: dense tables of the sup pay-offs
/// mu_max(a, y) and the optimal thresholds mu_a(x, y) over all strictly
/// ordered pairs, plus everything built on top of them (destabilizing sets,
/// stability predicates, filtrations, the report). Immutable once
/// constructed; all queries are safe concurrently.
///
/// The threshold mu_a(x, y) is intrinsic to the interval [x, y]: both the
/// inner sup and the outer inf range over elements between x and y only, so
/// one global table serves every restricted game.
class Analysis {
 public:
  explicit Analysis(Game game) : game_(std::move(game)) { build_tables(); }

  const Game& game() const { return game_; }
  const FiniteLattice& lattice() const { return game_.lattice(); }
  const ValueDomain& domain() const { return game_.domain(); }

  const Value& mu(int x, int y) const { return game_.payoff(x, y); }

  /// sup of mu(x, w) over x < w <= y.
  const Value& mu_max(int x, int y) const { return mu_max_[pair_slot(x, y)]; }

  /// inf of mu(w, y) over x <= w < y.
  Value mu_min(int x, int y) const {
    pair_slot(x, y);
    const FiniteLattice& L = lattice();
    const ValueDomain& D = domain();
    std::optional<Value> acc;
    for (int w = 0; w < L.size(); ++w) {
      if (!L.leq(x, w) || !L.less(w, y)) continue;
      const Value& v = game_.payoff(w, y);
      acc = acc ? D.inf({*acc, v}) : v;
    }
    return *acc;
  }

  /// Optimal pay-off threshold of the game on [x, y] when the minimizing
  /// player moves first: inf over a in [x, y) of mu_max(a, y).
  const Value& mu_a(int x, int y) const { return mu_a_[pair_slot(x, y)]; }

  /// Whether some a in [x, y) attains mu_a(x, y). Always true in total-order
  /// modes; meaningful for the finite-poset domain.
  bool mu_a_attained(int x, int y) const { return attained_[pair_slot(x, y)] != 0; }

  const Value& mu_a_star() const { return mu_a(lattice().bottom(), lattice().top()); }
  const Value& mu_b_star() const { return *mu_b_star_; }

  /// The destabilizing set St: elements x above lo such that no y beats the
  /// threshold of x and every tie lies below x, all within [lo, top].
  std::vector<int> destabilizing_set_above(int lo) const {
    const FiniteLattice& L = lattice();
    const ValueDomain& D = domain();
    std::vector<int> elems;
    for (int x = 0; x < L.size(); ++x)
      if (L.less(lo, x)) elems.push_back(x);
    std::vector<int> st;
    for (int x : elems) {
      const Value& vx = mu_a(lo, x);
      bool ok = true;
      for (int y : elems) {
        Ordering o = D.compare(mu_a(lo, y), vx);
        if (o == Ordering::greater || (o == Ordering::equal && !L.leq(y, x))) {
          ok = false;
          break;
        }
      }
      if (ok) st.push_back(x);
    }
    return st;
  }

  std::vector<int> destabilizing_set() const {
    return destabilizing_set_above(lattice().bottom());
  }

  /// No element beats the threshold of the whole lattice.
  bool semistable() const {
    const FiniteLattice& L = lattice();
    const Value& vtop = mu_a(L.bottom(), L.top());
    for (int x = 0; x < L.size(); ++x) {
      if (x == L.bottom()) continue;
      if (domain().compare(mu_a(L.bottom(), x), vtop) == Ordering::greater) return false;
    }
    return true;
  }

  /// Semistable, and no proper element even ties the threshold of the whole
  /// lattice (quantified over elements other than bottom and top).
  bool stable() const {
    if (!semistable()) return false;
    const FiniteLattice& L = lattice();
    const Value& vtop = mu_a(L.bottom(), L.top());
    for (int x = 0; x < L.size(); ++x) {
      if (x == L.bottom() || x == L.top()) continue;
      if (mu_a(L.bottom(), x) == vtop) return false;
    }
    return true;
  }

  /// The canonical filtration: each step climbs to the greatest element of
  /// the destabilizing set of the game above the current element. Requires a
  /// convex pay-off; in finite-poset mode every recursive destabilizing set
  /// must have a greatest element.
  Filtration hn_filtration() const {
    PredicateResult cv = is_convex(game_);
    if (!cv.holds)
      raise(errc::not_convex, "pay-off is not convex; witness (" + witness_text(cv.witness) + ")");
    const FiniteLattice& L = lattice();
    Filtration f;
    f.chain.push_back(L.bottom());
    int cur = L.bottom();
    while (cur != L.top()) {
      std::vector<int> st = destabilizing_set_above(cur);
      if (st.empty())
        raise(errc::internal, "empty destabilizing set for a convex game");
      int greatest = -1;
      for (int cand : st) {
        bool above_all = true;
        for (int s : st) above_all = above_all && L.leq(s, cand);
        if (above_all) {
          greatest = cand;
          break;
        }
      }
      if (greatest < 0) {
        std::string members;
        for (int s : st) {
          bool maximal = true;
          for (int t : st) maximal = maximal && !L.less(s, t);
          if (maximal) {
            if (!members.empty()) members += ", ";
            members += "'" + L.label(s) + "'";
          }
        }
        raise(errc::no_greatest_destabilizer,
              "destabilizing set has incomparable maximal members: " + members);
      }
      f.slopes.push_back(mu_a(cur, greatest));
      f.chain.push_back(greatest);
      cur = greatest;
    }
    return f;
  }

  /// Checks a proposed chain: every step restriction must be semistable and
  /// the step thresholds must strictly decrease (pairwise not-below in
  /// finite-poset mode). The chain itself must run from bottom to top.
  VerifyResult verify_filtration(const std::vector<int>& chain) const {
    const FiniteLattice& L = lattice();
    const ValueDomain& D = domain();
    if (chain.size() < 2 || chain.front() != L.bottom() || chain.back() != L.top())
      raise(errc::not_a_chain, "chain must run from bottom to top");
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
      if (!L.less(chain[i], chain[i + 1]))
        raise(errc::not_a_chain,
              "'" + L.label(chain[i]) + "' is not strictly below '" + L.label(chain[i + 1]) + "'");
    }
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
      int lo = chain[i], hi = chain[i + 1];
      for (int x = 0; x < L.size(); ++x) {
        if (!L.less(lo, x) || !L.leq(x, hi)) continue;
        if (D.compare(mu_a(lo, x), mu_a(lo, hi)) == Ordering::greater) {
          return {false, "step " + std::to_string(i + 1) + " ['" + L.label(lo) + "', '" +
                             L.label(hi) + "'] is not semistable: destabilized by '" +
                             L.label(x) + "'"};
        }
      }
    }
    for (size_t i = 0; i + 2 < chain.size(); ++i) {
      const Value& a = mu_a(chain[i], chain[i + 1]);
      const Value& b = mu_a(chain[i + 1], chain[i + 2]);
      bool ok = D.total_order() ? D.compare(a, b) == Ordering::greater : !D.leq(a, b);
      if (!ok) {
        return {false, "slopes fail to strictly decrease between steps " + std::to_string(i + 1) +
                           " and " + std::to_string(i + 2)};
      }
    }
    return {true, ""};
  }

  VerifyResult verify_filtration(const Filtration& f) const { return verify_filtration(f.chain); }

  /// Jordan-Hölder filtrations of a semistable slope-like game with finite
  /// top pay-off: maximal chains whose every step pay-off equals mu(bot, top)
  /// while every strict intermediate stays strictly below it. With
  /// all = false, one chain is built greedily (maximal refinements, lowest
  /// element index first); with all = true every such chain is enumerated,
  /// and for affine pay-offs their lengths are checked to agree.
  std::vector<Filtration> jordan_holder(bool all) const {
    const FiniteLattice& L = lattice();
    PredicateResult sl = is_slope_like(game_);
    if (!sl.holds)
      raise(errc::not_slope_like,
            "pay-off is not slope-like; witness (" + witness_text(sl.witness) + ")");
    if (!semistable()) raise(errc::not_semistable, "game is not semistable");
    const Value& top_payoff = mu(L.bottom(), L.top());
    if (top_payoff.is_pos_infinity())
      raise(errc::infinite_top_slope, "mu(bottom, top) is +inf");

    std::vector<std::vector<int>> chains;
    if (all) {
      std::vector<int> path{L.top()};
      enumerate_jh(path, chains);
    } else {
      std::vector<int> desc{L.top()};
      int t = L.top();
      while (t != L.bottom()) {
        int next = L.bottom();
        std::vector<int> attain;
        for (int x = 0; x < L.size(); ++x) {
          if (L.less(L.bottom(), x) && L.less(x, t) && mu(L.bottom(), x) == top_payoff)
            attain.push_back(x);
        }
        for (int c : attain) {
          bool maximal = true;
          for (int d : attain) maximal = maximal && !L.less(c, d);
          if (maximal) {
            next = c;
            break;
          }
        }
        if (!jh_step_ok(next, t))
          raise(errc::internal, "greedy refinement produced an invalid step");
        desc.push_back(next);
        t = next;
      }
      chains.emplace_back(desc.rbegin(), desc.rend());
    }

    std::vector<Filtration> out;
    for (const auto& chain : chains) {
      Filtration f;
      f.chain = chain;
      for (size_t i = 0; i + 1 < chain.size(); ++i)
        f.slopes.push_back(mu_a(chain[i], chain[i + 1]));
      out.push_back(std::move(f));
    }
    if (all && is_affine(game_).holds) {
      for (const Filtration& f : out) {
        if (f.chain.size() != out.front().chain.size())
          raise(errc::internal, "affine pay-off produced Jordan-Hölder chains of unequal length");
      }
    }
    return out;
  }

  GameReport report() const {
    const FiniteLattice& L = lattice();
    const ValueDomain& D = domain();
    GameReport r{.mu_a_star = mu_a_star(),
                 .mu_b_star = mu_b_star(),
                 .mu_top = mu(L.bottom(), L.top()),
                 .mu_max_top = mu_max(L.bottom(), L.top()),
                 .mu_min_top = mu_min(L.bottom(), L.top()),
                 .st = destabilizing_set(),
                 .flags = {},
                 .equivalence = {},
                 .nash_relation = Ordering::incomparable};
    if (!D.leq(r.mu_min_top, r.mu_top) || !D.leq(r.mu_top, r.mu_max_top))
      raise(errc::internal, "mu_min(top) <= mu(top) <= mu_max(top) violated");
    r.flags.convex = is_convex(game_).holds;
    r.flags.affine = is_affine(game_).holds;
    r.flags.semistable = semistable();
    r.flags.stable = stable();
    r.nash_relation = D.compare(r.mu_a_star, r.mu_b_star);
    r.flags.nash = r.nash_relation == Ordering::equal;
    if (D.total_order()) r.flags.slope_like = is_slope_like(game_).holds;
    r.equivalence = {r.mu_max_top == r.mu_top, r.mu_min_top == r.mu_top,
                     r.mu_min_top == r.mu_max_top, r.flags.nash, r.flags.semistable};
    if (r.flags.slope_like == true) {
      for (bool e : r.equivalence) {
        if (e != r.equivalence[0])
          raise(errc::internal, "equivalent stability statements disagree on a slope-like game");
      }
    }
    return r;
  }

 private:
  std::string witness_text(const std::vector<int>& w) const {
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
      if (i) out += ", ";
      out += "'" + lattice().label(w[i]) + "'";
    }
    return out;
  }

  int pair_slot(int x, int y) const {
    const int n = lattice().size();
    int k = (x >= 0 && x < n && y >= 0 && y < n) ? slot_[static_cast<size_t>(x) * n + y] : -1;
    if (k < 0)
      raise(errc::not_strictly_ordered, "pair is not strictly ordered");
    return k;
  }

  bool jh_step_ok(int a, int b) const {
    const FiniteLattice& L = lattice();
    const ValueDomain& D = domain();
    const Value& step = mu(a, b);
    if (!(step == mu(L.bottom(), L.top()))) return false;
    for (int z = 0; z < L.size(); ++z) {
      if (!L.less(a, z) || !L.less(z, b)) continue;
      if (!D.lt(mu(a, z), step)) return false;
    }
    return true;
  }

  void enumerate_jh(std::vector<int>& path, std::vector<std::vector<int>>& chains) const {
    const FiniteLattice& L = lattice();
    int t = path.back();
    if (t == L.bottom()) {
      chains.emplace_back(path.rbegin(), path.rend());
      return;
    }
    for (int y = 0; y < L.size(); ++y) {
      if (!L.less(y, t)) continue;
      if (!jh_step_ok(y, t)) continue;
      path.push_back(y);
      enumerate_jh(path, chains);
      path.pop_back();
    }
  }

  void build_tables() {
    const FiniteLattice& L = lattice();
    const ValueDomain& D = domain();
    const int n = L.size();
    const auto& pairs = game_.pairs();
    slot_.assign(static_cast<size_t>(n) * n, -1);
    for (size_t k = 0; k < pairs.size(); ++k)
      slot_[static_cast<size_t>(pairs[k].first) * n + pairs[k].second] = static_cast<int>(k);

    mu_max_.reserve(pairs.size());
    for (const auto& [a, y] : pairs) {
      std::optional<Value> acc;
      for (int b = 0; b < n; ++b) {
        if (!L.less(a, b) || !L.leq(b, y)) continue;
        const Value& v = game_.payoff(a, b);
        acc = acc ? D.sup({*acc, v}) : v;
      }
      mu_max_.push_back(std::move(*acc));
    }

    mu_a_.reserve(pairs.size());
    attained_.assign(pairs.size(), 0);
    for (size_t k = 0; k < pairs.size(); ++k) {
      const auto& [x, y] = pairs[k];
      std::optional<Value> acc;
      for (int a = 0; a < n; ++a) {
        if (!L.leq(x, a) || !L.less(a, y)) continue;
        const Value& v = mu_max_[static_cast<size_t>(slot_[static_cast<size_t>(a) * n + y])];
        acc = acc ? D.inf({*acc, v}) : v;
      }
      for (int a = 0; a < n && !attained_[k]; ++a) {
        if (!L.leq(x, a) || !L.less(a, y)) continue;
        if (mu_max_[static_cast<size_t>(slot_[static_cast<size_t>(a) * n + y])] == *acc)
          attained_[k] = 1;
      }
      mu_a_.push_back(std::move(*acc));
    }

    std::optional<Value> bstar;
    for (int y = 0; y < n; ++y) {
      if (y == L.bottom()) continue;
      Value v = mu_min(L.bottom(), y);
      bstar = bstar ? D.sup({*bstar, v}) : v;
    }
    mu_b_star_ = std::move(*bstar);
  }

  Game game_;
  std::vector<int> slot_;
  std::vector<Value> mu_max_;
  std::vector<Value> mu_a_;
  std::vector<char> attained_;
  std::optional<Value> mu_b_star_;
};

}  // namespace hn
