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

#include <functional>
#include <memory>
#include <tuple>
#include <utility>
#include <vector>

#include "hn/errors.hpp"
#include "hn/lattice.hpp"
#include "hn/value.hpp"

namespace hn {

/// A pay-off assignment on the strictly ordered pairs of a finite bounded
/// lattice. Construction checks that the assignment is total on those pairs,
/// defined nowhere else, and that every value belongs to the domain.
class Game {
 public:
  Game(LatticePtr lattice, ValueDomain domain,
       const std::vector<std::tuple<int, int, Value>>& entries)
      : lattice_(std::move(lattice)), domain_(std::move(domain)) {
    const int n = lattice_->size();
    offset_.assign(static_cast<size_t>(n) * n, -1);
    pairs_ = lattice_->strict_pairs();
    values_.resize(pairs_.size(), Value::pos_infinity());
    std::vector<char> seen(pairs_.size(), 0);
    for (size_t k = 0; k < pairs_.size(); ++k)
      offset_[static_cast<size_t>(pairs_[k].first) * n + pairs_[k].second] = static_cast<int>(k);
    for (const auto& [x, y, v] : entries) {
      if (x < 0 || x >= n || y < 0 || y >= n || !lattice_->less(x, y))
        raise(errc::not_strictly_ordered,
              "pay-off entry on a pair that is not strictly ordered ('" +
                  safe_label(x) + "', '" + safe_label(y) + "')");
      int k = offset_[static_cast<size_t>(x) * n + y];
      if (seen[static_cast<size_t>(k)])
        raise(errc::duplicate_weight,
              "duplicate pay-off for ('" + lattice_->label(x) + "', '" + lattice_->label(y) + "')");
      domain_.validate(v);
      seen[static_cast<size_t>(k)] = 1;
      values_[static_cast<size_t>(k)] = v;
    }
    for (size_t k = 0; k < pairs_.size(); ++k) {
      if (!seen[k])
        raise(errc::missing_weight,
              "no pay-off for ('" + lattice_->label(pairs_[k].first) + "', '" +
                  lattice_->label(pairs_[k].second) + "')");
    }
  }

  static Game from_function(LatticePtr lattice, ValueDomain domain,
                            const std::function<Value(int, int)>& payoff) {
    std::vector<std::tuple<int, int, Value>> entries;
    for (const auto& [x, y] : lattice->strict_pairs()) entries.emplace_back(x, y, payoff(x, y));
    return Game(std::move(lattice), std::move(domain), entries);
  }

  const FiniteLattice& lattice() const { return *lattice_; }
  const LatticePtr& lattice_ptr() const { return lattice_; }
  const ValueDomain& domain() const { return domain_; }

  /// The strictly ordered pairs, in lexicographic index order.
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

  const Value& payoff(int x, int y) const {
    const int n = lattice_->size();
    int k = (x >= 0 && x < n && y >= 0 && y < n) ? offset_[static_cast<size_t>(x) * n + y] : -1;
    if (k < 0)
      raise(errc::not_strictly_ordered,
            "no pay-off: ('" + safe_label(x) + "', '" + safe_label(y) + "') is not strictly ordered");
    return values_[static_cast<size_t>(k)];
  }

  /// V_A(x): the distinct pay-offs Bob can reach after Alice picks x. Sorted
  /// ascending in total-order modes; in first-appearance order otherwise.
  std::vector<Value> possible_payoffs(int x) const {
    if (x == lattice_->top())
      raise(errc::top_not_allowed, "'" + lattice_->label(x) + "' is the greatest element");
    std::vector<Value> out;
    for (int y = 0; y < lattice_->size(); ++y) {
      if (!lattice_->less(x, y)) continue;
      const Value& v = payoff(x, y);
      bool dup = false;
      for (const Value& w : out) dup = dup || w == v;
      if (!dup) out.push_back(v);
    }
    if (domain_.total_order()) {
      std::sort(out.begin(), out.end(), [&](const Value& a, const Value& b) {
        return domain_.compare(a, b) == Ordering::less;
      });
    }
    return out;
  }

  bool operator==(const Game& other) const {
    return *lattice_ == *other.lattice_ && domain_ == other.domain_ && values_ == other.values_;
  }
  bool operator!=(const Game& other) const { return !(*this == other); }

 private:
  std::string safe_label(int i) const {
    return (i >= 0 && i < lattice_->size()) ? lattice_->label(i) : ("#" + std::to_string(i));
  }

  LatticePtr lattice_;
  ValueDomain domain_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> offset_;
  std::vector<Value> values_;
};

/// The game restricted to the interval [lo, hi]: a fresh game on the
/// interval's own lattice whose pay-off is the restriction of the original.
inline Game restrict_game(const Game& game, int lo, int hi) {
  Interval iv = game.lattice().interval(lo, hi);
  LatticePtr sub = make_lattice(iv.as_lattice());
  std::vector<std::tuple<int, int, Value>> entries;
  for (const auto& [a, b] : sub->strict_pairs())
    entries.emplace_back(a, b, game.payoff(iv.members[static_cast<size_t>(a)],
                                           iv.members[static_cast<size_t>(b)]));
  return Game(std::move(sub), game.domain(), entries);
}

/// The dual game: lattice order reversed, value order reversed, pay-off
/// transposed. Applying it twice restores the original game componentwise.
inline Game dualize(const Game& game) {
  LatticePtr rev = make_lattice(FiniteLattice::reversed(game.lattice()));
  std::vector<std::tuple<int, int, Value>> entries;
  for (const auto& [a, b] : rev->strict_pairs()) entries.emplace_back(a, b, game.payoff(b, a));
  return Game(std::move(rev), game.domain().reversed_copy(), entries);
}

}  // namespace hn
