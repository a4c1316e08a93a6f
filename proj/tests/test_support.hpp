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

#include <string>
#include <vector>

#include "hn/hn.hpp"

namespace hntest {

using namespace hn;

inline LatticePtr chain3() {
  return make_lattice(FiniteLattice::build({"bot", "x", "top"}, {{"bot", "x"}, {"x", "top"}}));
}

inline LatticePtr chain2() {
  return make_lattice(FiniteLattice::build({"bot", "top"}, {{"bot", "top"}}));
}

inline LatticePtr chain4() {
  return make_lattice(
      FiniteLattice::build({"bot", "x", "y", "top"}, {{"bot", "x"}, {"x", "y"}, {"y", "top"}}));
}

// Downsets of a two-point antichain: {}, {p}, {q}, {p,q}.
inline LatticePtr cube2() {
  return make_lattice(FiniteLattice::build(
      {"{}", "{p}", "{q}", "{p,q}"},
      {{"{}", "{p}"}, {"{}", "{q}"}, {"{p}", "{p,q}"}, {"{q}", "{p,q}"}}));
}

// Diamond value lattice with two incomparable midpoints a and b.
inline LatticePtr diamond_values() {
  return make_lattice(FiniteLattice::build(
      {"vbot", "a", "b", "vtop"}, {{"vbot", "a"}, {"vbot", "b"}, {"a", "vtop"}, {"b", "vtop"}}));
}

/// The three-element chain game: weight a on (bot, x), b on (x, top), c on
/// (bot, top).
inline Game three_chain_game(const Rational& a, const Rational& b, const Rational& c) {
  return game_from_dag({"bot", "x", "top"},
                       {{"bot", "x", Value::of(a)},
                        {"x", "top", Value::of(b)},
                        {"bot", "top", Value::of(c)}},
                       ValueDomain::extended_rational());
}

/// The four-element chain game with all six weights.
inline Game four_chain_game(const Rational& a, const Rational& b, const Rational& c,
                            const Rational& d, const Rational& e, const Rational& f) {
  return game_from_dag({"bot", "x", "y", "top"},
                       {{"bot", "x", Value::of(a)},
                        {"x", "y", Value::of(b)},
                        {"y", "top", Value::of(c)},
                        {"bot", "y", Value::of(d)},
                        {"x", "top", Value::of(e)},
                        {"bot", "top", Value::of(f)}},
                       ValueDomain::extended_rational());
}

/// Table game on the two-point cube; entries ordered
/// ({},{p}), ({},{q}), ({},{p,q}), ({p},{p,q}), ({q},{p,q}).
inline Game cube_table_game(const std::vector<Rational>& weights) {
  return game_from_dag({"{}", "{p}", "{q}", "{p,q}"},
                       {{"{}", "{p}", Value::of(weights[0])},
                        {"{}", "{q}", Value::of(weights[1])},
                        {"{}", "{p,q}", Value::of(weights[2])},
                        {"{p}", "{p,q}", Value::of(weights[3])},
                        {"{q}", "{p,q}", Value::of(weights[4])}},
                       ValueDomain::extended_rational());
}

/// Degree/rank game on the cube from point weights: degree is the weighted
/// downset sum, rank is the cardinality.
inline Game cube_degree_rank_game(const Rational& wd_p, const Rational& wd_q) {
  DegreeRankData data;
  data.degree = {Value::of(0), Value::of(wd_p), Value::of(wd_q), Value::of(wd_p + wd_q)};
  data.rank = {Rational(0), Rational(1), Rational(1), Rational(2)};
  return game_from_degree_rank(cube2(), data, ValueDomain::extended_rational());
}

/// The paper-shaped partial-order instance: a diamond value lattice, weight
/// a on (bot, x), b on (x, top) and the value-lattice top on (bot, top).
inline Game poset_three_chain_game() {
  LatticePtr values = diamond_values();
  ValueDomain domain = ValueDomain::finite_poset(values);
  return game_from_dag({"bot", "x", "top"},
                       {{"bot", "x", Value::point(values->index_of("a"))},
                        {"x", "top", Value::point(values->index_of("b"))},
                        {"bot", "top", Value::point(values->index_of("vtop"))}},
                       domain);
}

inline std::vector<std::string> chain_labels(const FiniteLattice& L, const std::vector<int>& chain) {
  std::vector<std::string> out;
  for (int c : chain) out.push_back(L.label(c));
  return out;
}

}  // namespace hntest
