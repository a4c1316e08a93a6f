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

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hn/engine.hpp"
#include "hn/errors.hpp"
#include "hn/game.hpp"
#include "hn/instances.hpp"

namespace hn {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace gamefile_detail {

inline const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    raise(errc::parse_error, std::string("missing member '") + key + "'");
  return j.at(key);
}

inline std::string require_string(const json& j, const char* what) {
  if (!j.is_string()) raise(errc::parse_error, std::string(what) + " must be a string");
  return j.get<std::string>();
}

inline Rational rational_from_json(const json& j, const char* what) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  raise(errc::parse_error, std::string(what) + " must be a rational string or an integer");
}

inline std::vector<std::pair<std::string, std::string>> pairs_from_json(const json& j) {
  if (!j.is_array()) raise(errc::parse_error, "'pairs' must be an array");
  std::vector<std::pair<std::string, std::string>> out;
  for (const json& p : j) {
    if (!p.is_array() || p.size() != 2)
      raise(errc::parse_error, "each order pair must be a two-element array");
    out.emplace_back(require_string(p.at(0), "order pair member"),
                     require_string(p.at(1), "order pair member"));
  }
  return out;
}

inline RelationKind kind_from_json(const json& j) {
  std::string k = require_string(require(j, "kind"), "'kind'");
  if (k == "covers") return RelationKind::covers;
  if (k == "full") return RelationKind::full_order;
  raise(errc::parse_error, "order kind must be 'covers' or 'full'");
}

inline LatticePtr lattice_from_json(const json& elements, const json& order) {
  if (!elements.is_array()) raise(errc::parse_error, "'elements' must be an array of labels");
  std::vector<std::string> labels;
  for (const json& e : elements) labels.push_back(require_string(e, "element label"));
  return make_lattice(
      FiniteLattice::build(labels, pairs_from_json(require(order, "pairs")), kind_from_json(order)));
}

}  // namespace gamefile_detail

/// Reads a value in the serialization grammar: rationals as "p/q" or integer
/// strings (plain integers are also accepted), "+inf" / "-inf" everywhere,
/// lex tuples as arrays with the highest coordinate first, prime sets as
/// integer arrays, poset points as labels of the value lattice.
inline Value value_from_json(const ValueDomain& domain, const json& j) {
  using gamefile_detail::rational_from_json;
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "+inf") return Value::pos_infinity();
    if (s == "-inf") return Value::neg_infinity();
    if (domain.mode() == ValueDomain::Mode::extended_rational) return Value::of(parse_rational(s));
    if (domain.mode() == ValueDomain::Mode::finite_poset)
      return Value::point(domain.values().index_of(s));
    raise(errc::parse_error, "string value '" + s + "' does not fit the domain mode");
  }
  if (j.is_number_integer() && domain.mode() == ValueDomain::Mode::extended_rational)
    return Value::of(Rational(j.get<long long>()));
  if (j.is_array()) {
    if (domain.mode() == ValueDomain::Mode::lex_tuple) {
      std::vector<Rational> coords;
      for (const json& c : j) coords.push_back(rational_from_json(c, "lex coordinate"));
      Value v = Value::lex(std::move(coords));
      domain.validate(v);
      return v;
    }
    if (domain.mode() == ValueDomain::Mode::prime_set) {
      std::vector<std::int64_t> ps;
      for (const json& c : j) {
        if (!c.is_number_integer()) raise(errc::parse_error, "prime set members must be integers");
        ps.push_back(c.get<std::int64_t>());
      }
      return Value::primes(std::move(ps));
    }
  }
  raise(errc::parse_error, "value does not match the domain's serialization grammar");
}

inline ordered_json value_to_json(const ValueDomain& domain, const Value& v) {
  switch (v.kind()) {
    case Value::Kind::neg_infinity: return "-inf";
    case Value::Kind::pos_infinity: return "+inf";
    case Value::Kind::rational: return format_rational(v.rat());
    case Value::Kind::lex_tuple: {
      ordered_json arr = ordered_json::array();
      for (const Rational& c : v.coords()) arr.push_back(format_rational(c));
      return arr;
    }
    case Value::Kind::prime_set: {
      ordered_json arr = ordered_json::array();
      for (std::int64_t p : v.prime_values()) arr.push_back(p);
      return arr;
    }
    case Value::Kind::poset_point: return domain.values().label(v.point_index());
  }
  raise(errc::internal, "unreachable value kind");
}

inline ValueDomain domain_from_json(const json& j) {
  using namespace gamefile_detail;
  std::string mode = require_string(require(j, "mode"), "'mode'");
  if (mode == "rational") return ValueDomain::extended_rational();
  if (mode == "lex_tuple") {
    const json& len = require(j, "length");
    if (!len.is_number_integer() || len.get<int>() < 1)
      raise(errc::parse_error, "'length' must be a positive integer");
    return ValueDomain::lex_tuple(len.get<int>());
  }
  if (mode == "prime_set") return ValueDomain::prime_set();
  if (mode == "finite_poset") {
    LatticePtr values = lattice_from_json(require(j, "elements"), require(j, "order"));
    for (const std::string& lab : values->labels()) {
      if (lab == "+inf" || lab == "-inf")
        raise(errc::parse_error, "value lattice labels '+inf'/'-inf' are reserved");
    }
    return ValueDomain::finite_poset(std::move(values));
  }
  raise(errc::parse_error, "unknown value domain mode '" + mode + "'");
}

inline ordered_json domain_to_json(const ValueDomain& d) {
  ordered_json out;
  switch (d.mode()) {
    case ValueDomain::Mode::extended_rational:
      out["mode"] = "rational";
      break;
    case ValueDomain::Mode::lex_tuple:
      out["mode"] = "lex_tuple";
      out["length"] = d.lex_length();
      break;
    case ValueDomain::Mode::prime_set:
      out["mode"] = "prime_set";
      break;
    case ValueDomain::Mode::finite_poset: {
      out["mode"] = "finite_poset";
      const FiniteLattice& L = d.values();
      ordered_json elems = ordered_json::array();
      for (const std::string& lab : L.labels()) elems.push_back(lab);
      out["elements"] = elems;
      ordered_json pairs = ordered_json::array();
      for (const auto& [a, b] : L.strict_pairs())
        pairs.push_back(ordered_json::array({L.label(a), L.label(b)}));
      out["order"] = ordered_json{{"kind", "full"}, {"pairs", pairs}};
      break;
    }
  }
  return out;
}

/// Builds the game described by a parsed document. Structural problems raise
/// ParseError; semantic ones raise their own codes (NotALattice,
/// MissingWeight, InvariantFactorChain, ...).
inline Game game_from_json(const json& doc) {
  using namespace gamefile_detail;
  if (!doc.is_object()) raise(errc::parse_error, "top level must be an object");
  const json& payoff = require(doc, "payoff");
  std::string kind = require_string(require(payoff, "kind"), "payoff 'kind'");

  if (kind == "module") {
    const json& facs = require(payoff, "invariant_factors");
    if (!facs.is_array() || facs.empty())
      raise(errc::parse_error, "'invariant_factors' must be a non-empty integer array");
    std::vector<std::int64_t> factors;
    for (const json& f : facs) {
      if (!f.is_number_integer())
        raise(errc::parse_error, "'invariant_factors' must be a non-empty integer array");
      factors.push_back(f.get<std::int64_t>());
    }
    // elements / order / value_domain are derived for module games
    return ass_payoff(FiniteAbelianModule::create(std::move(factors)));
  }

  LatticePtr lattice = lattice_from_json(require(doc, "elements"), require(doc, "order"));
  ValueDomain domain = domain_from_json(require(doc, "value_domain"));

  if (kind == "table") {
    const json& entries = require(payoff, "entries");
    if (!entries.is_array()) raise(errc::parse_error, "'entries' must be an array");
    std::vector<std::tuple<int, int, Value>> parsed;
    for (const json& e : entries) {
      if (!e.is_array() || e.size() != 3)
        raise(errc::parse_error, "each table entry must be [from, to, value]");
      int x = lattice->index_of(require_string(e.at(0), "entry endpoint"));
      int y = lattice->index_of(require_string(e.at(1), "entry endpoint"));
      parsed.emplace_back(x, y, value_from_json(domain, e.at(2)));
    }
    return Game(std::move(lattice), std::move(domain), parsed);
  }

  if (kind == "degree_rank") {
    const json& deg = require(payoff, "degree");
    const json& rnk = require(payoff, "rank");
    if (!deg.is_object() || !rnk.is_object())
      raise(errc::parse_error, "'degree' and 'rank' must map labels to values");
    DegreeRankData data;
    for (int i = 0; i < lattice->size(); ++i) {
      const std::string& lab = lattice->label(i);
      if (!deg.contains(lab))
        raise(errc::parse_error, "'degree' is missing element '" + lab + "'");
      if (!rnk.contains(lab))
        raise(errc::parse_error, "'rank' is missing element '" + lab + "'");
      data.degree.push_back(value_from_json(domain, deg.at(lab)));
      data.rank.push_back(rational_from_json(rnk.at(lab), "rank value"));
    }
    return game_from_degree_rank(std::move(lattice), data, std::move(domain));
  }

  raise(errc::parse_error, "unknown payoff kind '" + kind + "'");
}

inline Game parse_game_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    raise(errc::parse_error, std::string("invalid JSON: ") + e.what());
  }
  return game_from_json(doc);
}

inline Game load_game_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(errc::parse_error, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_game_text(buf.str());
}

/// Canonical serialized form: elements in index order, the full strict order,
/// and a sorted pay-off table. Parsing it back yields an identical game, and
/// re-serializing that gives identical bytes.
inline ordered_json game_to_json(const Game& g) {
  if (g.domain().is_reversed())
    raise(errc::internal, "reversed-domain games have no file form");
  const FiniteLattice& L = g.lattice();
  ordered_json out;
  ordered_json elems = ordered_json::array();
  for (const std::string& lab : L.labels()) elems.push_back(lab);
  out["elements"] = elems;
  ordered_json pairs = ordered_json::array();
  for (const auto& [a, b] : L.strict_pairs())
    pairs.push_back(ordered_json::array({L.label(a), L.label(b)}));
  out["order"] = ordered_json{{"kind", "full"}, {"pairs", pairs}};
  out["value_domain"] = domain_to_json(g.domain());
  ordered_json entries = ordered_json::array();
  for (const auto& [a, b] : g.pairs())
    entries.push_back(
        ordered_json::array({L.label(a), L.label(b), value_to_json(g.domain(), g.payoff(a, b))}));
  out["payoff"] = ordered_json{{"kind", "table"}, {"entries", entries}};
  return out;
}

inline std::string serialize_game(const Game& g) { return game_to_json(g).dump(2) + "\n"; }

}  // namespace hn
