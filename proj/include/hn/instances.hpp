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

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hn/engine.hpp"
#include "hn/errors.hpp"
#include "hn/game.hpp"
#include "hn/lattice.hpp"
#include "hn/rational.hpp"
#include "hn/value.hpp"

namespace hn {

struct DagEdge {
  std::string from;
  std::string to;
  Value weight;
};

/// A game described as an edge-weighted directed graph: the transitive
/// closure of the edges must be a bounded lattice, and an edge (hence a
/// weight) must exist for every strictly ordered pair, not only for covers.
inline Game game_from_dag(const std::vector<std::string>& labels,
                          const std::vector<DagEdge>& edges, ValueDomain domain) {
  std::vector<std::pair<std::string, std::string>> relation;
  relation.reserve(edges.size());
  for (const DagEdge& e : edges) relation.emplace_back(e.from, e.to);
  LatticePtr lattice = make_lattice(FiniteLattice::build(labels, relation, RelationKind::covers));
  std::vector<std::tuple<int, int, Value>> entries;
  entries.reserve(edges.size());
  for (const DagEdge& e : edges)
    entries.emplace_back(lattice->index_of(e.from), lattice->index_of(e.to), e.weight);
  return Game(std::move(lattice), std::move(domain), entries);
}

/// Degree and rank potentials per lattice element. The induced pay-off on a
/// pair (x, y) is the difference quotient (D(y)-D(x)) / (R(y)-R(x)), or +inf
/// where the ranks agree.
struct DegreeRankData {
  std::vector<Value> degree;     // rational or lex-tuple values, one per element
  std::vector<Rational> rank;    // non-negative, monotone along the order
};

inline Game game_from_degree_rank(LatticePtr lattice, const DegreeRankData& data,
                                  ValueDomain domain) {
  const FiniteLattice& L = *lattice;
  const int n = L.size();
  if (domain.mode() != ValueDomain::Mode::extended_rational &&
      domain.mode() != ValueDomain::Mode::lex_tuple)
    raise(errc::mode_mismatch, "degree/rank games need a rational or lex-tuple domain");
  if (static_cast<int>(data.degree.size()) != n || static_cast<int>(data.rank.size()) != n)
    raise(errc::mode_mismatch, "degree and rank must assign a value to every element");
  for (int x = 0; x < n; ++x) {
    domain.validate(data.degree[static_cast<size_t>(x)]);
    if (!data.degree[static_cast<size_t>(x)].is_finite())
      raise(errc::mode_mismatch, "degree potential must be finite");
    if (data.rank[static_cast<size_t>(x)] < 0)
      raise(errc::rank_not_monotone, "rank of '" + L.label(x) + "' is negative");
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!L.less(x, y)) continue;
      const Rational r = data.rank[static_cast<size_t>(y)] - data.rank[static_cast<size_t>(x)];
      if (r < 0)
        raise(errc::rank_not_monotone,
              "rank decreases from '" + L.label(x) + "' to '" + L.label(y) + "'");
      if (r == 0) {
        Value d = value_sub(data.degree[static_cast<size_t>(y)], data.degree[static_cast<size_t>(x)]);
        Value zero = d.kind() == Value::Kind::lex_tuple
                         ? Value::lex(std::vector<Rational>(d.coords().size(), Rational(0)))
                         : Value::of(0);
        if (!domain.gt(d, zero))
          raise(errc::zero_rank_non_positive_degree,
                "rank is constant but degree does not strictly increase from '" + L.label(x) +
                    "' to '" + L.label(y) + "'");
      }
    }
  }
  Game g = Game::from_function(lattice, domain, [&](int x, int y) -> Value {
    const Rational r = data.rank[static_cast<size_t>(y)] - data.rank[static_cast<size_t>(x)];
    if (r == 0) return Value::pos_infinity();
    return value_div(value_sub(data.degree[static_cast<size_t>(y)],
                               data.degree[static_cast<size_t>(x)]),
                     r);
  });
  if (!is_slope_like(g).holds)
    raise(errc::internal, "degree/rank pay-off failed the slope-likeness check");
  return g;
}

/// A finite abelian group presented by invariant factors d1 | d2 | ... | dk,
/// each >= 2. Elements are mixed-radix tuples encoded as a single index.
class FiniteAbelianModule {
 public:
  static constexpr std::int64_t default_order_cap = 512;

  static FiniteAbelianModule create(std::vector<std::int64_t> factors,
                                    std::int64_t order_cap = default_order_cap) {
    if (factors.empty())
      raise(errc::invariant_factor_chain, "at least one invariant factor is required");
    bool ok = true;
    for (size_t i = 0; i < factors.size(); ++i) {
      if (factors[i] < 2) ok = false;
      if (i + 1 < factors.size() && factors[i + 1] % factors[i] != 0) ok = false;
    }
    if (!ok) {
      std::string canon = format_factor_list(canonical_invariant_factors(factors));
      raise(errc::invariant_factor_chain,
            format_factor_list(factors) + " is not a divisibility chain of factors >= 2; " +
                "the canonical invariant factors are " + canon);
    }
    FiniteAbelianModule m;
    m.factors_ = std::move(factors);
    m.order_ = 1;
    for (std::int64_t d : m.factors_) {
      m.order_ *= d;
      if (m.order_ > order_cap)
        raise(errc::order_cap_exceeded,
              "group order exceeds the cap of " + std::to_string(order_cap));
    }
    return m;
  }

  /// The invariant factors of a direct sum of arbitrary non-trivial cyclic
  /// groups: regroups the prime-power components into a divisibility chain.
  static std::vector<std::int64_t> canonical_invariant_factors(std::vector<std::int64_t> factors) {
    std::map<std::int64_t, std::vector<std::int64_t>> powers;  // prime -> prime powers, desc
    for (std::int64_t f : factors) {
      if (f < 2)
        raise(errc::invariant_factor_chain, "factor " + std::to_string(f) + " is smaller than 2");
      for (std::int64_t p : prime_divisors(f)) {
        std::int64_t q = 1;
        while (f % p == 0) {
          q *= p;
          f /= p;
        }
        powers[p].push_back(q);
      }
    }
    size_t layers = 0;
    for (auto& [p, qs] : powers) {
      std::sort(qs.rbegin(), qs.rend());
      layers = std::max(layers, qs.size());
    }
    std::vector<std::int64_t> out(layers, 1);
    for (auto& [p, qs] : powers) {
      for (size_t i = 0; i < qs.size(); ++i) out[i] *= qs[i];
    }
    std::reverse(out.begin(), out.end());  // ascending divisibility chain
    return out;
  }

  const std::vector<std::int64_t>& invariant_factors() const { return factors_; }
  std::int64_t order() const { return order_; }
  int rank() const { return static_cast<int>(factors_.size()); }

  int zero() const { return 0; }

  int add(int a, int b) const {
    int out = 0, scale = 1;
    for (std::int64_t d : factors_) {
      int ca = static_cast<int>((a / scale) % d);
      int cb = static_cast<int>((b / scale) % d);
      out += static_cast<int>((ca + cb) % d) * scale;
      scale *= static_cast<int>(d);
    }
    return out;
  }

  std::vector<std::int64_t> components(int e) const {
    std::vector<std::int64_t> out;
    int scale = 1;
    for (std::int64_t d : factors_) {
      out.push_back((e / scale) % d);
      scale *= static_cast<int>(d);
    }
    return out;
  }

  std::string element_text(int e) const {
    auto cs = components(e);
    if (cs.size() == 1) return std::to_string(cs[0]);
    std::string out = "(";
    for (size_t i = 0; i < cs.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(cs[i]);
    }
    return out + ")";
  }

  /// Order of e in the group: least m >= 1 with m*e = 0.
  std::int64_t element_order(int e) const {
    std::int64_t m = 1;
    int acc = e;
    while (acc != 0) {
      acc = add(acc, e);
      ++m;
    }
    return m;
  }

  /// The cyclic subgroup generated by e, as sorted element indices.
  std::vector<int> cyclic_span(int e) const {
    std::vector<int> out{0};
    int acc = e;
    while (acc != 0) {
      out.push_back(acc);
      acc = add(acc, e);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  static std::string format_factor_list(const std::vector<std::int64_t>& fs) {
    std::string out = "[";
    for (size_t i = 0; i < fs.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(fs[i]);
    }
    return out + "]";
  }

 private:
  FiniteAbelianModule() = default;
  std::vector<std::int64_t> factors_;
  std::int64_t order_ = 0;
};

/// Every subgroup of the module, arranged as a bounded lattice under
/// inclusion: meet is intersection, join is the subgroup sum, bottom is the
/// zero subgroup and top is the whole group.
struct SubgroupLattice {
  FiniteAbelianModule module;
  LatticePtr lattice;
  std::vector<std::vector<int>> subgroups;  // per lattice element, sorted module elements
};

namespace detail {

inline std::vector<int> subgroup_sum(const FiniteAbelianModule& m, const std::vector<int>& a,
                                     const std::vector<int>& b) {
  std::set<int> out;
  for (int x : a)
    for (int y : b) out.insert(m.add(x, y));
  return std::vector<int>(out.begin(), out.end());
}

/// Greedy minimal generating set; labels are "0" for the trivial subgroup,
/// "M" for the whole group, and "<g1,g2,...>" otherwise.
inline std::string subgroup_label(const FiniteAbelianModule& m, const std::vector<int>& sub) {
  if (sub.size() == 1) return "0";
  if (static_cast<std::int64_t>(sub.size()) == m.order()) return "M";
  std::vector<int> span{0};
  std::vector<int> gens;
  for (int e : sub) {
    if (std::binary_search(span.begin(), span.end(), e)) continue;
    gens.push_back(e);
    span = subgroup_sum(m, span, m.cyclic_span(e));
  }
  std::string out = "<";
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ",";
    out += m.element_text(gens[i]);
  }
  return out + ">";
}

}  // namespace detail

/// Enumerates all subgroups by closing the cyclic subgroups under pairwise
/// sums, then builds the inclusion lattice. Subgroup lattices of non-cyclic
/// groups can be vastly larger than the group itself, so enumeration is
/// guarded by a count cap in addition to the order cap.
inline SubgroupLattice subgroup_lattice(const FiniteAbelianModule& m,
                                        std::size_t subgroup_count_cap = 4096) {
  std::set<std::vector<int>> subs;
  for (int e = 0; e < m.order(); ++e) subs.insert(m.cyclic_span(e));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> current(subs.begin(), subs.end());
    for (size_t i = 0; i < current.size() && !grew; ++i) {
      for (size_t j = i + 1; j < current.size() && !grew; ++j) {
        std::vector<int> sum = detail::subgroup_sum(m, current[i], current[j]);
        if (subs.insert(std::move(sum)).second) grew = true;
      }
    }
    if (subs.size() > subgroup_count_cap)
      raise(errc::order_cap_exceeded,
            "subgroup lattice exceeds " + std::to_string(subgroup_count_cap) + " subgroups");
  }

  std::vector<std::vector<int>> ordered(subs.begin(), subs.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  std::vector<std::string> labels;
  labels.reserve(ordered.size());
  for (const auto& sub : ordered) labels.push_back(detail::subgroup_label(m, sub));

  std::vector<std::pair<std::string, std::string>> relation;
  for (size_t i = 0; i < ordered.size(); ++i) {
    for (size_t j = 0; j < ordered.size(); ++j) {
      if (i == j) continue;
      if (std::includes(ordered[j].begin(), ordered[j].end(), ordered[i].begin(), ordered[i].end()))
        relation.emplace_back(labels[i], labels[j]);
    }
  }

  SubgroupLattice out{m, make_lattice(FiniteLattice::build(labels, relation, RelationKind::full_order)),
                      std::move(ordered)};
  return out;
}

/// The associated-primes pay-off on the subgroup lattice: the value on an
/// inclusion (N', N) is the set of prime divisors of the index [N : N'], in
/// the prime-set value domain.
inline Game ass_payoff(const SubgroupLattice& sl) {
  return Game::from_function(sl.lattice, ValueDomain::prime_set(), [&](int x, int y) {
    std::int64_t index = static_cast<std::int64_t>(sl.subgroups[static_cast<size_t>(y)].size()) /
                         static_cast<std::int64_t>(sl.subgroups[static_cast<size_t>(x)].size());
    return Value::primes(prime_divisors(index));
  });
}

inline Game ass_payoff(const FiniteAbelianModule& m) { return ass_payoff(subgroup_lattice(m)); }

struct CoprimaryFiltration {
  SubgroupLattice carrier;
  Filtration filtration;
  std::vector<std::int64_t> primes;  // one per step, strictly decreasing
};

/// The canonical filtration of the associated-primes game: each subquotient
/// is a p-group and the step primes strictly decrease.
inline CoprimaryFiltration coprimary_filtration(const FiniteAbelianModule& m) {
  CoprimaryFiltration out{subgroup_lattice(m), {}, {}};
  Analysis analysis(ass_payoff(out.carrier));
  out.filtration = analysis.hn_filtration();
  for (const Value& slope : out.filtration.slopes) {
    if (slope.kind() != Value::Kind::prime_set || slope.prime_values().size() != 1)
      raise(errc::internal, "coprimary step slope is not a single prime");
    out.primes.push_back(slope.prime_values()[0]);
  }
  return out;
}

}  // namespace hn
