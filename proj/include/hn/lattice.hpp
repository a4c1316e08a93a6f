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
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hn/errors.hpp"

namespace hn {

enum class RelationKind { covers, full_order };

struct Interval;

/// A finite bounded lattice over labelled elements. The order is kept as a
/// dense boolean relation; meet and join tables are fully materialised and
/// verified against the order at construction time. Instances are immutable
/// once built and safe for concurrent reads.
class FiniteLattice {
 public:
  /// Builds and validates a lattice from labels and an order relation given
  /// either as a Hasse diagram ("covers") or as the full order. In both
  /// cases the reflexive-transitive closure is taken (a no-op for a genuine
  /// full order), then antisymmetry, boundedness and the existence of all
  /// meets and joins are checked.
  static FiniteLattice build(std::vector<std::string> labels,
                             const std::vector<std::pair<std::string, std::string>>& relation,
                             RelationKind kind = RelationKind::covers) {
    (void)kind;  // closure is idempotent, so both kinds share one path
    FiniteLattice lat;
    lat.init_labels(std::move(labels));
    const int n = lat.n_;
    lat.alloc_bits();
    for (const auto& [from, to] : relation) {
      int i = lat.index_of(from);
      int j = lat.index_of(to);
      lat.set_up(i, j);
    }
    for (int i = 0; i < n; ++i) lat.set_up(i, i);
    lat.transitive_closure();
    lat.finish_validation();
    return lat;
  }

  /// Builds the lattice with the order reversed: bottom and top swap, as do
  /// the meet and join tables. Labels and element indices are unchanged.
  static FiniteLattice reversed(const FiniteLattice& src) {
    FiniteLattice lat;
    lat.init_labels(src.labels_);
    lat.alloc_bits();
    lat.up_ = src.down_;
    lat.down_ = src.up_;
    lat.meet_ = src.join_;
    lat.join_ = src.meet_;
    lat.bottom_ = src.top_;
    lat.top_ = src.bottom_;
    return lat;
  }

  int size() const noexcept { return n_; }

  const std::string& label(int i) const { return labels_[static_cast<size_t>(i)]; }

  const std::vector<std::string>& labels() const noexcept { return labels_; }

  int index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end())
      raise(errc::unknown_label, "no element labelled '" + std::string(name) + "'");
    return it->second;
  }

  bool has_label(std::string_view name) const {
    return index_.find(std::string(name)) != index_.end();
  }

  bool leq(int a, int b) const { return bit(up_, a, b); }
  bool less(int a, int b) const { return a != b && leq(a, b); }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

  int meet(int a, int b) const { return meet_[static_cast<size_t>(a) * n_ + b]; }
  int join(int a, int b) const { return join_[static_cast<size_t>(a) * n_ + b]; }

  int bottom() const noexcept { return bottom_; }
  int top() const noexcept { return top_; }

  bool is_chain() const {
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b)
        if (!comparable(a, b)) return false;
    return true;
  }

  /// All strictly ordered pairs (x, y) with x < y, in lexicographic index
  /// order.
  std::vector<std::pair<int, int>> strict_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        if (less(a, b)) out.emplace_back(a, b);
    return out;
  }

  std::size_t strict_pair_count() const {
    std::size_t c = 0;
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        if (less(a, b)) ++c;
    return c;
  }

  /// Covering relation (transitive reduction), computed on demand.
  std::vector<std::pair<int, int>> cover_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n_; ++a) {
      for (int b = 0; b < n_; ++b) {
        if (!less(a, b)) continue;
        bool is_cover = true;
        for (int z = 0; z < n_; ++z) {
          if (less(a, z) && less(z, b)) {
            is_cover = false;
            break;
          }
        }
        if (is_cover) out.emplace_back(a, b);
      }
    }
    return out;
  }

  Interval interval(int lo, int hi) const;

  /// The sub-lattice induced by a meet/join-closed member set (ascending
  /// parent indices). Labels carry over; meets and joins are remapped from
  /// the ambient tables, which is sound exactly because the member set is
  /// closed.
  FiniteLattice restricted_to(const std::vector<int>& members) const {
    FiniteLattice lat;
    std::vector<std::string> labs;
    labs.reserve(members.size());
    for (int m : members) labs.push_back(labels_[static_cast<size_t>(m)]);
    lat.init_labels(std::move(labs));
    lat.alloc_bits();
    std::vector<int> local(static_cast<size_t>(n_), -1);
    for (size_t i = 0; i < members.size(); ++i) local[static_cast<size_t>(members[i])] = static_cast<int>(i);
    const int m = lat.n_;
    lat.meet_.assign(static_cast<size_t>(m) * m, -1);
    lat.join_.assign(static_cast<size_t>(m) * m, -1);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if (leq(members[static_cast<size_t>(i)], members[static_cast<size_t>(j)])) {
          lat.set_up(i, j);
          lat.set_down(j, i);
        }
        int mt = local[static_cast<size_t>(meet(members[static_cast<size_t>(i)], members[static_cast<size_t>(j)]))];
        int jn = local[static_cast<size_t>(join(members[static_cast<size_t>(i)], members[static_cast<size_t>(j)]))];
        if (mt < 0 || jn < 0)
          raise(errc::internal, "member set not closed under meet/join");
        lat.meet_[static_cast<size_t>(i) * m + j] = mt;
        lat.join_[static_cast<size_t>(i) * m + j] = jn;
      }
    }
    lat.bottom_ = lat.top_ = -1;
    for (int i = 0; i < m; ++i) {
      bool is_bottom = true, is_top = true;
      for (int j = 0; j < m; ++j) {
        is_bottom = is_bottom && lat.leq(i, j);
        is_top = is_top && lat.leq(j, i);
      }
      if (is_bottom) lat.bottom_ = i;
      if (is_top) lat.top_ = i;
    }
    if (lat.bottom_ < 0 || lat.top_ < 0)
      raise(errc::internal, "restricted member set is not bounded");
    return lat;
  }

  bool operator==(const FiniteLattice& other) const {
    return n_ == other.n_ && labels_ == other.labels_ && up_ == other.up_ &&
           bottom_ == other.bottom_ && top_ == other.top_;
  }
  bool operator!=(const FiniteLattice& other) const { return !(*this == other); }

 private:
  FiniteLattice() = default;

  void init_labels(std::vector<std::string> labels) {
    if (labels.empty())
      raise(errc::trivial_lattice, "a bounded lattice needs at least two elements");
    labels_ = std::move(labels);
    n_ = static_cast<int>(labels_.size());
    for (int i = 0; i < n_; ++i) {
      auto [it, inserted] = index_.emplace(labels_[static_cast<size_t>(i)], i);
      (void)it;
      if (!inserted)
        raise(errc::duplicate_label, "label '" + labels_[static_cast<size_t>(i)] + "' appears twice");
    }
  }

  void alloc_bits() {
    words_ = (n_ + 63) / 64;
    up_.assign(static_cast<size_t>(n_) * words_, 0);
    down_.assign(static_cast<size_t>(n_) * words_, 0);
  }

  static bool bit(const std::vector<std::uint64_t>& rows, int row, int col, int words) {
    return (rows[static_cast<size_t>(row) * words + col / 64] >> (col % 64)) & 1u;
  }
  bool bit(const std::vector<std::uint64_t>& rows, int row, int col) const {
    return bit(rows, row, col, words_);
  }
  void set_up(int a, int b) { up_[static_cast<size_t>(a) * words_ + b / 64] |= 1ull << (b % 64); }
  void set_down(int a, int b) { down_[static_cast<size_t>(a) * words_ + b / 64] |= 1ull << (b % 64); }

  // Reflexive-transitive closure by repeated boolean-matrix squaring.
  void transitive_closure() {
    bool changed = true;
    std::vector<std::uint64_t> next(up_.size());
    while (changed) {
      next = up_;
      for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
          if (bit(up_, i, j)) {
            for (int w = 0; w < words_; ++w)
              next[static_cast<size_t>(i) * words_ + w] |= up_[static_cast<size_t>(j) * words_ + w];
          }
        }
      }
      changed = next != up_;
      up_.swap(next);
    }
  }

  void finish_validation() {
    // Antisymmetry: a two-way strict relation is a cycle.
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        if (bit(up_, i, j) && bit(up_, j, i))
          raise(errc::not_a_partial_order,
                "cycle through '" + label(i) + "' and '" + label(j) + "'");
      }
    }
    if (n_ == 1)
      raise(errc::trivial_lattice, "bottom equals top (single element)");
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (bit(up_, i, j)) set_down(j, i);

    top_ = -1;
    for (int t = 0; t < n_; ++t) {
      bool all = true;
      for (int i = 0; i < n_ && all; ++i) all = bit(up_, i, t);
      if (all) {
        top_ = t;
        break;
      }
    }
    if (top_ < 0) raise(errc::not_a_lattice, "no greatest element (no top)");
    bottom_ = -1;
    for (int b = 0; b < n_; ++b) {
      bool all = true;
      for (int i = 0; i < n_ && all; ++i) all = bit(up_, b, i);
      if (all) {
        bottom_ = b;
        break;
      }
    }
    if (bottom_ < 0) raise(errc::not_a_lattice, "no least element (no bottom)");

    meet_.assign(static_cast<size_t>(n_) * n_, -1);
    join_.assign(static_cast<size_t>(n_) * n_, -1);
    std::vector<int> bounds;
    for (int a = 0; a < n_; ++a) {
      for (int b = a; b < n_; ++b) {
        bounds.clear();
        for (int z = 0; z < n_; ++z)
          if (bit(up_, z, a) && bit(up_, z, b)) bounds.push_back(z);
        int glb = -1;
        for (int g : bounds) {
          bool greatest = true;
          for (int z : bounds) {
            if (!bit(up_, z, g)) {
              greatest = false;
              break;
            }
          }
          if (greatest) {
            glb = g;
            break;
          }
        }
        if (glb < 0)
          raise(errc::not_a_lattice,
                "no greatest lower bound for ('" + label(a) + "', '" + label(b) + "')");
        meet_[static_cast<size_t>(a) * n_ + b] = meet_[static_cast<size_t>(b) * n_ + a] = glb;

        bounds.clear();
        for (int z = 0; z < n_; ++z)
          if (bit(up_, a, z) && bit(up_, b, z)) bounds.push_back(z);
        int lub = -1;
        for (int g : bounds) {
          bool least = true;
          for (int z : bounds) {
            if (!bit(up_, g, z)) {
              least = false;
              break;
            }
          }
          if (least) {
            lub = g;
            break;
          }
        }
        if (lub < 0)
          raise(errc::not_a_lattice,
                "no least upper bound for ('" + label(a) + "', '" + label(b) + "')");
        join_[static_cast<size_t>(a) * n_ + b] = join_[static_cast<size_t>(b) * n_ + a] = lub;
      }
    }
  }

  int n_ = 0;
  int words_ = 0;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::uint64_t> up_;    // bit (a,b) set iff a <= b
  std::vector<std::uint64_t> down_;  // transpose of up_
  std::vector<int> meet_;
  std::vector<int> join_;
  int bottom_ = -1;
  int top_ = -1;
};

/// A closed interval [lo, hi] of a lattice: the members are every element
/// between the endpoints and form a bounded lattice of their own.
struct Interval {
  const FiniteLattice* parent = nullptr;
  int lo = -1;
  int hi = -1;
  std::vector<int> members;  // lo first, hi last, middles ascending by index

  FiniteLattice as_lattice() const { return parent->restricted_to(members); }
};

inline Interval FiniteLattice::interval(int lo, int hi) const {
  if (!less(lo, hi))
    raise(errc::not_strictly_ordered,
          "'" + label(lo) + "' is not strictly below '" + label(hi) + "'");
  Interval iv;
  iv.parent = this;
  iv.lo = lo;
  iv.hi = hi;
  iv.members.push_back(lo);
  for (int z = 0; z < n_; ++z)
    if (z != lo && z != hi && leq(lo, z) && leq(z, hi)) iv.members.push_back(z);
  iv.members.push_back(hi);
  return iv;
}

using LatticePtr = std::shared_ptr<const FiniteLattice>;

inline LatticePtr make_lattice(FiniteLattice lat) {
  return std::make_shared<const FiniteLattice>(std::move(lat));
}

}  // namespace hn
