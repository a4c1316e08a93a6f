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
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hn/errors.hpp"
#include "hn/lattice.hpp"
#include "hn/rational.hpp"

namespace hn {

enum class Ordering { less, equal, greater, incomparable };

inline Ordering flip(Ordering o) {
  if (o == Ordering::less) return Ordering::greater;
  if (o == Ordering::greater) return Ordering::less;
  return o;
}

/// One pay-off value: an extended rational, a lexicographic tuple of
/// rationals (highest coordinate first), a finite set of primes, or a point
/// of a user-supplied value lattice. The infinities belong to every mode.
class Value {
 public:
  enum class Kind { neg_infinity, pos_infinity, rational, lex_tuple, prime_set, poset_point };

  static Value neg_infinity() { return Value(NegInf{}); }
  static Value pos_infinity() { return Value(PosInf{}); }
  static Value of(Rational r) { return Value(std::move(r)); }
  static Value of(long long n) { return Value(Rational(n)); }

  static Value lex(std::vector<Rational> coords) {
    if (coords.empty()) raise(errc::mode_mismatch, "lex tuple must have at least one coordinate");
    return Value(Lex{std::move(coords)});
  }

  /// Validates that the members are pairwise-distinct primes; stores them in
  /// ascending order. The empty set is a legal value.
  static Value primes(std::vector<std::int64_t> ps) {
    std::sort(ps.begin(), ps.end());
    for (size_t i = 0; i < ps.size(); ++i) {
      if (!is_prime(ps[i]))
        raise(errc::mode_mismatch, std::to_string(ps[i]) + " is not a prime");
      if (i > 0 && ps[i] == ps[i - 1])
        raise(errc::mode_mismatch, "duplicate prime " + std::to_string(ps[i]));
    }
    return Value(Primes{std::move(ps)});
  }

  static Value point(int index) { return Value(Point{index}); }

  Kind kind() const {
    switch (data_.index()) {
      case 0: return Kind::neg_infinity;
      case 1: return Kind::pos_infinity;
      case 2: return Kind::rational;
      case 3: return Kind::lex_tuple;
      case 4: return Kind::prime_set;
      default: return Kind::poset_point;
    }
  }

  bool is_finite() const {
    return kind() != Kind::neg_infinity && kind() != Kind::pos_infinity;
  }
  bool is_pos_infinity() const { return kind() == Kind::pos_infinity; }
  bool is_neg_infinity() const { return kind() == Kind::neg_infinity; }

  const Rational& rat() const { return std::get<Rational>(data_); }
  const std::vector<Rational>& coords() const { return std::get<Lex>(data_).coords; }
  const std::vector<std::int64_t>& prime_values() const { return std::get<Primes>(data_).primes; }
  int point_index() const { return std::get<Point>(data_).index; }

  bool operator==(const Value& other) const { return data_ == other.data_; }
  bool operator!=(const Value& other) const { return !(data_ == other.data_); }

 private:
  struct NegInf {
    bool operator==(const NegInf&) const { return true; }
  };
  struct PosInf {
    bool operator==(const PosInf&) const { return true; }
  };
  struct Lex {
    std::vector<Rational> coords;
    bool operator==(const Lex& o) const { return coords == o.coords; }
  };
  struct Primes {
    std::vector<std::int64_t> primes;  // ascending
    bool operator==(const Primes& o) const { return primes == o.primes; }
  };
  struct Point {
    int index;
    bool operator==(const Point& o) const { return index == o.index; }
  };

  template <typename T>
  explicit Value(T v) : data_(std::move(v)) {}

  std::variant<NegInf, PosInf, Rational, Lex, Primes, Point> data_;
};

/// The ordered set the pay-offs live in. The rational, lex-tuple and
/// prime-set modes are total orders; the finite-poset mode is backed by a
/// user-supplied value lattice and may leave pairs incomparable. A domain can
/// be order-reversed, which is how dual games are computed.
class ValueDomain {
 public:
  enum class Mode { extended_rational, lex_tuple, prime_set, finite_poset };

  static ValueDomain extended_rational() { return ValueDomain(Mode::extended_rational, 0, nullptr, false); }

  static ValueDomain lex_tuple(int length) {
    if (length < 1) raise(errc::mode_mismatch, "lex tuple length must be >= 1");
    return ValueDomain(Mode::lex_tuple, length, nullptr, false);
  }

  static ValueDomain prime_set() { return ValueDomain(Mode::prime_set, 0, nullptr, false); }

  static ValueDomain finite_poset(LatticePtr values) {
    if (!values) raise(errc::mode_mismatch, "finite poset mode needs a value lattice");
    return ValueDomain(Mode::finite_poset, 0, std::move(values), false);
  }

  Mode mode() const noexcept { return mode_; }
  bool total_order() const noexcept { return mode_ != Mode::finite_poset; }
  bool is_reversed() const noexcept { return reversed_; }
  int lex_length() const noexcept { return lex_length_; }
  const FiniteLattice& values() const { return *value_lattice_; }
  const LatticePtr& values_ptr() const { return value_lattice_; }

  ValueDomain reversed_copy() const {
    ValueDomain d = *this;
    d.reversed_ = !d.reversed_;
    return d;
  }

  /// ModeMismatch if the value cannot belong to this domain. Infinities
  /// belong everywhere.
  void validate(const Value& v) const {
    switch (v.kind()) {
      case Value::Kind::neg_infinity:
      case Value::Kind::pos_infinity:
        return;
      case Value::Kind::rational:
        if (mode_ != Mode::extended_rational)
          raise(errc::mode_mismatch, "rational value in a non-rational domain");
        return;
      case Value::Kind::lex_tuple:
        if (mode_ != Mode::lex_tuple)
          raise(errc::mode_mismatch, "lex tuple value in a non-lex domain");
        if (static_cast<int>(v.coords().size()) != lex_length_)
          raise(errc::mode_mismatch,
                "lex tuple of length " + std::to_string(v.coords().size()) +
                    " in a domain of length " + std::to_string(lex_length_));
        return;
      case Value::Kind::prime_set:
        if (mode_ != Mode::prime_set)
          raise(errc::mode_mismatch, "prime set value in a non-prime-set domain");
        return;
      case Value::Kind::poset_point:
        if (mode_ != Mode::finite_poset)
          raise(errc::mode_mismatch, "poset point value in a total-order domain");
        if (v.point_index() < 0 || v.point_index() >= value_lattice_->size())
          raise(errc::mode_mismatch, "poset point index out of range");
        return;
    }
  }

  Ordering compare(const Value& a, const Value& b) const {
    validate(a);
    validate(b);
    Ordering o = compare_raw(a, b);
    return reversed_ ? flip(o) : o;
  }

  bool leq(const Value& a, const Value& b) const {
    Ordering o = compare(a, b);
    return o == Ordering::less || o == Ordering::equal;
  }
  bool lt(const Value& a, const Value& b) const { return compare(a, b) == Ordering::less; }
  bool gt(const Value& a, const Value& b) const { return compare(a, b) == Ordering::greater; }
  bool geq(const Value& a, const Value& b) const {
    Ordering o = compare(a, b);
    return o == Ordering::greater || o == Ordering::equal;
  }

  /// Least upper bound of a non-empty set of values (maximum in the total
  /// modes, iterated join in poset mode). Taking a bound of an empty set is
  /// a contract violation, not a sentinel.
  Value sup(std::span<const Value> vs) const {
    if (vs.empty()) raise(errc::empty_set, "sup of an empty value set");
    return reversed_ ? inf_raw(vs) : sup_raw(vs);
  }

  Value inf(std::span<const Value> vs) const {
    if (vs.empty()) raise(errc::empty_set, "inf of an empty value set");
    return reversed_ ? sup_raw(vs) : inf_raw(vs);
  }

  Value sup(std::initializer_list<Value> vs) const {
    return sup(std::span<const Value>(vs.begin(), vs.size()));
  }
  Value inf(std::initializer_list<Value> vs) const {
    return inf(std::span<const Value>(vs.begin(), vs.size()));
  }

  std::string to_text(const Value& v) const {
    switch (v.kind()) {
      case Value::Kind::neg_infinity: return "-inf";
      case Value::Kind::pos_infinity: return "+inf";
      case Value::Kind::rational: return format_rational(v.rat());
      case Value::Kind::lex_tuple: {
        std::string out = "[";
        for (size_t i = 0; i < v.coords().size(); ++i) {
          if (i) out += ", ";
          out += format_rational(v.coords()[i]);
        }
        return out + "]";
      }
      case Value::Kind::prime_set: {
        std::string out = "{";
        for (size_t i = 0; i < v.prime_values().size(); ++i) {
          if (i) out += ",";
          out += std::to_string(v.prime_values()[i]);
        }
        return out + "}";
      }
      case Value::Kind::poset_point:
        return value_lattice_->label(v.point_index());
    }
    return "?";
  }

  bool operator==(const ValueDomain& other) const {
    if (mode_ != other.mode_ || reversed_ != other.reversed_ || lex_length_ != other.lex_length_)
      return false;
    if (mode_ == Mode::finite_poset) {
      return value_lattice_ == other.value_lattice_ || *value_lattice_ == *other.value_lattice_;
    }
    return true;
  }
  bool operator!=(const ValueDomain& other) const { return !(*this == other); }

 private:
  ValueDomain(Mode m, int len, LatticePtr values, bool rev)
      : mode_(m), lex_length_(len), value_lattice_(std::move(values)), reversed_(rev) {}

  Ordering compare_raw(const Value& a, const Value& b) const {
    using K = Value::Kind;
    if (a.kind() == K::neg_infinity)
      return b.kind() == K::neg_infinity ? Ordering::equal : Ordering::less;
    if (b.kind() == K::neg_infinity) return Ordering::greater;
    if (a.kind() == K::pos_infinity)
      return b.kind() == K::pos_infinity ? Ordering::equal : Ordering::greater;
    if (b.kind() == K::pos_infinity) return Ordering::less;

    switch (mode_) {
      case Mode::extended_rational: {
        if (a.rat() < b.rat()) return Ordering::less;
        if (a.rat() > b.rat()) return Ordering::greater;
        return Ordering::equal;
      }
      case Mode::lex_tuple: {
        const auto& x = a.coords();
        const auto& y = b.coords();
        for (size_t i = 0; i < x.size(); ++i) {
          if (x[i] < y[i]) return Ordering::less;
          if (x[i] > y[i]) return Ordering::greater;
        }
        return Ordering::equal;
      }
      case Mode::prime_set: {
        // Descending lexicographic comparison; a strict prefix is smaller.
        // This total order extends set inclusion and agrees with the numeric
        // order on singletons.
        const auto& x = a.prime_values();
        const auto& y = b.prime_values();
        size_t i = x.size(), j = y.size();
        while (i > 0 && j > 0) {
          if (x[i - 1] < y[j - 1]) return Ordering::less;
          if (x[i - 1] > y[j - 1]) return Ordering::greater;
          --i;
          --j;
        }
        if (i == j) return Ordering::equal;
        return i < j ? Ordering::less : Ordering::greater;
      }
      case Mode::finite_poset: {
        int p = a.point_index(), q = b.point_index();
        if (p == q) return Ordering::equal;
        if (value_lattice_->leq(p, q)) return Ordering::less;
        if (value_lattice_->leq(q, p)) return Ordering::greater;
        return Ordering::incomparable;
      }
    }
    return Ordering::incomparable;
  }

  Value sup_raw(std::span<const Value> vs) const {
    for (const Value& v : vs) validate(v);
    if (mode_ != Mode::finite_poset) {
      const Value* best = &vs.front();
      for (const Value& v : vs.subspan(1)) {
        if (compare_raw(v, *best) == Ordering::greater) best = &v;
      }
      return *best;
    }
    bool have_point = false;
    int acc = -1;
    for (const Value& v : vs) {
      if (v.is_pos_infinity()) return Value::pos_infinity();
      if (v.is_neg_infinity()) continue;
      acc = have_point ? value_lattice_->join(acc, v.point_index()) : v.point_index();
      have_point = true;
    }
    return have_point ? Value::point(acc) : Value::neg_infinity();
  }

  Value inf_raw(std::span<const Value> vs) const {
    for (const Value& v : vs) validate(v);
    if (mode_ != Mode::finite_poset) {
      const Value* best = &vs.front();
      for (const Value& v : vs.subspan(1)) {
        if (compare_raw(v, *best) == Ordering::less) best = &v;
      }
      return *best;
    }
    bool have_point = false;
    int acc = -1;
    for (const Value& v : vs) {
      if (v.is_neg_infinity()) return Value::neg_infinity();
      if (v.is_pos_infinity()) continue;
      acc = have_point ? value_lattice_->meet(acc, v.point_index()) : v.point_index();
      have_point = true;
    }
    return have_point ? Value::point(acc) : Value::pos_infinity();
  }

  Mode mode_;
  int lex_length_;
  LatticePtr value_lattice_;
  bool reversed_;
};

/// a - b for finite rational or lex-tuple values of the same shape.
inline Value value_sub(const Value& a, const Value& b) {
  if (a.kind() == Value::Kind::rational && b.kind() == Value::Kind::rational)
    return Value::of(Rational(a.rat() - b.rat()));
  if (a.kind() == Value::Kind::lex_tuple && b.kind() == Value::Kind::lex_tuple &&
      a.coords().size() == b.coords().size()) {
    std::vector<Rational> out(a.coords().size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = a.coords()[i] - b.coords()[i];
    return Value::lex(std::move(out));
  }
  raise(errc::mode_mismatch, "subtraction needs two finite values of the same shape");
}

/// v / r for a strictly positive rational scalar r.
inline Value value_div(const Value& v, const Rational& r) {
  if (r <= 0) raise(errc::internal, "division by a non-positive scalar");
  if (v.kind() == Value::Kind::rational) return Value::of(Rational(v.rat() / r));
  if (v.kind() == Value::Kind::lex_tuple) {
    std::vector<Rational> out(v.coords().size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = v.coords()[i] / r;
    return Value::lex(std::move(out));
  }
  raise(errc::mode_mismatch, "scalar division needs a rational or lex-tuple value");
}

}  // namespace hn
