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

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "hn/errors.hpp"

namespace hn {

// Exact arbitrary-precision rational. cpp_rational keeps values in lowest
// terms with a positive denominator, so structural equality is canonical.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p/q" or a plain integer string. Rejects anything else, including
/// zero denominators.
inline Rational parse_rational(std::string_view text) {
  if (text.empty()) raise(errc::parse_error, "empty rational literal");
  try {
    return Rational(std::string(text));
  } catch (const std::exception& e) {
    raise(errc::parse_error,
          "bad rational literal '" + std::string(text) + "': " + e.what());
  }
}

inline std::string format_rational(const Rational& value) { return value.str(); }

/// Deterministic primality by trial division; adequate for the small prime
/// labels this library handles.
inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Distinct prime divisors in ascending order.
inline std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  if (n < 0) n = -n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace hn
