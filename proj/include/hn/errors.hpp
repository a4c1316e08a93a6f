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

#include <stdexcept>
#include <string>

namespace hn {

/// Structured failure classes surfaced by the library and mapped to CLI
/// diagnostics. Every thrown hn::Error carries one of these.
enum class errc {
  not_a_partial_order,
  not_a_lattice,
  trivial_lattice,
  duplicate_label,
  unknown_label,
  not_strictly_ordered,
  top_not_allowed,
  mode_mismatch,
  empty_set,
  missing_weight,
  duplicate_weight,
  partial_domain_unsupported,
  not_convex,
  no_greatest_destabilizer,
  not_semistable,
  not_slope_like,
  infinite_top_slope,
  not_a_chain,
  rank_not_monotone,
  zero_rank_non_positive_degree,
  order_cap_exceeded,
  invariant_factor_chain,
  rejection_budget_exceeded,
  size_cap,
  parse_error,
  internal,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::not_a_partial_order: return "NotAPartialOrder";
    case errc::not_a_lattice: return "NotALattice";
    case errc::trivial_lattice: return "TrivialLattice";
    case errc::duplicate_label: return "DuplicateLabel";
    case errc::unknown_label: return "UnknownLabel";
    case errc::not_strictly_ordered: return "NotStrictlyOrdered";
    case errc::top_not_allowed: return "TopNotAllowed";
    case errc::mode_mismatch: return "ModeMismatch";
    case errc::empty_set: return "EmptySet";
    case errc::missing_weight: return "MissingWeight";
    case errc::duplicate_weight: return "DuplicateWeight";
    case errc::partial_domain_unsupported: return "PartialDomainUnsupported";
    case errc::not_convex: return "NotConvex";
    case errc::no_greatest_destabilizer: return "NoGreatestDestabilizer";
    case errc::not_semistable: return "NotSemistable";
    case errc::not_slope_like: return "NotSlopeLike";
    case errc::infinite_top_slope: return "InfiniteTopSlope";
    case errc::not_a_chain: return "NotAChain";
    case errc::rank_not_monotone: return "RankNotMonotone";
    case errc::zero_rank_non_positive_degree: return "ZeroRankNonPositiveDegree";
    case errc::order_cap_exceeded: return "OrderCapExceeded";
    case errc::invariant_factor_chain: return "InvariantFactorChain";
    case errc::rejection_budget_exceeded: return "RejectionBudgetExceeded";
    case errc::size_cap: return "SizeCap";
    case errc::parse_error: return "ParseError";
    case errc::internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace hn
