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

#include "hn/engine.hpp"
#include "hn/gamefile.hpp"

namespace hn {

inline const char* ordering_text(Ordering o) {
  switch (o) {
    case Ordering::less: return "less";
    case Ordering::equal: return "equal";
    case Ordering::greater: return "greater";
    case Ordering::incomparable: return "incomparable";
  }
  return "?";
}

inline std::string domain_text(const ValueDomain& d) {
  switch (d.mode()) {
    case ValueDomain::Mode::extended_rational: return "rational";
    case ValueDomain::Mode::lex_tuple: return "lex_tuple(" + std::to_string(d.lex_length()) + ")";
    case ValueDomain::Mode::prime_set: return "prime_set";
    case ValueDomain::Mode::finite_poset:
      return "finite_poset(n=" + std::to_string(d.values().size()) + ")";
  }
  return "?";
}

inline std::string element_set_text(const FiniteLattice& L, const std::vector<int>& elems) {
  std::string out = "{";
  for (size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ", ";
    out += L.label(elems[i]);
  }
  return out + "}";
}

inline std::string render_report(const GameReport& r, const Analysis& an) {
  const ValueDomain& D = an.domain();
  std::string out;
  out += "n: " + std::to_string(an.lattice().size()) + "\n";
  out += "strict_pairs: " + std::to_string(an.game().pairs().size()) + "\n";
  out += "domain: " + domain_text(D) + "\n";
  out += "mu_A_star: " + D.to_text(r.mu_a_star) + "\n";
  out += "mu_B_star: " + D.to_text(r.mu_b_star) + "\n";
  out += "mu_top: " + D.to_text(r.mu_top) + "\n";
  out += "mu_max_top: " + D.to_text(r.mu_max_top) + "\n";
  out += "mu_min_top: " + D.to_text(r.mu_min_top) + "\n";
  out += "st: " + element_set_text(an.lattice(), r.st) + "\n";
  out += std::string("convex: ") + (r.flags.convex ? "true" : "false") + "\n";
  out += std::string("slope_like: ") +
         (r.flags.slope_like ? (*r.flags.slope_like ? "true" : "false")
                             : "n/a (finite_poset domain)") +
         "\n";
  out += std::string("affine: ") + (r.flags.affine ? "true" : "false") + "\n";
  out += std::string("semistable: ") + (r.flags.semistable ? "true" : "false") + "\n";
  out += std::string("stable: ") + (r.flags.stable ? "true" : "false") + "\n";
  out += std::string("nash: ") + (r.flags.nash ? "true" : "false");
  if (r.nash_relation == Ordering::incomparable)
    out += " (mu_A_star and mu_B_star incomparable)";
  out += "\n";
  out += "equivalence: [";
  for (size_t i = 0; i < r.equivalence.size(); ++i) {
    if (i) out += ", ";
    out += r.equivalence[i] ? "true" : "false";
  }
  out += "]\n";
  return out;
}

inline ordered_json report_to_json(const GameReport& r, const Analysis& an) {
  const ValueDomain& D = an.domain();
  ordered_json out;
  out["n"] = an.lattice().size();
  out["strict_pairs"] = an.game().pairs().size();
  out["domain"] = domain_to_json(D);
  out["mu_A_star"] = value_to_json(D, r.mu_a_star);
  out["mu_B_star"] = value_to_json(D, r.mu_b_star);
  out["mu_top"] = value_to_json(D, r.mu_top);
  out["mu_max_top"] = value_to_json(D, r.mu_max_top);
  out["mu_min_top"] = value_to_json(D, r.mu_min_top);
  ordered_json st = ordered_json::array();
  for (int s : r.st) st.push_back(an.lattice().label(s));
  out["st"] = st;
  ordered_json flags;
  flags["convex"] = r.flags.convex;
  if (r.flags.slope_like)
    flags["slope_like"] = *r.flags.slope_like;
  else
    flags["slope_like"] = nullptr;
  flags["affine"] = r.flags.affine;
  flags["semistable"] = r.flags.semistable;
  flags["stable"] = r.flags.stable;
  flags["nash"] = r.flags.nash;
  out["flags"] = flags;
  out["nash_relation"] = ordering_text(r.nash_relation);
  ordered_json eq = ordered_json::array();
  for (bool e : r.equivalence) eq.push_back(e);
  out["equivalence"] = eq;
  return out;
}

inline std::string render_filtration(const Analysis& an, const Filtration& f) {
  const FiniteLattice& L = an.lattice();
  const ValueDomain& D = an.domain();
  std::string out = "chain: ";
  for (size_t i = 0; i < f.chain.size(); ++i) {
    if (i) out += " < ";
    out += L.label(f.chain[i]);
  }
  out += "\n";
  for (size_t i = 0; i < f.slopes.size(); ++i) {
    out += "step " + std::to_string(i + 1) + ": [" + L.label(f.chain[i]) + " -> " +
           L.label(f.chain[i + 1]) + "] mu_A = " + D.to_text(f.slopes[i]) + "\n";
  }
  return out;
}

inline std::string render_validate_summary(const GameReport& r, const Analysis& an) {
  std::string out = "ok: n=" + std::to_string(an.lattice().size()) +
                    " strict_pairs=" + std::to_string(an.game().pairs().size()) +
                    " domain=" + domain_text(an.domain()) + "\n";
  out += std::string("convex: ") + (r.flags.convex ? "true" : "false") + "\n";
  out += std::string("slope_like: ") +
         (r.flags.slope_like ? (*r.flags.slope_like ? "true" : "false")
                             : "n/a (finite_poset domain)") +
         "\n";
  out += std::string("affine: ") + (r.flags.affine ? "true" : "false") + "\n";
  out += std::string("semistable: ") + (r.flags.semistable ? "true" : "false") + "\n";
  out += std::string("stable: ") + (r.flags.stable ? "true" : "false") + "\n";
  out += "st: " + element_set_text(an.lattice(), r.st) + "\n";
  return out;
}

}  // namespace hn
