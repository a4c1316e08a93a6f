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
#include <string>
#include <vector>

#include "hn/engine.hpp"

namespace hn {

namespace dot_detail {

inline std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace dot_detail

/// Hasse diagram of the game in DOT form: cover edges annotated with their
/// pay-offs, the canonical filtration's elements drawn with doubled borders,
/// and one cluster per filtration step labelled with the step threshold.
/// When no filtration exists (non-convex pay-off, or no greatest
/// destabilizer in poset mode) the plain diagram is emitted. Output is
/// deterministic: everything is sorted by label.
inline std::string to_dot(const Analysis& an) {
  const FiniteLattice& L = an.lattice();
  const ValueDomain& D = an.domain();

  bool have_filtration = false;
  Filtration filtration;
  std::string no_filtration_note;
  try {
    filtration = an.hn_filtration();
    have_filtration = true;
  } catch (const Error& e) {
    no_filtration_note = std::string(errc_name(e.code()));
  }

  std::vector<char> on_chain(static_cast<size_t>(L.size()), 0);
  if (have_filtration)
    for (int c : filtration.chain) on_chain[static_cast<size_t>(c)] = 1;

  std::vector<int> order(static_cast<size_t>(L.size()));
  for (int i = 0; i < L.size(); ++i) order[static_cast<size_t>(i)] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return L.label(a) < L.label(b); });

  std::string out = "digraph hn_game {\n";
  out += "  rankdir=BT;\n";
  out += "  node [shape=box];\n";
  if (!no_filtration_note.empty())
    out += "  // no filtration shown: " + no_filtration_note + "\n";
  for (int i : order) {
    if (have_filtration && on_chain[static_cast<size_t>(i)] && i != L.bottom()) continue;
    out += "  \"" + dot_detail::escape(L.label(i)) + "\"";
    if (have_filtration && i == L.bottom()) out += " [peripheries=2]";
    out += ";\n";
  }
  if (have_filtration) {
    for (size_t step = 0; step + 1 < filtration.chain.size(); ++step) {
      int elem = filtration.chain[step + 1];
      out += "  subgraph cluster_step_" + std::to_string(step + 1) + " {\n";
      out += "    label=\"mu_A = " + dot_detail::escape(D.to_text(filtration.slopes[step])) + "\";\n";
      out += "    \"" + dot_detail::escape(L.label(elem)) + "\" [peripheries=2];\n";
      out += "  }\n";
    }
  }

  auto covers = L.cover_pairs();
  std::sort(covers.begin(), covers.end(), [&](const auto& a, const auto& b) {
    if (L.label(a.first) != L.label(b.first)) return L.label(a.first) < L.label(b.first);
    return L.label(a.second) < L.label(b.second);
  });
  for (const auto& [a, b] : covers) {
    out += "  \"" + dot_detail::escape(L.label(a)) + "\" -> \"" + dot_detail::escape(L.label(b)) +
           "\" [label=\"" + dot_detail::escape(D.to_text(an.mu(a, b))) + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace hn
