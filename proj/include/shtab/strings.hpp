#pragma once

// Decomposition of a labelled graph into {i, i'}-components ("doubled
// strings") and the distance statistics read off them.
//
// Two templates are recognised:
//   second kind: a chain v_0 -> ... -> v_L in which every step carries both
//                an i and an i' edge (L = 0 is a lone vertex);
//   first kind:  two i-chains u_0..u_L and d_0..d_L with i' rungs u_k -> d_k
//                (L = 0 is the two-vertex string joined by an i' edge only).
// Anything else is reported as a failure of the doubled-string axiom.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace shtab {

enum class StringKind { first, second };

struct DoubledString {
  int index = 1;
  std::optional<StringKind> kind;  // nullopt: matches neither template
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> upper;  // the chain (second kind) or upper strand
  std::vector<std::size_t> lower;  // lower strand (first kind only)
  std::string problem;

  [[nodiscard]] std::size_t top() const { return upper.front(); }
  [[nodiscard]] std::size_t bottom() const {
    return kind == StringKind::first ? lower.back() : upper.back();
  }
};

/// Distances to the top (eps) and bottom (phi) of the doubled string:
/// total, along primed edges, and along unprimed edges.
struct StringStats {
  int eps = 0;
  int phi = 0;
  int eps_prime = 0;
  int phi_prime = 0;
  int eps_hat = 0;
  int phi_hat = 0;
  bool defined = false;

  friend constexpr bool operator==(const StringStats&, const StringStats&) = default;
};

namespace detail {

[[nodiscard]] inline std::vector<std::size_t> follow(const LabeledGraph& g, std::size_t v, EdgeLabel l) {
  std::vector<std::size_t> out{v};
  while (auto next = g.f(out.back(), l)) {
    if (out.size() > g.size()) break;  // cycle
    out.push_back(*next);
  }
  return out;
}

[[nodiscard]] inline bool classify_second(const LabeledGraph& g, int i, DoubledString& s) {
  const EdgeLabel un{i, false};
  const EdgeLabel pr{i, true};
  std::vector<std::size_t> chain{s.upper.front()};
  for (;;) {
    const auto a = g.f(chain.back(), un);
    const auto b = g.f(chain.back(), pr);
    if (!a && !b) break;
    if (!a || !b || *a != *b || chain.size() > s.vertices.size()) return false;
    chain.push_back(*a);
  }
  if (chain.size() != s.vertices.size()) return false;
  s.kind = StringKind::second;
  s.upper = std::move(chain);
  return true;
}

[[nodiscard]] inline bool classify_first(const LabeledGraph& g, int i, DoubledString& s) {
  const EdgeLabel un{i, false};
  const EdgeLabel pr{i, true};
  const std::size_t top = s.upper.front();
  auto upper = follow(g, top, un);
  const auto d0 = g.f(top, pr);
  if (!d0 || upper.size() > s.vertices.size()) return false;
  auto lower = follow(g, *d0, un);
  if (lower.size() != upper.size() || 2 * upper.size() != s.vertices.size()) return false;
  for (std::size_t k = 0; k < upper.size(); ++k) {
    if (g.f(upper[k], pr) != lower[k]) return false;
    if (g.f(lower[k], pr)) return false;
  }
  s.kind = StringKind::first;
  s.upper = std::move(upper);
  s.lower = std::move(lower);
  return true;
}

}  // namespace detail

/// All {i, i'}-components of `g`, classified.
[[nodiscard]] inline std::vector<DoubledString> doubled_strings(const LabeledGraph& g, int i) {
  const EdgeLabel un{i, false};
  const EdgeLabel pr{i, true};
  std::vector<DoubledString> out;
  std::vector<bool> seen(g.size(), false);
  for (std::size_t start = 0; start < g.size(); ++start) {
    if (seen[start]) continue;
    DoubledString s;
    s.index = i;
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      s.vertices.push_back(v);
      for (EdgeLabel l : {un, pr})
        for (auto nb : {g.f(v, l), g.e(v, l)})
          if (nb && !seen[*nb]) {
            seen[*nb] = true;
            stack.push_back(*nb);
          }
    }
    std::sort(s.vertices.begin(), s.vertices.end());
    std::vector<std::size_t> sources;
    for (std::size_t v : s.vertices)
      if (!g.e(v, un) && !g.e(v, pr)) sources.push_back(v);
    if (sources.size() != 1) {
      s.problem = sources.empty() ? "no top vertex (cycle)"
                                  : std::to_string(sources.size()) + " top vertices";
      s.upper = {s.vertices.front()};
    } else {
      s.upper = {sources.front()};
      if (!detail::classify_second(g, i, s) && !detail::classify_first(g, i, s))
        s.problem = "component of " + std::to_string(s.vertices.size()) +
                    " vertices matches neither doubled-string template";
    }
    out.push_back(std::move(s));
  }
  return out;
}

/// stats[i - 1][v] for every index and vertex; entries of unclassified
/// strings stay undefined.
[[nodiscard]] inline std::vector<std::vector<StringStats>> string_stats(
    const LabeledGraph& g, const std::vector<std::vector<DoubledString>>& strings) {
  std::vector<std::vector<StringStats>> out(strings.size(), std::vector<StringStats>(g.size()));
  for (std::size_t idx = 0; idx < strings.size(); ++idx) {
    for (const DoubledString& s : strings[idx]) {
      if (!s.kind) continue;
      auto& st = out[idx];
      const int len = static_cast<int>(s.upper.size()) - 1;
      if (*s.kind == StringKind::second) {
        // Every step is doubled; it is counted once, as an unprimed step.
        for (int k = 0; k <= len; ++k)
          st[s.upper[k]] = {k, len - k, 0, 0, k, len - k, true};
      } else {
        for (int k = 0; k <= len; ++k) {
          st[s.upper[k]] = {k, len + 1 - k, 0, 1, k, len - k, true};
          st[s.lower[k]] = {k + 1, len - k, 1, 0, k, len - k, true};
        }
      }
    }
  }
  return out;
}

[[nodiscard]] inline std::vector<std::vector<DoubledString>> all_doubled_strings(const LabeledGraph& g) {
  std::vector<std::vector<DoubledString>> out;
  for (int i = 1; i < g.rank(); ++i) out.push_back(doubled_strings(g, i));
  return out;
}

}  // namespace shtab
