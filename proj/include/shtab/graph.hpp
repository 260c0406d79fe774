#pragma once

// Weighted digraph with edges labelled (i, primed), 1 <= i < n. Each vertex
// has at most one outgoing and one incoming edge per label; extra edges are
// kept in edges() but recorded as conflicts instead of entering the
// adjacency, so a checker can report them.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "word.hpp"

namespace shtab {

struct EdgeLabel {
  int index = 1;
  bool primed = false;
  friend constexpr bool operator==(EdgeLabel, EdgeLabel) = default;
  friend constexpr auto operator<=>(EdgeLabel, EdgeLabel) = default;
};

inline std::string to_string(EdgeLabel l) { return std::to_string(l.index) + (l.primed ? "'" : ""); }

struct Edge {
  std::size_t src = 0;
  std::size_t dst = 0;
  EdgeLabel label;
  friend constexpr bool operator==(const Edge&, const Edge&) = default;
};

class LabeledGraph {
 public:
  explicit LabeledGraph(int rank = 1) : rank_(rank) {
    if (rank < 1) throw ContractViolation("graph rank must be >= 1");
  }

  [[nodiscard]] int rank() const noexcept { return rank_; }
  [[nodiscard]] std::size_t size() const noexcept { return weights_.size(); }
  [[nodiscard]] std::size_t slots() const noexcept { return 2 * static_cast<std::size_t>(rank_ - 1); }

  std::size_t add_vertex(Weight wt, std::string name = {}) {
    wt = resized(std::move(wt), static_cast<std::size_t>(rank_));
    if (wt.size() != static_cast<std::size_t>(rank_))
      throw ContractViolation("vertex weight has nonzero entries past the rank");
    weights_.push_back(std::move(wt));
    names_.push_back(std::move(name));
    out_.resize(out_.size() + slots(), npos);
    in_.resize(in_.size() + slots(), npos);
    return weights_.size() - 1;
  }

  void add_edge(std::size_t src, std::size_t dst, EdgeLabel label) {
    if (src >= size() || dst >= size()) throw ContractViolation("edge endpoint out of range");
    if (label.index < 1 || label.index >= rank_) throw ContractViolation("edge index out of range");
    const Edge edge{src, dst, label};
    edges_.push_back(edge);
    std::size_t& o = out_[src * slots() + slot(label)];
    std::size_t& i = in_[dst * slots() + slot(label)];
    if (o != npos || i != npos) {
      conflicts_.push_back(edge);
      return;
    }
    o = dst;
    i = src;
  }

  [[nodiscard]] const Weight& weight(std::size_t v) const { return weights_.at(v); }
  void set_weight(std::size_t v, Weight wt) {
    wt = resized(std::move(wt), static_cast<std::size_t>(rank_));
    if (wt.size() != static_cast<std::size_t>(rank_)) throw ContractViolation("weight length");
    weights_.at(v) = std::move(wt);
  }
  /// wt_k(v), 1-based k.
  [[nodiscard]] int weight(std::size_t v, int k) const { return weights_.at(v).at(k - 1); }

  [[nodiscard]] const std::string& name(std::size_t v) const { return names_.at(v); }
  [[nodiscard]] std::string display(std::size_t v) const {
    return names_.at(v).empty() ? "#" + std::to_string(v) : names_.at(v);
  }

  [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
  [[nodiscard]] const std::vector<Edge>& conflicts() const noexcept { return conflicts_; }

  [[nodiscard]] std::optional<std::size_t> f(std::size_t v, EdgeLabel l) const {
    const std::size_t t = out_.at(v * slots() + slot(l));
    return t == npos ? std::nullopt : std::optional(t);
  }
  [[nodiscard]] std::optional<std::size_t> e(std::size_t v, EdgeLabel l) const {
    const std::size_t t = in_.at(v * slots() + slot(l));
    return t == npos ? std::nullopt : std::optional(t);
  }

  /// Same vertices; edges filtered or rewritten by `edit(edge)` returning
  /// nullopt to drop it.
  template <typename Edit>
  [[nodiscard]] LabeledGraph rebuilt(Edit&& edit) const {
    LabeledGraph g(rank_);
    for (std::size_t v = 0; v < size(); ++v) g.add_vertex(weights_[v], names_[v]);
    for (const Edge& ed : edges_)
      if (auto x = edit(ed)) g.add_edge(x->src, x->dst, x->label);
    return g;
  }

  /// Edges reversed, index i relabelled n - i, weights reversed.
  [[nodiscard]] LabeledGraph dual() const {
    LabeledGraph g(rank_);
    for (std::size_t v = 0; v < size(); ++v) {
      Weight w = weights_[v];
      std::reverse(w.begin(), w.end());
      g.add_vertex(std::move(w), names_[v]);
    }
    for (const Edge& ed : edges_) g.add_edge(ed.dst, ed.src, {rank_ - ed.label.index, ed.label.primed});
    return g;
  }

  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

 private:
  [[nodiscard]] std::size_t slot(EdgeLabel l) const {
    if (l.index < 1 || l.index >= rank_) throw ContractViolation("edge index out of range");
    return 2 * static_cast<std::size_t>(l.index - 1) + (l.primed ? 1 : 0);
  }

  int rank_;
  std::vector<Weight> weights_;
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<Edge> conflicts_;
  std::vector<std::size_t> out_;
  std::vector<std::size_t> in_;
};

/// Weakly connected components over all edges, each sorted by vertex id.
[[nodiscard]] inline std::vector<std::vector<std::size_t>> weak_components(const LabeledGraph& g) {
  std::vector<std::size_t> parent(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) parent[v] = v;
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Edge& ed : g.edges()) parent[find(ed.src)] = find(ed.dst);
  std::vector<std::vector<std::size_t>> groups(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<std::size_t>> out;
  for (auto& grp : groups)
    if (!grp.empty()) out.push_back(std::move(grp));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace shtab
