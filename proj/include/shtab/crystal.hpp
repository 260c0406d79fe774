#pragma once

// The crystal on ShST(lambda/mu, n): canonical tableaux joined by the
// lowering operators F_i (unprimed edges) and F'_i (primed edges).

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "operators.hpp"
#include "qpoly.hpp"
#include "strings.hpp"
#include "tableau.hpp"
#include "walk.hpp"

namespace shtab {

/// Per-vertex, per-index statistics. (phi, eps) come from the walk endpoint;
/// the primed and hatted variants are distances in the realized graph.
struct VertexStats {
  int phi = 0;
  int eps = 0;
  StringStats strings;
};

namespace detail {
struct StrHash {
  std::size_t operator()(const Str& s) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Letter l : s) h = (h ^ static_cast<std::size_t>(l.rank())) * 1099511628211ull;
    return h;
  }
};
}  // namespace detail

class CrystalGraph {
 public:
  CrystalGraph() = default;

  /// Enumerates ShST(shape, n) and adds every F_i and F'_i edge.
  static CrystalGraph build(const ShiftedShape& shape, int n) {
    CrystalGraph g;
    g.shape_ = shape;
    g.n_ = n;
    g.graph_ = LabeledGraph(n);
    for_each_filling(shape, n, [&](const Str& s) {
      Tableau t(shape, s);
      g.index_.emplace(t.entries(), g.vertices_.size());
      g.graph_.add_vertex(weight(t.entries()), to_string(t.entries()));
      g.vertices_.push_back(std::move(t));
    });
    for (std::size_t v = 0; v < g.vertices_.size(); ++v) {
      for (int i = 1; i < n; ++i) {
        for (bool primed : {true, false}) {
          auto img = apply(g.vertices_[v], OperatorKind{false, primed, i});
          if (!img) continue;
          const auto dst = g.find(*img);
          if (!dst) throw IntegrityError("operator image is not an enumerated tableau");
          g.graph_.add_edge(v, *dst, {i, primed});
        }
      }
    }
    if (!g.graph_.conflicts().empty())
      throw IntegrityError("two tableaux map to the same image under one operator");
    g.compute_stats();
    return g;
  }

  [[nodiscard]] const ShiftedShape& shape() const noexcept { return shape_; }
  [[nodiscard]] int rank() const noexcept { return n_; }
  [[nodiscard]] std::size_t size() const noexcept { return vertices_.size(); }
  [[nodiscard]] const std::vector<Tableau>& vertices() const noexcept { return vertices_; }
  [[nodiscard]] const Tableau& vertex(std::size_t v) const { return vertices_.at(v); }
  [[nodiscard]] const LabeledGraph& graph() const noexcept { return graph_; }
  /// Mutable access, for fault-injection tests.
  [[nodiscard]] LabeledGraph& graph_mut() noexcept { return graph_; }

  [[nodiscard]] std::optional<std::size_t> find(const Tableau& t) const {
    if (!(t.shape() == shape_)) return std::nullopt;
    auto it = index_.find(t.entries());
    return it == index_.end() ? std::nullopt : std::optional(it->second);
  }

  /// stats(v, i) for 1 <= i < n.
  [[nodiscard]] const VertexStats& stats(std::size_t v, int i) const {
    return stats_.at(static_cast<std::size_t>(i - 1)).at(v);
  }
  [[nodiscard]] const std::vector<std::vector<DoubledString>>& strings() const noexcept {
    return strings_;
  }

 private:
  void compute_stats() {
    strings_ = all_doubled_strings(graph_);
    for (const auto& per_index : strings_)
      for (const auto& s : per_index)
        if (!s.kind)
          throw IntegrityError("doubled-string template does not match a generated crystal (" +
                               to_string(shape_) + ", index " + std::to_string(s.index) + "): " +
                               s.problem);
    const auto st = string_stats(graph_, strings_);
    stats_.assign(static_cast<std::size_t>(std::max(n_ - 1, 0)), std::vector<VertexStats>(size()));
    for (std::size_t v = 0; v < size(); ++v) {
      const Word w = vertices_[v].reading_word();
      for (int i = 1; i < n_; ++i) {
        const WalkPoint end = walk_endpoint(w, i);
        stats_[i - 1][v] = {end.x, end.y, st[i - 1][v]};
      }
    }
  }

  ShiftedShape shape_;
  int n_ = 1;
  std::vector<Tableau> vertices_;
  std::unordered_map<Str, std::size_t, detail::StrHash> index_;
  LabeledGraph graph_{1};
  std::vector<std::vector<DoubledString>> strings_;
  std::vector<std::vector<VertexStats>> stats_;
};

[[nodiscard]] inline CrystalGraph build(const ShiftedShape& shape, int n) {
  return CrystalGraph::build(shape, n);
}

[[nodiscard]] inline std::vector<std::vector<std::size_t>> components(const CrystalGraph& g) {
  return weak_components(g.graph());
}

/// Sources of the graph: no incoming edge of any label.
[[nodiscard]] inline std::vector<std::size_t> sources(const LabeledGraph& g, std::span<const std::size_t> vs) {
  std::vector<std::size_t> out;
  for (std::size_t v : vs) {
    bool has_in = false;
    for (int i = 1; i < g.rank() && !has_in; ++i)
      has_in = g.e(v, {i, false}) || g.e(v, {i, true});
    if (!has_in) out.push_back(v);
  }
  return out;
}

/// The highest-weight vertex of each component (in component order).
/// Throws IntegrityError unless every component has exactly one.
[[nodiscard]] inline std::vector<std::size_t> highest_weights(const CrystalGraph& g) {
  std::vector<std::size_t> out;
  for (const auto& comp : components(g)) {
    const auto src = sources(g.graph(), comp);
    if (src.size() != 1)
      throw IntegrityError("component with " + std::to_string(src.size()) +
                           " highest-weight vertices in " + to_string(g.shape()));
    out.push_back(src.front());
  }
  return out;
}

/// f^lambda_{nu,mu}: components of ShST(lambda/mu, n) by highest weight nu.
[[nodiscard]] inline std::map<StrictPartition, int> lr_coefficients(const CrystalGraph& g) {
  std::map<StrictPartition, int> out;
  for (std::size_t v : highest_weights(g)) {
    const Weight& wt = g.graph().weight(v);
    if (!is_strict_partition(wt))
      throw IntegrityError("highest weight is not a strict partition");
    ++out[StrictPartition(wt)];
  }
  return out;
}

[[nodiscard]] inline std::map<StrictPartition, int> lr_coefficients(const StrictPartition& outer,
                                                                    const StrictPartition& inner, int n) {
  return lr_coefficients(build(ShiftedShape(outer, inner), n));
}

/// 2^(number of nonzero entries) x^wt.
[[nodiscard]] inline QPolynomial weighted_monomial(const Weight& wt, std::size_t vars) {
  QPolynomial p(vars);
  const Weight e = resized(wt, vars);
  if (e.size() != vars) throw ContractViolation("weight longer than the variable count");
  long long c = 1;
  for (int x : e)
    if (x > 0) c *= 2;
  p.add_term(e, c);
  return p;
}

/// Sum over canonical tableaux of 2^(#nonzero weight entries) x^wt.
[[nodiscard]] inline QPolynomial generating_function(const ShiftedShape& shape, int n) {
  QPolynomial out(static_cast<std::size_t>(n));
  for_each_filling(shape, n, [&](const Str& s) { out += weighted_monomial(weight(s), out.variables()); });
  return out;
}

[[nodiscard]] inline QPolynomial generating_function(const LabeledGraph& g, std::span<const std::size_t> vs) {
  QPolynomial out(static_cast<std::size_t>(g.rank()));
  for (std::size_t v : vs) out += weighted_monomial(g.weight(v), out.variables());
  return out;
}

struct KashiwaraReport {
  std::size_t checks = 0;
  std::vector<std::string> violations;
  [[nodiscard]] bool passed() const noexcept { return violations.empty(); }
};

/// (K1) and (K2) for the unprimed and the primed operator families, with
/// (phi, eps) taken from the walk endpoints and weights from the graph.
[[nodiscard]] inline KashiwaraReport check_kashiwara(const CrystalGraph& cg) {
  KashiwaraReport rep;
  const LabeledGraph& g = cg.graph();
  auto fail = [&](std::string msg) { rep.violations.push_back(std::move(msg)); };
  for (std::size_t v = 0; v < g.size(); ++v) {
    const std::string name = g.display(v);
    for (int i = 1; i < g.rank(); ++i) {
      const VertexStats& sv = cg.stats(v, i);
      ++rep.checks;
      if (sv.phi != g.weight(v, i) - g.weight(v, i + 1) + sv.eps)
        fail("K2 at " + name + " index " + std::to_string(i));
      for (bool primed : {false, true}) {
        const EdgeLabel lab{i, primed};
        const std::string tag = " [" + to_string(lab) + "]";
        if (auto x = g.f(v, lab)) {
          ++rep.checks;
          const VertexStats& sx = cg.stats(*x, i);
          if (sx.eps != sv.eps + 1 || sx.phi != sv.phi - 1)
            fail("K1 (eps,phi) shift along " + name + " -> " + g.display(*x) + tag);
          for (int k = 1; k <= g.rank(); ++k) {
            const int expect = g.weight(v, k) - (k == i ? 1 : k == i + 1 ? -1 : 0);
            if (g.weight(*x, k) != expect) {
              fail("K1 weight shift along " + name + " -> " + g.display(*x) + tag);
              break;
            }
          }
          auto back = apply(cg.vertex(*x), OperatorKind{true, primed, i});
          if (!back || !(*back == cg.vertex(v)))
            fail("K1 partial inverse: E does not undo F at " + name + tag);
        }
        if (auto y = apply(cg.vertex(v), OperatorKind{true, primed, i})) {
          ++rep.checks;
          const auto id = cg.find(*y);
          if (!id || g.f(*id, lab) != v) fail("K1 partial inverse: F does not undo E at " + name + tag);
        }
      }
    }
  }
  return rep;
}

}  // namespace shtab
