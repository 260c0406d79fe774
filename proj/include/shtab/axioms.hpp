#pragma once

// Local axiom checker for weighted graphs with edges labelled i and i'.
//
// check_axioms runs (K1), (K2), (A1)-(A5) using string-distance statistics
// computed on the graph itself; certify_component matches a component
// against the generated crystal ShST(lambda, n) of its highest weight.
//
// Some (A4) relations are only given as pictures. Those checks live in
// PinnedRules; the defaults were pinned against generated crystals
// (empirically pinned, not read from the text). Certification never uses them.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "crystal.hpp"
#include "errors.hpp"
#include "export.hpp"
#include "graph.hpp"
#include "strings.hpp"
#include "tableau.hpp"

namespace shtab {

// ---------------------------------------------------------------- loading

/// Reads the crystal JSON schema. An empty object or null gives an empty
/// graph. Throws ParseError on schema problems and on a repeated label at a
/// vertex.
[[nodiscard]] inline LabeledGraph load_graph(const nlohmann::json& doc) {
  if (doc.is_null() || (doc.is_object() && doc.empty())) return LabeledGraph(1);
  try {
    if (!doc.is_object()) throw ParseError("graph document must be an object");
    if (doc.contains("schema") && doc.at("schema").get<int>() != 1)
      throw ParseError("unsupported schema version " + doc.at("schema").dump());
    const int n = doc.at("n").get<int>();
    if (n < 1) throw ParseError("n must be >= 1");
    LabeledGraph g(n);
    const auto& vs = doc.at("vertices");
    if (!vs.is_array()) throw ParseError("vertices must be an array");
    std::map<long long, std::size_t> ids;
    for (const auto& v : vs) {
      const long long id = v.at("id").get<long long>();
      auto wt = v.at("wt").get<std::vector<int>>();
      if (wt.size() > static_cast<std::size_t>(n)) throw ParseError("weight of vertex " + std::to_string(id) + " longer than n");
      if (std::any_of(wt.begin(), wt.end(), [](int x) { return x < 0; }))
        throw ParseError("negative weight at vertex " + std::to_string(id));
      if (!ids.emplace(id, g.size()).second) throw ParseError("duplicate vertex id " + std::to_string(id));
      g.add_vertex(std::move(wt), v.value("word", std::string{}));
    }
    const auto& es = doc.value("edges", nlohmann::json::array());
    if (!es.is_array()) throw ParseError("edges must be an array");
    for (const auto& e : es) {
      auto endpoint = [&](const char* key) {
        const long long id = e.at(key).get<long long>();
        auto it = ids.find(id);
        if (it == ids.end()) throw ParseError(std::string("edge ") + key + " refers to unknown vertex " + std::to_string(id));
        return it->second;
      };
      const int i = e.at("i").get<int>();
      if (i < 1 || i >= n) throw ParseError("edge index " + std::to_string(i) + " outside 1.." + std::to_string(n - 1));
      g.add_edge(endpoint("src"), endpoint("dst"), {i, e.value("primed", false)});
    }
    if (!g.conflicts().empty()) {
      const Edge& c = g.conflicts().front();
      throw ParseError("vertex " + g.display(c.src) + " or " + g.display(c.dst) + " has two edges labelled " +
                       to_string(c.label));
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("graph document: ") + e.what());
  }
}

// ---------------------------------------------------------------- report

struct AxiomViolation {
  std::string axiom;
  std::size_t witness = 0;
  std::string detail;

  friend bool operator<(const AxiomViolation& a, const AxiomViolation& b) {
    return std::tie(a.axiom, a.witness, a.detail) < std::tie(b.axiom, b.witness, b.detail);
  }
};

struct AxiomReport {
  std::map<std::string, std::size_t> checked;  // instances examined per axiom
  std::vector<AxiomViolation> violations;      // sorted by axiom, then witness

  [[nodiscard]] bool passed() const noexcept { return violations.empty(); }
  [[nodiscard]] std::size_t count(std::string_view axiom) const {
    return static_cast<std::size_t>(std::count_if(violations.begin(), violations.end(),
                                                  [&](const AxiomViolation& v) { return v.axiom == axiom; }));
  }
};

/// What an axiom check may look at around w -> x (index i), w -> y (index i+1).
struct LocalView {
  const LabeledGraph& g;
  const std::vector<std::vector<StringStats>>& stats;
  int i;
  std::size_t w, x, y;

  [[nodiscard]] std::optional<std::size_t> f(std::optional<std::size_t> v, int k, bool primed) const {
    if (!v) return std::nullopt;
    return g.f(*v, {i + k - 1, primed});
  }
  [[nodiscard]] const StringStats& at(std::size_t v, int k) const { return stats[i + k - 2][v]; }
  [[nodiscard]] int delta1() const { return at(w, 2).eps - at(x, 2).eps; }
  [[nodiscard]] int delta2() const { return at(w, 1).eps - at(y, 1).eps; }
};

[[nodiscard]] inline bool same_defined(std::optional<std::size_t> a, std::optional<std::size_t> b) {
  return a && b && *a == *b;
}

/// Relations given only as pictures, pinned on generated crystals.
struct PinnedRules {
  // Pair {f1', f2'} with x = f1'(w), y = f2'(w): the half-solid square.
  std::function<bool(const LocalView&)> half_solid = [](const LocalView& v) {
    const auto a = v.f(v.y, 1, false);
    return same_defined(a, v.f(v.x, 2, false)) && v.f(v.y, 1, true) != a;
  };
  // Pair {f1, f2} with f1'(w) empty, Delta = (1,1): f2' f1(w) = f1' f2(w).
  std::function<bool(const LocalView&)> delta_11 = [](const LocalView& v) {
    return same_defined(v.f(v.x, 2, true), v.f(v.y, 1, true));
  };
  // Pair {f1, f2} with f1'(w) empty, Delta = (0,0), phi_hat_1(y) < 2:
  // f1' f2 f2 f1(w) = f2 f1' f1 f2(w).
  std::function<bool(const LocalView&)> delta_00_low = [](const LocalView& v) {
    return same_defined(v.f(v.f(v.f(v.x, 2, false), 2, false), 1, true),
                        v.f(v.f(v.f(v.y, 1, false), 1, true), 2, false));
  };
};

namespace detail {

class AxiomRun {
 public:
  AxiomRun(const LabeledGraph& g, AxiomReport& rep, const PinnedRules& rules)
      : g_(g), rep_(rep), rules_(rules), strings_(all_doubled_strings(g)), stats_(string_stats(g, strings_)) {}

  void k_and_a1() {
    for (const Edge& c : g_.conflicts())
      fail("A1", c.src, "second edge labelled " + to_string(c.label) + " at " + g_.display(c.src) + " -> " + g_.display(c.dst));
    for (int i = 1; i < g_.rank(); ++i) {
      std::vector<int> top2(g_.size(), 0), bottom2(g_.size(), 0);
      for (const DoubledString& s : strings_[i - 1]) {
        tick("A1");
        if (!s.kind) {
          fail("A1", s.vertices.front(), "index " + std::to_string(i) + ": " + s.problem);
          continue;
        }
        if (*s.kind == StringKind::second) {
          top2[s.top()] = 1;
          bottom2[s.bottom()] = 1;
        }
      }
      for (std::size_t v = 0; v < g_.size(); ++v) {
        if (!stats_[i - 1][v].defined) continue;
        tick("A1");
        if (top2[v] != (g_.weight(v, i + 1) == 0))
          fail("A1", v, "index " + std::to_string(i) + ": " + g_.display(v) +
                            (top2[v] ? " tops a second-kind string but wt_" : " has zero wt_") +
                            std::to_string(i + 1) + (top2[v] ? " != 0" : " without topping a second-kind string"));
        if (bottom2[v] != (g_.weight(v, i) == 0))
          fail("A1", v, "index " + std::to_string(i) + ": " + g_.display(v) +
                            (bottom2[v] ? " ends a second-kind string but wt_" : " has zero wt_") +
                            std::to_string(i) + (bottom2[v] ? " != 0" : " without ending a second-kind string"));
      }
    }
    for (std::size_t v = 0; v < g_.size(); ++v)
      for (int i = 1; i < g_.rank(); ++i) {
        const StringStats& s = st(v, i);
        if (!s.defined) continue;
        tick("K2");
        if (s.phi - s.eps != g_.weight(v, i) - g_.weight(v, i + 1))
          fail("K2", v, "index " + std::to_string(i) + ": phi - eps = " + std::to_string(s.phi - s.eps) +
                            " but <wt, alpha_i> = " + std::to_string(g_.weight(v, i) - g_.weight(v, i + 1)));
        for (bool primed : {false, true}) {
          const EdgeLabel lab{i, primed};
          const auto x = g_.f(v, lab);
          if (!x) continue;
          tick("K1");
          const std::string edge = g_.display(v) + " -" + to_string(lab) + "-> " + g_.display(*x);
          if (g_.e(*x, lab) != v) fail("K1", v, "e does not invert f along " + edge);
          for (int k = 1; k <= g_.rank(); ++k)
            if (g_.weight(*x, k) != g_.weight(v, k) - (k == i) + (k == i + 1)) {
              fail("K1", v, "weight does not drop by alpha_" + std::to_string(i) + " along " + edge);
              break;
            }
          const StringStats& t = st(*x, i);
          if (t.defined && (t.eps != s.eps + 1 || t.phi != s.phi - 1))
            fail("K1", v, "(eps, phi) does not shift by (+1, -1) along " + edge);
        }
      }
  }

  void a2() {
    for (std::size_t w = 0; w < g_.size(); ++w)
      for (int i = 1; i < g_.rank(); ++i)
        for (int j = i + 2; j < g_.rank(); ++j)
          for (bool pa : {false, true})
            for (bool pb : {false, true}) {
              const EdgeLabel a{i, pa}, b{j, pb};
              if (auto x = g_.f(w, a), y = g_.f(w, b); x && y) {
                tick("A2");
                if (!same_defined(g_.f(*x, b), g_.f(*y, a)))
                  fail("A2", w, to_string(a) + " and " + to_string(b) + " edges out of " + g_.display(w) + " do not commute");
              }
              if (auto x = g_.e(w, a), y = g_.e(w, b); x && y) {
                tick("A2");
                if (!same_defined(g_.e(*x, b), g_.e(*y, a)))
                  fail("A2", w, to_string(a) + " and " + to_string(b) + " edges into " + g_.display(w) + " do not commute");
              }
            }
  }

  void a3() {
    for (const Edge& ed : g_.edges()) {
      const int j = ed.label.index;
      for (int i : {j - 1, j + 1}) {
        if (i < 1 || i >= g_.rank()) continue;
        const StringStats& s = st(ed.src, i);
        const StringStats& t = st(ed.dst, i);
        if (!s.defined || !t.defined) continue;
        tick("A3");
        const int de = s.eps - t.eps, dp = s.phi - t.phi;
        if (!((de == 1 && dp == 0) || (de == 0 && dp == -1)))
          fail("A3", ed.src, "index " + std::to_string(i) + " string along " + g_.display(ed.src) + " -" +
                                 to_string(ed.label) + "-> " + g_.display(ed.dst) + " changes (eps, phi) by (" +
                                 std::to_string(-de) + ", " + std::to_string(-dp) + ")");
      }
    }
  }

  /// (A4.1) and (A4.2) at every w and consecutive index pair.
  void a4(const std::string& tag) {
    for (std::size_t w = 0; w < g_.size(); ++w)
      for (int i = 1; i + 1 < g_.rank(); ++i) {
        if (!defined_around(w, i)) continue;
        a41(tag, w, i);
        a42(tag, w, i);
      }
  }

 private:
  bool defined_around(std::size_t w, int i) const {
    for (int k : {i, i + 1})
      for (bool p : {false, true}) {
        if (!st(w, k).defined) return false;
        if (auto x = g_.f(w, {k, p}); x && (!st(*x, i).defined || !st(*x, i + 1).defined)) return false;
      }
    return true;
  }

  std::string where(const std::string& pair, std::size_t w, int i) const {
    return "pair " + pair + " at " + g_.display(w) + " (i = " + std::to_string(i) + ")";
  }

  void a41(const std::string& tag, std::size_t w, int i) {
    const std::string ax = tag + ".1";
    const auto x1p = g_.f(w, {i, true}), x1 = g_.f(w, {i, false});
    const auto y2p = g_.f(w, {i + 1, true}), y2 = g_.f(w, {i + 1, false});
    if (x1p && y2p) {
      const LocalView v{g_, stats_, i, w, *x1p, *y2p};
      tick(ax);
      if (!same_defined(v.f(v.y, 1, true), v.f(v.x, 2, true)))
        fail(ax, w, where("{f1', f2'}", w, i) + ": f1'f2' != f2'f1'");
      tick(ax);
      const bool cond = v.delta1() == 0 && v.delta2() == 0 && v.at(w, 2).phi == 1 && v.at(w, 2).phi_hat == 0;
      if (rules_.half_solid(v) != cond)
        fail(ax, w, where("{f1', f2'}", w, i) + ": half-solid square " + (cond ? "missing" : "present") +
                        " (empirically pinned)");
    }
    if (x1p && y2 && y2 != y2p) {
      const LocalView v{g_, stats_, i, w, *x1p, *y2};
      tick(ax);
      if (!same_defined(v.f(v.y, 1, true), v.f(v.x, 2, false)))
        fail(ax, w, where("{f1', f2}", w, i) + ": f1'f2 != f2f1'");
    }
    if (x1 && y2p) {
      const LocalView v{g_, stats_, i, w, *x1, *y2p};
      tick(ax);
      const bool merge = same_defined(v.f(v.y, 1, false), v.f(v.x, 2, true));
      const bool cond = v.at(w, 1).eps_hat > 0;
      if (merge != cond)
        fail(ax, w, where("{f1, f2'}", w, i) + ": f1f2' " + (merge ? "=" : "!=") + " f2'f1 but eps_hat_1 = " +
                        std::to_string(v.at(w, 1).eps_hat));
    }
  }

  void a42(const std::string& tag, std::size_t w, int i) {
    const std::string ax = tag + ".2";
    const auto x = g_.f(w, {i, false}), y = g_.f(w, {i + 1, false});
    if (!x || !y || g_.f(w, {i, true})) return;
    const LocalView v{g_, stats_, i, w, *x, *y};
    tick(ax);
    const int d1 = v.delta1(), d2 = v.delta2();
    const std::string cell = "Delta = (" + std::to_string(d1) + "," + std::to_string(d2) + ")";
    if (d1 < 0 || d1 > 1 || d2 < 0 || d2 > 1) {
      fail(ax, w, where("{f1, f2}", w, i) + ": " + cell + " outside {0,1}^2");
      return;
    }
    // Observed relation, first match wins.
    const bool square = same_defined(v.f(v.y, 1, false), v.f(v.x, 2, false));
    const bool octagon = same_defined(v.f(v.f(v.f(v.x, 2, false), 2, false), 1, false),
                                      v.f(v.f(v.f(v.y, 1, false), 1, false), 2, false));
    std::string seen = square ? "square" : octagon ? "octagon" : rules_.delta_11(v) ? "(1,1) relation"
                                        : rules_.delta_00_low(v)                    ? "(0,0) relation"
                                                                                    : "no relation";
    std::string want;
    if (d1 + d2 == 1) want = "square";
    else if (d1 == 1) want = "(1,1) relation";
    else if (v.at(*y, 1).phi_hat >= 2) want = "octagon";
    else want = "(0,0) relation";
    if (seen != want) {
      const bool pinned = want != "square" && want != "octagon";
      fail(ax, w, where("{f1, f2}", w, i) + ": " + cell + " expects " + want + ", found " + seen +
                      (pinned ? " (empirically pinned)" : ""));
    }
    if (want == "(0,0) relation" && v.at(w, 1).eps_hat == v.at(*y, 1).eps_hat)
      fail(ax, w, where("{f1, f2}", w, i) + ": Delta = (0,0), phi_hat_1(y) < 2 but eps_hat_1(w) = eps_hat_1(y)");
  }

  [[nodiscard]] const StringStats& st(std::size_t v, int i) const { return stats_[i - 1][v]; }
  void tick(const std::string& axiom) { ++rep_.checked[axiom]; }
  void fail(const std::string& axiom, std::size_t w, std::string detail) {
    rep_.violations.push_back({axiom, w, std::move(detail)});
  }

  const LabeledGraph& g_;
  AxiomReport& rep_;
  const PinnedRules& rules_;
  std::vector<std::vector<DoubledString>> strings_;
  std::vector<std::vector<StringStats>> stats_;
};

}  // namespace detail

[[nodiscard]] inline AxiomReport check_axioms(const LabeledGraph& g, const PinnedRules& rules = {}) {
  AxiomReport rep;
  {
    detail::AxiomRun run(g, rep, rules);
    run.k_and_a1();
    run.a2();
    run.a3();
    run.a4("A4");
  }
  {
    // (A5): the (A4) relations on the graph with every edge reversed.
    const LabeledGraph d = g.dual();
    AxiomReport dual_rep;
    detail::AxiomRun run(d, dual_rep, rules);
    run.a4("A5");
    for (auto& [k, c] : dual_rep.checked) rep.checked[k] += c;
    for (auto& v : dual_rep.violations) rep.violations.push_back(std::move(v));
  }
  std::sort(rep.violations.begin(), rep.violations.end());
  return rep;
}

// ---------------------------------------------------------- certification

struct Certificate {
  bool ok = false;
  StrictPartition lambda;
  std::vector<std::size_t> component;  // vertices of the input graph
  std::vector<std::size_t> image;      // image[k]: vertex of ShST(lambda, n) matched to component[k]
  std::vector<std::string> words;      // reading words of the matched tableaux
  std::string refutation;
};

/// Matches `component` of `g` against ShST(lambda, n), lambda the weight of
/// its unique source. The match is forced by the label-deterministic edges.
[[nodiscard]] inline Certificate certify_component(const LabeledGraph& g, const std::vector<std::size_t>& component) {
  Certificate cert;
  cert.component = component;
  auto refute = [&](std::string why) {
    cert.ok = false;
    cert.refutation = std::move(why);
    return cert;
  };
  const auto src = sources(g, component);
  if (src.size() != 1)
    return refute(src.empty() ? "no highest-weight vertex" : "non-unique highest weight (" + std::to_string(src.size()) + " sources)");
  const Weight& top = g.weight(src.front());
  if (!is_strict_partition(top))
    return refute("highest weight " + detail::weight_text(top) + " of " + g.display(src.front()) + " is not a strict partition");
  cert.lambda = StrictPartition(top);
  const CrystalGraph model = build(ShiftedShape(cert.lambda), g.rank());
  const LabeledGraph& m = model.graph();
  if (m.size() != component.size())
    return refute("component has " + std::to_string(component.size()) + " vertices, ShST" + to_string(cert.lambda) +
                  " has " + std::to_string(m.size()));
  std::vector<std::size_t> all(m.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  const auto msrc = sources(m, all);
  if (msrc.size() != 1) throw IntegrityError("generated straight-shape crystal has " + std::to_string(msrc.size()) + " sources");

  std::map<std::size_t, std::size_t> fwd, back;
  std::vector<std::pair<std::size_t, std::size_t>> queue{{src.front(), msrc.front()}};
  fwd[src.front()] = msrc.front();
  back[msrc.front()] = src.front();
  const auto gstats = string_stats(g, all_doubled_strings(g));
  const auto mstats = string_stats(m, all_doubled_strings(m));
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto [u, t] = queue[head];
    if (g.weight(u) != m.weight(t))
      return refute("weight of " + g.display(u) + " differs from " + m.display(t));
    for (int i = 1; i < g.rank(); ++i) {
      if (!(gstats[i - 1][u] == mstats[i - 1][t]))
        return refute("string statistics at " + g.display(u) + " differ from " + m.display(t) + " for index " + std::to_string(i));
      for (bool primed : {false, true}) {
        const EdgeLabel lab{i, primed};
        for (bool forward : {true, false}) {
          const auto a = forward ? g.f(u, lab) : g.e(u, lab);
          const auto b = forward ? m.f(t, lab) : m.e(t, lab);
          const std::string dir = forward ? "out of " : "into ";
          if (a.has_value() != b.has_value())
            return refute("edge " + to_string(lab) + " " + dir + g.display(u) + (a ? " is extra" : " is missing") +
                          " (matched to " + m.display(t) + ")");
          if (!a) continue;
          auto fa = fwd.find(*a);
          auto bb = back.find(*b);
          if (fa == fwd.end() && bb == back.end()) {
            fwd[*a] = *b;
            back[*b] = *a;
            queue.emplace_back(*a, *b);
          } else if (fa == fwd.end() || bb == back.end() || fa->second != *b) {
            return refute("edge " + to_string(lab) + " " + dir + g.display(u) + " leads to " + g.display(*a) +
                          ", inconsistent with the match onto " + m.display(*b));
          }
        }
      }
    }
  }
  if (fwd.size() != component.size()) return refute("only " + std::to_string(fwd.size()) + " of " +
                                                    std::to_string(component.size()) + " vertices reachable from the source");
  for (std::size_t v : component) {
    auto it = fwd.find(v);
    if (it == fwd.end()) return refute(g.display(v) + " is not reached from the source");
    cert.image.push_back(it->second);
    cert.words.push_back(m.name(it->second));
  }
  cert.ok = true;
  return cert;
}

struct Verification {
  AxiomReport report;
  std::vector<Certificate> certificates;

  [[nodiscard]] bool certified() const {
    return report.passed() &&
           std::all_of(certificates.begin(), certificates.end(), [](const Certificate& c) { return c.ok; });
  }
};

[[nodiscard]] inline Verification verify(const LabeledGraph& g, const PinnedRules& rules = {}) {
  Verification out;
  out.report = check_axioms(g, rules);
  for (const auto& comp : weak_components(g)) out.certificates.push_back(certify_component(g, comp));
  return out;
}

// ------------------------------------------------------------- mutations

struct Mutation {
  std::string description;
  LabeledGraph graph;
};

/// Every single-edge deletion, then every retargeting of one edge to another
/// destination (including its source), in edge order.
[[nodiscard]] inline std::vector<Mutation> single_edge_mutations(const LabeledGraph& g) {
  std::vector<Mutation> out;
  const auto& es = g.edges();
  auto describe = [&](const Edge& e) { return g.display(e.src) + " -" + to_string(e.label) + "-> " + g.display(e.dst); };
  for (std::size_t k = 0; k < es.size(); ++k) {
    std::size_t seen = 0;
    out.push_back({"delete " + describe(es[k]), g.rebuilt([&](const Edge& e) -> std::optional<Edge> {
                     if (seen++ == k) return std::nullopt;
                     return e;
                   })});
  }
  for (std::size_t k = 0; k < es.size(); ++k)
    for (std::size_t to = 0; to < g.size(); ++to) {
      if (to == es[k].dst) continue;
      std::size_t seen = 0;
      out.push_back({"retarget " + describe(es[k]) + " to " + g.display(to),
                     g.rebuilt([&](const Edge& e) -> std::optional<Edge> {
                       if (seen++ != k) return e;
                       return Edge{e.src, to, e.label};
                     })});
    }
  return out;
}

[[nodiscard]] inline std::size_t single_edge_mutation_count(const LabeledGraph& g) {
  return g.edges().size() * g.size();
}

}  // namespace shtab
