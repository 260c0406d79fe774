#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include <shtab/axioms.hpp>
#include <shtab/crystal.hpp>
#include <shtab/export.hpp>
#include <shtab/jdt.hpp>

using namespace shtab;

namespace {
StrictPartition P(std::vector<int> v) { return StrictPartition(std::move(v)); }
ShiftedShape Sh(std::vector<int> outer, std::vector<int> inner = {}) {
  return ShiftedShape(P(std::move(outer)), P(std::move(inner)));
}
std::vector<std::string> names(const CrystalGraph& g) {
  std::vector<std::string> out;
  for (std::size_t v = 0; v < g.size(); ++v) out.push_back(g.graph().name(v));
  return out;
}
std::set<std::tuple<std::string, std::string, int, bool>> edge_set(const LabeledGraph& g) {
  std::set<std::tuple<std::string, std::string, int, bool>> out;
  for (const Edge& e : g.edges()) out.emplace(g.name(e.src), g.name(e.dst), e.label.index, e.label.primed);
  return out;
}
std::size_t occurrences(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}
QPolynomial poly(std::size_t vars, std::vector<std::pair<std::vector<int>, long long>> terms) {
  QPolynomial p(vars);
  for (auto& [e, c] : terms) p.add_term(e, c);
  return p;
}
}  // namespace

TEST_CASE("small crystals", "[crystal]") {
  const auto a = build(Sh({2, 1}), 2);
  CHECK(names(a) == std::vector<std::string>{"211", "212'"});
  CHECK(edge_set(a.graph()) == decltype(edge_set(a.graph())){{"211", "212'", 1, true}});

  const auto b = build(Sh({3}), 2);
  CHECK(b.size() == 4);
  CHECK(edge_set(b.graph()) == decltype(edge_set(b.graph())){{"111", "112", 1, false},
                                                              {"111", "112", 1, true},
                                                              {"112", "122", 1, false},
                                                              {"112", "122", 1, true},
                                                              {"122", "222", 1, false},
                                                              {"122", "222", 1, true}});

  const auto c = build(Sh({2, 1}, {1}), 2);
  CHECK(edge_set(c.graph()) == decltype(edge_set(c.graph())){{"11'", "21", 1, false},
                                                              {"11'", "21", 1, true},
                                                              {"21", "22'", 1, false},
                                                              {"21", "22'", 1, true}});
  REQUIRE(c.find(Tableau(Sh({2, 1}, {1}), parse_str("21"))).has_value());
  CHECK_FALSE(c.find(Tableau(Sh({2}), parse_str("12"))).has_value());
}

TEST_CASE("components and highest weights", "[crystal]") {
  const auto skew = build(Sh({2, 1}, {1}), 2);
  REQUIRE(components(skew).size() == 1);
  CHECK(components(skew).front().size() == 3);
  const auto hw = highest_weights(skew);
  REQUIRE(hw.size() == 1);
  CHECK(skew.graph().name(hw.front()) == "11'");
  CHECK(skew.graph().weight(hw.front()) == Weight{2, 0});
  CHECK(build(Sh({3}), 2).graph().name(highest_weights(build(Sh({3}), 2)).front()) == "111");
  CHECK(build(Sh({2, 1}), 2).graph().name(highest_weights(build(Sh({2, 1}), 2)).front()) == "211");

  // disjoint union of the two
  LabeledGraph u(2);
  const auto three = build(Sh({3}), 2);
  for (const auto* cg : {&skew, &three}) {
    const std::size_t base = u.size();
    for (std::size_t v = 0; v < cg->size(); ++v) u.add_vertex(cg->graph().weight(v), cg->graph().name(v));
    for (const Edge& e : cg->graph().edges()) u.add_edge(base + e.src, base + e.dst, e.label);
  }
  CHECK(weak_components(u).size() == 2);
}

TEST_CASE("LR coefficients", "[crystal]") {
  CHECK(lr_coefficients(P({2, 1}), P({1}), 2) == std::map<StrictPartition, int>{{P({2}), 1}});
  CHECK(lr_coefficients(P({2, 1}), P({}), 2) == std::map<StrictPartition, int>{{P({2, 1}), 1}});
  CHECK(lr_coefficients(P({3}), P({}), 2) == std::map<StrictPartition, int>{{P({3}), 1}});
  const auto c = lr_coefficients(P({4, 2}), P({2}), 3);
  int total = 0;
  for (const auto& [nu, k] : c) {
    CHECK(nu.size() == 4);
    total += k;
  }
  CHECK(total == static_cast<int>(components(build(Sh({4, 2}, {2}), 3)).size()));
}

TEST_CASE("generating functions", "[crystal]") {
  CHECK(generating_function(Sh({3}), 2) == poly(2, {{{3, 0}, 2}, {{2, 1}, 4}, {{1, 2}, 4}, {{0, 3}, 2}}));
  CHECK(generating_function(Sh({2, 1}), 2) == poly(2, {{{2, 1}, 4}, {{1, 2}, 4}}));
  CHECK(generating_function(Sh({1}), 1) == poly(1, {{{1}, 2}}));
  CHECK(generating_function(Sh({1}), 1).to_string() == "2x1");
}

TEST_CASE("Kashiwara checks", "[crystal]") {
  CHECK(check_kashiwara(build(Sh({4, 2, 1}), 3)).passed());
  CHECK(check_kashiwara(build(Sh({3, 1}), 3)).passed());
  auto g = build(Sh({3, 1}), 3);
  g.graph_mut().set_weight(0, {0, 0, 4});
  const auto rep = check_kashiwara(g);
  REQUIRE_FALSE(rep.passed());
  CHECK(std::any_of(rep.violations.begin(), rep.violations.end(),
                    [](const std::string& v) { return v.rfind("K2", 0) == 0; }));
}

TEST_CASE("DOT export", "[crystal][export]") {
  const std::string a = to_dot(build(Sh({2, 1}), 2));
  CHECK(occurrences(a, "[label=\"") - occurrences(a, " -> ") == 2);
  CHECK(occurrences(a, " -> ") == 1);
  CHECK(occurrences(a, "style=dashed") == 1);
  CHECK(occurrences(a, "\", color=red") == 1);

  const std::string b = to_dot(build(Sh({3}), 2));
  CHECK(occurrences(b, " -> ") == 6);
  CHECK(occurrences(b, "style=dashed") == 3);
  CHECK(occurrences(b, "style=solid") == 3);
  CHECK(occurrences(b, "\", color=red") == 6);

  const std::string e = to_dot(LabeledGraph(1));
  CHECK(e.rfind("digraph", 0) == 0);
  CHECK(e.back() == '\n');
  CHECK(occurrences(e, " -> ") == 0);
  CHECK(index_colour(2) == "blue");
  CHECK(index_colour(9) == "red");
}

TEST_CASE("JSON export round-trips", "[crystal][export]") {
  const auto cg = build(Sh({4, 2}, {1}), 3);
  const auto doc = to_json(cg);
  CHECK(doc["schema"] == 1);
  CHECK(doc["n"] == 3);
  CHECK(doc["stats"].size() == cg.size() * 2);
  const LabeledGraph back = load_graph(nlohmann::json::parse(doc.dump()));
  REQUIRE(back.size() == cg.size());
  for (std::size_t v = 0; v < cg.size(); ++v) CHECK(back.weight(v) == cg.graph().weight(v));
  CHECK(edge_set(back) == edge_set(cg.graph()));

  const Tableau t(Sh({3, 1}), parse_str("2112'"));
  const auto tj = to_json(t);
  CHECK(tj["rows"] == nlohmann::json::array({"112'", "2"}));
  CHECK(tableau_from_json(tj) == t);
  CHECK_THROWS_AS(tableau_from_json(nlohmann::json{{"outer", {3, 1}}, {"rows", {"11", "2"}}}), ParseError);
  CHECK_THROWS_AS(tableau_from_json(nlohmann::json{{"rows", {"1"}}}), ParseError);
}

TEST_CASE("statistics agree on generated crystals", "[crystal][oracle]") {
  for (const ShiftedShape& shape : shifted_shapes(10, 6))
    for (int n = 2; n <= 3; ++n) {
      const auto cg = build(shape, n);
      for (std::size_t v = 0; v < cg.size(); ++v)
        for (int i = 1; i < n; ++i) {
          const VertexStats& s = cg.stats(v, i);
          REQUIRE(s.strings.defined);
          CHECK(s.phi == s.strings.phi);
          CHECK(s.eps == s.strings.eps);
          CHECK(s.strings.eps_hat + s.strings.eps_prime == s.strings.eps);
          CHECK(s.strings.phi_hat + s.strings.phi_prime == s.strings.phi);
        }
    }
}

TEST_CASE("highest weights, LR tableaux and ballot words coincide", "[crystal][oracle]") {
  for (const ShiftedShape& shape : shifted_shapes(10, 7))
    for (int n = 1; n <= 3; ++n) {
      const auto cg = build(shape, n);
      const auto hw = highest_weights(cg);
      const std::set<std::size_t> hws(hw.begin(), hw.end());
      for (std::size_t v = 0; v < cg.size(); ++v) {
        const Tableau& t = cg.vertex(v);
        CHECK(hws.count(v) == (is_ballot(t.reading_word(), n) ? 1u : 0u));
        CHECK(is_littlewood_richardson(t) == is_ballot(t.reading_word(), n));
      }
    }
}

TEST_CASE("components decompose the generating function", "[crystal][oracle]") {
  for (const ShiftedShape& shape : shifted_shapes(9, 6))
    for (int n = 2; n <= 3; ++n) {
      const auto cg = build(shape, n);
      QPolynomial sum(static_cast<std::size_t>(n));
      const auto comps = components(cg);
      const auto hw = highest_weights(cg);
      for (std::size_t k = 0; k < comps.size(); ++k) {
        const QPolynomial part = generating_function(cg.graph(), comps[k]);
        const StrictPartition nu(resized(cg.graph().weight(hw[k]), 0));
        CHECK(part == generating_function(ShiftedShape(nu), n));
      }
      for (const auto& [nu, f] : lr_coefficients(cg)) sum += generating_function(ShiftedShape(nu), n) * f;
      CHECK(sum == generating_function(shape, n));
    }
}

TEST_CASE("distant operators commute", "[crystal][oracle]") {
  for (const ShiftedShape& shape : shifted_shapes(7, 5))
    for_each_filling(shape, 4, [&](const Str& s) {
      const Tableau t(shape, s);
      for (bool p1 : {false, true})
        for (bool p3 : {false, true}) {
          const OperatorKind a{false, p1, 1}, b{false, p3, 3};
          const auto ab = apply(t, a) ? apply(*apply(t, a), b) : std::nullopt;
          const auto ba = apply(t, b) ? apply(*apply(t, b), a) : std::nullopt;
          CHECK(ab.has_value() == ba.has_value());
          if (ab && ba) CHECK(*ab == *ba);
        }
    });
}

TEST_CASE("straight-shape generating functions are symmetric", "[crystal][oracle]") {
  for (int total = 1; total <= 6; ++total)
    for (const StrictPartition& lam : strict_partitions(total))
      for (int n = 2; n <= 3; ++n) CHECK(generating_function(ShiftedShape(lam), n).is_symmetric());
}
