#pragma once

// Acceptance checks, shared by `shtab selftest` and the acceptance test.
// Tier::full runs the stated ranges; Tier::quick shrinks the exhaustive
// sweeps to a few seconds.

#include <chrono>
#include <cstddef>
#include <cstdio>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "axioms.hpp"
#include "crystal.hpp"
#include "export.hpp"
#include "jdt.hpp"
#include "operators.hpp"
#include "qpoly.hpp"
#include "tableau.hpp"
#include "walk.hpp"
#include "word.hpp"

namespace shtab::selftest {

enum class Tier { quick, full };

struct Result {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit = 0;  // seconds; 0 means no limit
};

namespace detail {

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  void fail(const std::string& why) {
    if (ok) note << why;
    ok = false;
  }
};

inline std::string show(const std::optional<Word>& w) { return w ? to_string(*w) : "(none)"; }

// ---- 1
inline void walk_fidelity(Tier, Outcome& o) {
  const WalkPoint a = walk_endpoint(parse_word("211'12'22'1'1'"));
  const Word w = parse_word("1221'1'111'1'2'");
  const WalkPoint b = walk_endpoint(w);
  const auto fw = f(w);
  if (a != WalkPoint{3, 2}) o.fail("first walk ends at " + to_string(a));
  if (b != WalkPoint{5, 1}) o.fail("second walk ends at " + to_string(b));
  if (!fw) return o.fail("F undefined on the second word");
  const WalkPoint c = walk_endpoint(*fw);
  if (c != WalkPoint{4, 2}) o.fail("F-image walk ends at " + to_string(c));
  o.note << "(3,2); (5,1) -> (4,2)";
}

// ---- 2
inline void primed_chains(Tier, Outcome& o) {
  const std::vector<std::vector<std::string>> chains{
      {"12211'", "1222'1'"},
      {"1111'1'", "1121'1'", "1221'1'", "22211'", "2222'1", "2222'2'"}};
  for (const auto& chain : chains) {
    for (std::size_t k = 0; k < chain.size(); ++k) {
      const auto img = f_prime(parse_word(chain[k]));
      if (k + 1 < chain.size()) {
        if (!img || *img != parse_word(chain[k + 1]))
          o.fail("F'(" + chain[k] + ") = " + show(img) + ", expected " + to_string(parse_word(chain[k + 1])));
      } else if (img) {
        o.fail("F'(" + chain[k] + ") = " + show(img) + ", expected none");
      }
    }
  }
  if (o.ok) o.note << "2 chains, 8 links";
}

// ---- 3
inline void critical_example(Tier, Outcome& o) {
  const Word w = parse_word("1221'1'111'1'2'2222'2'11'1");
  std::map<std::pair<std::size_t, std::size_t>, std::set<std::string>> found;
  for (const auto& m : critical_substrings(w, Action::lower))
    found[{m.start + 1, m.start + m.length}].insert(to_string(m.type, Action::lower));
  const std::map<std::pair<std::size_t, std::size_t>, std::set<std::string>> want{
      {{1, 1}, {"3F", "4F"}}, {{1, 2}, {"1F"}}, {{1, 4}, {"2F"}}, {{7, 10}, {"1F"}}};
  if (found != want) {
    std::string got;
    for (const auto& [span, types] : found) {
      got += " " + std::to_string(span.first) + "-" + std::to_string(span.second) + ":";
      for (const auto& t : types) got += t;
    }
    o.fail("critical substrings found:" + got);
  }
  const auto fin = final_critical(w, Action::lower);
  if (!fin || fin->start != 6 || fin->length != 4 || fin->type != CriticalType::t1)
    o.fail("final critical substring is not the 1F at 7-10");
  const auto img = f(w);
  const Word want_img = parse_word("1221'1'12'1'1'22222'2'11'1");
  if (!img || *img != want_img) o.fail("F(w) = " + show(img));
  if (o.ok) o.note << "4 substrings, final 1F at 7-10, F(w) = " << to_string(*img);
}

// ---- 4
inline void inverse_property(Tier tier, Outcome& o) {
  const std::size_t max_len = tier == Tier::full ? 8 : 6;
  std::size_t words = 0, bad = 0;
  for (std::size_t len = 0; len <= max_len; ++len)
    for_each_canonical_word(len, 2, [&](const Str& s) {
      ++words;
      const Word w(s);
      auto check = [&](const std::optional<Word>& img, auto&& back, const char* what) {
        if (!img) return;
        const auto b = back(*img);
        if (!b || *b != w) {
          if (bad++ == 0) o.fail(std::string(what) + " fails at " + to_string(w));
        }
      };
      check(f(w), [](const Word& x) { return e(x); }, "e(f(w)) = w");
      check(e(w), [](const Word& x) { return f(x); }, "f(e(w)) = w");
      check(f_prime(w), [](const Word& x) { return e_prime(x); }, "e'(f'(w)) = w");
      check(e_prime(w), [](const Word& x) { return f_prime(x); }, "f'(e'(w)) = w");
    });
  o.note << words << " words up to length " << max_len << ", " << bad << " violations";
}

// ---- 5
inline void ballot_equivalence(Tier tier, Outcome& o) {
  const std::size_t max_len = tier == Tier::full ? 8 : 6;
  std::size_t words = 0, bad = 0, ballot = 0;
  for (std::size_t len = 0; len <= max_len; ++len)
    for_each_canonical_word(len, 3, [&](const Str& s) {
        ++words;
        const Word w(s);
        const bool b = is_ballot(w, 3);
        ballot += b;
        if (b != is_littlewood_richardson(realize(w)) && bad++ == 0)
          o.fail("disagreement at " + to_string(w));
      });
  o.note << words << " words (n <= 3, length <= " << max_len << "), " << ballot << " ballot, " << bad
         << " disagreements";
}

// ---- 6
inline void coplacticity(Tier tier, Outcome& o) {
  const int max_outer = tier == Tier::full ? 15 : 10;
  std::size_t shapes = 0, checks = 0, bad = 0;
  const std::vector<OperatorKind> ops = [] {
    std::vector<OperatorKind> v;
    for (int i = 1; i <= 2; ++i)
      for (bool r : {false, true})
        for (bool p : {false, true}) v.push_back({r, p, i});
    return v;
  }();
  for (const ShiftedShape& shape : shifted_shapes(max_outer, 6, false)) {
    ++shapes;
    const auto corners = inner_corners(shape);
    // Entries <= 3 covers every n <= 3; operators of index >= n never apply below.
    for_each_filling(shape, 3, [&](const Str& s) {
        const Tableau t(shape, s);
        for (const Cell c : corners) {
          const Tableau slid = slide(t, c);
          for (const OperatorKind k : ops) {
            ++checks;
            const auto a = apply(t, k);
            const auto b = apply(slid, k);
            const bool agree = a ? (b && slide(*a, c) == *b) : !b;
            if (!agree && bad++ == 0)
              o.fail(to_string(k) + " does not commute with the slide at " + to_string(c) + " on " + to_string(s) +
                     " in " + to_string(shape));
          }
        }
      });
  }
  o.note << shapes << " skew shapes (|lambda| <= " << max_outer << ", <= 6 cells), " << checks << " checks, "
         << bad << " violations";
}

// ---- 7
inline void crystal_structure(Tier tier, Outcome& o) {
  const int straight_max = tier == Tier::full ? 8 : 6;
  const int skew_outer = tier == Tier::full ? 12 : 9;
  const int skew_cells = tier == Tier::full ? 7 : 5;
  std::vector<ShiftedShape> family;
  for (int t = 1; t <= straight_max; ++t)
    for (const auto& lam : strict_partitions(t)) family.emplace_back(lam);
  for (auto& s : shifted_shapes(skew_outer, skew_cells, false)) family.push_back(std::move(s));
  std::size_t crystals = 0, vertices = 0, comps = 0, bad = 0;
  for (const ShiftedShape& shape : family)
    for (int n = 1; n <= 3; ++n) {
      ++crystals;
      try {
        const CrystalGraph cg = build(shape, n);
        vertices += cg.size();
        const auto hw = highest_weights(cg);
        comps += hw.size();
        std::set<std::size_t> hw_set(hw.begin(), hw.end());
        for (std::size_t v = 0; v < cg.size(); ++v) {
          const bool lr = is_littlewood_richardson(cg.vertex(v));
          const bool bal = is_ballot(cg.vertex(v).reading_word(), n);
          if ((lr != hw_set.count(v) || bal != lr) && bad++ == 0)
            o.fail("highest weights differ from LR tableaux at " + cg.graph().display(v) + " in " + to_string(shape));
        }
        const auto rep = check_kashiwara(cg);
        if (!rep.passed() && bad++ == 0)
          o.fail("check_kashiwara on " + to_string(shape) + ", n = " + std::to_string(n) + ": " +
                 rep.violations.front());
      } catch (const IntegrityError& e) {
        if (bad++ == 0) o.fail(to_string(shape) + ", n = " + std::to_string(n) + ": " + e.what());
      }
    }
  o.note << crystals << " crystals, " << vertices << " vertices, " << comps << " components, " << bad
         << " failures";
}

// ---- 8
/// q_k in `vars` variables from the series prod_i (1 + x_i t) / (1 - x_i t).
inline QPolynomial q_series(int k, std::size_t vars) {
  QPolynomial out(vars);
  std::vector<int> e(vars, 0);
  auto rec = [&](auto& self, std::size_t i, int left, long long coeff) -> void {
    if (i + 1 == vars) {
      e[i] = left;
      out.add_term(e, coeff * (left > 0 ? 2 : 1));
      return;
    }
    for (int a = 0; a <= left; ++a) {
      e[i] = a;
      self(self, i + 1, left - a, coeff * (a > 0 ? 2 : 1));
    }
  };
  if (k < 0) return out;
  rec(rec, 0, k, 1);
  return out;
}

inline void q_identities(Tier, Outcome& o) {
  const ShiftedShape three(StrictPartition({3}));
  const ShiftedShape two_one(StrictPartition({2, 1}));
  QPolynomial want3(2), want21(2);
  want3.add_term({3, 0}, 2);
  want3.add_term({2, 1}, 4);
  want3.add_term({1, 2}, 4);
  want3.add_term({0, 3}, 2);
  want21.add_term({2, 1}, 4);
  want21.add_term({1, 2}, 4);
  const QPolynomial g3 = generating_function(three, 2);
  const QPolynomial g21 = generating_function(two_one, 2);
  if (!(g3 == want3)) o.fail("generating_function((3),2) = " + g3.to_string());
  if (!(g21 == want21)) o.fail("generating_function((2,1),2) = " + g21.to_string());
  // Q_(2,1) = q_2 q_1 - 2 q_3.
  if (!(g3 == q_series(3, 2))) o.fail("q_3 from the series is " + q_series(3, 2).to_string());
  if (!(g21 == q_series(2, 2) * q_series(1, 2) - q_series(3, 2) * 2))
    o.fail("Q_(2,1) from the series differs");
  const auto lr = lr_coefficients(StrictPartition({2, 1}), StrictPartition({1}), 2);
  if (lr != std::map<StrictPartition, int>{{StrictPartition({2}), 1}}) o.fail("lr_coefficients((2,1),(1),2) wrong");
  if (o.ok) o.note << "Q_(3) = " << g3.to_string() << "; Q_(2,1) = " << g21.to_string() << "; f = {(2):1}";
}

// ---- 9
inline void symmetry(Tier tier, Outcome& o) {
  const int max_size = tier == Tier::full ? 7 : 5;
  std::size_t polys = 0;
  for (int t = 1; t <= max_size; ++t)
    for (const auto& lam : strict_partitions(t))
      for (int n = 1; n <= 3; ++n) {
        ++polys;
        const QPolynomial p = generating_function(ShiftedShape(lam), n);
        if (!p.is_symmetric()) o.fail("not symmetric: " + to_string(lam) + ", n = " + std::to_string(n));
      }
  o.note << polys << " generating functions (|lambda| <= " << max_size << ", n <= 3)";
}

// ---- 10
inline void axiom_checker(Tier, Outcome& o) {
  std::size_t components = 0, mutations = 0, missed = 0;
  for (const auto& parts : std::vector<std::vector<int>>{{3, 1}, {4, 2, 1}}) {
    const CrystalGraph cg = build(ShiftedShape(StrictPartition(parts)), 3);
    const LabeledGraph g = load_graph(nlohmann::json::parse(to_json(cg).dump()));
    const Verification v = verify(g);
    components += v.certificates.size();
    if (!v.certified()) {
      std::string why = v.report.passed() ? "" : v.report.violations.front().axiom + " " + v.report.violations.front().detail;
      for (const auto& c : v.certificates)
        if (!c.ok && why.empty()) why = c.refutation;
      o.fail("ShST(" + to_string(cg.shape()) + ",3) not certified: " + why);
    }
  }
  for (const auto& parts : std::vector<std::vector<int>>{{3}, {2, 1}}) {
    const LabeledGraph g = build(ShiftedShape(StrictPartition(parts)), 2).graph();
    for (const Mutation& m : single_edge_mutations(g)) {
      ++mutations;
      if (verify(m.graph).certified() && missed++ == 0) o.fail("undetected mutation: " + m.description);
    }
  }
  o.note << components << " components certified; " << mutations - missed << "/" << mutations
         << " mutations detected";
}

// ---- 11
inline void shape_formula(Tier tier, Outcome& o) {
  const std::size_t max_len = tier == Tier::full ? 10 : 7;
  std::size_t words = 0, bad = 0;
  for (std::size_t len = 0; len <= max_len; ++len)
    for_each_canonical_word(len, 2, [&](const Str& s) {
      ++words;
      const Word w(s);
      if (rect_shape(w) != rectify(realize(w)).shape().outer() && bad++ == 0)
        o.fail("shape differs at " + to_string(w));
    });
  o.note << words << " words up to length " << max_len << ", " << bad << " disagreements";
}

struct Criterion {
  int id;
  const char* name;
  double limit;
  void (*run)(Tier, Outcome&);
};

inline const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "walk fidelity", 0.001, walk_fidelity},
      {2, "primed chains", 0, primed_chains},
      {3, "critical-substring example", 0, critical_example},
      {4, "inverse property", 60, inverse_property},
      {5, "ballot equivalence", 0, ballot_equivalence},
      {6, "coplacticity", 300, coplacticity},
      {7, "crystal structure", 0, crystal_structure},
      {8, "Q-function identities", 0, q_identities},
      {9, "symmetry", 0, symmetry},
      {10, "axiom checker", 120, axiom_checker},
      {11, "shape formula", 0, shape_formula},
  };
  return all;
}

}  // namespace detail

[[nodiscard]] inline Result run_one(int id, Tier tier) {
  for (const auto& c : detail::criteria()) {
    if (c.id != id) continue;
    detail::Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(tier, o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Result r{c.id, c.name, o.ok, o.note.str(), secs, c.limit};
    if (c.limit > 0 && secs >= c.limit) {
      r.passed = false;
      r.detail += "; runtime " + std::to_string(secs) + " s exceeds " + std::to_string(c.limit) + " s";
    }
    return r;
  }
  throw ContractViolation("no acceptance criterion " + std::to_string(id));
}

[[nodiscard]] inline std::size_t criterion_count() { return detail::criteria().size(); }

/// "[PASS] 4 inverse property (0.21 s): ..." lines, one per criterion.
inline std::vector<Result> run_all(Tier tier, std::ostream* out = nullptr) {
  std::vector<Result> results;
  for (const auto& c : detail::criteria()) {
    results.push_back(run_one(c.id, tier));
    if (out) {
      const Result& r = results.back();
      char secs[32];
      std::snprintf(secs, sizeof secs, "%.3f", r.seconds);
      *out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << " (" << secs << " s";
      if (r.limit > 0) *out << ", limit " << r.limit << " s";
      *out << "): " << r.detail << "\n" << std::flush;
    }
  }
  return results;
}

}  // namespace shtab::selftest
