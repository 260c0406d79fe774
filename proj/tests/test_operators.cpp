#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <tuple>

#include <shtab/jdt.hpp>
#include <shtab/operators.hpp>

using namespace shtab;

namespace {
Word W(const char* t) { return parse_word(t); }

std::set<std::tuple<std::size_t, std::size_t, CriticalType>> spans(const std::vector<CriticalMatch>& ms) {
  std::set<std::tuple<std::size_t, std::size_t, CriticalType>> out;
  for (const auto& m : ms) out.emplace(m.start, m.length, m.type);
  return out;
}

// F' by search: the canonical word of the shifted weight with the same
// standardization.
std::optional<Word> f_prime_oracle(const Word& w) {
  Weight wt = resized(weight(w), 2);
  if (wt[0] == 0) return std::nullopt;
  const StdWord target = standardize(w);
  std::optional<Word> hit;
  for_each_canonical_word(w.size(), 2, [&](const Str& s) {
    if (resized(weight(s), 2) == Weight{wt[0] - 1, wt[1] + 1} && standardize(s) == target) {
      CHECK_FALSE(hit.has_value());
      hit = Word(s);
    }
  });
  return hit;
}
}  // namespace

TEST_CASE("primed operators", "[operators]") {
  CHECK(f_prime(W("12211'")) == W("1222'1'"));
  CHECK_FALSE(f_prime(W("1222'1'")).has_value());
  CHECK(f_prime(W("1111'1'")) == W("1121'1'"));
  CHECK(e_prime(W("1121'1'")) == W("1111'1'"));
  CHECK_FALSE(e_prime(W("211")).has_value());
  CHECK_FALSE(e_prime(W("")).has_value());
  CHECK_THROWS_AS(f_prime(W("13")), ContractViolation);
}

TEST_CASE("critical substrings", "[operators]") {
  const Word big = W("1221'1'111'1'2'2222'2'11'1");
  const auto ms = critical_substrings(big, Action::lower);
  std::set<std::pair<std::size_t, std::size_t>> where;
  for (const auto& m : ms) where.emplace(m.start, m.length);
  CHECK(where == std::set<std::pair<std::size_t, std::size_t>>{{0, 1}, {0, 2}, {0, 4}, {6, 4}});
  const auto fin = final_critical(big, Action::lower);
  REQUIRE(fin.has_value());
  CHECK(fin->start == 6);
  CHECK(fin->length == 4);
  CHECK(fin->type == CriticalType::t1);

  const auto small = spans(critical_substrings(W("112"), Action::lower));
  CHECK(small.count({0, 1, CriticalType::t3}));
  CHECK(small.count({0, 1, CriticalType::t4}));
  CHECK(small.count({1, 1, CriticalType::t3}));
  CHECK(small.count({1, 2, CriticalType::t1}));
  for (const auto& [start, len, type] : small) CHECK(start <= 1);

  CHECK(critical_substrings(W("22'"), Action::lower).empty());
  CHECK_FALSE(final_critical(W("22'"), Action::lower).has_value());

  const auto five = final_critical(W("211"), Action::lower);
  REQUIRE(five.has_value());
  CHECK(five->start == 2);
  CHECK(five->type == CriticalType::t5);
  CHECK(five->location == WalkPoint{1, 1});
  CHECK(to_string(CriticalType::t5, Action::lower) == "5F");
}

TEST_CASE("unprimed operators", "[operators]") {
  CHECK(f(W("1221'1'111'1'2'2222'2'11'1")) == W("1221'1'12'1'1'22222'2'11'1"));
  CHECK(f(W("112")) == W("122"));
  CHECK_FALSE(f(W("211")).has_value());
  CHECK(e(W("122")) == W("112"));
  CHECK(e(W("1221'1'12'1'1'22222'2'11'1")) == W("1221'1'111'1'2'2222'2'11'1"));
  CHECK_FALSE(e(W("11")).has_value());
}

TEST_CASE("operator kinds", "[operators]") {
  CHECK(parse_operator_kind("F'", 2) == OperatorKind{false, true, 2});
  CHECK(parse_operator_kind("e", 1) == OperatorKind{true, false, 1});
  CHECK(parse_operator_kind("E\xE2\x80\xB2", 1) == OperatorKind{true, true, 1});
  CHECK_THROWS_AS(parse_operator_kind("G", 1), ParseError);
  CHECK_THROWS_AS(parse_operator_kind("F", 0), ParseError);
  CHECK(to_string(OperatorKind{true, true, 3}) == "E'3");
}

TEST_CASE("operators on multi-class words go through restriction", "[operators]") {
  // index 2 acts on the 2s and 3s only
  const Word w = W("3111'21'12'");
  const auto img = apply(w, OperatorKind{false, false, 2});
  const Restriction r = restrict_to(w, 2);
  const auto two = f(r.word);
  CHECK(img.has_value() == two.has_value());
  if (img) CHECK(*img == splice(w, 2, r, *two));
}

TEST_CASE("operators on tableaux", "[operators]") {
  const ShiftedShape s21(StrictPartition({2, 1}));
  const Tableau t(s21, parse_str("211"));
  const auto fp = apply(t, OperatorKind{false, true, 1});
  REQUIRE(fp.has_value());
  CHECK(to_string(fp->entries()) == "212'");
  CHECK_FALSE(apply(t, OperatorKind{false, false, 1}).has_value());

  const ShiftedShape skew(StrictPartition({2, 1}), StrictPartition({1}));
  const Tableau u(skew, parse_str("21"));
  const auto a = apply(u, OperatorKind{false, false, 1});
  const auto b = apply(u, OperatorKind{false, true, 1});
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(to_string(a->entries()) == "22'");
  CHECK(to_string(b->entries()) == "22'");
}

TEST_CASE("F' matches a brute-force search", "[operators][oracle]") {
  for (std::size_t len = 0; len <= 6; ++len)
    for_each_canonical_word(len, 2, [&](const Str& s) {
      const Word w(s);
      CHECK(f_prime(w) == f_prime_oracle(w));
    });
}

TEST_CASE("inverse pairs, weight and endpoint shifts", "[operators][oracle]") {
  for (std::size_t len = 0; len <= 7; ++len)
    for_each_canonical_word(len, 2, [&](const Str& s) {
      const Word w(s);
      const Weight wt = resized(weight(w), 2);
      const WalkPoint p = walk_endpoint(w);
      for (bool primed : {false, true}) {
        const auto down = primed ? f_prime(w) : f(w);
        const auto up = primed ? e_prime(w) : e(w);
        if (down) {
          CHECK((primed ? e_prime(*down) : e(*down)) == w);
          CHECK(resized(weight(*down), 2) == Weight{wt[0] - 1, wt[1] + 1});
          CHECK(walk_endpoint(*down) == WalkPoint{p.x - 1, p.y + 1});
        }
        if (up) {
          CHECK((primed ? f_prime(*up) : f(*up)) == w);
          CHECK(resized(weight(*up), 2) == Weight{wt[0] + 1, wt[1] - 1});
          CHECK(walk_endpoint(*up) == WalkPoint{p.x + 1, p.y - 1});
        }
      }
      // something lowers iff the walk ends off the y-axis, raises iff off the x-axis
      CHECK((f(w) || f_prime(w)) == (p.x > 0));
      CHECK((e(w) || e_prime(w)) == (p.y > 0));
    });
}

TEST_CASE("operators commute with slides", "[operators][jdt][oracle]") {
  for (const ShiftedShape& shape : shifted_shapes(9, 5, false))
    for_each_filling(shape, 3, [&](const Str& s) {
      const Tableau t(shape, s);
      for (const Cell c : inner_corners(shape))
        for (int i = 1; i <= 2; ++i)
          for (bool raising : {false, true})
            for (bool primed : {false, true}) {
              const OperatorKind k{raising, primed, i};
              const auto before = apply(t, k);
              const auto after = apply(slide(t, c), k);
              REQUIRE(before.has_value() == after.has_value());
              if (before) CHECK(slide(*before, c) == *after);
            }
    });
}
