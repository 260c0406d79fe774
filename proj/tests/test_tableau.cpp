#include <catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>

#include <shtab/tableau.hpp>

using namespace shtab;

namespace {
StrictPartition P(std::vector<int> v) { return StrictPartition(std::move(v)); }
ShiftedShape Sh(std::vector<int> outer, std::vector<int> inner = {}) {
  return ShiftedShape(P(std::move(outer)), P(std::move(inner)));
}

// All canonical semistandard fillings, by trying every string of the right
// length and keeping the valid canonical ones.
std::set<Str> brute_force_fillings(const ShiftedShape& shape, int n) {
  std::set<Str> out;
  std::vector<Str> strings{Str{}};
  for (std::size_t k = 0; k < shape.size(); ++k) {
    std::vector<Str> next;
    for (const Str& s : strings)
      for (int r = 1; r <= 2 * n; ++r) {
        Str t = s;
        t.push_back(letter_from_rank(r));
        next.push_back(std::move(t));
      }
    strings = std::move(next);
  }
  for (const Str& s : strings)
    if (validate(shape, s).empty()) out.insert(canonicalize(s));
  return out;
}
}  // namespace

TEST_CASE("strict partitions", "[tableau]") {
  CHECK(strict_partitions(0).size() == 1);
  CHECK(strict_partitions(6).size() == 4);  // 6, 51, 42, 321
  CHECK(is_strict_partition(std::vector<int>{3, 1, 0}));
  CHECK_FALSE(is_strict_partition(std::vector<int>{2, 2}));
  CHECK_THROWS_AS(P({1, 2}), ContractViolation);
  CHECK(parse_partition("(4,2,1)") == P({4, 2, 1}));
  CHECK(parse_partition("") == StrictPartition());
  CHECK_THROWS_AS(parse_partition("2,2"), ParseError);
  CHECK_THROWS_AS(parse_partition("a"), ParseError);
}

TEST_CASE("shifted shapes and reading order", "[tableau]") {
  auto cells = [](const ShiftedShape& s) { return s.cells(); };
  CHECK(cells(Sh({2, 1})) == std::vector<Cell>{{2, 2}, {1, 1}, {1, 2}});
  CHECK(cells(Sh({2, 1}, {1})) == std::vector<Cell>{{2, 2}, {1, 2}});
  CHECK(cells(Sh({3})) == std::vector<Cell>{{1, 1}, {1, 2}, {1, 3}});
  const ShiftedShape s = Sh({4, 2, 1}, {2});
  for (std::size_t k = 0; k < s.size(); ++k) CHECK(s.index_of(s.cells()[k]) == k);
  CHECK_THROWS_AS(Sh({2}, {3}), ContractViolation);
  CHECK_THROWS_AS(Sh({2}, {2, 1}), ContractViolation);
}

TEST_CASE("validation", "[tableau]") {
  const ShiftedShape s = Sh({2, 1});
  CHECK(validate(s, parse_str("211")).empty());
  const auto bad = validate(s, parse_str("212"));
  REQUIRE_FALSE(bad.empty());
  CHECK(bad.front().kind == Violation::Kind::unprimed_repeat_in_column);
  const auto row = validate(Sh({3}), parse_str("12'2'"));
  REQUIRE_FALSE(row.empty());
  CHECK(row.front().kind == Violation::Kind::primed_repeat_in_row);
  std::map<Cell, Letter> by_cell{{{1, 1}, Letter{1, false}}, {{1, 2}, Letter{1, false}}};
  CHECK_THROWS_AS(validate(s, by_cell), ContractViolation);
  CHECK_THROWS_AS(Tableau(s, parse_str("212")), IntegrityError);
}

TEST_CASE("reading words", "[tableau]") {
  CHECK(to_string(Tableau(Sh({2, 1}), parse_str("211")).reading_word()) == "211");
  CHECK(to_string(Tableau(Sh({2, 1}, {1}), parse_str("11'")).reading_word()) == "11'");
  const Tableau t(Sh({3, 1}), parse_str("2112'"));
  const auto rows = t.rows();
  REQUIRE(rows.size() == 2);
  CHECK(to_string(rows[0]) == "112'");
  CHECK(to_string(rows[1]) == "2");
}

TEST_CASE("apply_word fills cells in reading order", "[tableau]") {
  const Tableau t(Sh({2, 1}), parse_str("211"));
  const Tableau u = apply_word(t, parse_word("212'"));
  CHECK(u.at({2, 2}) == Letter{2, false});
  CHECK(u.at({1, 1}) == Letter{1, false});
  CHECK(u.at({1, 2}) == Letter{2, true});
  const Tableau v = apply_word(Tableau(Sh({2, 1}, {1}), parse_str("11'")), parse_word("22'"));
  CHECK(v.at({2, 2}) == Letter{2, false});
  CHECK(v.at({1, 2}) == Letter{2, true});
  CHECK_THROWS_AS(apply_word(t, parse_word("21")), ContractViolation);
}

TEST_CASE("enumeration examples", "[tableau]") {
  auto words = [](const ShiftedShape& s, int n) {
    std::vector<std::string> out;
    for (const auto& t : enumerate(s, n)) out.push_back(to_string(t.entries()));
    return out;
  };
  CHECK(words(Sh({3}), 2) == std::vector<std::string>{"111", "112", "122", "222"});
  CHECK(words(Sh({2, 1}), 2) == std::vector<std::string>{"211", "212'"});
  CHECK(words(Sh({2, 1}, {1}), 2) == std::vector<std::string>{"11'", "21", "22'"});
  CHECK(words(Sh({1}), 1) == std::vector<std::string>{"1"});
}

TEST_CASE("enumeration matches brute force", "[tableau][oracle]") {
  for (const ShiftedShape& s : shifted_shapes(7, 4))
    for (int n = 1; n <= 3; ++n) {
      std::set<Str> got;
      for_each_filling(s, n, [&](const Str& w) { CHECK(got.insert(w).second); });
      CHECK(got == brute_force_fillings(s, n));
    }
}

TEST_CASE("shape families", "[tableau]") {
  const auto all = shifted_shapes(4, 2);
  // straight shapes of size <= 2 and skew shapes with <= 2 cells, |lambda| <= 4
  for (const auto& s : all) {
    CHECK(s.size() >= 1);
    CHECK(s.size() <= 2);
    CHECK(s.outer().size() <= 4);
  }
  CHECK(std::count_if(all.begin(), all.end(), [](const ShiftedShape& s) { return s.is_straight(); }) == 2);
  const auto skew = shifted_shapes(4, 2, false);
  CHECK(std::none_of(skew.begin(), skew.end(), [](const ShiftedShape& s) { return s.is_straight(); }));
}
