#include <catch_amalgamated.hpp>

#include <shtab/jdt.hpp>
#include <shtab/walk.hpp>

using namespace shtab;

namespace {
Word W(const char* t) { return parse_word(t); }
}

TEST_CASE("single steps", "[walk]") {
  CHECK(walk_step({0, 0}, Letter{1, false}) == WalkPoint{1, 0});
  CHECK(walk_step({0, 0}, Letter{1, true}) == WalkPoint{1, 0});
  CHECK(walk_step({2, 1}, Letter{1, false}) == WalkPoint{2, 0});
  CHECK(walk_step({2, 1}, Letter{1, true}) == WalkPoint{3, 1});
  CHECK(walk_step({2, 1}, Letter{2, true}) == WalkPoint{1, 1});
  CHECK(walk_step({2, 1}, Letter{2, false}) == WalkPoint{2, 2});
  CHECK(walk_step({0, 3}, Letter{2, true}) == WalkPoint{0, 4});
  CHECK_THROWS_AS(walk_step({0, 0}, Letter{3, false}), ContractViolation);
  CHECK_THROWS_AS(walk_step({-1, 0}, Letter{1, false}), ContractViolation);
}

TEST_CASE("walk endpoints", "[walk]") {
  CHECK(walk_endpoint(W("211'12'22'1'1'")) == WalkPoint{3, 2});
  CHECK(walk_endpoint(W("1221'1'111'1'2'")) == WalkPoint{5, 1});
  CHECK(walk_endpoint(W("")) == WalkPoint{0, 0});
  const Walk wk = walk(W("1221'1'111'1'2'"));
  std::string dirs;
  for (const auto& s : wk.steps) dirs += direction_char(s.direction);
  CHECK(dirs == "ENNEESSEEN");
  CHECK(wk.points.size() == 11);
  CHECK(walk_endpoint(W("3111'21'12'"), 1) == WalkPoint{4, 1});
}

TEST_CASE("rectification shape from the endpoint", "[walk]") {
  CHECK(rect_shape(W("211'12'22'1'1'")) == StrictPartition({7, 2}));
  CHECK(rect_shape(W("122")) == StrictPartition({3}));
  CHECK(rect_shape(W("")) == StrictPartition());
}

TEST_CASE("ballot words", "[walk]") {
  CHECK(is_ballot(W("211"), 2));
  CHECK_FALSE(is_ballot(W("221"), 2));
  CHECK_FALSE(is_ballot(W("3111'21'12'"), 3));
  CHECK(is_ballot(W(""), 3));
  CHECK_THROWS_AS(is_ballot(W("3"), 2), ContractViolation);
}

TEST_CASE("walk endpoint does not depend on the representative", "[walk][oracle]") {
  for (std::size_t len = 0; len <= 7; ++len)
    for_each_canonical_word(len, 2, [&](const Str& s) {
      const WalkPoint e = walk_endpoint(s);
      for (const Str& r : representatives(Word(s))) CHECK(walk_endpoint(r) == e);
    });
}

TEST_CASE("walk shape and ballot agree with rectification", "[walk][oracle]") {
  for (std::size_t len = 1; len <= 7; ++len)
    for_each_canonical_word(len, 2, [&](const Str& s) {
      const Word w(s);
      const Tableau r = rectify(realize(w));
      CHECK(rect_shape(w) == r.shape().outer());
      CHECK(is_ballot(w, 2) == is_littlewood_richardson(realize(w)));
    });
}
