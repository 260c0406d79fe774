#include <catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>

#include <shtab/word.hpp>

using namespace shtab;

namespace {
Str S(const char* t) { return parse_str(t); }
Word W(const char* t) { return parse_word(t); }

// Every string (canonical or not) of the given length over classes 1..n.
std::vector<Str> all_strings(std::size_t len, int n) {
  std::vector<Str> out{Str{}};
  for (std::size_t k = 0; k < len; ++k) {
    std::vector<Str> next;
    for (const Str& s : out)
      for (int r = 1; r <= 2 * n; ++r) {
        Str t = s;
        t.push_back(letter_from_rank(r));
        next.push_back(std::move(t));
      }
    out = std::move(next);
  }
  return out;
}
}  // namespace

TEST_CASE("letters order as 1' < 1 < 2' < 2", "[word]") {
  CHECK(Letter{1, true} < Letter{1, false});
  CHECK(Letter{1, false} < Letter{2, true});
  CHECK(Letter{2, true} < Letter{2, false});
  for (int r = 1; r <= 8; ++r) CHECK(letter_from_rank(r).rank() == r);
}

TEST_CASE("parse and print", "[word]") {
  CHECK(to_string(W("3111'21'12'")) == "3111'21'12'");
  CHECK(to_string(W("3111\xE2\x80\xB2" "2")) == "3111'2");
  CHECK(W("").empty());
  CHECK(to_string(parse_word("10,2',10")) == "10,2,10");
  CHECK_THROWS_AS(parse_word("1x"), ParseError);
  CHECK_THROWS_AS(parse_word("'1"), ParseError);
  CHECK_THROWS_AS(parse_word("0"), ParseError);
}

TEST_CASE("canonical form", "[word]") {
  CHECK(canonicalize(S("2'1'1")) == S("211"));
  CHECK(canonicalize(S("1221'1'")) == S("1221'1'"));
  CHECK(canonicalize(S("2'11")) == S("211"));
  CHECK(is_canonical(S("11'")));
  CHECK_FALSE(is_canonical(S("1'1")));
  CHECK(equivalent(S("2'11"), S("21'1")));
  CHECK_FALSE(equivalent(S("12"), S("21")));
  CHECK(equivalent(S("112'"), S("112")));
}

TEST_CASE("representatives", "[word]") {
  auto set_of = [](const Word& w) {
    std::set<std::string> out;
    for (const auto& s : representatives(w)) out.insert(to_string(s));
    return out;
  };
  CHECK(set_of(W("21")) == std::set<std::string>{"21", "2'1", "21'", "2'1'"});
  CHECK(set_of(W("11")) == std::set<std::string>{"11", "1'1"});
  CHECK(set_of(W("")) == std::set<std::string>{""});
}

TEST_CASE("enumerated canonical words are exactly the canonical strings", "[word][oracle]") {
  for (int n = 1; n <= 3; ++n)
    for (std::size_t len = 0; len <= 4; ++len) {
      std::set<Str> oracle;
      for (const Str& s : all_strings(len, n)) oracle.insert(canonicalize(s));
      std::vector<Str> got;
      for_each_canonical_word(len, n, [&](const Str& s) { got.push_back(s); });
      CHECK(std::is_sorted(got.begin(), got.end()));
      CHECK(std::set<Str>(got.begin(), got.end()) == oracle);
      CHECK(got.size() == oracle.size());
    }
}

TEST_CASE("weight", "[word]") {
  CHECK(weight(W("3111'21'12'")) == Weight{5, 2, 1});
  CHECK(weight(W("12211'")) == Weight{3, 2});
  CHECK(weight(W("")).empty());
  CHECK(resized({2, 0, 0}, 1) == Weight{2});
  CHECK(resized({2}, 3) == Weight{2, 0, 0});
}

TEST_CASE("standardization", "[word]") {
  CHECK(standardize(W("3111'21'12'")) == StdWord{8, 3, 4, 2, 7, 1, 5, 6});
  CHECK(standardize(W("12211'")) == StdWord{2, 4, 5, 3, 1});
  CHECK(standardize(W("11")) == StdWord{1, 2});
  CHECK(standardize(S("1'1")) == StdWord{1, 2});
  CHECK(standardize(S("1'1'")) == StdWord{2, 1});
}

TEST_CASE("destandardization examples", "[word]") {
  const StdWord p{3, 1, 2};
  CHECK(destandardize(p, Weight{1, 2}) == W("212'"));
  CHECK_FALSE(destandardize(p, Weight{3, 0}).has_value());
  CHECK(destandardize(StdWord{8, 3, 4, 2, 7, 1, 5, 6}, Weight{5, 2, 1}) == W("3111'21'12'"));
  CHECK_FALSE(destandardize(p, Weight{4, -1}).has_value());
  CHECK_THROWS_AS(destandardize(StdWord{1, 1}, Weight{2}), ContractViolation);
  CHECK_THROWS_AS(destandardize(p, Weight{1, 1}), ContractViolation);
}

TEST_CASE("destandardize agrees with a brute-force search over all words", "[word][oracle]") {
  // For each permutation and weight, collect every canonical word with that
  // weight whose standardization is the permutation: at most one may exist.
  for (std::size_t len = 1; len <= 5; ++len) {
    StdWord perm(len);
    for (std::size_t k = 0; k < len; ++k) perm[k] = static_cast<int>(k) + 1;
    std::map<std::pair<StdWord, Weight>, std::set<Str>> found;
    for_each_canonical_word(len, 3, [&](const Str& s) {
      found[{standardize(s), resized(weight(s), 3)}].insert(s);
    });
    do {
      for (int a = 0; a <= static_cast<int>(len); ++a)
        for (int b = 0; a + b <= static_cast<int>(len); ++b) {
          const Weight wt{a, b, static_cast<int>(len) - a - b};
          const auto it = found.find({perm, wt});
          const auto got = destandardize(perm, wt);
          if (it == found.end()) {
            CHECK_FALSE(got.has_value());
          } else {
            REQUIRE(it->second.size() == 1);
            REQUIRE(got.has_value());
            CHECK(got->letters() == *it->second.begin());
          }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("restriction and splice", "[word]") {
  const Word w = W("3111'21'12'");
  const Restriction r1 = restrict_to(w, 1);
  CHECK(r1.word == W("111'21'12'"));
  CHECK(r1.positions == std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7});
  const Restriction r2 = restrict_to(w, 2);
  CHECK(r2.word == W("211'"));
  CHECK(r2.positions == std::vector<std::size_t>{0, 4, 7});
  const Restriction r3 = restrict_to(W("11"), 2);
  CHECK(r3.word.empty());
  CHECK(r3.positions.empty());
  CHECK(splice(w, 2, r2, r2.word) == w);
  CHECK(splice(w, 2, r2, W("221")) == W("3111'31'12"));
}
