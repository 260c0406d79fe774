#pragma once

// Coplactic raising and lowering operators on words and tableaux.
//
// The primed operators keep the standardization and move one unit of weight
// between the two classes. The unprimed lowering operator locates the final
// F-critical substring by scanning every representative against the walk and
// rewrites it; the raising operator is its conjugate under the involution
// 1 <-> 2', 1' <-> 2, which mirrors the walk across the diagonal.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "tableau.hpp"
#include "walk.hpp"
#include "word.hpp"

namespace shtab {

enum class Action { lower, raise };

enum class CriticalType { t1, t2, t3, t4, t5 };

inline std::string to_string(CriticalType t, Action a) {
  static constexpr std::array<const char*, 5> names{"1", "2", "3", "4", "5"};
  return std::string(names[static_cast<int>(t)]) + (a == Action::lower ? "F" : "E");
}

struct CriticalMatch {
  std::size_t start = 0;  // 0-based
  std::size_t length = 1;
  CriticalType type = CriticalType::t3;
  Action action = Action::lower;
  Str representative;  // the representative the pattern was found in
  WalkPoint location;  // walk position just before the first letter
};

namespace detail {

constexpr Letter one{1, false};
constexpr Letter one_p{1, true};
constexpr Letter two{2, false};
constexpr Letter two_p{2, true};

/// 1 <-> 2', 1' <-> 2.
[[nodiscard]] inline Str mirror(Str s) {
  for (Letter& l : s) {
    if (l.value != 1 && l.value != 2)
      throw ContractViolation("two-letter operators need letters of class 1 or 2");
    l = Letter{3 - l.value, !l.primed};
  }
  return s;
}

inline void require_two_class(const Word& w) {
  if (max_class(w.letters()) > 2)
    throw ContractViolation("two-letter operators need letters of class 1 or 2");
}

/// F-critical substrings of one representative, given its walk.
inline void scan_representative(const Str& v, const Walk& wk, std::vector<CriticalMatch>& out) {
  const std::size_t m = v.size();
  auto dir = [&](std::size_t k) { return wk.steps[k].direction; };
  auto push = [&](std::size_t start, std::size_t len, CriticalType t) {
    out.push_back({start, len, t, Action::lower, v, wk.steps[start].before});
  };
  for (std::size_t k = 0; k < m; ++k) {
    const WalkPoint at = wk.steps[k].before;
    const Letter l = v[k];
    const Direction d = dir(k);

    if (l == one && d == Direction::east && at.y == 0) push(k, 1, CriticalType::t3);
    if (l == one_p && d == Direction::east && at.x == 0) push(k, 1, CriticalType::t4);
    if (at.x == 1 && at.y >= 1 &&
        ((l == one && d == Direction::south) || (l == two_p && d == Direction::west)))
      push(k, 1, CriticalType::t5);

    // 1F: 1 (1')* 2'
    if (l == one && ((at.y == 0 && d == Direction::east) ||
                     (at.y == 1 && at.x >= 1 && d == Direction::south))) {
      std::size_t j = k + 1;
      while (j < m && v[j] == one_p && dir(j) == Direction::east) ++j;
      if (j < m && v[j] == two_p && dir(j) == Direction::north) push(k, j - k + 1, CriticalType::t1);
    }
    // 2F: 1 (2)* 1'
    if (l == one && ((at.x == 0 && d == Direction::east) ||
                     (at.x == 1 && at.y >= 1 && d == Direction::south))) {
      std::size_t j = k + 1;
      while (j < m && v[j] == two && dir(j) == Direction::north) ++j;
      if (j < m && v[j] == one_p && dir(j) == Direction::east) push(k, j - k + 1, CriticalType::t2);
    }
  }
}

[[nodiscard]] inline std::vector<CriticalMatch> f_critical(const Word& w) {
  require_two_class(w);
  std::vector<CriticalMatch> out;
  for (const Str& v : representatives(w)) scan_representative(v, walk(v), out);
  return out;
}

/// Matches maximizing (start, length); several only when representatives tie.
[[nodiscard]] inline std::vector<CriticalMatch> final_ties(std::vector<CriticalMatch> all) {
  std::vector<CriticalMatch> best;
  for (auto& m : all) {
    if (!best.empty()) {
      const auto& b = best.front();
      if (std::pair(m.start, m.length) < std::pair(b.start, b.length)) continue;
      if (std::pair(m.start, m.length) > std::pair(b.start, b.length)) best.clear();
    }
    best.push_back(std::move(m));
  }
  return best;
}

/// Rewrites the match inside its representative; nullopt for type 5.
[[nodiscard]] inline std::optional<Str> transform(const CriticalMatch& m) {
  Str v = m.representative;
  const std::size_t a = m.start;
  const std::size_t b = m.start + m.length - 1;
  switch (m.type) {
    case CriticalType::t1:  // 1 (1')* 2' -> 2' (1')* 2
      v[a] = two_p;
      v[b] = two;
      break;
    case CriticalType::t2:  // 1 (2)* 1' -> 2' (2)* 1
      v[a] = two_p;
      v[b] = one;
      break;
    case CriticalType::t3:
      v[a] = two;
      break;
    case CriticalType::t4:
      v[a] = two_p;
      break;
    case CriticalType::t5:
      return std::nullopt;
  }
  return v;
}

[[nodiscard]] inline std::optional<CriticalMatch> pick_final(const Word& w) {
  auto ties = final_ties(f_critical(w));
  if (ties.empty()) return std::nullopt;
  bool any5 = false;
  bool other = false;
  for (const auto& m : ties) (m.type == CriticalType::t5 ? any5 : other) = true;
  if (any5 && other)
    throw IntegrityError("final critical substring of " + to_string(w) +
                         " ties a type-5 match with a transformable one");
  return ties.front();
}

[[nodiscard]] inline CriticalMatch mirrored(CriticalMatch m) {
  m.action = m.action == Action::lower ? Action::raise : Action::lower;
  m.representative = mirror(std::move(m.representative));
  m.location = {m.location.y, m.location.x};
  return m;
}

[[nodiscard]] inline Word mirror(const Word& w) { return Word(mirror(w.letters())); }

}  // namespace detail

/// Every critical substring over all representatives, in scan order.
[[nodiscard]] inline std::vector<CriticalMatch> critical_substrings(const Word& w, Action a) {
  if (a == Action::lower) return detail::f_critical(w);
  auto found = detail::f_critical(detail::mirror(w));
  for (auto& m : found) m = detail::mirrored(std::move(m));
  return found;
}

/// The match with the highest start, longest on a tie.
[[nodiscard]] inline std::optional<CriticalMatch> final_critical(const Word& w, Action a) {
  if (a == Action::lower) return detail::pick_final(w);
  auto m = detail::pick_final(detail::mirror(w));
  if (m) m = detail::mirrored(std::move(*m));
  return m;
}

/// Unprimed lowering operator F.
[[nodiscard]] inline std::optional<Word> f(const Word& w) {
  const auto m = detail::pick_final(w);
  if (!m) return std::nullopt;
  auto v = detail::transform(*m);
  if (!v) return std::nullopt;
  return Word(std::move(*v));
}

/// Unprimed raising operator E.
[[nodiscard]] inline std::optional<Word> e(const Word& w) {
  detail::require_two_class(w);
  auto r = f(detail::mirror(w));
  if (!r) return std::nullopt;
  return detail::mirror(*r);
}

namespace detail {
[[nodiscard]] inline std::optional<Word> shift_weight(const Word& w, int delta) {
  require_two_class(w);
  Weight wt = resized(weight(w), 2);
  wt[0] += delta;
  wt[1] -= delta;
  if (wt[0] < 0 || wt[1] < 0) return std::nullopt;
  return destandardize(standardize(w), wt);
}
}  // namespace detail

/// Primed lowering operator F': same standardization, weight - (1,-1).
[[nodiscard]] inline std::optional<Word> f_prime(const Word& w) { return detail::shift_weight(w, -1); }

/// Primed raising operator E': same standardization, weight + (1,-1).
[[nodiscard]] inline std::optional<Word> e_prime(const Word& w) { return detail::shift_weight(w, +1); }

struct OperatorKind {
  bool raising = false;
  bool primed = false;
  int index = 1;

  friend constexpr bool operator==(OperatorKind, OperatorKind) = default;
};

inline std::string to_string(OperatorKind k) {
  return std::string(k.raising ? "E" : "F") + (k.primed ? "'" : "") + std::to_string(k.index);
}

/// "F", "F'", "E", "E'" (the apostrophe may also be the Unicode prime).
[[nodiscard]] inline OperatorKind parse_operator_kind(std::string_view text, int index) {
  std::string s;
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (text.substr(k, 3) == "\xE2\x80\xB2") {
      s.push_back('\'');
      k += 2;
    } else {
      s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(text[k]))));
    }
  }
  if (s != "F" && s != "F'" && s != "E" && s != "E'")
    throw ParseError("operator kind must be one of F, F', E, E' (got '" + std::string(text) + "')");
  if (index < 1) throw ParseError("operator index must be >= 1");
  return OperatorKind{s[0] == 'E', s.size() == 2, index};
}

/// A two-class operator on the {1,2} alphabet.
[[nodiscard]] inline std::optional<Word> apply_two_class(const Word& w, bool raising, bool primed) {
  if (primed) return raising ? e_prime(w) : f_prime(w);
  return raising ? e(w) : f(w);
}

/// Index-i operator on a word over any alphabet: acts on the {i, i+1}
/// letters, relabelled to {1, 2}, and splices the result back.
[[nodiscard]] inline std::optional<Word> apply(const Word& w, OperatorKind k) {
  if (k.index < 1) throw ContractViolation("operator index must be >= 1");
  const Restriction r = restrict_to(w, k.index);
  auto img = apply_two_class(r.word, k.raising, k.primed);
  if (!img) return std::nullopt;
  return splice(w, k.index, r, *img);
}

/// Index-i operator on a tableau: acts on its reading word.
[[nodiscard]] inline std::optional<Tableau> apply(const Tableau& t, OperatorKind k) {
  auto w = apply(t.reading_word(), k);
  if (!w) return std::nullopt;
  try {
    return apply_word(t, *w);
  } catch (const IntegrityError& err) {
    throw IntegrityError(to_string(k) + " broke semistandardness: " + err.what());
  }
}

}  // namespace shtab
