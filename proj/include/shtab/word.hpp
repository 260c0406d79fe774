#pragma once

// Letters of the primed alphabet 1' < 1 < 2' < 2 < ..., strings over it, and
// words (equivalence classes of strings in which the first letter of each
// class may carry either prime).

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace shtab {

struct Letter {
  int value = 1;  // class, >= 1
  bool primed = false;

  /// Position in the total order 1' < 1 < 2' < 2 < ...
  [[nodiscard]] constexpr int rank() const noexcept {
    return 2 * value - (primed ? 1 : 0);
  }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr std::strong_ordering operator<=>(Letter a, Letter b) noexcept {
    return a.rank() <=> b.rank();
  }
};

[[nodiscard]] constexpr Letter letter_from_rank(int rank) noexcept {
  return Letter{(rank + 1) / 2, rank % 2 == 1};
}

using Str = std::vector<Letter>;
using Weight = std::vector<int>;
/// A permutation of 1..n in one-line notation.
using StdWord = std::vector<int>;

[[nodiscard]] inline int max_class(std::span<const Letter> s) noexcept {
  int m = 0;
  for (Letter l : s) m = std::max(m, l.value);
  return m;
}

/// The representative whose first occurrence of every class is unprimed.
[[nodiscard]] inline Str canonicalize(Str s) {
  std::vector<bool> seen(static_cast<std::size_t>(max_class(s)) + 1, false);
  for (Letter& l : s) {
    if (l.value < 1) throw ContractViolation("letter class must be positive");
    if (!seen[l.value]) {
      seen[l.value] = true;
      l.primed = false;
    }
  }
  return s;
}

[[nodiscard]] inline bool is_canonical(std::span<const Letter> s) {
  std::vector<bool> seen(static_cast<std::size_t>(max_class(s)) + 1, false);
  for (Letter l : s) {
    if (!seen[l.value]) {
      if (l.primed) return false;
      seen[l.value] = true;
    }
  }
  return true;
}

[[nodiscard]] inline bool equivalent(const Str& a, const Str& b) {
  return canonicalize(a) == canonicalize(b);
}

/// Calls `visit(const Str&)` on every canonical string of length `len` over
/// classes 1..n, in increasing lexicographic order of letters.
template <typename Visit>
void for_each_canonical_word(std::size_t len, int n, Visit&& visit) {
  if (n < 1) throw ContractViolation("alphabet bound must be >= 1");
  Str cur(len);
  std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
  auto rec = [&](auto& self, std::size_t k) -> void {
    if (k == len) {
      visit(std::as_const(cur));
      return;
    }
    for (int r = 1; r <= 2 * n; ++r) {
      const Letter l = letter_from_rank(r);
      if (l.primed && seen[l.value] == 0) continue;
      cur[k] = l;
      ++seen[l.value];
      self(self, k + 1);
      --seen[l.value];
    }
  };
  rec(rec, 0);
}

/// Equivalence class of strings, stored as its canonical representative.
class Word {
 public:
  Word() = default;
  explicit Word(Str s) : letters_(canonicalize(std::move(s))) {}

  [[nodiscard]] const Str& letters() const noexcept { return letters_; }
  [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
  [[nodiscard]] bool empty() const noexcept { return letters_.empty(); }
  [[nodiscard]] Letter operator[](std::size_t k) const { return letters_[k]; }
  [[nodiscard]] auto begin() const noexcept { return letters_.begin(); }
  [[nodiscard]] auto end() const noexcept { return letters_.end(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                  b.letters_.begin(), b.letters_.end());
  }

 private:
  Str letters_;
};

/// Positions (0-based) of the first occurrence of each class, in order of
/// position.
[[nodiscard]] inline std::vector<std::size_t> first_occurrences(std::span<const Letter> s) {
  std::vector<bool> seen(static_cast<std::size_t>(max_class(s)) + 1, false);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (!seen[s[k].value]) {
      seen[s[k].value] = true;
      out.push_back(k);
    }
  }
  return out;
}

/// Every string equivalent to `w`: 2^(number of classes) of them.
[[nodiscard]] inline std::vector<Str> representatives(const Word& w) {
  const auto firsts = first_occurrences(w.letters());
  std::vector<Str> out;
  out.reserve(std::size_t{1} << firsts.size());
  for (std::size_t mask = 0; mask < (std::size_t{1} << firsts.size()); ++mask) {
    Str s = w.letters();
    for (std::size_t b = 0; b < firsts.size(); ++b)
      if (mask & (std::size_t{1} << b)) s[firsts[b]].primed = true;
    out.push_back(std::move(s));
  }
  return out;
}

/// Prime-insensitive letter counts; trailing classes that never occur are
/// not represented.
[[nodiscard]] inline Weight weight(std::span<const Letter> s) {
  Weight wt(static_cast<std::size_t>(max_class(s)), 0);
  for (Letter l : s) ++wt[l.value - 1];
  return wt;
}
[[nodiscard]] inline Weight weight(const Word& w) { return weight(w.letters()); }

/// Pads or trims trailing zeros so weights of different lengths compare.
[[nodiscard]] inline Weight resized(Weight wt, std::size_t n) {
  wt.resize(std::max(n, wt.size()), 0);
  while (wt.size() > n && wt.back() == 0) wt.pop_back();
  return wt;
}

/// Relabels positions by 1..n: classes in increasing order; within a class
/// primed letters first, right to left, then unprimed letters left to right.
[[nodiscard]] inline StdWord standardize(std::span<const Letter> s) {
  std::vector<std::size_t> order(s.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto key = [&](std::size_t k) {
    const long pos = static_cast<long>(k);
    return std::tuple(s[k].value, s[k].primed ? 0 : 1, s[k].primed ? -pos : pos);
  };
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
  StdWord out(s.size());
  for (std::size_t v = 0; v < order.size(); ++v) out[order[v]] = static_cast<int>(v) + 1;
  return out;
}
[[nodiscard]] inline StdWord standardize(const Word& w) { return standardize(w.letters()); }

[[nodiscard]] inline bool is_permutation_word(std::span<const int> s) {
  std::vector<bool> hit(s.size() + 1, false);
  for (int v : s) {
    if (v < 1 || static_cast<std::size_t>(v) > s.size() || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

/// The unique word with the given standardization and weight, if any.
///
/// For each class the positions carrying its standardization values, read
/// in value order, must fall first strictly right to left (the primed
/// letters) and then strictly left to right (the unprimed ones). The split
/// point is ambiguous only at the leftmost position of the class, which is
/// its first occurrence, so every valid split gives the same word; the
/// smallest valid split is used.
[[nodiscard]] inline std::optional<Word> destandardize(std::span<const int> perm,
                                                       std::span<const int> wt) {
  if (!is_permutation_word(perm))
    throw ContractViolation("destandardize: input is not a permutation");
  long total = 0;
  for (int c : wt) {
    if (c < 0) return std::nullopt;
    total += c;
  }
  if (total != static_cast<long>(perm.size()))
    throw ContractViolation("destandardize: weight does not sum to the word length");

  std::vector<std::size_t> pos_of(perm.size() + 1);
  for (std::size_t k = 0; k < perm.size(); ++k) pos_of[perm[k]] = k;

  Str out(perm.size());
  std::size_t lo = 1;
  for (std::size_t cls = 0; cls < wt.size(); ++cls) {
    const std::size_t m = static_cast<std::size_t>(wt[cls]);
    std::span<const std::size_t> p(pos_of.data() + lo, m);
    // longest strictly decreasing prefix, longest strictly increasing suffix
    std::size_t dec_len = m == 0 ? 0 : 1;
    while (dec_len < m && p[dec_len] < p[dec_len - 1]) ++dec_len;
    std::size_t inc_from = m == 0 ? 0 : m - 1;
    while (inc_from > 0 && p[inc_from - 1] < p[inc_from]) --inc_from;
    // valid splits k: inc_from <= k <= dec_len
    if (inc_from > dec_len) return std::nullopt;
    const std::size_t split = inc_from;
    if (split + 1 <= dec_len) {
      // A second valid split primes one more letter; it must be the leftmost.
      const std::size_t extra = p[split];
      if (extra != *std::min_element(p.begin(), p.end()))
        throw IntegrityError("destandardize: inequivalent splits");
    }
    for (std::size_t k = 0; k < m; ++k)
      out[p[k]] = Letter{static_cast<int>(cls) + 1, k < split};
    lo += m;
  }
  return Word(std::move(out));
}

/// Subword of classes i and i+1, relabelled to 1 and 2, with the 0-based
/// positions the letters came from.
struct Restriction {
  Word word;
  std::vector<std::size_t> positions;
};

[[nodiscard]] inline Restriction restrict_to(const Word& w, int i) {
  if (i < 1) throw ContractViolation("restrict: index must be >= 1");
  Str sub;
  std::vector<std::size_t> pos;
  for (std::size_t k = 0; k < w.size(); ++k) {
    const Letter l = w[k];
    if (l.value == i || l.value == i + 1) {
      sub.push_back(Letter{l.value - i + 1, l.primed});
      pos.push_back(k);
    }
  }
  return {Word(std::move(sub)), std::move(pos)};
}

/// Writes a two-class word back over the positions it was restricted from.
[[nodiscard]] inline Word splice(const Word& w, int i, const Restriction& r, const Word& image) {
  if (image.size() != r.positions.size())
    throw ContractViolation("splice: image length differs from the restriction");
  Str out = w.letters();
  for (std::size_t k = 0; k < image.size(); ++k)
    out[r.positions[k]] = Letter{image[k].value + i - 1, image[k].primed};
  return Word(std::move(out));
}

// ---------------------------------------------------------------------------
// Text form: "1221'1'" (one digit per letter) or "1,2',11'" (comma form,
// required once some class exceeds 9). The Unicode prime U+2032 is accepted
// in place of the apostrophe.

[[nodiscard]] inline Str parse_str(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (text.substr(k, 3) == "\xE2\x80\xB2") {
      s.push_back('\'');
      k += 2;
    } else if (text[k] != ' ') {
      s.push_back(text[k]);
    }
  }
  Str out;
  const bool comma_form = s.find(',') != std::string::npos;
  std::size_t k = 0;
  while (k < s.size()) {
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw ParseError("bad word literal '" + std::string(text) + "'");
    int value = 0;
    if (comma_form) {
      while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k])))
        value = value * 10 + (s[k++] - '0');
    } else {
      value = s[k++] - '0';
    }
    if (value < 1) throw ParseError("letter class must be positive in '" + std::string(text) + "'");
    bool primed = false;
    if (k < s.size() && s[k] == '\'') {
      primed = true;
      ++k;
    }
    out.push_back(Letter{value, primed});
    if (comma_form && k < s.size()) {
      if (s[k] != ',') throw ParseError("bad word literal '" + std::string(text) + "'");
      ++k;
      if (k == s.size()) throw ParseError("trailing comma in '" + std::string(text) + "'");
    }
  }
  return out;
}

[[nodiscard]] inline Word parse_word(std::string_view text) { return Word(parse_str(text)); }

[[nodiscard]] inline std::string to_string(Letter l) {
  return std::to_string(l.value) + (l.primed ? "'" : "");
}

[[nodiscard]] inline std::string to_string(std::span<const Letter> s) {
  const bool compact = max_class(s) <= 9;
  std::string out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (!compact && k > 0) out += ',';
    out += to_string(s[k]);
  }
  return out;
}
[[nodiscard]] inline std::string to_string(const Word& w) { return to_string(w.letters()); }

inline std::ostream& operator<<(std::ostream& os, const Word& w) { return os << to_string(w); }

}  // namespace shtab
