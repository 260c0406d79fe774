#pragma once

// Strict partitions, shifted skew diagrams and semistandard fillings.
//
// Cells are (row, column), 1-based. Row r of a shifted diagram occupies
// columns r .. r + lambda_r - 1. Fillings are stored in reading order (rows
// bottom to top, each left to right), which is also the order of the reading
// word.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "word.hpp"

namespace shtab {

class StrictPartition {
 public:
  StrictPartition() = default;
  explicit StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t r = 0; r < parts_.size(); ++r) {
      if (parts_[r] <= 0) throw ContractViolation("strict partition parts must be positive");
      if (r > 0 && parts_[r] >= parts_[r - 1])
        throw ContractViolation("strict partition must be strictly decreasing");
    }
  }

  [[nodiscard]] const std::vector<int>& parts() const noexcept { return parts_; }
  [[nodiscard]] std::size_t length() const noexcept { return parts_.size(); }
  [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }
  /// lambda_r for 1-based r; zero past the last part.
  [[nodiscard]] int part(std::size_t r) const noexcept {
    return r >= 1 && r <= parts_.size() ? parts_[r - 1] : 0;
  }
  [[nodiscard]] int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  friend bool operator==(const StrictPartition&, const StrictPartition&) = default;
  friend auto operator<=>(const StrictPartition&, const StrictPartition&) = default;

 private:
  std::vector<int> parts_;
};

[[nodiscard]] inline bool is_strict_partition(std::span<const int> v) {
  std::size_t len = v.size();
  while (len > 0 && v[len - 1] == 0) --len;
  for (std::size_t r = 0; r < len; ++r) {
    if (v[r] <= 0) return false;
    if (r > 0 && v[r] >= v[r - 1]) return false;
  }
  return true;
}

/// All strict partitions of `total`, parts in decreasing order.
[[nodiscard]] inline std::vector<StrictPartition> strict_partitions(int total) {
  std::vector<StrictPartition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p - 1);
      cur.pop_back();
    }
  };
  rec(total, total);
  return out;
}

struct Cell {
  int row = 1;
  int col = 1;
  friend constexpr bool operator==(Cell, Cell) = default;
  friend constexpr auto operator<=>(Cell, Cell) = default;
};

inline std::string to_string(Cell c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

/// Skew shifted diagram outer/inner.
class ShiftedShape {
 public:
  ShiftedShape() = default;
  explicit ShiftedShape(StrictPartition outer, StrictPartition inner = {})
      : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (inner_.length() > outer_.length())
      throw ContractViolation("inner shape has more rows than the outer shape");
    for (std::size_t r = 1; r <= inner_.length(); ++r)
      if (inner_.part(r) > outer_.part(r))
        throw ContractViolation("inner shape is not contained in the outer shape");
    offsets_.assign(outer_.length() + 2, 0);
    for (std::size_t r = outer_.length(); r >= 1; --r)
      offsets_[r] = offsets_[r + 1] + row_length(r);
    // offsets_[r] now counts cells in rows >= r; shift so it counts rows > r.
    for (std::size_t r = 1; r <= outer_.length(); ++r) offsets_[r] -= row_length(r);
  }

  [[nodiscard]] const StrictPartition& outer() const noexcept { return outer_; }
  [[nodiscard]] const StrictPartition& inner() const noexcept { return inner_; }
  [[nodiscard]] bool is_straight() const noexcept { return inner_.empty(); }
  [[nodiscard]] std::size_t rows() const noexcept { return outer_.length(); }
  [[nodiscard]] std::size_t size() const noexcept {
    return static_cast<std::size_t>(outer_.size() - inner_.size());
  }

  /// Number of skew cells in row r.
  [[nodiscard]] int row_length(std::size_t r) const noexcept {
    return outer_.part(r) - inner_.part(r);
  }
  /// First skew column of row r.
  [[nodiscard]] int row_start(std::size_t r) const noexcept {
    return static_cast<int>(r) + inner_.part(r);
  }

  [[nodiscard]] bool in_outer(Cell c) const noexcept {
    if (c.row < 1 || static_cast<std::size_t>(c.row) > outer_.length()) return false;
    return c.col >= c.row && c.col <= c.row + outer_.part(c.row) - 1;
  }
  [[nodiscard]] bool in_inner(Cell c) const noexcept {
    if (c.row < 1 || static_cast<std::size_t>(c.row) > inner_.length()) return false;
    return c.col >= c.row && c.col <= c.row + inner_.part(c.row) - 1;
  }
  [[nodiscard]] bool contains(Cell c) const noexcept { return in_outer(c) && !in_inner(c); }

  /// Position of a skew cell in reading order.
  [[nodiscard]] std::optional<std::size_t> index_of(Cell c) const noexcept {
    if (!contains(c)) return std::nullopt;
    return offsets_[c.row] + static_cast<std::size_t>(c.col - row_start(c.row));
  }

  /// Skew cells in reading order: rows bottom to top, each left to right.
  [[nodiscard]] std::vector<Cell> cells() const {
    std::vector<Cell> out;
    out.reserve(size());
    for (std::size_t r = outer_.length(); r >= 1; --r)
      for (int c = row_start(r); c < static_cast<int>(r) + outer_.part(r); ++c)
        out.push_back(Cell{static_cast<int>(r), c});
    return out;
  }

  friend bool operator==(const ShiftedShape& a, const ShiftedShape& b) {
    return a.outer_ == b.outer_ && a.inner_ == b.inner_;
  }

 private:
  StrictPartition outer_;
  StrictPartition inner_;
  std::vector<std::size_t> offsets_{0, 0};
};

inline std::string to_string(const StrictPartition& p) {
  std::string out = "(";
  for (std::size_t r = 0; r < p.length(); ++r) {
    if (r) out += ",";
    out += std::to_string(p.parts()[r]);
  }
  return out + ")";
}

inline std::string to_string(const ShiftedShape& s) {
  if (s.is_straight()) return to_string(s.outer());
  return to_string(s.outer()) + "/" + to_string(s.inner());
}

/// "3,1" or "(3,1)" or "" -> strict partition.
[[nodiscard]] inline StrictPartition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    try {
      parts.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw ParseError("bad partition part '" + tok + "'");
    }
    tok.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ' ') {
      flush();
    } else if (ch == '(' || ch == ')' || ch == '[' || ch == ']') {
      continue;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      tok.push_back(ch);
    } else {
      throw ParseError("bad partition literal '" + std::string(text) + "'");
    }
  }
  flush();
  try {
    return StrictPartition(std::move(parts));
  } catch (const ContractViolation& e) {
    throw ParseError(e.what());
  }
}

// ---------------------------------------------------------------------------

struct Violation {
  enum class Kind { row_order, column_order, primed_repeat_in_row, unprimed_repeat_in_column };
  Kind kind;
  Cell first;
  Cell second;

  [[nodiscard]] std::string describe() const {
    switch (kind) {
      case Kind::row_order: return "row decreases at " + to_string(first) + "-" + to_string(second);
      case Kind::column_order:
        return "column decreases at " + to_string(first) + "-" + to_string(second);
      case Kind::primed_repeat_in_row:
        return "primed letter repeated in row at " + to_string(first) + "-" + to_string(second);
      case Kind::unprimed_repeat_in_column:
        return "unprimed letter repeated in column at " + to_string(first) + "-" +
               to_string(second);
    }
    return "unknown";
  }
};

/// Semistandardness violations of a filling given in reading order.
[[nodiscard]] inline std::vector<Violation> validate(const ShiftedShape& shape, std::span<const Letter> entries) {
  if (entries.size() != shape.size())
    throw ContractViolation("filling has " + std::to_string(entries.size()) + " letters for " +
                            std::to_string(shape.size()) + " cells");
  std::vector<Violation> out;
  for (const Cell c : shape.cells()) {
    const Letter a = entries[*shape.index_of(c)];
    if (auto right = shape.index_of({c.row, c.col + 1})) {
      const Letter b = entries[*right];
      if (b < a) out.push_back({Violation::Kind::row_order, c, {c.row, c.col + 1}});
      else if (a == b && a.primed)
        out.push_back({Violation::Kind::primed_repeat_in_row, c, {c.row, c.col + 1}});
    }
    if (auto below = shape.index_of({c.row + 1, c.col})) {
      const Letter b = entries[*below];
      if (b < a) out.push_back({Violation::Kind::column_order, c, {c.row + 1, c.col}});
      else if (a == b && !a.primed)
        out.push_back({Violation::Kind::unprimed_repeat_in_column, c, {c.row + 1, c.col}});
    }
  }
  return out;
}

/// Cell-keyed variant; the keys must be exactly the skew cells.
[[nodiscard]] inline std::vector<Violation> validate(const ShiftedShape& shape,
                                                     const std::map<Cell, Letter>& filling) {
  if (filling.size() != shape.size())
    throw ContractViolation("filling does not cover the shape");
  Str entries(shape.size());
  for (const auto& [cell, letter] : filling) {
    const auto idx = shape.index_of(cell);
    if (!idx) throw ContractViolation("cell " + to_string(cell) + " is not in the shape");
    entries[*idx] = letter;
  }
  return validate(shape, entries);
}

/// A semistandard filling in canonical form.
class Tableau {
 public:
  Tableau() = default;

  /// Letters in reading order. Throws IntegrityError when the filling is not
  /// semistandard.
  Tableau(ShiftedShape shape, Str entries) : shape_(std::move(shape)), entries_(std::move(entries)) {
    const auto bad = validate(shape_, entries_);
    if (!bad.empty())
      throw IntegrityError("not semistandard: " + bad.front().describe() + " in " +
                           to_string(shape_) + " filled with " + shtab::to_string(entries_));
    entries_ = canonicalize(std::move(entries_));
  }
  Tableau(ShiftedShape shape, const Word& w) : Tableau(std::move(shape), w.letters()) {}

  [[nodiscard]] const ShiftedShape& shape() const noexcept { return shape_; }
  [[nodiscard]] const Str& entries() const noexcept { return entries_; }
  [[nodiscard]] Word reading_word() const { return Word(entries_); }
  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }

  [[nodiscard]] std::optional<Letter> at(Cell c) const {
    if (auto idx = shape_.index_of(c)) return entries_[*idx];
    return std::nullopt;
  }

  /// Rows top to bottom, skew cells left to right.
  [[nodiscard]] std::vector<Str> rows() const {
    std::vector<Str> out(shape_.rows());
    for (std::size_t r = 1; r <= shape_.rows(); ++r)
      for (int c = shape_.row_start(r); c < static_cast<int>(r) + shape_.outer().part(r); ++c)
        out[r - 1].push_back(*at({static_cast<int>(r), c}));
    return out;
  }

  friend bool operator==(const Tableau& a, const Tableau& b) {
    return a.shape_ == b.shape_ && a.entries_ == b.entries_;
  }

 private:
  ShiftedShape shape_;
  Str entries_;
};

[[nodiscard]] inline Word reading_word(const Tableau& t) { return t.reading_word(); }

/// Places `s` into the cells of `t`'s shape in reading order.
[[nodiscard]] inline Tableau apply_word(const Tableau& t, const Str& s) {
  if (s.size() != t.size()) throw ContractViolation("apply_word: length mismatch");
  return Tableau(t.shape(), s);
}
[[nodiscard]] inline Tableau apply_word(const Tableau& t, const Word& w) {
  return apply_word(t, w.letters());
}

/// Shapes lambda/mu with |lambda| <= max_outer and 1 <= |lambda/mu| <= max_cells,
/// ordered by |lambda|, then lambda, then mu. Straight shapes have mu empty.
[[nodiscard]] inline std::vector<ShiftedShape> shifted_shapes(int max_outer, int max_cells,
                                                              bool include_straight = true) {
  std::vector<ShiftedShape> out;
  std::vector<StrictPartition> smaller{StrictPartition()};
  for (int t = 1; t <= max_outer; ++t) {
    for (const StrictPartition& lam : strict_partitions(t))
      for (const StrictPartition& mu : smaller) {
        if (t - mu.size() > max_cells || (mu.empty() && !include_straight)) continue;
        bool fits = mu.length() <= lam.length();
        for (std::size_t r = 1; fits && r <= mu.length(); ++r) fits = mu.part(r) <= lam.part(r);
        if (fits) out.emplace_back(lam, mu);
      }
    for (StrictPartition& p : strict_partitions(t)) smaller.push_back(std::move(p));
  }
  return out;
}

/// Calls `visit(const Str&)` on every canonical semistandard filling with
/// entries <= n, in lexicographic order of reading words. `visit` may return
/// false to stop early.
template <typename Visit>
void for_each_filling(const ShiftedShape& shape, int n, Visit&& visit) {
  if (n < 1) throw ContractViolation("alphabet bound must be >= 1");
  const auto cells = shape.cells();
  const std::size_t m = cells.size();
  // Neighbours already filled when a cell is reached: left and below.
  std::vector<std::optional<std::size_t>> left(m), below(m);
  for (std::size_t k = 0; k < m; ++k) {
    left[k] = shape.index_of({cells[k].row, cells[k].col - 1});
    below[k] = shape.index_of({cells[k].row + 1, cells[k].col});
  }
  Str cur(m);
  std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (stop) return;
    if (k == m) {
      if constexpr (std::is_same_v<std::invoke_result_t<Visit, const Str&>, bool>) {
        if (!visit(std::as_const(cur))) stop = true;
      } else {
        visit(std::as_const(cur));
      }
      return;
    }
    int lo = 1;
    int hi = 2 * n;
    if (left[k]) {
      const Letter l = cur[*left[k]];
      lo = std::max(lo, l.primed ? l.rank() + 1 : l.rank());
    }
    if (below[k]) {
      const Letter b = cur[*below[k]];
      hi = std::min(hi, b.primed ? b.rank() : b.rank() - 1);
    }
    for (int r = lo; r <= hi && !stop; ++r) {
      const Letter l = letter_from_rank(r);
      if (l.primed && seen[l.value] == 0) continue;
      cur[k] = l;
      ++seen[l.value];
      rec(k + 1);
      --seen[l.value];
    }
  };
  rec(0);
}

[[nodiscard]] inline std::vector<Tableau> enumerate(const ShiftedShape& shape, int n) {
  std::vector<Tableau> out;
  for_each_filling(shape, n, [&](const Str& s) { out.emplace_back(shape, s); });
  return out;
}

}  // namespace shtab
