#pragma once

// Shifted jeu de taquin.
//
// Slides run on the standardization: the hole repeatedly takes the smaller
// of its right and lower neighbours until it reaches an outer corner. A
// semistandard tableau is slid by standardizing, sliding, and
// destandardizing with the original weight.

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "errors.hpp"
#include "tableau.hpp"
#include "word.hpp"

namespace shtab {

/// Inner-shape cells a slide may start from.
[[nodiscard]] inline std::vector<Cell> inner_corners(const ShiftedShape& shape) {
  std::vector<Cell> out;
  const auto& mu = shape.inner();
  for (std::size_t r = 1; r <= mu.length(); ++r) {
    const Cell c{static_cast<int>(r), static_cast<int>(r) + mu.part(r) - 1};
    if (!shape.in_inner({c.row, c.col + 1}) && !shape.in_inner({c.row + 1, c.col})) out.push_back(c);
  }
  return out;
}
[[nodiscard]] inline std::vector<Cell> inner_corners(const Tableau& t) { return inner_corners(t.shape()); }

namespace detail {

[[nodiscard]] inline StrictPartition remove_last_in_row(const StrictPartition& p, int row) {
  std::vector<int> parts = p.parts();
  if (row < 1 || static_cast<std::size_t>(row) > parts.size())
    throw IntegrityError("removing a cell from a missing row");
  --parts[row - 1];
  return StrictPartition(std::move(parts));
}

/// A standard filling addressed by cell, for sliding.
class Grid {
 public:
  Grid(const ShiftedShape& shape, std::span<const int> values) : shape_(shape) {
    cols_ = 1;
    for (std::size_t r = 1; r <= shape.rows(); ++r)
      cols_ = std::max(cols_, static_cast<int>(r) + shape.outer().part(r));
    cells_.assign(static_cast<std::size_t>(shape.rows() + 2) * (cols_ + 2), 0);
    const auto order = shape.cells();
    for (std::size_t k = 0; k < order.size(); ++k) at(order[k]) = values[k];
  }

  int& at(Cell c) { return cells_[static_cast<std::size_t>(c.row) * (cols_ + 2) + c.col]; }

  /// Slides into `start`; returns the hole path and updates the shape.
  std::vector<Cell> slide(Cell start) {
    StrictPartition inner = remove_last_in_row(shape_.inner(), start.row);
    const ShiftedShape open(shape_.outer(), inner);
    std::vector<Cell> path{start};
    Cell hole = start;
    for (;;) {
      const Cell right{hole.row, hole.col + 1};
      const Cell below{hole.row + 1, hole.col};
      const bool has_right = open.contains(right);
      const bool has_below = open.contains(below);
      if (!has_right && !has_below) break;
      Cell next;
      if (has_right && has_below) next = at(right) < at(below) ? right : below;
      else next = has_right ? right : below;
      at(hole) = at(next);
      at(next) = 0;
      hole = next;
      path.push_back(hole);
    }
    if (hole.col != hole.row + shape_.outer().part(hole.row) - 1)
      throw IntegrityError("slide ended away from an outer corner");
    shape_ = ShiftedShape(remove_last_in_row(shape_.outer(), hole.row), std::move(inner));
    return path;
  }

  [[nodiscard]] const ShiftedShape& shape() const noexcept { return shape_; }

  [[nodiscard]] std::vector<int> reading_values() {
    std::vector<int> out;
    out.reserve(shape_.size());
    for (const Cell c : shape_.cells()) out.push_back(at(c));
    return out;
  }

 private:
  ShiftedShape shape_;
  int cols_ = 1;
  std::vector<int> cells_;
};

[[nodiscard]] inline Tableau unstandardize_into(const ShiftedShape& shape, std::span<const int> values,
                                                const Weight& wt) {
  auto w = destandardize(values, wt);
  if (!w) throw IntegrityError("slid standard tableau does not destandardize with weight");
  return Tableau(shape, *w);
}

inline void require_corner(const ShiftedShape& shape, Cell c) {
  for (const Cell k : inner_corners(shape))
    if (k == c) return;
  throw ContractViolation("cell " + to_string(c) + " is not an inner corner of " + to_string(shape));
}

}  // namespace detail

struct SlideTrace {
  Cell start;
  std::vector<Cell> path;  // hole positions, from start to the vacated outer corner
  Tableau result;
};

/// Slide of a standard tableau (entries are the values 1..n, stored as
/// unprimed letters of distinct classes).
[[nodiscard]] inline SlideTrace slide_standard(const Tableau& t, Cell corner) {
  detail::require_corner(t.shape(), corner);
  std::vector<int> values;
  values.reserve(t.size());
  for (Letter l : t.entries()) {
    if (l.primed) throw ContractViolation("standard tableau entries must be unprimed");
    values.push_back(l.value);
  }
  if (!is_permutation_word(values)) throw ContractViolation("tableau is not standard");
  detail::Grid g(t.shape(), values);
  auto path = g.slide(corner);
  Str out;
  for (int v : g.reading_values()) out.push_back(Letter{v, false});
  return {corner, std::move(path), Tableau(g.shape(), std::move(out))};
}

/// One slide of a semistandard tableau into an inner corner.
[[nodiscard]] inline Tableau slide(const Tableau& t, Cell corner) {
  detail::require_corner(t.shape(), corner);
  const StdWord s = standardize(t.entries());
  detail::Grid g(t.shape(), s);
  g.slide(corner);
  return detail::unstandardize_into(g.shape(), g.reading_values(), weight(t.entries()));
}

/// Rectification, choosing each slide's corner with `choose(corners)`.
template <typename Choose>
[[nodiscard]] Tableau rectify(const Tableau& t, Choose&& choose) {
  if (t.shape().is_straight()) return t;
  detail::Grid g(t.shape(), standardize(t.entries()));
  while (!g.shape().is_straight()) {
    const auto corners = inner_corners(g.shape());
    g.slide(choose(corners));
  }
  return detail::unstandardize_into(g.shape(), g.reading_values(), weight(t.entries()));
}

/// Rectification, always sliding into the lowest inner corner.
[[nodiscard]] inline Tableau rectify(const Tableau& t) {
  return rectify(t, [](const std::vector<Cell>& cs) { return cs.back(); });
}

/// Rectification with corners drawn uniformly by `rng`.
[[nodiscard]] inline Tableau rectify_random(const Tableau& t, std::mt19937_64& rng) {
  return rectify(t, [&](const std::vector<Cell>& cs) {
    std::uniform_int_distribution<std::size_t> pick(0, cs.size() - 1);
    return cs[pick(rng)];
  });
}

/// True iff row i of the rectification holds only unprimed i.
[[nodiscard]] inline bool is_littlewood_richardson(const Tableau& t) {
  const Tableau r = rectify(t);
  const auto rows = r.rows();
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (Letter l : rows[i])
      if (l != Letter{static_cast<int>(i) + 1, false}) return false;
  return true;
}

/// A skew shape with one cell per row, no two cells in a row or column, so
/// that every string of length m fills it semistandardly with that string as
/// its reading word.
[[nodiscard]] inline ShiftedShape antidiagonal_shape(std::size_t m) {
  std::vector<int> outer, inner;
  for (std::size_t r = 1; r <= m; ++r) {
    outer.push_back(static_cast<int>(2 * (m - r) + 2));
    inner.push_back(static_cast<int>(2 * (m - r) + 1));
  }
  return ShiftedShape(StrictPartition(std::move(outer)), StrictPartition(std::move(inner)));
}

/// The antidiagonal tableau whose reading word is `w`.
[[nodiscard]] inline Tableau realize(const Word& w) { return Tableau(antidiagonal_shape(w.size()), w); }

}  // namespace shtab
