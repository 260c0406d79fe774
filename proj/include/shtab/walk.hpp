#pragma once

// First-quadrant lattice walk of a word over {1',1,2',2}.
//
// On the axes, 1 and 1' step East and 2 and 2' step North. In the interior
// 1 steps South, 1' East, 2 North and 2' West. The endpoint (x, y) gives the
// rectification shape (lambda_1, lambda_2) = ((n + x + y) / 2, (n - x - y) / 2)
// and the crystal statistics (phi, epsilon) = (x, y).

#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"
#include "tableau.hpp"
#include "word.hpp"

namespace shtab {

struct WalkPoint {
  int x = 0;
  int y = 0;
  friend constexpr bool operator==(WalkPoint, WalkPoint) = default;
};

inline std::string to_string(WalkPoint p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

enum class Direction { north, east, south, west };

[[nodiscard]] constexpr char direction_char(Direction d) noexcept {
  switch (d) {
    case Direction::north: return 'N';
    case Direction::east: return 'E';
    case Direction::south: return 'S';
    case Direction::west: return 'W';
  }
  return '?';
}

[[nodiscard]] constexpr WalkPoint advance(WalkPoint p, Direction d) noexcept {
  switch (d) {
    case Direction::north: return {p.x, p.y + 1};
    case Direction::east: return {p.x + 1, p.y};
    case Direction::south: return {p.x, p.y - 1};
    case Direction::west: return {p.x - 1, p.y};
  }
  return p;
}

/// Direction taken by letter `l` (class 1 or 2) from `p`.
[[nodiscard]] inline Direction step_direction(WalkPoint p, Letter l) {
  if (l.value != 1 && l.value != 2)
    throw ContractViolation("lattice walk letters must be of class 1 or 2");
  if (p.x < 0 || p.y < 0) throw ContractViolation("walk point outside the first quadrant");
  const bool on_axis = p.y == 0 || p.x == 0;
  if (l.value == 1) return on_axis || l.primed ? Direction::east : Direction::south;
  return on_axis || !l.primed ? Direction::north : Direction::west;
}

[[nodiscard]] inline WalkPoint walk_step(WalkPoint p, Letter l) {
  return advance(p, step_direction(p, l));
}

/// One step with its provenance: the letter, where it started and where it
/// went.
struct WalkStep {
  Letter letter;
  WalkPoint before;
  Direction direction;
};

struct Walk {
  std::vector<WalkPoint> points{WalkPoint{}};
  std::vector<WalkStep> steps;

  [[nodiscard]] WalkPoint end() const { return points.back(); }
};

[[nodiscard]] inline Walk walk(std::span<const Letter> s) {
  Walk out;
  out.points.reserve(s.size() + 1);
  out.steps.reserve(s.size());
  WalkPoint p;
  for (Letter l : s) {
    const Direction d = step_direction(p, l);
    out.steps.push_back({l, p, d});
    p = advance(p, d);
    if (p.x < 0 || p.y < 0) throw IntegrityError("lattice walk left the first quadrant");
    out.points.push_back(p);
  }
  return out;
}
[[nodiscard]] inline Walk walk(const Word& w) { return walk(w.letters()); }

[[nodiscard]] inline WalkPoint walk_endpoint(std::span<const Letter> s) {
  WalkPoint p;
  for (Letter l : s) p = walk_step(p, l);
  return p;
}
[[nodiscard]] inline WalkPoint walk_endpoint(const Word& w) { return walk_endpoint(w.letters()); }

/// Endpoint of the walk of the {i, i+1} restriction.
[[nodiscard]] inline WalkPoint walk_endpoint(const Word& w, int i) {
  WalkPoint p;
  for (Letter l : w)
    if (l.value == i || l.value == i + 1) p = walk_step(p, Letter{l.value - i + 1, l.primed});
  return p;
}

/// Shape of the rectification of a two-class word.
[[nodiscard]] inline StrictPartition rect_shape(const Word& w) {
  const WalkPoint e = walk_endpoint(w);
  const int n = static_cast<int>(w.size());
  return StrictPartition({(n + e.x + e.y) / 2, (n - e.x - e.y) / 2});
}

/// True iff every {i, i+1} walk, 1 <= i < n, ends on the x-axis.
[[nodiscard]] inline bool is_ballot(const Word& w, int n) {
  if (max_class(w.letters()) > n) throw ContractViolation("word uses a class above the bound");
  for (int i = 1; i < n; ++i)
    if (walk_endpoint(w, i).y != 0) return false;
  return true;
}

}  // namespace shtab
