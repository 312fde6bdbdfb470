#pragma once

#include <cstdint>
#include <vector>

#include "numwalk/digits.hpp"
#include "numwalk/lattice.hpp"
#include "numwalk/rational.hpp"

namespace numwalk {

/// Maps each digit of a base to a signed turn, measured in grid rotation
/// steps. Turns lie in (-D/2, D/2] so every turn has a unique reading.
struct TurnMap {
  int base = 2;
  Grid grid = Grid::Hex;
  std::vector<int> turns;

  /// The built-in assignments: base 2 on hex {+1,-1}, base 3 on square
  /// {+1,0,-1}, base 5 on hex {+2,+1,0,-1,-2}. sign=-1 swaps left and right.
  static TurnMap standard(int base, int sign = +1);
  static TurnMap custom(int base, Grid grid, std::vector<int> turns);

  int turn_for(Digit z) const;
};

struct WalkState {
  Point position{};
  int direction = 0;
  std::int64_t step_index = 0;
  std::int64_t turn_sum = 0;  // running signed turn count R
};

inline bool same_pose(const WalkState& s, const WalkState& t) {
  return s.position == t.position && s.direction == t.direction;
}

/// One walk step: turn by the digit's angle first, then move one unit in the
/// new direction.
inline WalkState step(const WalkState& s, Digit z, const TurnMap& tm) {
  const int t = tm.turn_for(z);
  WalkState n;
  n.direction = normalize_dir(s.direction + t, tm.grid);
  n.position = s.position + unit_vector(n.direction, tm.grid);
  n.step_index = s.step_index + 1;
  n.turn_sum = s.turn_sum + t;
  return n;
}

/// A walk prefix; states[i] is the state after consuming i digits, so
/// states[0] is the start pose (origin, direction 0).
struct Path {
  TurnMap turnmap;
  std::vector<WalkState> states;

  Grid grid() const { return turnmap.grid; }
  std::int64_t steps() const { return static_cast<std::int64_t>(states.size()) - 1; }
};

/// Folds n digits from the source; throws std::runtime_error if the source
/// runs out before n digits were read.
Path walk_prefix(DigitSource& source, std::int64_t n, const TurnMap& tm);
Path walk_prefix(const DigitExpansion& d, std::int64_t n, const TurnMap& tm);

std::vector<Point> positions(const Path& p);

/// Net rotation after i steps in full turns: turn_sum / D. The hex grid
/// divides by 6, the square grid by 4.
Rational torsion(const Path& p, std::int64_t i);

}  // namespace numwalk
