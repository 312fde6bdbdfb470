#include "numwalk/walk.hpp"

#include <stdexcept>

namespace numwalk {

TurnMap TurnMap::standard(int base, int sign) {
  if (sign != +1 && sign != -1) throw std::domain_error("turn sign must be +1 or -1");
  TurnMap tm;
  switch (base) {
    case 2:
      tm = {2, Grid::Hex, {+1, -1}};
      break;
    case 3:
      tm = {3, Grid::Square, {+1, 0, -1}};
      break;
    case 5:
      tm = {5, Grid::Hex, {+2, +1, 0, -1, -2}};
      break;
    default:
      throw std::domain_error("no standard turn map for base " + std::to_string(base));
  }
  if (sign < 0)
    for (auto& t : tm.turns) t = -t;
  return tm;
}

TurnMap TurnMap::custom(int base, Grid grid, std::vector<int> turns) {
  if (base < 2) throw std::domain_error("turn map base must be at least 2");
  if (static_cast<int>(turns.size()) != base) throw std::domain_error("turn map needs one turn per digit");
  const int d = dir_count(grid);
  for (int t : turns)
    if (2 * t <= -d || 2 * t > d) throw std::domain_error("turns must lie in (-D/2, D/2]");
  return {base, grid, std::move(turns)};
}

int TurnMap::turn_for(Digit z) const {
  if (z >= base) throw std::domain_error("digit " + std::to_string(int(z)) + " out of range for base " + std::to_string(base));
  return turns[z];
}

Path walk_prefix(DigitSource& source, std::int64_t n, const TurnMap& tm) {
  if (n < 0) throw std::domain_error("walk length must be nonnegative");
  if (source.base() != tm.base) throw std::domain_error("digit source base does not match the turn map");
  Path p{tm, {}};
  p.states.reserve(static_cast<std::size_t>(n) + 1);
  WalkState s{};
  p.states.push_back(s);
  for (std::int64_t i = 0; i < n; ++i) {
    const auto z = source.next();
    if (!z) throw std::runtime_error("digit source exhausted after " + std::to_string(i) + " of " + std::to_string(n) + " digits");
    s = step(s, *z, tm);
    p.states.push_back(s);
  }
  return p;
}

Path walk_prefix(const DigitExpansion& d, std::int64_t n, const TurnMap& tm) {
  ExpansionSource src(d);
  return walk_prefix(src, n, tm);
}

std::vector<Point> positions(const Path& p) {
  std::vector<Point> out;
  out.reserve(p.states.size());
  for (const auto& s : p.states) out.push_back(s.position);
  return out;
}

Rational torsion(const Path& p, std::int64_t i) {
  if (i < 0 || i >= static_cast<std::int64_t>(p.states.size()))
    throw std::out_of_range("torsion index outside the walked prefix");
  return Rational(p.states[static_cast<std::size_t>(i)].turn_sum, dir_count(p.grid()));
}

}  // namespace numwalk
