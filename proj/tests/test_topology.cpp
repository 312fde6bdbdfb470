#include "doctest.h"

#include <cmath>
#include <vector>

#include "helpers.hpp"
#include "numwalk/classify.hpp"
#include "numwalk/survey.hpp"
#include "numwalk/topology.hpp"

using namespace numwalk;

TEST_CASE("winding of the counterclockwise hexagon around its center") {
  const TurnMap tm = TurnMap::standard(2);
  const Path p = walk_prefix(expand(Rational(0), 2), 6, tm);
  const std::vector<std::int64_t> profile = winding_profile(p, Point{-1, 1});
  CHECK(profile == std::vector<std::int64_t>{0, 0, 1, 1, 1, 1, 1});
  CHECK(winding(p, 6, Point{-1, 1}) == 1);
}

TEST_CASE("winding is negative for the clockwise hexagon") {
  const TurnMap tm = TurnMap::standard(2);
  // 1/2 walks one step then loops counterclockwise; its mirror runs clockwise
  const Path p = walk_prefix(expand(Rational(1, 2), 2), 7, TurnMap::standard(2, -1));
  // mirrored loop encloses the mirror of (1,0)
  const std::int64_t w = winding(p, 7, mirror(Point{1, 0}, tm.grid));
  CHECK(w == -1);
  const Path q = walk_prefix(expand(Rational(1, 2), 2), 7, tm);
  CHECK(winding(q, 7, Point{1, 0}) == 1);
}

TEST_CASE("hand-built square loop and the half-open ray rule") {
  const std::vector<Point> square = {{0, 0}, {2, 0}, {2, 2}, {0, 2}, {0, 0}};
  CHECK(winding(square, Point{1, 1}, Grid::Square) == 1);
  CHECK(winding(square, Point{3, 1}, Grid::Square) == 0);
  CHECK(winding(square, Point{-1, 1}, Grid::Square) == 0);
  // a center on the boundary resolves deterministically via the half-open rule
  CHECK(winding(square, Point{1, 0}, Grid::Square) == 1);
  const std::vector<Point> reversed(square.rbegin(), square.rend());
  CHECK(winding(reversed, Point{1, 1}, Grid::Square) == -1);
}

TEST_CASE("profiles start at zero and end at the total") {
  const TurnMap tm = TurnMap::standard(2);
  const Path p = walk_prefix(expand(Rational(6, 7), 2), 18, tm);
  const auto profile = winding_profile(p, Point{-1, -2});
  REQUIRE(profile.size() == 19);
  CHECK(profile[0] == 0);
  CHECK(profile.back() == winding(p, 18, Point{-1, -2}));
  CHECK(profile.back() == -1);  // the 18-step loop runs clockwise
}

TEST_CASE("exact winding matches the angle accumulation oracle") {
  nwtest::Rng rng(0x817d1e9);
  const TurnMap tm = TurnMap::standard(2);
  int loops = 0;
  for (const Rational& r : survey_range(60)) {
    const ClassifiedWalk w = classify(r, tm);
    if (w.c.kind != WalkKind::Closed) continue;
    const Path p = walk_prefix(w.digits, w.c.preperiod_len + w.c.cycle_length, tm);
    const auto pts = positions(p);
    const std::vector<Point> loop(pts.begin() + w.c.preperiod_len, pts.end());
    for (int c = 0; c < 3; ++c) {
      const Point center{static_cast<std::int64_t>(rng.below(17)) - 8,
                         static_cast<std::int64_t>(rng.below(17)) - 8};
      bool on_loop = false;
      for (const Point& pt : loop) on_loop = on_loop || pt == center;
      if (on_loop) continue;
      const std::int64_t exact = winding(loop, center, tm.grid);
      const double angle = winding_angle_sum(loop, center, tm.grid);
      CHECK(exact == std::llround(angle));
      CHECK(std::abs(angle - std::llround(angle)) < 1e-6);
    }
    if (++loops >= 40) break;
  }
  CHECK(loops == 40);
}

TEST_CASE("reversing a loop negates its winding") {
  const TurnMap tm = TurnMap::standard(2);
  const Path p = walk_prefix(expand(Rational(6, 7), 2), 18, tm);
  const auto pts = positions(p);
  const std::vector<Point> rev(pts.rbegin(), pts.rend());
  for (const Point center : {Point{-1, -2}, Point{1, -3}, Point{5, 5}})
    CHECK(winding(pts, center, tm.grid) == -winding(rev, center, tm.grid));
}

TEST_CASE("segments touching the center are skipped, keeping the count stable") {
  const TurnMap tm = TurnMap::standard(2);
  const Path p = walk_prefix(expand(Rational(0), 2), 6, tm);
  // the center sits on the loop; the two incident segments do not contribute,
  // so the count comes from the remaining four alone
  CHECK(winding(p, 6, Point{0, 1}) == 0);   // every other segment lies left of the ray
  CHECK(winding(p, 6, Point{-2, 1}) == 1);  // the far side still crosses once
}

TEST_CASE("winding bounds checking") {
  const TurnMap tm = TurnMap::standard(2);
  const Path p = walk_prefix(expand(Rational(0), 2), 6, tm);
  CHECK_THROWS_AS(winding(p, 7, Point{0, 0}), std::out_of_range);
  CHECK(winding(p, 0, Point{-1, 1}) == 0);
}
