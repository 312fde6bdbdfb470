#include "doctest.h"

#include <numeric>
#include <set>
#include <vector>

#include "helpers.hpp"
#include "numwalk/classify.hpp"
#include "numwalk/survey.hpp"

using namespace numwalk;

TEST_CASE("word isometry accumulates turn and displacement") {
  const TurnMap tm = TurnMap::standard(2);
  const PeriodIsometry w = word_isometry({1, 1, 0}, tm);
  CHECK(w.tau == -1);
  CHECK(w.tau_mod == 5);
  CHECK(w.v == Point{2, -3});
  const PeriodIsometry hexagon = word_isometry({0, 0, 0, 0, 0, 0}, tm);
  CHECK(hexagon.tau == 6);
  CHECK(hexagon.tau_mod == 0);
  CHECK(hexagon.v == Point{0, 0});
  const PeriodIsometry drift = period_isometry(expand(Rational(2, 3), 2), tm);
  CHECK(drift.tau == 0);
  CHECK(drift.v == Point{2, -1});
}

TEST_CASE("classification golden table") {
  const TurnMap b2 = TurnMap::standard(2);

  const ClassifiedWalk sixsevenths = classify(Rational(6, 7), b2);
  CHECK(sixsevenths.c.kind == WalkKind::Closed);
  CHECK(sixsevenths.c.preperiod_len == 0);
  CHECK(sixsevenths.c.period_len == 3);
  CHECK(sixsevenths.c.isometry.tau == -1);
  CHECK(sixsevenths.c.multiplier == 6);
  CHECK(sixsevenths.c.cycle_length == 18);
  CHECK(sixsevenths.c.distinct_points == 18);
  CHECK(sixsevenths.c.max_norm_sq == 28);
  CHECK(sixsevenths.c.torsion_rate == Rational(-1, 18));

  const ClassifiedWalk twothirds = classify(Rational(2, 3), b2);
  CHECK(twothirds.c.kind == WalkKind::Drift);
  CHECK(twothirds.c.isometry.tau == 0);
  CHECK(twothirds.c.drift == Point{2, -1});
  CHECK(twothirds.c.torsion_rate == Rational(0));

  const ClassifiedWalk fourfifths = classify(Rational(4, 5), b2);
  CHECK(fourfifths.c.kind == WalkKind::Drift);
  CHECK(fourfifths.c.period_len == 4);
  CHECK(fourfifths.c.drift == Point{3, -3});

  const ClassifiedWalk half = classify(Rational(1, 2), b2);
  CHECK(half.c.kind == WalkKind::Closed);
  CHECK(half.c.preperiod_len == 1);
  CHECK(half.c.period_len == 1);
  CHECK(half.c.multiplier == 6);
  CHECK(half.c.cycle_length == 6);
  CHECK(half.c.distinct_points == 6);
  CHECK(half.c.max_norm_sq == 4);

  const ClassifiedWalk zero = classify(Rational(0), b2);
  CHECK(zero.c.kind == WalkKind::Closed);
  CHECK(zero.c.cycle_length == 6);
  CHECK(zero.c.max_norm_sq == 4);
  CHECK(zero.c.torsion_rate == Rational(1, 6));

  const ClassifiedWalk third3 = classify(Rational(1, 3), TurnMap::standard(3));
  CHECK(third3.c.kind == WalkKind::Closed);
  CHECK(third3.c.multiplier == 4);
  CHECK(third3.c.cycle_length == 4);
  CHECK(third3.c.distinct_points == 4);
  CHECK(third3.c.max_norm_sq == 2);
  CHECK(third3.c.torsion_rate == Rational(1, 4));

  const ClassifiedWalk quarter3 = classify(Rational(1, 4), TurnMap::standard(3));
  CHECK(quarter3.c.kind == WalkKind::Drift);
  CHECK(quarter3.c.drift == Point{1, 1});

  const ClassifiedWalk twofifths5 = classify(Rational(2, 5), TurnMap::standard(5));
  CHECK(twofifths5.c.kind == WalkKind::Closed);
  CHECK(twofifths5.c.multiplier == 3);
  CHECK(twofifths5.c.cycle_length == 3);
  CHECK(twofifths5.c.max_norm_sq == 1);
  CHECK(twofifths5.c.torsion_rate == Rational(1, 3));
}

TEST_CASE("drifting tails repeat with the global displacement") {
  for (int base : {2, 3, 5}) {
    const TurnMap tm = TurnMap::standard(base);
    for (const Rational& r : survey_range(40)) {
      const ClassifiedWalk w = classify(r, tm);
      if (w.c.kind != WalkKind::Drift) continue;
      const std::int64_t m = w.c.preperiod_len;
      const std::int64_t L = w.c.period_len;
      const Path p = walk_prefix(w.digits, m + 6 * L, tm);
      for (std::int64_t i = m; i + L < static_cast<std::int64_t>(p.states.size()); ++i) {
        CHECK(p.states[i + L].position - p.states[i].position == w.c.drift);
        CHECK(p.states[i + L].direction == p.states[i].direction);
      }
    }
  }
}

TEST_CASE("closed walks cycle with the predicted multiplier and no sooner") {
  for (int base : {2, 3, 5}) {
    const TurnMap tm = TurnMap::standard(base);
    for (const Rational& r : survey_range(40)) {
      const ClassifiedWalk w = classify(r, tm);
      if (w.c.kind != WalkKind::Closed) continue;
      const std::int64_t m = w.c.preperiod_len;
      const std::int64_t L = w.c.period_len;
      const std::int64_t cycle = w.c.cycle_length;
      REQUIRE(cycle == w.c.multiplier * L);
      const Path p = walk_prefix(w.digits, m + 2 * cycle, tm);
      // first pose recurrence at a period boundary is exactly one cycle out
      std::int64_t first = 0;
      for (std::int64_t j = L; j <= 2 * cycle; j += L)
        if (same_pose(p.states[m + j], p.states[m])) {
          first = j;
          break;
        }
      CHECK(first == cycle);
      // and the whole cycle repeats pointwise
      for (std::int64_t i = m; i + cycle < static_cast<std::int64_t>(p.states.size()); ++i)
        CHECK(same_pose(p.states[i + cycle], p.states[i]));
    }
  }
}

TEST_CASE("distinct point and norm summaries match a direct scan") {
  for (const Rational& r : survey_range(30)) {
    const TurnMap tm = TurnMap::standard(2);
    const ClassifiedWalk w = classify(r, tm);
    if (w.c.kind != WalkKind::Closed) continue;
    const Path p = walk_prefix(w.digits, w.c.preperiod_len + w.c.cycle_length, tm);
    std::set<std::pair<std::int64_t, std::int64_t>> pts;
    std::int64_t max_n = 0;
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(p.states.size()); ++i) {
      max_n = std::max(max_n, norm_sq(p.states[i].position, tm.grid));
      if (i >= w.c.preperiod_len && i < w.c.preperiod_len + w.c.cycle_length)
        pts.emplace(p.states[i].position.a, p.states[i].position.b);
    }
    CHECK(static_cast<std::int64_t>(pts.size()) == w.c.distinct_points);
    CHECK(max_n == w.c.max_norm_sq);
  }
}

TEST_CASE("class membership compares the exact reach against M") {
  const TurnMap tm = TurnMap::standard(2);
  const ClassifiedWalk hexagon = classify(Rational(0), tm);
  CHECK(in_class_K(hexagon, Rational(5, 2)).member);      // 4 < 25/4
  CHECK(in_class_K(hexagon, Rational(3)).member);
  const KVerdict at_edge = in_class_K(hexagon, Rational(2));
  CHECK(!at_edge.member);                                  // the walk reaches distance 2 exactly
  REQUIRE(at_edge.escape_step.has_value());
  CHECK(*at_edge.escape_step == 3);                        // (-2,2) has norm 4

  const ClassifiedWalk drift = classify(Rational(2, 3), tm);
  const KVerdict out = in_class_K(drift, Rational(5));
  CHECK(!out.member);
  REQUIRE(out.escape_step.has_value());
  CHECK(*out.escape_step == 6);  // (6,-3) is the first point with norm >= 25
  CHECK(!in_class_K(drift, Rational(1000)).member);  // drift escapes every radius

  CHECK_THROWS_AS(in_class_K(hexagon, Rational(0)), std::domain_error);
  CHECK_THROWS_AS(in_class_K(hexagon, Rational(-1)), std::domain_error);
}

TEST_CASE("escape step is the first norm at or beyond M squared") {
  // dual route: rescan the simulated prefix independently
  const TurnMap tm = TurnMap::standard(2);
  for (const Rational& r : survey_range(20)) {
    const ClassifiedWalk w = classify(r, tm);
    const Rational m(7, 2);
    const KVerdict v = in_class_K(w, m);
    const Path p = walk_prefix(w.digits, w.c.preperiod_len + 40 * std::max<std::int64_t>(w.c.period_len, 1), tm);
    std::optional<std::int64_t> first;
    for (const auto& s : p.states)
      if (Rational(norm_sq(s.position, tm.grid)) >= m * m) {
        first = s.step_index;
        break;
      }
    if (v.member) {
      CHECK(!first.has_value());
    } else {
      REQUIRE(v.escape_step.has_value());
      REQUIRE(first.has_value());
      CHECK(*v.escape_step == *first);
    }
  }
}

TEST_CASE("simplicity verdicts") {
  const TurnMap tm = TurnMap::standard(2);

  const SimplicityReport hexagon = is_simple(classify(Rational(0), tm));
  CHECK(hexagon.simple);
  CHECK(hexagon.cycle_points_recur);

  const SimplicityReport sixsevenths = is_simple(classify(Rational(6, 7), tm));
  CHECK(sixsevenths.simple);

  const SimplicityReport quarter = is_simple(classify(Rational(1, 4), tm));
  CHECK(!quarter.simple);
  REQUIRE(quarter.repeat.has_value());
  CHECK(quarter.repeat->first == 1);
  CHECK(quarter.repeat->second == 7);

  const SimplicityReport drift_simple = is_simple(classify(Rational(2, 3), tm));
  CHECK(drift_simple.simple);
  CHECK(!drift_simple.cycle_points_recur);

  const SimplicityReport drift_repeat = is_simple(classify(Rational(49, 96), tm));
  CHECK(!drift_repeat.simple);
  REQUIRE(drift_repeat.repeat.has_value());
  CHECK(drift_repeat.repeat->first == 0);
  CHECK(drift_repeat.repeat->second == 6);
}

TEST_CASE("simplicity matches a long brute-force scan on drifting walks") {
  const TurnMap tm = TurnMap::standard(2);
  for (const Rational& r : survey_range(30)) {
    const ClassifiedWalk w = classify(r, tm);
    if (w.c.kind != WalkKind::Drift) continue;
    const SimplicityReport rep = is_simple(w);
    const Path p = walk_prefix(w.digits, w.c.preperiod_len + 60 * w.c.period_len, tm);
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    bool collision = false;
    for (const auto& s : p.states)
      if (!seen.emplace(s.position.a, s.position.b).second) collision = true;
    CHECK(rep.simple == !collision);
    if (rep.repeat) {
      CHECK(p.states[rep.repeat->first].position == p.states[rep.repeat->second].position);
      CHECK(rep.repeat->first < rep.repeat->second);
    }
  }
}

TEST_CASE("visit census separates transient from recurring points") {
  const TurnMap tm = TurnMap::standard(2);

  const Census hexagon = visit_census(classify(Rational(0), tm), 12);
  REQUIRE(hexagon.entries.size() == 6);
  for (const auto& e : hexagon.entries) {
    CHECK(e.eventual.infinite);
    CHECK(e.in_window == 2);  // two traversals in a 12-step window
  }
  CHECK(hexagon.origin_occupied_at_step0);

  const Census drift = visit_census(classify(Rational(2, 3), tm), 6);
  REQUIRE(drift.entries.size() == 6);
  for (const auto& e : drift.entries) {
    CHECK(!e.eventual.infinite);
    CHECK(e.eventual.count == 1);
    CHECK(e.in_window == 1);
  }

  // the drifting walk of 49/96 touches the origin once more at step 6
  const Census back = visit_census(classify(Rational(49, 96), tm), 8);
  bool found_origin = false;
  for (const auto& e : back.entries)
    if (e.point == Point{0, 0}) {
      found_origin = true;
      CHECK(!e.eventual.infinite);
      CHECK(e.eventual.count == 1);
    }
  CHECK(found_origin);
}

TEST_CASE("recurrence stats find far excursions that come back") {
  const TurnMap tm = TurnMap::standard(2);
  const RecurrenceReport r67 =
      recurrence_stats(classify(Rational(6, 7), tm), Rational(2), Rational(2), 36);
  REQUIRE(r67.witness.has_value());
  CHECK(r67.witness->first == 3);    // (2,-3) is the first point beyond distance 2
  CHECK(r67.witness->second == 16);  // (-2,1) comes back inside
  CHECK(r67.max_norm_sq_seen == 28);
  CHECK(r67.horizon == 36);

  const RecurrenceReport none =
      recurrence_stats(classify(Rational(1, 2), tm), Rational(3), Rational(1), 50);
  CHECK(!none.witness.has_value());
  CHECK(none.max_norm_sq_seen == 4);
}
