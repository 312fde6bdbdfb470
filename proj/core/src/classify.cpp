#include "numwalk/classify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace numwalk {

namespace {

void check_base_match(const DigitExpansion& d, const TurnMap& tm) {
  if (d.base() != tm.base) throw std::domain_error("expansion base does not match the turn map");
}

// Streams the walk of d, calling visit(state) after every step up to last.
template <typename F>
void stream_walk(const DigitExpansion& d, const TurnMap& tm, std::int64_t last, F&& visit) {
  WalkState s{};
  for (std::int64_t i = 1; i <= last; ++i) {
    s = step(s, d.digit_at(i), tm);
    visit(s);
  }
}

}  // namespace

PeriodIsometry word_isometry(const std::vector<Digit>& word, const TurnMap& tm) {
  WalkState s{};
  for (Digit z : word) s = step(s, z, tm);
  return {s.turn_sum, normalize_dir(s.turn_sum, tm.grid), s.position};
}

PeriodIsometry period_isometry(const DigitExpansion& d, const TurnMap& tm) {
  check_base_match(d, tm);
  return word_isometry(d.period(), tm);
}

ClassifiedWalk classify(const DigitExpansion& d, const TurnMap& tm) {
  check_base_match(d, tm);
  const int D = dir_count(tm.grid);
  const std::int64_t m = d.preperiod_length();
  const std::int64_t L = d.period_length();

  Classification c;
  c.preperiod_len = m;
  c.period_len = L;
  c.isometry = period_isometry(d, tm);
  c.torsion_rate = Rational(c.isometry.tau, D * L);

  const bool drifts = c.isometry.tau_mod == 0 && !(c.isometry.v == Point{});

  std::vector<WalkState> states;
  WalkState s{};
  states.push_back(s);
  for (std::int64_t i = 1; i <= m; ++i) {
    s = step(s, d.digit_at(i), tm);
    states.push_back(s);
  }
  const WalkState cycle_start = s;

  if (!drifts) {
    c.kind = WalkKind::Closed;
    c.multiplier = c.isometry.tau_mod == 0 ? 1 : D / std::gcd(c.isometry.tau_mod, D);
    c.cycle_length = c.multiplier * L;
    states.reserve(static_cast<std::size_t>(m + c.cycle_length) + 1);
    for (std::int64_t i = m + 1; i <= m + c.cycle_length; ++i) {
      s = step(s, d.digit_at(i), tm);
      states.push_back(s);
    }
    if (!same_pose(states.back(), cycle_start))
      throw std::logic_error("cycle verification failed");  // cannot happen

    std::unordered_set<Point, PointHash> cycle_points;
    for (std::int64_t i = m; i < m + c.cycle_length; ++i)
      cycle_points.insert(states[static_cast<std::size_t>(i)].position);
    c.distinct_points = static_cast<std::int64_t>(cycle_points.size());
    for (const auto& st : states)
      c.max_norm_sq = std::max(c.max_norm_sq, norm_sq(st.position, tm.grid));
  } else {
    c.kind = WalkKind::Drift;
    c.drift = rotate(c.isometry.v, cycle_start.direction, tm.grid);
    states.reserve(static_cast<std::size_t>(m + L) + 1);
    for (std::int64_t i = m + 1; i <= m + L; ++i) {
      s = step(s, d.digit_at(i), tm);
      states.push_back(s);
    }
    if (states.back().position - cycle_start.position != c.drift ||
        states.back().direction != cycle_start.direction)
      throw std::logic_error("drift verification failed");  // cannot happen
  }

  return {d, tm, std::move(c), std::move(states)};
}

ClassifiedWalk classify(const Rational& r, const TurnMap& tm) {
  return classify(expand(r, tm.base), tm);
}

KVerdict in_class_K(const ClassifiedWalk& w, const Rational& M) {
  if (M <= 0) throw std::domain_error("class radius M must be positive");
  const Rational m2 = M * M;
  const Grid g = w.turnmap.grid;
  auto reaches = [&](const Point& p) { return Rational(norm_sq(p, g)) >= m2; };

  if (w.c.kind == WalkKind::Closed) {
    if (Rational(w.c.max_norm_sq) < m2) return {true, std::nullopt};
    for (std::size_t i = 0; i < w.states.size(); ++i)
      if (reaches(w.states[i].position)) return {false, static_cast<std::int64_t>(i)};
    throw std::logic_error("escape bookkeeping failed");  // cannot happen
  }

  // Drift: after the preperiod the walk advances by the drift vector once
  // per period, so it must reach distance M within
  //   ceil((M + reach) / |drift|) + 1
  // periods, where reach bounds the distance of the cached window from the
  // start. The scan below finds the first escape inside that horizon.
  std::int64_t reach_sq = 0;
  for (const auto& st : w.states) reach_sq = std::max(reach_sq, norm_sq(st.position, g));
  const double bound = M.convert_to<double>() + std::sqrt(static_cast<double>(reach_sq));
  const double vlen = std::sqrt(static_cast<double>(norm_sq(w.c.drift, g)));
  const auto periods = static_cast<std::int64_t>(std::ceil(bound / vlen)) + 2;
  const std::int64_t last = w.c.preperiod_len + periods * w.c.period_len;

  std::optional<std::int64_t> hit;
  stream_walk(w.digits, w.turnmap, last, [&](const WalkState& st) {
    if (!hit && reaches(st.position)) hit = st.step_index;
  });
  if (!hit) throw std::logic_error("drift escape horizon too small");  // cannot happen
  return {false, hit};
}

SimplicityReport is_simple(const ClassifiedWalk& w) {
  const std::int64_t m = w.c.preperiod_len;
  const std::int64_t L = w.c.period_len;

  if (w.c.kind == WalkKind::Closed) {
    SimplicityReport rep;
    rep.cycle_points_recur = true;
    std::unordered_map<Point, std::int64_t, PointHash> first_seen;
    const std::int64_t last = m + w.c.cycle_length - 1;  // one traversal, closure excluded
    for (std::int64_t i = 0; i <= last; ++i) {
      const Point p = w.states[static_cast<std::size_t>(i)].position;
      auto [it, inserted] = first_seen.emplace(p, i);
      if (!inserted) {
        rep.simple = false;
        rep.repeat = {it->second, i};
        return rep;
      }
    }
    return rep;
  }

  // Drift. Window: preperiod points P_0..P_{m-1} and one period of tail
  // points Q_0..Q_{L-1} (Q_j at step m+j). Every later point is some
  // Q_j + t*drift with t >= 0, so any repeat shows up as a window
  // difference that is an integer multiple of the drift vector.
  const Point v = w.c.drift;
  auto multiple_of_v = [&](Point x) -> std::optional<std::int64_t> {
    if (v.a != 0) {
      if (x.a % v.a != 0) return std::nullopt;
      const std::int64_t t = x.a / v.a;
      if (t * v.b != x.b) return std::nullopt;
      return t;
    }
    if (x.a != 0 || x.b % v.b != 0) return std::nullopt;
    return x.b / v.b;
  };

  auto at = [&](std::int64_t i) { return w.states[static_cast<std::size_t>(i)].position; };
  std::vector<std::pair<std::int64_t, std::int64_t>> hits;

  for (std::int64_t i = 0; i < m; ++i)
    for (std::int64_t j = i + 1; j < m; ++j)
      if (at(i) == at(j)) hits.emplace_back(i, j);

  for (std::int64_t i = 0; i < m; ++i)
    for (std::int64_t j = 0; j < L; ++j)
      if (auto t = multiple_of_v(at(i) - at(m + j)); t && *t >= 0)
        hits.emplace_back(i, m + j + *t * L);

  for (std::int64_t j = 0; j < L; ++j)
    for (std::int64_t j2 = 0; j2 < L; ++j2) {
      if (j == j2) continue;
      const auto s = multiple_of_v(at(m + j) - at(m + j2));
      if (!s) continue;
      // Q_j + t*v == Q_j2 + (t+s)*v; shift both period counters to >= 0.
      const std::int64_t t = std::max<std::int64_t>(0, -*s);
      const std::int64_t i1 = m + t * L + j;
      const std::int64_t i2 = m + (t + *s) * L + j2;
      hits.emplace_back(std::min(i1, i2), std::max(i1, i2));
    }

  if (hits.empty()) return {};
  return {false, *std::min_element(hits.begin(), hits.end()), false};
}

Census visit_census(const ClassifiedWalk& w, std::int64_t window) {
  if (window < 0) throw std::domain_error("census window must be nonnegative");
  const std::int64_t m = w.c.preperiod_len;
  const std::int64_t L = w.c.period_len;

  std::unordered_map<Point, std::int64_t, PointHash> in_window;
  stream_walk(w.digits, w.turnmap, window, [&](const WalkState& st) { ++in_window[st.position]; });

  std::unordered_set<Point, PointHash> cycle_points;
  if (w.c.kind == WalkKind::Closed)
    for (std::int64_t i = m; i < m + w.c.cycle_length; ++i)
      cycle_points.insert(w.states[static_cast<std::size_t>(i)].position);

  auto eventual = [&](Point p) -> VisitCount {
    if (w.c.kind == WalkKind::Closed) {
      if (cycle_points.contains(p)) return {true, 0};
      std::int64_t n = 0;  // off-cycle points occur in the preperiod only
      for (std::int64_t i = 1; i < m; ++i)
        if (w.states[static_cast<std::size_t>(i)].position == p) ++n;
      return {false, n};
    }
    std::int64_t n = 0;
    for (std::int64_t i = 1; i < m; ++i)
      if (w.states[static_cast<std::size_t>(i)].position == p) ++n;
    const Point v = w.c.drift;
    for (std::int64_t j = 0; j < L; ++j) {
      const Point diff = p - w.states[static_cast<std::size_t>(m + j)].position;
      std::optional<std::int64_t> t;
      if (v.a != 0) {
        if (diff.a % v.a == 0 && (diff.a / v.a) * v.b == diff.b) t = diff.a / v.a;
      } else if (diff.a == 0 && diff.b % v.b == 0) {
        t = diff.b / v.b;
      }
      if (t && *t >= 0 && m + j + *t * L >= 1) ++n;
    }
    return {false, n};
  };

  Census census;
  census.entries.reserve(in_window.size());
  for (const auto& [p, n] : in_window) census.entries.push_back({p, n, eventual(p)});
  std::sort(census.entries.begin(), census.entries.end(), [](const CensusEntry& x, const CensusEntry& y) {
    return x.point.a != y.point.a ? x.point.a < y.point.a : x.point.b < y.point.b;
  });
  return census;
}

RecurrenceReport recurrence_stats(const ClassifiedWalk& w, const Rational& far_d,
                                  const Rational& near_d, std::int64_t horizon) {
  if (horizon < 0) throw std::domain_error("recurrence horizon must be nonnegative");
  const Rational far2 = far_d * far_d;
  const Rational near2 = near_d * near_d;
  const Grid g = w.turnmap.grid;

  RecurrenceReport rep;
  rep.horizon = horizon;
  std::optional<std::int64_t> far_hit;
  stream_walk(w.digits, w.turnmap, horizon, [&](const WalkState& st) {
    const std::int64_t nsq = norm_sq(st.position, g);
    rep.max_norm_sq_seen = std::max(rep.max_norm_sq_seen, nsq);
    if (!far_hit) {
      if (Rational(nsq) > far2) far_hit = st.step_index;
    } else if (!rep.witness && Rational(nsq) < near2) {
      rep.witness = {*far_hit, st.step_index};
    }
  });
  return rep;
}

}  // namespace numwalk
