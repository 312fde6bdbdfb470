#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "numwalk/digits.hpp"
#include "numwalk/walk.hpp"

namespace numwalk {

/// Net effect of walking one digit word from the start pose: total signed
/// turn tau, its residue mod D, and the displacement v in the frame where
/// the word starts with direction 0.
struct PeriodIsometry {
  std::int64_t tau = 0;
  int tau_mod = 0;
  Point v{};
};

PeriodIsometry word_isometry(const std::vector<Digit>& word, const TurnMap& tm);
PeriodIsometry period_isometry(const DigitExpansion& d, const TurnMap& tm);

enum class WalkKind : std::uint8_t { Closed, Drift };

constexpr std::string_view kind_name(WalkKind k) { return k == WalkKind::Closed ? "Closed" : "Drift"; }

struct Classification {
  WalkKind kind = WalkKind::Closed;
  std::int64_t preperiod_len = 0;
  std::int64_t period_len = 0;
  PeriodIsometry isometry;
  Rational torsion_rate;  // tau / (D * period_len)

  // Closed only: the walk settles on a cycle of multiplier * period_len
  // steps. max_norm_sq covers the preperiod plus one full cycle.
  int multiplier = 0;
  std::int64_t cycle_length = 0;
  std::int64_t distinct_points = 0;
  std::int64_t max_norm_sq = 0;

  // Drift only: per-period displacement in the global frame.
  Point drift{};
};

/// Classification bundled with the simulated prefix it was verified on:
/// preperiod plus one cycle (Closed) or one period (Drift).
struct ClassifiedWalk {
  DigitExpansion digits;
  TurnMap turnmap;
  Classification c;
  std::vector<WalkState> states;
};

/// Decides Closed versus Drift from the period isometry: tau_mod == 0 with
/// v != 0 drifts, everything else closes with multiplier D/gcd(tau_mod, D)
/// (or 1 when tau_mod == 0 and v == 0). The cycle is verified by simulation.
ClassifiedWalk classify(const DigitExpansion& d, const TurnMap& tm);
ClassifiedWalk classify(const Rational& r, const TurnMap& tm);

/// Membership in the class of walks staying strictly inside radius M around
/// the start. For Drift walks the verdict is always negative and comes with
/// the first step index whose distance reaches M, found inside a horizon
/// that provably contains one.
struct KVerdict {
  bool member = false;
  std::optional<std::int64_t> escape_step;
};

KVerdict in_class_K(const ClassifiedWalk& w, const Rational& M);

/// Self-avoidance. Closed walks are checked over the preperiod plus one
/// cycle traversal (cycle points recur forever; that alone does not count).
/// Drift walks reduce to a finite translate check: a repeat exists iff two
/// window points differ by an integer multiple of the drift vector.
struct SimplicityReport {
  bool simple = true;
  std::optional<std::pair<std::int64_t, std::int64_t>> repeat;  // two step indices, first < second
  bool cycle_points_recur = false;
};

SimplicityReport is_simple(const ClassifiedWalk& w);

/// Visit multiplicity per lattice point. Counting starts at step 1; the
/// start occupancy of the origin at step 0 is reported separately.
struct VisitCount {
  bool infinite = false;
  std::int64_t count = 0;  // exact total when finite
};

struct CensusEntry {
  Point point{};
  std::int64_t in_window = 0;
  VisitCount eventual;
};

struct Census {
  std::vector<CensusEntry> entries;  // sorted by (a, b)
  bool origin_occupied_at_step0 = true;
};

Census visit_census(const ClassifiedWalk& w, std::int64_t window);

/// Searches the first excursion beyond distance far_d followed by a return
/// inside distance near_d, within the given horizon.
struct RecurrenceReport {
  std::optional<std::pair<std::int64_t, std::int64_t>> witness;
  std::int64_t horizon = 0;
  std::int64_t max_norm_sq_seen = 0;
};

RecurrenceReport recurrence_stats(const ClassifiedWalk& w, const Rational& far_d,
                                  const Rational& near_d, std::int64_t horizon);

}  // namespace numwalk
