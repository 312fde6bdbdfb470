#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "numwalk/lattice.hpp"
#include "numwalk/walk.hpp"

namespace numwalk {

/// Signed crossing count of the horizontal ray from center toward +x with
/// the polyline's segments, evaluated exactly in the integer embedding.
/// A segment crossing the ray upward strictly right of the center counts
/// +1, downward -1, with the half-open rule y_P <= y_B < y_Q so shared
/// vertices are never double counted. Segments with an endpoint equal to
/// the center are skipped entirely. For closed loops avoiding the center
/// this is the winding number.
std::int64_t winding(std::span<const Point> polyline, Point center, Grid g);

/// Winding of the first upto segments of a walk around center.
std::int64_t winding(const Path& p, std::int64_t upto, Point center);

/// Prefix windings for every step index 0..n; profile[0] is 0.
std::vector<std::int64_t> winding_profile(std::span<const Point> polyline, Point center, Grid g);
std::vector<std::int64_t> winding_profile(const Path& p, Point center);

/// Floating-point cross-check: accumulated signed angle around the center,
/// in full turns. Off-path centers of closed loops give near-integers.
double winding_angle_sum(std::span<const Point> polyline, Point center, Grid g);

}  // namespace numwalk
