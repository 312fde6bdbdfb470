#include "numwalk/topology.hpp"

#include <cmath>
#include <stdexcept>

namespace numwalk {

namespace {

// orient > 0 means B lies strictly left of the directed line P -> Q.
std::int64_t orient(Embedded p, Embedded q, Embedded b) {
  return (q.x - p.x) * (b.y - p.y) - (q.y - p.y) * (b.x - p.x);
}

std::int64_t crossing(Embedded p, Embedded q, Embedded b) {
  if (p.y <= b.y && b.y < q.y) {  // upward
    if (orient(p, q, b) > 0) return +1;
  } else if (q.y <= b.y && b.y < p.y) {  // downward
    if (orient(p, q, b) < 0) return -1;
  }
  return 0;
}

}  // namespace

std::vector<std::int64_t> winding_profile(std::span<const Point> polyline, Point center, Grid g) {
  std::vector<std::int64_t> profile;
  profile.reserve(polyline.empty() ? 1 : polyline.size());
  profile.push_back(0);
  if (polyline.empty()) return profile;
  const Embedded b = embed(center, g);
  std::int64_t acc = 0;
  for (std::size_t i = 1; i < polyline.size(); ++i) {
    if (polyline[i - 1] != center && polyline[i] != center)
      acc += crossing(embed(polyline[i - 1], g), embed(polyline[i], g), b);
    profile.push_back(acc);
  }
  return profile;
}

std::vector<std::int64_t> winding_profile(const Path& p, Point center) {
  const auto pts = positions(p);
  return winding_profile(std::span<const Point>(pts), center, p.grid());
}

std::int64_t winding(std::span<const Point> polyline, Point center, Grid g) {
  return winding_profile(polyline, center, g).back();
}

std::int64_t winding(const Path& p, std::int64_t upto, Point center) {
  if (upto < 0 || upto >= static_cast<std::int64_t>(p.states.size()))
    throw std::out_of_range("winding prefix outside the walked path");
  const auto pts = positions(p);
  return winding(std::span<const Point>(pts.data(), static_cast<std::size_t>(upto) + 1), center, p.grid());
}

double winding_angle_sum(std::span<const Point> polyline, Point center, Grid g) {
  const auto b = to_cartesian(center, g);
  double total = 0;
  for (std::size_t i = 1; i < polyline.size(); ++i) {
    const auto p = to_cartesian(polyline[i - 1], g);
    const auto q = to_cartesian(polyline[i], g);
    const double ux = p.x - b.x, uy = p.y - b.y;
    const double vx = q.x - b.x, vy = q.y - b.y;
    total += std::atan2(ux * vy - uy * vx, ux * vx + uy * vy);
  }
  return total / (2.0 * M_PI);
}

}  // namespace numwalk
