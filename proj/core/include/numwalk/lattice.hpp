#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string_view>

namespace numwalk {

// The two supported grids: the triangular lattice with six step directions
// (axial basis vectors 60 degrees apart) and the square lattice with four.
enum class Grid : std::uint8_t { Hex, Square };

constexpr int dir_count(Grid g) { return g == Grid::Hex ? 6 : 4; }
constexpr std::string_view grid_name(Grid g) { return g == Grid::Hex ? "hex" : "square"; }

inline Grid default_grid_for_base(int base) {
  switch (base) {
    case 2:
    case 5:
      return Grid::Hex;
    case 3:
      return Grid::Square;
  }
  throw std::domain_error("no default grid for base " + std::to_string(base));
}

// Lattice point in integer axial coordinates. On the hex grid the basis is
// a = (1, 0) and b = (1/2, sqrt(3)/2) in the plane; on the square grid it is
// the usual (1, 0) and (0, 1). All geometry below stays in integers.
struct Point {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend constexpr bool operator==(Point, Point) = default;
  friend constexpr Point operator+(Point p, Point q) { return {p.a + q.a, p.b + q.b}; }
  friend constexpr Point operator-(Point p, Point q) { return {p.a - q.a, p.b - q.b}; }
  friend constexpr Point operator*(std::int64_t s, Point p) { return {s * p.a, s * p.b}; }
};

struct PointHash {
  std::size_t operator()(Point p) const noexcept {
    auto mix = [](std::uint64_t x) {
      x += 0x9e3779b97f4a7c15ull;
      x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
      x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
      return x ^ (x >> 31);
    };
    return static_cast<std::size_t>(mix(static_cast<std::uint64_t>(p.a)) ^ (mix(static_cast<std::uint64_t>(p.b)) << 1));
  }
};

constexpr int normalize_dir(std::int64_t d, Grid g) {
  const int n = dir_count(g);
  return static_cast<int>(((d % n) + n) % n);
}

// One counterclockwise rotation step (60 degrees on hex, 90 on square).
constexpr Point rotate_once(Point p, Grid g) {
  return g == Grid::Hex ? Point{-p.b, p.a + p.b} : Point{-p.b, p.a};
}

constexpr Point rotate(Point p, std::int64_t steps, Grid g) {
  const int n = normalize_dir(steps, g);
  for (int i = 0; i < n; ++i) p = rotate_once(p, g);
  return p;
}

constexpr Point unit_vector(int dir, Grid g) { return rotate(Point{1, 0}, dir, g); }

// Squared Euclidean length; exact in the axial coordinates.
constexpr std::int64_t norm_sq(Point p, Grid g) {
  return g == Grid::Hex ? p.a * p.a + p.a * p.b + p.b * p.b : p.a * p.a + p.b * p.b;
}

// Reflection across the x axis; maps direction k to D-k.
constexpr Point mirror(Point p, Grid g) {
  return g == Grid::Hex ? Point{p.a + p.b, -p.b} : Point{p.a, -p.b};
}

constexpr int mirror_dir(int dir, Grid g) { return normalize_dir(-dir, g); }

// Integer plane embedding used by the exact ray-crossing predicates: the hex
// point (a, b) sits at ((2a+b)/2, b*sqrt(3)/2), so x doubles to 2a+b and y
// is b outright; the square grid embeds as itself. The map is a positive
// diagonal scaling of the plane, which preserves orientation signs.
struct Embedded {
  std::int64_t x = 0;
  std::int64_t y = 0;
};

constexpr Embedded embed(Point p, Grid g) {
  return g == Grid::Hex ? Embedded{2 * p.a + p.b, p.b} : Embedded{p.a, p.b};
}

struct Cartesian {
  double x = 0;
  double y = 0;
};

inline Cartesian to_cartesian(Point p, Grid g) {
  constexpr double kHalfSqrt3 = 0.8660254037844386467637;
  if (g == Grid::Square) return {static_cast<double>(p.a), static_cast<double>(p.b)};
  return {static_cast<double>(p.a) + 0.5 * static_cast<double>(p.b), kHalfSqrt3 * static_cast<double>(p.b)};
}

}  // namespace numwalk
