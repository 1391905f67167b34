#pragma once

#include <cmath>
#include <vector>

#include "ccsim/errors.hpp"

namespace ccsim {

struct Point2D {
  double x = 0.0;
  double y = 0.0;
};

inline double distance(const Point2D& a, const Point2D& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

// Centers of a hexagonal grid with `rings` rings around a central cell.
// Hexagon circumradius is 1, so adjacent centers are sqrt(3) apart.
// Ordering: center first, then ring by ring; each ring starts at the cell
// reached by stepping `ring` times in axial direction (-1,+1) and walks the
// six edge directions in a fixed order.
inline std::vector<Point2D> build_hex_grid(int rings) {
  if (rings < 0) throw invalid_parameters("rings must be >= 0", "rings");
  // Axial neighbor directions (pointy-top orientation).
  static constexpr int dq[6] = {1, 1, 0, -1, -1, 0};
  static constexpr int dr[6] = {0, -1, -1, 0, 1, 1};
  const double sqrt3 = std::sqrt(3.0);
  auto to_point = [&](int q, int r) {
    return Point2D{sqrt3 * (q + r / 2.0), 1.5 * r};
  };

  std::vector<Point2D> centers;
  centers.push_back(to_point(0, 0));
  for (int ring = 1; ring <= rings; ++ring) {
    int q = -ring;
    int r = ring;
    for (int side = 0; side < 6; ++side) {
      for (int step = 0; step < ring; ++step) {
        centers.push_back(to_point(q, r));
        q += dq[side];
        r += dr[side];
      }
    }
  }
  return centers;
}

}  // namespace ccsim
