#pragma once

#include "kmoduli/rational.hpp"

#include <optional>
#include <vector>

namespace kmoduli {

struct point2 {
  rat x, y;
  bool operator==(const point2& o) const { return x == o.x && y == o.y; }
};

// Closed half-plane { p : a*x + b*y >= c }.
struct halfplane {
  rat a, b, c;
};

// Exact area of the convex hull of an (unordered) point set; 0 when degenerate.
rat polygon_area(std::vector<point2> vertices);

// Vertices of the hull, counterclockwise; empty/degenerate input collapses.
std::vector<point2> convex_hull_ccw(std::vector<point2> pts);

// Vertex set of the intersection of closed half-planes (empty when infeasible).
// The intersection must be bounded whenever it is nonempty.
std::vector<point2> halfplane_intersection(const std::vector<halfplane>& hs);

// Clip a CCW-ordered convex polygon by a half-plane.
std::vector<point2> clip(const std::vector<point2>& poly, const halfplane& h);

// Point-in-convex-hull (closed) test, exact.
bool hull_contains(const std::vector<point2>& hull_ccw, const point2& p);

rat shoelace_area(const std::vector<point2>& ordered);

}  // namespace kmoduli
