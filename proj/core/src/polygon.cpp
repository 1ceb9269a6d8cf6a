#include "kmoduli/polygon.hpp"

#include "kmoduli/errors.hpp"

#include <algorithm>

namespace kmoduli {

namespace {

rat cross(const point2& o, const point2& a, const point2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

rat shoelace_area(const std::vector<point2>& v) {
  const int n = static_cast<int>(v.size());
  if (n < 3) return rat(0);
  rat s = 0;
  for (int i = 0; i < n; ++i) {
    const point2& p = v[i];
    const point2& q = v[(i + 1) % n];
    s += p.x * q.y - q.x * p.y;
  }
  return abs(s) / 2;
}

std::vector<point2> convex_hull_ccw(std::vector<point2> pts) {
  std::sort(pts.begin(), pts.end(), [](const point2& a, const point2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const int n = static_cast<int>(pts.size());
  if (n < 3) return pts;
  std::vector<point2> h(2 * n);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (int i = n - 2, lower = k + 1; i >= 0; --i) {
    while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

rat polygon_area(std::vector<point2> vertices) {
  auto hull = convex_hull_ccw(std::move(vertices));
  return shoelace_area(hull);
}

std::vector<point2> clip(const std::vector<point2>& poly, const halfplane& h) {
  std::vector<point2> out;
  const int n = static_cast<int>(poly.size());
  if (n == 0) return out;
  auto side = [&](const point2& p) { return h.a * p.x + h.b * p.y - h.c; };
  for (int i = 0; i < n; ++i) {
    const point2& cur = poly[i];
    const point2& nxt = poly[(i + 1) % n];
    rat sc = side(cur), sn = side(nxt);
    if (sc >= 0) out.push_back(cur);
    if ((sc > 0 && sn < 0) || (sc < 0 && sn > 0)) {
      rat t = sc / (sc - sn);
      out.push_back({cur.x + t * (nxt.x - cur.x), cur.y + t * (nxt.y - cur.y)});
    }
  }
  // Remove consecutive duplicates introduced by vertices on the boundary.
  std::vector<point2> dedup;
  for (const auto& p : out)
    if (dedup.empty() || !(dedup.back() == p)) dedup.push_back(p);
  if (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
  return dedup;
}

std::vector<point2> halfplane_intersection(const std::vector<halfplane>& hs) {
  const int n = static_cast<int>(hs.size());
  std::vector<point2> candidates;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      rat det = hs[i].a * hs[j].b - hs[j].a * hs[i].b;
      if (det == 0) continue;
      point2 p{(hs[i].c * hs[j].b - hs[j].c * hs[i].b) / det,
               (hs[i].a * hs[j].c - hs[j].a * hs[i].c) / det};
      bool ok = true;
      for (int k = 0; k < n && ok; ++k)
        if (hs[k].a * p.x + hs[k].b * p.y < hs[k].c) ok = false;
      if (ok) candidates.push_back(p);
    }
  return convex_hull_ccw(std::move(candidates));
}

bool hull_contains(const std::vector<point2>& hull, const point2& p) {
  const int n = static_cast<int>(hull.size());
  if (n == 0) return false;
  if (n == 1) return hull[0] == p;
  if (n == 2) {
    // Segment membership.
    if (cross(hull[0], hull[1], p) != 0) return false;
    rat lo_x = std::min(hull[0].x, hull[1].x), hi_x = std::max(hull[0].x, hull[1].x);
    rat lo_y = std::min(hull[0].y, hull[1].y), hi_y = std::max(hull[0].y, hull[1].y);
    return p.x >= lo_x && p.x <= hi_x && p.y >= lo_y && p.y <= hi_y;
  }
  for (int i = 0; i < n; ++i)
    if (cross(hull[i], hull[(i + 1) % n], p) < 0) return false;
  return true;
}

}  // namespace kmoduli
