#include "kmoduli/toric.hpp"

#include "kmoduli/errors.hpp"
#include "kmoduli/linalg.hpp"

#include <algorithm>
#include <set>

namespace kmoduli {

namespace {

std::int64_t det2(const ray2& a, const ray2& b) { return a[0] * b[1] - a[1] * b[0]; }

// Counterclockwise angular order starting from the positive x-axis.
int half_of(const ray2& v) {
  if (v[1] > 0 || (v[1] == 0 && v[0] > 0)) return 0;
  return 1;
}

bool angle_less(const ray2& a, const ray2& b) {
  int ha = half_of(a), hb = half_of(b);
  if (ha != hb) return ha < hb;
  return det2(a, b) > 0;
}

}  // namespace

int toric_surface::cone_of(const ray2& v) const {
  const int n = nrays();
  for (int i = 0; i < n; ++i) {
    const ray2& u1 = rays[i];
    const ray2& u2 = rays[(i + 1) % n];
    // v in cone(u1, u2) iff coordinates are nonnegative.
    std::int64_t den = det2(u1, u2);
    std::int64_t a = det2(v, u2), b = det2(u1, v);
    if (a * den >= 0 && b * den >= 0 && (a != 0 || b != 0)) return i;
  }
  throw fan_error("vector lies in no cone of the fan");
}

std::pair<rat, rat> toric_surface::cone_coords(int cone, const ray2& v) const {
  const ray2& u1 = rays[cone];
  const ray2& u2 = rays[(cone + 1) % nrays()];
  std::int64_t den = det2(u1, u2);
  if (den == 0) throw fan_error("degenerate cone");
  return {rat(det2(v, u2), den), rat(det2(u1, v), den)};
}

int toric_surface::ray_index(const ray2& v) const {
  for (int i = 0; i < nrays(); ++i)
    if (rays[i] == v) return i;
  return -1;
}

toric_surface build_toric(std::vector<ray2> rays, std::vector<std::string> vars) {
  if (rays.size() < 3) throw fan_error("a complete fan needs at least 3 rays");
  std::vector<std::size_t> order(rays.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (const auto& r : rays) {
    if (r[0] == 0 && r[1] == 0) throw fan_error("zero ray");
    if (gcd64(r[0], r[1]) != 1) throw fan_error("non-primitive ray");
  }
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return angle_less(rays[a], rays[b]); });
  toric_surface x;
  for (std::size_t i : order) {
    x.rays.push_back(rays[i]);
    if (!vars.empty()) x.vars.push_back(vars[i]);
  }
  if (x.vars.empty())
    for (std::size_t i = 0; i < x.rays.size(); ++i) x.vars.push_back("x" + std::to_string(i));
  const int n = x.nrays();
  for (int i = 0; i < n; ++i) {
    if (x.rays[i] == x.rays[(i + 1) % n]) throw fan_error("duplicate ray");
    if (det2(x.rays[i], x.rays[(i + 1) % n]) <= 0)
      throw fan_error("fan is not complete");
  }
  return x;
}

toric_surface projective_plane() {
  return build_toric({{{1, 0}}, {{0, 1}}, {{-1, -1}}}, {"x0", "x1", "x2"});
}

toric_surface weighted_p112k(std::int64_t k) {
  return build_toric({{{1, 0}}, {{-1, -k}}, {{0, 1}}}, {"x", "y", "z"});
}

toric_surface hirzebruch(std::int64_t a) {
  return build_toric({{{1, 0}}, {{0, 1}}, {{-1, a}}, {{0, -1}}}, {"s0", "f0", "s1", "f1"});
}

toric_divisor anticanonical(const toric_surface& x) {
  toric_divisor d;
  d.a.assign(x.nrays(), rat(1));
  return d;
}

std::pair<toric_surface, toric_valuation> weighted_blowup(const toric_surface& x, int cone,
                                                          std::int64_t w1, std::int64_t w2) {
  if (cone < 0 || cone >= x.nrays()) throw fan_error("cone index out of range");
  if (w1 <= 0 || w2 <= 0) throw fan_error("blow-up weights must be positive");
  const ray2& u1 = x.rays[cone];
  const ray2& u2 = x.rays[(cone + 1) % x.nrays()];
  ray2 v{w1 * u1[0] + w2 * u2[0], w1 * u1[1] + w2 * u2[1]};
  if (gcd64(v[0], v[1]) != 1) throw fan_error("blow-up weights give a non-primitive ray");
  std::vector<ray2> rays = x.rays;
  std::vector<std::string> vars = x.vars;
  rays.insert(rays.begin() + cone + 1, v);
  vars.insert(vars.begin() + cone + 1, "e" + std::to_string(x.nrays()));
  return {build_toric(std::move(rays), std::move(vars)), toric_valuation{v}};
}

std::vector<point2> divisor_polytope(const toric_surface& x, const toric_divisor& d) {
  if (static_cast<int>(d.a.size()) != x.nrays()) throw shape_error("divisor/fan size mismatch");
  std::vector<halfplane> hs;
  for (int i = 0; i < x.nrays(); ++i)
    hs.push_back({rat(x.rays[i][0]), rat(x.rays[i][1]), -d.a[i]});
  return halfplane_intersection(hs);
}

rat volume(const toric_surface& x, const toric_divisor& d) {
  return 2 * shoelace_area(divisor_polytope(x, d));
}

rat toric_log_discrepancy(const toric_surface& x, const toric_valuation& v) {
  int cone = x.cone_of(v.v);
  auto [a, b] = x.cone_coords(cone, v.v);
  return a + b;
}

piecewise_quadratic volume_profile(const toric_surface& x, const toric_divisor& l,
                                   const toric_valuation& val) {
  auto poly = divisor_polytope(x, l);
  if (poly.empty()) throw domain_error("empty section polytope");
  // The pullback of L acquires coefficient -psi on the exceptional divisor,
  // where psi is the piecewise-linear extension of the fan data at v.  The
  // cut starts at level psi: below the polytope minimum the constraint is
  // slack and the profile is constant (the subtracted divisor sits entirely
  // in the negative part).
  int cone = x.cone_of(val.v);
  auto [al, be] = x.cone_coords(cone, val.v);
  rat psi = -(al * l.a[cone] + be * l.a[(cone + 1) % x.nrays()]);
  auto pairing = [&](const point2& p) { return p.x * rat(val.v[0]) + p.y * rat(val.v[1]); };
  rat mn = pairing(poly[0]), mx = pairing(poly[0]);
  std::set<rat> levels;
  for (const auto& p : poly) {
    rat h = pairing(p);
    mn = std::min(mn, h);
    mx = std::max(mx, h);
    levels.insert(h);
  }
  piecewise_quadratic out;
  if (mn == mx) return out;  // polygon degenerate against the valuation
  auto area_above = [&](const rat& level) {
    auto clipped = clip(poly, halfplane{rat(val.v[0]), rat(val.v[1]), level});
    return 2 * shoelace_area(clipped);
  };
  if (psi > mn) throw domain_error("valuation level below the section polytope");
  if (psi < mn) {
    quad_piece flat;
    flat.lo = 0;
    flat.hi = mn - psi;
    flat.q2 = flat.q1 = 0;
    flat.q0 = 2 * shoelace_area(poly);
    out.pieces.push_back(flat);
  }
  std::vector<rat> bps(levels.begin(), levels.end());
  for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
    rat x0 = bps[i] - psi, x2 = bps[i + 1] - psi;
    rat x1 = (x0 + x2) / 2;
    rat y0 = area_above(bps[i]);
    rat y1 = area_above((bps[i] + bps[i + 1]) / 2);
    rat y2 = area_above(bps[i + 1]);
    out.pieces.push_back(quad_through(x0, y0, x1, y1, x2, y2));
  }
  out.validate();
  return out;
}

}  // namespace kmoduli
