#include "kmoduli/logpair.hpp"

#include "kmoduli/errors.hpp"

#include <algorithm>

namespace kmoduli {

namespace {

// Ambient monomial valuation of a polynomial support at the lattice vector v:
// min over monomials of the dehomogenized pairing in the ambient cone of v.
rat ambient_base_order(const toric_surface& ambient, const std::vector<ivec>& support,
                       const ray2& v) {
  if (support.empty()) throw chart_error("boundary component has no polynomial data");
  int cone = ambient.cone_of(v);
  auto [alpha, beta] = ambient.cone_coords(cone, v);
  int i1 = cone, i2 = (cone + 1) % ambient.nrays();
  bool first = true;
  rat best;
  for (const auto& e : support) {
    if (static_cast<int>(e.size()) != ambient.nrays())
      throw shape_error("boundary exponent length mismatch");
    rat val = alpha * rat(e[i1]) + beta * rat(e[i2]);
    if (first || val < best) {
      best = val;
      first = false;
    }
  }
  return best;
}

}  // namespace

rat toric_order(const toric_model& m, const boundary_component& b, const ray2& v) {
  rat base = ambient_base_order(m.ambient, b.poly_support, v);
  // Subtract the exceptional multiplicities carried by the surface's rays
  // that are not ambient rays and that bound the cone of v.
  int cone = m.surface.cone_of(v);
  auto [a, bb] = m.surface.cone_coords(cone, v);
  const ray2& u1 = m.surface.rays[cone];
  const ray2& u2 = m.surface.rays[(cone + 1) % m.surface.nrays()];
  rat corr = 0;
  if (a != 0 && m.ambient.ray_index(u1) < 0)
    corr += a * ambient_base_order(m.ambient, b.poly_support, u1);
  if (bb != 0 && m.ambient.ray_index(u2) < 0)
    corr += bb * ambient_base_order(m.ambient, b.poly_support, u2);
  // Guard: an ambient ray missing from the surface fan inside the cone of v
  // would require a pullback correction we do not model.
  for (int i = 0; i < m.ambient.nrays(); ++i) {
    const ray2& r = m.ambient.rays[i];
    if (m.surface.ray_index(r) >= 0) continue;
    // Is r strictly inside the surface cone of v?
    auto [ca, cb] = m.surface.cone_coords(cone, r);
    if (ca > 0 && cb > 0 && ambient_base_order(m.ambient, b.poly_support, r) > 0)
      throw chart_error("valuation cone meets a contracted ambient divisor with multiplicity");
  }
  return base - corr;
}

linear_in_c log_discrepancy(const log_pair& pair, const valuation& v) {
  linear_in_c a;
  if (pair.is_toric()) {
    const auto& m = std::get<toric_model>(pair.model);
    if (v.kind != valuation::kind_t::toric_vector)
      throw chart_error("ns valuation against a toric model");
    a = linear_in_c(toric_log_discrepancy(m.surface, toric_valuation{v.v}), rat(0));
    for (const auto& b : pair.boundary) {
      rat ord = b.poly_support.empty() ? rat(0) : toric_order(m, b, v.v);
      a = a - linear_in_c(b.coeff.c0 * ord, b.coeff.c1 * ord);
    }
  } else {
    if (v.kind != valuation::kind_t::ns_class)
      throw chart_error("toric valuation against an ns model");
    a = linear_in_c(v.ns_a, rat(0));
    for (const auto& b : pair.boundary) {
      rat ord = 0;
      auto it = b.ns_orders.find(v.name);
      if (it != b.ns_orders.end()) ord = it->second;
      a = a - linear_in_c(b.coeff.c0 * ord, b.coeff.c1 * ord);
    }
  }
  return a;
}

namespace {

toric_divisor toric_log_ac(const toric_model& m, const std::vector<boundary_component>& boundary,
                           const rat& c) {
  toric_divisor l = anticanonical(m.surface);
  for (const auto& b : boundary) {
    rat f = b.coeff.eval(c);
    if (static_cast<int>(b.cls.size()) != m.surface.nrays())
      throw shape_error("boundary class length mismatch");
    for (int i = 0; i < m.surface.nrays(); ++i) l.a[i] -= f * b.cls[i];
  }
  return l;
}

qvec ns_log_ac(const ns_surface& x, const std::vector<boundary_component>& boundary,
               const rat& c) {
  qvec l = x.anti_k;
  for (const auto& b : boundary) {
    rat f = b.coeff.eval(c);
    if (static_cast<int>(b.cls.size()) != x.rank)
      throw shape_error("boundary class length mismatch");
    for (int i = 0; i < x.rank; ++i) l[i] -= f * b.cls[i];
  }
  return l;
}

}  // namespace

rat log_anticanonical_volume(const log_pair& pair, const rat& c) {
  if (pair.is_toric()) {
    const auto& m = std::get<toric_model>(pair.model);
    return volume(m.surface, toric_log_ac(m, pair.boundary, c));
  }
  const auto& x = std::get<ns_surface>(pair.model);
  return ns_zariski(x, ns_log_ac(x, pair.boundary, c)).volume;
}

piecewise_quadratic s_profile_at(const log_pair& pair, const valuation& v, const rat& c) {
  if (pair.is_toric()) {
    const auto& m = std::get<toric_model>(pair.model);
    auto l = toric_log_ac(m, pair.boundary, c);
    if (volume(m.surface, l) <= 0)
      throw domain_error("log anticanonical class is not big at the sample");
    return volume_profile(m.surface, l, toric_valuation{v.v});
  }
  const auto& x = std::get<ns_surface>(pair.model);
  auto l = ns_log_ac(x, pair.boundary, c);
  if (ns_zariski(x, l).volume <= 0)
    throw domain_error("log anticanonical class is not big at the sample");
  return ns_volume_profile(x, l, v.cls);
}

rat s_invariant_at(const log_pair& pair, const valuation& v, const rat& c) {
  auto prof = s_profile_at(pair, v, c);
  return integrate_piecewise_quadratic(prof) / log_anticanonical_volume(pair, c);
}

linear_in_c s_invariant(const log_pair& pair, const valuation& v) {
  rat span = pair.c_hi - pair.c_lo;
  rat c1 = pair.c_lo + span / 4;
  rat c2 = pair.c_lo + span / 2;
  rat c3 = pair.c_lo + 3 * span / 4;
  rat s1 = s_invariant_at(pair, v, c1);
  rat s2 = s_invariant_at(pair, v, c2);
  rat s3 = s_invariant_at(pair, v, c3);
  linear_in_c fit = affine_fit(c1, s1, c3, s3);
  if (fit.eval(c2) != s2)
    throw nonlinearity_error("S(c) samples are not collinear");
  return fit;
}

beta_report beta_invariant(const log_pair& pair, const valuation& v) {
  beta_report r;
  r.a = log_discrepancy(pair, v);
  r.s = s_invariant(pair, v);
  r.beta = r.a - r.s;
  if (r.beta.has_root()) {
    rat root = r.beta.root();
    if (root > 0 && root < 1) r.wall = root;
  }
  return r;
}

std::string to_string(c1_verdict v) {
  switch (v) {
    case c1_verdict::polystable: return "polystable";
    case c1_verdict::semistable_boundary: return "semistable-boundary";
    case c1_verdict::unstable: return "unstable";
    default: return "inconclusive";
  }
}

std::pair<ray2, ray2> induced_fixed_valuations(const toric_model& m, const ivec& weights) {
  if (static_cast<int>(weights.size()) != m.ambient.nrays())
    throw shape_error("torus weight vector length mismatch");
  std::int64_t lx = 0, ly = 0;
  for (int i = 0; i < m.ambient.nrays(); ++i) {
    lx += weights[i] * m.ambient.rays[i][0];
    ly += weights[i] * m.ambient.rays[i][1];
  }
  if (lx == 0 && ly == 0) throw degenerate_error("torus action is trivial on the lattice");
  std::int64_t g = gcd64(lx, ly);
  ray2 e1{lx / g, ly / g};
  ray2 e2{-e1[0], -e1[1]};
  return {e1, e2};
}

c1_verdict complexity_one_check(const complexity_one_config& cfg, const rat& c) {
  auto beta_at = [&](const valuation& v) {
    beta_report r = beta_invariant(cfg.pair, v);
    return r.beta.eval(c);
  };
  rat b1 = beta_at(cfg.plt);
  if (cfg.plt_dual) {
    rat b2 = beta_at(*cfg.plt_dual);
    if (b1 + b2 != 0)
      throw consistency_error("fixed-point betas do not cancel: " + rat_str(b1) + " + " +
                              rat_str(b2));
  } else if (!cfg.torus_weights.empty() && cfg.pair.is_toric()) {
    const auto& m = std::get<toric_model>(cfg.pair.model);
    auto [e1, e2] = induced_fixed_valuations(m, cfg.torus_weights);
    rat bb1 = beta_at(valuation::toric(e1));
    rat bb2 = beta_at(valuation::toric(e2));
    if (bb1 + bb2 != 0)
      throw consistency_error("fixed-point betas do not cancel");
  }
  bool any_zero = false;
  for (const auto& v : cfg.vertical) {
    rat b = beta_at(v);
    if (b < 0) return c1_verdict::unstable;
    if (b == 0) any_zero = true;
  }
  if (b1 != 0) return c1_verdict::unstable;  // nonzero Futaki of the induced degeneration
  if (any_zero) return c1_verdict::semistable_boundary;
  return c1_verdict::polystable;
}

}  // namespace kmoduli
