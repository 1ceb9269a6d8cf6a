#include "kmoduli/nslattice.hpp"

#include "kmoduli/errors.hpp"

#include <algorithm>
#include <set>

namespace kmoduli {

rat ns_surface::pair(const qvec& a, const qvec& b) const {
  if (static_cast<int>(a.size()) != rank || static_cast<int>(b.size()) != rank)
    throw shape_error("class vector size mismatch");
  rat s = 0;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) s += a[i] * gram[i][j] * b[j];
  return s;
}

void ns_surface::validate() const {
  if (static_cast<int>(gram.size()) != rank) throw model_error("gram size mismatch");
  for (const auto& row : gram)
    if (static_cast<int>(row.size()) != rank) throw model_error("gram not square");
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (gram[i][j] != gram[j][i]) throw model_error("gram not symmetric");
  auto sig = symmetric_signature(gram);
  if (sig.pos != 1 || sig.neg != rank - 1 || sig.zero != 0)
    throw model_error("gram signature is not (1, rank-1)");
  for (const auto& c : curves) {
    if (pair(c.cls, c.cls) != c.self_int)
      throw model_error("stored self-intersection mismatch for curve " + c.name);
    if (c.self_int >= 0) throw model_error("listed curve " + c.name + " is not negative");
  }
}

namespace {

// Solve for N supported on the given curves with (D - N).C = 0 for each.
// Returns empty optional when the Gram submatrix is singular.
std::optional<qvec> support_coeffs(const ns_surface& x, const qvec& d,
                                   const std::vector<int>& sup) {
  const int k = static_cast<int>(sup.size());
  qmat g(k, qvec(k));
  qvec rhs(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) g[i][j] = x.pair(x.curves[sup[i]].cls, x.curves[sup[j]].cls);
    rhs[i] = x.pair(d, x.curves[sup[i]].cls);
  }
  return solve_linear(std::move(g), std::move(rhs));
}

void check_negative_definite(const ns_surface& x, const std::vector<int>& sup) {
  const int k = static_cast<int>(sup.size());
  qmat g(k, qvec(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) g[i][j] = x.pair(x.curves[sup[i]].cls, x.curves[sup[j]].cls);
  auto sig = symmetric_signature(g);
  if (sig.neg != k || sig.pos != 0 || sig.zero != 0)
    throw model_error("support Gram matrix is not negative definite (curve list incomplete?)");
}

}  // namespace

zariski_result ns_zariski(const ns_surface& x, const qvec& d) {
  std::set<int> sup;
  const int ncurves = static_cast<int>(x.curves.size());
  for (int round = 0; round <= 2 * ncurves + 2; ++round) {
    std::vector<int> s(sup.begin(), sup.end());
    std::optional<qvec> coeffs;
    if (!s.empty()) {
      check_negative_definite(x, s);
      coeffs = support_coeffs(x, d, s);
      if (!coeffs) throw model_error("singular Gram system in Zariski step");
      // Drop curves with negative coefficient and retry.
      bool dropped = false;
      for (int i = 0; i < static_cast<int>(s.size()); ++i)
        if ((*coeffs)[i] < 0) {
          sup.erase(s[i]);
          dropped = true;
        }
      if (dropped) continue;
    }
    qvec p = d;
    if (!s.empty())
      for (int i = 0; i < static_cast<int>(s.size()); ++i)
        for (int j = 0; j < x.rank; ++j) p[j] -= (*coeffs)[i] * x.curves[s[i]].cls[j];
    bool grew = false;
    for (int c = 0; c < ncurves; ++c) {
      if (sup.count(c)) continue;
      if (x.pair(p, x.curves[c].cls) < 0) {
        sup.insert(c);
        grew = true;
      }
    }
    if (!grew) {
      zariski_result r;
      r.positive = p;
      r.negative = qvec(x.rank, rat(0));
      for (int j = 0; j < x.rank; ++j) r.negative[j] = d[j] - p[j];
      r.support = s;
      if (coeffs) r.coeffs = *coeffs;
      rat v = x.pair(p, p);
      r.volume = v > 0 ? v : rat(0);
      return r;
    }
  }
  throw model_error("Zariski iteration did not stabilize");
}

piecewise_quadratic ns_volume_profile(const ns_surface& x, const qvec& l, const qvec& d) {
  // Affine family D(s) = L - s*D; walk the regimes where the Zariski support
  // is constant.  Within a regime P(s) is affine, so vol is quadratic.
  piecewise_quadratic out;
  if (ns_zariski(x, l).volume <= 0) throw domain_error("L is not big");
  auto value_at = [&](const rat& s) {
    qvec ds(x.rank);
    for (int j = 0; j < x.rank; ++j) ds[j] = l[j] - s * d[j];
    return ns_zariski(x, ds);
  };
  rat lo = 0;
  rat probe_step = rat(1, 64);
  int guard = 0;
  while (true) {
    if (++guard > 400) throw model_error("volume profile did not terminate");
    auto z_probe = value_at(lo + probe_step);
    if (z_probe.volume == 0) {
      if (probe_step > rat(1, bigint(1) << 40)) {
        probe_step /= 1024;
        continue;
      }
      break;  // volume already vanishes arbitrarily close to lo
    }
    std::vector<int> sup = z_probe.support;
    const int k = static_cast<int>(sup.size());
    qvec coeff_const(k), coeff_slope(k);
    if (k > 0) {
      qmat g(k, qvec(k));
      qvec rhs_c(k), rhs_s(k);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) g[i][j] = x.pair(x.curves[sup[i]].cls, x.curves[sup[j]].cls);
        rhs_c[i] = x.pair(l, x.curves[sup[i]].cls);
        rhs_s[i] = x.pair(d, x.curves[sup[i]].cls);  // D(s).C_i = rhs_c - s*rhs_s
      }
      auto sc = solve_linear(g, rhs_c);
      auto ss = solve_linear(g, rhs_s);
      if (!sc || !ss) throw model_error("singular Gram system in profile walk");
      coeff_const = *sc;
      coeff_slope = *ss;
    }
    // P(s) = p_const - s * p_slope.
    qvec p_const = l, p_slope = d;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < x.rank; ++j) {
        p_const[j] -= coeff_const[i] * x.curves[sup[i]].cls[j];
        p_slope[j] -= coeff_slope[i] * x.curves[sup[i]].cls[j];
      }
    rat a2 = x.pair(p_slope, p_slope);
    rat a1 = -2 * x.pair(p_const, p_slope);
    rat a0 = x.pair(p_const, p_const);

    rat hi;
    bool have_hi = false;
    auto update_hi = [&](const rat& s) {
      if (s > lo && (!have_hi || s < hi)) {
        hi = s;
        have_hi = true;
      }
    };
    for (int c = 0; c < static_cast<int>(x.curves.size()); ++c) {
      rat pc_c = x.pair(p_const, x.curves[c].cls);
      rat pc_s = x.pair(p_slope, x.curves[c].cls);
      if (pc_s != 0) update_hi(pc_c / pc_s);  // P(s).C = 0
    }
    for (int i = 0; i < k; ++i)
      if (coeff_slope[i] != 0) update_hi(coeff_const[i] / coeff_slope[i]);  // N coeff = 0
    // vol(s) = 0 (rational roots only; irrational roots are unrepresentable
    // and surface here as a model error below).
    if (a2 != 0) {
      rat disc = a1 * a1 - 4 * a2 * a0;
      if (disc >= 0) {
        bigint num = numerator(disc), den = denominator(disc);
        bigint rn = boost::multiprecision::sqrt(num), rd = boost::multiprecision::sqrt(den);
        if (rn * rn == num && rd * rd == den) {
          rat sq(rn, rd);
          update_hi((-a1 + sq) / (2 * a2));
          update_hi((-a1 - sq) / (2 * a2));
        }
      }
    } else if (a1 != 0) {
      update_hi(-a0 / a1);
    }
    if (!have_hi) throw model_error("volume profile walk found no next event");
    // Validate the regime at its midpoint against the pointwise decomposition.
    rat mid = (lo + hi) / 2;
    auto z_mid = value_at(mid);
    rat quad_mid = a2 * mid * mid + a1 * mid + a0;
    if (z_mid.volume != quad_mid) {
      // The probe overshot an event; shrink and retry.
      if (probe_step <= rat(1, bigint(1) << 40))
        throw model_error("inconsistent Zariski regime in profile walk");
      probe_step /= 1024;
      continue;
    }
    rat v_end = a2 * hi * hi + a1 * hi + a0;
    if (v_end < 0) throw model_error("volume turned negative: irrational threshold?");
    quad_piece piece;
    piece.lo = lo;
    piece.hi = hi;
    piece.q2 = a2;
    piece.q1 = a1;
    piece.q0 = a0;
    out.pieces.push_back(piece);
    lo = hi;
    probe_step = rat(1, 64);
    if (v_end == 0) break;
  }
  // Merge pieces that continue the same quadratic.
  piecewise_quadratic merged;
  for (const auto& p : out.pieces) {
    if (!merged.pieces.empty()) {
      auto& last = merged.pieces.back();
      if (last.q2 == p.q2 && last.q1 == p.q1 && last.q0 == p.q0 && last.hi == p.lo) {
        last.hi = p.hi;
        continue;
      }
    }
    merged.pieces.push_back(p);
  }
  merged.validate();
  return merged;
}

}  // namespace kmoduli
