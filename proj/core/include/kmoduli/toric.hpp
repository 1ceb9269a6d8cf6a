#pragma once

#include "kmoduli/piecewise.hpp"
#include "kmoduli/polygon.hpp"
#include "kmoduli/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kmoduli {

using ray2 = std::array<std::int64_t, 2>;

// Complete fan in the rank-2 lattice; rays stored counterclockwise,
// primitive.  Cone i is spanned by rays i and i+1 (cyclic).
struct toric_surface {
  std::vector<ray2> rays;
  std::vector<std::string> vars;  // homogeneous variable names, one per ray

  int nrays() const { return static_cast<int>(rays.size()); }
  int cone_of(const ray2& v) const;            // index of a cone containing v
  std::pair<rat, rat> cone_coords(int cone, const ray2& v) const;
  int ray_index(const ray2& v) const;          // -1 when absent
};

// Torus-invariant Q-divisor sum a_rho D_rho.
struct toric_divisor {
  std::vector<rat> a;
};

// Divisorial valuation given by a primitive lattice vector v sitting in a
// cone of the fan; for an inserted ray with local weights (w1, w2) this is
// the exceptional of the corresponding weighted blow-up, for an existing
// ray it is the boundary divisor itself.
struct toric_valuation {
  ray2 v;

  bool operator==(const toric_valuation& o) const { return v == o.v; }
};

toric_surface build_toric(std::vector<ray2> rays, std::vector<std::string> vars = {});

toric_surface projective_plane();
toric_surface weighted_p112k(std::int64_t k);  // P(1,1,k)
toric_surface hirzebruch(std::int64_t a);      // F_a

// Anticanonical divisor: all coefficients one.
toric_divisor anticanonical(const toric_surface& x);

// Insert the ray w1*u1 + w2*u2 into the cone spanned by adjacent rays
// (cone index i means rays i, i+1).  Returns the new surface and the
// exceptional valuation.
std::pair<toric_surface, toric_valuation> weighted_blowup(const toric_surface& x, int cone,
                                                          std::int64_t w1, std::int64_t w2);

// Rational polygon of sections.
std::vector<point2> divisor_polytope(const toric_surface& x, const toric_divisor& d);

rat volume(const toric_surface& x, const toric_divisor& d);

// vol(pi^* L - t E) as an exact piecewise quadratic on [0, tau].
piecewise_quadratic volume_profile(const toric_surface& x, const toric_divisor& l,
                                   const toric_valuation& v);

// Log discrepancy A_X(v): the piecewise-linear function with value one on
// the primitive ray generators, evaluated at v.
rat toric_log_discrepancy(const toric_surface& x, const toric_valuation& v);

}  // namespace kmoduli
