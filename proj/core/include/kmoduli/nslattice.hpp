#pragma once

#include "kmoduli/linalg.hpp"
#include "kmoduli/piecewise.hpp"
#include "kmoduli/rational.hpp"

#include <string>
#include <vector>

namespace kmoduli {

// Surface described by its Neron-Severi lattice: intersection form, the
// anticanonical class, and the list of relevant negative curves.
struct ns_surface {
  int rank = 0;
  qmat gram;                 // symmetric, signature (1, rank-1)
  qvec anti_k;
  struct curve {
    std::string name;
    qvec cls;
    rat self_int;
    rat log_disc;            // log discrepancy of the curve over the surface
  };
  std::vector<curve> curves;

  rat pair(const qvec& a, const qvec& b) const;
  void validate() const;     // signature + listed self-intersections
};

struct zariski_result {
  qvec positive;             // P with P.C >= 0 for all listed curves
  qvec negative;             // N = D - P supported on listed curves
  std::vector<int> support;  // indices of curves carrying N
  qvec coeffs;               // coefficients of N on the support
  rat volume;                // P^2 (0 when D is not pseudo-effective)
};

// Exact iterative Zariski decomposition against the listed curves.
zariski_result ns_zariski(const ns_surface& x, const qvec& d);

// vol(L - x*D) as an exact piecewise quadratic on [0, tau].
piecewise_quadratic ns_volume_profile(const ns_surface& x, const qvec& l, const qvec& d);

}  // namespace kmoduli
