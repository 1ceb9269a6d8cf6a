#pragma once

#include "kmoduli/rational.hpp"

#include <vector>

namespace kmoduli {

// q2*x^2 + q1*x + q0 on [lo, hi].
struct quad_piece {
  rat lo, hi;
  rat q2, q1, q0;

  rat eval(const rat& x) const { return q2 * x * x + q1 * x + q0; }
};

// Continuous piecewise-quadratic function on [0, tau]; intervals abut.
struct piecewise_quadratic {
  std::vector<quad_piece> pieces;

  rat tau() const { return pieces.empty() ? rat(0) : pieces.back().hi; }
  rat eval(const rat& x) const;
  void validate() const;  // partition + continuity
};

// Exact integral over the union of intervals; throws domain_error on overlap.
rat integrate_piecewise_quadratic(const piecewise_quadratic& f);

// Quadratic through three samples (x0,y0), (x1,y1), (x2,y2) with distinct x.
quad_piece quad_through(const rat& x0, const rat& y0, const rat& x1, const rat& y1,
                        const rat& x2, const rat& y2);

}  // namespace kmoduli
