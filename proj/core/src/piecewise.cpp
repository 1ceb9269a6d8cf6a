#include "kmoduli/piecewise.hpp"

#include "kmoduli/errors.hpp"

namespace kmoduli {

rat piecewise_quadratic::eval(const rat& x) const {
  for (const auto& p : pieces)
    if (x >= p.lo && x <= p.hi) return p.eval(x);
  throw domain_error("piecewise eval outside domain");
}

void piecewise_quadratic::validate() const {
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (pieces[i].lo >= pieces[i].hi) throw domain_error("empty piece interval");
    if (i > 0) {
      if (pieces[i].lo != pieces[i - 1].hi)
        throw domain_error("piece intervals do not abut");
      if (pieces[i].eval(pieces[i].lo) != pieces[i - 1].eval(pieces[i - 1].hi))
        throw domain_error("piecewise function discontinuous at a breakpoint");
    }
  }
}

rat integrate_piecewise_quadratic(const piecewise_quadratic& f) {
  rat total = 0;
  for (std::size_t i = 0; i < f.pieces.size(); ++i) {
    const auto& p = f.pieces[i];
    if (p.lo > p.hi) throw domain_error("inverted piece interval");
    if (i > 0 && p.lo < f.pieces[i - 1].hi) throw domain_error("overlapping piece intervals");
    rat hi3 = p.hi * p.hi * p.hi, lo3 = p.lo * p.lo * p.lo;
    rat hi2 = p.hi * p.hi, lo2 = p.lo * p.lo;
    total += p.q2 * (hi3 - lo3) / 3 + p.q1 * (hi2 - lo2) / 2 + p.q0 * (p.hi - p.lo);
  }
  return total;
}

quad_piece quad_through(const rat& x0, const rat& y0, const rat& x1, const rat& y1,
                        const rat& x2, const rat& y2) {
  // Lagrange interpolation.
  rat d0 = (x0 - x1) * (x0 - x2);
  rat d1 = (x1 - x0) * (x1 - x2);
  rat d2 = (x2 - x0) * (x2 - x1);
  if (d0 == 0 || d1 == 0 || d2 == 0) throw domain_error("quad_through: coincident samples");
  quad_piece q;
  q.q2 = y0 / d0 + y1 / d1 + y2 / d2;
  q.q1 = -(y0 * (x1 + x2) / d0 + y1 * (x0 + x2) / d1 + y2 * (x0 + x1) / d2);
  q.q0 = y0 * x1 * x2 / d0 + y1 * x0 * x2 / d1 + y2 * x0 * x1 / d2;
  q.lo = x0;
  q.hi = x2;
  return q;
}

}  // namespace kmoduli
