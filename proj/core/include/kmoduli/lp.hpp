#pragma once

#include "kmoduli/rational.hpp"

#include <vector>

namespace kmoduli {

// Exact feasibility of { x >= 0 : A x = b } via phase-I simplex (Bland's rule).
bool standard_form_feasible(std::vector<std::vector<rat>> a, std::vector<rat> b);

// Is the point p in the convex hull of pts (arbitrary dimension)?
bool in_convex_hull(const std::vector<std::vector<rat>>& pts, const std::vector<rat>& p);

// Does a vector y with sum(y) = 0 and <y, q> <= -1 for every listed q exist?
// (Strict-separation oracle: feasible iff some trace-zero functional is
// negative on all the given points.)
bool separating_functional_exists(const std::vector<std::vector<rat>>& pts);

}  // namespace kmoduli
