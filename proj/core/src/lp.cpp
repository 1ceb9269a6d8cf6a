#include "kmoduli/lp.hpp"

#include "kmoduli/errors.hpp"

#include <algorithm>

namespace kmoduli {

namespace {

// Phase-I simplex on A x = b, x >= 0 with artificial variables; Bland's rule.
// Returns true iff the artificial optimum is zero.
bool phase_one(std::vector<std::vector<rat>> a, std::vector<rat> b) {
  const int m = static_cast<int>(a.size());
  if (m == 0) return true;
  const int n = static_cast<int>(a[0].size());
  for (int i = 0; i < m; ++i)
    if (b[i] < 0) {
      for (auto& v : a[i]) v = -v;
      b[i] = -b[i];
    }
  // Tableau columns: n real + m artificial; basis = artificials.
  const int total = n + m;
  std::vector<std::vector<rat>> t(m, std::vector<rat>(total + 1));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1;
    t[i][total] = b[i];
  }
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;
  // Objective: minimize sum of artificials. Reduced cost row.
  std::vector<rat> z(total + 1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= total; ++j) z[j] += t[i][j];
  // z[j] currently holds sum over rows; cost of artificial columns is 1, so
  // reduced costs for non-basic j are z[j] (for j < n), and objective is z[total].
  while (true) {
    int enter = -1;
    for (int j = 0; j < n; ++j) {  // artificial columns never re-enter
      bool basic = std::find(basis.begin(), basis.end(), j) != basis.end();
      if (basic) continue;
      if (z[j] > 0) { enter = j; break; }  // Bland: smallest index with positive reduced cost
    }
    if (enter < 0) break;
    int leave = -1;
    rat best;
    for (int i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      rat ratio = t[i][total] / t[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) break;  // unbounded (cannot happen in phase I)
    // Pivot.
    rat piv = t[leave][enter];
    for (int j = 0; j <= total; ++j) t[leave][j] /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      rat f = t[i][enter];
      for (int j = 0; j <= total; ++j) t[i][j] -= f * t[leave][j];
    }
    rat fz = z[enter];
    if (fz != 0)
      for (int j = 0; j <= total; ++j) z[j] -= fz * t[leave][j];
    basis[leave] = enter;
  }
  return z[total] == 0;
}

}  // namespace

bool standard_form_feasible(std::vector<std::vector<rat>> a, std::vector<rat> b) {
  return phase_one(std::move(a), std::move(b));
}

bool in_convex_hull(const std::vector<std::vector<rat>>& pts, const std::vector<rat>& p) {
  if (pts.empty()) return false;
  const int dim = static_cast<int>(p.size());
  const int k = static_cast<int>(pts.size());
  // alpha >= 0, sum alpha = 1, sum alpha * pts = p.
  std::vector<std::vector<rat>> a(dim + 1, std::vector<rat>(k));
  std::vector<rat> b(dim + 1);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < dim; ++i) a[i][j] = pts[j][i];
  for (int i = 0; i < dim; ++i) b[i] = p[i];
  for (int j = 0; j < k; ++j) a[dim][j] = 1;
  b[dim] = 1;
  return standard_form_feasible(std::move(a), std::move(b));
}

bool separating_functional_exists(const std::vector<std::vector<rat>>& pts) {
  if (pts.empty()) return false;
  const int dim = static_cast<int>(pts[0].size());
  const int k = static_cast<int>(pts.size());
  // Variables: y = u - v (u,v >= 0), slacks s >= 0.
  //   <y, q> + s_q = -1  for each q;  sum(y) = 0.
  const int nvars = 2 * dim + k;
  std::vector<std::vector<rat>> a(k + 1, std::vector<rat>(nvars));
  std::vector<rat> b(k + 1);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < dim; ++j) {
      a[i][j] = pts[i][j];
      a[i][dim + j] = -pts[i][j];
    }
    a[i][2 * dim + i] = 1;
    b[i] = -1;
  }
  for (int j = 0; j < dim; ++j) {
    a[k][j] = 1;
    a[k][dim + j] = -1;
  }
  b[k] = 0;
  return standard_form_feasible(std::move(a), std::move(b));
}

}  // namespace kmoduli
