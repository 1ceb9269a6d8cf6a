#include "kmoduli/linalg.hpp"

#include "kmoduli/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace kmoduli {

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  a = std::abs(a);
  b = std::abs(b);
  while (b) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

ivec primitive(ivec v) {
  std::int64_t g = 0;
  for (auto x : v) g = gcd64(g, x);
  if (g == 0) throw degenerate_error("primitive: zero vector");
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

std::int64_t dot(const ivec& a, const ivec& b) {
  if (a.size() != b.size()) throw shape_error("dot: length mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::optional<qvec> solve_linear(qmat a, qvec b) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return qvec{};
  const int m = static_cast<int>(a[0].size());
  // Augment.
  for (int i = 0; i < n; ++i) a[i].push_back(b[i]);
  int row = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < m && row < n; ++col) {
    int p = -1;
    for (int i = row; i < n; ++i)
      if (a[i][col] != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(a[p], a[row]);
    rat inv = a[row][col];
    for (int j = col; j <= m; ++j) a[row][j] /= inv;
    for (int i = 0; i < n; ++i) {
      if (i == row || a[i][col] == 0) continue;
      rat f = a[i][col];
      for (int j = col; j <= m; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (int i = row; i < n; ++i)
    if (a[i][m] != 0) return std::nullopt;  // inconsistent
  if (static_cast<int>(pivot_col.size()) < m) return std::nullopt;  // underdetermined
  qvec x(m);
  for (int i = 0; i < m; ++i) x[pivot_col[i]] = a[i][m];
  return x;
}

std::optional<ivec> kernel_generator(const std::vector<ivec>& rows, int ncols) {
  qmat a;
  for (const auto& r : rows) {
    qvec q(ncols);
    for (int j = 0; j < ncols; ++j) q[j] = rat(r[j]);
    a.push_back(std::move(q));
  }
  // Row reduce; find free columns.
  int row = 0;
  const int n = static_cast<int>(a.size());
  std::vector<int> pivot_of_col(ncols, -1);
  for (int col = 0; col < ncols && row < n; ++col) {
    int p = -1;
    for (int i = row; i < n; ++i)
      if (a[i][col] != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(a[p], a[row]);
    rat inv = a[row][col];
    for (int j = col; j < ncols; ++j) a[row][j] /= inv;
    for (int i = 0; i < n; ++i) {
      if (i == row || a[i][col] == 0) continue;
      rat f = a[i][col];
      for (int j = col; j < ncols; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_of_col[col] = row;
    ++row;
  }
  int nfree = 0, free_col = -1;
  for (int col = 0; col < ncols; ++col)
    if (pivot_of_col[col] < 0) { ++nfree; free_col = col; }
  if (nfree != 1) return std::nullopt;
  // Back-substitute with the free variable set to 1.
  qvec x(ncols);
  x[free_col] = 1;
  for (int col = 0; col < ncols; ++col) {
    int pr = pivot_of_col[col];
    if (pr < 0) continue;
    x[col] = -a[pr][free_col];
  }
  // Clear denominators, reduce to primitive integer vector.
  bigint lcm = 1;
  for (const auto& v : x) lcm = boost::multiprecision::lcm(lcm, denominator(v));
  std::vector<bigint> w(ncols);
  for (int j = 0; j < ncols; ++j) w[j] = numerator(x[j]) * (lcm / denominator(x[j]));
  bigint g = 0;
  for (const auto& v : w) g = boost::multiprecision::gcd(g, v);
  if (g == 0) return std::nullopt;
  ivec out(ncols);
  for (int j = 0; j < ncols; ++j) {
    bigint q = w[j] / g;
    out[j] = static_cast<std::int64_t>(q);
  }
  return out;
}

int rank(qmat a) {
  if (a.empty()) return 0;
  const int n = static_cast<int>(a.size());
  const int m = static_cast<int>(a[0].size());
  int row = 0;
  for (int col = 0; col < m && row < n; ++col) {
    int p = -1;
    for (int i = row; i < n; ++i)
      if (a[i][col] != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(a[p], a[row]);
    for (int i = row + 1; i < n; ++i) {
      if (a[i][col] == 0) continue;
      rat f = a[i][col] / a[row][col];
      for (int j = col; j < m; ++j) a[i][j] -= f * a[row][j];
    }
    ++row;
  }
  return row;
}

signature_t symmetric_signature(qmat a) {
  const int n = static_cast<int>(a.size());
  signature_t sig;
  // Congruence diagonalization with symmetric pivoting.
  std::vector<int> alive(n, 1);
  qmat m = a;
  for (int step = 0; step < n; ++step) {
    int p = -1;
    for (int i = 0; i < n; ++i)
      if (alive[i] && m[i][i] != 0) { p = i; break; }
    if (p < 0) {
      // Look for an off-diagonal nonzero pair among alive indices.
      int pi = -1, pj = -1;
      for (int i = 0; i < n && pi < 0; ++i)
        if (alive[i])
          for (int j = i + 1; j < n; ++j)
            if (alive[j] && m[i][j] != 0) { pi = i; pj = j; break; }
      if (pi < 0) {
        for (int i = 0; i < n; ++i)
          if (alive[i]) ++sig.zero;
        return sig;
      }
      // Row/col operation: add row/col pj to pi creates a nonzero diagonal.
      for (int k = 0; k < n; ++k) m[pi][k] += m[pj][k];
      for (int k = 0; k < n; ++k) m[k][pi] += m[k][pj];
      p = pi;
    }
    rat d = m[p][p];
    if (d > 0) ++sig.pos; else ++sig.neg;
    for (int i = 0; i < n; ++i) {
      if (!alive[i] || i == p || m[i][p] == 0) continue;
      rat f = m[i][p] / d;
      for (int k = 0; k < n; ++k) m[i][k] -= f * m[p][k];
      for (int k = 0; k < n; ++k) m[k][i] -= f * m[k][p];  // keep symmetry
    }
    alive[p] = 0;
  }
  return sig;
}

rat determinant(qmat a) {
  const int n = static_cast<int>(a.size());
  rat det = 1;
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int i = col; i < n; ++i)
      if (a[i][col] != 0) { p = i; break; }
    if (p < 0) return rat(0);
    if (p != col) { std::swap(a[p], a[col]); det = -det; }
    det *= a[col][col];
    for (int i = col + 1; i < n; ++i) {
      if (a[i][col] == 0) continue;
      rat f = a[i][col] / a[col][col];
      for (int j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  return det;
}

}  // namespace kmoduli
