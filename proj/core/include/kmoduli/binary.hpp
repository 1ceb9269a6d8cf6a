#pragma once

#include "kmoduli/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace kmoduli {

// Homogeneous binary form sum a_i x^i y^(deg-i); coefficients exact.
struct binary_form {
  std::vector<rat> coeffs;  // length deg+1, index = x-exponent

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const;

  static binary_form from_sparse(int deg, const std::map<int, rat>& terms);
};

// Multiset of root multiplicities over the algebraic closure, including the
// points (1:0) and (0:1); computed by exact squarefree (Yun) decomposition.
std::vector<int> multiplicity_profile(const binary_form& f);

enum class pair_status { stable, strictly_semistable, unstable };

std::string to_string(pair_status s);

// Complete GIT_t test for a pair of binary forms of degrees (d, e):
// stable iff mult_p(f) + t*mult_p(h) < d/2 + t*e/2 at every point p.
pair_status binary_pair_status(const binary_form& f, const binary_form& h, const rat& t);

// All finite positive t solving m_d + t*m_e = d/2 + t*e/2 with admissible
// integer multiplicities.
std::vector<rat> binary_walls(int d, int e);

// Exact univariate helpers (exposed for tests).
std::vector<rat> poly_gcd(std::vector<rat> a, std::vector<rat> b);
std::vector<std::pair<int, std::vector<rat>>> squarefree_decomposition(std::vector<rat> f);

}  // namespace kmoduli
