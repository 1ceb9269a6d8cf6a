#pragma once

#include "kmoduli/linalg.hpp"
#include "kmoduli/rational.hpp"

#include <cstdint>
#include <vector>

namespace kmoduli {

// Normalized one-parameter subgroup of the torus: integer weights sorted
// non-increasing, coordinate sum zero, gcd one.
struct one_ps {
  ivec weights;

  bool operator==(const one_ps& o) const { return weights == o.weights; }
  bool operator<(const one_ps& o) const { return weights < o.weights; }
  std::string str() const;
};

// Canonical form of a raw integer weight vector: primitive, sorted
// non-increasing.  Throws trace_error when the sum is nonzero and
// degenerate_error on the zero vector.  Idempotent.
one_ps normalize_ops(ivec raw);

// Dual subgroup: negate and re-sort.
one_ps dual(const one_ps& l);

// Exponent vectors of total degree d in n+1 variables (colex order, stable).
std::vector<ivec> degree_monomials(int n, int d);

// Hilbert-Mumford weight sum(m_i * r_i); integer-valued.
std::int64_t weight(const ivec& m, const one_ps& l);

}  // namespace kmoduli
