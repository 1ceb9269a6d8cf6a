#pragma once

#include "kmoduli/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace kmoduli {

using ivec = std::vector<std::int64_t>;
using qvec = std::vector<rat>;
using qmat = std::vector<qvec>;

std::int64_t gcd64(std::int64_t a, std::int64_t b);

// Divide by the gcd of the entries (vector must be nonzero).
ivec primitive(ivec v);

std::int64_t dot(const ivec& a, const ivec& b);

// Solve A x = b by Gaussian elimination; empty optional when singular/inconsistent.
std::optional<qvec> solve_linear(qmat a, qvec b);

// One-dimensional integer kernel of an integer matrix (rows = equations).
// Returns a primitive generator when the kernel has rank exactly 1.
std::optional<ivec> kernel_generator(const std::vector<ivec>& rows, int ncols);

// Rank of a rational matrix.
int rank(qmat a);

// Signature (#positive, #negative, #zero) of a symmetric rational matrix,
// by exact congruence diagonalization.
struct signature_t { int pos = 0, neg = 0, zero = 0; };
signature_t symmetric_signature(qmat a);

// Determinant of a rational matrix.
rat determinant(qmat a);

}  // namespace kmoduli
