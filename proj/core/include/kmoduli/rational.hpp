#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace kmoduli {

using bigint = boost::multiprecision::cpp_int;
using rat = boost::multiprecision::cpp_rational;

// Canonical serialization: "p/q" in lowest terms, or "p" when q = 1.
std::string rat_str(const rat& r);

// Accepts "p", "p/q", optional sign; whitespace trimmed.  Throws parse_error.
rat rat_parse(const std::string& s);

inline rat make_rat(std::int64_t num, std::int64_t den = 1) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return rat(bigint(num), bigint(den));
}

inline int sign(const rat& r) { return r.sign(); }

// An exact value affine in the coefficient parameter c: value(c) = c0 + c1*c.
struct linear_in_c {
  rat c0, c1;

  linear_in_c() = default;
  linear_in_c(rat constant, rat slope) : c0(std::move(constant)), c1(std::move(slope)) {}

  rat eval(const rat& c) const { return c0 + c1 * c; }
  bool is_constant() const { return c1 == 0; }

  linear_in_c operator+(const linear_in_c& o) const { return {c0 + o.c0, c1 + o.c1}; }
  linear_in_c operator-(const linear_in_c& o) const { return {c0 - o.c0, c1 - o.c1}; }
  bool operator==(const linear_in_c& o) const { return c0 == o.c0 && c1 == o.c1; }

  // Root of c0 + c1*c = 0, if the function is non-constant.
  bool has_root() const { return c1 != 0; }
  rat root() const { return -c0 / c1; }

  std::string str() const;  // e.g. "5/2 - 3c"
};

// Interpolate an affine function through two points; verify extra samples lie on it.
linear_in_c affine_fit(const rat& x0, const rat& y0, const rat& x1, const rat& y1);

}  // namespace kmoduli
