#include "kmoduli/rational.hpp"

#include "kmoduli/errors.hpp"

#include <cctype>
#include <sstream>

namespace kmoduli {

std::string rat_str(const rat& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

rat rat_parse(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  if (b == e) throw parse_error("empty rational literal");
  std::string t = s.substr(b, e - b);
  auto slash = t.find('/');
  auto parse_int = [&](const std::string& u) -> bigint {
    if (u.empty()) throw parse_error("bad rational literal '" + t + "'");
    std::size_t i = (u[0] == '+' || u[0] == '-') ? 1 : 0;
    if (i == u.size()) throw parse_error("bad rational literal '" + t + "'");
    for (; i < u.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(u[i])))
        throw parse_error("bad rational literal '" + t + "'");
    return bigint(u);
  };
  if (slash == std::string::npos) return rat(parse_int(t));
  bigint num = parse_int(t.substr(0, slash));
  bigint den = parse_int(t.substr(slash + 1));
  if (den == 0) throw parse_error("zero denominator in '" + t + "'");
  return rat(num, den);
}

std::string linear_in_c::str() const {
  if (c1 == 0) return rat_str(c0);
  std::ostringstream os;
  if (c0 != 0) os << rat_str(c0) << (c1 > 0 ? " + " : " - ");
  else if (c1 < 0) os << "-";
  rat a = abs(c1);
  if (a != 1) os << rat_str(a) << "*";
  os << "c";
  return os.str();
}

linear_in_c affine_fit(const rat& x0, const rat& y0, const rat& x1, const rat& y1) {
  if (x0 == x1) throw domain_error("affine_fit: coincident sample points");
  rat slope = (y1 - y0) / (x1 - x0);
  return {y0 - slope * x0, slope};
}

}  // namespace kmoduli
