#include "kmoduli/ops.hpp"

#include "kmoduli/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace kmoduli {

std::string one_ps::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i) os << ",";
    os << weights[i];
  }
  os << ")";
  return os.str();
}

one_ps normalize_ops(ivec raw) {
  std::int64_t tr = std::accumulate(raw.begin(), raw.end(), std::int64_t(0));
  if (tr != 0) throw trace_error("one-parameter subgroup has nonzero trace");
  bool all_zero = std::all_of(raw.begin(), raw.end(), [](std::int64_t x) { return x == 0; });
  if (all_zero) throw degenerate_error("zero weight vector");
  raw = primitive(std::move(raw));
  std::sort(raw.begin(), raw.end(), std::greater<>());
  return one_ps{std::move(raw)};
}

one_ps dual(const one_ps& l) {
  ivec w = l.weights;
  for (auto& x : w) x = -x;
  return normalize_ops(std::move(w));
}

std::vector<ivec> degree_monomials(int n, int d) {
  std::vector<ivec> out;
  ivec cur(n + 1, 0);
  std::function<void(int, int)> rec = [&](int pos, int rem) {
    if (pos == n) {
      cur[pos] = rem;
      out.push_back(cur);
      return;
    }
    for (int k = rem; k >= 0; --k) {
      cur[pos] = k;
      rec(pos + 1, rem - k);
    }
  };
  rec(0, d);
  return out;
}

std::int64_t weight(const ivec& m, const one_ps& l) {
  if (m.size() != l.weights.size()) throw shape_error("weight: length mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < m.size(); ++i) s += m[i] * l.weights[i];
  return s;
}

}  // namespace kmoduli
