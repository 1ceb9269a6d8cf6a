#include "kmoduli/binary.hpp"

#include "kmoduli/errors.hpp"

#include <algorithm>
#include <set>

namespace kmoduli {

namespace {

using poly = std::vector<rat>;  // dense, index = power of x, no trailing zeros

void trim(poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const poly& p) { return static_cast<int>(p.size()) - 1; }

poly derivative(const poly& p) {
  poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * rat(static_cast<int>(i)));
  trim(d);
  return d;
}

poly monic(poly p) {
  trim(p);
  if (p.empty()) return p;
  rat lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

// Remainder of a by b (b nonzero).
poly rem(poly a, const poly& b) {
  trim(a);
  while (deg(a) >= deg(b) && !a.empty()) {
    rat f = a.back() / b.back();
    int shift = deg(a) - deg(b);
    for (int i = 0; i <= deg(b); ++i) a[i + shift] -= f * b[i];
    trim(a);
  }
  return a;
}

poly quot(poly a, const poly& b) {
  trim(a);
  if (b.empty()) throw degenerate_error("division by zero polynomial");
  poly q(std::max(0, deg(a) - deg(b) + 1));
  while (deg(a) >= deg(b) && !a.empty()) {
    rat f = a.back() / b.back();
    int shift = deg(a) - deg(b);
    q[shift] = f;
    for (int i = 0; i <= deg(b); ++i) a[i + shift] -= f * b[i];
    trim(a);
  }
  return q;
}

poly gcd_impl(poly a, poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    poly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a));
}

}  // namespace

std::vector<rat> poly_gcd(std::vector<rat> a, std::vector<rat> b) {
  return gcd_impl(std::move(a), std::move(b));
}

// Yun's algorithm: f = prod a_k^k with a_k squarefree and pairwise coprime.
std::vector<std::pair<int, poly>> squarefree_decomposition(poly f) {
  trim(f);
  std::vector<std::pair<int, poly>> parts;
  if (deg(f) <= 0) return parts;
  f = monic(std::move(f));
  poly df = derivative(f);
  poly g = gcd_impl(f, df);
  poly w = quot(f, g);
  poly y = quot(df, g);
  int k = 1;
  while (deg(w) > 0) {
    poly z = y;
    poly dw = derivative(w);
    for (std::size_t i = 0; i < dw.size(); ++i) {
      if (z.size() <= i) z.resize(i + 1);
      z[i] -= dw[i];
    }
    trim(z);
    poly a = gcd_impl(w, z);
    if (deg(a) > 0) parts.push_back({k, a});
    w = quot(w, a.empty() ? poly{rat(1)} : a);
    if (!z.empty())
      y = quot(z, a.empty() ? poly{rat(1)} : a);
    else
      y = {};
    ++k;
    if (k > 512) throw degenerate_error("squarefree decomposition did not terminate");
  }
  return parts;
}

bool binary_form::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const rat& c) { return c == 0; });
}

binary_form binary_form::from_sparse(int degv, const std::map<int, rat>& terms) {
  binary_form f;
  f.coeffs.assign(degv + 1, rat(0));
  for (const auto& [i, c] : terms) {
    if (i < 0 || i > degv) throw shape_error("sparse exponent out of range");
    f.coeffs[i] = c;
  }
  return f;
}

std::vector<int> multiplicity_profile(const binary_form& f) {
  if (f.is_zero()) throw degenerate_error("zero form");
  poly p = f.coeffs;
  // Leading zero coefficients in x encode the root at (0:1); trailing
  // (high x-power missing) encode the root at (1:0).
  int d = f.degree();
  trim(p);
  int mult_inf = d - deg(p);  // (1:0)
  std::vector<int> profile;
  if (mult_inf > 0) profile.push_back(mult_inf);
  // Finite roots (including x = 0, i.e. (0:1)) of p(x) = f(x, 1).
  for (const auto& [k, a] : squarefree_decomposition(p))
    for (int i = 0; i < deg(a); ++i) profile.push_back(k);
  std::sort(profile.begin(), profile.end(), std::greater<>());
  return profile;
}

std::string to_string(pair_status s) {
  switch (s) {
    case pair_status::stable: return "stable";
    case pair_status::strictly_semistable: return "strictly-semistable";
    default: return "unstable";
  }
}

pair_status binary_pair_status(const binary_form& f, const binary_form& h, const rat& t) {
  if (f.is_zero() || h.is_zero()) throw degenerate_error("zero form in pair");
  if (t <= 0) throw domain_error("binary_pair_status needs t > 0");
  const int d = f.degree(), e = h.degree();
  poly fp = f.coeffs, hp = h.coeffs;
  trim(fp);
  trim(hp);
  int finf = d - deg(fp), hinf = e - deg(hp);
  auto fparts = squarefree_decomposition(fp);
  auto hparts = squarefree_decomposition(hp);

  rat bound = rat(d, 2) + t * rat(e, 2);
  rat best = 0;  // max over points of mult_f + t*mult_h
  auto consider = [&](int mf, int mh) {
    rat v = rat(mf) + t * rat(mh);
    if (v > best) best = v;
  };
  consider(finf, hinf);
  for (const auto& [k, a] : fparts) consider(k, 0);
  for (const auto& [j, b] : hparts) consider(0, j);
  for (const auto& [k, a] : fparts)
    for (const auto& [j, b] : hparts) {
      poly g = gcd_impl(a, b);
      if (deg(g) > 0) consider(k, j);  // shared root with exact multiplicities (k, j)
    }

  if (best < bound) return pair_status::stable;
  if (best == bound) return pair_status::strictly_semistable;
  return pair_status::unstable;
}

std::vector<rat> binary_walls(int d, int e) {
  if (d < e || e < 1) throw domain_error("binary_walls needs d >= e >= 1");
  std::set<rat> walls;
  for (int md = 0; md <= d; ++md)
    for (int me = 0; me <= e; ++me) {
      // md + t*me = d/2 + t*e/2  =>  t = (d/2 - md) / (me - e/2)
      rat num = rat(d, 2) - rat(md);
      rat den = rat(me) - rat(e, 2);
      if (den == 0) continue;
      rat t = num / den;
      if (t > 0) walls.insert(t);
    }
  return {walls.begin(), walls.end()};
}

}  // namespace kmoduli
