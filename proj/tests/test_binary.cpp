#include <doctest.h>

#include "kmoduli/binary.hpp"
#include "kmoduli/errors.hpp"
#include "kmoduli/git.hpp"

#include <algorithm>
#include <map>
#include <random>

using namespace kmoduli;

namespace {

// Multiply a form by (a x + b y).
binary_form times_linear(const binary_form& f, const rat& a, const rat& b) {
  binary_form g;
  g.coeffs.assign(f.coeffs.size() + 1, rat(0));
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    g.coeffs[i + 1] += a * f.coeffs[i];
    g.coeffs[i] += b * f.coeffs[i];
  }
  return g;
}

binary_form one() {
  binary_form f;
  f.coeffs = {rat(1)};
  return f;
}

// Build prod (a_i x + b_i y)^(m_i) from explicit root data.
binary_form from_roots(const std::vector<std::pair<std::pair<int, int>, int>>& roots) {
  binary_form f = one();
  for (const auto& [ab, mult] : roots)
    for (int k = 0; k < mult; ++k) f = times_linear(f, rat(ab.first), rat(ab.second));
  return f;
}

std::vector<int> sorted_profile(std::vector<int> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

}  // namespace

TEST_CASE("multiplicity profiles") {
  // x^5 y^3
  binary_form f;
  f.coeffs.assign(9, rat(0));
  f.coeffs[5] = rat(1);
  CHECK(multiplicity_profile(f) == sorted_profile({5, 3}));

  // x^8 + y^8: squarefree
  binary_form g;
  g.coeffs.assign(9, rat(0));
  g.coeffs[0] = rat(1);
  g.coeffs[8] = rat(1);
  CHECK(multiplicity_profile(g) == std::vector<int>(8, 1));

  // (x^2 - y^2)^2 y^4 -> {4, 2, 2}
  binary_form h = from_roots({{{1, 1}, 2}, {{1, -1}, 2}, {{0, 1}, 4}});
  CHECK(multiplicity_profile(h) == sorted_profile({2, 2, 4}));

  binary_form zero;
  zero.coeffs.assign(3, rat(0));
  CHECK_THROWS_AS(multiplicity_profile(zero), degenerate_error);
}

TEST_CASE("profiles sum to the degree and survive substitution") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> coef(-3, 3), mult(1, 4);
  for (int iter = 0; iter < 60; ++iter) {
    // Random root data with distinct roots.
    std::vector<std::pair<std::pair<int, int>, int>> roots;
    std::map<rat, bool> used;
    int total = 0;
    while (total < 8) {
      int a = coef(rng), b = coef(rng);
      if (a == 0 && b == 0) continue;
      rat key = (b == 0) ? rat(100000) : make_rat(a, b);
      if (used.count(key)) continue;
      used[key] = true;
      int m = std::min(mult(rng), 8 - total);
      roots.push_back({{a, b}, m});
      total += m;
    }
    binary_form f = from_roots(roots);
    auto prof = multiplicity_profile(f);
    int sum = 0;
    for (int m : prof) sum += m;
    CHECK(sum == 8);
    std::vector<int> expected;
    for (const auto& r : roots) expected.push_back(r.second);
    CHECK(prof == sorted_profile(expected));
    // Invertible substitution x -> x + 2y, y -> y - x must preserve it
    // (realized on root data: the roots move, multiplicities stay).
    std::vector<std::pair<std::pair<int, int>, int>> subbed;
    for (const auto& [ab, m] : roots) {
      // (a x + b y) o M for M = [[1,2],[-1,1]]: new (a', b') = (a - b, 2a + b)
      subbed.push_back({{ab.first - ab.second, 2 * ab.first + ab.second}, m});
    }
    binary_form g = from_roots(subbed);
    CHECK(multiplicity_profile(g) == prof);
  }
}

TEST_CASE("pair status on the worked examples") {
  // f8 = x^5 y^3, f2 = xy, t = 1: at (0:1) the sum 5 + 1 exceeds 5.
  binary_form f8;
  f8.coeffs.assign(9, rat(0));
  f8.coeffs[5] = rat(1);
  binary_form f2;
  f2.coeffs.assign(3, rat(0));
  f2.coeffs[1] = rat(1);
  CHECK(binary_pair_status(f8, f2, rat(1)) == pair_status::unstable);

  // f8 = x^4(x^4 + y^4), f2 = y^2: stable at t = 3, strictly semistable at 4.
  binary_form g8;
  g8.coeffs.assign(9, rat(0));
  g8.coeffs[8] = rat(1);
  g8.coeffs[4] = rat(1);
  binary_form g2;
  g2.coeffs.assign(3, rat(0));
  g2.coeffs[0] = rat(1);
  CHECK(binary_pair_status(g8, g2, rat(3)) == pair_status::stable);
  CHECK(binary_pair_status(g8, g2, rat(4)) == pair_status::strictly_semistable);
  CHECK(binary_pair_status(g8, g2, rat(5)) == pair_status::unstable);

  // Squarefree disjoint pair: stable for every t.
  binary_form h8 = from_roots({{{1, 1}, 1}, {{1, -1}, 1}, {{1, 2}, 1}, {{2, 1}, 1},
                               {{1, 3}, 1}, {{3, 1}, 1}, {{1, -2}, 1}, {{2, -1}, 1}});
  binary_form h2 = from_roots({{{1, 5}, 1}, {{5, 1}, 1}});
  for (const auto& t : {rat(1, 7), rat(1), rat(7, 2), rat(41)})
    CHECK(binary_pair_status(h8, h2, t) == pair_status::stable);

  CHECK_THROWS_AS(binary_pair_status(f8, binary_form{{rat(0), rat(0), rat(0)}}, rat(1)),
                  degenerate_error);
}

TEST_CASE("binary walls") {
  CHECK(binary_walls(8, 2) == std::vector<rat>{rat(1), rat(2), rat(3), rat(4)});
  CHECK(binary_walls(2, 2) == std::vector<rat>{rat(1)});
  // Swap symmetry for equal degrees: walls closed under t -> 1/t.
  auto w88 = binary_walls(8, 8);
  for (const auto& t : w88)
    CHECK(std::find(w88.begin(), w88.end(), 1 / t) != w88.end());
  CHECK_THROWS_AS(binary_walls(2, 8), domain_error);
}

TEST_CASE("status agrees with a direct root-data oracle") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> coef(-4, 4), mult8(1, 5), mult2(1, 2), tpick(1, 9);
  int cases = 0;
  while (cases < 200) {
    // Root data for f8 and f2, with controlled sharing.
    std::vector<std::pair<std::pair<int, int>, int>> r8, r2;
    std::map<std::pair<int, int>, int> normalized;
    auto norm_root = [&](int a, int b) {
      if (b < 0 || (b == 0 && a < 0)) { a = -a; b = -b; }
      int g = std::gcd(std::abs(a), std::abs(b));
      return std::make_pair(a / g, b / g);
    };
    int t8 = 0;
    while (t8 < 8) {
      int a = coef(rng), b = coef(rng);
      if (!a && !b) continue;
      auto key = norm_root(a, b);
      int m = std::min(mult8(rng), 8 - t8);
      bool dup = false;
      for (auto& [k, v] : normalized)
        if (k == key) dup = true;
      if (dup) continue;
      normalized[key] = m;
      r8.push_back({key, m});
      t8 += m;
    }
    int t2 = 0;
    std::map<std::pair<int, int>, int> m2map;
    while (t2 < 2) {
      int a = coef(rng), b = coef(rng);
      if (!a && !b) continue;
      auto key = norm_root(a, b);
      if (m2map.count(key)) continue;
      int m = std::min(mult2(rng), 2 - t2);
      m2map[key] = m;
      r2.push_back({key, m});
      t2 += m;
    }
    binary_form f8 = from_roots(r8), f2 = from_roots(r2);
    rat t(tpick(rng), 2);
    // Oracle: evaluate the multiplicity criterion directly on the root data.
    rat bound = rat(4) + t;
    rat best = 0;
    for (const auto& [k8, m8] : r8) {
      rat v = rat(m8);
      for (const auto& [k2, m2] : r2)
        if (k2 == k8) v += t * rat(m2);
      best = std::max(best, v);
    }
    for (const auto& [k2, m2] : r2) {
      rat v = t * rat(m2);
      for (const auto& [k8, m8] : r8)
        if (k8 == k2) v += rat(m8);
      best = std::max(best, v);
    }
    pair_status expected = best < bound    ? pair_status::stable
                           : best == bound ? pair_status::strictly_semistable
                                           : pair_status::unstable;
    CHECK(binary_pair_status(f8, f2, t) == expected);
    ++cases;
  }
}

TEST_CASE("monomial pairs agree with the torus verdict") {
  // For C*-invariant pairs the complete P^1 test and the centroid test on
  // the same supports coincide at semistability.
  for (int i8 = 0; i8 <= 8; ++i8) {
    for (int i2 = 0; i2 <= 2; ++i2) {
      binary_form f8;
      f8.coeffs.assign(9, rat(0));
      f8.coeffs[i8] = rat(1);
      binary_form f2;
      f2.coeffs.assign(3, rat(0));
      f2.coeffs[i2] = rat(1);
      pair_support ps;
      ps.f_support.push_back({i8, 8 - i8});
      ps.h_support.push_back({i2, 2 - i2});
      for (const auto& t : {rat(1, 2), rat(3, 2), rat(5, 2), rat(7, 2), rat(9, 2)}) {
        bool semi = binary_pair_status(f8, f2, t) != pair_status::unstable;
        CHECK(semi == centroid_semistable(ps, t));
      }
    }
  }
}

TEST_CASE("status is invariant under coordinate swap and rescaling") {
  std::mt19937_64 rng(55);
  std::uniform_int_distribution<int> coef(-4, 4), tpick(1, 9);
  for (int iter = 0; iter < 60; ++iter) {
    binary_form f8;
    f8.coeffs.assign(9, rat(0));
    bool nonzero = false;
    for (auto& c : f8.coeffs) {
      c = rat(coef(rng));
      nonzero = nonzero || c != 0;
    }
    if (!nonzero) continue;
    binary_form f2;
    f2.coeffs = {rat(coef(rng)), rat(coef(rng)), rat(coef(rng))};
    if (f2.is_zero()) continue;
    rat t(tpick(rng), 2);
    auto base = binary_pair_status(f8, f2, t);
    // Swap x and y: reverse the coefficient vectors.
    binary_form g8 = f8, g2 = f2;
    std::reverse(g8.coeffs.begin(), g8.coeffs.end());
    std::reverse(g2.coeffs.begin(), g2.coeffs.end());
    CHECK(binary_pair_status(g8, g2, t) == base);
    // Rescale either form.
    binary_form h8 = f8, h2 = f2;
    for (auto& c : h8.coeffs) c *= rat(7, 3);
    CHECK(binary_pair_status(h8, f2, t) == base);
    for (auto& c : h2.coeffs) c *= rat(-5, 2);
    CHECK(binary_pair_status(f8, h2, t) == base);
  }
}
