#pragma once

#include "kmoduli/ops.hpp"
#include "kmoduli/rational.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace kmoduli {

// VGIT problem for pairs of forms of degrees (d, e) on P^n, polarization
// ratio t.  kind "plucker-pair" treats the first factor as a pencil of
// degree-d forms with Pluecker weights w(m1) + w(m2).
struct git_problem {
  enum class kind_t { hypersurface_pair, plucker_pair };
  kind_t kind = kind_t::hypersurface_pair;
  int n = 2;
  int d = 4;
  int e = 1;
  int cap = 35;  // refuse when C(n+d, n) exceeds this

  std::int64_t monomial_count() const;
  void check_budget() const;
};

struct pair_support {
  std::vector<ivec> f_support;  // degree-d exponent vectors
  std::vector<ivec> h_support;  // degree-e exponent vectors
};

// max weight over Supp(f) + t * max weight over Supp(h).
rat mu_t(const pair_support& pair, const one_ps& l, const rat& t);

// Torus semistability in the given coordinates: the weighted barycenter
// lies in Conv(Supp f) + t * Conv(Supp h).
bool centroid_semistable(const pair_support& pair, const rat& t);

// Brute-force counterpart via exact linear feasibility (testing oracle).
bool torus_semistable_lp(const pair_support& pair, const rat& t);

enum class set_relation { strict, closed, equal };

struct destabilizing_family {
  one_ps lambda;
  int pivot = 0;                   // coordinate index into lambda.weights
  rat t_lo, t_hi;                  // validity interval (when attached to a chamber)
  std::vector<ivec> f_monomials;   // degree-d monomials
  std::vector<ivec> h_monomials;   // degree-e monomials x_j with r_j <= r_p

  bool operator==(const destabilizing_family& o) const {
    return f_monomials == o.f_monomials && h_monomials == o.h_monomials;
  }
};

// Monomial sets for a fixed (lambda, pivot, t): degree-d monomials with
// w(m) + t*r_p  <rel>  0, plus the h-monomials { x_j : r_j <= r_p }.
destabilizing_family family_at(const git_problem& problem, const one_ps& l, int pivot,
                               const rat& t, set_relation rel);

// Pruned candidate set (closed under duality).
std::vector<one_ps> enumerate_candidates(const git_problem& problem);

// All t = -w(m)/r_p in the open t-domain, for candidate subgroups.
std::vector<rat> candidate_walls(const git_problem& problem);
std::vector<rat> candidate_walls(const git_problem& problem,
                                 const std::vector<one_ps>& candidates);

struct chamber {
  rat t_lo;
  std::optional<rat> t_hi;  // empty = unbounded above
  std::vector<destabilizing_family> maximal_families;
};

struct wall_chamber_decomposition_t {
  git_problem problem;
  std::vector<rat> walls;        // strictly inside (0, t_max)
  std::optional<rat> t_max;      // empty = +infinity
  std::vector<chamber> chambers; // tile (0, t_max)
};

wall_chamber_decomposition_t wall_chamber_decomposition(const git_problem& problem);

// Largest t with a torus-semistable generic pair; empty optional = +infinity.
std::optional<rat> t_upper_bound(const git_problem& problem);

}  // namespace kmoduli
