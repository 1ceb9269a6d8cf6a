#include "kmoduli/git.hpp"

#include "kmoduli/errors.hpp"
#include "kmoduli/lp.hpp"
#include "kmoduli/polygon.hpp"

#include <algorithm>
#include <bitset>
#include <map>
#include <set>

namespace kmoduli {

namespace {

using mask_t = std::bitset<192>;

std::int64_t binomial(int a, int b) {
  if (b < 0 || b > a) return 0;
  std::int64_t r = 1;
  for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
  return r;
}

// First-factor monomial set: plain degree-d exponent vectors, or sums of
// distinct pairs for the pencil (Pluecker) problem.
std::vector<ivec> fside_monomials(const git_problem& p) {
  auto mons = degree_monomials(p.n, p.d);
  if (p.kind == git_problem::kind_t::hypersurface_pair) return mons;
  std::set<ivec> sums;
  for (std::size_t i = 0; i < mons.size(); ++i)
    for (std::size_t j = i + 1; j < mons.size(); ++j) {
      ivec s(mons[i].size());
      for (std::size_t k = 0; k < s.size(); ++k) s[k] = mons[i][k] + mons[j][k];
      sums.insert(std::move(s));
    }
  return {sums.begin(), sums.end()};
}

int fside_degree(const git_problem& p) {
  return p.kind == git_problem::kind_t::plucker_pair ? 2 * p.d : p.d;
}

struct raw_family {
  const one_ps* lambda;
  int pivot_index;          // index into the degree-e monomial list
  std::int64_t pivot_weight;
  mask_t f_mask;
  mask_t h_mask;
};

// First-factor items the family masks index: plain monomials, or (for the
// pencil problem) the Pluecker coordinates, i.e. unordered pairs of distinct
// degree-d monomials.
struct fside_index {
  std::vector<ivec> out;                      // exponent vector per item
  std::vector<std::pair<int, int>> pairs;     // pencil: generator indices
  std::vector<ivec> dmons;                    // pencil: degree-d monomials
  bool pencil = false;
};

fside_index make_fside_index(const git_problem& p) {
  fside_index fi;
  if (p.kind == git_problem::kind_t::hypersurface_pair) {
    fi.out = degree_monomials(p.n, p.d);
    return fi;
  }
  fi.pencil = true;
  fi.dmons = degree_monomials(p.n, p.d);
  const int nd = static_cast<int>(fi.dmons.size());
  for (int i = 0; i < nd; ++i)
    for (int j = i + 1; j < nd; ++j) {
      ivec s(fi.dmons[i].size());
      for (std::size_t k = 0; k < s.size(); ++k) s[k] = fi.dmons[i][k] + fi.dmons[j][k];
      fi.out.push_back(std::move(s));
      fi.pairs.push_back({i, j});
    }
  return fi;
}

// Distinct pivot weights of the second factor, with a representative monomial.
std::vector<std::pair<std::int64_t, int>> pivot_weights(const std::vector<ivec>& emons,
                                                        const one_ps& l) {
  std::map<std::int64_t, int> seen;
  for (std::size_t j = 0; j < emons.size(); ++j) {
    std::int64_t w = weight(emons[j], l);
    auto it = seen.find(w);
    if (it == seen.end()) seen[w] = static_cast<int>(j);
  }
  return {seen.begin(), seen.end()};
}

// All families over the candidate list at parameter t = a/b, deduplicated by
// monomial content (canonical smallest (lambda, pivot) kept) and pruned to
// the maximal ones under componentwise containment.
//
// For the pencil problem a family is generated by a pair of weight
// thresholds (alpha, beta): one generator supported below alpha, the other
// below beta, with alpha + beta + t*w_p < 0.  Only such split families are
// realizable by actual pencils; arbitrary sets of Pluecker coordinates are
// not.
std::vector<raw_family> maximal_families_at(const fside_index& fi,
                                            const std::vector<one_ps>& cands,
                                            const std::vector<ivec>& emons,
                                            const rat& t) {
  std::int64_t a = static_cast<std::int64_t>(numerator(t));
  std::int64_t b = static_cast<std::int64_t>(denominator(t));
  std::vector<raw_family> fams;
  for (const auto& l : cands) {
    mask_t hm_for[64];
    std::vector<std::pair<std::int64_t, int>> pivots = pivot_weights(emons, l);
    for (std::size_t pi = 0; pi < pivots.size() && pi < 64; ++pi) {
      mask_t hm;
      for (std::size_t j = 0; j < emons.size(); ++j)
        if (weight(emons[j], l) <= pivots[pi].first) hm.set(j);
      hm_for[pi] = hm;
    }
    if (!fi.pencil) {
      std::vector<std::int64_t> wf(fi.out.size());
      for (std::size_t i = 0; i < fi.out.size(); ++i) wf[i] = weight(fi.out[i], l);
      for (std::size_t pi = 0; pi < pivots.size(); ++pi) {
        auto [wp, rep] = pivots[pi];
        mask_t fm;
        for (std::size_t i = 0; i < fi.out.size(); ++i)
          if (b * wf[i] + a * wp < 0) fm.set(i);
        if (fm.none()) continue;
        fams.push_back(raw_family{&l, rep, wp, fm, hm_for[pi]});
      }
    } else {
      std::vector<std::int64_t> wd(fi.dmons.size());
      for (std::size_t i = 0; i < fi.dmons.size(); ++i) wd[i] = weight(fi.dmons[i], l);
      std::set<std::int64_t> vals_set(wd.begin(), wd.end());
      std::vector<std::int64_t> vals(vals_set.begin(), vals_set.end());
      for (std::size_t pi = 0; pi < pivots.size(); ++pi) {
        auto [wp, rep] = pivots[pi];
        for (std::int64_t alpha : vals) {
          // Largest threshold beta with alpha + beta + t*w_p < 0.
          std::int64_t beta = 0;
          bool found = false;
          for (std::int64_t v : vals)
            if (b * (alpha + v) + a * wp < 0) {
              beta = v;
              found = true;
            }
          if (!found) continue;
          mask_t fm;
          for (std::size_t k = 0; k < fi.pairs.size(); ++k) {
            std::int64_t wi = wd[fi.pairs[k].first], wj = wd[fi.pairs[k].second];
            if ((wi <= alpha && wj <= beta) || (wj <= alpha && wi <= beta)) fm.set(k);
          }
          if (fm.none()) continue;
          fams.push_back(raw_family{&l, rep, wp, fm, hm_for[pi]});
        }
      }
    }
  }
  // Dedup identical content.
  std::sort(fams.begin(), fams.end(), [](const raw_family& x, const raw_family& y) {
    if (x.f_mask.to_string() != y.f_mask.to_string())
      return x.f_mask.to_string() < y.f_mask.to_string();
    if (x.h_mask.to_string() != y.h_mask.to_string())
      return x.h_mask.to_string() < y.h_mask.to_string();
    if (x.lambda->weights != y.lambda->weights) return x.lambda->weights < y.lambda->weights;
    return x.pivot_index < y.pivot_index;
  });
  std::vector<raw_family> dedup;
  for (const auto& f : fams)
    if (dedup.empty() || dedup.back().f_mask != f.f_mask || dedup.back().h_mask != f.h_mask)
      dedup.push_back(f);
  // Keep maximal under componentwise subset order.
  std::vector<raw_family> out;
  for (std::size_t i = 0; i < dedup.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < dedup.size() && !dominated; ++j) {
      if (i == j) continue;
      bool fsub = (dedup[i].f_mask & ~dedup[j].f_mask).none();
      bool hsub = (dedup[i].h_mask & ~dedup[j].h_mask).none();
      bool strict = dedup[i].f_mask != dedup[j].f_mask || dedup[i].h_mask != dedup[j].h_mask;
      if (fsub && hsub && strict) dominated = true;
    }
    if (!dominated) out.push_back(dedup[i]);
  }
  return out;
}

// Tie-equation difference pool.
std::vector<ivec> difference_pool(const std::vector<ivec>& mons) {
  std::set<ivec> pool;
  for (std::size_t i = 0; i < mons.size(); ++i)
    for (std::size_t j = i + 1; j < mons.size(); ++j) {
      ivec d(mons[i].size());
      bool zero = true;
      for (std::size_t k = 0; k < d.size(); ++k) {
        d[k] = mons[i][k] - mons[j][k];
        if (d[k]) zero = false;
      }
      if (zero) continue;
      d = primitive(std::move(d));
      // Canonical sign: first nonzero entry positive.
      for (auto x : d) {
        if (x > 0) break;
        if (x < 0) {
          for (auto& y : d) y = -y;
          break;
        }
      }
      pool.insert(std::move(d));
    }
  return {pool.begin(), pool.end()};
}

void add_kernel_candidates(const std::vector<ivec>& rows, int ncols, std::set<ivec>& out) {
  auto gen = kernel_generator(rows, ncols);
  if (!gen) return;
  try {
    out.insert(normalize_ops(*gen).weights);
    ivec neg = *gen;
    for (auto& x : neg) x = -x;
    out.insert(normalize_ops(std::move(neg)).weights);
  } catch (const error&) {
    // zero-trace violation cannot happen (trace row enforced); ignore degenerate
  }
}

std::vector<one_ps> tie_candidates(const git_problem& p) {
  const int ncols = p.n + 1;
  ivec ones(ncols, 1);
  auto dmons = degree_monomials(p.n, p.d);
  auto emons = degree_monomials(p.n, p.e);
  std::vector<ivec> pool = difference_pool(dmons);
  {
    auto epool = difference_pool(emons);
    std::set<ivec> merged(pool.begin(), pool.end());
    merged.insert(epool.begin(), epool.end());
    pool.assign(merged.begin(), merged.end());
  }
  std::set<ivec> found;
  const int k = p.n - 1;  // number of tie equations
  if (k == 0) {
    add_kernel_candidates({ones}, ncols, found);
  } else if (k == 1) {
    for (const auto& d1 : pool) add_kernel_candidates({ones, d1}, ncols, found);
  } else if (k == 2) {
    for (std::size_t i = 0; i < pool.size(); ++i)
      for (std::size_t j = i + 1; j < pool.size(); ++j)
        add_kernel_candidates({ones, pool[i], pool[j]}, ncols, found);
  } else if (k == 3) {
    // Pencil problem: ties with a common member reduce to plain monomial
    // differences; allow at most one disjoint pair-sum tie on top.
    std::vector<ivec> sum_pool = difference_pool(fside_monomials(p));
    for (std::size_t i = 0; i < pool.size(); ++i)
      for (std::size_t j = i + 1; j < pool.size(); ++j) {
        for (std::size_t l = j + 1; l < pool.size(); ++l)
          add_kernel_candidates({ones, pool[i], pool[j], pool[l]}, ncols, found);
        for (const auto& extra : sum_pool)
          add_kernel_candidates({ones, pool[i], pool[j], extra}, ncols, found);
      }
  } else {
    throw budget_error("tie enumeration supports ambient dimension <= 4");
  }
  std::vector<one_ps> out;
  for (const auto& w : found) out.push_back(one_ps{w});
  return out;
}

std::vector<rat> walls_over(const git_problem& p, const std::vector<one_ps>& cands,
                            const std::vector<ivec>& fmons, const std::vector<ivec>& emons) {
  std::set<rat> walls;
  for (const auto& l : cands) {
    for (auto [wp, rep] : pivot_weights(emons, l)) {
      if (wp == 0) continue;
      for (const auto& m : fmons) {
        std::int64_t w = weight(m, l);
        rat t = make_rat(-w, wp);
        if (t > 0) walls.insert(t);
      }
    }
  }
  return {walls.begin(), walls.end()};
}

std::vector<rat> chamber_samples(const std::vector<rat>& walls) {
  std::vector<rat> s;
  if (walls.empty()) {
    s.push_back(rat(1));
    return s;
  }
  s.push_back(walls.front() / 2);
  for (std::size_t i = 0; i + 1 < walls.size(); ++i) s.push_back((walls[i] + walls[i + 1]) / 2);
  s.push_back(walls.back() + 1);
  return s;
}

// Does some mu = 0 configuration at the wall carry a semistable pair?  The
// boundary pairs are torus-invariant: the zero-weight monomials against the
// pivot (for pencils, generators concentrated on a zero-sum threshold
// split).  A candidate value with no such pair is not a genuine wall.
bool semistable_boundary_exists(const fside_index& fi, const std::vector<one_ps>& cands,
                                const std::vector<ivec>& emons, const rat& t) {
  std::int64_t a = static_cast<std::int64_t>(numerator(t));
  std::int64_t b = static_cast<std::int64_t>(denominator(t));
  for (const auto& l : cands) {
    for (auto [wp, rep] : pivot_weights(emons, l)) {
      if (wp == 0) continue;  // t-independent configurations do not cut walls
      pair_support boundary;
      boundary.h_support.push_back(emons[rep]);
      if (!fi.pencil) {
        for (const auto& m : fi.out)
          if (b * weight(m, l) + a * wp == 0) boundary.f_support.push_back(m);
        if (boundary.f_support.empty()) continue;
        if (centroid_semistable(boundary, t)) return true;
      } else {
        std::vector<std::int64_t> wd(fi.dmons.size());
        for (std::size_t i = 0; i < fi.dmons.size(); ++i) wd[i] = weight(fi.dmons[i], l);
        std::set<std::int64_t> vals(wd.begin(), wd.end());
        for (std::int64_t alpha : vals) {
          for (std::int64_t beta : vals) {
            if (beta > alpha) continue;
            if (b * (alpha + beta) + a * wp != 0) continue;
            pair_support bd;
            bd.h_support.push_back(emons[rep]);
            std::set<ivec> sums;
            for (std::size_t k = 0; k < fi.pairs.size(); ++k) {
              std::int64_t wi = wd[fi.pairs[k].first], wj = wd[fi.pairs[k].second];
              if ((wi == alpha && wj == beta) || (wj == alpha && wi == beta))
                sums.insert(fi.out[k]);
            }
            if (sums.empty()) continue;
            bd.f_support.assign(sums.begin(), sums.end());
            if (centroid_semistable(bd, t)) return true;
          }
        }
      }
    }
  }
  return false;
}

pair_support generic_pair(const git_problem& p) {
  pair_support ps;
  ps.f_support = fside_monomials(p);
  if (p.e > p.n + 1) throw domain_error("generic second factor needs e <= n+1");
  ivec h(p.n + 1, 0);
  for (int i = 0; i < p.e; ++i) h[i] = 1;
  ps.h_support.push_back(std::move(h));
  return ps;
}

std::vector<std::vector<rat>> shifted_points(const pair_support& pair, const rat& t) {
  std::vector<std::vector<rat>> pts;
  for (const auto& m : pair.f_support)
    for (const auto& h : pair.h_support) {
      std::vector<rat> q(m.size());
      for (std::size_t i = 0; i < m.size(); ++i) q[i] = rat(m[i]) + t * rat(h[i]);
      pts.push_back(std::move(q));
    }
  return pts;
}

}  // namespace

std::int64_t git_problem::monomial_count() const { return binomial(n + d, n); }

void git_problem::check_budget() const {
  if (monomial_count() > cap)
    throw budget_error("monomial lattice size " + std::to_string(monomial_count()) +
                       " exceeds cap " + std::to_string(cap));
}

rat mu_t(const pair_support& pair, const one_ps& l, const rat& t) {
  if (pair.f_support.empty() || pair.h_support.empty())
    throw degenerate_error("empty support");
  std::int64_t mf = weight(pair.f_support[0], l);
  for (const auto& m : pair.f_support) mf = std::max(mf, weight(m, l));
  std::int64_t mh = weight(pair.h_support[0], l);
  for (const auto& m : pair.h_support) mh = std::max(mh, weight(m, l));
  return rat(mf) + t * rat(mh);
}

bool centroid_semistable(const pair_support& pair, const rat& t) {
  if (t <= 0) throw domain_error("centroid test needs t > 0");
  if (pair.f_support.empty() || pair.h_support.empty())
    throw degenerate_error("empty support");
  const std::size_t dim = pair.f_support[0].size();
  std::int64_t df = 0, dh = 0;
  for (auto v : pair.f_support[0]) df += v;
  for (auto v : pair.h_support[0]) dh += v;
  rat target = (rat(df) + t * rat(dh)) / rat(static_cast<std::int64_t>(dim));
  auto pts = shifted_points(pair, t);
  if (dim == 2) {
    rat lo = pts[0][0], hi = pts[0][0];
    for (const auto& q : pts) {
      lo = std::min(lo, q[0]);
      hi = std::max(hi, q[0]);
    }
    return target >= lo && target <= hi;
  }
  if (dim == 3) {
    std::vector<point2> proj;
    proj.reserve(pts.size());
    for (const auto& q : pts) proj.push_back({q[1], q[2]});
    auto hull = convex_hull_ccw(proj);
    if (hull.size() < 3) {
      // Degenerate hull: fall back to the exact membership LP.
      std::vector<std::vector<rat>> raw;
      for (const auto& q : pts) raw.push_back({q[1], q[2]});
      return in_convex_hull(raw, {target, target});
    }
    return hull_contains(hull, {target, target});
  }
  std::vector<std::vector<rat>> raw;
  for (const auto& q : pts) raw.push_back(std::vector<rat>(q.begin() + 1, q.end()));
  std::vector<rat> zeta(dim - 1, target);
  return in_convex_hull(raw, zeta);
}

bool torus_semistable_lp(const pair_support& pair, const rat& t) {
  auto pts = shifted_points(pair, t);
  std::size_t dim = pair.f_support[0].size();
  std::int64_t df = 0, dh = 0;
  for (auto v : pair.f_support[0]) df += v;
  for (auto v : pair.h_support[0]) dh += v;
  rat target = (rat(df) + t * rat(dh)) / rat(static_cast<std::int64_t>(dim));
  for (auto& q : pts)
    for (auto& v : q) v -= target;
  return !separating_functional_exists(pts);
}

destabilizing_family family_at(const git_problem& problem, const one_ps& l, int pivot,
                               const rat& t, set_relation rel) {
  auto fmons = fside_monomials(problem);
  auto emons = degree_monomials(problem.n, problem.e);
  if (pivot < 0 || pivot >= static_cast<int>(emons.size()))
    throw shape_error("pivot index out of range");
  std::int64_t wp = weight(emons[pivot], l);
  destabilizing_family fam;
  fam.lambda = l;
  fam.pivot = pivot;
  fam.t_lo = fam.t_hi = t;
  for (const auto& m : fmons) {
    rat v = rat(weight(m, l)) + t * rat(wp);
    bool keep = rel == set_relation::strict ? v < 0 : rel == set_relation::closed ? v <= 0 : v == 0;
    if (keep) fam.f_monomials.push_back(m);
  }
  for (const auto& h : emons)
    if (weight(h, l) <= wp) fam.h_monomials.push_back(h);
  return fam;
}

std::vector<one_ps> enumerate_candidates(const git_problem& problem) {
  problem.check_budget();
  auto raw = tie_candidates(problem);
  auto fi = make_fside_index(problem);
  auto emons = degree_monomials(problem.n, problem.e);
  auto cw = walls_over(problem, raw, fside_monomials(problem), emons);
  std::set<ivec> kept;
  for (const auto& t : chamber_samples(cw)) {
    for (const auto& fam : maximal_families_at(fi, raw, emons, t))
      kept.insert(fam.lambda->weights);
  }
  // Close under duality.
  std::set<ivec> closed = kept;
  for (const auto& w : kept) closed.insert(dual(one_ps{w}).weights);
  std::vector<one_ps> out;
  for (const auto& w : closed) out.push_back(one_ps{w});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<rat> candidate_walls(const git_problem& problem,
                                 const std::vector<one_ps>& candidates) {
  return walls_over(problem, candidates, fside_monomials(problem),
                    degree_monomials(problem.n, problem.e));
}

std::vector<rat> candidate_walls(const git_problem& problem) {
  return candidate_walls(problem, enumerate_candidates(problem));
}

std::optional<rat> t_upper_bound(const git_problem& problem) {
  auto cands = enumerate_candidates(problem);
  auto cw = candidate_walls(problem, cands);
  auto gp = generic_pair(problem);
  auto samples = chamber_samples(cw);
  // Last sample is beyond every candidate wall.
  if (centroid_semistable(gp, samples.back())) return std::nullopt;
  for (std::size_t i = samples.size(); i-- > 1;) {
    if (centroid_semistable(gp, samples[i - 1])) return cw[i - 1];
  }
  // Not even the first chamber: the sup is the smallest wall or zero.
  return rat(0);
}

wall_chamber_decomposition_t wall_chamber_decomposition(const git_problem& problem) {
  wall_chamber_decomposition_t out;
  out.problem = problem;
  auto cands = enumerate_candidates(problem);
  auto fi = make_fside_index(problem);
  auto emons = degree_monomials(problem.n, problem.e);
  auto cw = walls_over(problem, cands, fside_monomials(problem), emons);
  out.t_max = t_upper_bound(problem);

  std::vector<rat> inner;
  for (const auto& w : cw)
    if (!out.t_max || w < *out.t_max) inner.push_back(w);

  auto fams_at = [&](const rat& t) { return maximal_families_at(fi, cands, emons, t); };

  auto family_signature = [&](const rat& t) {
    std::set<std::pair<std::string, std::string>> sig;
    for (const auto& f : fams_at(t))
      sig.insert({f.f_mask.to_string(), f.h_mask.to_string()});
    return sig;
  };

  std::vector<rat> samples;
  samples.push_back(inner.empty() ? (out.t_max ? rat(*out.t_max / 2) : rat(1)) : rat(inner.front() / 2));
  for (std::size_t i = 0; i + 1 < inner.size(); ++i)
    samples.push_back((inner[i] + inner[i + 1]) / 2);
  if (!inner.empty()) {
    rat hi = out.t_max ? rat((*out.t_max + inner.back()) / 2) : rat(inner.back() + 1);
    samples.push_back(hi);
  }

  std::vector<std::set<std::pair<std::string, std::string>>> sigs;
  sigs.reserve(samples.size());
  for (const auto& s : samples) sigs.push_back(family_signature(s));

  for (std::size_t i = 0; i < inner.size(); ++i)
    if (sigs[i] != sigs[i + 1] && semistable_boundary_exists(fi, cands, emons, inner[i]))
      out.walls.push_back(inner[i]);

  // Chambers between consecutive genuine walls.
  std::vector<rat> bounds;
  bounds.push_back(rat(0));
  for (const auto& w : out.walls) bounds.push_back(w);
  bool bounded = out.t_max.has_value();
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    chamber ch;
    ch.t_lo = bounds[i];
    bool last = (i + 1 == bounds.size());
    if (!last)
      ch.t_hi = bounds[i + 1];
    else if (bounded)
      ch.t_hi = *out.t_max;
    else
      ch.t_hi = std::nullopt;
    rat mid;
    if (ch.t_hi)
      mid = (ch.t_lo + *ch.t_hi) / 2;
    else
      mid = ch.t_lo + 1;
    for (const auto& rf : fams_at(mid)) {
      destabilizing_family df;
      df.lambda = *rf.lambda;
      df.pivot = rf.pivot_index;
      df.t_lo = ch.t_lo;
      df.t_hi = ch.t_hi ? *ch.t_hi : mid;  // right endpoint clamped when unbounded
      std::set<ivec> seen_out;
      for (std::size_t k = 0; k < fi.out.size(); ++k)
        if (rf.f_mask.test(k) && seen_out.insert(fi.out[k]).second)
          df.f_monomials.push_back(fi.out[k]);
      for (std::size_t k = 0; k < emons.size(); ++k)
        if (rf.h_mask.test(k)) df.h_monomials.push_back(emons[k]);
      ch.maximal_families.push_back(std::move(df));
    }
    out.chambers.push_back(std::move(ch));
  }
  return out;
}

}  // namespace kmoduli
