#include "kmoduli/atlas.hpp"

#include "kmoduli/binary.hpp"
#include "kmoduli/config.hpp"
#include "kmoduli/errors.hpp"
#include "kmoduli/git.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace kmoduli {

std::string to_string(family_key k) {
  switch (k) {
    case family_key::deg3_cubic: return "deg3-cubic";
    case family_key::deg4_ci: return "deg4-ci";
    case family_key::deg2_plane: return "deg2-plane";
    case family_key::deg2_p114: return "deg2-p114";
    case family_key::deg5: return "deg5";
    case family_key::deg6: return "deg6";
    case family_key::deg7: return "deg7";
    case family_key::deg8_p1xp1: return "deg8-p1xp1";
    case family_key::deg8_blowup: return "deg8-blowup";
    default: return "deg9";
  }
}

family_key family_from_string(const std::string& s) {
  static const std::map<std::string, family_key> m = {
      {"deg3-cubic", family_key::deg3_cubic}, {"deg4-ci", family_key::deg4_ci},
      {"deg2-plane", family_key::deg2_plane}, {"deg2-p114", family_key::deg2_p114},
      {"deg5", family_key::deg5},             {"deg6", family_key::deg6},
      {"deg7", family_key::deg7},             {"deg8-p1xp1", family_key::deg8_p1xp1},
      {"deg8-blowup", family_key::deg8_blowup}, {"deg9", family_key::deg9}};
  auto it = m.find(s);
  if (it == m.end()) throw parse_error("unknown family key '" + s + "'");
  return it->second;
}

std::string to_string(wall_provenance p) {
  switch (p) {
    case wall_provenance::computed_git: return "computed-GIT";
    case wall_provenance::computed_beta: return "computed-beta";
    default: return "golden";
  }
}

namespace {

void require_c(const rat& c) {
  if (c <= 0 || c >= 1) throw domain_error("coefficient c must lie in (0,1)");
}

}  // namespace

rat t_of_c(family_key f, const rat& c) {
  require_c(c);
  switch (f) {
    case family_key::deg3_cubic: return 9 * c / (8 + c);
    case family_key::deg4_ci: return 6 * c / (5 + c);
    case family_key::deg2_plane: return 2 * c;
    case family_key::deg2_p114: return 12 * c / (1 - c);
    default: throw domain_error("family has no VGIT polarization dictionary");
  }
}

rat c_of_t(family_key f, const rat& t) {
  if (t <= 0) throw domain_error("t must be positive");
  rat c;
  switch (f) {
    case family_key::deg3_cubic: c = 8 * t / (9 - t); break;
    case family_key::deg4_ci: c = 5 * t / (6 - t); break;
    case family_key::deg2_plane: c = t / 2; break;
    case family_key::deg2_p114: c = t / (t + 12); break;
    default: throw domain_error("family has no VGIT polarization dictionary");
  }
  require_c(c);
  return c;
}

cm_slope_t cm_slope(family_key f) {
  switch (f) {
    case family_key::deg3_cubic: return {linear_in_c(rat(8), rat(1)), linear_in_c(rat(0), rat(9))};
    case family_key::deg4_ci: return {linear_in_c(rat(10), rat(2)), linear_in_c(rat(0), rat(12))};
    case family_key::deg2_plane: return {linear_in_c(rat(1), rat(0)), linear_in_c(rat(0), rat(2))};
    case family_key::deg2_p114: return {linear_in_c(rat(1), rat(-1)), linear_in_c(rat(0), rat(12))};
    default: throw domain_error("family has no CM slope formula");
  }
}

rat cm_slope_ratio(family_key f, const rat& c) {
  require_c(c);
  auto s = cm_slope(f);
  rat a = s.a.eval(c), b = s.b.eval(c);
  if (a <= 0) throw domain_error("CM slope degenerates");
  return b / a;
}

std::vector<k_wall> kwalls(int d, const kwalls_options& opt, const std::string& variant) {
  if (d < 2 || d > 9) throw domain_error("kwalls needs d in {2,...,9}");
  std::vector<k_wall> out;
  auto add = [&](const rat& c, wall_provenance p, std::string note = "") {
    out.push_back(k_wall{c, p, std::move(note)});
  };

  if (d == 9) return out;

  if (d == 3 && opt.compute_git) {
    git_problem p;
    p.n = 3;
    p.d = 3;
    p.e = 1;
    auto dec = wall_chamber_decomposition(p);
    for (const auto& w : dec.walls) add(c_of_t(family_key::deg3_cubic, w), wall_provenance::computed_git);
    std::sort(out.begin(), out.end(), [](const k_wall& a, const k_wall& b) { return a.c < b.c; });
    return out;
  }

  if (d == 2 && opt.compute_git) {
    std::set<rat> seen;
    git_problem p;
    p.n = 2;
    p.d = 4;
    p.e = 1;
    auto dec = wall_chamber_decomposition(p);
    for (const auto& w : dec.walls) {
      rat c = c_of_t(family_key::deg2_plane, w);
      if (seen.insert(c).second) add(c, wall_provenance::computed_git, "plane quartic + line");
    }
    for (const auto& t : binary_walls(8, 2)) {
      rat c = c_of_t(family_key::deg2_p114, t);
      if (seen.insert(c).second)
        add(c, wall_provenance::computed_git, "octic + quadric on P(1,1,4)");
      else {
        for (auto& w : out)
          if (w.c == c) w.note += " & octic + quadric on P(1,1,4)";
      }
    }
    std::sort(out.begin(), out.end(), [](const k_wall& a, const k_wall& b) { return a.c < b.c; });
    return out;
  }

  if (d == 4 && opt.compute_git && opt.plucker_enabled) {
    git_problem p;
    p.kind = git_problem::kind_t::plucker_pair;
    p.n = 4;
    p.d = 2;
    p.e = 1;
    auto dec = wall_chamber_decomposition(p);
    for (const auto& w : dec.walls) add(c_of_t(family_key::deg4_ci, w), wall_provenance::computed_git);
    std::sort(out.begin(), out.end(), [](const k_wall& a, const k_wall& b) { return a.c < b.c; });
    return out;
  }

  // Remaining degrees ship as golden tables with per-wall provenance tags.
  auto table = load_golden_kwalls(d, variant, opt.data_dir);
  return table;
}

gorenstein_result gorenstein_bound(int l, const rat& c, int ord) {
  if (l < 1 || ord < 1) throw domain_error("gorenstein_bound needs l >= 1, ord >= 1");
  if (c < 0 || c >= 1) throw domain_error("gorenstein_bound needs c in [0,1)");
  gorenstein_result r;
  rat lhs_coeff = rat(4) * l * (1 - c) * (1 - c) / 9;
  rat rhs = (2 - rat(ord) * c) * (2 - rat(ord) * c);
  // Largest integer B with B * lhs_coeff <= rhs.
  rat bound = rhs / lhs_coeff;
  r.dn2_bound = numerator(bound) / denominator(bound);
  if (ord >= 2) {
    // (2 - ord*c)^2 <= (2 - 2c)^2 for every c in [0,1), so the bound is
    // uniform: d*n^2 <= 9/l; index one whenever that forces n = 1.
    r.forces_gorenstein = (9 / l) <= 3;
  } else {
    // ord = 1: the weight congruence on the smooth cover forces d*n | 1.
    r.forces_gorenstein = true;
  }
  return r;
}

gorenstein_deg2_result gorenstein_bound_deg2(const rat& c) {
  if (c < 0 || c >= 1) throw domain_error("c must lie in [0,1)");
  // Volume (1-c)^2; singularities 1/n^2(1, na-1):
  //   n^2 * (4/9) * (1-c)^2 <= (2 - 2c)^2  =>  n^2 <= 9.
  gorenstein_deg2_result r;
  r.n_volume_bound = 3;
  r.n_excluded = 3;  // index three is not Q-Gorenstein smoothable here
  r.index_bound = 2;
  return r;
}

}  // namespace kmoduli
