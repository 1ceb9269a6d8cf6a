#pragma once

#include "kmoduli/rational.hpp"

#include <string>
#include <vector>

namespace kmoduli {

// Curated pair families with their coefficient/polarization dictionaries.
enum class family_key {
  deg3_cubic,    // cubic surface + hyperplane, t = 9c/(8+c)
  deg4_ci,       // intersection of two quadrics + hyperplane, t = 6c/(5+c)
  deg2_plane,    // plane quartic + line, t = 2c
  deg2_p114,     // octic + quadric on P(1,1,4), t = 12c/(1-c)
  deg5,
  deg6,
  deg7,
  deg8_p1xp1,
  deg8_blowup,
  deg9,
};

std::string to_string(family_key k);
family_key family_from_string(const std::string& s);

// Conversion between the boundary coefficient c and the GIT slope t; exact
// and mutually inverse on the valid windows.  domain_error outside.
rat t_of_c(family_key f, const rat& c);
rat c_of_t(family_key f, const rat& t);

// CM-line-bundle slope (a(c), b(c)) up to positive scale; b/a = t(c).
struct cm_slope_t {
  linear_in_c a, b;
};
cm_slope_t cm_slope(family_key f);
rat cm_slope_ratio(family_key f, const rat& c);  // b(c)/a(c)

enum class wall_provenance { computed_git, computed_beta, golden };
std::string to_string(wall_provenance p);

struct k_wall {
  rat c;
  wall_provenance provenance;
  std::string note;  // replacement metadata (opaque singularity labels)
};

struct kwalls_options {
  bool compute_git = true;       // derive d=2,3 (and 4 with the flag) from VGIT
  bool plucker_enabled = false;  // experimental degree-4 Grassmannian route
  std::string data_dir;          // golden-data directory (empty = default)
};

// Complete K-moduli wall list in c for degree d (2..9); for d = 8 the
// variant chooses between the two smooth models.
std::vector<k_wall> kwalls(int d, const kwalls_options& opt = {},
                           const std::string& variant = "");

// Normalized-volume index bound: largest integer B with
// B * (4/9) * l * (1-c)^2 <= (2 - c*ord)^2, plus the Gorenstein-index
// conclusion of the deduction (index one when it applies).
struct gorenstein_result {
  bigint dn2_bound;
  bool forces_gorenstein;  // index 1 concluded
};
gorenstein_result gorenstein_bound(int l, const rat& c, int ord);

// Degree-2 analogue: Manetti singularities 1/n^2(1, na-1); the volume bound
// gives n <= 3 and the index-3 case is excluded, so the index is at most 2.
struct gorenstein_deg2_result {
  int n_volume_bound;   // from the normalized-volume inequality
  int n_excluded;       // excluded index
  int index_bound;      // conclusion
};
gorenstein_deg2_result gorenstein_bound_deg2(const rat& c);

}  // namespace kmoduli
