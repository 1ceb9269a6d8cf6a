#pragma once

#include "kmoduli/nslattice.hpp"
#include "kmoduli/rational.hpp"
#include "kmoduli/toric.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace kmoduli {

// Toric surface together with the ambient model whose homogeneous
// coordinates the boundary polynomials are written in (often itself).
struct toric_model {
  toric_surface surface;
  toric_surface ambient;
};

struct boundary_component {
  linear_in_c coeff;
  // Class of the component in the surface's divisor group:
  //   toric model: coefficient per surface ray
  //   ns model:    class vector
  qvec cls;
  // Vanishing-order sources:
  std::vector<ivec> poly_support;        // exponents over ambient variables (toric)
  std::map<std::string, rat> ns_orders;  // per-valuation stored orders (ns)
};

struct log_pair {
  std::variant<toric_model, ns_surface> model;
  std::vector<boundary_component> boundary;
  rat c_lo = 0, c_hi = 1;  // declared coefficient window (open interval)

  bool is_toric() const { return std::holds_alternative<toric_model>(model); }
};

struct valuation {
  enum class kind_t { toric_vector, ns_class };
  kind_t kind = kind_t::toric_vector;
  ray2 v{};         // toric lattice vector (primitive, in some cone)
  qvec cls;         // ns class vector
  rat ns_a = 1;     // stored log discrepancy over the surface (ns only)
  std::string name; // ns valuation name, used for stored-order lookup

  static valuation toric(ray2 vec) {
    valuation val;
    val.kind = kind_t::toric_vector;
    val.v = vec;
    return val;
  }
  static valuation ns(std::string nm, qvec c, rat a) {
    valuation val;
    val.kind = kind_t::ns_class;
    val.name = std::move(nm);
    val.cls = std::move(c);
    val.ns_a = std::move(a);
    return val;
  }
};

struct beta_report {
  linear_in_c a;     // log discrepancy A(c)
  linear_in_c s;     // expected vanishing order S(c)
  linear_in_c beta;  // A - S
  std::optional<rat> wall;  // root of beta inside (0,1)
};

// Multiplicity of a boundary component along a toric valuation: ambient
// monomial valuation corrected by the exceptional multiplicities of the
// surface's extra rays.  Exact.
rat toric_order(const toric_model& m, const boundary_component& b, const ray2& v);

linear_in_c log_discrepancy(const log_pair& pair, const valuation& v);

// S(c) by exact evaluation at three rational samples plus a collinearity
// audit; throws nonlinearity_error when the samples do not fit a line.
linear_in_c s_invariant(const log_pair& pair, const valuation& v);

// Value of S at one rational coefficient (exact).
rat s_invariant_at(const log_pair& pair, const valuation& v, const rat& c);

// The exact volume profile vol((-K - Delta(c)) - x*v) underlying S(c).
piecewise_quadratic s_profile_at(const log_pair& pair, const valuation& v, const rat& c);

// Volume of -K - Delta(c).
rat log_anticanonical_volume(const log_pair& pair, const rat& c);

beta_report beta_invariant(const log_pair& pair, const valuation& v);

enum class c1_verdict { polystable, semistable_boundary, unstable, inconclusive };
std::string to_string(c1_verdict v);

struct complexity_one_config {
  log_pair pair;
  ivec torus_weights;               // on the ambient variables (toric models)
  std::vector<valuation> vertical;  // beta > 0 required
  valuation plt;                    // beta = 0 required (fixed-point blow-up)
  std::optional<valuation> plt_dual;  // other fixed point; checked when present
};

// Fixed-point valuations induced by a torus action: the lattice points
// +-(sum of weight_i * ray_i), made primitive.
std::pair<ray2, ray2> induced_fixed_valuations(const toric_model& m, const ivec& weights);

c1_verdict complexity_one_check(const complexity_one_config& cfg, const rat& c);

}  // namespace kmoduli
