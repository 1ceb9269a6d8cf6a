#include <doctest.h>

#include "kmoduli/config.hpp"
#include "kmoduli/errors.hpp"
#include "kmoduli/logpair.hpp"

#include <map>

using namespace kmoduli;

namespace {

pair_config load(const std::string& name) { return load_pair_config(name); }

}  // namespace

TEST_CASE("row 8 pipeline: A, tau, S, beta, wall") {
  auto cfg = load("kwall-row8");
  REQUIRE(cfg.val.has_value());
  auto a = log_discrepancy(cfg.pair, *cfg.val);
  CHECK(a == linear_in_c(rat(5, 2), rat(-3)));
  // tau = 3(1-c) at three sample coefficients.
  for (const auto& c : {rat(0), rat(1, 3), rat(7, 10)}) {
    auto prof = s_profile_at(cfg.pair, *cfg.val, c);
    CHECK(prof.tau() == 3 * (1 - c));
    CHECK(prof.eval(rat(0)) == log_anticanonical_volume(cfg.pair, c));
    CHECK(log_anticanonical_volume(cfg.pair, c) == (1 - c) * (1 - c));
  }
  auto s = s_invariant(cfg.pair, *cfg.val);
  CHECK(s == linear_in_c(rat(4, 3), rat(-4, 3)));
  auto report = beta_invariant(cfg.pair, *cfg.val);
  CHECK(report.beta == linear_in_c(rat(7, 6), rat(-5, 3)));
  REQUIRE(report.wall.has_value());
  CHECK(*report.wall == rat(7, 10));
  CHECK(report.a - report.s == report.beta);
}

TEST_CASE("all Kwall rows reproduce the published formulas") {
  auto rows = load_kwall_table();
  REQUIRE(rows.size() == 6);
  for (const auto& row : rows) {
    CAPTURE(row.row);
    auto cfg = load(row.config);
    REQUIRE(cfg.val.has_value());
    auto report = beta_invariant(cfg.pair, *cfg.val);
    CHECK(report.beta == row.beta);
    REQUIRE(report.wall.has_value());
    CHECK(*report.wall == row.wall);
    CHECK(report.a - report.s == report.beta);
  }
}

TEST_CASE("log discrepancy details") {
  auto cfg = load("kwall-row3");
  // A = 2 - 3c for the (3,2)-blow-up against (1/2)C + cL.
  CHECK(log_discrepancy(cfg.pair, *cfg.val) == linear_in_c(rat(2), rat(-3)));
  // A boundary component missing the center contributes nothing: the line
  // x0 does not pass through (1:0:0).
  auto cfg7 = load("kwall-row7");
  CHECK(log_discrepancy(cfg7.pair, *cfg7.val) == linear_in_c(rat(3), rat(-4)));
  // Empty boundary, ordinary blow-up: A = 2.
  log_pair bare;
  toric_model m;
  m.surface = projective_plane();
  m.ambient = m.surface;
  bare.model = m;
  CHECK(log_discrepancy(bare, valuation::toric({1, 1})) == linear_in_c(rat(2), rat(0)));
}

TEST_CASE("P(1,1,4) conic-at-infinity beta") {
  auto cfg = load("p114-q");
  auto report = beta_invariant(cfg.pair, *cfg.val);
  CHECK(report.a == linear_in_c(rat(0), rat(0)));
  CHECK(report.s == linear_in_c(rat(1, 6), rat(-1, 6)));
  CHECK(report.beta == linear_in_c(rat(-1, 6), rat(1, 6)));
  CHECK_FALSE(report.wall.has_value());  // root at c = 1 sits outside (0,1)
}

TEST_CASE("degree-7 S-invariants") {
  auto l = load("deg7-l");
  auto sl = s_invariant(l.pair, *l.val);
  CHECK(sl == linear_in_c(rat(25, 21), rat(-25, 21)));
  auto rep = beta_invariant(l.pair, *l.val);
  REQUIRE(rep.wall.has_value());
  CHECK(*rep.wall == rat(4, 25));

  auto e = load("deg7-xprime-e");
  auto se = s_invariant(e.pair, *e.val);
  CHECK(se == linear_in_c(rat(9, 7), rat(-9, 7)));
  auto repe = beta_invariant(e.pair, *e.val);
  REQUIRE(repe.wall.has_value());
  CHECK(*repe.wall == rat(2, 9));

  auto cusp = load("deg7-xprime-cusp");
  auto repc = beta_invariant(cusp.pair, *cusp.val);
  CHECK(repc.a == linear_in_c(rat(5), rat(-6)));
  REQUIRE(repc.wall.has_value());
  CHECK(*repc.wall == rat(2, 5));
}

TEST_CASE("degree-7 NS-mode S values") {
  // The same numbers through the lattice model.
  auto x = load_ns_model("deg7-sigma-ns");
  log_pair pair;
  pair.model = x;
  boundary_component b;
  b.coeff = linear_in_c(rat(0), rat(1));
  b.cls = x.anti_k;
  pair.boundary.push_back(b);
  valuation l = valuation::ns("l", {rat(1), rat(-1), rat(-1)}, rat(1));
  CHECK(s_invariant(pair, l) == linear_in_c(rat(25, 21), rat(-25, 21)));

  auto xp = load_ns_model("deg7-xprime-ns");
  log_pair pairp;
  pairp.model = xp;
  boundary_component bp;
  bp.coeff = linear_in_c(rat(0), rat(1));
  bp.cls = xp.anti_k;
  pairp.boundary.push_back(bp);
  valuation e = valuation::ns("e", {rat(0), rat(1), rat(-1)}, rat(1));
  CHECK(s_invariant(pairp, e) == linear_in_c(rat(9, 7), rat(-9, 7)));
}

TEST_CASE("degree-6 walls and S values") {
  auto x1 = load("deg6-x1-l");
  auto r1 = beta_invariant(x1.pair, *x1.val);
  CHECK(r1.s == linear_in_c(rat(4, 3), rat(-4, 3)));
  REQUIRE(r1.wall.has_value());
  CHECK(*r1.wall == rat(1, 4));

  auto x1p = load("deg6-x1prime-l");
  auto r2 = beta_invariant(x1p.pair, *x1p.val);
  CHECK(r2.s == linear_in_c(rat(11, 9), rat(-11, 9)));
  REQUIRE(r2.wall.has_value());
  CHECK(*r2.wall == rat(2, 11));

  auto x1pns = load("deg6-x1prime-l-ns");
  CHECK(s_invariant(x1pns.pair, *x1pns.val) == linear_in_c(rat(11, 9), rat(-11, 9)));

  auto x11 = load("deg6-x11-f");
  auto r3 = beta_invariant(x11.pair, *x11.val);
  CHECK(r3.s == linear_in_c(rat(14, 9), rat(-14, 9)));
  REQUIRE(r3.wall.has_value());
  CHECK(*r3.wall == rat(5, 14));

  auto x11ns = load("deg6-x11-f-ns");
  CHECK(s_invariant(x11ns.pair, *x11ns.val) == linear_in_c(rat(14, 9), rat(-14, 9)));

  auto p123 = load("deg6-p123-c0");
  auto r4 = beta_invariant(p123.pair, *p123.val);
  CHECK(r4.s == linear_in_c(rat(2), rat(-2)));
  CHECK(r4.beta == linear_in_c(rat(-1), rat(2)));
  REQUIRE(r4.wall.has_value());
  CHECK(*r4.wall == rat(1, 2));
}

TEST_CASE("degree-5 walls") {
  auto l12 = load("deg5-l12");
  auto r = beta_invariant(l12.pair, *l12.val);
  CHECK(r.a == linear_in_c(rat(1), rat(-2)));
  CHECK(r.s == linear_in_c(rat(13, 15), rat(-13, 15)));
  REQUIRE(r.wall.has_value());
  CHECK(*r.wall == rat(2, 17));

  auto ez = load("deg5-ez");
  auto r2 = beta_invariant(ez.pair, *ez.val);
  CHECK(r2.a == linear_in_c(rat(2), rat(-3)));
  CHECK(r2.s == linear_in_c(rat(26, 15), rat(-26, 15)));
  REQUIRE(r2.wall.has_value());
  CHECK(*r2.wall == rat(4, 19));
}

TEST_CASE("linearity audit: a fourth sample lies on the fitted line") {
  for (const std::string name :
       {"kwall-row3", "kwall-row5", "kwall-row8", "p114-q", "deg7-l", "deg6-x11-f"}) {
    CAPTURE(name);
    auto cfg = load(name);
    auto s = s_invariant(cfg.pair, *cfg.val);
    rat fourth(5, 8);
    CHECK(s.eval(fourth) == s_invariant_at(cfg.pair, *cfg.val, fourth));
  }
}

TEST_CASE("complexity-one checks") {
  auto row8 = load("c1-kwall-row8");
  CHECK(complexity_one_check(row8.c1, rat(7, 10)) == c1_verdict::polystable);
  CHECK(complexity_one_check(row8.c1, rat(1, 2)) == c1_verdict::unstable);
  CHECK(complexity_one_check(row8.c1, rat(4, 5)) == c1_verdict::unstable);

  auto row3 = load("c1-kwall-row3");
  CHECK(complexity_one_check(row3.c1, rat(1, 4)) == c1_verdict::polystable);
  CHECK(complexity_one_check(row3.c1, rat(1, 8)) == c1_verdict::unstable);

  auto p123 = load("c1-p123");
  CHECK(complexity_one_check(p123.c1, rat(1, 2)) == c1_verdict::polystable);
  CHECK(complexity_one_check(p123.c1, rat(1, 4)) == c1_verdict::unstable);

  auto x11 = load("c1-x11");
  CHECK(complexity_one_check(x11.c1, rat(5, 14)) == c1_verdict::polystable);
  CHECK(complexity_one_check(x11.c1, rat(1, 7)) == c1_verdict::unstable);
}

TEST_CASE("fixed-point betas cancel on every bundled configuration") {
  for (const std::string name : {"c1-kwall-row8", "c1-kwall-row3", "c1-p123", "c1-x11"}) {
    CAPTURE(name);
    auto cfg = load(name);
    REQUIRE(cfg.c1.plt_dual.has_value());
    auto b1 = beta_invariant(cfg.c1.pair, cfg.c1.plt).beta;
    auto b2 = beta_invariant(cfg.c1.pair, *cfg.c1.plt_dual).beta;
    CHECK((b1 + b2) == linear_in_c(rat(0), rat(0)));
    // The configured fixed points match the ones induced by the action.
    const auto& m = std::get<toric_model>(cfg.c1.pair.model);
    auto [e1, e2] = induced_fixed_valuations(m, cfg.c1.torus_weights);
    CHECK(e1 == cfg.c1.plt.v);
    CHECK(e2 == cfg.c1.plt_dual->v);
  }
}

TEST_CASE("beta = A - S for every bundled log pair") {
  for (const std::string name : {"kwall-row3", "kwall-row4", "kwall-row5", "kwall-row6",
                                 "kwall-row7", "kwall-row8", "p114-q", "deg7-l",
                                 "deg7-xprime-e", "deg7-xprime-cusp", "deg6-x1-l",
                                 "deg6-x1prime-l", "deg6-x11-f", "deg6-p123-c0", "deg5-l12",
                                 "deg5-ez"}) {
    CAPTURE(name);
    auto cfg = load(name);
    auto rep = beta_invariant(cfg.pair, *cfg.val);
    CHECK(rep.a - rep.s == rep.beta);
  }
}

TEST_CASE("chart and shape guards") {
  auto cfg = load("kwall-row8");
  // An NS valuation against a toric model is a chart misuse.
  valuation bad = valuation::ns("x", {rat(1)}, rat(1));
  CHECK_THROWS_AS(log_discrepancy(cfg.pair, bad), chart_error);
}

TEST_CASE("non-proportional boundaries are rejected by the linearity audit") {
  // Boundary c*l on the degree-7 surface: -K - c*l is not proportional to
  // -K, and S(c) is genuinely nonlinear.
  auto x = load_ns_model("deg7-sigma-ns");
  log_pair pair;
  pair.model = x;
  boundary_component b;
  b.coeff = linear_in_c(rat(0), rat(1));
  b.cls = {rat(1), rat(-1), rat(-1)};  // the (-1)-curve l, not -K
  pair.boundary.push_back(b);
  valuation e1 = valuation::ns("E1", {rat(0), rat(1), rat(0)}, rat(1));
  CHECK_THROWS_AS(s_invariant(pair, e1), nonlinearity_error);
}

TEST_CASE("missing polynomial data is a chart error") {
  auto cfg = load_pair_config("kwall-row8");
  auto& m = std::get<toric_model>(cfg.pair.model);
  boundary_component orphan;
  orphan.coeff = linear_in_c(rat(0), rat(1));
  orphan.cls.assign(m.surface.nrays(), rat(0));
  // No polynomial support: the order of vanishing cannot be computed.
  CHECK_THROWS_AS(toric_order(m, orphan, ray2{3, 1}), chart_error);
}

TEST_CASE("mismatched fixed-point data raises a consistency error") {
  auto cfg = load_pair_config("c1-kwall-row8");
  cfg.c1.plt_dual = valuation::toric({-1, -1});  // wrong dual fixed point
  CHECK_THROWS_AS(complexity_one_check(cfg.c1, rat(7, 10)), consistency_error);
}
