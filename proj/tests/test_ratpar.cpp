#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "imx/parse.hpp"
#include "imx/ratpar.hpp"

using namespace imx;

namespace {

std::string corpus(const std::string& name) {
  return std::string(IMX_CORPUS_DIR) + "/" + name + ".prob";
}

}  // namespace

TEST_CASE("polynomial input delegates to the engine") {
  ParamSystem sys = load_problem_file(corpus("dandrea"));
  SysView<Fp> v = view_fp(sys, 32003);
  auto via_ratpar = rat_par(v, Engine::ElimTH);
  auto straight = elim_th(v);
  CHECK(via_ratpar.g == straight.g);
  auto via_ratpar_d = rat_par(v, Engine::Direct);
  CHECK(same_up_to_scalar(via_ratpar_d.g, straight.g));
}

TEST_CASE("equal-degree homogenization") {
  ParamSystem sys = load_problem_file(corpus("t2t3t4"));
  SysView<Rat> v = view_q(sys);
  HomView<Rat> hv = make_hom_view(v);
  CHECK(hv.d == 4);
  REQUIRE(hv.view.numer.size() == 4);  // P1, P2, P3, Q with x0 last
  for (const auto& p : hv.view.numer) {
    CHECK(p.is_homogeneous());
    CHECK(p.weighted_degree() == 4);
  }
  CHECK(hv.view.xnames[hv.x0_index] == "x0");
}

TEST_CASE("rat_par on the t2^2/t1, t2^3/t1, t2^4/t1 parametrization") {
  ParamSystem sys = load_problem_file(corpus("t2t3t4"));
  SysView<Rat> v = view_q(sys);
  auto et = rat_par(v, Engine::ElimTH);
  CHECK(same_up_to_scalar(et.g, parse_polynomial("x1*x3 - x2^2", et.g.ring())));
  auto dr = rat_par(v, Engine::Direct);
  CHECK(same_up_to_scalar(dr.g, parse_polynomial("x1*x3 - x2^2", dr.g.ring())));
  // dehomogenization correctness: substituting the fractions gives zero
  CHECK(substitute_cleared(et.g, v.numer, v.denom).is_zero());
}

TEST_CASE("rat_par on uqminusone") {
  ParamSystem sys = load_problem_file(corpus("uqminusone"));
  SysView<Rat> v = view_q(sys);
  auto r = rat_par(v, Engine::ElimTH);
  CHECK(same_up_to_scalar(r.g, parse_polynomial("x - y", r.g.ring())));
}

TEST_CASE("engine independence on a rational benchmark") {
  ParamSystem sys = load_problem_file(corpus("dic1"));
  SysView<Fp> v = view_fp(sys, 32003);
  auto et = rat_par(v, Engine::ElimTH);
  auto dr = rat_par(v, Engine::Direct);
  CHECK(et.g.support_size() == 41);
  CHECK(same_up_to_scalar(et.g, to_ring(dr.g, et.g.ring())));
}

TEST_CASE("zero denominator is rejected") {
  ParamSystem sys = load_problem_file(corpus("t2t3t4"));
  SysView<Rat> v = view_q(sys);
  v.denom = Polynomial<Rat>(v.tring);
  CHECK_THROWS_AS(rat_par(v, Engine::ElimTH), ZeroDenominator);
}

TEST_CASE("zero numerators are flagged and split off") {
  ParamSystem sys = load_problem_text("params: t\nx1 = t^2/(t + 1)\nx2 = t^3/(t + 1)\n");
  SysView<Rat> v = view_q(sys);
  v.numer.push_back(Polynomial<Rat>(v.tring));  // a hand-built zero coordinate
  v.xnames.push_back("x3");
  auto r = rat_par(v, Engine::ElimTH);
  bool flagged = false;
  for (const auto& w : r.warnings)
    if (w.find("zero numerator") != std::string::npos) flagged = true;
  CHECK(flagged);
}

TEST_CASE("gcd pre-reduction strips common monomial and univariate factors") {
  // f = (t^3 + t^2)/(t^2 + t) = t: common factor t^2 + t cancels entirely.
  ParamSystem sys = load_problem_text("params: t\nx1 = (t^4 + t^3)/(t^2 + t)\nx2 = t^3\n");
  SysView<Rat> v = view_q(sys);
  reduce_fraction_system(v);
  CHECK(v.denom.is_constant());
  CHECK(v.numer[0].total_degree() == 2);
}

TEST_CASE("counterexample checks reproduce the documented failures") {
  CounterexampleReport rep = counterexample_checks();

  REQUIRE(rep.naive_route.size() == 2);
  RingPtr keep = rep.naive_route[0].ring();
  bool found_a = false, found_b = false;
  for (const auto& g : rep.naive_route) {
    if (same_up_to_scalar(g, parse_polynomial("x*z*h - y*z*h", keep))) found_a = true;
    if (same_up_to_scalar(g, parse_polynomial("x*h^2 - y*h^2", keep))) found_b = true;
  }
  CHECK(found_a);
  CHECK(found_b);

  CHECK(same_up_to_scalar(rep.weighted_route_first,
                          parse_polynomial("x3 - x1^2", rep.weighted_route_first.ring())));
  CHECK(same_up_to_scalar(rep.equal_degree_answer,
                          parse_polynomial("x1*x3 - x2^2", rep.equal_degree_answer.ring())));
}
