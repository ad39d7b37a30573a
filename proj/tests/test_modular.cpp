#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "imx/modular.hpp"

using namespace imx;

namespace {

std::string corpus(const std::string& name) {
  return std::string(IMX_CORPUS_DIR) + "/" + name + ".prob";
}

// Reference answer for the badprimes parametrization; checked by hand via
// (u - a - b)^3 = 27*a*b*u for u = (t1+t2)^3, a = t1^3, b = t2^3.
const char* kBadprimesAnswer =
    "-x3^9 + 3*x1*x3^6 + 3*x2*x3^6 - 3*x1^2*x3^3 + 21*x1*x2*x3^3 - 3*x2^2*x3^3 + x1^3 + "
    "3*x1^2*x2 + 3*x1*x2^2 + x2^3";

}  // namespace

TEST_CASE("classify_prime") {
  ParamSystem ex12 = load_problem_file(corpus("ex12"));
  CHECK(classify_prime(ex12, 32003).suitable());

  ParamSystem third = load_problem_text("params: t\nx1 = (t^3)/3\nx2 = t\n");
  CHECK(classify_prime(third, 3).kind == PrimeVerdict::UnsuitableA);
  CHECK(classify_prime(third, 5).suitable());

  ParamSystem dropdeg = load_problem_text("params: t\nx1 = 2*t^2 + t\nx2 = t\n");
  CHECK(classify_prime(dropdeg, 2).kind == PrimeVerdict::UnsuitableB);
  CHECK(classify_prime(dropdeg, 7).suitable());

  // degree drop in a denominator
  ParamSystem dropden = load_problem_text("params: t\nx1 = t/(2*t^2 + 1)\nx2 = t^2\n");
  CHECK(classify_prime(dropden, 2).kind == PrimeVerdict::UnsuitableB);
}

TEST_CASE("modular implicitization of the badprimes example") {
  ParamSystem sys = load_problem_file(corpus("badprimes"));
  ModularContext cx = make_modular_context(sys, Engine::Direct);

  ModularRun r3 = modular_implicitize(sys, 3, cx);
  RingPtr out3 = r3.g.ring();
  Polynomial<Rat> expect3 = parse_polynomial("x3^3 - x1 - x2", cx.out_ring_q);
  CHECK(same_up_to_scalar(r3.g, reduce_mod_p(expect3, out3, 3)));

  ModularRun rp = modular_implicitize(sys, 32003, cx);
  Polynomial<Rat> expect = monic(parse_polynomial(kBadprimesAnswer, cx.out_ring_q));
  CHECK(rp.g == reduce_mod_p(expect, rp.g.ring(), 32003));
  CHECK(rp.g.support_size() == 10);
}

TEST_CASE("good primes reduce the true answer: g_p = psi_p(g)") {
  ParamSystem sys = load_problem_file(corpus("badprimes"));
  for (Engine eng : {Engine::Direct, Engine::ElimTH}) {
    ModularContext cx = make_modular_context(sys, eng);
    Polynomial<Rat> g = monic(parse_polynomial(kBadprimesAnswer, cx.out_ring_q));
    for (uint64_t p : {32003ull, 32009ull, 2147483647ull}) {
      ModularRun run = modular_implicitize(sys, p, cx);
      CHECK(run.g == reduce_mod_p(g, run.g.ring(), static_cast<uint32_t>(p)));
    }
  }
}

TEST_CASE("non-principal modular ideal: Direct emits one of the generators") {
  ParamSystem sys = load_problem_text(
      "params: t1 t2\n"
      "x1 = t1 + t2\n"
      "x2 = t1 - t2\n"
      "x3 = t1 - t2\n");
  ModularContext cx = make_modular_context(sys, Engine::Direct);
  ModularRun r2 = modular_implicitize(sys, 2, cx);
  Polynomial<Fp> a = reduce_mod_p(parse_polynomial("x1 - x3", cx.out_ring_q), r2.g.ring(), 2);
  Polynomial<Fp> b = reduce_mod_p(parse_polynomial("x2 - x3", cx.out_ring_q), r2.g.ring(), 2);
  CHECK((r2.g == a || r2.g == b));

  // and the full pipeline still lands on the true answer
  ModularOptions opt;
  opt.pool = {2};
  for (uint64_t p : prime_pool()) opt.pool.push_back(p);
  ModImplicitResult res = mod_implicit(sys, opt);
  CHECK(same_up_to_scalar(res.g, parse_polynomial("x2 - x3", res.g.ring())));
}

TEST_CASE("bad prime filter decisions") {
  ParamSystem sys = load_problem_file(corpus("badprimes"));
  for (Engine eng : {Engine::ElimTH, Engine::Direct}) {
    ModularContext cx = make_modular_context(sys, eng);
    ModularRun bad = modular_implicitize(sys, 3, cx);
    ModularRun good = modular_implicitize(sys, 32003, cx);
    ModularRun good2 = modular_implicitize(sys, 32009, cx);
    CHECK(bad_prime_filter(bad, good, cx) == FilterDecision::DiscardNew);
    CHECK(bad_prime_filter(good, bad, cx) == FilterDecision::ResetToNew);
    CHECK(bad_prime_filter(good2, good, cx) == FilterDecision::Accept);
    if (eng == Engine::ElimTH) {
      CHECK(bad.deg_key == 3);
      CHECK(good.deg_key == 9);
    }
  }
}

TEST_CASE("engine mismatch is rejected") {
  ParamSystem sys = load_problem_file(corpus("badprimes"));
  ModularContext cx_d = make_modular_context(sys, Engine::Direct);
  ModularContext cx_e = make_modular_context(sys, Engine::ElimTH);
  ModularRun from_direct = modular_implicitize(sys, 32003, cx_d);
  ModularRun from_elim = modular_implicitize(sys, 32009, cx_e);
  CHECK_THROWS_AS(bad_prime_filter(from_elim, from_direct, cx_d), EngineMismatch);
}

TEST_CASE("mod_implicit on trivial input") {
  ParamSystem sys = load_problem_file(corpus("trivial"));
  ModImplicitResult res = mod_implicit(sys);
  CHECK(res.g == parse_polynomial("x1 - x2", res.g.ring()));
  CHECK(res.primes_used <= 2);
}

TEST_CASE("mod_implicit recovers from a pool that starts at the bad prime 3") {
  ParamSystem sys = load_problem_file(corpus("badprimes"));
  for (Engine eng : {Engine::Direct, Engine::ElimTH}) {
    ModularOptions opt;
    opt.engine = eng;
    opt.pool = {3};
    for (uint64_t p : prime_pool()) opt.pool.push_back(p);
    ModImplicitResult res = mod_implicit(sys, opt);
    Polynomial<Rat> expect = monic(parse_polynomial(kBadprimesAnswer, res.g.ring()));
    CHECK(res.g == expect);
    CHECK(res.warnings.empty());  // reconstruction already lands monic
    bool saw_filter = false;
    for (const auto& e : res.log)
      if (e.p == 3 || e.filter == "reset-to-new") saw_filter = true;
    CHECK(saw_filter);
  }
}

TEST_CASE("mod_implicit equals the classical oracle on small problems") {
  for (const char* name : {"uqminusone", "t2t3t4", "badprimes"}) {
    ParamSystem sys = load_problem_file(corpus(name));
    ModImplicitResult res = mod_implicit(sys);
    auto oracle = classical_implicitization(view_q(sys));
    REQUIRE(oracle.size() == 1);
    CHECK(same_up_to_scalar(res.g, to_ring(oracle[0], res.g.ring())));
  }
}

TEST_CASE("an exhausted pool is an error") {
  ParamSystem sys = load_problem_file(corpus("badprimes"));
  ModularOptions opt;
  opt.pool = {3};  // the bad prime alone can never verify
  CHECK_THROWS_AS(mod_implicit(sys, opt), PrimePoolExhausted);
}

TEST_CASE("determinism: identical runs give identical output") {
  ParamSystem sys = load_problem_file(corpus("badprimes"));
  ModularOptions opt;
  opt.seed = 7;
  ModImplicitResult a = mod_implicit(sys, opt);
  ModImplicitResult b = mod_implicit(sys, opt);
  CHECK(a.g == b.g);
  CHECK(a.primes_used == b.primes_used);
  CHECK(render(a.g) == render(b.g));
}

TEST_CASE("verify") {
  ParamSystem sys = load_problem_file(corpus("t2t3t4"));
  RingPtr xr = make_modular_context(sys, Engine::Direct).out_ring_q;
  CHECK(verify_implicit(parse_polynomial("x1*x3 - x2^2", xr), sys));
  CHECK_FALSE(verify_implicit(parse_polynomial("x3 - x1^2", xr), sys));

  ParamSystem bp = load_problem_file(corpus("badprimes"));
  RingPtr xb = make_modular_context(bp, Engine::Direct).out_ring_q;
  CHECK(verify_implicit(parse_polynomial(kBadprimesAnswer, xb), bp));
  ParamSystem triv = load_problem_file(corpus("trivial"));
  RingPtr xt = make_modular_context(triv, Engine::Direct).out_ring_q;
  CHECK(verify_implicit(parse_polynomial("x1 - x2", xt), triv));
}

TEST_CASE("single prime method") {
  SUBCASE("trivial") {
    ParamSystem sys = load_problem_file(corpus("trivial"));
    SinglePrimeResult r = single_prime_guess(sys, 32003);
    REQUIRE(r.ok);
    CHECK(same_up_to_scalar(r.g, parse_polynomial("x1 - x2", r.g.ring())));
  }
  SUBCASE("rational support via ratpar") {
    ParamSystem sys = load_problem_file(corpus("t2t3t4"));
    SinglePrimeResult r = single_prime_guess(sys, 32003);
    REQUIRE(r.ok);
    CHECK(same_up_to_scalar(r.g, parse_polynomial("x1*x3 - x2^2", r.g.ring())));
    CHECK(r.g.lc() == Rat(1));  // leading coefficient pinned
  }
  SUBCASE("a bad prime fails verification") {
    ParamSystem sys = load_problem_file(corpus("badprimes"));
    SinglePrimeResult r = single_prime_guess(sys, 3);
    CHECK_FALSE(r.ok);
    CHECK(r.failure == "verification-failed");
  }
}
