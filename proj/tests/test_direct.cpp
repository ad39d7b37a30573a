#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "imx/direct.hpp"
#include "imx/engines.hpp"
#include "imx/parse.hpp"

using namespace imx;

namespace {

std::string corpus(const std::string& name) {
  return std::string(IMX_CORPUS_DIR) + "/" + name + ".prob";
}

// Independent phi: expand the product of coordinate powers directly.
template <class K>
Polynomial<K> phi_slow(const PowerProduct& pp, const SysView<K>& sys) {
  Polynomial<K> acc = Polynomial<K>::constant(sys.tring, one_like(sys.numer[0].lc()));
  for (int i = 0; i < pp.dim(); ++i)
    if (pp.exp(i)) acc = mul(acc, poly_pow(sys.numer[i], pp.exp(i)));
  return acc;
}

}  // namespace

TEST_CASE("build_direct_ordering") {
  SUBCASE("single square coordinate") {
    ParamSystem sys = load_problem_text("params: t\nx1 = t^2\n");
    OrderingMatrix m = build_direct_ordering(view_q(sys));
    REQUIRE(m.rows.size() == 1);
    CHECK(m.rows[0] == std::vector<long long>{2});
  }
  SUBCASE("order vectors of the leading power-products, completed") {
    ParamSystem sys = load_problem_file(corpus("quintic"));
    OrderingMatrix tau;
    tau.rows = {{1, 1}, {1, 0}};
    OrderingMatrix m = build_direct_ordering(view_q(sys), tau);
    // M = M_tau * E for LPPs s^5, s*t^2, s^4 (columns (5,5), (3,1), (4,4)),
    // completed by a reversed negated identity row.
    REQUIRE(m.rows.size() == 3);
    CHECK(m.rows[0] == std::vector<long long>{5, 3, 4});
    CHECK(m.rows[1] == std::vector<long long>{5, 1, 4});
    CHECK(m.rows[2] == std::vector<long long>{0, 0, -1});
    CHECK(m.enumerative());
    CHECK(matrix_invertible(m.rows, 3));
  }
  SUBCASE("dependent rows are dropped, completion keeps it invertible") {
    ParamSystem sys = load_problem_text("params: t\nx1 = t^2\nx2 = t^3\n");
    OrderingMatrix m = build_direct_ordering(view_q(sys));
    REQUIRE(m.rows.size() == 2);
    CHECK(m.rows[0] == std::vector<long long>{2, 3});
    CHECK(m.rows[0][0] > 0);
    CHECK(matrix_invertible(m.rows, 2));
  }
  SUBCASE("constant coordinate rejected") {
    ParamSystem sys = load_problem_text("params: t\nx1 = t\nx2 = t\n");
    SysView<Rat> v = view_q(sys);
    v.numer[1] = Polynomial<Rat>::constant(v.tring, Rat(5));
    CHECK_THROWS_AS(build_direct_ordering(v), ConstantCoordinate);
  }
}

TEST_CASE("echelon offers over Z/5") {
  OrderingMatrix tau = degrevlex_order(1);
  RowKeyPacker<uint64_t> pk(tau);
  RingPtr t = make_ring({"t"}, {1}, tau, 5);
  Echelon<Fp, uint64_t> ech;
  Fp one(1, 5);

  // zero row against the empty state: dependency with empty combination
  ERow<Fp, uint64_t> zero;
  auto dep0 = ech.offer(std::move(zero), 0, one);
  REQUIRE(dep0);
  CHECK(dep0->empty());

  auto row_of = [&](std::initializer_list<int> cs) {
    std::vector<Term<Fp>> ts;
    int e = 0;
    for (int c : cs) {
      PowerProduct pp(1);
      pp.set_exp(0, e++);
      if (c) ts.push_back({pp, Fp(c, 5)});
    }
    return poly_to_row(Polynomial<Fp>::from_terms(t, std::move(ts)), pk);
  };
  // rows (1,2) then (2,4): the second is 2x the first
  CHECK_FALSE(ech.offer(row_of({1, 2}), 0, one));
  auto dep = ech.offer(row_of({2, 4}), 1, one);
  REQUIRE(dep);
  REQUIRE(dep->size() == 1);
  CHECK((*dep)[0] == Fp(2, 5));
  // (0,1) after pivot (1,2): a new pivot at the second monomial
  CHECK_FALSE(ech.offer(row_of({0, 1}), 2, one));
  CHECK(ech.row_count() == 2);
}

TEST_CASE("phi images are independent of the parent factorization") {
  ParamSystem sys = load_problem_file(corpus("ex12"));
  SysView<Fp> v = view_fp(sys, 32003);
  OrderingMatrix tau = degrevlex_order(1);
  RowKeyPacker<uint64_t> pk(tau);
  ERow<Fp, uint64_t> f1 = poly_to_row(v.numer[0], pk);
  ERow<Fp, uint64_t> f2 = poly_to_row(v.numer[1], pk);
  // phi(x1 x2) both ways
  ERow<Fp, uint64_t> a = row_mul(f1, f2, pk);
  ERow<Fp, uint64_t> b = row_mul(f2, f1, pk);
  CHECK(a.ks == b.ks);
  REQUIRE(a.cs.size() == b.cs.size());
  for (size_t i = 0; i < a.cs.size(); ++i) CHECK(a.cs[i] == b.cs[i]);
  // and against the slow expansion
  PowerProduct pp(2);
  pp.set_exp(0, 1);
  pp.set_exp(1, 1);
  ERow<Fp, uint64_t> slow = poly_to_row(phi_slow(pp, v), pk);
  CHECK(a.ks == slow.ks);
}

TEST_CASE("direct on trivial input") {
  ParamSystem sys = load_problem_text("params: t\nx1 = t\nx2 = t\n");
  SysView<Rat> v = view_q(sys);
  DirectOptions opt;
  opt.sigma = build_direct_ordering(v);
  DirectResult<Rat> r = direct(v, opt);
  CHECK(same_up_to_scalar(r.g, parse_polynomial("x1 - x2", r.g.ring())));
}

TEST_CASE("direct returns the sigma-smallest element on non-principal input") {
  ParamSystem sys = load_problem_text(
      "params: u\n"
      "x1 = u^2\n"
      "x2 = u^2 + 1\n"
      "x3 = u^2 + u + 1\n");
  SysView<Rat> v = view_q(sys);
  DirectOptions opt;
  opt.sigma = build_direct_ordering(v);
  DirectResult<Rat> r = direct(v, opt);
  // derived by hand: phi(x1) = -1 + phi(x2), found at PP = x1
  CHECK(r.g == parse_polynomial("x1 - x2 + 1", r.g.ring()));
}

TEST_CASE("direct equals elim_th on small corpus problems") {
  for (const char* name : {"dandrea", "quintic", "buse1"}) {
    ParamSystem sys = load_problem_file(corpus(name));
    SysView<Fp> v = view_fp(sys, 32003);
    DirectOptions opt;
    opt.sigma = build_direct_ordering(v);
    DirectResult<Fp> dr = direct(v, opt);
    CHECK(dr.pivots_tau_monotone);
    ElimThResult<Fp> er = elim_th(v);
    CHECK(same_up_to_scalar(to_ring(dr.g, er.g.ring()), er.g));
  }
}

TEST_CASE("direct reproduces the Wang support size") {
  ParamSystem sys = load_problem_file(corpus("wang"));
  SysView<Fp> v = view_fp(sys, 32003);
  DirectOptions opt;
  opt.sigma = build_direct_ordering(v);
  DirectResult<Fp> r = direct(v, opt);
  CHECK(r.g.support_size() == 715);
  CHECK(r.pivots_tau_monotone);
}

TEST_CASE("frontier invariant and minimality on random small problems") {
  std::mt19937_64 rng(404);
  int done = 0;
  while (done < 10) {
    // random nonconstant coordinates over one parameter, n = 2
    RingPtr t = make_simple_ring({"t"}, 0);
    std::vector<Polynomial<Rat>> fs;
    for (int i = 0; i < 2; ++i) {
      std::vector<Term<Rat>> ts;
      int deg = 1 + static_cast<int>(rng() % 4);
      for (int e = deg; e >= 0; --e) {
        long long c = static_cast<long long>(rng() % 7) - 3;
        if (e == deg && c == 0) c = 1;
        if (c) {
          PowerProduct pp(1);
          pp.set_exp(0, static_cast<uint32_t>(e));
          ts.push_back({pp, Rat(c)});
        }
      }
      fs.push_back(Polynomial<Rat>::from_terms(t, std::move(ts)));
    }
    if (fs[0].is_constant() || fs[1].is_constant()) continue;
    SysView<Rat> v;
    v.tring = t;
    v.xnames = {"x1", "x2"};
    v.numer = fs;
    v.denom = Polynomial<Rat>::constant(t, Rat(1));
    DirectOptions opt;
    opt.sigma = build_direct_ordering(v);
    opt.check_frontier = true;  // asserts the PPL invariant every iteration
    opt.keep_cache = true;
    DirectResult<Rat> r = direct(v, opt);
    CHECK_FALSE(r.g.is_zero());
    CHECK(substitute_cleared(r.g, v.numer, v.denom).is_zero());

    // Minimality: the images of QB alone are independent (re-offer each into
    // a fresh echelon, recomputed independently of the engine's cache).
    OrderingMatrix tau = degrevlex_order(1);
    RowKeyPacker<uint64_t> pk(tau);
    Echelon<Rat, uint64_t> fresh;
    size_t k = 0;
    for (const auto& qpp : r.qb) {
      auto dep = fresh.offer(poly_to_row(phi_slow(qpp, v), pk), k++, Rat(1));
      CHECK_FALSE(dep);
    }
    ++done;
  }
}

TEST_CASE("relaxed degree-only enumeration agrees up to scalar") {
  for (const char* name : {"trivial", "dandrea"}) {
    ParamSystem sys = load_problem_file(corpus(name));
    SysView<Fp> v = view_fp(sys, 32003);
    DirectOptions normal;
    normal.sigma = build_direct_ordering(v);
    DirectResult<Fp> a = direct(v, normal);
    DirectOptions relaxed = normal;
    relaxed.relaxed_degree_only = true;
    DirectResult<Fp> b = direct(v, relaxed);
    CHECK(same_up_to_scalar(to_ring(a.g, b.g.ring()), b.g));
  }
}

TEST_CASE("non-enumerative orderings are rejected") {
  ParamSystem sys = load_problem_text("params: t\nx1 = t\nx2 = t\n");
  SysView<Rat> v = view_q(sys);
  DirectOptions opt;
  opt.sigma.rows = {{1, 0}, {0, 1}};  // lex, not enumerative
  CHECK_THROWS_AS(direct(v, opt), Error);
}

TEST_CASE("zero ideal needs a cap, and the cap fires") {
  ParamSystem sys = load_problem_text("params: t1 t2\nx1 = t1 + t2\nx2 = t1 - t2\n");
  SysView<Rat> v = view_q(sys);
  DirectOptions opt;
  opt.sigma = build_direct_ordering(v);
  CHECK_THROWS_AS(direct(v, opt), Error);
  opt.max_degree = 6;
  CHECK_THROWS_AS(direct(v, opt), CapExceeded);
}
