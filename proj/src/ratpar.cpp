#include "imx/ratpar.hpp"

#include "imx/parse.hpp"

namespace imx {

CounterexampleReport counterexample_checks() {
  CounterexampleReport rep;

  // Homogenized uq-1 route on f1 = f2 = s/t, f3 = s: eliminate {s,t,u} from
  // <tx - hs, ty - hs, z - s, ut - h^2> and keep K[x,y,z,h].
  {
    std::vector<std::string> names = {"s", "t", "u", "x", "y", "z", "h"};
    OrderBlock eblk, kblk;
    for (int i = 0; i < 3; ++i) eblk.vars.push_back(i);
    for (int i = 3; i < 7; ++i) kblk.vars.push_back(i);
    RingPtr big = make_ring(names, std::vector<long long>(7, 1), block_order(7, {eblk, kblk}), 0);
    std::vector<Polynomial<Rat>> gens = {
        parse_polynomial("t*x - h*s", big), parse_polynomial("t*y - h*s", big),
        parse_polynomial("z - s", big), parse_polynomial("u*t - h^2", big)};
    RingPtr keep = make_simple_ring({"x", "y", "z", "h"}, 0);
    std::vector<int> keep_map = {-1, -1, -1, 0, 1, 2, 3};
    rep.naive_route = elimination_ideal<Rat>(big, gens, keep_map, keep);
  }

  // Unequal-degree weighted grading on p = (t2^2, t2^3, t2^4), q = t1: the
  // ideal <x0 - t1, x1 - t2^2, x2 - t2^3, x3 - t2^4> is homogeneous for
  // deg(x_i) = i+1, but the first parameter-free element has degree 4, below
  // the true answer's degree 6.
  {
    std::vector<std::string> names = {"t1", "t2", "x0", "x1", "x2", "x3"};
    std::vector<long long> w = {1, 1, 1, 2, 3, 4};
    OrderBlock tblk, xblk;
    tblk.vars = {0, 1};
    xblk.vars = {2, 3, 4, 5};
    xblk.weights = {1, 2, 3, 4};
    RingPtr big = make_ring(names, w, block_order(6, {tblk, xblk}), 0);
    std::vector<Polynomial<Rat>> gens = {
        parse_polynomial("x0 - t1", big), parse_polynomial("x1 - t2^2", big),
        parse_polynomial("x2 - t2^3", big), parse_polynomial("x3 - t2^4", big)};
    GBOptions<Rat> opts;
    opts.stop = [](const Polynomial<Rat>& f) {
      return f.lpp().exp(0) == 0 && f.lpp().exp(1) == 0;
    };
    GBResult<Rat> gb = buchberger<Rat>(big, gens, opts);
    assert(gb.trigger);
    RingPtr xring = make_ring({"x0", "x1", "x2", "x3"}, {1, 2, 3, 4},
                              degrevlex_order(4, {1, 2, 3, 4}), 0);
    rep.weighted_route_first = map_into(*gb.trigger, xring, {0, 0, 0, 1, 2, 3});
  }

  // The equal-degree construction on the same parametrization.
  {
    ParamSystem sys = load_problem_text(
        "char: 0\n"
        "params: t1 t2\n"
        "x1 = t2^2/t1\n"
        "x2 = t2^3/t1\n"
        "x3 = t2^4/t1\n");
    rep.equal_degree_answer = rat_par(view_q(sys), Engine::ElimTH).g;
  }
  return rep;
}

}  // namespace imx
