#pragma once

#include "imx/elim.hpp"
#include "imx/sysview.hpp"

namespace imx {

template <class K>
struct ElimThResult {
  Polynomial<K> g;  // monic generator in the output x-ring; zero if none found
  long long native_degree = 0;  // weighted degree of the homogeneous G (bad-prime key)
  std::vector<long long> pair_degrees;
  std::vector<Polynomial<K>> trace_basis;  // basis elements added (when tracked)
  std::vector<std::string> warnings;
};

/// Truncated homogeneous elimination: homogenize the coordinates, grade by
/// deg(x_i) = deg(f_i), run Buchberger degree by degree under an elimination
/// ordering for the parameters, and stop at the first basis element whose
/// leading term is free of them. Polynomial parametrizations only.
template <class K>
ElimThResult<K> elim_th(const SysView<K>& sys, GBOptions<K> base_opts = {}) {
  assert(sys.polynomial_case());
  const int s = sys.nparams();
  const int n = sys.ntargets();
  ElimThResult<K> res;
  if (s >= n)
    res.warnings.push_back("s >= n: the implicitization may be the zero ideal");

  std::vector<std::string> names = sys.tring->names;
  std::string hname = fresh_name(names, "h");
  names.push_back(hname);
  const int h_idx = s;
  std::vector<long long> weights(s + 1, 1);
  std::vector<int> tmap(s);
  for (int i = 0; i < s; ++i) tmap[i] = i;
  for (int i = 0; i < n; ++i) {
    names.push_back(sys.xnames[i]);
    long long d = sys.numer[i].total_degree();
    if (d == 0) throw ConstantCoordinate("coordinate " + sys.xnames[i] + " is constant");
    weights.push_back(d);
  }
  OrderBlock tblk, xblk;
  for (int i = 0; i < s; ++i) tblk.vars.push_back(i);
  xblk.vars.push_back(h_idx);
  xblk.weights.push_back(1);
  for (int i = 0; i < n; ++i) {
    xblk.vars.push_back(s + 1 + i);
    xblk.weights.push_back(weights[s + 1 + i]);
  }
  RingPtr big = make_ring(names, weights, block_order(s + 1 + n, {tblk, xblk}),
                          sys.tring->characteristic);

  K one = one_like(sys.numer[0].lc());
  std::vector<Polynomial<K>> gens;
  for (int i = 0; i < n; ++i) {
    Polynomial<K> fi = map_into(sys.numer[i], big, tmap);
    Polynomial<K> Fi = homogenize(fi, h_idx);
    Polynomial<K> xi = Polynomial<K>::variable(big, s + 1 + i, one);
    gens.push_back(sub(xi, Fi));
  }

  GBOptions<K> opts = base_opts;
  opts.stop = [&](const Polynomial<K>& f) {
    for (int i = 0; i < s; ++i)
      if (f.lpp().exp(i)) return false;
    return true;
  };
  GBResult<K> gb = buchberger<K>(big, std::move(gens), opts);
  if (base_opts.track) {
    res.pair_degrees = gb.pair_degrees;
    res.trace_basis = gb.basis;
  }

  RingPtr xring = output_xring(sys, sys.tring->characteristic);
  if (!gb.trigger) {
    res.g = Polynomial<K>(xring);  // zero ideal: no parameter-free element
    return res;
  }
  res.native_degree = gb.trigger->weighted_degree();
  Polynomial<K> deh = dehomogenize(*gb.trigger, h_idx);
  std::vector<int> xmap(s + 1 + n, 0);
  for (int i = 0; i < n; ++i) xmap[s + 1 + i] = i;
  res.g = monic(map_into(deh, xring, xmap));
  return res;
}

/// The classical elimination oracle (slow, no principality assumption):
/// polynomial case eliminates the t_i from <x_i - f_i>; rational case
/// eliminates the t_i and u from <q*x_i - p_i> + <u*q - 1>.
template <class K>
std::vector<Polynomial<K>> classical_implicitization(const SysView<K>& sys,
                                                     const Budget& budget = {}) {
  const int s = sys.nparams();
  const int n = sys.ntargets();
  const bool rational = !sys.polynomial_case();
  const int extra = rational ? 1 : 0;  // the u indeterminate
  std::vector<std::string> names = sys.tring->names;
  std::string uname = fresh_name(names, "u");
  if (rational) names.push_back(uname);
  for (const auto& xn : sys.xnames) names.push_back(xn);
  const int dim = s + extra + n;

  OrderBlock eblk, xblk;
  for (int i = 0; i < s + extra; ++i) eblk.vars.push_back(i);
  for (int i = 0; i < n; ++i) xblk.vars.push_back(s + extra + i);
  RingPtr big = make_ring(names, std::vector<long long>(dim, 1),
                          block_order(dim, {eblk, xblk}), sys.tring->characteristic);

  std::vector<int> tmap(s);
  for (int i = 0; i < s; ++i) tmap[i] = i;
  K one = one_like(rational ? sys.denom.lc() : sys.numer[0].lc());

  std::vector<Polynomial<K>> gens;
  Polynomial<K> q = map_into(sys.denom, big, tmap);
  for (int i = 0; i < n; ++i) {
    Polynomial<K> pi = map_into(sys.numer[i], big, tmap);
    Polynomial<K> xi = Polynomial<K>::variable(big, s + extra + i, one);
    gens.push_back(sub(mul(q, xi), pi));
  }
  if (rational) {
    Polynomial<K> u = Polynomial<K>::variable(big, s, one);
    gens.push_back(sub(mul(u, q), Polynomial<K>::constant(big, one)));
  }

  RingPtr xring = output_xring(sys, sys.tring->characteristic);
  std::vector<int> keep(dim, -1);
  for (int i = 0; i < n; ++i) keep[s + extra + i] = i;
  return elimination_ideal<K>(big, gens, keep, xring, budget);
}

}  // namespace imx
