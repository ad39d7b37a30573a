#pragma once

#include "imx/direct.hpp"
#include "imx/engines.hpp"

namespace imx {

enum class Engine { ElimTH, Direct };

inline const char* engine_name(Engine e) { return e == Engine::ElimTH ? "elimth" : "direct"; }

/// The rational system rewritten as an equal-degree homogeneous polynomial
/// one: coordinates (P_1, ..., P_n, Q) over K[t..., h], all of degree
/// d = max(deg q, deg p_i), with x0 (mapped to Q) ordered last.
template <class K>
struct HomView {
  SysView<K> view;
  int x0_index = 0;  // position of x0 among view.xnames
  long long d = 0;
};

template <class K>
HomView<K> make_hom_view(const SysView<K>& sys) {
  const int s = sys.nparams();
  HomView<K> hv;
  long long d = sys.denom.total_degree();
  for (const auto& p : sys.numer) d = std::max(d, p.total_degree());
  hv.d = d;

  std::vector<std::string> tnames = sys.tring->names;
  std::string hname = fresh_name(tnames, "h");
  tnames.push_back(hname);
  RingPtr tring2 = make_simple_ring(tnames, sys.tring->characteristic);
  std::vector<int> tmap(s);
  for (int i = 0; i < s; ++i) tmap[i] = i;

  hv.view.tring = tring2;
  hv.view.xnames = sys.xnames;
  std::vector<std::string> taken = tnames;
  for (const auto& xn : sys.xnames) taken.push_back(xn);
  std::string x0 = fresh_name(taken, "x0");
  hv.view.xnames.push_back(x0);
  hv.x0_index = static_cast<int>(sys.xnames.size());

  for (const auto& p : sys.numer)
    hv.view.numer.push_back(shifted_homogenize(map_into(p, tring2, tmap), d, s));
  hv.view.numer.push_back(shifted_homogenize(map_into(sys.denom, tring2, tmap), d, s));
  hv.view.denom =
      Polynomial<K>::constant(tring2, one_like(sys.denom.lc()));
  return hv;
}

/// Cancel common content between q and all the p_i before homogenizing:
/// shared monomial factors always, plus the polynomial gcd when there is a
/// single parameter.
template <class K>
void reduce_fraction_system(SysView<K>& sys) {
  const int s = sys.nparams();
  // Common monomial factor.
  PowerProduct common(s);
  bool first = true;
  auto fold = [&](const Polynomial<K>& f) {
    for (const auto& t : f.terms()) {
      if (first) {
        common = t.pp;
        first = false;
      } else {
        for (int i = 0; i < s; ++i)
          if (t.pp.exp(i) < common.exp(i)) common.set_exp(i, t.pp.exp(i));
      }
    }
  };
  fold(sys.denom);
  for (const auto& p : sys.numer)
    if (!p.is_zero()) fold(p);
  if (!first && !common.is_one()) {
    auto strip = [&](Polynomial<K>& f) {
      std::vector<Term<K>> ts = f.terms();
      for (auto& t : ts) t.pp = t.pp / common;
      f = Polynomial<K>::from_sorted(f.ring(), std::move(ts));
    };
    strip(sys.denom);
    for (auto& p : sys.numer)
      if (!p.is_zero()) strip(p);
  }
  if (s != 1) return;
  // Univariate: divide out gcd(q, p_1, ..., p_n) by Euclid.
  auto poly_gcd1 = [&](Polynomial<K> a, Polynomial<K> b) {
    while (!b.is_zero()) {
      // remainder of a by b in one variable
      Polynomial<K> r = a;
      while (!r.is_zero() && r.lpp().divisible_by(b.lpp()))
        r = sub(r, mul_term(b, r.lpp() / b.lpp(), r.lc() * inv(b.lc())));
      a = b;
      b = r;
    }
    return a;
  };
  Polynomial<K> g = sys.denom;
  for (const auto& p : sys.numer) {
    if (p.is_zero()) continue;
    g = poly_gcd1(g, p);
    if (g.is_constant()) return;
  }
  if (g.is_constant()) return;
  auto div_exact = [&](const Polynomial<K>& f) {
    Polynomial<K> r = f, q(f.ring());
    std::vector<Term<K>> qt;
    while (!r.is_zero()) {
      PowerProduct pp = r.lpp() / g.lpp();
      K c = r.lc() * inv(g.lc());
      qt.push_back({pp, c});
      r = sub(r, mul_term(g, pp, c));
    }
    return Polynomial<K>::from_terms(f.ring(), std::move(qt));
  };
  sys.denom = div_exact(sys.denom);
  for (auto& p : sys.numer)
    if (!p.is_zero()) p = div_exact(p);
}

template <class K>
struct RatParResult {
  Polynomial<K> g;  // monic generator in the system's output x-ring
  long long native_degree = 0;       // ElimTH bad-prime key
  bool has_native_lpp = false;
  PowerProduct native_lpp;           // Direct bad-prime key (homogeneous ring)
  std::vector<std::string> warnings;
};

/// Rational-parametrization implicitization: homogenize to equal degree d,
/// implicitize the polynomial system (Q, P_1, ..., P_n) with the chosen
/// engine, and dehomogenize the generator at x0.
template <class K>
RatParResult<K> rat_par(const SysView<K>& sys_in, Engine engine, Budget budget = {},
                        const OrderingMatrix* fixed_sigma = nullptr,
                        bool gcd_prereduce = true) {
  if (sys_in.denom.is_zero()) throw ZeroDenominator();
  RatParResult<K> res;

  if (sys_in.polynomial_case()) {
    // q = 1: degenerate rational case, delegate untouched.
    if (engine == Engine::ElimTH) {
      GBOptions<K> opts;
      opts.budget = budget;
      auto r = elim_th(sys_in, opts);
      res.g = r.g;
      res.native_degree = r.native_degree;
      res.warnings = r.warnings;
    } else {
      DirectOptions opts;
      opts.budget = budget;
      opts.sigma = fixed_sigma ? *fixed_sigma : build_direct_ordering(sys_in);
      auto r = direct(sys_in, opts);
      res.has_native_lpp = true;
      res.native_lpp = r.g.lpp();
      res.g = monic(to_ring(r.g, output_xring(sys_in, sys_in.tring->characteristic)));
      res.warnings = r.warnings;
    }
    return res;
  }

  SysView<K> sys = sys_in;
  if (gcd_prereduce) reduce_fraction_system(sys);
  // Zero numerators are constant coordinates (deg 0 = 0); they carry no
  // relation beyond x_i itself, so they are flagged and split off.
  for (size_t i = sys.numer.size(); i-- > 0;) {
    if (!sys.numer[i].is_zero()) continue;
    res.warnings.push_back("zero numerator coordinate " + sys.xnames[i] +
                           " split off (deg 0 = 0 applied)");
    sys.numer.erase(sys.numer.begin() + static_cast<long>(i));
    sys.xnames.erase(sys.xnames.begin() + static_cast<long>(i));
  }

  HomView<K> hv = make_hom_view(sys);
  const int n = sys.ntargets();
  RingPtr xring = output_xring(sys_in, sys_in.tring->characteristic);
  std::vector<int> deh_map(n + 1, 0);
  for (int i = 0; i < n; ++i) deh_map[i] = i;
  deh_map[hv.x0_index] = 0;  // exponent already cleared by dehomogenize

  if (engine == Engine::ElimTH) {
    GBOptions<K> opts;
    opts.budget = budget;
    auto r = elim_th(hv.view, opts);
    res.native_degree = r.native_degree;
    for (auto& w : r.warnings) res.warnings.push_back(w);
    if (r.g.is_zero()) {
      res.g = Polynomial<K>(xring);
      return res;
    }
    Polynomial<K> deh = dehomogenize(r.g, hv.x0_index);
    res.g = monic(map_into(deh, xring, deh_map));
  } else {
    DirectOptions opts;
    opts.budget = budget;
    opts.sigma = fixed_sigma ? *fixed_sigma : build_direct_ordering(hv.view);
    auto r = direct(hv.view, opts);
    res.has_native_lpp = true;
    res.native_lpp = r.g.lpp();
    for (auto& w : r.warnings) res.warnings.push_back(w);
    Polynomial<K> deh = dehomogenize(r.g, hv.x0_index);
    res.g = monic(map_into(deh, xring, deh_map));
  }
  return res;
}

struct CounterexampleReport {
  // Elimination ideal of the homogenized uq-1 construction: not principal.
  std::vector<Polynomial<Rat>> naive_route;
  // First parameter-free element under the unequal-degree weighted grading.
  Polynomial<Rat> weighted_route_first;
  // The equal-degree RatPar answer on the same parametrization.
  Polynomial<Rat> equal_degree_answer;
};

/// Reproduces the two documented failure modes of shortcut homogenizations,
/// plus the correct equal-degree answer for contrast.
CounterexampleReport counterexample_checks();

}  // namespace imx
