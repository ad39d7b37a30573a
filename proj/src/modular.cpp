#include "imx/modular.hpp"

#include <random>
#include <set>

#include "imx/crt.hpp"

namespace imx {

namespace {

struct OutLess {
  const Ring* ring = nullptr;
  bool operator()(const PowerProduct& a, const PowerProduct& b) const {
    return pp_less(ring->order, a, b);
  }
};

// f_i = p_i/q as a pair of integer polynomials with no common integer factor.
struct IntPair {
  std::vector<std::pair<PowerProduct, BigInt>> num, den;
  long long num_deg = 0, den_deg = 0;
};

IntPair integer_pair(const Polynomial<Rat>& p, const Polynomial<Rat>& q) {
  BigInt l = 1;
  for (const auto& t : p.terms())
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.get_den().get_mpz_t());
  for (const auto& t : q.terms())
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.get_den().get_mpz_t());
  IntPair out;
  BigInt g = 0;
  auto conv = [&](const Polynomial<Rat>& f, std::vector<std::pair<PowerProduct, BigInt>>& v) {
    for (const auto& t : f.terms()) {
      BigInt c = t.c.get_num() * (l / t.c.get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      v.emplace_back(t.pp, std::move(c));
    }
  };
  conv(p, out.num);
  conv(q, out.den);
  if (g > 1) {
    for (auto& [pp, c] : out.num) c /= g;
    for (auto& [pp, c] : out.den) c /= g;
  }
  out.num_deg = p.total_degree();
  out.den_deg = q.total_degree();
  return out;
}

long long reduced_degree(const std::vector<std::pair<PowerProduct, BigInt>>& v, const BigInt& p,
                         bool& zero) {
  long long d = -1;
  for (const auto& [pp, c] : v)
    if (c % p != 0) d = std::max(d, pp.total_degree());
  zero = d < 0;
  return d;
}

}  // namespace

PrimeVerdict classify_prime(const ParamSystem& sys, uint64_t p) {
  PrimeVerdict v;
  v.p = p;
  BigInt bp(static_cast<unsigned long>(p));
  for (const auto& num : sys.numer) {
    IntPair pr = integer_pair(num, sys.denom);
    bool den_zero = false, num_zero = false;
    long long dd = reduced_degree(pr.den, bp, den_zero);
    if (den_zero) {
      v.kind = PrimeVerdict::UnsuitableA;
      return v;
    }
    long long nd = reduced_degree(pr.num, bp, num_zero);
    if (num_zero || nd < pr.num_deg || dd < pr.den_deg) {
      v.kind = PrimeVerdict::UnsuitableB;
      return v;
    }
  }
  v.kind = PrimeVerdict::Suitable;
  return v;
}

ModularContext make_modular_context(const ParamSystem& sys, Engine engine) {
  ModularContext cx;
  cx.engine = engine;
  cx.rational = !sys.polynomial_case();
  SysView<Rat> vq = view_q(sys);
  cx.out_ring_q = output_xring(vq, 0);
  if (engine == Engine::Direct) {
    if (cx.rational) {
      HomView<Rat> hv = make_hom_view(vq);
      cx.sigma = build_direct_ordering(hv.view);
    } else {
      cx.sigma = build_direct_ordering(vq);
    }
  }
  return cx;
}

ModularRun modular_implicitize(const ParamSystem& sys, uint64_t p, const ModularContext& cx,
                               const Budget& budget) {
  SysView<Fp> v = view_fp(sys, static_cast<uint32_t>(p));
  ModularRun run;
  RingPtr out_p = make_ring(cx.out_ring_q->names, cx.out_ring_q->weights, cx.out_ring_q->order,
                            static_cast<long long>(p));
  if (cx.rational || !v.polynomial_case()) {
    RatParResult<Fp> r = rat_par(v, cx.engine, budget,
                                 cx.engine == Engine::Direct ? &cx.sigma : nullptr);
    run.g = to_ring(r.g, out_p);
    run.deg_key = r.native_degree;
    run.has_lpp_key = r.has_native_lpp;
    run.lpp_key = r.native_lpp;
  } else if (cx.engine == Engine::ElimTH) {
    GBOptions<Fp> opts;
    opts.budget = budget;
    ElimThResult<Fp> r = elim_th(v, opts);
    run.g = to_ring(r.g, out_p);
    run.deg_key = r.native_degree;
  } else {
    DirectOptions opts;
    opts.budget = budget;
    opts.sigma = cx.sigma;
    DirectResult<Fp> r = direct(v, opts);
    run.has_lpp_key = true;
    run.lpp_key = r.g.lpp();
    run.g = to_ring(r.g, out_p);
  }
  if (!run.g.is_zero()) run.g = monic(run.g);
  return run;
}

FilterDecision bad_prime_filter(const ModularRun& incoming, const ModularRun& current,
                                const ModularContext& cx) {
  if (cx.engine == Engine::Direct) {
    if (!incoming.has_lpp_key || !current.has_lpp_key) throw EngineMismatch();
    Cmp c = compare(cx.sigma, incoming.lpp_key, current.lpp_key);
    if (c == Cmp::LT) return FilterDecision::DiscardNew;
    if (c == Cmp::GT) return FilterDecision::ResetToNew;
    return FilterDecision::Accept;
  }
  if (incoming.has_lpp_key || current.has_lpp_key) throw EngineMismatch();
  if (incoming.deg_key < current.deg_key) return FilterDecision::DiscardNew;
  if (incoming.deg_key > current.deg_key) return FilterDecision::ResetToNew;
  return FilterDecision::Accept;
}

bool verify_implicit(const Polynomial<Rat>& g, const ParamSystem& sys, uint64_t seed,
                     int precheck_points) {
  if (g.is_zero()) return false;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> dist(-1000000, 1000000);
  const int s = sys.nparams();
  for (int k = 0; k < precheck_points; ++k) {
    std::vector<Rat> tt(s);
    Rat qv;
    int guard = 0;
    do {
      for (auto& t : tt) t = Rat(dist(rng));
      qv = evaluate(sys.denom, tt, Rat(1));
      if (++guard > 100) return false;
    } while (is_zero(qv));
    std::vector<Rat> point;
    point.reserve(sys.numer.size());
    for (const auto& p : sys.numer) point.push_back(evaluate(p, tt, Rat(1)) / qv);
    if (!is_zero(evaluate(g, point, Rat(1)))) return false;
  }
  return substitute_cleared(g, sys.numer, sys.denom).is_zero();
}

ModImplicitResult mod_implicit(const ParamSystem& sys, const ModularOptions& opt) {
  ModImplicitResult res;
  std::vector<uint64_t> pool = opt.pool.empty() ? prime_pool() : opt.pool;
  ModularContext cx = make_modular_context(sys, opt.engine);

  OutLess out_less{cx.out_ring_q.get()};
  std::map<PowerProduct, BigInt, OutLess> accum(out_less);
  BigInt pi = 1;
  size_t naccum = 0;
  ModularRun current;

  auto accept_into = [&](const ModularRun& run, uint64_t p) {
    BigInt bp(static_cast<unsigned long>(p));
    std::map<PowerProduct, BigInt, OutLess> merged(out_less);
    for (const auto& t : run.g.terms()) merged[t.pp] = BigInt(t.c.r);
    // Union of supports: a term absent mod one prime contributes residue 0.
    std::set<PowerProduct, OutLess> keys(out_less);
    for (const auto& [pp, r] : accum) keys.insert(pp);
    for (const auto& [pp, r] : merged) keys.insert(pp);
    std::map<PowerProduct, BigInt, OutLess> next(out_less);
    for (const auto& pp : keys) {
      BigInt r_old = accum.count(pp) ? accum[pp] : BigInt(0);
      BigInt r_new = merged.count(pp) ? merged[pp] : BigInt(0);
      next[pp] = crt_combine({r_old, pi}, {r_new, bp}).first;
    }
    accum = std::move(next);
    pi *= bp;
    ++naccum;
  };

  for (uint64_t p : pool) {
    opt.budget.check();
    ++res.primes_tried;
    PrimeLogEntry log;
    log.p = p;
    PrimeVerdict verdict = classify_prime(sys, p);
    log.classification = verdict.name();
    if (!verdict.suitable()) {
      log.filter = "-";
      log.recon = "-";
      res.log.push_back(std::move(log));
      continue;
    }
    ModularRun run = modular_implicitize(sys, p, cx, opt.budget);
    log.support = run.g.support_size();
    if (run.g.is_zero()) {
      log.filter = "discard-zero";
      log.recon = "-";
      res.log.push_back(std::move(log));
      continue;
    }
    if (naccum == 0) {
      accum.clear();
      for (const auto& t : run.g.terms()) accum[t.pp] = BigInt(t.c.r);
      pi = BigInt(static_cast<unsigned long>(p));
      naccum = 1;
      current = run;
      log.filter = "init";
    } else {
      switch (bad_prime_filter(run, current, cx)) {
        case FilterDecision::DiscardNew:
          log.filter = "discard-new";
          log.recon = "-";
          res.log.push_back(std::move(log));
          continue;
        case FilterDecision::ResetToNew:
          accum.clear();
          for (const auto& t : run.g.terms()) accum[t.pp] = BigInt(t.c.r);
          pi = BigInt(static_cast<unsigned long>(p));
          naccum = 1;
          current = run;
          log.filter = "reset-to-new";
          break;
        case FilterDecision::Accept:
          accept_into(run, p);
          log.filter = "accept";
          break;
      }
    }

    if (naccum < 2) {
      log.recon = "skipped";
      res.log.push_back(std::move(log));
      continue;
    }
    bool all_reliable = true;
    std::vector<Term<Rat>> terms;
    for (const auto& [pp, r] : accum) {
      RatRec rec = rat_reconstruct(r, pi, opt.threshold);
      if (!rec.found || !rec.reliable) {
        all_reliable = false;
        break;
      }
      if (!is_zero(rec.value)) terms.push_back({pp, rec.value});
    }
    if (!all_reliable) {
      log.recon = "unreliable";
      res.log.push_back(std::move(log));
      continue;
    }
    Polynomial<Rat> g_calc = Polynomial<Rat>::from_terms(cx.out_ring_q, std::move(terms));
    if (g_calc.is_zero()) {
      log.recon = "zero";
      res.log.push_back(std::move(log));
      continue;
    }
    if (!verify_implicit(g_calc, sys, opt.seed, opt.precheck_points)) {
      log.recon = "verify-failed";
      res.log.push_back(std::move(log));
      continue;
    }
    log.recon = "ok";
    res.log.push_back(std::move(log));
    if (!(g_calc.lc() == Rat(1)))
      res.warnings.push_back("reconstructed generator was not already monic");
    res.g = monic(g_calc);
    res.primes_used = naccum;
    return res;
  }
  throw PrimePoolExhausted();
}

SinglePrimeResult single_prime_guess(const ParamSystem& sys, uint64_t p, Engine engine,
                                     uint64_t seed) {
  SinglePrimeResult out;
  ModularContext cx = make_modular_context(sys, engine);
  ModularRun run = modular_implicitize(sys, p, cx);
  if (run.g.is_zero()) {
    out.failure = "singular-system";
    return out;
  }
  const size_t n_supp = run.g.support_size();
  std::vector<PowerProduct> supp;
  supp.reserve(n_supp);
  for (const auto& t : run.g.terms()) supp.push_back(t.pp);  // supp[0] = leading

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> dist(-999, 999);
  const int s = sys.nparams();
  const int unknowns = static_cast<int>(n_supp) - 1;

  for (int attempt = 0; attempt < 4; ++attempt) {
    // N distinct parameter tuples avoiding the vanishing of q.
    std::set<std::vector<long long>> seen;
    std::vector<std::vector<Rat>> points;
    int guard = 0;
    while (points.size() < n_supp) {
      if (++guard > 1000) {
        out.failure = "singular-system";
        return out;
      }
      std::vector<long long> raw(s);
      for (auto& x : raw) x = dist(rng);
      if (!seen.insert(raw).second) continue;
      std::vector<Rat> tt(s);
      for (int i = 0; i < s; ++i) tt[i] = Rat(raw[i]);
      Rat qv = evaluate(sys.denom, tt, Rat(1));
      if (is_zero(qv)) continue;
      std::vector<Rat> pt;
      pt.reserve(sys.numer.size());
      for (const auto& num : sys.numer) pt.push_back(evaluate(num, tt, Rat(1)) / qv);
      points.push_back(std::move(pt));
    }
    // Rows: sum_j c_j * supp_j(point) = -supp_0(point), c pinned monic.
    std::vector<std::vector<Rat>> m(n_supp, std::vector<Rat>(unknowns + 1));
    for (size_t i = 0; i < n_supp; ++i) {
      for (int j = 0; j < unknowns; ++j) {
        Polynomial<Rat> mono =
            Polynomial<Rat>::monomial(cx.out_ring_q, supp[j + 1], Rat(1));
        m[i][j] = evaluate(mono, points[i], Rat(1));
      }
      Polynomial<Rat> lead = Polynomial<Rat>::monomial(cx.out_ring_q, supp[0], Rat(1));
      m[i][unknowns] = -evaluate(lead, points[i], Rat(1));
    }
    // Gaussian elimination.
    int row = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < unknowns && row < static_cast<int>(n_supp); ++col) {
      int pr = -1;
      for (int r = row; r < static_cast<int>(n_supp); ++r)
        if (!is_zero(m[r][col])) {
          pr = r;
          break;
        }
      if (pr < 0) continue;
      std::swap(m[row], m[pr]);
      Rat inv_p = inv(m[row][col]);
      for (int c = col; c <= unknowns; ++c) m[row][c] *= inv_p;
      for (int r = 0; r < static_cast<int>(n_supp); ++r) {
        if (r == row || is_zero(m[r][col])) continue;
        Rat f = m[r][col];
        for (int c = col; c <= unknowns; ++c) m[r][c] -= f * m[row][c];
      }
      pivot_col.push_back(col);
      ++row;
    }
    if (row < unknowns) continue;  // singular sample, retry
    bool inconsistent = false;
    for (int r = row; r < static_cast<int>(n_supp); ++r)
      if (!is_zero(m[r][unknowns])) inconsistent = true;
    std::vector<Term<Rat>> terms;
    terms.push_back({supp[0], Rat(1)});
    for (int r = 0; r < row; ++r)
      if (!is_zero(m[r][unknowns])) terms.push_back({supp[pivot_col[r] + 1], m[r][unknowns]});
    Polynomial<Rat> g_calc = Polynomial<Rat>::from_terms(cx.out_ring_q, std::move(terms));
    if (inconsistent || !verify_implicit(g_calc, sys, seed + 1)) {
      out.failure = "verification-failed";
      return out;
    }
    out.ok = true;
    out.g = std::move(g_calc);
    return out;
  }
  out.failure = "singular-system";
  return out;
}

}  // namespace imx
