#pragma once

#include <chrono>
#include <functional>
#include <memory>
#include <optional>
#include <queue>

#include "imx/geobucket.hpp"
#include "imx/polynomial.hpp"

namespace imx {

/// Cooperative deadline; engines poll it at cheap points.
struct Budget {
  bool armed = false;
  std::chrono::steady_clock::time_point deadline{};

  static Budget none() { return {}; }
  static Budget seconds(double s) {
    Budget b;
    b.armed = true;
    b.deadline = std::chrono::steady_clock::now() +
                 std::chrono::microseconds(static_cast<long long>(s * 1e6));
    return b;
  }
  void check() const {
    if (armed && std::chrono::steady_clock::now() > deadline) throw BudgetExceeded();
  }
};

namespace detail {

/// Basis entry with per-term precomputed order keys and the leading
/// power-product's weighted degree, for cheap reducer lookups.
template <class K>
struct KeyedBasis {
  std::vector<const Polynomial<K>*> polys;
  std::vector<std::vector<OrdKey>> keys;
  std::vector<long long> lead_wdeg;

  void push(const Polynomial<K>& p, const Ring& ring) {
    polys.push_back(&p);
    std::vector<OrdKey> ks;
    ks.reserve(p.terms().size());
    for (const auto& t : p.terms()) ks.push_back(ord_key(ring.order, t.pp));
    keys.push_back(std::move(ks));
    lead_wdeg.push_back(weighted_degree(p.lpp(), ring));
  }
};

template <class K>
Polynomial<K> reduce_keyed(const Polynomial<K>& f, const KeyedBasis<K>& kb,
                           const Budget* budget = nullptr) {
  if (f.is_zero() || kb.polys.empty()) return f;
  const RingPtr& ring = f.ring();
  Geobucket<K> work(ring);
  work.add_poly(f);
  std::vector<Term<K>> out;
  Term<K> t;
  size_t steps = 0;
  while (work.extract_lead(t)) {
    if (budget && (++steps & 1023) == 0) budget->check();
    int red = -1;
    long long tw = weighted_degree(t.pp, *ring);
    for (size_t i = 0; i < kb.polys.size(); ++i) {
      if (kb.lead_wdeg[i] <= tw && t.pp.divisible_by(kb.polys[i]->lpp())) {
        red = static_cast<int>(i);
        break;
      }
    }
    if (red < 0) {
      out.push_back(std::move(t));
      continue;
    }
    const Polynomial<K>& b = *kb.polys[red];
    K fac = t.c * inv(b.lc());
    work.add_scaled(b, t.pp / b.lpp(), -fac, 1, &kb.keys[red]);
  }
  return Polynomial<K>::from_sorted(ring, std::move(out));
}

}  // namespace detail

/// Fully tail-reduce f against the basis: no term of the result is divisible
/// by any basis leading power-product.
template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const std::vector<Polynomial<K>>& basis) {
  detail::KeyedBasis<K> kb;
  for (const auto& b : basis)
    if (!b.is_zero()) kb.push(b, *f.ring());
  return detail::reduce_keyed(f, kb);
}

template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g) {
  PowerProduct l = PowerProduct::lcm(f.lpp(), g.lpp());
  Polynomial<K> a = mul_term(f, l / f.lpp(), inv(f.lc()));
  Polynomial<K> b = mul_term(g, l / g.lpp(), inv(g.lc()));
  return sub(a, b);
}

template <class K>
struct GBOptions {
  /// Fires on each new basis element (after full reduction, made monic);
  /// returning true stops the run with that element exposed.
  std::function<bool(const Polynomial<K>&)> stop;
  Budget budget;
  bool track = false;  // record processed pair degrees
};

template <class K>
struct GBResult {
  std::vector<Polynomial<K>> basis;  // monic, not interreduced
  std::optional<Polynomial<K>> trigger;
  std::vector<long long> pair_degrees;
  bool stopped = false;
};

namespace detail {

struct PairEntry {
  long long deg;
  OrdKey lcm_key;
  int i, j;
  PowerProduct lcm;
  bool alive = true;
};

struct PairQueueCmp {
  const std::vector<PairEntry>* pairs;
  bool operator()(size_t a, size_t b) const {
    const PairEntry &pa = (*pairs)[a], &pb = (*pairs)[b];
    if (pa.deg != pb.deg) return pa.deg > pb.deg;
    if (!(pa.lcm_key == pb.lcm_key)) return pb.lcm_key < pa.lcm_key;
    if (pa.j != pb.j) return pa.j > pb.j;
    return pa.i > pb.i;
  }
};

}  // namespace detail

/// Buchberger's algorithm, pairs processed lowest weighted degree first
/// (normal strategy tie-break), Gebauer-Moeller pair pruning, new elements
/// fully tail-reduced and made monic.
template <class K>
GBResult<K> buchberger(RingPtr ring, std::vector<Polynomial<K>> gens, GBOptions<K> opts = {}) {
  GBResult<K> res;
  std::vector<detail::PairEntry> pairs;
  detail::PairQueueCmp cmp{&pairs};
  std::priority_queue<size_t, std::vector<size_t>, detail::PairQueueCmp> queue(cmp);
  std::vector<std::unique_ptr<Polynomial<K>>> stable;  // stable addresses for the keyed basis
  detail::KeyedBasis<K> kb;

  auto add_element = [&](Polynomial<K> h) {
    const int m = static_cast<int>(res.basis.size());
    const PowerProduct& hl = h.lpp();
    // Drop old pairs whose lcm is a proper multiple through the new element.
    for (auto& pr : pairs) {
      if (!pr.alive) continue;
      if (pr.lcm.divisible_by(hl) &&
          PowerProduct::lcm(res.basis[pr.i].lpp(), hl) != pr.lcm &&
          PowerProduct::lcm(res.basis[pr.j].lpp(), hl) != pr.lcm)
        pr.alive = false;
    }
    // Candidate pairs (i, m), Gebauer-Moeller filtered.
    std::vector<detail::PairEntry> cand;
    cand.reserve(res.basis.size());
    for (int i = 0; i < m; ++i) {
      detail::PairEntry e;
      e.i = i;
      e.j = m;
      e.lcm = PowerProduct::lcm(res.basis[i].lpp(), hl);
      e.deg = weighted_degree(e.lcm, *ring);
      cand.push_back(std::move(e));
    }
    std::vector<bool> drop(cand.size(), false);
    for (size_t a = 0; a < cand.size(); ++a) {
      if (drop[a]) continue;
      for (size_t b = 0; b < cand.size(); ++b) {
        if (a == b || drop[a] || drop[b]) continue;
        if (cand[a].lcm == cand[b].lcm) {
          if (a < b) drop[b] = true;  // keep one representative per lcm
        } else if (cand[b].lcm.divisible_by(cand[a].lcm)) {
          drop[b] = true;
        }
      }
    }
    for (size_t a = 0; a < cand.size(); ++a) {
      if (drop[a]) continue;
      if (PowerProduct::coprime(res.basis[cand[a].i].lpp(), hl)) continue;
      cand[a].lcm_key = ord_key(ring->order, cand[a].lcm);
      pairs.push_back(cand[a]);
      queue.push(pairs.size() - 1);
    }
    stable.push_back(std::make_unique<Polynomial<K>>(h));
    kb.push(*stable.back(), *ring);
    res.basis.push_back(std::move(h));
  };

  // Seed the input generators, lowest weighted degree first.
  std::sort(gens.begin(), gens.end(), [](const Polynomial<K>& a, const Polynomial<K>& b) {
    return a.weighted_degree() < b.weighted_degree();
  });
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    Polynomial<K> r = detail::reduce_keyed(g, kb, &opts.budget);
    if (r.is_zero()) continue;
    r = monic(r);
    if (opts.stop && opts.stop(r)) {
      res.trigger = std::move(r);
      res.stopped = true;
      return res;
    }
    add_element(std::move(r));
  }

  size_t polls = 0;
  while (!queue.empty()) {
    size_t idx = queue.top();
    queue.pop();
    if (!pairs[idx].alive) continue;
    if ((++polls & 31) == 0) opts.budget.check();
    const detail::PairEntry pe = pairs[idx];
    if (opts.track) res.pair_degrees.push_back(pe.deg);
    Polynomial<K> s = s_polynomial(res.basis[pe.i], res.basis[pe.j]);
    Polynomial<K> r = detail::reduce_keyed(s, kb, &opts.budget);
    if (r.is_zero()) continue;
    r = monic(r);
    if (opts.stop && opts.stop(r)) {
      res.trigger = std::move(r);
      res.stopped = true;
      return res;
    }
    add_element(std::move(r));
  }
  return res;
}

/// Reduced form of a generating set: monic, no leading term divides another,
/// every element tail-reduced against the rest.
template <class K>
std::vector<Polynomial<K>> interreduce(std::vector<Polynomial<K>> gens) {
  std::vector<Polynomial<K>> kept;
  for (auto& g : gens)
    if (!g.is_zero()) kept.push_back(monic(g));
  // Drop elements whose leading power-product is a multiple of another's.
  std::vector<Polynomial<K>> minimal;
  for (size_t i = 0; i < kept.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < kept.size() && !redundant; ++j) {
      if (i == j) continue;
      if (kept[i].lpp().divisible_by(kept[j].lpp()) &&
          (kept[j].lpp() != kept[i].lpp() || j < i))
        redundant = true;
    }
    if (!redundant) minimal.push_back(kept[i]);
  }
  std::vector<Polynomial<K>> out;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial<K>> rest;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) rest.push_back(minimal[j]);
    Polynomial<K> r = normal_form(minimal[i], rest);
    if (!r.is_zero()) out.push_back(monic(r));
  }
  std::sort(out.begin(), out.end(), [](const Polynomial<K>& a, const Polynomial<K>& b) {
    return pp_less(a.ring()->order, a.lpp(), b.lpp());
  });
  return out;
}

/// Full Groebner basis under the ring's (elimination) ordering, then the
/// elements free of the elimination variables, interreduced and mapped into
/// the target ring via keep_map (source index -> target index, -1 = dropped).
template <class K>
std::vector<Polynomial<K>> elimination_ideal(RingPtr big, const std::vector<Polynomial<K>>& gens,
                                             const std::vector<int>& keep_map, RingPtr target,
                                             const Budget& budget = {}) {
  GBOptions<K> opts;
  opts.budget = budget;
  GBResult<K> gb = buchberger<K>(big, gens, opts);
  std::vector<Polynomial<K>> elim;
  for (const auto& f : gb.basis) {
    bool free = true;
    for (const auto& t : f.terms())
      for (int i = 0; i < t.pp.dim() && free; ++i)
        if (t.pp.exp(i) && keep_map[i] < 0) free = false;
    if (free) elim.push_back(f);
  }
  elim = interreduce(std::move(elim));
  std::vector<Polynomial<K>> out;
  std::vector<int> idx_map(keep_map.size(), 0);
  for (size_t i = 0; i < keep_map.size(); ++i) idx_map[i] = keep_map[i] < 0 ? 0 : keep_map[i];
  for (const auto& f : elim) out.push_back(monic(map_into(f, target, idx_map)));
  return out;
}

/// Re-sort a polynomial into a structurally identical ring (same names and
/// dimension, possibly different ordering/weights/characteristic tag).
template <class K>
Polynomial<K> to_ring(const Polynomial<K>& f, RingPtr target) {
  assert(f.ring()->dim() == target->dim());
  std::vector<int> idx(f.ring()->dim());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  return map_into(f, std::move(target), idx);
}

}  // namespace imx
