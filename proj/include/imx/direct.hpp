#pragma once

#include <optional>
#include <set>
#include <unordered_map>

#include "imx/elim.hpp"
#include "imx/sysview.hpp"

namespace imx {

/// The degree-triangular search ordering: M = M_tau * E with E the
/// exponents of the tau-leading power-products of the coordinates, completed
/// to a square invertible matrix. Its first row is (deg f_1, ..., deg f_n),
/// so the ordering is enumerative, and images of sigma-increasing
/// power-products have tau-non-decreasing leading monomials.
template <class K>
OrderingMatrix build_direct_ordering(const SysView<K>& sys, OrderingMatrix tau = {}) {
  const int s = sys.nparams();
  const int n = sys.ntargets();
  if (tau.rows.empty()) tau = degrevlex_order(s);
  for (long long w : tau.rows[0])
    if (w != 1) throw Error("tau must be degree-compatible (unit first row)");
  std::vector<std::vector<long long>> m(tau.rows.size(), std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) {
    if (sys.numer[i].is_constant())
      throw ConstantCoordinate("coordinate " + sys.xnames[i] + " is constant");
    const PowerProduct& lpp = lpp_under(sys.numer[i], tau);
    for (size_t r = 0; r < tau.rows.size(); ++r) {
      long long v = 0;
      for (int k = 0; k < s; ++k) v += tau.rows[r][k] * lpp.exp(k);
      m[r][i] = v;
    }
  }
  for (int i = 0; i < n; ++i)
    if (m[0][i] <= 0) throw ConstantCoordinate("coordinate with nonpositive degree");
  return complete_to_ordering(n, std::move(m));
}

struct DirectOptions {
  OrderingMatrix sigma;  // enumerative ordering on the target power-products
  OrderingMatrix tau;    // row-key ordering on the parameter ring; empty = degrevlex
  long long max_degree = -1;
  Budget budget;
  bool check_frontier = false;       // assert the PPL invariant every iteration
  bool keep_cache = false;           // disable phi-cache eviction (tests)
  bool relaxed_degree_only = false;  // enumerate whole degree blocks instead
};

template <class K>
struct DirectResult {
  Polynomial<K> g;  // monic generator in the sigma x-ring
  size_t iterations = 0;
  bool pivots_tau_monotone = true;
  std::vector<PowerProduct> qb;  // the independent power-products, in order
  std::vector<std::string> warnings;
};

template <class KeyT>
struct KeyHash {
  size_t operator()(const KeyT& k) const {
    if constexpr (sizeof(KeyT) == 8) {
      return std::hash<uint64_t>()(static_cast<uint64_t>(k));
    } else {
      uint64_t lo = static_cast<uint64_t>(k);
      uint64_t hi = static_cast<uint64_t>(k >> 64);
      return std::hash<uint64_t>()(lo ^ (hi * 0x9e3779b97f4a7c15ull));
    }
  }
};

/// Packs the tau order vector of a parameter-ring power-product into biased
/// 16-bit lanes of an unsigned word, most significant lane first: integer
/// comparison is tau comparison, and keys add (minus the bias constant) when
/// power-products multiply.
template <class KeyT>
struct RowKeyPacker {
  static constexpr int kLanes = static_cast<int>(sizeof(KeyT) / 2);
  std::vector<std::vector<long long>> rows;
  KeyT bias = 0;

  explicit RowKeyPacker(const OrderingMatrix& tau) : rows(tau.rows) {
    assert(static_cast<int>(rows.size()) <= kLanes);
    for (size_t r = 0; r < rows.size(); ++r)
      bias |= static_cast<KeyT>(32768) << (16 * (kLanes - 1 - static_cast<int>(r)));
  }

  KeyT key(const PowerProduct& pp) const {
    KeyT k = 0;
    for (size_t r = 0; r < rows.size(); ++r) {
      long long s = 0;
      for (int i = 0; i < pp.dim(); ++i) s += rows[r][i] * pp.exp(i);
      if (s < -32768 || s > 32767) throw Error("order-vector component out of key range");
      k |= static_cast<KeyT>(static_cast<uint64_t>(s + 32768))
           << (16 * (kLanes - 1 - static_cast<int>(r)));
    }
    return k;
  }

  KeyT mul(KeyT a, KeyT b) const { return a + b - bias; }
};

template <class K, class KeyT>
struct ERow {
  std::vector<KeyT> ks;  // strictly descending
  std::vector<K> cs;

  bool empty() const { return ks.empty(); }
  size_t size() const { return ks.size(); }
};

/// out = a + c*b, merging descending key arrays.
template <class K, class KeyT>
ERow<K, KeyT> axpy(const ERow<K, KeyT>& a, const ERow<K, KeyT>& b, const K& c) {
  ERow<K, KeyT> out;
  out.ks.reserve(a.size() + b.size());
  out.cs.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a.ks[i] > b.ks[j]) {
      out.ks.push_back(a.ks[i]);
      out.cs.push_back(a.cs[i]);
      ++i;
    } else if (b.ks[j] > a.ks[i]) {
      out.ks.push_back(b.ks[j]);
      out.cs.push_back(b.cs[j] * c);
      ++j;
    } else {
      K v = a.cs[i] + b.cs[j] * c;
      if (!is_zero(v)) {
        out.ks.push_back(a.ks[i]);
        out.cs.push_back(std::move(v));
      }
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) {
    out.ks.push_back(a.ks[i]);
    out.cs.push_back(a.cs[i]);
  }
  for (; j < b.size(); ++j) {
    out.ks.push_back(b.ks[j]);
    out.cs.push_back(b.cs[j] * c);
  }
  return out;
}

/// big * f, term by term of f.
template <class K, class KeyT>
ERow<K, KeyT> row_mul(const ERow<K, KeyT>& big, const ERow<K, KeyT>& f,
                      const RowKeyPacker<KeyT>& pk) {
  ERow<K, KeyT> acc;
  for (size_t t = 0; t < f.size(); ++t) {
    ERow<K, KeyT> shifted;
    shifted.ks.reserve(big.size());
    shifted.cs.reserve(big.size());
    for (size_t i = 0; i < big.size(); ++i) {
      shifted.ks.push_back(pk.mul(big.ks[i], f.ks[t]));
      shifted.cs.push_back(big.cs[i] * f.cs[t]);
    }
    acc = acc.empty() ? std::move(shifted) : axpy(acc, shifted, one_like(f.cs[t]));
  }
  return acc;
}

/// Incremental row echelon with per-row combinations over the original
/// offered images: a vanishing offer hands back its dependency coefficients.
template <class K, class KeyT>
class Echelon {
 public:
  /// Returns the dependency coefficients over the first qb_size images, or
  /// nullopt after installing the reduced row as a new monic pivot row.
  std::optional<std::vector<K>> offer(ERow<K, KeyT> v, size_t qb_size, const K& one) {
    std::vector<K> combo(qb_size, zero_like(one));
    while (!v.empty()) {
      auto it = pivot_of_.find(v.ks[0]);
      if (it == pivot_of_.end()) {
        K li = inv(v.cs[0]);
        for (auto& c : v.cs) c = c * li;
        std::vector<K> cnew(qb_size + 1, zero_like(one));
        for (size_t j = 0; j < qb_size; ++j) cnew[j] = -combo[j] * li;
        cnew[qb_size] = li;
        pivot_of_.emplace(v.ks[0], static_cast<int>(rows_.size()));
        pivot_seq_.push_back(v.ks[0]);
        rows_.push_back(std::move(v));
        combos_.push_back(std::move(cnew));
        return std::nullopt;
      }
      int i = it->second;
      K c = v.cs[0];
      v = axpy(v, rows_[i], -c);
      const auto& ci = combos_[i];
      for (size_t j = 0; j < ci.size() && j < combo.size(); ++j) combo[j] += c * ci[j];
    }
    return combo;
  }

  size_t row_count() const { return rows_.size(); }
  const std::vector<KeyT>& pivot_sequence() const { return pivot_seq_; }

 private:
  std::unordered_map<KeyT, int, KeyHash<KeyT>> pivot_of_;
  std::vector<ERow<K, KeyT>> rows_;
  std::vector<std::vector<K>> combos_;
  std::vector<KeyT> pivot_seq_;
};

template <class K, class KeyT>
ERow<K, KeyT> poly_to_row(const Polynomial<K>& f, const RowKeyPacker<KeyT>& pk) {
  std::vector<std::pair<KeyT, K>> kt;
  kt.reserve(f.terms().size());
  for (const auto& t : f.terms()) kt.emplace_back(pk.key(t.pp), t.c);
  std::sort(kt.begin(), kt.end(), [](const auto& a, const auto& b) { return b.first < a.first; });
  ERow<K, KeyT> r;
  r.ks.reserve(kt.size());
  r.cs.reserve(kt.size());
  for (auto& [k, c] : kt) {
    r.ks.push_back(k);
    r.cs.push_back(std::move(c));
  }
  return r;
}

namespace detail {

// Enumerates all power-products of a given weighted degree, lex order.
inline void level_pps(int n, const std::vector<long long>& w, long long target,
                      std::vector<PowerProduct>& out) {
  PowerProduct cur(n);
  std::function<void(int, long long)> rec = [&](int var, long long rem) {
    if (var == n - 1) {
      if (rem % w[var] == 0) {
        cur.set_exp(var, static_cast<uint32_t>(rem / w[var]));
        out.push_back(cur);
        cur.set_exp(var, 0);
      }
      return;
    }
    for (long long e = rem / w[var]; e >= 0; --e) {
      cur.set_exp(var, static_cast<uint32_t>(e));
      rec(var + 1, rem - e * w[var]);
    }
    cur.set_exp(var, 0);
  };
  rec(0, target);
}

template <class K, class KeyT>
DirectResult<K> direct_run(const SysView<K>& sys, const DirectOptions& opt) {
  const int s = sys.nparams();
  const int n = sys.ntargets();
  const K one = one_like(sys.numer[0].lc());

  DirectResult<K> res;
  if (s >= n) {
    if (opt.max_degree < 0)
      throw Error("s >= n: the ideal may be zero; a degree cap is required");
    res.warnings.push_back("s >= n: the implicitization may be the zero ideal");
  }

  OrderingMatrix tau = opt.tau.rows.empty() ? degrevlex_order(s) : opt.tau;
  RowKeyPacker<KeyT> pk(tau);
  const std::vector<long long>& wrow = opt.sigma.rows[0];
  RingPtr xring = make_ring(sys.xnames, wrow, opt.sigma, sys.tring->characteristic);

  std::vector<ERow<K, KeyT>> frows;
  for (const auto& f : sys.numer) frows.push_back(poly_to_row(f, pk));

  auto sigma_less = [&](const PowerProduct& a, const PowerProduct& b) {
    return pp_less(opt.sigma, a, b);
  };
  std::set<PowerProduct, decltype(sigma_less)> ppl(sigma_less);

  // Relaxed variant: a degree-only ordering cannot drive the frontier, so
  // enumerate whole weighted-degree levels instead.
  std::vector<PowerProduct> level;
  size_t level_pos = 0;
  long long level_deg = -1;

  std::vector<PowerProduct> qb;
  std::unordered_map<PowerProduct, int, PowerProductHash> qb_index;
  std::vector<int> children_left;
  std::unordered_map<PowerProduct, ERow<K, KeyT>, PowerProductHash> cache;
  Echelon<K, KeyT> ech;

  PowerProduct pp_one(n);
  if (!opt.relaxed_degree_only) ppl.insert(pp_one);
  KeyT last_lead{};
  bool have_lead = false;

  for (;;) {
    opt.budget.check();
    PowerProduct pp(n);
    if (opt.relaxed_degree_only) {
      while (level_pos >= level.size()) {
        ++level_deg;
        if (opt.max_degree >= 0 && level_deg > opt.max_degree)
          throw CapExceeded("degree cap reached without finding a dependency");
        if (level_deg > (opt.max_degree >= 0 ? opt.max_degree : (1 << 20)))
          throw CapExceeded("runaway degree in relaxed enumeration");
        level.clear();
        level_pos = 0;
        level_pps(n, wrow, level_deg, level);
      }
      pp = level[level_pos++];
    } else {
      if (ppl.empty()) throw Error("frontier exhausted");  // cannot happen
      pp = *ppl.begin();
      ppl.erase(ppl.begin());
    }

    if (opt.max_degree >= 0 && weighted_degree(pp, wrow) > opt.max_degree)
      throw CapExceeded("degree cap reached without finding a dependency");
    ++res.iterations;

    // phi(pp) with a single multiplication through a cached parent.
    ERow<K, KeyT> v;
    if (pp.is_one()) {
      v.ks.push_back(pk.key(PowerProduct(s)));
      v.cs.push_back(one);
    } else {
      int best_j = -1;
      const ERow<K, KeyT>* parent = nullptr;
      for (int j = 0; j < n; ++j) {
        if (!pp.exp(j)) continue;
        PowerProduct par = pp;
        par.set_exp(j, pp.exp(j) - 1);
        auto it = cache.find(par);
        if (it == cache.end()) continue;
        if (!parent || it->second.size() < parent->size()) {
          parent = &it->second;
          best_j = j;
        }
      }
      if (!parent) throw NoCachedParent("no cached parent for " + render_pp(pp, *xring));
      v = row_mul(*parent, frows[best_j], pk);
    }

    // Triangularity observation: the tau-leading monomials of the offered
    // (unreduced) images arrive in non-decreasing order under this sigma.
    if (!v.empty()) {
      if (have_lead && v.ks[0] < last_lead) res.pivots_tau_monotone = false;
      last_lead = v.ks[0];
      have_lead = true;
    }
    ERow<K, KeyT> phi_copy = v;  // the unreduced image, kept for later products
    auto dep = ech.offer(std::move(v), qb.size(), one);
    if (dep) {
      std::vector<Term<K>> terms;
      terms.push_back({pp, one});
      for (size_t j = 0; j < dep->size(); ++j)
        if (!is_zero((*dep)[j])) terms.push_back({qb[j], -(*dep)[j]});
      res.g = Polynomial<K>::from_terms(xring, std::move(terms));
      res.qb = qb;
      return res;
    }

    int my_index = static_cast<int>(qb.size());
    qb.push_back(pp);
    qb_index.emplace(pp, my_index);
    children_left.push_back(n);
    cache.emplace(pp, std::move(phi_copy));

    // Frontier update and parent-exhaustion bookkeeping.
    if (!opt.relaxed_degree_only) {
      for (int j = 0; j < n; ++j) {
        PowerProduct child = pp;
        child.set_exp(j, pp.exp(j) + 1);
        ppl.insert(child);
      }
    }
    for (int j = 0; j < n; ++j) {
      if (!pp.exp(j)) continue;
      PowerProduct par = pp;
      par.set_exp(j, pp.exp(j) - 1);
      auto it = qb_index.find(par);
      if (it == qb_index.end()) continue;
      if (--children_left[it->second] == 0 && !opt.keep_cache) cache.erase(par);
    }

    if (opt.check_frontier && !opt.relaxed_degree_only) {
      std::set<PowerProduct, decltype(sigma_less)> expect(sigma_less);
      for (const auto& t : qb)
        for (int j = 0; j < n; ++j) {
          PowerProduct child = t;
          child.set_exp(j, t.exp(j) + 1);
          if (qb_index.find(child) == qb_index.end()) expect.insert(child);
        }
      if (expect.size() != ppl.size() || !std::equal(expect.begin(), expect.end(), ppl.begin()))
        throw Error("frontier invariant violated");
    }
  }
}

}  // namespace detail

/// Implicitization by direct search: enumerate target power-products in
/// sigma order, map through phi with one multiplication each, and stop at
/// the first linear dependency found by the incremental echelon.
template <class K>
DirectResult<K> direct(const SysView<K>& sys, const DirectOptions& opt) {
  assert(sys.polynomial_case());
  if (opt.sigma.rows.empty()) throw Error("direct requires an ordering");
  if (!opt.sigma.enumerative() && !opt.relaxed_degree_only)
    throw Error("direct requires an enumerative ordering (strictly positive first row)");
  size_t lanes = opt.tau.rows.empty() ? static_cast<size_t>(sys.nparams()) : opt.tau.rows.size();
  if (lanes <= 4) return detail::direct_run<K, uint64_t>(sys, opt);
  if (lanes <= 8) return detail::direct_run<K, unsigned __int128>(sys, opt);
  throw Error("too many parameters for the row-key packing");
}

}  // namespace imx
