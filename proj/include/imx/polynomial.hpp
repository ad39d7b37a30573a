#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "imx/errors.hpp"
#include "imx/fp.hpp"
#include "imx/rat.hpp"
#include "imx/ring.hpp"

namespace imx {

template <class K>
struct Term {
  PowerProduct pp;
  K c;
};

/// Packed order vector of a power-product: 16 biased 16-bit lanes, one per
/// ordering-matrix row, most significant first. Comparing keys as integer
/// words equals comparing power-products under the ordering, and keys add
/// (minus the bias constant) when power-products multiply.
struct OrdKey {
  uint64_t w[4] = {0, 0, 0, 0};

  friend bool operator<(const OrdKey& a, const OrdKey& b) {
    for (int i = 0; i < 4; ++i)
      if (a.w[i] != b.w[i]) return a.w[i] < b.w[i];
    return false;
  }
  friend bool operator==(const OrdKey& a, const OrdKey& b) {
    return a.w[0] == b.w[0] && a.w[1] == b.w[1] && a.w[2] == b.w[2] && a.w[3] == b.w[3];
  }
  friend bool operator>(const OrdKey& a, const OrdKey& b) { return b < a; }
};

inline OrdKey ord_key(const OrderingMatrix& ord, const PowerProduct& pp) {
  OrdKey k;
  const int n = ord.dim();
  const int nrows = static_cast<int>(ord.rows.size());
  for (int r = 0; r < 16; ++r) {
    uint64_t lane = 32768;
    if (r < nrows) {
      long long s = 0;
      for (int i = 0; i < n; ++i) s += ord.rows[r][i] * pp.exp(i);
      if (s < -32768 || s > 32767) throw Error("order-vector component out of key range");
      lane = static_cast<uint64_t>(s + 32768);
    }
    k.w[r >> 2] |= lane << (48 - 16 * (r & 3));
  }
  return k;
}

template <class K>
struct KTerm {
  OrdKey k;
  PowerProduct pp;
  K c;
};

/// Sparse multivariate polynomial; terms strictly decreasing under the
/// ring's active ordering, no zero coefficients stored.
template <class K>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  /// Normalizing constructor: sorts, merges equal power-products, drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term<K>> terms) {
    std::vector<KTerm<K>> kt;
    kt.reserve(terms.size());
    for (auto& t : terms) kt.push_back({ord_key(ring->order, t.pp), t.pp, std::move(t.c)});
    return from_kterms(std::move(ring), std::move(kt));
  }

  static Polynomial from_kterms(RingPtr ring, std::vector<KTerm<K>> kt) {
    std::sort(kt.begin(), kt.end(),
              [](const KTerm<K>& a, const KTerm<K>& b) { return b.k < a.k; });
    Polynomial f(std::move(ring));
    f.ts_.reserve(kt.size());
    size_t i = 0;
    while (i < kt.size()) {
      K c = kt[i].c;
      size_t j = i + 1;
      while (j < kt.size() && kt[j].k == kt[i].k) {
        c += kt[j].c;
        ++j;
      }
      if (!imx::is_zero(c)) f.ts_.push_back({kt[i].pp, std::move(c)});
      i = j;
    }
    return f;
  }

  /// Trusted constructor: caller guarantees sorted-descending distinct
  /// power-products and nonzero coefficients.
  static Polynomial from_sorted(RingPtr ring, std::vector<Term<K>> terms) {
    Polynomial f(std::move(ring));
    f.ts_ = std::move(terms);
    return f;
  }

  static Polynomial constant(RingPtr ring, const K& c) {
    Polynomial f(ring);
    if (!imx::is_zero(c)) f.ts_.push_back({PowerProduct(ring->dim()), c});
    return f;
  }

  static Polynomial monomial(RingPtr ring, const PowerProduct& pp, const K& c) {
    Polynomial f(ring);
    if (!imx::is_zero(c)) f.ts_.push_back({pp, c});
    return f;
  }

  static Polynomial variable(RingPtr ring, int idx, const K& one) {
    PowerProduct pp(ring->dim());
    pp.set_exp(idx, 1);
    return monomial(ring, pp, one);
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term<K>>& terms() const { return ts_; }
  bool is_zero() const { return ts_.empty(); }
  size_t support_size() const { return ts_.size(); }

  const PowerProduct& lpp() const {
    if (ts_.empty()) throw ZeroPolynomial("leading power-product of the zero polynomial");
    return ts_.front().pp;
  }
  const K& lc() const {
    if (ts_.empty()) throw ZeroPolynomial("leading coefficient of the zero polynomial");
    return ts_.front().c;
  }

  /// Max weighted degree over the support; 0 for the zero polynomial.
  long long weighted_degree() const {
    long long d = 0;
    for (const auto& t : ts_) {
      long long w = imx::weighted_degree(t.pp, *ring_);
      if (w > d) d = w;
    }
    return d;
  }

  long long total_degree() const {
    long long d = 0;
    for (const auto& t : ts_)
      if (t.pp.total_degree() > d) d = t.pp.total_degree();
    return d;
  }

  bool is_constant() const { return ts_.empty() || (ts_.size() == 1 && ts_[0].pp.is_one()); }

  bool is_homogeneous() const {
    for (const auto& t : ts_)
      if (imx::weighted_degree(t.pp, *ring_) != imx::weighted_degree(ts_[0].pp, *ring_))
        return false;
    return true;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.ts_.size() != b.ts_.size()) return false;
    for (size_t i = 0; i < a.ts_.size(); ++i)
      if (a.ts_[i].pp != b.ts_[i].pp || !(a.ts_[i].c == b.ts_[i].c)) return false;
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  RingPtr ring_;
  std::vector<Term<K>> ts_;
};

template <class K>
Polynomial<K> add(const Polynomial<K>& a, const Polynomial<K>& b) {
  assert(a.ring() && b.ring());
  const auto& ord = a.ring()->order;
  std::vector<Term<K>> out;
  out.reserve(a.terms().size() + b.terms().size());
  size_t i = 0, j = 0;
  while (i < a.terms().size() && j < b.terms().size()) {
    Cmp c = compare(ord, a.terms()[i].pp, b.terms()[j].pp);
    if (c == Cmp::GT) {
      out.push_back(a.terms()[i++]);
    } else if (c == Cmp::LT) {
      out.push_back(b.terms()[j++]);
    } else {
      K s = a.terms()[i].c + b.terms()[j].c;
      if (!is_zero(s)) out.push_back({a.terms()[i].pp, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms().size(); ++i) out.push_back(a.terms()[i]);
  for (; j < b.terms().size(); ++j) out.push_back(b.terms()[j]);
  return Polynomial<K>::from_sorted(a.ring(), std::move(out));
}

template <class K>
Polynomial<K> neg(const Polynomial<K>& a) {
  std::vector<Term<K>> out = a.terms();
  for (auto& t : out) t.c = -t.c;
  return Polynomial<K>::from_sorted(a.ring(), std::move(out));
}

template <class K>
Polynomial<K> sub(const Polynomial<K>& a, const Polynomial<K>& b) {
  return add(a, neg(b));
}

template <class K>
Polynomial<K> scale(const Polynomial<K>& a, const K& c) {
  if (is_zero(c)) return Polynomial<K>(a.ring());
  std::vector<Term<K>> out = a.terms();
  for (auto& t : out) t.c = t.c * c;
  return Polynomial<K>::from_sorted(a.ring(), std::move(out));
}

template <class K>
Polynomial<K> mul_term(const Polynomial<K>& a, const PowerProduct& pp, const K& c) {
  if (is_zero(c)) return Polynomial<K>(a.ring());
  std::vector<Term<K>> out;
  out.reserve(a.terms().size());
  for (const auto& t : a.terms()) out.push_back({t.pp * pp, t.c * c});
  return Polynomial<K>::from_sorted(a.ring(), std::move(out));
}

template <class K>
Polynomial<K> mul(const Polynomial<K>& a, const Polynomial<K>& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial<K>(a.ring());
  const auto& small = a.terms().size() <= b.terms().size() ? a : b;
  const auto& big = a.terms().size() <= b.terms().size() ? b : a;
  const auto& ord = a.ring()->order;
  std::vector<KTerm<K>> prods;
  prods.reserve(small.terms().size() * big.terms().size());
  for (const auto& s : small.terms()) {
    for (const auto& t : big.terms()) {
      PowerProduct pp = s.pp * t.pp;
      prods.push_back({ord_key(ord, pp), pp, s.c * t.c});
    }
  }
  return Polynomial<K>::from_kterms(a.ring(), std::move(prods));
}

template <class K>
Polynomial<K> operator+(const Polynomial<K>& a, const Polynomial<K>& b) { return add(a, b); }
template <class K>
Polynomial<K> operator-(const Polynomial<K>& a, const Polynomial<K>& b) { return sub(a, b); }
template <class K>
Polynomial<K> operator*(const Polynomial<K>& a, const Polynomial<K>& b) { return mul(a, b); }

template <class K>
Polynomial<K> poly_pow(const Polynomial<K>& a, long long e) {
  assert(!a.is_zero() || e > 0);
  Polynomial<K> acc;
  bool have = false;
  Polynomial<K> base = a;
  while (e > 0) {
    if (e & 1) {
      acc = have ? mul(acc, base) : base;
      have = true;
    }
    e >>= 1;
    if (e) base = mul(base, base);
  }
  if (!have) {
    // exponent zero: caller must supply a nonzero polynomial to take one from
    return Polynomial<K>::constant(a.ring(), one_like(a.lc()));
  }
  return acc;
}

template <class K>
Polynomial<K> monic(const Polynomial<K>& f) {
  if (f.is_zero()) return f;
  return scale(f, inv(f.lc()));
}

/// lpp under an ordering that may differ from the ring's active one.
template <class K>
const PowerProduct& lpp_under(const Polynomial<K>& f, const OrderingMatrix& ord) {
  if (f.is_zero()) throw ZeroPolynomial("leading power-product of the zero polynomial");
  const PowerProduct* best = &f.terms()[0].pp;
  for (size_t i = 1; i < f.terms().size(); ++i)
    if (pp_greater(ord, f.terms()[i].pp, *best)) best = &f.terms()[i].pp;
  return *best;
}

/// True iff a = c*b for a single nonzero scalar c.
template <class K>
bool same_up_to_scalar(const Polynomial<K>& a, const Polynomial<K>& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.support_size() != b.support_size()) return false;
  K ratio = a.terms()[0].c * inv(b.terms()[0].c);
  for (size_t i = 0; i < a.terms().size(); ++i) {
    if (a.terms()[i].pp != b.terms()[i].pp) return false;
    if (!(a.terms()[i].c == b.terms()[i].c * ratio)) return false;
  }
  return true;
}

/// Map f into another ring: variable i of the source becomes idx_map[i].
template <class K>
Polynomial<K> map_into(const Polynomial<K>& f, RingPtr target, const std::vector<int>& idx_map) {
  std::vector<Term<K>> out;
  out.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    PowerProduct pp(target->dim());
    for (int i = 0; i < t.pp.dim(); ++i)
      if (t.pp.exp(i)) pp.set_exp(idx_map[i], t.pp.exp(i));
    out.push_back({pp, t.c});
  }
  return Polynomial<K>::from_terms(std::move(target), std::move(out));
}

/// Pad every term with h so the result is homogeneous of the maximal
/// weighted degree of f. Requires weight(h) = 1 and f free of h.
template <class K>
Polynomial<K> homogenize(const Polynomial<K>& f, int h_idx) {
  if (f.is_zero()) return f;
  assert(f.ring()->weights[h_idx] == 1);
  long long d = f.weighted_degree();
  std::vector<Term<K>> out;
  out.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    assert(t.pp.exp(h_idx) == 0);
    PowerProduct pp = t.pp;
    pp.set_exp(h_idx, static_cast<uint32_t>(d - weighted_degree(t.pp, *f.ring())));
    out.push_back({pp, t.c});
  }
  return Polynomial<K>::from_terms(f.ring(), std::move(out));
}

/// h^(d-deg f) * f^hom: homogeneous of degree exactly d; 0 maps to 0.
template <class K>
Polynomial<K> shifted_homogenize(const Polynomial<K>& f, long long d, int h_idx) {
  if (f.is_zero()) return f;
  assert(f.ring()->weights[h_idx] == 1);
  long long deg = f.weighted_degree();
  if (d < deg) throw DegreeTooSmall("shift degree below the degree of the polynomial");
  std::vector<Term<K>> out;
  out.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    assert(t.pp.exp(h_idx) == 0);
    PowerProduct pp = t.pp;
    pp.set_exp(h_idx, static_cast<uint32_t>(d - weighted_degree(t.pp, *f.ring())));
    out.push_back({pp, t.c});
  }
  return Polynomial<K>::from_terms(f.ring(), std::move(out));
}

/// Substitute h = 1.
template <class K>
Polynomial<K> dehomogenize(const Polynomial<K>& f, int h_idx) {
  std::vector<Term<K>> out;
  out.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    PowerProduct pp = t.pp;
    pp.set_exp(h_idx, 0);
    out.push_back({pp, t.c});
  }
  return Polynomial<K>::from_terms(f.ring(), std::move(out));
}

template <class K>
K evaluate(const Polynomial<K>& f, const std::vector<K>& point, const K& one) {
  assert(static_cast<int>(point.size()) == (f.ring() ? f.ring()->dim() : 0));
  K acc = zero_like(one);
  for (const auto& t : f.terms()) {
    K v = t.c;
    for (int i = 0; i < t.pp.dim(); ++i) {
      K p = one;
      K base = point[i];
      uint32_t e = t.pp.exp(i);
      while (e) {
        if (e & 1) p = p * base;
        base = base * base;
        e >>= 1;
      }
      v = v * p;
    }
    acc = acc + v;
  }
  return acc;
}

namespace detail {

template <class K>
struct SubstCtx {
  const std::vector<Polynomial<K>>* ps;
  std::vector<Polynomial<K>> qpow;  // qpow[k] = q^k
  Polynomial<K> q;
  int nvars;

  const Polynomial<K>& qpow_get(long long k) {
    while (static_cast<long long>(qpow.size()) <= k) qpow.push_back(mul(qpow.back(), q));
    return qpow[static_cast<size_t>(k)];
  }
};

// Horner over variable `var`: sum_a p_var^a * subst(G_a, D - a).
template <class K>
Polynomial<K> subst_rec(std::vector<Term<K>>&& terms, int var, long long deg_budget,
                        SubstCtx<K>& cx) {
  if (terms.empty()) return Polynomial<K>(cx.q.ring());
  if (var == cx.nvars) {
    assert(terms.size() == 1);
    return scale(cx.qpow_get(deg_budget), terms[0].c);
  }
  std::map<long long, std::vector<Term<K>>> buckets;
  for (auto& t : terms) buckets[t.pp.exp(var)].push_back(std::move(t));
  long long top = buckets.rbegin()->first;
  Polynomial<K> acc(cx.q.ring());
  for (long long a = top; a >= 0; --a) {
    if (!acc.is_zero()) acc = mul(acc, (*cx.ps)[var]);
    auto it = buckets.find(a);
    if (it != buckets.end())
      acc = add(acc, subst_rec(std::move(it->second), var + 1, deg_budget - a, cx));
  }
  return acc;
}

}  // namespace detail

/// q^deg(g) * g(p_1/q, ..., p_n/q): the numerator of the substitution cleared
/// to a single fraction. g(f) = 0 iff the result is the zero polynomial.
template <class K>
Polynomial<K> substitute_cleared(const Polynomial<K>& g, const std::vector<Polynomial<K>>& ps,
                                 const Polynomial<K>& q) {
  assert(!q.is_zero());
  assert(static_cast<int>(ps.size()) == g.ring()->dim());
  detail::SubstCtx<K> cx;
  cx.ps = &ps;
  cx.q = q;
  cx.nvars = static_cast<int>(ps.size());
  cx.qpow.push_back(Polynomial<K>::constant(q.ring(), one_like(q.lc())));
  std::vector<Term<K>> terms = g.terms();
  return detail::subst_rec(std::move(terms), 0, g.total_degree(), cx);
}

/// The substitution as a fraction (numerator, q^deg g).
template <class K>
std::pair<Polynomial<K>, Polynomial<K>> substitute_fraction(const Polynomial<K>& g,
                                                            const std::vector<Polynomial<K>>& ps,
                                                            const Polynomial<K>& q) {
  detail::SubstCtx<K> cx;
  cx.q = q;
  cx.qpow.push_back(Polynomial<K>::constant(q.ring(), one_like(q.lc())));
  Polynomial<K> num = substitute_cleared(g, ps, q);
  Polynomial<K> den = poly_pow(q, g.total_degree());
  return {std::move(num), std::move(den)};
}

/// Reduce a rational-coefficient polynomial mod p. Throws Error when p
/// divides a coefficient denominator.
Polynomial<Fp> reduce_mod_p(const Polynomial<Rat>& f, RingPtr target, uint32_t p);

/// Over Q: strip rational content, leaving coprime integer coefficients with
/// positive leading coefficient (the display normalization).
Polynomial<Rat> integer_normal_form(const Polynomial<Rat>& f);

std::string render(const Polynomial<Fp>& f);
std::string render(const Polynomial<Rat>& f);

}  // namespace imx
