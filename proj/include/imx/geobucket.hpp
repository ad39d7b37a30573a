#pragma once

#include <algorithm>
#include <vector>

#include "imx/polynomial.hpp"

namespace imx {

/// Geobucket accumulator for long reduction chains: buckets of geometrically
/// growing capacity, each sorted ascending by order key, so subtracting a
/// multiple of a reducer costs a merge of its own size instead of the whole
/// accumulated tail.
template <class K>
class Geobucket {
 public:
  explicit Geobucket(RingPtr ring) : ring_(std::move(ring)) {}

  void add_poly(const Polynomial<K>& f) {
    std::vector<KTerm<K>> v;
    v.reserve(f.terms().size());
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
      v.push_back({ord_key(ring_->order, it->pp), it->pp, it->c});
    add(std::move(v));
  }

  /// Add c * shift * f, skipping f's first `skip` leading terms. When the
  /// caller holds precomputed term keys for f, they are shifted by key
  /// addition instead of being recomputed.
  void add_scaled(const Polynomial<K>& f, const PowerProduct& shift, const K& c, size_t skip,
                  const std::vector<OrdKey>* fkeys = nullptr) {
    OrdKey shift_key = ord_key(ring_->order, shift);
    std::vector<KTerm<K>> v;
    v.reserve(f.terms().size() - skip);
    for (size_t i = f.terms().size(); i-- > skip;) {
      const auto& t = f.terms()[i];
      PowerProduct pp = t.pp * shift;
      OrdKey base = fkeys ? (*fkeys)[i] : ord_key(ring_->order, t.pp);
      v.push_back({key_add(base, shift_key), pp, t.c * c});
    }
    add(std::move(v));
  }

  /// Pop the maximal term (net of cancellations). False when exhausted.
  bool extract_lead(Term<K>& out) {
    for (;;) {
      int best = -1;
      for (size_t b = 0; b < buckets_.size(); ++b) {
        if (buckets_[b].empty()) continue;
        if (best < 0 || buckets_[best].back().k < buckets_[b].back().k) best = static_cast<int>(b);
      }
      if (best < 0) return false;
      KTerm<K> top = buckets_[best].back();
      buckets_[best].pop_back();
      for (auto& bkt : buckets_) {
        while (!bkt.empty() && bkt.back().k == top.k) {
          top.c += bkt.back().c;
          bkt.pop_back();
        }
      }
      if (!is_zero(top.c)) {
        out = {top.pp, top.c};
        return true;
      }
    }
  }

  static OrdKey key_add(const OrdKey& a, const OrdKey& b) {
    // Lanes are biased by 32768; adding keys doubles the bias, so take it
    // back out lane-wise. Lane values stay well inside 16 bits by the same
    // degree bounds ord_key asserts.
    OrdKey r;
    const uint64_t bias4 = 0x8000800080008000ull;
    for (int i = 0; i < 4; ++i) r.w[i] = a.w[i] + b.w[i] - bias4;
    return r;
  }

 private:
  void add(std::vector<KTerm<K>> v) {
    if (v.empty()) return;
    size_t b = 0;
    while (cap(b) < v.size()) ++b;
    for (;;) {
      if (buckets_.size() <= b) buckets_.resize(b + 1);
      if (buckets_[b].empty()) {
        buckets_[b] = std::move(v);
        return;
      }
      v = merge(buckets_[b], v);
      buckets_[b].clear();
      if (v.size() <= cap(b)) {
        buckets_[b] = std::move(v);
        return;
      }
      ++b;
    }
  }

  static std::vector<KTerm<K>> merge(const std::vector<KTerm<K>>& a,
                                     const std::vector<KTerm<K>>& b) {
    std::vector<KTerm<K>> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i].k < b[j].k) {
        out.push_back(a[i++]);
      } else if (b[j].k < a[i].k) {
        out.push_back(b[j++]);
      } else {
        KTerm<K> t = a[i++];
        t.c += b[j++].c;
        if (!is_zero(t.c)) out.push_back(std::move(t));
      }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back(b[j]);
    return out;
  }

  static size_t cap(size_t b) { return size_t(16) << (2 * b); }

  RingPtr ring_;
  std::vector<std::vector<KTerm<K>>> buckets_;  // ascending by key
};

}  // namespace imx
