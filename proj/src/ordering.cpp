#include "imx/ordering.hpp"

#include <cassert>

#include "imx/errors.hpp"
#include "imx/rat.hpp"

namespace imx {

Cmp compare(const OrderingMatrix& ord, const PowerProduct& a, const PowerProduct& b) {
  const int n = ord.dim();
  if (a.dim() != n || b.dim() != n)
    throw DimensionMismatch("power-product dimension does not match ordering");
  long long d[PowerProduct::kMaxVars];
  bool all_zero = true;
  for (int i = 0; i < n; ++i) {
    d[i] = static_cast<long long>(a.exp(i)) - b.exp(i);
    if (d[i]) all_zero = false;
  }
  if (all_zero) return Cmp::EQ;
  for (const auto& row : ord.rows) {
    long long s = 0;
    for (int i = 0; i < n; ++i) s += row[i] * d[i];
    if (s > 0) return Cmp::GT;
    if (s < 0) return Cmp::LT;
  }
  return Cmp::EQ;  // unreachable for invertible matrices
}

OrderingMatrix block_order(int dim, const std::vector<OrderBlock>& blocks) {
  OrderingMatrix m;
  for (const auto& blk : blocks) {
    const size_t k = blk.vars.size();
    assert(k > 0);
    std::vector<long long> w = blk.weights;
    if (w.empty()) w.assign(k, 1);
    assert(w.size() == k);
    std::vector<long long> row(dim, 0);
    for (size_t i = 0; i < k; ++i) row[blk.vars[i]] = w[i];
    m.rows.push_back(row);
    for (size_t j = k; j-- > 1;) {
      std::vector<long long> r(dim, 0);
      r[blk.vars[j]] = -1;
      m.rows.push_back(r);
    }
  }
  assert(static_cast<int>(m.rows.size()) == dim);
  assert(matrix_invertible(m.rows, dim));
  return m;
}

OrderingMatrix degrevlex_order(int dim, const std::vector<long long>& weights) {
  OrderBlock blk;
  blk.vars.resize(dim);
  for (int i = 0; i < dim; ++i) blk.vars[i] = i;
  blk.weights = weights;
  return block_order(dim, {blk});
}

namespace {

// Exact rank bookkeeping: keeps an echelonized copy of the accepted rows.
class RankTracker {
 public:
  explicit RankTracker(int dim) : dim_(dim) {}

  // True (and absorbs the row) iff the row enlarges the row space.
  bool try_add(const std::vector<long long>& row) {
    std::vector<Rat> v(row.begin(), row.end());
    for (const auto& e : ech_) {
      const Rat& lead = e.first[e.second];
      if (is_zero(v[e.second])) continue;
      Rat f = v[e.second] / lead;
      for (int i = 0; i < dim_; ++i) v[i] -= f * e.first[i];
    }
    for (int i = 0; i < dim_; ++i) {
      if (!is_zero(v[i])) {
        ech_.emplace_back(std::move(v), i);
        return true;
      }
    }
    return false;
  }

  int rank() const { return static_cast<int>(ech_.size()); }

 private:
  int dim_;
  std::vector<std::pair<std::vector<Rat>, int>> ech_;
};

}  // namespace

bool matrix_invertible(const std::vector<std::vector<long long>>& rows, int dim) {
  if (static_cast<int>(rows.size()) != dim) return false;
  RankTracker rt(dim);
  for (const auto& r : rows)
    if (!rt.try_add(r)) return false;
  return true;
}

OrderingMatrix complete_to_ordering(int dim, std::vector<std::vector<long long>> rows) {
  OrderingMatrix m;
  RankTracker rt(dim);
  for (auto& r : rows) {
    assert(static_cast<int>(r.size()) == dim);
    if (rt.try_add(r)) m.rows.push_back(std::move(r));
  }
  for (int i = dim; i-- > 0 && rt.rank() < dim;) {
    std::vector<long long> r(dim, 0);
    r[i] = -1;
    if (rt.try_add(r)) m.rows.push_back(std::move(r));
  }
  assert(rt.rank() == dim);
  return m;
}

}  // namespace imx
