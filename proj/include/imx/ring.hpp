#pragma once

#include <memory>
#include <string>
#include <vector>

#include "imx/ordering.hpp"
#include "imx/power_product.hpp"

namespace imx {

/// Ring descriptor shared read-only by every polynomial living in it:
/// indeterminate names, grading weights, active term-ordering, coefficient
/// characteristic (0 or a prime).
struct Ring {
  std::vector<std::string> names;
  std::vector<long long> weights;
  OrderingMatrix order;
  long long characteristic = 0;

  int dim() const { return static_cast<int>(names.size()); }

  int index_of(const std::string& name) const {
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return static_cast<int>(i);
    return -1;
  }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> names, std::vector<long long> weights,
                         OrderingMatrix order, long long characteristic) {
  auto r = std::make_shared<Ring>();
  r->names = std::move(names);
  r->weights = std::move(weights);
  r->order = std::move(order);
  r->characteristic = characteristic;
  return r;
}

/// Plain degrevlex ring, unit weights.
inline RingPtr make_simple_ring(std::vector<std::string> names, long long characteristic) {
  int n = static_cast<int>(names.size());
  return make_ring(std::move(names), std::vector<long long>(n, 1), degrevlex_order(n),
                   characteristic);
}

inline long long weighted_degree(const PowerProduct& pp, const std::vector<long long>& weights) {
  long long d = 0;
  for (int i = 0; i < pp.dim(); ++i) d += weights[i] * pp.exp(i);
  return d;
}

inline long long weighted_degree(const PowerProduct& pp, const Ring& ring) {
  return weighted_degree(pp, ring.weights);
}

/// "x1^2*x3"; "1" for the empty product.
std::string render_pp(const PowerProduct& pp, const Ring& ring);

/// A name not clashing with any existing one ("h", "h_", "h__", ...).
std::string fresh_name(const std::vector<std::string>& taken, const std::string& stem);

}  // namespace imx
