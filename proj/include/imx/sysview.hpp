#pragma once

#include <string>
#include <vector>

#include "imx/polynomial.hpp"

namespace imx {

/// A parametrization over a concrete coefficient field: coordinates
/// f_i = numer_i / denom with a shared denominator (constant 1 in the
/// polynomial case).
template <class K>
struct SysView {
  RingPtr tring;
  std::vector<std::string> xnames;
  std::vector<Polynomial<K>> numer;
  Polynomial<K> denom;

  int nparams() const { return tring->dim(); }
  int ntargets() const { return static_cast<int>(numer.size()); }
  bool polynomial_case() const { return denom.is_constant(); }
};

/// Output ring every engine and oracle emits into for one system: plain
/// weighted degrevlex over the target names. Polynomial case weights are the
/// coordinate degrees, rational case weights are the common degree
/// d = max(deg q, deg p_i).
template <class K>
RingPtr output_xring(const SysView<K>& sys, long long characteristic) {
  int n = sys.ntargets();
  std::vector<long long> w(n, 1);
  if (sys.polynomial_case()) {
    for (int i = 0; i < n; ++i) w[i] = std::max<long long>(1, sys.numer[i].total_degree());
  } else {
    long long d = sys.denom.total_degree();
    for (const auto& p : sys.numer) d = std::max(d, p.total_degree());
    for (int i = 0; i < n; ++i) w[i] = std::max<long long>(1, d);
  }
  return make_ring(sys.xnames, w, degrevlex_order(n, w), characteristic);
}

}  // namespace imx
