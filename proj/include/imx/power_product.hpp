#pragma once

#include <array>
#include <cassert>
#include <cstddef>
#include <cstdint>

namespace imx {

/// Exponent vector of a power-product. Fixed capacity: the largest ring the
/// engine ever builds (params + h + x0 + targets + u) stays under 16.
class PowerProduct {
 public:
  static constexpr int kMaxVars = 16;

  PowerProduct() { e_.fill(0); }
  explicit PowerProduct(int dim) : dim_(static_cast<uint8_t>(dim)) {
    assert(dim >= 0 && dim <= kMaxVars);
    e_.fill(0);
  }

  int dim() const { return dim_; }

  uint16_t exp(int i) const {
    assert(i >= 0 && i < dim_);
    return e_[i];
  }

  void set_exp(int i, uint32_t v) {
    assert(i >= 0 && i < dim_);
    assert(v <= 0xffffu);
    e_[i] = static_cast<uint16_t>(v);
  }

  bool is_one() const {
    for (int i = 0; i < dim_; ++i)
      if (e_[i]) return false;
    return true;
  }

  long long total_degree() const {
    long long d = 0;
    for (int i = 0; i < dim_; ++i) d += e_[i];
    return d;
  }

  friend PowerProduct operator*(const PowerProduct& a, const PowerProduct& b) {
    assert(a.dim_ == b.dim_);
    PowerProduct r(a.dim_);
    for (int i = 0; i < a.dim_; ++i) {
      uint32_t s = uint32_t(a.e_[i]) + b.e_[i];
      assert(s <= 0xffffu);
      r.e_[i] = static_cast<uint16_t>(s);
    }
    return r;
  }

  /// Exact quotient; requires b | a.
  friend PowerProduct operator/(const PowerProduct& a, const PowerProduct& b) {
    assert(a.dim_ == b.dim_);
    PowerProduct r(a.dim_);
    for (int i = 0; i < a.dim_; ++i) {
      assert(a.e_[i] >= b.e_[i]);
      r.e_[i] = static_cast<uint16_t>(a.e_[i] - b.e_[i]);
    }
    return r;
  }

  bool divisible_by(const PowerProduct& b) const {
    assert(dim_ == b.dim_);
    for (int i = 0; i < dim_; ++i)
      if (e_[i] < b.e_[i]) return false;
    return true;
  }

  static PowerProduct lcm(const PowerProduct& a, const PowerProduct& b) {
    assert(a.dim_ == b.dim_);
    PowerProduct r(a.dim_);
    for (int i = 0; i < a.dim_; ++i) r.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
    return r;
  }

  static bool coprime(const PowerProduct& a, const PowerProduct& b) {
    assert(a.dim_ == b.dim_);
    for (int i = 0; i < a.dim_; ++i)
      if (a.e_[i] && b.e_[i]) return false;
    return true;
  }

  friend bool operator==(const PowerProduct& a, const PowerProduct& b) {
    if (a.dim_ != b.dim_) return false;
    for (int i = 0; i < a.dim_; ++i)
      if (a.e_[i] != b.e_[i]) return false;
    return true;
  }
  friend bool operator!=(const PowerProduct& a, const PowerProduct& b) { return !(a == b); }

  size_t hash() const {
    uint64_t h = 1469598103934665603ull;
    for (int i = 0; i < dim_; ++i) {
      h ^= e_[i];
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h ^ dim_);
  }

 private:
  std::array<uint16_t, kMaxVars> e_;
  uint8_t dim_ = 0;
};

struct PowerProductHash {
  size_t operator()(const PowerProduct& p) const { return p.hash(); }
};

}  // namespace imx
