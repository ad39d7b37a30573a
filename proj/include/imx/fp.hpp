#pragma once

#include <cassert>
#include <cstdint>

#include "imx/errors.hpp"

namespace imx {

/// Element of the prime field Z/p for a machine-word prime p < 2^31.
/// Each value carries its modulus; mixing moduli is a logic error.
struct Fp {
  uint32_t r = 0;
  uint32_t p = 0;

  Fp() = default;
  Fp(int64_t value, uint32_t modulus) : p(modulus) {
    assert(modulus > 1);
    int64_t m = value % static_cast<int64_t>(modulus);
    if (m < 0) m += modulus;
    r = static_cast<uint32_t>(m);
  }

  bool is_zero() const { return r == 0; }

  friend Fp operator+(Fp a, Fp b) {
    assert(a.p == b.p);
    uint32_t s = a.r + b.r;
    if (s >= a.p) s -= a.p;
    return raw(s, a.p);
  }
  friend Fp operator-(Fp a, Fp b) {
    assert(a.p == b.p);
    uint32_t s = a.r >= b.r ? a.r - b.r : a.r + a.p - b.r;
    return raw(s, a.p);
  }
  friend Fp operator*(Fp a, Fp b) {
    assert(a.p == b.p);
    return raw(static_cast<uint32_t>(uint64_t(a.r) * b.r % a.p), a.p);
  }
  Fp operator-() const { return raw(r == 0 ? 0 : p - r, p); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  friend bool operator==(Fp a, Fp b) { return a.r == b.r && a.p == b.p; }
  friend bool operator!=(Fp a, Fp b) { return !(a == b); }

  static Fp raw(uint32_t residue, uint32_t modulus) {
    Fp x;
    x.r = residue;
    x.p = modulus;
    return x;
  }
};

/// Multiplicative inverse by extended Euclid. Throws ZeroInverse on 0.
inline Fp mod_inverse(Fp a) {
  if (a.r == 0) throw ZeroInverse();
  int64_t t = 0, nt = 1;
  int64_t r = a.p, nr = a.r;
  while (nr != 0) {
    int64_t q = r / nr;
    int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  assert(r == 1);
  if (t < 0) t += a.p;
  return Fp::raw(static_cast<uint32_t>(t), a.p);
}

inline Fp inv(Fp a) { return mod_inverse(a); }
inline Fp operator/(Fp a, Fp b) { return a * inv(b); }

inline bool is_zero(Fp a) { return a.r == 0; }
inline Fp zero_like(Fp a) { return Fp::raw(0, a.p); }
inline Fp one_like(Fp a) { return Fp::raw(1 % a.p, a.p); }

}  // namespace imx
