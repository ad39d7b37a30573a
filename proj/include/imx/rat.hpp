#pragma once

#include <gmpxx.h>

#include <string>

namespace imx {

using BigInt = mpz_class;

/// Exact rational with eager value semantics. Wraps mpq_class, which keeps
/// the canonical form (reduced, positive denominator, zero as 0/1) that
/// serialization and equality rely on; the wrapper keeps gmp's expression
/// templates out of generic code.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}
  Rat(long n) : v_(n) {}
  Rat(long long n) : v_(BigInt(static_cast<long>(n))) {}
  Rat(const BigInt& z) : v_(z) {}
  Rat(const BigInt& num, const BigInt& den) : v_(num, den) { v_.canonicalize(); }
  explicit Rat(const mpq_class& q) : v_(q) {}

  BigInt get_num() const { return v_.get_num(); }
  BigInt get_den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }
  int sign() const { return ::sgn(v_); }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
  friend Rat operator/(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ / b.v_)); }
  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) {
    v_ += o.v_;
    return *this;
  }
  Rat& operator-=(const Rat& o) {
    v_ -= o.v_;
    return *this;
  }
  Rat& operator*=(const Rat& o) {
    v_ *= o.v_;
    return *this;
  }
  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }

 private:
  mpq_class v_;
};

inline int sgn(const Rat& a) { return a.sign(); }
inline bool is_zero(const Rat& a) { return a.sign() == 0; }
inline Rat zero_like(const Rat&) { return Rat(); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline Rat inv(const Rat& a) { return Rat(mpq_class(1 / a.raw())); }

inline Rat make_rat(const BigInt& num, const BigInt& den) { return Rat(num, den); }
inline Rat make_rat(long long num, long long den) {
  return Rat(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
}

/// "a/b", or just "a" when b = 1.
inline std::string to_string(const Rat& a) {
  if (a.get_den() == 1) return a.get_num().get_str();
  return a.get_num().get_str() + "/" + a.get_den().get_str();
}

inline std::string to_string(const BigInt& a) { return a.get_str(); }

}  // namespace imx
