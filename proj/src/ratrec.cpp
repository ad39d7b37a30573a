#include "imx/ratrec.hpp"

namespace imx {

RatRec rat_reconstruct(const BigInt& residue, const BigInt& modulus, const BigInt& threshold) {
  BigInt x = residue % modulus;
  if (x < 0) x += modulus;
  if (x == 0) {
    // Residue zero everywhere: the only consistent small rational is 0.
    RatRec rec;
    rec.found = true;
    rec.reliable = true;
    rec.value = Rat(0);
    return rec;
  }

  // Remainder sequence r_{k+1} = r_{k-1} - q_k r_k with r_0 = M, r_1 = x,
  // and the Bezout coefficients t_k of x (r_k = s_k M + t_k x).
  BigInt r_prev = modulus, r_cur = x;
  BigInt t_prev = 0, t_cur = 1;
  BigInt best_q = 0, best_r, best_t;
  while (r_cur != 0) {
    BigInt q = r_prev / r_cur;
    if (q > best_q) {
      best_q = q;
      best_r = r_cur;
      best_t = t_cur;
    }
    BigInt r_next = r_prev - q * r_cur;
    BigInt t_next = t_prev - q * t_cur;
    r_prev = r_cur;
    r_cur = r_next;
    t_prev = t_cur;
    t_cur = t_next;
  }

  RatRec rec;
  if (best_t == 0) return rec;  // no usable convergent
  BigInt num = best_r, den = best_t;
  if (den < 0) {
    den = -den;
    num = -num;
  }
  BigInt g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 0) {
    num /= g;
    den /= g;
  }
  rec.found = true;
  rec.value = make_rat(num, den);
  rec.reliable = best_q >= threshold;
  return rec;
}

RatRec rat_reconstruct_fault_tolerant(const ResidueSet& rs, const BigInt& threshold) {
  ResiduePair combined = crt_all(rs);
  return rat_reconstruct(combined.first, combined.second, threshold);
}

}  // namespace imx
