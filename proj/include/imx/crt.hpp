#pragma once

#include <utility>
#include <vector>

#include "imx/errors.hpp"
#include "imx/rat.hpp"

namespace imx {

/// (residue, modulus) with 0 <= residue < modulus.
using ResiduePair = std::pair<BigInt, BigInt>;

/// Residues of one value modulo pairwise-coprime moduli.
using ResidueSet = std::vector<ResiduePair>;

/// Combine two residues into one modulo m1*m2. Throws NonCoprimeModuli.
inline ResiduePair crt_combine(const ResiduePair& a, const ResiduePair& b) {
  const BigInt &m1 = a.second, &m2 = b.second;
  BigInt g, inv_m1, t;
  mpz_gcdext(g.get_mpz_t(), inv_m1.get_mpz_t(), t.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t());
  if (g != 1) throw NonCoprimeModuli();
  // x = r1 + m1 * ((r2 - r1) * m1^-1 mod m2)
  BigInt k = ((b.first - a.first) * inv_m1) % m2;
  if (k < 0) k += m2;
  BigInt m = m1 * m2;
  BigInt x = (a.first + m1 * k) % m;
  if (x < 0) x += m;
  return {x, m};
}

/// Fold a whole residue set into a single pair.
inline ResiduePair crt_all(const ResidueSet& rs) {
  ResiduePair acc = rs.at(0);
  for (size_t i = 1; i < rs.size(); ++i) acc = crt_combine(acc, rs[i]);
  return acc;
}

}  // namespace imx
