#pragma once

#include "imx/crt.hpp"
#include "imx/rat.hpp"

namespace imx {

struct RatRec {
  bool found = false;     // a candidate rational exists
  bool reliable = false;  // the quotient-gap criterion fired
  Rat value;
};

/// Default reliability threshold for the maximal Euclidean quotient.
inline const BigInt kRatRecThreshold = BigInt(1) << 20;

/// Fault-tolerant rational reconstruction: run the extended
/// Euclidean algorithm on (modulus, residue) and pick the remainder pair
/// sitting just before the largest quotient of the sequence. If some of the
/// moduli carried wrong residues, the recovered pair is (f*a, f*b) with f the
/// product of the faulty primes, so the common content is divided out. The
/// candidate counts as reliable only when that largest quotient dominates
/// the given threshold.
RatRec rat_reconstruct(const BigInt& residue, const BigInt& modulus,
                       const BigInt& threshold = kRatRecThreshold);

/// Combine a residue set by CRT, then reconstruct.
RatRec rat_reconstruct_fault_tolerant(const ResidueSet& rs,
                                      const BigInt& threshold = kRatRecThreshold);

}  // namespace imx
