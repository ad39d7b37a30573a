#pragma once

#include <map>
#include <memory>

#include "imx/parse.hpp"
#include "imx/primes.hpp"
#include "imx/ratpar.hpp"
#include "imx/ratrec.hpp"

namespace imx {

struct PrimeVerdict {
  uint64_t p = 0;
  enum Kind { Suitable, UnsuitableA, UnsuitableB } kind = Suitable;
  bool suitable() const { return kind == Suitable; }
  const char* name() const {
    switch (kind) {
      case UnsuitableA: return "unsuitable(a)";
      case UnsuitableB: return "unsuitable(b)";
      default: return "suitable";
    }
  }
};

/// Definition of unsuitable primes: (a) p divides a denominator of some f_i
/// (including the vanishing of the reduced common denominator), (b) the
/// degree of a numerator or of the denominator drops mod p.
PrimeVerdict classify_prime(const ParamSystem& sys, uint64_t p);

/// Fixed once per modular session (same algorithm for every prime, and for
/// Direct the same enumerative ordering sigma throughout).
struct ModularContext {
  Engine engine = Engine::Direct;
  bool rational = false;
  OrderingMatrix sigma;  // Direct only; on the native x-ring (with x0 when rational)
  RingPtr out_ring_q;
};

ModularContext make_modular_context(const ParamSystem& sys, Engine engine);

/// One modular implicitization: the monic generator of the mod-p problem
/// (or the engine's documented fallback when the modular ideal is not
/// principal) together with its bad-prime comparison key.
struct ModularRun {
  Polynomial<Fp> g;      // monic, char-p output x-ring
  bool has_lpp_key = false;
  PowerProduct lpp_key;  // Direct engine: sigma-leading power-product
  long long deg_key = 0;  // ElimTH engine: weighted degree
};

ModularRun modular_implicitize(const ParamSystem& sys, uint64_t p, const ModularContext& cx,
                               const Budget& budget = {});

enum class FilterDecision { Accept, DiscardNew, ResetToNew };

/// Detecting surely-bad primes from two runs of the same engine: the one
/// with the smaller leading power-product (Direct) or smaller degree
/// (ElimTH) is bad.
FilterDecision bad_prime_filter(const ModularRun& incoming, const ModularRun& current,
                                const ModularContext& cx);

struct ModularOptions {
  Engine engine = Engine::Direct;
  std::vector<uint64_t> pool;  // empty: default descending pool below 2^31
  BigInt threshold = kRatRecThreshold;
  uint64_t seed = 42;
  int precheck_points = 3;
  Budget budget;
};

struct PrimeLogEntry {
  uint64_t p = 0;
  std::string classification;
  std::string filter;  // init / accept / discard-new / reset-to-new
  std::string recon;   // skipped / unreliable / zero / verify-failed / ok
  size_t support = 0;
};

struct ModImplicitResult {
  Polynomial<Rat> g;       // monic generator over Q, verified
  size_t primes_used = 0;  // accepted primes inside the final accumulator
  size_t primes_tried = 0;
  std::vector<PrimeLogEntry> log;
  std::vector<std::string> warnings;
};

/// The multiple-prime method: per-prime implicitization, the bad-prime
/// filter, coefficientwise Chinese remaindering over the union of supports,
/// fault-tolerant reconstruction after every accepted prime (once two are
/// in), full verification before returning.
ModImplicitResult mod_implicit(const ParamSystem& sys, const ModularOptions& opt = {});

struct SinglePrimeResult {
  bool ok = false;
  Polynomial<Rat> g;
  std::string failure;  // singular-system / verification-failed
};

/// The single-prime method: take Supp(g_p) as the support guess, pin the
/// leading coefficient to 1, solve for the rest from random points on the
/// hypersurface, and verify by substitution.
SinglePrimeResult single_prime_guess(const ParamSystem& sys, uint64_t p,
                                     Engine engine = Engine::Direct, uint64_t seed = 42);

/// Randomized pre-check on sampled hypersurface points, then the full
/// substitute-to-zero identity.
bool verify_implicit(const Polynomial<Rat>& g, const ParamSystem& sys, uint64_t seed = 42,
                     int precheck_points = 3);

}  // namespace imx
