#pragma once

#include <string>
#include <utility>
#include <vector>

#include "imx/polynomial.hpp"
#include "imx/sysview.hpp"

namespace imx {

/// Grammar: integers, declared indeterminates, + - * ^ ( ); '/' only at the
/// top level of a coordinate (single fraction); no implicit multiplication.
Polynomial<Rat> parse_polynomial(const std::string& text, RingPtr ring);

/// Top-level fraction; the denominator is the constant 1 when absent.
std::pair<Polynomial<Rat>, Polynomial<Rat>> parse_fraction(const std::string& text, RingPtr ring);

/// A parametrization problem as loaded from a problem file: exact data over
/// Q plus the declared characteristic. Constant coordinates are split off at
/// load time; the remaining coordinates share one denominator.
struct ParamSystem {
  std::vector<std::string> params;
  std::vector<std::string> targets;
  RingPtr tring;  // Q[t...], degrevlex
  std::vector<Polynomial<Rat>> numer;
  Polynomial<Rat> denom;
  long long characteristic = 0;
  std::vector<std::pair<std::string, std::string>> split_constants;  // (target, value)

  bool polynomial_case() const { return denom.is_constant(); }
  int nparams() const { return static_cast<int>(params.size()); }
  int ntargets() const { return static_cast<int>(targets.size()); }
};

/// Line-oriented problem format:
///   char: 0
///   params: s t
///   x1 = (s^3 - t)/(t^2 - s - t)
///   x2 = s - t
/// '#' starts a comment.
ParamSystem load_problem_text(const std::string& text);
ParamSystem load_problem_file(const std::string& path);

SysView<Rat> view_q(const ParamSystem& sys);

/// Reduce the system mod p. Throws Error when the reduction is unsuitable
/// for the input data (denominator vanishes or any coefficient denominator
/// is divisible by p).
SysView<Fp> view_fp(const ParamSystem& sys, uint32_t p);

/// Exact-division test: true and sets quot when g divides f.
bool try_divide(const Polynomial<Rat>& f, const Polynomial<Rat>& g, Polynomial<Rat>& quot);

}  // namespace imx
