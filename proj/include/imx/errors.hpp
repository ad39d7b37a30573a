#pragma once

#include <stdexcept>
#include <string>

namespace imx {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroInverse : Error {
  ZeroInverse() : Error("inverse of zero residue") {}
};

struct NonCoprimeModuli : Error {
  NonCoprimeModuli() : Error("CRT moduli are not coprime") {}
};

struct ZeroPolynomial : Error {
  ZeroPolynomial(const std::string& what) : Error(what) {}
};

struct DimensionMismatch : Error {
  DimensionMismatch(const std::string& what) : Error(what) {}
};

struct DegreeTooSmall : Error {
  DegreeTooSmall(const std::string& what) : Error(what) {}
};

struct SyntaxError : Error {
  size_t position;
  SyntaxError(const std::string& what, size_t pos)
      : Error(what + " at position " + std::to_string(pos)), position(pos) {}
};

struct UnknownIndeterminate : Error {
  UnknownIndeterminate(const std::string& name)
      : Error("unknown indeterminate '" + name + "'") {}
};

struct InconsistentArity : Error {
  InconsistentArity(const std::string& what) : Error(what) {}
};

struct ZeroDenominator : Error {
  ZeroDenominator() : Error("denominator is zero") {}
};

struct ConstantCoordinate : Error {
  ConstantCoordinate(const std::string& what) : Error(what) {}
};

struct CapExceeded : Error {
  CapExceeded(const std::string& what) : Error(what) {}
};

struct PrimePoolExhausted : Error {
  PrimePoolExhausted() : Error("prime pool exhausted") {}
};

struct EngineMismatch : Error {
  EngineMismatch() : Error("modular result produced by a different engine than the session's") {}
};

struct NoCachedParent : Error {
  NoCachedParent(const std::string& what) : Error(what) {}
};

// Cooperative time budget; engines check it at safe points.
struct BudgetExceeded : Error {
  BudgetExceeded() : Error("time budget exceeded") {}
};

}  // namespace imx
