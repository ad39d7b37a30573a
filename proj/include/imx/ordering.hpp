#pragma once

#include <cstdint>
#include <vector>

#include "imx/power_product.hpp"

namespace imx {

enum class Cmp { LT, EQ, GT };

/// Term-ordering given by an invertible integer matrix: power-products are
/// compared by lex comparison of their order vectors M*e.
struct OrderingMatrix {
  std::vector<std::vector<long long>> rows;  // square, dim x dim

  int dim() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }

  /// Strictly positive first row, the structural witness that only finitely
  /// many power-products sit below any given one.
  bool enumerative() const {
    if (rows.empty()) return false;
    for (long long w : rows[0])
      if (w <= 0) return false;
    return true;
  }
};

Cmp compare(const OrderingMatrix& ord, const PowerProduct& a, const PowerProduct& b);

inline bool pp_less(const OrderingMatrix& ord, const PowerProduct& a, const PowerProduct& b) {
  return compare(ord, a, b) == Cmp::LT;
}
inline bool pp_greater(const OrderingMatrix& ord, const PowerProduct& a, const PowerProduct& b) {
  return compare(ord, a, b) == Cmp::GT;
}

/// One ordering block: the listed variables, highest first, compared by
/// weighted degree then reverse-lex from the back of the list.
struct OrderBlock {
  std::vector<int> vars;
  std::vector<long long> weights;  // one per var; empty means all 1
};

/// Stack blocks into a full term-ordering matrix. Earlier blocks dominate,
/// so a leading block acts as an elimination block for its variables.
OrderingMatrix block_order(int dim, const std::vector<OrderBlock>& blocks);

/// Weighted degrevlex over all variables, var 0 highest.
OrderingMatrix degrevlex_order(int dim, const std::vector<long long>& weights = {});

/// Drop rows linearly dependent on those above them, then adjoin rows of a
/// reversed negated identity (bottom-up) while they raise the rank, until the
/// matrix is square and invertible.
OrderingMatrix complete_to_ordering(int dim, std::vector<std::vector<long long>> rows);

bool matrix_invertible(const std::vector<std::vector<long long>>& rows, int dim);

}  // namespace imx
