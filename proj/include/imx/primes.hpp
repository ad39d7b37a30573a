#pragma once

#include <cstdint>
#include <vector>

namespace imx {

bool is_prime(uint64_t n);

/// Largest prime strictly below n, or 0 if none.
uint64_t prev_prime(uint64_t n);

/// `count` primes <= start, scanning downward. Default start is just
/// below 2^31 so residues stay in machine words.
std::vector<uint64_t> prime_pool(uint64_t start = (uint64_t(1) << 31) - 1, size_t count = 64);

}  // namespace imx
