#include "imx/primes.hpp"

#include <gmp.h>

namespace imx {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  mpz_t z;
  mpz_init_set_ui(z, n);
  int r = mpz_probab_prime_p(z, 30);
  mpz_clear(z);
  return r != 0;
}

uint64_t prev_prime(uint64_t n) {
  if (n <= 2) return 0;
  for (uint64_t k = n - 1;; --k) {
    if (is_prime(k)) return k;
    if (k == 2) return 0;
  }
}

std::vector<uint64_t> prime_pool(uint64_t start, size_t count) {
  std::vector<uint64_t> ps;
  ps.reserve(count);
  uint64_t p = is_prime(start) ? start : prev_prime(start);
  while (p != 0 && ps.size() < count) {
    ps.push_back(p);
    p = prev_prime(p);
  }
  return ps;
}

}  // namespace imx
