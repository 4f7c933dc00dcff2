#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace quadswan {

using std::int64_t;

int64_t mod_reduce(int64_t a, int64_t m);                // least nonnegative residue
int64_t mul_mod(int64_t a, int64_t b, int64_t m);        // exact for m < 2^62
int64_t pow_mod(int64_t base, int64_t exp, int64_t m);
int64_t inv_mod(int64_t a, int64_t m);                   // m prime, a not divisible by m

bool is_prime(int64_t n);                                // deterministic trial division

// n > 0 factored as ascending (prime, exponent) pairs.
std::vector<std::pair<int64_t, int>> factorize(int64_t n);

// Smallest generator of (Z/pZ)*, p an odd prime.
int64_t primitive_root_mod(int64_t p);

// Throws PrimeTwo for p = 2, NotPrime otherwise when p is not an odd prime.
void require_odd_prime(int64_t p);

}  // namespace quadswan
