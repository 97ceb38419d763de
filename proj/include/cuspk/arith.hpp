#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cuspk {

using Integer = mpz_class;

bool is_prime(std::int64_t n);

// p-adic valuation; n must be nonzero.
int vp(std::int64_t n, std::int64_t p);

// Throws InvalidParams on overflow.
std::int64_t checked_mul(std::int64_t x, std::int64_t y);
std::int64_t checked_pow(std::int64_t base, int exp);

// base^exp, memoized per (base, exp).  Safe for concurrent callers.
const Integer& prime_power(std::int64_t base, unsigned exp);

// Prime factorization as (prime, exponent) pairs, ascending.
std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n);

Integer pow_integer(std::int64_t base, unsigned exp);

}  // namespace cuspk
