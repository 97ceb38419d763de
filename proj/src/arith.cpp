#include "cuspk/arith.hpp"

#include <limits>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "cuspk/error.hpp"

namespace cuspk {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

int vp(std::int64_t n, std::int64_t p) {
  if (n == 0) throw Error(ErrorKind::InvalidParams, "valuation of zero");
  if (p < 2) throw Error(ErrorKind::InvalidParams, "valuation base must be >= 2");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(x, y, &out)) {
    throw Error(ErrorKind::InvalidParams, "integer overflow in " + std::to_string(x) + " * " + std::to_string(y));
  }
  return out;
}

std::int64_t checked_pow(std::int64_t base, int exp) {
  std::int64_t out = 1;
  for (int i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

Integer pow_integer(std::int64_t base, unsigned exp) {
  Integer out;
  Integer b(static_cast<long>(base));
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), exp);
  return out;
}

const Integer& prime_power(std::int64_t base, unsigned exp) {
  static std::shared_mutex mutex;
  static std::map<std::pair<std::int64_t, unsigned>, Integer> cache;
  const auto key = std::make_pair(base, exp);
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::unique_lock lock(mutex);
  auto [it, inserted] = cache.try_emplace(key);
  if (inserted) it->second = pow_integer(base, exp);
  return it->second;
}

std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n) {
  if (n < 1) throw Error(ErrorKind::InvalidParams, "factorize expects a positive integer");
  std::vector<std::pair<Integer, unsigned>> out;
  Integer rest = n;
  for (Integer d = 2; d * d <= rest; ++d) {
    if (rest % d != 0) continue;
    unsigned e = 0;
    while (rest % d == 0) {
      rest /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (rest > 1) out.emplace_back(rest, 1U);
  return out;
}

}  // namespace cuspk
