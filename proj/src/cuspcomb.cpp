#include "cuspk/cuspcomb.hpp"

#include <numeric>
#include <string>

#include "cuspk/error.hpp"

namespace cuspk {

namespace {

void check_ab(std::int64_t a, std::int64_t b) {
  if (a < 2 || b < 2) throw Error(ErrorKind::InvalidParams, "a and b must be >= 2");
  if (std::gcd(a, b) != 1) {
    throw Error(ErrorKind::InvalidParams, "a=" + std::to_string(a) + " and b=" + std::to_string(b) + " are not coprime");
  }
}

void check_m_prime(std::int64_t p, std::int64_t m_prime) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidParams, "p=" + std::to_string(p) + " is not prime");
  if (m_prime < 1 || m_prime % p == 0) {
    throw Error(ErrorKind::InvalidParams, "m'=" + std::to_string(m_prime) + " must be positive and prime to p");
  }
}

}  // namespace

CuspParams make_cusp_params(std::int64_t a, std::int64_t b, std::int64_t p) {
  check_ab(a, b);
  if (!is_prime(p)) throw Error(ErrorKind::InvalidParams, "p=" + std::to_string(p) + " is not prime");
  CuspParams out{a, b, p, false};
  if (b % p == 0) {
    std::swap(out.a, out.b);
    out.normalized = true;
  }
  return out;
}

std::int64_t l_count(std::int64_t a, std::int64_t b, std::int64_t m) {
  check_ab(a, b);
  std::int64_t count = 0;
  for (std::int64_t j = 1; m - b * j >= a; ++j) {
    if ((m - b * j) % a == 0) ++count;
  }
  return count;
}

int s_func(std::int64_t a, std::int64_t b, std::int64_t r, std::int64_t p, std::int64_t m_prime) {
  check_ab(a, b);
  check_m_prime(p, m_prime);
  if (r < 0) return 0;
  // l(m p) >= l(m), so l along m' p^k is non-decreasing and s is the first
  // exponent that pushes it above r.
  if (l_count(a, b, m_prime) > r) return 0;
  std::int64_t m = m_prime;
  for (int s = 1;; ++s) {
    m = checked_mul(m, p);
    if (l_count(a, b, m) > r) return s;
  }
}

int h_func(std::int64_t a, std::int64_t b, std::int64_t r, std::int64_t p, std::int64_t m_prime) {
  check_ab(a, b);
  check_m_prime(p, m_prime);
  if (b % p == 0) throw Error(ErrorKind::InvalidParams, "parameters are not normalized: p divides b");
  if (m_prime % b == 0) return 0;
  const int s = s_func(a, b, r, p, m_prime);
  const int va = vp(a, p);
  const std::int64_t a_prime = a / checked_pow(p, va);
  if (m_prime % a_prime == 0) return std::min(s, va);
  return s;
}

std::vector<std::int64_t> S_set(std::int64_t a, std::int64_t b, std::int64_t r) {
  check_ab(a, b);
  std::vector<std::int64_t> out;
  if (r < 0) return out;
  // l(m + ab) = l(m) + 1, so after ab consecutive misses every later m misses too.
  const std::int64_t window = checked_mul(a, b);
  std::int64_t misses = 0;
  for (std::int64_t m = 1; misses < window; ++m) {
    if (l_count(a, b, m) <= r) {
      out.push_back(m);
      misses = 0;
    } else {
      ++misses;
    }
  }
  return out;
}

WeightDecomposition p_decompose(std::int64_t m, std::int64_t p) {
  if (m < 1) throw Error(ErrorKind::InvalidParams, "p_decompose needs m >= 1");
  WeightDecomposition out{m, 0};
  while (out.m_prime % p == 0) {
    out.m_prime /= p;
    ++out.nu;
  }
  return out;
}

std::vector<std::pair<std::int64_t, int>> h_scan(const CuspParams& params, std::int64_t r) {
  std::vector<std::pair<std::int64_t, int>> out;
  // h(m') > 0 forces s(m') > 0, hence l(m') <= r, hence m' in S(a,b,r).
  for (auto m : S_set(params.a, params.b, r)) {
    if (m % params.p == 0) continue;
    const int h = h_func(params.a, params.b, r, params.p, m);
    if (h > 0) out.emplace_back(m, h);
  }
  return out;
}

}  // namespace cuspk
