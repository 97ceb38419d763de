#pragma once

// Cusp combinatorics for the curve y^a = x^b.
//
//   l(a,b,m)   number of (i,j) in Z>=1^2 with a i + b j = m
//   S(a,b,r)   {m >= 1 : l(a,b,m) <= r}
//   s, h       the level functions attached to m' in J_p

#include <cstdint>
#include <vector>

#include "cuspk/arith.hpp"

namespace cuspk {

struct CuspParams {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t p = 0;
  // True when the input had p | b and a, b were swapped.
  bool normalized = false;
};

// Validates a, b >= 2 coprime, p prime, p not dividing both, and swaps a and b
// if p | b.  Throws InvalidParams.
CuspParams make_cusp_params(std::int64_t a, std::int64_t b, std::int64_t p);

struct WeightDecomposition {
  std::int64_t m_prime = 0;
  int nu = 0;
};

std::int64_t l_count(std::int64_t a, std::int64_t b, std::int64_t m);

// Unique s >= 1 with l(m' p^{s-1}) <= r < l(m' p^s), else 0.
int s_func(std::int64_t a, std::int64_t b, std::int64_t r, std::int64_t p, std::int64_t m_prime);
int h_func(std::int64_t a, std::int64_t b, std::int64_t r, std::int64_t p, std::int64_t m_prime);

// Sorted.  Empty for r < 0.
std::vector<std::int64_t> S_set(std::int64_t a, std::int64_t b, std::int64_t r);

WeightDecomposition p_decompose(std::int64_t m, std::int64_t p);

// All m' in J_p with h(m') > 0, ascending, paired with h(m').
std::vector<std::pair<std::int64_t, int>> h_scan(const CuspParams& params, std::int64_t r);

}  // namespace cuspk
