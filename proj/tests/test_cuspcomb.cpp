#include <gtest/gtest.h>

#include <algorithm>
#include <array>

#include "cuspk/bigwitt.hpp"
#include "cuspk/cuspcomb.hpp"
#include "cuspk/error.hpp"

using namespace cuspk;

namespace {

std::int64_t l_brute(std::int64_t a, std::int64_t b, std::int64_t m) {
  std::int64_t count = 0;
  for (std::int64_t i = 1; a * i < m; ++i)
    if ((m - a * i) % b == 0) ++count;
  return count;
}

const std::vector<std::pair<std::int64_t, std::int64_t>> kPairs = {{2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 7}};

}  // namespace

TEST(CuspComb, FrozenValues) {
  // Values recomputed by tests/oracles/cusp_oracle.py.
  EXPECT_EQ(l_count(2, 3, 5), 1);
  EXPECT_EQ(l_count(2, 3, 25), 4);
  EXPECT_EQ(S_set(2, 3, 0), (std::vector<std::int64_t>{1, 2, 3, 4, 6}));
  EXPECT_EQ(S_set(2, 3, 1), (std::vector<std::int64_t>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12}));
  EXPECT_EQ(S_set(2, 3, 2), (std::vector<std::int64_t>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 18}));
  EXPECT_EQ(S_set(3, 4, 0), (std::vector<std::int64_t>{1, 2, 3, 4, 5, 6, 8, 9, 12}));
  EXPECT_EQ(S_set(3, 4, 1).size(), 21u);
  EXPECT_EQ(S_set(3, 4, 2).size(), 33u);
  EXPECT_EQ(s_func(2, 3, 0, 5, 1), 1);
  EXPECT_EQ(s_func(2, 3, 0, 5, 7), 0);
  EXPECT_EQ(s_func(2, 3, 1, 5, 1), 2);
  EXPECT_EQ(s_func(4, 3, 2, 2, 1), 6);
  EXPECT_EQ(h_func(2, 3, 0, 5, 1), 1);
  EXPECT_EQ(h_func(2, 3, 0, 5, 3), 0);
  EXPECT_EQ(h_func(4, 3, 2, 2, 1), 2);
}

TEST(CuspComb, EmptyForNegativeR) {
  EXPECT_TRUE(S_set(2, 3, -1).empty());
  EXPECT_EQ(s_func(2, 3, -1, 5, 1), 0);
  EXPECT_TRUE(h_scan(make_cusp_params(2, 3, 5), -1).empty());
}

TEST(CuspComb, PDecompose) {
  EXPECT_EQ(p_decompose(40, 2).m_prime, 5);
  EXPECT_EQ(p_decompose(40, 2).nu, 3);
  EXPECT_EQ(p_decompose(7, 5).m_prime, 7);
  EXPECT_EQ(p_decompose(7, 5).nu, 0);
  EXPECT_EQ(p_decompose(75, 5).m_prime, 3);
  EXPECT_EQ(p_decompose(75, 5).nu, 2);
}

TEST(CuspComb, ParamsValidationAndNormalization) {
  const CuspParams q = make_cusp_params(3, 2, 2);
  EXPECT_EQ(q.a, 2);
  EXPECT_EQ(q.b, 3);
  EXPECT_TRUE(q.normalized);
  EXPECT_FALSE(make_cusp_params(2, 3, 5).normalized);
  for (auto [a, b, p] : std::vector<std::array<std::int64_t, 3>>{{2, 4, 5}, {1, 3, 2}, {2, 3, 4}, {6, 6, 5}, {2, 3, 0}}) {
    try {
      make_cusp_params(a, b, p);
      ADD_FAILURE() << a << " " << b << " " << p;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::InvalidParams);
    }
  }
}

TEST(CuspCombProperty, LCountMatchesEnumeration) {
  for (auto [a, b] : kPairs) {
    for (std::int64_t m = 1; m <= 500; ++m) ASSERT_EQ(l_count(a, b, m), l_brute(a, b, m)) << a << "," << b << "," << m;
  }
}

TEST(CuspCombProperty, Recurrence) {
  for (auto [a, b] : kPairs) {
    for (std::int64_t m = 1; m <= 500; ++m) ASSERT_EQ(l_count(a, b, m + a * b), l_count(a, b, m) + 1);
  }
}

TEST(CuspCombProperty, SSetDivisorStableAndExact) {
  for (auto [a, b] : kPairs) {
    for (std::int64_t r = 0; r <= 4; ++r) {
      const auto s = S_set(a, b, r);
      ASSERT_TRUE(is_divisor_stable(s));
      ASSERT_TRUE(std::is_sorted(s.begin(), s.end()));
      // Every m up to a generous bound is in S iff l(m) <= r.
      for (std::int64_t m = 1; m <= (r + 3) * a * b; ++m) {
        const bool in = std::binary_search(s.begin(), s.end(), m);
        ASSERT_EQ(in, l_brute(a, b, m) <= r) << a << "," << b << "," << r << "," << m;
      }
    }
  }
}

TEST(CuspCombProperty, SFuncCharacterization) {
  for (auto [a, b] : kPairs) {
    for (std::int64_t p : {2, 3, 5, 7}) {
      for (std::int64_t r = 0; r <= 3; ++r) {
        for (std::int64_t m = 1; m <= 60; ++m) {
          if (m % p == 0) continue;
          const int s = s_func(a, b, r, p, m);
          if (s == 0) {
            ASSERT_GT(l_brute(a, b, m), r);
          } else {
            std::int64_t q = 1;
            for (int i = 0; i < s - 1; ++i) q *= p;
            ASSERT_LE(l_brute(a, b, m * q), r);
            ASSERT_GT(l_brute(a, b, m * q * p), r);
          }
        }
      }
    }
  }
}

TEST(CuspCombProperty, HScanMatchesHFunc) {
  for (auto [a, b] : kPairs) {
    for (std::int64_t p : {2, 3, 5, 7}) {
      if (a % p == 0 && b % p == 0) continue;
      const CuspParams params = make_cusp_params(a, b, p);
      for (std::int64_t r = 0; r <= 2; ++r) {
        const auto scan = h_scan(params, r);
        const auto s = S_set(params.a, params.b, r);
        std::size_t i = 0;
        for (auto m : s) {
          if (m % p == 0) continue;
          const int h = h_func(params.a, params.b, r, p, m);
          if (h == 0) continue;
          ASSERT_LT(i, scan.size());
          ASSERT_EQ(scan[i].first, m);
          ASSERT_EQ(scan[i].second, h);
          ++i;
        }
        ASSERT_EQ(i, scan.size());
      }
    }
  }
}
