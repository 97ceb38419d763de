#include <gtest/gtest.h>

#include "cuspk/error.hpp"
#include "cuspk/polyunits.hpp"

using namespace cuspk;

namespace {

// Does f have an inverse of degree <= bound in R[t]?  Exhaustive.
bool has_inverse_up_to(const TruncatedPoly& f, std::size_t bound) {
  const Ring& ring = f.ring();
  const std::uint64_t q = ring.cardinality();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i <= bound; ++i) total *= q;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<std::uint64_t> coeffs;
    for (std::uint64_t v = idx, i = 0; i <= bound; ++i, v /= q) coeffs.push_back(v % q);
    if ((f * TruncatedPoly::polynomial(ring, coeffs)).is_one()) return true;
  }
  return false;
}

}  // namespace

TEST(Poly, ParseAndPrint) {
  const Ring z4 = Ring::zmod(4);
  const auto f = TruncatedPoly::parse(z4, "1+2t+3t^2");
  EXPECT_EQ(f.coeffs(), (std::vector<std::uint64_t>{1, 2, 3}));
  EXPECT_EQ(f.degree(), 2);
  EXPECT_EQ(TruncatedPoly::parse(z4, "1-t^3").coeffs(), (std::vector<std::uint64_t>{1, 0, 0, 3}));
  EXPECT_EQ(TruncatedPoly::parse(z4, "2*t").coeffs(), (std::vector<std::uint64_t>{0, 2}));
  const auto g = TruncatedPoly::parse(z4, "1+2t+3t^2", 2);
  EXPECT_TRUE(g.is_truncated());
  EXPECT_EQ(g.coeffs(), (std::vector<std::uint64_t>{1, 2}));
  EXPECT_NE(g.to_string().find("mod t^2"), std::string::npos);
  EXPECT_EQ(TruncatedPoly::polynomial(z4, {0, 0}).degree(), -1);
}

TEST(Poly, UnitExamples) {
  const Ring z4 = Ring::zmod(4);
  EXPECT_TRUE(poly_is_unit(TruncatedPoly::parse(z4, "1+2t")));
  EXPECT_TRUE(poly_is_unit(TruncatedPoly::parse(z4, "3+2t^2")));
  EXPECT_FALSE(poly_is_unit(TruncatedPoly::parse(z4, "1+t")));
  EXPECT_FALSE(poly_is_unit(TruncatedPoly::parse(z4, "2+2t")));
  // (1+2t)^2 = 1 in Z/4[t].
  EXPECT_TRUE(TruncatedPoly::parse(z4, "1+2t").pow(2).is_one());
}

TEST(Poly, UnitCheckRefusesTruncatedMode) {
  try {
    poly_is_unit(TruncatedPoly::parse(Ring::zmod(4), "1+t", 3));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::QuotientMode);
  }
}

TEST(Poly, Nilradical) {
  EXPECT_EQ(nilradical(Ring::zmod(8)), (std::vector<std::uint64_t>{0, 2, 4, 6}));
  EXPECT_EQ(nilradical(Ring::zmod(12)), (std::vector<std::uint64_t>{0, 6}));
  EXPECT_EQ(nilradical(Ring::galois_field(3, 2)), (std::vector<std::uint64_t>{0}));
}

TEST(PolyProperty, UnitCriterionMatchesInverseSearch) {
  // Over Z/4 a unit u + n has n = 2g, so n^2 = 0 and the inverse
  // u^{-1} - u^{-2} n has degree <= 2 too.
  const Ring z4 = Ring::zmod(4);
  for (std::uint64_t idx = 0; idx < 64; ++idx) {
    const std::vector<std::uint64_t> coeffs = {idx % 4, (idx / 4) % 4, idx / 16};
    const auto f = TruncatedPoly::polynomial(z4, coeffs);
    ASSERT_EQ(poly_is_unit(f), has_inverse_up_to(f, 2)) << f.to_string();
  }
}

TEST(OnePlusNil, GroupOrdersAndInverses) {
  const auto g = one_plus_nil_group(Ring::zmod(4), 3);
  EXPECT_EQ(g.elements.size(), 4u);
  const auto h = one_plus_nil_group(Ring::zmod(8), 3);
  EXPECT_EQ(h.elements.size(), 16u);
  for (const auto& f : h.elements) {
    EXPECT_TRUE(h.multiply(f, h.inverse(f)).is_one());
    for (const auto& e : h.elements) EXPECT_TRUE(h.contains(h.multiply(f, e)));
  }
  EXPECT_THROW(one_plus_nil_group(Ring::zmod(8), 12, 100), Error);
}

TEST(PthRoot, NoRootOfOnePlusPt) {
  for (auto [p, ring] : std::vector<std::pair<std::int64_t, Ring>>{{2, Ring::zmod(8)}, {3, Ring::zmod(27)}}) {
    const auto u = TruncatedPoly::parse(ring, p == 2 ? "1+2t" : "1+3t", 3);
    const auto res = has_pth_root(u, p);
    EXPECT_FALSE(res.exists);
    EXPECT_FALSE(res.witness.has_value());
    EXPECT_FALSE(res.obstruction.empty());
    EXPECT_GT(res.searched, 0u);
  }
}

TEST(PthRoot, FindsRootsOfPowers) {
  const Ring z8 = Ring::zmod(8);
  const auto g = one_plus_nil_group(z8, 3);
  for (const auto& y : g.elements) {
    const auto u = y.pow(2);
    const auto res = has_pth_root(u, 2);
    ASSERT_TRUE(res.exists) << u.to_string();
    ASSERT_TRUE(res.witness.has_value());
    ASSERT_EQ(res.witness->pow(2), u);
  }
}

TEST(Torsion, TraceConcludesIdentity) {
  for (std::int64_t p : {2, 3, 5}) {
    for (std::size_t n = 1; n <= 6; ++n) {
      for (unsigned k = 0; k <= 2; ++k) {
        const auto trace = torsion_free_check(p, n, k);
        ASSERT_TRUE(trace.concludes_identity) << p << " " << n << " " << k;
        ASSERT_EQ(trace.steps.size(), n - 1);
        Integer pk = 1;
        for (unsigned i = 0; i < k; ++i) pk *= p;
        for (const auto& step : trace.steps) ASSERT_EQ(step.multiplier, pk);
      }
    }
  }
}

TEST(Torsion, IntegerPolynomialCheck) {
  EXPECT_TRUE(is_p_power_torsion({Integer(1)}, 2, 3, 5));
  EXPECT_FALSE(is_p_power_torsion({Integer(1), Integer(1)}, 2, 1, 4));
  // 1 + 4t squared is 1 + 8t + 16t^2, not 1 over Z.
  EXPECT_FALSE(is_p_power_torsion({Integer(1), Integer(4)}, 2, 1, 3));
  // Modulo t^1 everything with constant 1 is the identity.
  EXPECT_TRUE(is_p_power_torsion({Integer(1), Integer(7)}, 3, 1, 1));
}
