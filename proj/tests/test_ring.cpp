#include <gtest/gtest.h>

#include <random>

#include "cuspk/error.hpp"
#include "cuspk/ring.hpp"

using namespace cuspk;

namespace {

constexpr int kIterations = 500;

std::vector<Ring> sample_rings() {
  return {Ring::zmod(4),          Ring::zmod(9),          Ring::zmod(12),         Ring::galois_field(2, 2),
          Ring::galois_field(3, 2), Ring::galois_field(2, 3), Ring::parse("Z4xF3"), Ring::parse("F5")};
}

}  // namespace

TEST(Ring, Zmod12Examples) {
  const Ring r = Ring::zmod(12);
  EXPECT_EQ((r.from_int(7) * r.from_int(5)).code(), 11u);
  EXPECT_EQ((r.from_int(3) - r.from_int(5)).code(), 10u);
  EXPECT_TRUE(r.from_int(5).is_unit());
  EXPECT_TRUE(r.from_int(4).is_zero_divisor());
  EXPECT_TRUE(r.from_int(6).is_nilpotent());
  EXPECT_FALSE(r.from_int(4).is_nilpotent());
  EXPECT_TRUE(Ring::zmod(8).from_int(6).is_nilpotent());
}

TEST(Ring, F4Arithmetic) {
  // F4 = F2[x]/(x^2+x+1); x has code 2.
  const Ring f4 = Ring::galois_field(2, 2);
  EXPECT_EQ(f4.modulus(), (std::vector<std::int64_t>{1, 1, 1}));
  const RingElement x = f4.element(2);
  EXPECT_EQ((x * x).code(), 3u);  // x + 1
  EXPECT_EQ((x * x * x).code(), 1u);
  EXPECT_EQ(f4.cardinality(), 4u);
  EXPECT_EQ(f4.characteristic(), 2);
}

TEST(Ring, DefaultModulusIsSmallestIrreducible) {
  EXPECT_EQ(Ring::default_modulus(3, 2), (std::vector<std::int64_t>{1, 0, 1}));
  EXPECT_EQ(Ring::default_modulus(2, 3), (std::vector<std::int64_t>{1, 1, 0, 1}));
}

TEST(Ring, ParseAndName) {
  for (const char* spec : {"Z9", "F5", "F2^2", "F3^2", "Z4xF3"}) {
    const Ring r = Ring::parse(spec);
    EXPECT_EQ(r.name(), spec);
    EXPECT_EQ(Ring::parse(r.name()), r);
  }
  EXPECT_EQ(Ring::parse("F4"), Ring::galois_field(2, 2));
  EXPECT_EQ(Ring::parse("F9"), Ring::galois_field(3, 2));
}

TEST(Ring, RejectsUnsupportedSpecs) {
  for (const char* spec : {"Q5", "F6", "Z1", "", "Z", "F4^x"}) {
    try {
      Ring::parse(spec);
      ADD_FAILURE() << spec;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::UnsupportedRing) << spec;
    }
  }
}

TEST(Ring, ReducibleModulusRejected) {
  EXPECT_THROW(Ring::galois_field(2, std::vector<std::int64_t>{1, 0, 1}), Error);
}

TEST(Ring, MixedRingsRejected) {
  const Ring a = Ring::zmod(4);
  const Ring b = Ring::zmod(8);
  try {
    (void)(a.one() + b.one());
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MixedRings);
  }
}

TEST(RingProperty, AxiomsOnRandomTriples) {
  std::mt19937_64 rng(20240611);
  for (const Ring& r : sample_rings()) {
    std::uniform_int_distribution<std::uint64_t> pick(0, r.cardinality() - 1);
    for (int it = 0; it < kIterations; ++it) {
      const RingElement x = r.element(pick(rng)), y = r.element(pick(rng)), z = r.element(pick(rng));
      ASSERT_EQ((x + y) + z, x + (y + z)) << r.name();
      ASSERT_EQ((x * y) * z, x * (y * z)) << r.name();
      ASSERT_EQ(x + y, y + x);
      ASSERT_EQ(x * y, y * x);
      ASSERT_EQ(x * (y + z), x * y + x * z) << r.name();
      ASSERT_EQ(x + (-x), r.zero());
      ASSERT_EQ(x * r.one(), x);
      ASSERT_EQ(x - y, x + (-y));
    }
  }
}

TEST(RingProperty, ReductionIsHomomorphism) {
  std::mt19937_64 rng(77);
  for (const Ring& r : sample_rings()) {
    std::uniform_int_distribution<std::uint64_t> pick(0, r.cardinality() - 1);
    for (int it = 0; it < kIterations; ++it) {
      const std::uint64_t x = pick(rng), y = pick(rng);
      const CoverElement lx = r.lift_code(x), ly = r.lift_code(y);
      ASSERT_EQ(r.reduce_code(lx), x);
      ASSERT_EQ(r.reduce_code(r.cover_add(lx, ly)), r.add_code(x, y));
      ASSERT_EQ(r.reduce_code(r.cover_mul(lx, ly)), r.mul_code(x, y)) << r.name();
      ASSERT_EQ(r.reduce_code(r.cover_sub(lx, ly)), r.sub_code(x, y));
    }
  }
}

TEST(RingProperty, UnitXorZeroDivisor) {
  for (const Ring& r : sample_rings()) {
    for (const RingElement& x : r.elements()) {
      if (x.is_zero()) continue;
      EXPECT_NE(x.is_unit(), x.is_zero_divisor()) << r.name() << " " << x.to_string();
    }
  }
}

TEST(RingProperty, FieldsHaveNoNonzeroNilpotents) {
  for (const Ring& r : {Ring::galois_field(2, 3), Ring::galois_field(5, 1), Ring::galois_field(3, 2)}) {
    for (const RingElement& x : r.elements()) {
      if (!x.is_zero()) EXPECT_TRUE(x.is_unit());
      EXPECT_EQ(x.is_nilpotent(), x.is_zero());
    }
  }
}
