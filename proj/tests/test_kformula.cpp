#include <gtest/gtest.h>

#include <array>
#include <map>

#include "cuspk/error.hpp"
#include "cuspk/kformula.hpp"
#include "cuspk/witt.hpp"

using namespace cuspk;

namespace {

std::vector<std::pair<std::string, int>> shape(const GroupDescriptor& d) {
  std::vector<std::pair<std::string, int>> out;
  for (const Factor& f : d.factors) out.emplace_back(f.label, f.n);
  return out;
}

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

// Order histogram of W_n(R) computed by repeated addition.
FiniteAbelianGroup witt_group_by_addition(int n, const Ring& ring, std::int64_t p) {
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= ring.cardinality();
  std::map<Integer, Integer> hist;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const WittVector x = WittVector::from_index(ring, p, static_cast<std::size_t>(n), idx);
    WittVector acc = x;
    long k = 1;
    while (!acc.is_zero()) {
      acc = acc + x;
      ++k;
    }
    hist[Integer(k)] += 1;
  }
  return FiniteAbelianGroup::from_order_histogram(hist);
}

}  // namespace

TEST(Factors, Constructors) {
  EXPECT_FALSE(make_witt_factor("1", 0).has_value());
  EXPECT_EQ(make_witt_factor("1", 2)->n, 2);
  EXPECT_FALSE(make_quotient_factor("2", 3, 0).has_value());
  const auto collapsed = make_quotient_factor("2", 1, 2);
  ASSERT_TRUE(collapsed.has_value());
  EXPECT_EQ(collapsed->kind, FactorKind::Witt);
  EXPECT_EQ(make_quotient_factor("2", 3, 1)->kind, FactorKind::WittQuotient);
}

TEST(ProductForm, FrozenShapes) {
  // Values recomputed by tests/oracles/cusp_oracle.py.
  using V = std::vector<std::pair<std::string, int>>;
  EXPECT_EQ(shape(k_even_product_form(make_cusp_params(2, 3, 5), 0)), (V{{"1", 1}}));
  EXPECT_EQ(shape(k_even_product_form(make_cusp_params(2, 3, 5), 1)), (V{{"1", 2}, {"7", 1}}));
  EXPECT_EQ(shape(k_even_product_form(make_cusp_params(2, 3, 5), 2)), (V{{"1", 2}, {"7", 1}, {"11", 1}, {"13", 1}}));
  EXPECT_EQ(shape(k_even_product_form(make_cusp_params(2, 3, 2), 1)), (V{{"1", 1}, {"5", 1}, {"7", 1}}));
  EXPECT_EQ(shape(k_even_product_form(make_cusp_params(3, 4, 3), 0)), (V{{"1", 1}, {"2", 1}, {"5", 1}}));
  EXPECT_EQ(k_even_product_form(make_cusp_params(3, 4, 3), 1).factors.size(), 9u);
  EXPECT_EQ(k_even_product_form(make_cusp_params(3, 4, 3), 2).factors.size(), 15u);
  // h(4,3,2,2,1) = min(s, v_2(4)) = 2.
  EXPECT_EQ(shape(k_even_product_form(make_cusp_params(4, 3, 2), 2)).front(), (std::pair<std::string, int>{"1", 2}));
}

TEST(ProductForm, NegativeRAndOddDegreesAreTrivial) {
  const CuspParams params = make_cusp_params(2, 3, 5);
  EXPECT_TRUE(k_even_product_form(params, -1).is_trivial());
  for (std::int64_t r = 0; r < 4; ++r) EXPECT_TRUE(k_odd(params, r).is_trivial());
}

TEST(ProductForm, CuspPicardIsAdditiveGroup) {
  for (std::int64_t p : {5, 7, 11}) {
    const Ring fp = Ring::galois_field(p, 1);
    const auto d = k_even_product_form(make_cusp_params(2, 3, p), 0);
    ASSERT_EQ(d.factors.size(), 1u);
    EXPECT_EQ(d.factors[0].n, 1);
    EXPECT_EQ(descriptor_order(d, fp), p);
    EXPECT_EQ(realize_descriptor(d, fp).invariant_factors(), ints({p}));
  }
}

TEST(Realize, WittGroupsOfFields) {
  EXPECT_EQ(realize_witt(2, Ring::galois_field(2, 2), 2).invariant_factors(), ints({4, 4}));
  EXPECT_EQ(realize_witt(3, Ring::galois_field(5, 1), 5).invariant_factors(), ints({125}));
  EXPECT_EQ(realize_witt(0, Ring::galois_field(5, 1), 5).is_trivial(), true);
  EXPECT_EQ(realize_witt(2, Ring::parse("F2xF2^2"), 2).invariant_factors(), ints({4, 4, 4}));
}

TEST(RealizeProperty, ClosedFormMatchesAddition) {
  struct Case {
    int n;
    Ring ring;
    std::int64_t p;
  };
  for (const Case& c : {Case{2, Ring::galois_field(2, 2), 2}, Case{3, Ring::galois_field(2, 1), 2},
                        Case{2, Ring::galois_field(3, 2), 3}, Case{2, Ring::galois_field(5, 1), 5},
                        Case{2, Ring::zmod(4), 2}, Case{3, Ring::zmod(4), 2}, Case{2, Ring::zmod(9), 3}}) {
    EXPECT_EQ(realize_witt(c.n, c.ring, c.p), witt_group_by_addition(c.n, c.ring, c.p)) << c.ring.name();
  }
}

TEST(Realize, WittQuotient) {
  // W_3(F_2) / V W_2(F_2) = W_1 = Z/2;  W_3 / V^2 W_1 = W_2 = Z/4.
  EXPECT_EQ(realize_witt_quotient(3, 1, Ring::galois_field(2, 1), 2).invariant_factors(), ints({2}));
  EXPECT_EQ(realize_witt_quotient(3, 2, Ring::galois_field(2, 1), 2).invariant_factors(), ints({4}));
}

TEST(QuotientForm, FrozenOrders) {
  // |W_S| / |V_a + V_b| from tests/oracles/cusp_oracle.py.
  const auto q = k_even_quotient_form(make_cusp_params(2, 3, 5), 0, Ring::galois_field(5, 1));
  EXPECT_EQ(q.group.order(), 5);
  EXPECT_EQ(q.truncation_set, (std::vector<std::int64_t>{1, 2, 3, 4, 6}));
  EXPECT_EQ(k_even_quotient_form(make_cusp_params(2, 3, 2), 0, Ring::galois_field(2, 1)).group.order(), 2);
  EXPECT_EQ(k_even_quotient_form(make_cusp_params(2, 3, 2), 1, Ring::galois_field(2, 1)).group.order(), 8);
  EXPECT_EQ(k_even_quotient_form(make_cusp_params(3, 4, 3), 0, Ring::galois_field(3, 1)).group.order(), 27);
}

TEST(QuotientForm, RoutesAgree) {
  struct Point {
    std::int64_t a, b, p, r;
    Ring ring;
  };
  for (const Point& pt : {Point{2, 3, 5, 0, Ring::galois_field(5, 1)}, Point{2, 3, 2, 1, Ring::galois_field(2, 1)},
                          Point{2, 3, 2, 0, Ring::galois_field(2, 2)}, Point{3, 4, 3, 0, Ring::galois_field(3, 1)},
                          Point{2, 5, 2, 0, Ring::zmod(4)}, Point{2, 3, 3, 0, Ring::zmod(9)}}) {
    const CuspParams params = make_cusp_params(pt.a, pt.b, pt.p);
    QuotientOptions closure;
    closure.route = QuotientRoute::Closure;
    QuotientOptions reduction;
    reduction.route = QuotientRoute::Reduction;
    const auto qc = k_even_quotient_form(params, pt.r, pt.ring, closure);
    const auto qr = k_even_quotient_form(params, pt.r, pt.ring, reduction);
    EXPECT_EQ(qc.route, QuotientRoute::Closure);
    EXPECT_EQ(qr.route, QuotientRoute::Reduction);
    EXPECT_EQ(qc.group, qr.group) << pt.a << "," << pt.b << "," << pt.p << "," << pt.r << " " << pt.ring.name();
  }
}

TEST(QuotientForm, BudgetExceeded) {
  QuotientOptions tight;
  tight.budget = 100;
  tight.route = QuotientRoute::Closure;
  try {
    k_even_quotient_form(make_cusp_params(2, 3, 2), 1, Ring::galois_field(2, 1), tight);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
  }
}

TEST(QuotientForm, AgreesWithProductFormOverF25) {
  // A field outside the criterion grid.
  const CuspParams params = make_cusp_params(2, 3, 5);
  const Ring f25 = Ring::galois_field(5, 2);
  const auto q = k_even_quotient_form(params, 0, f25);
  EXPECT_EQ(q.group, realize_descriptor(k_even_product_form(params, 0), f25));
}

TEST(Report, BothFormsAndOddTokens) {
  const auto rep = k_padic_cusp_report(make_cusp_params(2, 3, 5), 1, Ring::galois_field(5, 1));
  EXPECT_TRUE(rep.forms_agree);
  EXPECT_TRUE(rep.perfect_base);
  EXPECT_FALSE(rep.extension_determined);
  EXPECT_EQ(rep.even_product_group.invariant_factors(), ints({5, 25}));
  ASSERT_TRUE(rep.even_quotient.has_value());
  EXPECT_EQ(rep.even_quotient->group, rep.even_product_group);
  EXPECT_EQ(rep.odd_tokens.size(), 2u);
  EXPECT_THROW(k_padic_cusp_report(make_cusp_params(2, 3, 5), -1, Ring::galois_field(5, 1)), Error);
}

TEST(Tables, TcMinusExample) {
  using V = std::vector<std::pair<std::string, int>>;
  const auto d = tc_minus_table(make_cusp_params(2, 3, 5), 1, 12);
  EXPECT_EQ(shape(d), (V{{"5", 2}, {"7", 1}, {"11", 1}}));
  EXPECT_EQ(d.tail_truncated_at, 12);
  EXPECT_EQ(shape(tp_table(make_cusp_params(2, 3, 5), 12)), (V{{"5", 1}}));
}

TEST(TablesProperty, StableUnderLargerBound) {
  // Raising M only appends factors with larger labels.
  for (auto [a, b, p] : std::vector<std::array<std::int64_t, 3>>{{2, 3, 5}, {2, 3, 2}, {3, 4, 3}, {2, 5, 3}}) {
    const CuspParams params = make_cusp_params(a, b, p);
    for (std::int64_t r = 0; r <= 2; ++r) {
      for (std::int64_t m = 5; m <= 40; m += 5) {
        const auto small = tc_minus_table(params, r, m);
        const auto big = tc_minus_table(params, r, m + 7);
        ASSERT_LE(small.factors.size(), big.factors.size());
        for (std::size_t i = 0; i < small.factors.size(); ++i) ASSERT_EQ(small.factors[i], big.factors[i]);
        for (std::size_t i = small.factors.size(); i < big.factors.size(); ++i)
          ASSERT_GT(std::stoll(big.factors[i].label), m);
      }
    }
  }
}

TEST(Descriptor, SymbolicOrderThrows) {
  GroupDescriptor d;
  d.p = 2;
  Factor f;
  f.label = "tate";
  f.kind = FactorKind::Symbolic;
  f.token = "TatePic";
  d.push(f);
  EXPECT_TRUE(d.has_symbolic());
  try {
    descriptor_order(d, Ring::galois_field(2, 1));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SymbolicFactor);
  }
}
