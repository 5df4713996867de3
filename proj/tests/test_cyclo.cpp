#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qsic/cyclo.hpp"

using namespace qsic;

namespace {

IntPoly ints(std::initializer_list<long> c) {
  IntPoly p;
  for (long x : c) p.emplace_back(x);
  return p;
}

CycNum q(int k, long t = 1) { return CycNum::monomial(k, t); }

CycNum random_cyc(std::mt19937_64& rng, int k) {
  std::uniform_int_distribution<int> coeff(-9, 9), sparse(0, 2);
  CycNum a(k);
  for (int t = 0; t < k; ++t)
    if (sparse(rng) == 0) a += CycNum::monomial(k, t, Rational(coeff(rng)));
  return a;
}

}  // namespace

TEST(CyclotomicPoly, SmallOrders) {
  EXPECT_EQ(cyclotomic_poly(1), ints({-1, 1}));
  EXPECT_EQ(cyclotomic_poly(3), ints({1, 1, 1}));
}

TEST(CyclotomicPoly, TwelveMatchesNumericProductOverPrimitiveRoots) {
  // oracle: prod over the primitive 12th roots, rounded -> x^4 - x^2 + 1
  const auto numeric = oracle::numeric_cyclotomic(12);
  IntPoly expected;
  for (long c : numeric) expected.emplace_back(c);
  EXPECT_EQ(expected, ints({1, 0, -1, 0, 1}));
  EXPECT_EQ(cyclotomic_poly(12), expected);
}

TEST(CyclotomicPoly, AgreesWithNumericProductUpTo30) {
  for (int k = 1; k <= 30; ++k) {
    IntPoly expected;
    for (long c : oracle::numeric_cyclotomic(k)) expected.emplace_back(c);
    EXPECT_EQ(cyclotomic_poly(k), expected) << "k=" << k;
  }
}

TEST(CyclotomicPoly, RejectsNonPositiveOrder) {
  EXPECT_THROW(cyclotomic_poly(0), Error);
  try {
    cyclotomic_poly(-3);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invalid_parameter);
  }
}

TEST(CyclotomicPoly, VanishesAtPrimitiveRoot) {
  for (int k = 1; k <= 24; ++k) EXPECT_LT(std::abs(evaluate_poly(cyclotomic_poly(k), root_of_unity(k, 1))), 1e-9) << k;
}

TEST(CycNum, Addition) {
  EXPECT_TRUE((q(7) + (-q(7))).is_zero());
  CycNum s = CycNum::one(3) + q(3);
  EXPECT_FALSE(s.is_zero());
  EXPECT_TRUE((s + q(3, 2)).is_zero());
  EXPECT_TRUE((CycNum::one(4) + q(4, 2)).is_zero());
}

TEST(CycNum, Multiplication) {
  EXPECT_EQ(q(5, 2) * q(5, 4), q(5, 1));
  EXPECT_EQ(q(2) * q(2), CycNum::one(2));
  // (1+q)(1-q) = 1 - q^2, checked against the numeric product
  const CycNum lhs = (CycNum::one(6) + q(6)) * (CycNum::one(6) - q(6));
  const CycNum rhs = CycNum::one(6) - q(6, 2);
  EXPECT_EQ(lhs, rhs);
  const auto z = oracle::root(6, 1);
  EXPECT_LT(std::abs(lhs.evaluate() - (1.0 + z) * (1.0 - z)), 1e-12);
}

TEST(CycNum, OrderMismatchIsInvalidParameter) {
  try {
    auto r = q(3) + q(4);
    (void)r;
    FAIL() << "expected an exception";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invalid_parameter);
  }
  EXPECT_THROW(q(3) * q(5), Error);
  EXPECT_THROW(inner_product({q(3), q(3), q(3)}, {q(4), q(4), q(4)}), Error);
}

TEST(CycNum, Conjugation) {
  EXPECT_EQ(q(4).conj(), q(4, 3));
  EXPECT_EQ((CycNum::one(3) + q(3)).conj(), CycNum::one(3) + q(3, 2));
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const int k = 1 + t % 13;
    const CycNum a = random_cyc(rng, k), b = random_cyc(rng, k);
    EXPECT_EQ(a.conj().conj(), a);
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
    EXPECT_EQ((a + b).conj(), a.conj() + b.conj());
  }
}

TEST(CycNum, ZeroTest) {
  EXPECT_TRUE((CycNum::one(3) + q(3) + q(3, 2)).is_zero());
  EXPECT_FALSE((CycNum::one(3) + q(3)).is_zero());
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      const auto z = 1.0 + oracle::root(5, a) + oracle::root(5, b);
      ASSERT_GE(std::abs(z), 0.3);  // oracle: every such sum is far from zero
      EXPECT_FALSE((CycNum::one(5) + q(5, a) + q(5, b)).is_zero()) << a << "," << b;
    }
}

TEST(CycNum, ZeroTestAgreesWithFloatingPoint) {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> order(1, 24);
  int zeros = 0;
  for (int t = 0; t < 10000; ++t) {
    const CycNum a = random_cyc(rng, order(rng));
    const bool exact = a.is_zero();
    zeros += exact;
    ASSERT_EQ(exact, std::abs(a.evaluate()) < 1e-9) << a.to_string() << " k=" << a.order();
  }
  EXPECT_GT(zeros, 0);
}

TEST(CycNum, RootPowerCycle) {
  for (int k = 1; k <= 16; ++k) EXPECT_EQ(q(k, k - 1) * q(k), CycNum::one(k));
}

TEST(CycNum, Evaluate) {
  EXPECT_LT(std::abs(q(4).evaluate() - std::complex<double>(0, 1)), 1e-12);
  EXPECT_LT(std::abs((CycNum::one(3) + q(3) + q(3, 2)).evaluate()), 1e-12);
  EXPECT_LT(std::abs(q(6).evaluate() - std::complex<double>(0.5, std::sqrt(3.0) / 2)), 1e-12);
}

TEST(CycNum, AsRational) {
  // 1 + q + q^2 + q^3 vanishes at k = 4, leaving 5/2
  CycNum a = CycNum::one(4) + q(4) + q(4, 2) + q(4, 3) + CycNum(4, make_rational(5, 2));
  ASSERT_TRUE(a.as_rational().has_value());
  EXPECT_EQ(*a.as_rational(), make_rational(5, 2));
  // q^2 = -1 at k = 4
  ASSERT_TRUE(q(4, 2).as_rational().has_value());
  EXPECT_EQ(*q(4, 2).as_rational(), Rational(-1));
  EXPECT_FALSE(q(4).as_rational().has_value());
}

TEST(InnerProduct, Examples) {
  const int k = 3;
  const CycNum one = CycNum::one(k), zero = CycNum::zero(k);
  EXPECT_TRUE(inner_product({one, zero, zero}, {zero, one, zero}).is_zero());
  const CycNum one2 = CycNum::one(2), zero2 = CycNum::zero(2);
  EXPECT_TRUE(inner_product({one2, one2, zero2}, {one2, -one2, zero2}).is_zero());
  const CycVec3 u{one, -q(k), zero}, v{one, q(k), q(k, 2)};
  const CycNum ip = inner_product(u, v);
  EXPECT_TRUE(ip.is_zero());
  const oracle::Vec3 fu{1.0, -oracle::root(3, 1), 0.0}, fv{1.0, oracle::root(3, 1), oracle::root(3, 2)};
  EXPECT_LT(std::abs(oracle::inner(fu, fv)), 1e-12);
}

TEST(InnerProduct, ConjugateSymmetry) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const int k = 2 + t % 10;
    CycVec3 u{random_cyc(rng, k), random_cyc(rng, k), random_cyc(rng, k)};
    CycVec3 v{random_cyc(rng, k), random_cyc(rng, k), random_cyc(rng, k)};
    EXPECT_EQ(inner_product(u, v), inner_product(v, u).conj());
  }
}

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(parse_rational("35/11"), make_rational(35, 11));
  EXPECT_EQ(parse_rational("6/4"), make_rational(3, 2));
  EXPECT_EQ(parse_rational("-2.25"), make_rational(-9, 4));
  EXPECT_EQ(parse_rational(" 5 "), Rational(5));
  EXPECT_EQ(to_string(make_rational(67, 21)), "67/21");
  EXPECT_EQ(to_string(Rational(3)), "3");
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
  EXPECT_THROW(parse_rational("1/2/3"), Error);
}
