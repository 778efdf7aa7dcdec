#include "singtuple/polynomial.h"

#include <gtest/gtest.h>

#include "test_util.h"

namespace singtuple {
namespace {

using testing::Rng;

const VariableLayout kBinary = VariableLayout::single_block(2);

RationalPolynomial x(int i, const VariableLayout& layout = kBinary) {
  return RationalPolynomial::variable(layout, i);
}

RationalPolynomial c(int v, const VariableLayout& layout = kBinary) {
  return RationalPolynomial::constant(layout, Rational(v));
}

TEST(PolynomialTest, AdditionCancelsToEmptyMap) {
  const auto p = x(0) + (-x(0));
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.num_terms(), 0u);
  EXPECT_EQ(p.degree(), -1);
  EXPECT_EQ(p.to_string(), "0");
}

TEST(PolynomialTest, AdditionOfSquares) {
  const auto p = x(0) * x(0) + x(1) * x(1);
  EXPECT_EQ(p, block_quadric(kBinary, 0));
  const auto q = block_quadric(kBinary, 0);
  EXPECT_EQ((q + q).to_string(), "2 * x0^2 + 2 * x1^2");
}

TEST(PolynomialTest, Multiplication) {
  EXPECT_EQ((x(0) + x(1)) * (x(0) - x(1)), x(0) * x(0) - x(1) * x(1));
  const auto q = block_quadric(kBinary, 0);
  EXPECT_EQ((q * q).coefficient_of({2, 2}), 2);
  EXPECT_EQ(c(1) * q, q);
}

TEST(PolynomialTest, PartialDerivatives) {
  EXPECT_EQ(x(0).pow(3).partial_derivative(0), c(3) * x(0) * x(0));
  const auto q = block_quadric(kBinary, 0);
  EXPECT_EQ(q.pow(2).partial_derivative(0), c(4) * x(0) * q);
  EXPECT_TRUE(x(1).partial_derivative(0).is_zero());
  EXPECT_THROW(x(1).partial_derivative(2), std::out_of_range);
}

TEST(PolynomialTest, Evaluate) {
  const auto q = block_quadric(kBinary, 0);
  const std::vector<Complex> iso = {1.0, Complex(0, 1)};
  EXPECT_EQ(q.evaluate(iso), Complex(0.0));
  const std::vector<Complex> pt = {2.0, 3.0};
  EXPECT_EQ((x(0) * x(1)).evaluate(pt), Complex(6.0));
  EXPECT_EQ(RationalPolynomial(kBinary).evaluate(pt), Complex(0.0));
  EXPECT_THROW(q.evaluate(std::vector<Complex>{1.0}), std::invalid_argument);
}

TEST(PolynomialTest, CoefficientOf) {
  const auto q = block_quadric(kBinary, 0);
  EXPECT_EQ(q.coefficient_of({2, 0}), 1);
  EXPECT_EQ(q.coefficient_of({1, 1}), 0);
  const VariableLayout t = VariableLayout({1, 1, 1});
  const auto s = (x(0, t) + x(1, t) + x(2, t)).pow(3);
  EXPECT_EQ(s.coefficient_of({1, 1, 1}), 6);
}

TEST(PolynomialTest, LayoutMismatchThrows) {
  const VariableLayout other({2, 2});
  EXPECT_THROW(x(0) + x(0, other), std::invalid_argument);
  EXPECT_THROW(x(0) * x(0, other), std::invalid_argument);
}

TEST(PolynomialTest, CanonicalTextOrder) {
  const auto p = x(1) + c(3) * x(0) * x(0) + c(-1, kBinary) * x(0) * x(1) + c(2);
  EXPECT_EQ(p.to_string(), "3 * x0^2 + -1 * x0^1 * x1^1 + 1 * x1^1 + 2");
  RationalPolynomial half(kBinary);
  half.add_term({1, 0}, Rational(1, 2));
  EXPECT_EQ(half.to_string(), "1/2 * x0^1");
}

TEST(PolynomialTest, MultidegreeAndHomogeneity) {
  const VariableLayout two({2, 2});
  const auto p = x(0, two) * x(2, two) + x(1, two) * x(3, two);
  ASSERT_TRUE(p.multidegree());
  EXPECT_EQ(*p.multidegree(), (std::vector<int>{1, 1}));
  EXPECT_FALSE((p + x(0, two) * x(1, two)).multidegree());
  EXPECT_TRUE((p + x(0, two) * x(1, two)).is_homogeneous());
  EXPECT_FALSE((p + x(0, two)).is_homogeneous());
}

TEST(PolynomialTest, ParseRational) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-7"), -7);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
}

TEST(PolynomialProperty, RingAxioms) {
  Rng rng(11);
  const VariableLayout layout({2, 2});
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = testing::random_polynomial(rng, layout, 3, 4);
    const auto b = testing::random_polynomial(rng, layout, 3, 4);
    const auto cc = testing::random_polynomial(rng, layout, 3, 4);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + cc, a + (b + cc));
    EXPECT_EQ((a * b) * cc, a * (b * cc));
    EXPECT_EQ(a * (b + cc), a * b + a * cc);
  }
}

TEST(PolynomialProperty, MixedPartialsCommute) {
  Rng rng(12);
  const VariableLayout layout({3});
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = testing::random_polynomial(rng, layout, 5, 6);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        EXPECT_EQ(p.partial_derivative(i).partial_derivative(j),
                  p.partial_derivative(j).partial_derivative(i));
  }
}

TEST(PolynomialProperty, EvaluationIsMultiplicative) {
  Rng rng(13);
  const VariableLayout layout({2, 2});
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = testing::random_polynomial(rng, layout, 4, 5);
    const auto b = testing::random_polynomial(rng, layout, 4, 5);
    std::vector<Complex> z;
    for (int i = 0; i < 4; ++i) z.emplace_back(rng.unit() * 2 - 1, rng.unit() * 2 - 1);
    const Complex lhs = (a * b).evaluate(z);
    const Complex rhs = a.evaluate(z) * b.evaluate(z);
    EXPECT_LE(std::abs(lhs - rhs), 1e-12 * std::max(1.0, std::abs(rhs)));
  }
}

TEST(PolynomialProperty, EulerIdentity) {
  Rng rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.uniform(2, 4), d = rng.uniform(1, 6);
    const auto p = testing::random_form(rng, n, d);
    RationalPolynomial euler(p.layout());
    for (int i = 0; i < n; ++i)
      euler += RationalPolynomial::variable(p.layout(), i) * p.partial_derivative(i);
    EXPECT_EQ(euler, p.scaled(Rational(d)));
  }
}

TEST(PolynomialTest, ComplexInstantiation) {
  const auto p = to_complex(block_quadric(kBinary, 0));
  const ComplexPolynomial i = ComplexPolynomial::constant(kBinary, Complex(0, 1));
  const auto r = p * i;
  EXPECT_EQ(r.coefficient_of({2, 0}), Complex(0, 1));
  EXPECT_TRUE((r - r).is_zero());
}

}  // namespace
}  // namespace singtuple
