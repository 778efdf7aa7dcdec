#include "singtuple/harmonic.h"

#include <gtest/gtest.h>

#include "singtuple/tensor.h"
#include "test_util.h"

namespace singtuple {
namespace {

VariableLayout vars(int n) { return VariableLayout::single_block(n); }

RationalPolynomial x(int i, int n) { return RationalPolynomial::variable(vars(n), i); }

RationalPolynomial k(Rational c, int n) { return RationalPolynomial::constant(vars(n), c); }

RationalPolynomial q(int n) { return block_quadric(vars(n), 0); }

const RationalPolynomial* component(const HarmonicDecomposition& d, int j) {
  for (const auto& [jj, h] : d.components)
    if (jj == j) return &h;
  return nullptr;
}

TEST(LaplacianTest, Examples) {
  EXPECT_EQ(laplacian(x(0, 2).pow(2)), k(2, 2));
  EXPECT_EQ(laplacian(q(3)), k(6, 3));
  // (x0 + i x1)^3 = x0^3 - 3 x0 x1^2 + i (3 x0^2 x1 - x1^3); both parts harmonic.
  const auto re = x(0, 2).pow(3) - k(3, 2) * x(0, 2) * x(1, 2).pow(2);
  const auto im = k(3, 2) * x(0, 2).pow(2) * x(1, 2) - x(1, 2).pow(3);
  EXPECT_TRUE(laplacian(re).is_zero());
  EXPECT_TRUE(laplacian(im).is_zero());
  const VariableLayout two({2, 2});
  EXPECT_THROW(laplacian(RationalPolynomial::variable(two, 0)), std::invalid_argument);
}

// Expected components frozen from tests/oracles/harmonic_oracle.py.
TEST(DecomposeTest, SquareOfCoordinate) {
  const auto d = harmonic_decompose(x(0, 2).pow(2), 2);
  ASSERT_EQ(d.components.size(), 2u);
  EXPECT_EQ(*component(d, 0), k(Rational(1, 2), 2) * (x(0, 2).pow(2) - x(1, 2).pow(2)));
  EXPECT_EQ(*component(d, 1), k(Rational(1, 2), 2));
}

TEST(DecomposeTest, QSquaredIsPureKernel) {
  const auto d = harmonic_decompose(q(2).pow(2), 4);
  ASSERT_EQ(d.components.size(), 1u);
  EXPECT_EQ(d.components[0].first, 2);
  EXPECT_EQ(d.components[0].second, k(1, 2));
}

TEST(DecomposeTest, CubeOfCoordinate) {
  const auto d = harmonic_decompose(x(0, 2).pow(3), 3);
  EXPECT_EQ(*component(d, 0), x(0, 2).pow(3) - k(Rational(3, 4), 2) * x(0, 2) * q(2));
  EXPECT_EQ(*component(d, 1), k(Rational(3, 4), 2) * x(0, 2));
}

TEST(DecomposeTest, FourthPowerOfCoordinate) {
  const auto d = harmonic_decompose(x(0, 2).pow(4), 4);
  const auto x0 = x(0, 2), x1 = x(1, 2);
  EXPECT_EQ(*component(d, 0), k(Rational(1, 8), 2) * x0.pow(4) -
                                  k(Rational(3, 4), 2) * x0.pow(2) * x1.pow(2) +
                                  k(Rational(1, 8), 2) * x1.pow(4));
  EXPECT_EQ(*component(d, 1), k(Rational(1, 2), 2) * (x0.pow(2) - x1.pow(2)));
  EXPECT_EQ(*component(d, 2), k(Rational(3, 8), 2));
}

TEST(DecomposeTest, RejectsBadInput) {
  EXPECT_THROW(harmonic_decompose(x(0, 2).pow(2) + x(1, 2), 2), std::invalid_argument);
  EXPECT_THROW(harmonic_decompose(x(0, 2).pow(2), 3), std::invalid_argument);
}

TEST(KernelComponentTest, Examples) {
  EXPECT_EQ(kernel_component(q(2).pow(2).scaled(5), 4), Rational(5));
  EXPECT_EQ(kernel_component(x(0, 2).pow(4), 4), Rational(3, 8));
  EXPECT_EQ(kernel_component(x(0, 2).pow(3), 3), std::nullopt);
  EXPECT_EQ(kernel_component(x(0, 2).pow(2) * x(1, 2).pow(2), 4), Rational(1, 8));
  EXPECT_EQ(kernel_component(x(0, 3).pow(4), 4), Rational(1, 5));
  const auto f = x(0, 3).pow(2) * x(1, 3) * x(2, 3) + k(3, 3) * x(2, 3).pow(4);
  EXPECT_EQ(kernel_component(f, 4), Rational(3, 5));
  EXPECT_EQ(kernel_component(x(0, 4).pow(6), 6), Rational(5, 64));
}

TEST(HarmonicProperty, ExactReconstructionAndHarmonicity) {
  testing::Rng rng(51);
  for (int i = 0; i < 60; ++i) {
    const int m = rng.uniform(1, 3), d = rng.uniform(0, 6);
    const auto f = testing::random_form(rng, m + 1, d);
    const auto dec = harmonic_decompose(f, d);
    EXPECT_EQ(dec.reconstruct().to_string(), f.to_string());
    for (const auto& [j, h] : dec.components) {
      EXPECT_TRUE(laplacian(h).is_zero());
      EXPECT_EQ(h.degree(), d - 2 * j);
    }
  }
}

TEST(HarmonicProperty, KernelCharacterization) {
  // phi_kernel_check(f) holds exactly when only the top component survives.
  testing::Rng rng(52);
  for (int i = 0; i < 30; ++i) {
    const int m = rng.uniform(1, 3), d = 2 * rng.uniform(1, 3);
    const TensorFormat format({d}, {m});
    RationalPolynomial f = q_product_tensor(format).polynomial().scaled(
        Rational(rng.uniform(1, 9), rng.uniform(1, 4)));
    if (i % 2 == 1) f += testing::random_form(rng, m + 1, d);
    const auto dec = harmonic_decompose(f, d);
    bool only_top = true;
    for (const auto& [j, h] : dec.components)
      if (d - 2 * j >= 1) only_top = false;
    EXPECT_EQ(phi_kernel_check(RationalTensor(format, f)), only_top);
  }
  // Odd degree: never in the kernel unless zero.
  for (int i = 0; i < 10; ++i) {
    const auto f = testing::random_form(rng, 3, 3);
    if (f.is_zero()) continue;
    EXPECT_FALSE(phi_kernel_check(RationalTensor(TensorFormat({3}, {2}), f)));
  }
}

TEST(HarmonicProperty, DimensionCount) {
  for (int m = 1; m <= 4; ++m)
    for (int d = 0; d <= 7; ++d)
      EXPECT_EQ(BigInt(harmonic_dimension(d, m)), harmonic_dimension_formula(d, m))
          << d << ' ' << m;
  EXPECT_EQ(harmonic_dimension_formula(3, 1), 2);
  EXPECT_EQ(harmonic_dimension_formula(2, 2), 5);
}

}  // namespace
}  // namespace singtuple
