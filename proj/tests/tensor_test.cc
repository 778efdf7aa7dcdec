#include "singtuple/tensor.h"

#include <gtest/gtest.h>

#include "singtuple/tensor_io.h"
#include "test_util.h"

namespace singtuple {
namespace {

RationalTensor from_poly(const TensorFormat& format, const RationalPolynomial& p) {
  return RationalTensor(format, p);
}

RationalPolynomial var(const TensorFormat& f, int i) {
  return RationalPolynomial::variable(f.layout(), i);
}

TEST(FormatTest, Validation) {
  const auto segre = validate_format(TensorFormat({1, 1, 1}, {1, 1, 1}));
  EXPECT_TRUE(segre.triangle_ok);
  EXPECT_TRUE(segre.theorem_applicable);
  EXPECT_FALSE(segre.excluded_case);

  const auto matrix = validate_format(TensorFormat({1, 1}, {2, 2}));
  EXPECT_TRUE(matrix.triangle_ok);
  EXPECT_FALSE(matrix.theorem_applicable);
  EXPECT_EQ(matrix.excluded_case, "(1,1) matrix case");

  const auto thin = validate_format(TensorFormat({1, 1, 1}, {1, 1, 3}));
  EXPECT_FALSE(thin.triangle_ok);
  EXPECT_FALSE(thin.theorem_applicable);

  EXPECT_FALSE(validate_format(TensorFormat({2}, {3})).theorem_applicable);
  EXPECT_TRUE(validate_format(TensorFormat({3}, {1})).theorem_applicable);
  EXPECT_TRUE(validate_format(TensorFormat({2, 1}, {1, 1})).theorem_applicable);
}

TEST(FormatTest, RejectsMalformed) {
  EXPECT_THROW(TensorFormat({}, {}), std::invalid_argument);
  EXPECT_THROW(TensorFormat({1, 2}, {1}), std::invalid_argument);
  EXPECT_THROW(TensorFormat({0}, {1}), std::invalid_argument);
  EXPECT_THROW(TensorFormat({1}, {0}), std::invalid_argument);
}

TEST(FormatTest, AmbientDimensionIsBig) {
  EXPECT_EQ(TensorFormat({3}, {2}).ambient_dimension(), 10);
  EXPECT_EQ(TensorFormat({2, 2}, {1, 1}).ambient_dimension(), 9);
  // 12 factors of binom(40, 20) overflow 64 bits.
  const TensorFormat huge(std::vector<int>(12, 20), std::vector<int>(12, 20));
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), 40, 20);
  BigInt expected = 1;
  for (int i = 0; i < 12; ++i) expected *= b;
  EXPECT_EQ(huge.ambient_dimension(), expected);
}

TEST(FormatTest, MonomialBasisMatchesAmbient) {
  for (const auto& f : {TensorFormat({3}, {2}), TensorFormat({2, 1}, {1, 2}),
                        TensorFormat({1, 1, 1}, {1, 1, 1})}) {
    EXPECT_EQ(BigInt(monomial_basis(f).size()), f.ambient_dimension());
  }
}

TEST(TensorTest, RejectsNonMultihomogeneous) {
  const TensorFormat f({1, 1}, {1, 1});
  EXPECT_THROW(from_poly(f, var(f, 0) * var(f, 1)), std::invalid_argument);
  EXPECT_NO_THROW(from_poly(f, var(f, 0) * var(f, 2)));
}

TEST(TensorTest, ContractExamples) {
  const TensorFormat mat({1, 1}, {1, 1});
  const auto t = from_poly(mat, var(mat, 0) * var(mat, 2));  // x0 y0
  BlockPoint p = {Eigen::Vector2cd(0.3, 0.7), Eigen::Vector2cd(1.0, 0.0)};
  // Slot 0 flattens against y = (1, 0).
  const Eigen::VectorXcd v = contract(t, 0, p);
  EXPECT_EQ(v[0], Complex(1.0));
  EXPECT_EQ(v[1], Complex(0.0));

  const TensorFormat bin2({2}, {1});
  const Complex a(0.4, -1.0), b(2.0, 0.5);
  const Eigen::VectorXcd w = contract(q_product_tensor(bin2), 0, {Eigen::Vector2cd(a, b)});
  EXPECT_NEAR(std::abs(w[0] - a), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(w[1] - b), 0.0, 1e-15);

  const TensorFormat bin3({3}, {1});
  const auto cube = from_poly(bin3, var(bin3, 0).pow(3));
  const Eigen::VectorXcd u = contract(cube, 0, {Eigen::Vector2cd(1.0, 1.0)});
  EXPECT_EQ(u[0], Complex(1.0));
  EXPECT_EQ(u[1], Complex(0.0));

  EXPECT_THROW(contract(cube, 1, {Eigen::Vector2cd(1.0, 1.0)}), std::out_of_range);
  EXPECT_THROW(contract(cube, 0, {Eigen::Vector3cd(1.0, 1.0, 1.0)}),
               std::invalid_argument);
}

TEST(TensorTest, SectionExamples) {
  const TensorFormat bin3({3}, {1});
  const auto f = from_poly(bin3, var(bin3, 0).pow(3) + var(bin3, 1).pow(3));
  const auto s = build_singular_section(f);
  ASSERT_EQ(s.minors.size(), 1u);
  ASSERT_EQ(s.minors[0].size(), 1u);
  const RationalPolynomial expected =
      var(bin3, 0).pow(2) * var(bin3, 1) * RationalPolynomial::constant(bin3.layout(), 3) -
      var(bin3, 1).pow(2) * var(bin3, 0) * RationalPolynomial::constant(bin3.layout(), 3);
  EXPECT_EQ(s.minors[0][0].poly, expected);

  const auto q = build_singular_section(q_product_tensor(TensorFormat({2}, {1})));
  EXPECT_TRUE(q.minors[0][0].poly.is_zero());

  const TensorFormat mat({1, 1}, {1, 1});
  const auto m = build_singular_section(from_poly(mat, var(mat, 0) * var(mat, 2)));
  // Slot 0: F = (y0, 0), minor F_0 x1 - F_1 x0 = x1 y0.
  EXPECT_EQ(m.minors[0][0].poly, var(mat, 1) * var(mat, 2));
  EXPECT_EQ(m.minors[1][0].poly, var(mat, 0) * var(mat, 3));
}

TEST(TensorTest, QProductExamples) {
  const TensorFormat b2({2}, {1}), b4({4}, {1});
  EXPECT_EQ(q_product_tensor(b2).polynomial(), block_quadric(b2.layout(), 0));
  const auto q4 = q_product_tensor(b4).polynomial();
  EXPECT_EQ(q4.num_terms(), 3u);
  EXPECT_EQ(q4.coefficient_of({2, 2}), 2);
  EXPECT_EQ(q_product_tensor(TensorFormat({2, 2}, {1, 1})).polynomial().num_terms(), 4u);
  try {
    q_product_tensor(TensorFormat({2, 3}, {1, 1}));
    FAIL() << "odd degree accepted";
  } catch (const std::domain_error& e) {
    EXPECT_NE(std::string(e.what()).find("q-product undefined"), std::string::npos);
  }
}

TEST(TensorTest, PhiKernelExamples) {
  EXPECT_TRUE(phi_kernel_check(q_product_tensor(TensorFormat({4}, {2}))));
  const TensorFormat b4({4}, {1});
  EXPECT_FALSE(phi_kernel_check(from_poly(b4, var(b4, 0).pow(4))));
  EXPECT_TRUE(phi_kernel_check(q_product_tensor(TensorFormat({2, 2}, {1, 1}))));
}

TEST(TensorProperty, MinorsMatchContractions) {
  testing::Rng rng(21);
  for (const auto& f : {TensorFormat({3}, {2}), TensorFormat({2, 1}, {1, 2}),
                        TensorFormat({1, 2, 1}, {1, 1, 1})}) {
    const auto t = random_rational_tensor(f, rng.next());
    const auto s = build_singular_section(t);
    BlockPoint p;
    for (int l = 0; l < f.k(); ++l) {
      Eigen::VectorXcd v(f.dims[l] + 1);
      for (auto& z : v) z = Complex(rng.unit() - 0.5, rng.unit() - 0.5);
      p.push_back(v);
    }
    const auto flat = flatten_point(p);
    for (int l = 0; l < f.k(); ++l) {
      const Eigen::VectorXcd F = contract(t, l, p);
      for (const auto& minor : s.minors[l]) {
        const Complex direct = minor.poly.evaluate(flat);
        const Complex via = static_cast<double>(f.degrees[l]) *
                            (F[minor.a] * p[l][minor.b] - F[minor.b] * p[l][minor.a]);
        EXPECT_LE(std::abs(direct - via), 1e-10 * std::max(1.0, std::abs(direct)));
      }
    }
  }
}

TEST(TensorProperty, ScaledQProductsAreInKernel) {
  testing::Rng rng(22);
  for (int d1 : {2, 4})
    for (int d2 : {2, 4})
      for (int m1 = 1; m1 <= 3; ++m1)
        for (int m2 = 1; m2 <= 3; ++m2) {
          if (d1 + d2 > 8 || m1 + m2 > 4) continue;
          const TensorFormat f({d1, d2}, {m1, m2});
          const Rational c(rng.uniform(-9, 9) | 1, rng.uniform(1, 5));
          const auto q = q_product_tensor(f);
          EXPECT_TRUE(phi_kernel_check(q.scaled(c))) << f.to_string();
        }
  for (int d : {2, 4, 6, 8})
    for (int m = 1; m <= 3; ++m)
      EXPECT_TRUE(phi_kernel_check(q_product_tensor(TensorFormat({d}, {m})).scaled(Rational(-3, 7))));
}

TEST(TensorProperty, AddingQProductLeavesSectionUnchanged) {
  testing::Rng rng(23);
  for (const auto& f : {TensorFormat({4}, {2}), TensorFormat({2, 2}, {1, 2})}) {
    const auto t = random_rational_tensor(f, rng.next());
    const auto shifted = t + q_product_tensor(f).scaled(Rational(5, 3));
    const auto a = build_singular_section(t);
    const auto b = build_singular_section(shifted);
    for (int l = 0; l < f.k(); ++l)
      for (std::size_t i = 0; i < a.minors[l].size(); ++i)
        EXPECT_EQ(a.minors[l][i].poly, b.minors[l][i].poly);
  }
}

TEST(TensorProperty, RandomOddTensorsAreNotInKernel) {
  testing::Rng rng(24);
  const std::vector<TensorFormat> formats = {TensorFormat({3}, {1}), TensorFormat({3}, {2}),
                                             TensorFormat({1, 2}, {1, 1}),
                                             TensorFormat({5}, {1})};
  for (int i = 0; i < 24; ++i) {
    const auto t = random_rational_tensor(formats[i % formats.size()], rng.next());
    EXPECT_FALSE(phi_kernel_check(t));
  }
}

TEST(TensorIoTest, RoundTripExact) {
  const TensorFormat f({2, 1}, {1, 2});
  const auto t = random_rational_tensor(f, 99);
  const AnyTensor back = tensor_from_json(nlohmann::json::parse(tensor_to_json(t).dump()));
  ASSERT_TRUE(std::holds_alternative<RationalTensor>(back));
  EXPECT_EQ(std::get<RationalTensor>(back), t);
}

TEST(TensorIoTest, ComplexCoefficients) {
  const auto j = nlohmann::json::parse(R"({"degrees":[2],"dims":[1],"terms":[
      {"exponents":[[2,0]],"coeff":[1.5,-2]},
      {"exponents":[[0,2]],"coeff":"1/2"}]})");
  const AnyTensor t = tensor_from_json(j);
  ASSERT_TRUE(std::holds_alternative<ComplexTensor>(t));
  const auto& c = std::get<ComplexTensor>(t);
  EXPECT_EQ(c.polynomial().coefficient_of({2, 0}), Complex(1.5, -2));
  EXPECT_EQ(c.polynomial().coefficient_of({0, 2}), Complex(0.5));
}

TEST(TensorIoTest, RejectsBadInput) {
  using nlohmann::json;
  EXPECT_THROW(tensor_from_json(json::parse(R"({"degrees":[2],"dims":[1]})")),
               std::invalid_argument);
  EXPECT_THROW(tensor_from_json(json::parse(
                   R"({"degrees":[2],"dims":[1],"terms":[{"exponents":[[1,0]],"coeff":"1"}]})")),
               std::invalid_argument);
  EXPECT_THROW(tensor_from_json(json::parse(
                   R"({"degrees":[2],"dims":[1],"terms":[{"exponents":[[2,0]],"coeff":"1/0"}]})")),
               std::invalid_argument);
  EXPECT_THROW(read_json_file("/nonexistent/tensor.json"), std::runtime_error);
}

}  // namespace
}  // namespace singtuple
