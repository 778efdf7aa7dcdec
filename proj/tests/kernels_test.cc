// Scalar reference kernels against the AVX2 variants.

#include "singtuple/kernels.h"

#include <cmath>
#include <cstdlib>
#include <vector>

#include <gtest/gtest.h>

#include "singtuple/compiled_system.h"
#include "singtuple/eigensolver.h"
#include "singtuple/tensor.h"
#include "test_util.h"

namespace singtuple {
namespace {

using kernels::ComplexMatrixView;
using kernels::KernelTable;

std::vector<double> random_vector(testing::Rng& rng, std::size_t n) {
  std::vector<double> v(n);
  for (auto& x : v) x = 2.0 * rng.unit() - 1.0;
  return v;
}

TEST(KernelsTest, ScalarMatvecIsCorrect) {
  // [[1+i, 2], [0, -i]] * [1, i] = [1+3i, 1]
  const double re[] = {1, 2, 0, 0}, im[] = {1, 0, 0, -1};
  const double xr[] = {1, 0}, xi[] = {0, 1};
  double yr[2], yi[2];
  kernels::scalar_kernels().matvec({re, im, 2, 2}, xr, xi, yr, yi);
  EXPECT_EQ(yr[0], 1);
  EXPECT_EQ(yi[0], 3);
  EXPECT_EQ(yr[1], 1);
  EXPECT_EQ(yi[1], 0);
  const double mr[] = {3, 0}, mi[] = {4, -1};
  EXPECT_EQ(kernels::scalar_kernels().max_abs(mr, mi, 2), 5.0);
  EXPECT_EQ(kernels::scalar_kernels().max_abs(mr, mi, 0), 0.0);
}

TEST(KernelsTest, Avx2MatchesScalar) {
  const KernelTable* avx = kernels::avx2_kernels();
  if (!avx) GTEST_SKIP() << "no AVX2 on this machine";
  testing::Rng rng(31);
  // Widths around the 4-lane boundary exercise the scalar tail.
  for (std::size_t rows : {1u, 3u, 8u, 17u}) {
    for (std::size_t cols : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 31u, 64u, 129u}) {
      const auto re = random_vector(rng, rows * cols), im = random_vector(rng, rows * cols);
      const auto xr = random_vector(rng, cols), xi = random_vector(rng, cols);
      std::vector<double> sr(rows), si(rows), vr(rows), vi(rows);
      const ComplexMatrixView a{re.data(), im.data(), rows, cols};
      kernels::scalar_kernels().matvec(a, xr.data(), xi.data(), sr.data(), si.data());
      avx->matvec(a, xr.data(), xi.data(), vr.data(), vi.data());
      for (std::size_t r = 0; r < rows; ++r) {
        const double scale = static_cast<double>(cols);
        EXPECT_NEAR(sr[r], vr[r], 1e-14 * scale) << rows << 'x' << cols;
        EXPECT_NEAR(si[r], vi[r], 1e-14 * scale) << rows << 'x' << cols;
      }
      const auto n = rows * cols;
      EXPECT_DOUBLE_EQ(kernels::scalar_kernels().max_abs(re.data(), im.data(), n),
                       avx->max_abs(re.data(), im.data(), n));
    }
  }
}

TEST(KernelsTest, Avx2MaxAbsFindsTailMaximum) {
  const KernelTable* avx = kernels::avx2_kernels();
  if (!avx) GTEST_SKIP() << "no AVX2 on this machine";
  for (std::size_t n = 1; n <= 11; ++n) {
    std::vector<double> re(n, 0.5), im(n, 0.0);
    re[n - 1] = -7.0;
    im[n - 1] = 24.0;
    EXPECT_EQ(avx->max_abs(re.data(), im.data(), n), 25.0) << n;
  }
}

TEST(KernelsTest, ActiveTableIsBestSupported) {
  if (std::getenv("SINGTUPLE_ISA")) GTEST_SKIP() << "ISA forced from the environment";
  const KernelTable& active = kernels::active_kernels();
  if (kernels::avx2_kernels()) EXPECT_EQ(active.isa, kernels::Isa::kAvx2);
  else EXPECT_EQ(active.isa, kernels::Isa::kScalar);
  EXPECT_EQ(kernels::isa_name(kernels::Isa::kScalar), "scalar");
}

TEST(CompiledSystemTest, MatchesDirectEvaluationOnBothKernels) {
  testing::Rng rng(32);
  const TensorFormat f({3, 2}, {2, 1});
  const auto t = to_complex(random_rational_tensor(f, 5));
  const auto section = build_singular_section(t);
  std::vector<ComplexPolynomial> polys;
  for (const auto& slot : section.minors)
    for (const auto& m : slot) polys.push_back(m.poly);
  const CompiledPolynomials compiled(polys);
  EXPECT_EQ(compiled.num_polys(), polys.size());
  std::vector<Complex> z(f.layout().num_vars());
  for (auto& v : z) v = Complex(rng.unit() - 0.5, rng.unit() - 0.5);
  std::vector<Complex> out(polys.size());
  CompiledPolynomials::Workspace ws;
  std::vector<const KernelTable*> tables = {&kernels::scalar_kernels()};
  if (kernels::avx2_kernels()) tables.push_back(kernels::avx2_kernels());
  for (const KernelTable* table : tables) {
    compiled.evaluate(z, out, ws, *table);
    for (std::size_t i = 0; i < polys.size(); ++i) {
      const Complex direct = polys[i].evaluate(z);
      EXPECT_LE(std::abs(out[i] - direct), 1e-12 * std::max(1.0, std::abs(direct)));
    }
  }
}

TEST(CompiledSystemTest, SolverAgreesAcrossKernels) {
  const TensorFormat f({1, 1, 1}, {1, 1, 1});
  const auto t = random_complex_tensor(f, 77);
  SolveConfig cfg;
  cfg.seed = 4;
  cfg.kernels = &kernels::scalar_kernels();
  const SolveResult scalar = solve_singular_tuples(t, cfg);
  cfg.kernels = nullptr;
  const SolveResult best = solve_singular_tuples(t, cfg);
  ASSERT_TRUE(scalar.complete);
  ASSERT_TRUE(best.complete);
  EXPECT_TRUE(same_point_sets(scalar.tuples, best.tuples, 1e-8));
}

}  // namespace
}  // namespace singtuple
