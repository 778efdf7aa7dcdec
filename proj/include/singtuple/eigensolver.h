// Numerical singular tuples of small multisymmetric tensors.
//
// solve_singular_tuples runs seeded random-restart Newton on a square
// subsystem of the minor equations, one affine chart per block, and stops
// once the number of distinct tuples reaches the expected count for the
// format.  binary_eigenvectors handles k = 1, m = 1 directly by factoring the
// single minor, with exact multiplicities for rational input.

#ifndef SINGTUPLE_EIGENSOLVER_H_
#define SINGTUPLE_EIGENSOLVER_H_

#include <cstdint>
#include <vector>

#include "singtuple/kernels.h"
#include "singtuple/polynomial.h"
#include "singtuple/tensor.h"

namespace singtuple {

struct SingularTuple {
  BlockPoint points;        // block l has m_l + 1 coordinates
  std::vector<int> charts;  // per block, the coordinate normalized to 1
  double residual = 0.0;

  /// Scales each block so its largest-modulus coordinate (lowest index on
  /// ties) equals 1.  Throws if some block is zero.
  static SingularTuple normalized(BlockPoint raw);
};

/// Max over blocks of the sine of the Hermitian angle between the two
/// representatives.
double projective_distance(const BlockPoint& a, const BlockPoint& b);

/// True when every point of `a` has a partner in `b` within `tol` and the
/// sets have equal size.
bool same_point_sets(const std::vector<SingularTuple>& a,
                     const std::vector<SingularTuple>& b, double tol);

struct SolveConfig {
  std::uint64_t seed = 0;
  int max_restarts = 0;  // 0 selects 200 x target count
  int newton_iters = 50;
  double residual_tol = 1e-10;
  double dedup_tol = 1e-6;
  int threads = 1;
  int batch_size = 32;
  const kernels::KernelTable* kernels = nullptr;  // nullptr: active_kernels()
};

struct SolveResult {
  std::vector<SingularTuple> tuples;
  bool complete = false;
  BigInt target;
  int restarts_used = 0;
};

SolveResult solve_singular_tuples(const ComplexTensor& t,
                                  const SolveConfig& cfg);
SolveResult solve_singular_tuples(const RationalTensor& t,
                                  const SolveConfig& cfg);

/// Max modulus of all minors of the section of `t` at the tuple.
template <typename Coeff>
double residual(const SymTensor<Coeff>& t, const SingularTuple& tuple);

struct BinaryEigenpoint {
  SingularTuple tuple;
  int multiplicity = 1;
};

/// Eigenpoints of a binary form (k = 1, m = 1).  Throws std::domain_error
/// when the minor vanishes identically (f a multiple of q^{d/2}).
std::vector<BinaryEigenpoint> binary_eigenvectors(const RationalTensor& f);
std::vector<BinaryEigenpoint> binary_eigenvectors(const ComplexTensor& f);

/// Roots of sum_i coeffs[i] z^i via companion-matrix eigenvalues, polished
/// by Newton on the same polynomial.  Leading zeros are stripped.
std::vector<Complex> companion_roots(const std::vector<Complex>& coeffs);

/// Seeded complex-Gaussian tensor over the monomial basis.
ComplexTensor random_complex_tensor(const TensorFormat& format,
                                    std::uint64_t seed);
/// Seeded real-Gaussian tensor over the monomial basis.
ComplexTensor random_real_tensor(const TensorFormat& format,
                                 std::uint64_t seed);

}  // namespace singtuple

#endif  // SINGTUPLE_EIGENSOLVER_H_
