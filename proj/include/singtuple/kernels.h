// Dense complex kernels behind the numeric solver path.
//
// Matrices and vectors use split storage (separate real and imaginary
// arrays) so the SIMD variants can load four lanes of each directly.  Every
// kernel has a scalar reference implementation; SIMD variants are chosen at
// runtime from the detected ISA and must agree with the reference up to
// floating-point reassociation.

#ifndef SINGTUPLE_KERNELS_H_
#define SINGTUPLE_KERNELS_H_

#include <cstddef>
#include <string_view>

namespace singtuple::kernels {

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

// Row-major rows x cols matrix in split storage.
struct ComplexMatrixView {
  const double* re = nullptr;
  const double* im = nullptr;
  std::size_t rows = 0;
  std::size_t cols = 0;
};

// y = A x
using MatvecFn = void (*)(const ComplexMatrixView& a, const double* x_re,
                          const double* x_im, double* y_re, double* y_im);
// max_i |z_i|; 0 for n == 0
using MaxAbsFn = double (*)(const double* re, const double* im, std::size_t n);

struct KernelTable {
  Isa isa;
  MatvecFn matvec;
  MaxAbsFn max_abs;
};

const KernelTable& scalar_kernels();

/// The AVX2 table, or nullptr when the CPU or the build lacks AVX2/FMA.
const KernelTable* avx2_kernels();

/// Best supported table.  SINGTUPLE_ISA=scalar in the environment forces the
/// reference kernels.
const KernelTable& active_kernels();

namespace detail {
void matvec_scalar(const ComplexMatrixView& a, const double* x_re,
                   const double* x_im, double* y_re, double* y_im);
double max_abs_scalar(const double* re, const double* im, std::size_t n);
#if defined(__x86_64__) || defined(__i386__)
void matvec_avx2(const ComplexMatrixView& a, const double* x_re,
                 const double* x_im, double* y_re, double* y_im);
double max_abs_avx2(const double* re, const double* im, std::size_t n);
#endif
}  // namespace detail

}  // namespace singtuple::kernels

#endif  // SINGTUPLE_KERNELS_H_
