#include <cmath>

#include "singtuple/kernels.h"

namespace singtuple::kernels::detail {

void matvec_scalar(const ComplexMatrixView& a, const double* x_re,
                   const double* x_im, double* y_re, double* y_im) {
  for (std::size_t i = 0; i < a.rows; ++i) {
    const double* row_re = a.re + i * a.cols;
    const double* row_im = a.im + i * a.cols;
    double acc_re = 0.0;
    double acc_im = 0.0;
    for (std::size_t j = 0; j < a.cols; ++j) {
      acc_re += row_re[j] * x_re[j] - row_im[j] * x_im[j];
      acc_im += row_re[j] * x_im[j] + row_im[j] * x_re[j];
    }
    y_re[i] = acc_re;
    y_im[i] = acc_im;
  }
}

double max_abs_scalar(const double* re, const double* im, std::size_t n) {
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    best = std::fmax(best, re[i] * re[i] + im[i] * im[i]);
  return std::sqrt(best);
}

}  // namespace singtuple::kernels::detail
