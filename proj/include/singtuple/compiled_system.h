// A family of complex polynomials flattened for repeated evaluation.
//
// All polynomials share one monomial list; evaluation computes the monomial
// values once from a power table and then applies the dense coefficient
// matrix with the active matvec kernel.

#ifndef SINGTUPLE_COMPILED_SYSTEM_H_
#define SINGTUPLE_COMPILED_SYSTEM_H_

#include <span>
#include <vector>

#include "singtuple/kernels.h"
#include "singtuple/polynomial.h"

namespace singtuple {

class CompiledPolynomials {
 public:
  struct Workspace {
    std::vector<Complex> powers;
    std::vector<double> mono_re, mono_im, out_re, out_im;
  };

  CompiledPolynomials() = default;
  explicit CompiledPolynomials(const std::vector<ComplexPolynomial>& polys);

  std::size_t num_polys() const { return num_polys_; }
  std::size_t num_monomials() const { return monomials_.size(); }
  int num_vars() const { return num_vars_; }

  void evaluate(std::span<const Complex> point, std::span<Complex> out,
                Workspace& ws,
                const kernels::KernelTable& k = kernels::active_kernels()) const;

 private:
  int num_vars_ = 0;
  std::size_t num_polys_ = 0;
  int max_power_ = 0;
  std::vector<Exponent> monomials_;
  std::vector<double> coeff_re_, coeff_im_;  // num_polys x num_monomials
};

}  // namespace singtuple

#endif  // SINGTUPLE_COMPILED_SYSTEM_H_
