// Harmonic decomposition of forms on a single block of variables.
//
// Every form f of degree d in m + 1 variables is uniquely
// f = sum_j q^j h_j with q = x0^2 + ... + xm^2 and each h_j harmonic of
// degree d - 2j.

#ifndef SINGTUPLE_HARMONIC_H_
#define SINGTUPLE_HARMONIC_H_

#include <optional>
#include <utility>
#include <vector>

#include "singtuple/polynomial.h"

namespace singtuple {

struct HarmonicDecomposition {
  int degree = 0;
  int num_vars = 0;
  // (j, h_j), increasing j; components that vanish are omitted.
  std::vector<std::pair<int, RationalPolynomial>> components;

  /// sum_j q^j h_j
  RationalPolynomial reconstruct() const;
};

/// Sum of the unmixed second partials.  Throws std::invalid_argument for a
/// polynomial with more than one block.
RationalPolynomial laplacian(const RationalPolynomial& f);

/// Throws std::invalid_argument unless f is a single-block form of degree d
/// (the zero polynomial is accepted for any d >= 0).
HarmonicDecomposition harmonic_decompose(const RationalPolynomial& f, int d);

/// Coefficient of q^(d/2) in the decomposition; nullopt for odd d.
std::optional<Rational> kernel_component(const RationalPolynomial& f, int d);

/// Dimension of the degree-d harmonics in m + 1 variables, computed as
/// #monomials minus the rank of the Laplacian on degree-d forms.
long harmonic_dimension(int d, int m);

/// binom(d+m, m) - binom(d-2+m, m) (the second term is 0 for d < 2).
BigInt harmonic_dimension_formula(int d, int m);

}  // namespace singtuple

#endif  // SINGTUPLE_HARMONIC_H_
