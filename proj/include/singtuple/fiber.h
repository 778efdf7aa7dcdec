// Tensors sharing a singular-tuple locus.
//
// Every minor is linear in the tensor, so "T has these singular tuples" is a
// homogeneous linear system in the coefficients of T.  The fiber of the
// eigenscheme map through T is the projectivized kernel of that system.

#ifndef SINGTUPLE_FIBER_H_
#define SINGTUPLE_FIBER_H_

#include <vector>

#include <Eigen/Core>

#include "singtuple/eigensolver.h"
#include "singtuple/tensor.h"

namespace singtuple {

struct QMembership {
  bool computed = false;  // only for all-even formats
  bool claimed = false;
  double residual = 0.0;  // relative projection residual
};

struct FiberReport {
  TensorFormat format;
  int num_points = 0;
  int rows = 0;
  int cols = 0;
  std::vector<double> singular_values;  // descending
  int numerical_rank = 0;
  double gap_ratio = 0.0;  // +inf when the rank is structural (rows < cols)
  bool rank_ambiguous = false;
  std::vector<ComplexTensor> kernel_basis;
  Eigen::MatrixXcd kernel;  // orthonormal columns, same span as kernel_basis
  QMembership q_membership;

  int kernel_dimension() const { return cols - numerical_rank; }
};

inline constexpr double kRankRelTol = 1e-8;
inline constexpr double kGapThreshold = 1e4;
inline constexpr double kMembershipTol = 1e-6;

/// One row per (tuple, slot l, non-chart coordinate a): the functional
/// T -> F_{l,a}(z) z_{l,c} - F_{l,c}(z) z_{l,a}, c the tuple's chart in block
/// l; columns follow monomial_basis(format).
Eigen::MatrixXcd conditions_matrix(const TensorFormat& format,
                                   const std::vector<SingularTuple>& tuples);

FiberReport fiber_dimension(const TensorFormat& format,
                            const std::vector<SingularTuple>& tuples);

/// ||c - P c|| / ||c|| for P the orthogonal projector onto the kernel span.
double kernel_projection_residual(const FiberReport& report,
                                  const Eigen::VectorXcd& coefficients);

/// prod binom(d_l + m_l, m_l) - 1 if some d_l is odd, else - 2.  Throws
/// std::domain_error naming the excluded clause when the fiber theorems do
/// not apply.
BigInt image_dimension(const TensorFormat& format);

}  // namespace singtuple

#endif  // SINGTUPLE_FIBER_H_
