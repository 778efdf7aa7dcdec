#include "singtuple/fiber.h"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/SVD>

namespace singtuple {

namespace {

// z^(e - unit(var)); requires e[var] >= 1.
Complex shifted_monomial(const std::vector<std::vector<Complex>>& powers,
                         const Exponent& e, int var) {
  Complex out = 1.0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    const int p = static_cast<int>(i) == var ? e[i] - 1 : e[i];
    if (p > 0) out *= powers[i][p];
  }
  return out;
}

}  // namespace

Eigen::MatrixXcd conditions_matrix(const TensorFormat& format,
                                   const std::vector<SingularTuple>& tuples) {
  if (tuples.empty()) throw std::invalid_argument("no tuples given");
  const VariableLayout layout = format.layout();
  const auto basis = monomial_basis(format);
  const int per_tuple = format.total_dim();
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(tuples.size()) * per_tuple,
                     static_cast<Eigen::Index>(basis.size()));
  int max_degree = 0;
  for (int d : format.degrees) max_degree = std::max(max_degree, d);

  Eigen::Index row = 0;
  for (const auto& tuple : tuples) {
    if (static_cast<int>(tuple.points.size()) != format.k() ||
        static_cast<int>(tuple.charts.size()) != format.k())
      throw std::invalid_argument("tuple does not match format");
    for (int l = 0; l < format.k(); ++l)
      if (tuple.points[l].size() != format.dims[l] + 1)
        throw std::invalid_argument("tuple block does not match format");
    const std::vector<Complex> z = flatten_point(tuple.points);
    std::vector<std::vector<Complex>> powers(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
      powers[i].assign(max_degree + 1, 1.0);
      for (int p = 1; p <= max_degree; ++p) powers[i][p] = powers[i][p - 1] * z[i];
    }
    for (int l = 0; l < format.k(); ++l) {
      const int off = layout.block_offset(l);
      const int c = off + tuple.charts[l];
      for (int a = off; a < off + layout.block_size(l); ++a) {
        if (a == c) continue;
        for (std::size_t j = 0; j < basis.size(); ++j) {
          const Exponent& e = basis[j];
          Complex v = 0.0;
          if (e[a] > 0) v += static_cast<double>(e[a]) * shifted_monomial(powers, e, a) * z[c];
          if (e[c] > 0) v -= static_cast<double>(e[c]) * shifted_monomial(powers, e, c) * z[a];
          m(row, static_cast<Eigen::Index>(j)) = v;
        }
        ++row;
      }
    }
  }
  return m;
}

FiberReport fiber_dimension(const TensorFormat& format,
                            const std::vector<SingularTuple>& tuples) {
  FiberReport report;
  report.format = format;
  report.num_points = static_cast<int>(tuples.size());
  const Eigen::MatrixXcd m = conditions_matrix(format, tuples);
  report.rows = static_cast<int>(m.rows());
  report.cols = static_cast<int>(m.cols());

  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullV);
  const Eigen::VectorXd& sigma = svd.singularValues();
  report.singular_values.assign(sigma.begin(), sigma.end());
  const double top = sigma.size() > 0 ? sigma[0] : 0.0;
  int rank = 0;
  while (rank < sigma.size() && sigma[rank] > kRankRelTol * top) ++rank;
  report.numerical_rank = rank;
  if (rank == 0) {
    report.gap_ratio = 0.0;
  } else if (rank < sigma.size()) {
    report.gap_ratio = sigma[rank] > 0.0 ? sigma[rank - 1] / sigma[rank]
                                         : std::numeric_limits<double>::infinity();
  } else {
    report.gap_ratio = std::numeric_limits<double>::infinity();
  }
  report.rank_ambiguous = !(report.gap_ratio >= kGapThreshold);

  report.kernel = svd.matrixV().rightCols(report.cols - rank);
  for (Eigen::Index j = 0; j < report.kernel.cols(); ++j)
    report.kernel_basis.push_back(tensor_from_vector(format, report.kernel.col(j)));

  if (format.all_degrees_even()) {
    const Eigen::VectorXcd q = q_product_tensor(format).coefficient_vector();
    report.q_membership.computed = true;
    report.q_membership.residual = kernel_projection_residual(report, q);
    report.q_membership.claimed = report.q_membership.residual < kMembershipTol;
  }
  return report;
}

double kernel_projection_residual(const FiberReport& report,
                                  const Eigen::VectorXcd& coefficients) {
  const double norm = coefficients.norm();
  if (norm == 0.0) return 0.0;
  if (report.kernel.cols() == 0) return 1.0;
  const Eigen::VectorXcd proj =
      report.kernel * (report.kernel.adjoint() * coefficients);
  return (coefficients - proj).norm() / norm;
}

BigInt image_dimension(const TensorFormat& format) {
  const FormatReport check = validate_format(format);
  if (!check.theorem_applicable)
    throw std::domain_error("image dimension formula does not apply: " +
                            check.excluded_case.value_or("unknown clause"));
  return format.ambient_dimension() - (format.all_degrees_even() ? 2 : 1);
}

}  // namespace singtuple
