#include "singtuple/rational_linalg.h"

#include <stdexcept>
#include <utility>

namespace singtuple {

namespace {

// Reduces [a | b] to row echelon form in place; returns pivot columns.
std::vector<std::size_t> eliminate(RationalMatrix& a, std::vector<Rational>* b) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && sgn(a(pivot, col)) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(pivot, c), a(row, c));
      if (b) std::swap((*b)[pivot], (*b)[row]);
    }
    const Rational inv = 1 / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    if (b) (*b)[row] *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || sgn(a(r, col)) == 0) continue;
      const Rational factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= factor * a(row, c);
      if (b) (*b)[r] -= factor * (*b)[row];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(RationalMatrix a) { return eliminate(a, nullptr).size(); }

std::vector<Rational> solve_unique(RationalMatrix a, std::vector<Rational> b) {
  if (b.size() != a.rows()) throw std::invalid_argument("rhs has wrong length");
  const auto pivots = eliminate(a, &b);
  for (std::size_t r = pivots.size(); r < a.rows(); ++r)
    if (sgn(b[r]) != 0) throw std::domain_error("linear system is inconsistent");
  if (pivots.size() != a.cols())
    throw std::domain_error("linear system has no unique solution");
  std::vector<Rational> x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = b[r];
  return x;
}

}  // namespace singtuple
