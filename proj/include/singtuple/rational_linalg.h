// Dense exact linear algebra over Q, sized for the harmonic decomposition.

#ifndef SINGTUPLE_RATIONAL_LINALG_H_
#define SINGTUPLE_RATIONAL_LINALG_H_

#include <cstddef>
#include <vector>

#include "singtuple/polynomial.h"

namespace singtuple {

class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

/// Exact rank by Gaussian elimination.
std::size_t rank(RationalMatrix a);

/// The unique x with a x = b.  Throws std::domain_error if the system is
/// inconsistent or underdetermined.
std::vector<Rational> solve_unique(RationalMatrix a, std::vector<Rational> b);

}  // namespace singtuple

#endif  // SINGTUPLE_RATIONAL_LINALG_H_
