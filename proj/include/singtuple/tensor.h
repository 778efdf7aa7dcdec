// Multisymmetric tensors in Sym^{d_1} V_1 (x) ... (x) Sym^{d_k} V_k.
//
// A tensor is stored as its joint polynomial in the monomial basis: block l
// holds the m_l + 1 coordinates of V_l and every term has block degree d_l.
// The symmetric pairing used by the flattenings is realized through
// differentiation, so no divided-power bookkeeping is needed.

#ifndef SINGTUPLE_TENSOR_H_
#define SINGTUPLE_TENSOR_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "singtuple/polynomial.h"

namespace singtuple {

struct TensorFormat {
  std::vector<int> degrees;  // d_1 ... d_k, each >= 1
  std::vector<int> dims;     // m_1 ... m_k, each >= 1

  TensorFormat() = default;
  TensorFormat(std::vector<int> d, std::vector<int> m);

  int k() const { return static_cast<int>(degrees.size()); }
  int total_dim() const;  // sum of m_l
  bool all_degrees_even() const;
  VariableLayout layout() const;
  BigInt ambient_dimension() const;  // prod binom(d_l + m_l, m_l)
  std::string to_string() const;     // "(k;d1,..;m1,..)"

  bool operator==(const TensorFormat&) const = default;
};

struct FormatReport {
  bool triangle_ok = false;
  bool theorem_applicable = false;
  std::optional<std::string> excluded_case;
};

/// Checks the hypotheses of the fiber theorems: the triangle inequality on
/// degree-one slots, k = 2 excluding the matrix case, and d >= 3 for k = 1.
FormatReport validate_format(const TensorFormat& format);

/// Exponent vectors of degree `degree` in `num_vars` variables, in
/// descending lexicographic order.
std::vector<Exponent> homogeneous_exponents(int num_vars, int degree);

/// Joint exponent vectors spanning the tensor space: the product of the
/// per-block bases, block 0 varying slowest.
std::vector<Exponent> monomial_basis(const TensorFormat& format);

// A point of P^{m_1} x ... x P^{m_k}: one affine representative per block.
using BlockPoint = std::vector<Eigen::VectorXcd>;

std::vector<Complex> flatten_point(const BlockPoint& point);

template <typename Coeff>
class SymTensor {
 public:
  SymTensor() = default;
  explicit SymTensor(TensorFormat format)
      : format_(std::move(format)), poly_(format_.layout()) {}
  /// Throws unless `poly` is multihomogeneous of multidegree (d_1..d_k).
  SymTensor(TensorFormat format, Polynomial<Coeff> poly);

  const TensorFormat& format() const { return format_; }
  const Polynomial<Coeff>& polynomial() const { return poly_; }

  /// Coefficient of the monomial given by one exponent vector per block.
  Coeff coefficient(const std::vector<Exponent>& block_exponents) const;
  void add_coefficient(const std::vector<Exponent>& block_exponents,
                       const Coeff& c);

  /// Coefficients listed against monomial_basis(format()).
  Eigen::VectorXcd coefficient_vector() const;

  SymTensor operator+(const SymTensor& r) const {
    return SymTensor(format_, poly_ + r.poly_);
  }
  SymTensor scaled(const Coeff& c) const {
    return SymTensor(format_, poly_.scaled(c));
  }

  bool operator==(const SymTensor& r) const {
    return format_ == r.format_ && poly_ == r.poly_;
  }

 private:
  TensorFormat format_;
  Polynomial<Coeff> poly_;
};

using RationalTensor = SymTensor<Rational>;
using ComplexTensor = SymTensor<Complex>;

ComplexTensor to_complex(const RationalTensor& t);
inline const ComplexTensor& to_complex(const ComplexTensor& t) { return t; }

/// Builds a tensor from a coefficient vector over monomial_basis(format).
ComplexTensor tensor_from_vector(const TensorFormat& format,
                                 const Eigen::VectorXcd& coefficients);

// The section s_T: per slot the block gradient F_l and its 2x2 minors
// F_{l,a} x_{l,b} - F_{l,b} x_{l,a} for a < b.
template <typename Coeff>
struct SingularSection {
  struct Minor {
    int a = 0;
    int b = 0;
    Polynomial<Coeff> poly;
  };

  TensorFormat format;
  std::vector<std::vector<Polynomial<Coeff>>> gradients;  // [slot][coord]
  std::vector<std::vector<Minor>> minors;                 // [slot][pair]
};

/// T_l(v_1^{d_1} (x) .. v_l^{d_l - 1} .. (x) v_k^{d_k}), i.e. the block-l
/// gradient of T at the point divided by d_l.
template <typename Coeff>
Eigen::VectorXcd contract(const SymTensor<Coeff>& t, int slot,
                          const BlockPoint& point);

template <typename Coeff>
SingularSection<Coeff> build_singular_section(const SymTensor<Coeff>& t);

/// Seeded tensor with integer coefficients in [-bound, bound] over the
/// monomial basis; roughly `density` of the coefficients are non-zero.
RationalTensor random_rational_tensor(const TensorFormat& format,
                                      std::uint64_t seed, int bound = 9,
                                      double density = 1.0);

/// q_1^{d_1/2} (x) ... (x) q_k^{d_k/2}; throws when some degree is odd.
RationalTensor q_product_tensor(const TensorFormat& format);

/// True iff every minor of the section of `t` vanishes identically.
bool phi_kernel_check(const RationalTensor& t);

}  // namespace singtuple

#endif  // SINGTUPLE_TENSOR_H_
