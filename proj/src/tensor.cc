#include "singtuple/tensor.h"

#include <random>
#include <sstream>
#include <stdexcept>

namespace singtuple {

TensorFormat::TensorFormat(std::vector<int> d, std::vector<int> m)
    : degrees(std::move(d)), dims(std::move(m)) {
  if (degrees.empty()) throw std::invalid_argument("format needs k >= 1");
  if (degrees.size() != dims.size())
    throw std::invalid_argument("degrees and dims differ in length");
  for (int d_l : degrees)
    if (d_l < 1) throw std::invalid_argument("degrees must be >= 1");
  for (int m_l : dims)
    if (m_l < 1) throw std::invalid_argument("dims must be >= 1");
}

int TensorFormat::total_dim() const {
  int total = 0;
  for (int m_l : dims) total += m_l;
  return total;
}

bool TensorFormat::all_degrees_even() const {
  for (int d_l : degrees)
    if (d_l % 2 != 0) return false;
  return true;
}

VariableLayout TensorFormat::layout() const {
  std::vector<int> sizes;
  for (int m_l : dims) sizes.push_back(m_l + 1);
  return VariableLayout(std::move(sizes));
}

BigInt TensorFormat::ambient_dimension() const {
  BigInt out = 1;
  for (int l = 0; l < k(); ++l) {
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), degrees[l] + dims[l], dims[l]);
    out *= b;
  }
  return out;
}

std::string TensorFormat::to_string() const {
  std::ostringstream os;
  os << '(' << k() << ';';
  for (int l = 0; l < k(); ++l) os << (l ? "," : "") << degrees[l];
  os << ';';
  for (int l = 0; l < k(); ++l) os << (l ? "," : "") << dims[l];
  os << ')';
  return os.str();
}

FormatReport validate_format(const TensorFormat& format) {
  FormatReport report;
  report.triangle_ok = true;
  const int total = format.total_dim();
  for (int l = 0; l < format.k(); ++l) {
    if (format.degrees[l] == 1 && format.dims[l] > total - format.dims[l]) {
      report.triangle_ok = false;
      report.excluded_case =
          "triangle inequality fails at slot " + std::to_string(l);
      break;
    }
  }
  if (!report.triangle_ok) return report;

  if (format.k() == 2 && format.degrees[0] == 1 && format.degrees[1] == 1) {
    report.excluded_case = "(1,1) matrix case";
  } else if (format.k() == 1 && format.degrees[0] < 3) {
    report.excluded_case = "symmetric degree below 3";
  } else {
    report.theorem_applicable = true;
  }
  return report;
}

std::vector<Exponent> homogeneous_exponents(int num_vars, int degree) {
  std::vector<Exponent> out;
  Exponent e(num_vars, 0);
  // Fill position i with every admissible value, largest first.
  auto rec = [&](auto&& self, int i, int remaining) -> void {
    if (i == num_vars - 1) {
      e[i] = remaining;
      out.push_back(e);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      e[i] = v;
      self(self, i + 1, remaining - v);
    }
  };
  rec(rec, 0, degree);
  return out;
}

std::vector<Exponent> monomial_basis(const TensorFormat& format) {
  const VariableLayout layout = format.layout();
  std::vector<Exponent> out{Exponent(layout.num_vars(), 0)};
  for (int l = 0; l < format.k(); ++l) {
    const auto block = homogeneous_exponents(format.dims[l] + 1, format.degrees[l]);
    std::vector<Exponent> next;
    next.reserve(out.size() * block.size());
    for (const Exponent& prefix : out) {
      for (const Exponent& be : block) {
        Exponent e = prefix;
        for (std::size_t i = 0; i < be.size(); ++i)
          e[layout.block_offset(l) + i] = be[i];
        next.push_back(std::move(e));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<Complex> flatten_point(const BlockPoint& point) {
  std::vector<Complex> out;
  for (const auto& block : point)
    for (Eigen::Index i = 0; i < block.size(); ++i) out.push_back(block[i]);
  return out;
}

namespace {

Exponent join_blocks(const TensorFormat& format,
                     const std::vector<Exponent>& blocks) {
  if (static_cast<int>(blocks.size()) != format.k())
    throw std::invalid_argument("expected one exponent vector per block");
  Exponent e;
  for (int l = 0; l < format.k(); ++l) {
    const Exponent& b = blocks[l];
    if (static_cast<int>(b.size()) != format.dims[l] + 1)
      throw std::invalid_argument("block exponent has wrong length");
    int deg = 0;
    for (int v : b) deg += v;
    if (deg != format.degrees[l])
      throw std::invalid_argument("block exponent has wrong degree");
    e.insert(e.end(), b.begin(), b.end());
  }
  return e;
}

void check_point(const TensorFormat& format, const BlockPoint& point) {
  if (static_cast<int>(point.size()) != format.k())
    throw std::invalid_argument("point has wrong number of blocks");
  for (int l = 0; l < format.k(); ++l)
    if (point[l].size() != format.dims[l] + 1)
      throw std::invalid_argument("point block has wrong dimension");
}

}  // namespace

template <typename Coeff>
SymTensor<Coeff>::SymTensor(TensorFormat format, Polynomial<Coeff> poly)
    : format_(std::move(format)), poly_(std::move(poly)) {
  if (!(poly_.layout() == format_.layout()))
    throw std::invalid_argument("tensor polynomial has the wrong layout");
  for (const auto& [e, c] : poly_.terms())
    if (poly_.block_degrees(e) != format_.degrees)
      throw std::invalid_argument("tensor polynomial is not multihomogeneous");
}

template <typename Coeff>
Coeff SymTensor<Coeff>::coefficient(
    const std::vector<Exponent>& block_exponents) const {
  return poly_.coefficient_of(join_blocks(format_, block_exponents));
}

template <typename Coeff>
void SymTensor<Coeff>::add_coefficient(
    const std::vector<Exponent>& block_exponents, const Coeff& c) {
  poly_.add_term(join_blocks(format_, block_exponents), c);
}

template <typename Coeff>
Eigen::VectorXcd SymTensor<Coeff>::coefficient_vector() const {
  const auto basis = monomial_basis(format_);
  Eigen::VectorXcd v(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    v[i] = to_complex(poly_.coefficient_of(basis[i]));
  return v;
}

template class SymTensor<Rational>;
template class SymTensor<Complex>;

ComplexTensor to_complex(const RationalTensor& t) {
  return ComplexTensor(t.format(), to_complex(t.polynomial()));
}

ComplexTensor tensor_from_vector(const TensorFormat& format,
                                 const Eigen::VectorXcd& coefficients) {
  const auto basis = monomial_basis(format);
  if (static_cast<std::size_t>(coefficients.size()) != basis.size())
    throw std::invalid_argument("coefficient vector has wrong length");
  ComplexPolynomial p(format.layout());
  for (std::size_t i = 0; i < basis.size(); ++i)
    p.add_term(basis[i], coefficients[i]);
  return ComplexTensor(format, std::move(p));
}

template <typename Coeff>
Eigen::VectorXcd contract(const SymTensor<Coeff>& t, int slot,
                          const BlockPoint& point) {
  const TensorFormat& format = t.format();
  if (slot < 0 || slot >= format.k())
    throw std::out_of_range("slot out of range");
  check_point(format, point);
  const std::vector<Complex> z = flatten_point(point);
  const VariableLayout layout = format.layout();
  Eigen::VectorXcd out(format.dims[slot] + 1);
  for (int a = 0; a <= format.dims[slot]; ++a) {
    out[a] = t.polynomial()
                 .partial_derivative(layout.block_offset(slot) + a)
                 .evaluate(z) /
             static_cast<double>(format.degrees[slot]);
  }
  return out;
}

template <typename Coeff>
SingularSection<Coeff> build_singular_section(const SymTensor<Coeff>& t) {
  const TensorFormat& format = t.format();
  const VariableLayout layout = format.layout();
  SingularSection<Coeff> section;
  section.format = format;
  for (int l = 0; l < format.k(); ++l) {
    const int offset = layout.block_offset(l);
    std::vector<Polynomial<Coeff>> grad;
    for (int a = 0; a <= format.dims[l]; ++a)
      grad.push_back(t.polynomial().partial_derivative(offset + a));
    std::vector<typename SingularSection<Coeff>::Minor> minors;
    for (int a = 0; a <= format.dims[l]; ++a) {
      for (int b = a + 1; b <= format.dims[l]; ++b) {
        const auto xa = Polynomial<Coeff>::variable(layout, offset + a);
        const auto xb = Polynomial<Coeff>::variable(layout, offset + b);
        minors.push_back({a, b, grad[a] * xb - grad[b] * xa});
      }
    }
    section.gradients.push_back(std::move(grad));
    section.minors.push_back(std::move(minors));
  }
  return section;
}

template Eigen::VectorXcd contract(const RationalTensor&, int,
                                   const BlockPoint&);
template Eigen::VectorXcd contract(const ComplexTensor&, int,
                                   const BlockPoint&);
template SingularSection<Rational> build_singular_section(
    const RationalTensor&);
template SingularSection<Complex> build_singular_section(const ComplexTensor&);

RationalTensor q_product_tensor(const TensorFormat& format) {
  if (!format.all_degrees_even())
    throw std::domain_error("q-product undefined: some degree is odd");
  const VariableLayout layout = format.layout();
  RationalPolynomial p = RationalPolynomial::constant(layout, Rational(1));
  for (int l = 0; l < format.k(); ++l)
    p *= block_quadric(layout, l).pow(format.degrees[l] / 2);
  return RationalTensor(format, std::move(p));
}

RationalTensor random_rational_tensor(const TensorFormat& format,
                                      std::uint64_t seed, int bound,
                                      double density) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> value(-bound, bound);
  std::uniform_real_distribution<double> keep(0.0, 1.0);
  RationalPolynomial p(format.layout());
  for (const Exponent& e : monomial_basis(format))
    if (keep(rng) < density) p.add_term(e, Rational(value(rng)));
  return RationalTensor(format, std::move(p));
}

bool phi_kernel_check(const RationalTensor& t) {
  const auto section = build_singular_section(t);
  for (const auto& slot : section.minors)
    for (const auto& minor : slot)
      if (!minor.poly.is_zero()) return false;
  return true;
}

}  // namespace singtuple
