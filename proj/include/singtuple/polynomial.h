// Sparse multivariate polynomials over blocks of variables.
//
// A Polynomial<Coeff> is a map from exponent vectors to non-zero
// coefficients.  Variables are grouped into blocks (one block per tensor
// factor); the grouping only matters for multidegree queries, arithmetic
// treats the variables as a flat list.  Two coefficient instantiations are
// used throughout: exact rationals (GMP) and complex doubles.

#ifndef SINGTUPLE_POLYNOMIAL_H_
#define SINGTUPLE_POLYNOMIAL_H_

#include <complex>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace singtuple {

using Rational = mpq_class;
using BigInt = mpz_class;
using Complex = std::complex<double>;
using Exponent = std::vector<int>;

inline Complex to_complex(const Rational& c) { return Complex(c.get_d(), 0.0); }
inline Complex to_complex(const Complex& c) { return c; }

inline bool is_zero_coeff(const Rational& c) { return sgn(c) == 0; }
inline bool is_zero_coeff(const Complex& c) { return c == Complex(0.0, 0.0); }

// GMP arithmetic assumes reduced fractions; callers may hand us Rational(3, 3).
inline void canonicalize(Rational& c) { c.canonicalize(); }
inline void canonicalize(Complex&) {}

std::string coeff_to_string(const Rational& c);
std::string coeff_to_string(const Complex& c);

/// Parses "p/q" or "p" into a canonical rational; throws on malformed input.
Rational parse_rational(const std::string& text);

// Variable blocks.  Tensor layouts have blocks of size m_l + 1 >= 2; the
// auxiliary ring used for the singular-tuple count uses singleton blocks.
class VariableLayout {
 public:
  VariableLayout() = default;
  explicit VariableLayout(std::vector<int> block_sizes);

  static VariableLayout single_block(int num_vars) {
    return VariableLayout({num_vars});
  }

  int num_blocks() const { return static_cast<int>(block_sizes_.size()); }
  int block_size(int block) const { return block_sizes_.at(block); }
  int block_offset(int block) const { return offsets_.at(block); }
  int num_vars() const { return total_; }
  const std::vector<int>& block_sizes() const { return block_sizes_; }

  bool operator==(const VariableLayout& other) const {
    return block_sizes_ == other.block_sizes_;
  }

 private:
  std::vector<int> block_sizes_;
  std::vector<int> offsets_;
  int total_ = 0;
};

// Graded lexicographic order, highest first: larger total degree precedes,
// ties broken lexicographically with x0 > x1 > ...
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return a > b;
  }
};

template <typename Coeff>
class Polynomial {
 public:
  using Terms = std::map<Exponent, Coeff, GrlexGreater>;

  Polynomial() = default;
  explicit Polynomial(VariableLayout layout) : layout_(std::move(layout)) {}

  static Polynomial constant(const VariableLayout& layout, const Coeff& c) {
    Polynomial p(layout);
    p.add_term(Exponent(layout.num_vars(), 0), c);
    return p;
  }

  static Polynomial variable(const VariableLayout& layout, int index) {
    if (index < 0 || index >= layout.num_vars())
      throw std::out_of_range("variable index out of range");
    Exponent e(layout.num_vars(), 0);
    e[index] = 1;
    return monomial(layout, std::move(e), Coeff(1));
  }

  static Polynomial monomial(const VariableLayout& layout, Exponent e,
                             const Coeff& c) {
    Polynomial p(layout);
    p.add_term(e, c);
    return p;
  }

  const VariableLayout& layout() const { return layout_; }
  const Terms& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Accumulates c * x^e; the term is dropped if the sum cancels.
  void add_term(const Exponent& e, const Coeff& c) {
    check_exponent(e);
    if (is_zero_coeff(c)) return;
    Coeff v = c;
    canonicalize(v);
    auto [it, inserted] = terms_.try_emplace(e, v);
    if (!inserted) {
      it->second += v;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  Coeff coefficient_of(const Exponent& e) const {
    if (static_cast<int>(e.size()) != layout_.num_vars())
      throw std::invalid_argument("exponent length does not match layout");
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  /// Total degree; -1 for the zero polynomial.
  int degree() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.begin()->first);
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = degree();
    for (const auto& [e, c] : terms_)
      if (total_degree(e) != d) return false;
    return true;
  }

  // Per-block degrees, or nullopt when the polynomial is not
  // block-homogeneous.  The zero polynomial has no multidegree.
  std::optional<std::vector<int>> multidegree() const {
    if (terms_.empty()) return std::nullopt;
    const std::vector<int> first = block_degrees(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
      if (block_degrees(e) != first) return std::nullopt;
    return first;
  }

  std::vector<int> block_degrees(const Exponent& e) const {
    std::vector<int> out(layout_.num_blocks(), 0);
    for (int b = 0; b < layout_.num_blocks(); ++b)
      for (int i = 0; i < layout_.block_size(b); ++i)
        out[b] += e[layout_.block_offset(b) + i];
    return out;
  }

  Polynomial operator+(const Polynomial& r) const {
    check_layout(r);
    Polynomial out = *this;
    for (const auto& [e, c] : r.terms_) out.add_term(e, c);
    return out;
  }

  Polynomial operator-(const Polynomial& r) const {
    check_layout(r);
    Polynomial out = *this;
    for (const auto& [e, c] : r.terms_) out.add_term(e, -c);
    return out;
  }

  Polynomial operator-() const { return scaled(Coeff(-1)); }

  Polynomial operator*(const Polynomial& r) const {
    check_layout(r);
    Polynomial out(layout_);
    Exponent e(layout_.num_vars());
    for (const auto& [ea, ca] : terms_) {
      for (const auto& [eb, cb] : r.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  Polynomial& operator+=(const Polynomial& r) { return *this = *this + r; }
  Polynomial& operator-=(const Polynomial& r) { return *this = *this - r; }
  Polynomial& operator*=(const Polynomial& r) { return *this = *this * r; }

  Polynomial scaled(const Coeff& s) const {
    Polynomial out(layout_);
    if (is_zero_coeff(s)) return out;
    Coeff f = s;
    canonicalize(f);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * f);
    return out;
  }

  Polynomial pow(unsigned n) const {
    Polynomial out = constant(layout_, Coeff(1));
    Polynomial base = *this;
    while (n > 0) {
      if (n & 1u) out = out * base;
      n >>= 1u;
      if (n > 0) base = base * base;
    }
    return out;
  }

  Polynomial partial_derivative(int var) const {
    if (var < 0 || var >= layout_.num_vars())
      throw std::out_of_range("derivative variable index out of range");
    Polynomial out(layout_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponent de = e;
      --de[var];
      out.add_term(de, c * Coeff(e[var]));
    }
    return out;
  }

  Complex evaluate(std::span<const Complex> point) const {
    if (static_cast<int>(point.size()) != layout_.num_vars())
      throw std::invalid_argument("evaluation point has wrong length");
    Complex sum(0.0, 0.0);
    for (const auto& [e, c] : terms_) {
      Complex term = to_complex(c);
      for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) term *= point[i];
      sum += term;
    }
    return sum;
  }

  // Canonical text: terms in grlex order, highest first, each rendered as
  // `coeff * x{i}^{e}` with factors joined by " * " and terms by " + ".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first_term = true;
    for (const auto& [e, c] : terms_) {
      if (!first_term) os << " + ";
      first_term = false;
      os << coeff_to_string(c);
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) os << " * x" << i << '^' << e[i];
    }
    return os.str();
  }

  bool operator==(const Polynomial& r) const {
    return layout_ == r.layout_ && terms_ == r.terms_;
  }

 private:
  static int total_degree(const Exponent& e) {
    return std::accumulate(e.begin(), e.end(), 0);
  }

  void check_layout(const Polynomial& r) const {
    if (!(layout_ == r.layout_))
      throw std::invalid_argument("polynomial layouts differ");
  }

  void check_exponent(const Exponent& e) const {
    if (static_cast<int>(e.size()) != layout_.num_vars())
      throw std::invalid_argument("exponent length does not match layout");
    for (int v : e)
      if (v < 0) throw std::invalid_argument("negative exponent");
  }

  VariableLayout layout_;
  Terms terms_;
};

using RationalPolynomial = Polynomial<Rational>;
using ComplexPolynomial = Polynomial<Complex>;

ComplexPolynomial to_complex(const RationalPolynomial& p);
inline const ComplexPolynomial& to_complex(const ComplexPolynomial& p) {
  return p;
}

/// Sum of all squares of the variables of one block: x_0^2 + ... + x_m^2.
RationalPolynomial block_quadric(const VariableLayout& layout, int block);

}  // namespace singtuple

#endif  // SINGTUPLE_POLYNOMIAL_H_
