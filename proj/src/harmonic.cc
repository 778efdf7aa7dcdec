#include "singtuple/harmonic.h"

#include <map>
#include <stdexcept>

#include "singtuple/rational_linalg.h"
#include "singtuple/tensor.h"

namespace singtuple {

namespace {

using Index = std::map<Exponent, std::size_t>;

Index index_of(const std::vector<Exponent>& basis) {
  Index out;
  for (std::size_t i = 0; i < basis.size(); ++i) out[basis[i]] = i;
  return out;
}

void check_single_block(const RationalPolynomial& f) {
  if (f.layout().num_blocks() != 1)
    throw std::invalid_argument("harmonic analysis needs a single block of variables");
}

BigInt binomial(int n, int k) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

}  // namespace

RationalPolynomial HarmonicDecomposition::reconstruct() const {
  const VariableLayout layout = VariableLayout::single_block(num_vars);
  RationalPolynomial out(layout);
  const RationalPolynomial q = block_quadric(layout, 0);
  for (const auto& [j, h] : components) out += q.pow(j) * h;
  return out;
}

RationalPolynomial laplacian(const RationalPolynomial& f) {
  check_single_block(f);
  RationalPolynomial out(f.layout());
  for (const auto& [e, c] : f.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 2) continue;
      Exponent g = e;
      g[i] -= 2;
      out.add_term(g, c * e[i] * (e[i] - 1));
    }
  }
  return out;
}

HarmonicDecomposition harmonic_decompose(const RationalPolynomial& f, int d) {
  check_single_block(f);
  if (d < 0) throw std::invalid_argument("degree must be non-negative");
  if (!f.is_homogeneous() || (!f.is_zero() && f.degree() != d))
    throw std::invalid_argument("input is not a form of the stated degree");

  const int n = f.layout().num_vars();
  const VariableLayout layout = f.layout();
  const RationalPolynomial q = block_quadric(layout, 0);

  // Unknowns: coefficients of h_j over degree-(d-2j) monomials.
  std::vector<std::vector<Exponent>> bases;
  std::vector<std::size_t> col_offset;
  std::size_t cols = 0;
  for (int j = 0; 2 * j <= d; ++j) {
    bases.push_back(homogeneous_exponents(n, d - 2 * j));
    col_offset.push_back(cols);
    cols += bases.back().size();
  }
  // Equations: reconstruction at degree d, then harmonicity of each h_j.
  const auto top = homogeneous_exponents(n, d);
  const Index top_index = index_of(top);
  std::vector<std::size_t> row_offset;
  std::vector<Index> lap_index;
  std::size_t rows = top.size();
  for (std::size_t j = 0; j < bases.size(); ++j) {
    row_offset.push_back(rows);
    const int deg = d - 2 * static_cast<int>(j) - 2;
    lap_index.push_back(deg >= 0 ? index_of(homogeneous_exponents(n, deg)) : Index{});
    rows += lap_index.back().size();
  }

  RationalMatrix a(rows, cols);
  std::vector<Rational> b(rows, Rational(0));
  for (const auto& [e, c] : f.terms()) b[top_index.at(e)] = c;

  for (std::size_t j = 0; j < bases.size(); ++j) {
    const RationalPolynomial qj = q.pow(static_cast<int>(j));
    for (std::size_t i = 0; i < bases[j].size(); ++i) {
      const std::size_t col = col_offset[j] + i;
      const auto mono = RationalPolynomial::monomial(layout, bases[j][i], Rational(1));
      const RationalPolynomial image = qj * mono;
      for (const auto& [e, c] : image.terms()) a(top_index.at(e), col) = c;
      const RationalPolynomial lap = laplacian(mono);
      for (const auto& [e, c] : lap.terms())
        a(row_offset[j] + lap_index[j].at(e), col) = c;
    }
  }

  const std::vector<Rational> x = solve_unique(std::move(a), std::move(b));
  HarmonicDecomposition out;
  out.degree = d;
  out.num_vars = n;
  for (std::size_t j = 0; j < bases.size(); ++j) {
    RationalPolynomial h(layout);
    for (std::size_t i = 0; i < bases[j].size(); ++i)
      h.add_term(bases[j][i], x[col_offset[j] + i]);
    if (!h.is_zero()) out.components.emplace_back(static_cast<int>(j), std::move(h));
  }
  return out;
}

std::optional<Rational> kernel_component(const RationalPolynomial& f, int d) {
  if (d % 2 != 0) return std::nullopt;
  const HarmonicDecomposition dec = harmonic_decompose(f, d);
  for (const auto& [j, h] : dec.components)
    if (j == d / 2) return h.coefficient_of(Exponent(dec.num_vars, 0));
  return Rational(0);
}

long harmonic_dimension(int d, int m) {
  if (d < 0 || m < 0) throw std::invalid_argument("need d, m >= 0");
  const int n = m + 1;
  const auto source = homogeneous_exponents(n, d);
  if (d < 2) return static_cast<long>(source.size());
  const Index target = index_of(homogeneous_exponents(n, d - 2));
  const VariableLayout layout = VariableLayout::single_block(n);
  RationalMatrix a(target.size(), source.size());
  for (std::size_t i = 0; i < source.size(); ++i) {
    const auto mono = RationalPolynomial::monomial(layout, source[i], Rational(1));
    const RationalPolynomial lap = laplacian(mono);
    for (const auto& [e, c] : lap.terms()) a(target.at(e), i) = c;
  }
  return static_cast<long>(source.size() - rank(std::move(a)));
}

BigInt harmonic_dimension_formula(int d, int m) {
  BigInt out = binomial(d + m, m);
  if (d >= 2) out -= binomial(d - 2 + m, m);
  return out;
}

}  // namespace singtuple
