#include "singtuple/ed_degree.h"

#include <stdexcept>

namespace singtuple {

namespace {

// Drops every term whose exponent in some t_l exceeds m_l; such terms can
// never reach the target monomial since all exponents only grow.
RationalPolynomial truncate(const RationalPolynomial& p,
                            const std::vector<int>& bounds) {
  RationalPolynomial out(p.layout());
  for (const auto& [e, c] : p.terms()) {
    bool keep = true;
    for (std::size_t l = 0; l < bounds.size(); ++l)
      if (e[l] > bounds[l]) keep = false;
    if (keep) out.add_term(e, c);
  }
  return out;
}

}  // namespace

BigInt ed_degree(const TensorFormat& format) {
  const int k = format.k();
  const VariableLayout ring(std::vector<int>(k, 1));
  std::vector<RationalPolynomial> t;
  for (int l = 0; l < k; ++l) t.push_back(RationalPolynomial::variable(ring, l));

  RationalPolynomial weighted_sum(ring);
  for (int l = 0; l < k; ++l)
    weighted_sum += t[l].scaled(Rational(format.degrees[l]));

  RationalPolynomial product = RationalPolynomial::constant(ring, Rational(1));
  for (int l = 0; l < k; ++l) {
    const RationalPolynomial t_hat = weighted_sum - t[l];
    const int m = format.dims[l];
    RationalPolynomial factor(ring);
    RationalPolynomial hat_power = RationalPolynomial::constant(ring, Rational(1));
    for (int i = 0; i <= m; ++i) {
      factor += hat_power * t[l].pow(m - i);
      hat_power = truncate(hat_power * t_hat, format.dims);
    }
    product = truncate(product * truncate(factor, format.dims), format.dims);
  }
  const Rational c = product.coefficient_of(Exponent(format.dims));
  return c.get_num();
}

StabilizationReport stabilization_check(const std::vector<int>& degrees,
                                        const std::vector<int>& dims, int slot,
                                        int first, int last) {
  if (slot < 0 || slot >= static_cast<int>(degrees.size()) ||
      degrees.size() != dims.size())
    throw std::invalid_argument("slot out of range");
  if (degrees[slot] != 1)
    throw std::domain_error("stabilization applies to degree-1 slots");
  if (first < 1 || last < first)
    throw std::invalid_argument("empty or invalid sweep range");

  StabilizationReport report;
  for (std::size_t l = 0; l < dims.size(); ++l)
    if (static_cast<int>(l) != slot) report.boundary += dims[l];

  std::vector<int> m = dims;
  for (int v = first; v <= last; ++v) {
    m[slot] = v;
    report.swept.push_back(v);
    report.values.push_back(ed_degree(TensorFormat(degrees, m)));
  }

  const std::size_t n = report.values.size();
  std::size_t start = n - 1;
  while (start > 0 && report.values[start - 1] == report.values[n - 1]) --start;
  if (n - start >= 2) report.constant_from = report.swept[start];

  bool constant = true;
  std::optional<BigInt> tail;
  for (std::size_t i = 0; i < n; ++i) {
    if (report.swept[i] < report.boundary) continue;
    if (report.swept[i] == report.boundary) report.boundary_value = report.values[i];
    if (!tail) tail = report.values[i];
    else if (*tail != report.values[i]) constant = false;
  }
  report.constant_beyond_boundary = tail.has_value() && constant;
  return report;
}

}  // namespace singtuple
