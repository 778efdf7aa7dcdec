#include "singtuple/polynomial.h"

#include <cstdio>

namespace singtuple {

VariableLayout::VariableLayout(std::vector<int> block_sizes)
    : block_sizes_(std::move(block_sizes)) {
  if (block_sizes_.empty())
    throw std::invalid_argument("layout needs at least one block");
  offsets_.reserve(block_sizes_.size());
  for (int size : block_sizes_) {
    if (size < 1) throw std::invalid_argument("empty variable block");
    offsets_.push_back(total_);
    total_ += size;
  }
}

std::string coeff_to_string(const Rational& c) { return c.get_str(); }

std::string coeff_to_string(const Complex& c) {
  char buf[80];
  std::snprintf(buf, sizeof(buf), "(%.17g,%.17g)", c.real(), c.imag());
  return buf;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  Rational out;
  // mpq_set_str accepts "p" and "p/q" in base 10 and rejects everything else.
  if (out.set_str(text, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + text);
  if (sgn(out.get_den()) == 0)
    throw std::invalid_argument("zero denominator: " + text);
  out.canonicalize();
  return out;
}

ComplexPolynomial to_complex(const RationalPolynomial& p) {
  ComplexPolynomial out(p.layout());
  for (const auto& [e, c] : p.terms()) out.add_term(e, to_complex(c));
  return out;
}

RationalPolynomial block_quadric(const VariableLayout& layout, int block) {
  RationalPolynomial q(layout);
  for (int i = 0; i < layout.block_size(block); ++i) {
    Exponent e(layout.num_vars(), 0);
    e[layout.block_offset(block) + i] = 2;
    q.add_term(e, Rational(1));
  }
  return q;
}

}  // namespace singtuple
