#include "singtuple/compiled_system.h"

#include <map>
#include <stdexcept>

namespace singtuple {

CompiledPolynomials::CompiledPolynomials(
    const std::vector<ComplexPolynomial>& polys)
    : num_polys_(polys.size()) {
  if (polys.empty()) return;
  num_vars_ = polys.front().layout().num_vars();
  std::map<Exponent, std::size_t, GrlexGreater> index;
  for (const auto& p : polys) {
    if (p.layout().num_vars() != num_vars_)
      throw std::invalid_argument("compiled polynomials differ in layout");
    for (const auto& [e, c] : p.terms()) {
      if (index.try_emplace(e, 0).second)
        for (int v : e) max_power_ = std::max(max_power_, v);
    }
  }
  std::size_t col = 0;
  for (auto& [e, i] : index) {
    i = col++;
    monomials_.push_back(e);
  }
  coeff_re_.assign(num_polys_ * monomials_.size(), 0.0);
  coeff_im_.assign(num_polys_ * monomials_.size(), 0.0);
  for (std::size_t r = 0; r < polys.size(); ++r) {
    for (const auto& [e, c] : polys[r].terms()) {
      const std::size_t at = r * monomials_.size() + index.at(e);
      coeff_re_[at] = c.real();
      coeff_im_[at] = c.imag();
    }
  }
}

void CompiledPolynomials::evaluate(std::span<const Complex> point,
                                   std::span<Complex> out, Workspace& ws,
                                   const kernels::KernelTable& k) const {
  if (static_cast<int>(point.size()) != num_vars_ || out.size() != num_polys_)
    throw std::invalid_argument("compiled evaluation size mismatch");
  if (num_polys_ == 0) return;
  const std::size_t stride = static_cast<std::size_t>(max_power_) + 1;
  ws.powers.resize(stride * num_vars_);
  for (int v = 0; v < num_vars_; ++v) {
    Complex* row = ws.powers.data() + v * stride;
    row[0] = 1.0;
    for (int p = 1; p <= max_power_; ++p) row[p] = row[p - 1] * point[v];
  }
  const std::size_t n = monomials_.size();
  ws.mono_re.resize(n);
  ws.mono_im.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    Complex m = 1.0;
    const Exponent& e = monomials_[j];
    for (int v = 0; v < num_vars_; ++v)
      if (e[v] != 0) m *= ws.powers[v * stride + e[v]];
    ws.mono_re[j] = m.real();
    ws.mono_im[j] = m.imag();
  }
  ws.out_re.resize(num_polys_);
  ws.out_im.resize(num_polys_);
  const kernels::ComplexMatrixView a{coeff_re_.data(), coeff_im_.data(),
                                     num_polys_, n};
  k.matvec(a, ws.mono_re.data(), ws.mono_im.data(), ws.out_re.data(),
           ws.out_im.data());
  for (std::size_t i = 0; i < num_polys_; ++i)
    out[i] = Complex(ws.out_re[i], ws.out_im[i]);
}

}  // namespace singtuple
