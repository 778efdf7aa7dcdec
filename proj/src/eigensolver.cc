#include "singtuple/eigensolver.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <stdexcept>
#include <thread>

#include <Eigen/Dense>

#include "singtuple/compiled_system.h"
#include "singtuple/ed_degree.h"

namespace singtuple {

namespace {

constexpr double kDivergenceBound = 1e10;
constexpr double kSingularRcond = 1e-13;
constexpr double kStepTol = 1e-14;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

int largest_coordinate(const Eigen::VectorXcd& v) {
  int best = 0;
  double best_abs = -1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double a = std::abs(v[i]);
    if (a > best_abs) {
      best_abs = a;
      best = static_cast<int>(i);
    }
  }
  return best;
}

std::vector<long long> canonical_key(const SingularTuple& t) {
  std::vector<long long> key;
  for (const auto& block : t.points) {
    for (Eigen::Index i = 0; i < block.size(); ++i) {
      key.push_back(std::llround(block[i].real() * 1e8));
      key.push_back(std::llround(block[i].imag() * 1e8));
    }
  }
  return key;
}

void sort_canonical(std::vector<SingularTuple>& tuples) {
  std::stable_sort(tuples.begin(), tuples.end(),
                   [](const SingularTuple& a, const SingularTuple& b) {
                     return canonical_key(a) < canonical_key(b);
                   });
}

// The square Newton system for one tensor: block gradients F and the upper
// triangle of the Hessian of T, compiled together.
class NewtonSystem {
 public:
  NewtonSystem(const ComplexTensor& t, const kernels::KernelTable& k)
      : format_(t.format()), layout_(format_.layout()), n_(layout_.num_vars()), kernels_(&k) {
    std::vector<ComplexPolynomial> grad;
    for (int u = 0; u < n_; ++u)
      grad.push_back(t.polynomial().partial_derivative(u));
    std::vector<ComplexPolynomial> all = grad;
    for (int u = 0; u < n_; ++u)
      for (int v = u; v < n_; ++v)
        all.push_back(grad[u].partial_derivative(v));
    gradient_ = CompiledPolynomials(grad);
    full_ = CompiledPolynomials(all);
  }

  const TensorFormat& format() const { return format_; }
  const VariableLayout& layout() const { return layout_; }
  int num_vars() const { return n_; }

  // Hessian entry H(u, v) inside the full evaluation buffer.
  std::size_t hess_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    return n_ + static_cast<std::size_t>(u) * n_ -
           static_cast<std::size_t>(u) * (u - 1) / 2 + (v - u);
  }

  void evaluate_full(std::span<const Complex> z, std::vector<Complex>& out,
                     CompiledPolynomials::Workspace& ws) const {
    out.resize(full_.num_polys());
    full_.evaluate(z, out, ws, *kernels_);
  }

  // Max modulus over all minors F_a z_b - F_b z_a, every block, a < b.
  double minor_residual(std::span<const Complex> z,
                        CompiledPolynomials::Workspace& ws) const {
    std::vector<Complex> f(n_);
    gradient_.evaluate(z, f, ws, *kernels_);
    std::vector<double> re, im;
    for (int l = 0; l < format_.k(); ++l) {
      const int off = layout_.block_offset(l);
      const int size = layout_.block_size(l);
      for (int a = 0; a < size; ++a) {
        for (int b = a + 1; b < size; ++b) {
          const Complex m = f[off + a] * z[off + b] - f[off + b] * z[off + a];
          re.push_back(m.real());
          im.push_back(m.imag());
        }
      }
    }
    return kernels_->max_abs(re.data(), im.data(), re.size());
  }

 private:
  TensorFormat format_;
  VariableLayout layout_;
  int n_;
  const kernels::KernelTable* kernels_;
  CompiledPolynomials gradient_;
  CompiledPolynomials full_;
};

std::optional<SingularTuple> run_restart(const NewtonSystem& sys,
                                         std::uint64_t restart_seed,
                                         const SolveConfig& cfg) {
  const TensorFormat& format = sys.format();
  const VariableLayout& layout = sys.layout();
  const int n = sys.num_vars();
  std::mt19937_64 rng(restart_seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  std::vector<Complex> z(n);
  std::vector<int> charts(format.k());
  std::vector<int> free_vars;
  for (int l = 0; l < format.k(); ++l) {
    const int off = layout.block_offset(l);
    Eigen::VectorXcd v(layout.block_size(l));
    for (Eigen::Index i = 0; i < v.size(); ++i)
      v[i] = Complex(gauss(rng), gauss(rng));
    charts[l] = largest_coordinate(v);
    v /= v[charts[l]];
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      z[off + i] = v[i];
      if (i != charts[l]) free_vars.push_back(off + static_cast<int>(i));
    }
  }
  const int dim = static_cast<int>(free_vars.size());

  CompiledPolynomials::Workspace ws;
  std::vector<Complex> values;
  Eigen::VectorXcd g(dim);
  Eigen::MatrixXcd jac(dim, dim);
  for (int iter = 0; iter < cfg.newton_iters; ++iter) {
    sys.evaluate_full(z, values, ws);
    int row = 0;
    for (int l = 0; l < format.k(); ++l) {
      const int off = layout.block_offset(l);
      const int c = off + charts[l];
      for (int a = off; a < off + layout.block_size(l); ++a) {
        if (a == c) continue;
        g[row] = values[a] * z[c] - values[c] * z[a];
        for (int col = 0; col < dim; ++col) {
          const int v = free_vars[col];
          Complex d = values[sys.hess_index(a, v)] * z[c] -
                      values[sys.hess_index(c, v)] * z[a];
          if (v == a) d -= values[c];
          jac(row, col) = d;
        }
        ++row;
      }
    }
    const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(jac);
    if (!(lu.rcond() > kSingularRcond)) return std::nullopt;
    const Eigen::VectorXcd step = lu.solve(-g);
    double z_norm = 0.0;
    for (int col = 0; col < dim; ++col) {
      z[free_vars[col]] += step[col];
      z_norm = std::max(z_norm, std::abs(z[free_vars[col]]));
    }
    if (!std::isfinite(z_norm) || z_norm > kDivergenceBound) return std::nullopt;
    if (step.norm() < kStepTol * std::max(1.0, z_norm)) break;
  }

  BlockPoint raw;
  for (int l = 0; l < format.k(); ++l) {
    Eigen::VectorXcd v(layout.block_size(l));
    for (Eigen::Index i = 0; i < v.size(); ++i)
      v[i] = z[layout.block_offset(l) + i];
    raw.push_back(std::move(v));
  }
  SingularTuple tuple = SingularTuple::normalized(std::move(raw));
  const std::vector<Complex> flat = flatten_point(tuple.points);
  tuple.residual = sys.minor_residual(flat, ws);
  if (!(tuple.residual < cfg.residual_tol)) return std::nullopt;
  return tuple;
}

// Univariate helpers over Q; coefficients are stored lowest degree first.
using RationalUnivariate = std::vector<Rational>;

void trim(RationalUnivariate& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

RationalUnivariate derivative(const RationalUnivariate& p) {
  RationalUnivariate out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * Rational(static_cast<long>(i)));
  trim(out);
  return out;
}

// Returns (quotient, remainder).
std::pair<RationalUnivariate, RationalUnivariate> divmod(
    RationalUnivariate num, const RationalUnivariate& den) {
  trim(num);
  if (den.empty()) throw std::domain_error("division by zero polynomial");
  RationalUnivariate quot;
  if (num.size() >= den.size()) quot.assign(num.size() - den.size() + 1, 0);
  while (num.size() >= den.size() && !num.empty()) {
    const std::size_t shift = num.size() - den.size();
    const Rational factor = num.back() / den.back();
    quot[shift] = factor;
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= factor * den[i];
    num.pop_back();
    trim(num);
  }
  trim(quot);
  return {quot, num};
}

RationalUnivariate monic_gcd(RationalUnivariate a, RationalUnivariate b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  const Rational lead = a.back();
  for (auto& c : a) c /= lead;
  return a;
}

// Yun's square-free decomposition: pairs (factor, multiplicity).
std::vector<std::pair<RationalUnivariate, int>> squarefree(
    const RationalUnivariate& f) {
  std::vector<std::pair<RationalUnivariate, int>> out;
  if (f.size() <= 1) return out;
  const RationalUnivariate fp = derivative(f);
  const RationalUnivariate a0 = monic_gcd(f, fp);
  RationalUnivariate b = divmod(f, a0).first;
  RationalUnivariate c = divmod(fp, a0).first;
  RationalUnivariate d = c;
  {
    auto bp = derivative(b);
    d.resize(std::max(d.size(), bp.size()), 0);
    for (std::size_t i = 0; i < bp.size(); ++i) d[i] -= bp[i];
    trim(d);
  }
  int i = 1;
  while (b.size() > 1) {
    RationalUnivariate a = monic_gcd(b, d);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    if (a.size() > 1) out.emplace_back(a, i);
    auto bp = derivative(b);
    d = c;
    d.resize(std::max(d.size(), bp.size()), 0);
    for (std::size_t k = 0; k < bp.size(); ++k) d[k] -= bp[k];
    trim(d);
    ++i;
  }
  return out;
}

SingularTuple binary_point(Complex x0, Complex x1) {
  Eigen::VectorXcd v(2);
  v << x0, x1;
  return SingularTuple::normalized({v});
}

template <typename Coeff>
void check_binary(const SymTensor<Coeff>& f) {
  if (f.format().k() != 1 || f.format().dims[0] != 1)
    throw std::invalid_argument("binary_eigenvectors needs k = 1, m = 1");
  if (f.polynomial().is_zero())
    throw std::invalid_argument("binary_eigenvectors needs a non-zero form");
}

// Coefficients c_j of x0^{d-j} x1^j in x1 df/dx0 - x0 df/dx1.
template <typename Coeff>
std::vector<Coeff> binary_minor(const SymTensor<Coeff>& f) {
  const auto section = build_singular_section(f);
  const auto& minor = section.minors.at(0).at(0).poly;
  const int d = f.format().degrees[0];
  std::vector<Coeff> c(d + 1, Coeff(0));
  for (const auto& [e, coeff] : minor.terms()) c[e[1]] = coeff;
  bool all_zero = true;
  for (const auto& x : c)
    if (!is_zero_coeff(x)) all_zero = false;
  if (all_zero) throw std::domain_error("eigenscheme is all of P^1");
  return c;
}

template <typename Coeff>
void finish_binary(const SymTensor<Coeff>& f,
                   std::vector<BinaryEigenpoint>& points) {
  for (auto& p : points) p.tuple.residual = residual(f, p.tuple);
  std::stable_sort(points.begin(), points.end(),
                   [](const BinaryEigenpoint& a, const BinaryEigenpoint& b) {
                     return canonical_key(a.tuple) < canonical_key(b.tuple);
                   });
}

}  // namespace

SingularTuple SingularTuple::normalized(BlockPoint raw) {
  SingularTuple out;
  for (auto& block : raw) {
    if (block.size() == 0) throw std::invalid_argument("empty tuple block");
    const int c = largest_coordinate(block);
    if (std::abs(block[c]) == 0.0)
      throw std::invalid_argument("tuple block is the zero vector");
    block /= block[c];
    block[c] = 1.0;
    out.charts.push_back(c);
    out.points.push_back(std::move(block));
  }
  return out;
}

double projective_distance(const BlockPoint& a, const BlockPoint& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("tuples have different block counts");
  double worst = 0.0;
  for (std::size_t l = 0; l < a.size(); ++l) {
    if (a[l].size() != b[l].size())
      throw std::invalid_argument("tuple blocks differ in dimension");
    const Eigen::VectorXcd u = a[l].normalized();
    const Eigen::VectorXcd v = b[l].normalized();
    const Eigen::VectorXcd perp = v - u * u.dot(v);
    worst = std::max(worst, perp.norm());
  }
  return worst;
}

bool same_point_sets(const std::vector<SingularTuple>& a,
                     const std::vector<SingularTuple>& b, double tol) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& p : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!used[j] && projective_distance(p.points, b[j].points) < tol) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

SolveResult solve_singular_tuples(const ComplexTensor& t,
                                  const SolveConfig& cfg) {
  if (t.polynomial().is_zero())
    throw std::invalid_argument("cannot solve for the zero tensor");
  if (!(cfg.residual_tol > 0) || !(cfg.dedup_tol > 0) || cfg.newton_iters < 1)
    throw std::invalid_argument("solver tolerances must be positive");

  SolveResult result;
  result.target = ed_degree(t.format());
  const std::size_t target = result.target.fits_slong_p()
                                 ? static_cast<std::size_t>(result.target.get_si())
                                 : static_cast<std::size_t>(-1);
  long budget = cfg.max_restarts;
  if (budget <= 0) {
    const BigInt b = result.target * 200;
    budget = b.fits_slong_p() ? b.get_si() : 1L << 40;
  }
  const int batch = std::max(1, cfg.batch_size);
  const int threads = std::max(1, cfg.threads);

  const NewtonSystem sys(t, cfg.kernels ? *cfg.kernels : kernels::active_kernels());
  std::vector<SingularTuple> found;
  long next = 0;
  while (next < budget && found.size() < target) {
    const long count = std::min<long>(batch, budget - next);
    std::vector<std::optional<SingularTuple>> slots(count);
    auto work = [&](int worker) {
      for (long i = worker; i < count; i += threads) {
        const auto idx = static_cast<std::uint64_t>(next + i);
        slots[i] = run_restart(sys, splitmix64(cfg.seed ^ splitmix64(idx)), cfg);
      }
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      for (int w = 0; w < threads; ++w) pool.emplace_back(work, w);
    }
    for (auto& slot : slots) {
      if (!slot) continue;
      bool duplicate = false;
      for (const auto& f : found) {
        if (projective_distance(f.points, slot->points) < cfg.dedup_tol) {
          duplicate = true;
          break;
        }
      }
      if (!duplicate) found.push_back(std::move(*slot));
    }
    next += count;
  }
  result.restarts_used = static_cast<int>(next);
  result.complete = found.size() == target;
  sort_canonical(found);
  result.tuples = std::move(found);
  return result;
}

SolveResult solve_singular_tuples(const RationalTensor& t,
                                  const SolveConfig& cfg) {
  return solve_singular_tuples(to_complex(t), cfg);
}

template <typename Coeff>
double residual(const SymTensor<Coeff>& t, const SingularTuple& tuple) {
  const TensorFormat& format = t.format();
  if (static_cast<int>(tuple.points.size()) != format.k())
    throw std::invalid_argument("tuple does not match tensor format");
  for (int l = 0; l < format.k(); ++l)
    if (tuple.points[l].size() != format.dims[l] + 1)
      throw std::invalid_argument("tuple block does not match tensor format");
  const std::vector<Complex> z = flatten_point(tuple.points);
  const auto section = build_singular_section(t);
  double worst = 0.0;
  for (const auto& slot : section.minors)
    for (const auto& minor : slot)
      worst = std::max(worst, std::abs(minor.poly.evaluate(z)));
  return worst;
}

template double residual(const RationalTensor&, const SingularTuple&);
template double residual(const ComplexTensor&, const SingularTuple&);

std::vector<Complex> companion_roots(const std::vector<Complex>& coeffs) {
  std::vector<Complex> p = coeffs;
  while (!p.empty() && p.back() == Complex(0.0, 0.0)) p.pop_back();
  if (p.size() <= 1) return {};
  const int n = static_cast<int>(p.size()) - 1;
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  if (n > 1) companion.diagonal(-1).setOnes();
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -p[i] / p[n];
  const Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("companion eigenvalue iteration failed");
  std::vector<Complex> roots(solver.eigenvalues().begin(),
                             solver.eigenvalues().end());
  auto eval = [&](Complex z, Complex& dp) {
    Complex v = 0.0;
    dp = 0.0;
    for (int i = n; i >= 0; --i) {
      dp = dp * z + v;
      v = v * z + p[i];
    }
    return v;
  };
  for (auto& z : roots) {
    for (int it = 0; it < 3; ++it) {
      Complex dp;
      const Complex v = eval(z, dp);
      if (std::abs(dp) == 0.0) break;
      const Complex next = z - v / dp;
      Complex dn;
      if (std::abs(eval(next, dn)) < std::abs(v)) z = next;
      else break;
    }
  }
  return roots;
}

std::vector<BinaryEigenpoint> binary_eigenvectors(const RationalTensor& f) {
  check_binary(f);
  const std::vector<Rational> c = binary_minor(f);
  const int d = f.format().degrees[0];
  RationalUnivariate p(c.begin(), c.end());
  trim(p);
  std::vector<BinaryEigenpoint> out;
  const int at_infinity = d - (static_cast<int>(p.size()) - 1);
  if (at_infinity > 0) out.push_back({binary_point(0.0, 1.0), at_infinity});
  for (const auto& [factor, mult] : squarefree(p)) {
    std::vector<Complex> fc;
    for (const auto& x : factor) fc.push_back(to_complex(x));
    for (const Complex& z : companion_roots(fc))
      out.push_back({binary_point(1.0, z), mult});
  }
  finish_binary(f, out);
  return out;
}

std::vector<BinaryEigenpoint> binary_eigenvectors(const ComplexTensor& f) {
  check_binary(f);
  std::vector<Complex> p = binary_minor(f);
  const int d = f.format().degrees[0];
  while (!p.empty() && p.back() == Complex(0.0, 0.0)) p.pop_back();
  std::vector<BinaryEigenpoint> out;
  const int at_infinity = d - (static_cast<int>(p.size()) - 1);
  if (at_infinity > 0) out.push_back({binary_point(0.0, 1.0), at_infinity});
  // Numerically coincident roots are merged into one point.
  for (const Complex& z : companion_roots(p)) {
    bool merged = false;
    for (auto& q : out) {
      const SingularTuple candidate = binary_point(1.0, z);
      if (projective_distance(q.tuple.points, candidate.points) < 1e-6) {
        ++q.multiplicity;
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back({binary_point(1.0, z), 1});
  }
  finish_binary(f, out);
  return out;
}

ComplexTensor random_complex_tensor(const TensorFormat& format,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const auto basis = monomial_basis(format);
  Eigen::VectorXcd c(basis.size());
  for (auto& x : c) x = Complex(gauss(rng), gauss(rng));
  return tensor_from_vector(format, c);
}

ComplexTensor random_real_tensor(const TensorFormat& format,
                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const auto basis = monomial_basis(format);
  Eigen::VectorXcd c(basis.size());
  for (auto& x : c) x = Complex(gauss(rng), 0.0);
  return tensor_from_vector(format, c);
}

}  // namespace singtuple
