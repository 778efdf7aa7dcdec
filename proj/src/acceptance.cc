#include "singtuple/acceptance.h"

#include <chrono>
#include <functional>
#include <sstream>

#include "singtuple/cohomology.h"
#include "singtuple/ed_degree.h"
#include "singtuple/eigensolver.h"
#include "singtuple/fiber.h"
#include "singtuple/harmonic.h"
#include "singtuple/tensor.h"

namespace singtuple {

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void fail(const std::string& what) {
    if (!passed) detail << "; ";
    else detail.str("");
    passed = false;
    detail << what;
  }
};

BigInt binomial(int n, int k) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

// 1. Closed-form counts.
void ed_degree_reproduction(const AcceptanceOptions&, Outcome& out) {
  const auto start = std::chrono::steady_clock::now();
  const BigInt segre = ed_degree(TensorFormat({1, 1, 1}, {1, 1, 1}));
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (segre != 6) out.fail("(3;1,1,1;1,1,1) gave " + segre.get_str());
  if (secs >= 1.0) out.fail("(3;1,1,1;1,1,1) took over 1 s");
  int checked = 0;
  // p x q matrices live in P^{p-1} x P^{q-1}.
  for (int p = 2; p <= 7; ++p) {
    for (int q = 2; q <= 7; ++q) {
      const BigInt got = ed_degree(TensorFormat({1, 1}, {p - 1, q - 1}));
      ++checked;
      if (got != std::min(p, q))
        out.fail(std::to_string(p) + "x" + std::to_string(q) + " matrices gave " +
                 got.get_str());
    }
  }
  for (int d = 1; d <= 6; ++d) {
    for (int m = 1; m <= 4; ++m) {
      BigInt expected = 0, power = 1;
      for (int i = 0; i <= m; ++i) {
        expected += power;
        power *= d - 1;
      }
      const BigInt got = ed_degree(TensorFormat({d}, {m}));
      ++checked;
      if (got != expected)
        out.fail("(1;" + std::to_string(d) + ";" + std::to_string(m) + ") gave " +
                 got.get_str() + ", expected " + expected.get_str());
    }
  }
  if (out.passed) out.detail << checked + 1 << " formats exact";
}

// 2. Boundary stabilization for d = (1,1,1), m = (1,1,m3).
void boundary_stabilization(const AcceptanceOptions&, Outcome& out) {
  // Independently computed (rational-function expansion).
  const std::vector<int> expected = {6, 8, 8, 8, 8};
  const StabilizationReport rep = stabilization_check({1, 1, 1}, {1, 1, 0}, 2, 1, 5);
  for (std::size_t i = 0; i < rep.values.size(); ++i)
    if (rep.values[i] != expected[i])
      out.fail("m3=" + std::to_string(rep.swept[i]) + " gave " + rep.values[i].get_str());
  for (std::size_t i = 2; i < rep.values.size(); ++i)
    if (rep.values[i] != rep.values[1]) out.fail("not constant on m3 = 2..5");
  if (!rep.constant_from || *rep.constant_from != 2)
    out.fail("constant tail does not start at the boundary m3 = 2");
  if (out.passed) {
    out.detail << "values";
    for (const auto& v : rep.values) out.detail << ' ' << v.get_str();
    out.detail << "; constant from m3=" << *rep.constant_from;
  }
}

// 3. Fiber dimension on random tensors.
void fiber_dichotomy(const AcceptanceOptions& opts, Outcome& out) {
  const std::vector<TensorFormat> formats = {
      {{3}, {1}},       {{5}, {1}},       {{3}, {2}},       {{4}, {1}},
      {{4}, {2}},       {{1, 1, 1}, {1, 1, 1}}, {{2, 1}, {1, 1}}, {{2, 2}, {1, 1}}};
  std::ostringstream summary;
  for (std::size_t f = 0; f < formats.size(); ++f) {
    const TensorFormat& format = formats[f];
    const int want_kernel = format.all_degrees_even() ? 2 : 1;
    int complete = 0;
    for (int trial = 0; trial < 10; ++trial) {
      const std::uint64_t tensor_seed = opts.seed + 1000 * f + trial;
      const ComplexTensor t = random_complex_tensor(format, tensor_seed);
      SolveConfig cfg;
      cfg.seed = tensor_seed ^ 0x5eedULL;
      cfg.threads = opts.threads;
      const SolveResult res = solve_singular_tuples(t, cfg);
      if (!res.complete) continue;
      ++complete;
      const FiberReport rep = fiber_dimension(format, res.tuples);
      const std::string where = format.to_string() + " trial " + std::to_string(trial);
      if (rep.kernel_dimension() != want_kernel)
        out.fail(where + ": kernel dimension " + std::to_string(rep.kernel_dimension()));
      if (!(rep.gap_ratio > 1e4))
        out.fail(where + ": gap ratio " + std::to_string(rep.gap_ratio));
      if (format.all_degrees_even() && !(rep.q_membership.residual < 1e-6))
        out.fail(where + ": q-product residual " + std::to_string(rep.q_membership.residual));
      const double self = kernel_projection_residual(rep, t.coefficient_vector());
      if (!(self < 1e-6)) out.fail(where + ": tensor residual " + std::to_string(self));
    }
    if (complete < 8)
      out.fail(format.to_string() + ": only " + std::to_string(complete) + "/10 complete");
    summary << (f ? ", " : "") << format.to_string() << ' ' << complete << "/10";
  }
  if (out.passed) out.detail << "complete runs: " << summary.str();
}

// 4. The exact kernel of the eigenscheme map.
void phi_kernel(const AcceptanceOptions& opts, Outcome& out) {
  int positives = 0;
  for (int d : {2, 4, 6}) {
    for (int m = 1; m <= 3; ++m) {
      ++positives;
      if (!phi_kernel_check(q_product_tensor(TensorFormat({d}, {m}))))
        out.fail("q^" + std::to_string(d / 2) + " on P^" + std::to_string(m));
    }
  }
  for (const auto& degrees : {std::vector<int>{2, 2}, std::vector<int>{2, 4}}) {
    for (int m1 = 1; m1 <= 2; ++m1) {
      for (int m2 = 1; m2 <= 2; ++m2) {
        const TensorFormat format(degrees, {m1, m2});
        ++positives;
        if (!phi_kernel_check(q_product_tensor(format)))
          out.fail("q-product on " + format.to_string());
      }
    }
  }
  const std::vector<TensorFormat> odd = {{{3}, {1}}, {{3}, {2}}, {{5}, {1}},
                                         {{1, 2}, {1, 1}}, {{3, 2}, {1, 1}}};
  int negatives = 0;
  for (std::size_t f = 0; f < odd.size(); ++f) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto t = random_rational_tensor(odd[f], opts.seed + 100 * f + trial);
      ++negatives;
      if (phi_kernel_check(t))
        out.fail("random tensor on " + odd[f].to_string() + " reported in the kernel");
    }
  }
  if (out.passed)
    out.detail << positives << " q-products in the kernel, " << negatives
               << " random odd-degree tensors outside";
}

// Table (1) read row by row, used as the oracle for the pairing analysis.
CohomologySupport table_wedge(int m, int r, int t) {
  CohomologySupport s;
  if (t >= 0) s.insert(0);
  if (t == -r && 1 <= r && r <= m) s.insert(r - 1);
  if (t == -r - 1 && 0 <= r && r <= m - 1) s.insert(r);
  if (t == -m - 1 && 0 <= r && r <= m - 1) s.insert(m - 1);
  if (t <= -m - 2) s.insert(m);
  return s;
}

// Table (2).
CohomologySupport table_cotangent(int m, int r, int t) {
  CohomologySupport s;
  if (t > r) s.insert(0);
  if (t == 0) s.insert(r);
  if (t < r - m) s.insert(m);
  return s;
}

std::string support_text(const CohomologySupport& s) {
  std::string out = "{";
  for (int q : s) out += (out.size() > 1 ? "," : "") + std::to_string(q);
  return out + "}";
}

// 5. Bott tables.
void bott_tables(const AcceptanceOptions&, Outcome& out) {
  int cells = 0, mismatches = 0;
  for (int m = 1; m <= 6; ++m) {
    for (int t = -m - 4; t <= 3; ++t) {
      for (int r = 0; r <= m; ++r) {
        cells += 2;
        const auto wedge = bott_support(BundleDescriptor::wedge_q_tensor_q(m, r, t));
        if (wedge != table_wedge(m, r, t)) {
          ++mismatches;
          out.fail("wedge m=" + std::to_string(m) + " r=" + std::to_string(r) +
                   " t=" + std::to_string(t) + ": computed " + support_text(wedge) +
                   ", table " + support_text(table_wedge(m, r, t)));
        }
        const auto cot = bott_support(BundleDescriptor::cotangent(m, r, t));
        if (cot != table_cotangent(m, r, t)) {
          ++mismatches;
          out.fail("cotangent m=" + std::to_string(m) + " r=" + std::to_string(r) +
                   " t=" + std::to_string(t) + ": computed " + support_text(cot) +
                   ", table " + support_text(table_cotangent(m, r, t)));
        }
      }
      ++cells;
      CohomologySupport serre;
      if (t >= 0) serre.insert(0);
      if (t <= -m - 1) serre.insert(m);
      if (bott_support(BundleDescriptor::line(m, t)) != serre) {
        ++mismatches;
        out.fail("line bundle O(" + std::to_string(t) + ") on P^" + std::to_string(m));
      }
    }
  }
  if (out.passed) out.detail << cells << " cells match";
  else out.detail << " [" << mismatches << " of " << cells << " cells differ]";
}

// 6. Vanishing scan over small formats.
void vanishing(const AcceptanceOptions&, Outcome& out) {
  int applicable = 0;
  for (int k = 1; k <= 3; ++k) {
    std::vector<int> d(k, 1), m(k, 1);
    // Odometer over d_l, m_l in 1..3.
    while (true) {
      const TensorFormat format(d, m);
      if (validate_format(format).theorem_applicable) {
        ++applicable;
        const auto rep = vanishing_scan(format);
        if (!rep.all_clear)
          out.fail(format.to_string() + ": " + std::to_string(rep.witnesses.size()) +
                   " witnesses");
      }
      int pos = 0;
      while (pos < 2 * k) {
        int& digit = pos < k ? d[pos] : m[pos - k];
        if (++digit <= 3) break;
        digit = 1;
        ++pos;
      }
      if (pos == 2 * k) break;
    }
  }
  const auto bad = vanishing_scan(TensorFormat({1, 1, 1}, {1, 1, 3}));
  if (bad.all_clear || bad.witnesses.empty())
    out.fail("(3;1,1,1;1,1,3) reported all clear");
  if (out.passed)
    out.detail << applicable << " applicable formats all clear; (3;1,1,1;1,1,3) has "
               << bad.witnesses.size() << " witnesses";
}

// 7. Harmonic decomposition of random forms.
void harmonic_forms(const AcceptanceOptions& opts, Outcome& out) {
  std::set<std::pair<int, int>> tested;
  for (int i = 0; i < 50; ++i) {
    const int d = 1 + i % 6;
    const int m = 1 + (i / 6) % 3;
    tested.insert({d, m});
    const auto f = random_rational_tensor(TensorFormat({d}, {m}), opts.seed + i, 9, 0.6)
                       .polynomial();
    const HarmonicDecomposition dec = harmonic_decompose(f, d);
    const std::string where = "form " + std::to_string(i) + " (d=" + std::to_string(d) +
                              ", m=" + std::to_string(m) + ")";
    if (!(dec.reconstruct() == f)) out.fail(where + ": reconstruction differs");
    for (const auto& [j, h] : dec.components)
      if (!laplacian(h).is_zero()) out.fail(where + ": component " + std::to_string(j) +
                                            " is not harmonic");
  }
  for (const auto& [d, m] : tested)
    if (BigInt(harmonic_dimension(d, m)) != harmonic_dimension_formula(d, m))
      out.fail("dim H_" + std::to_string(d) + " on P^" + std::to_string(m));
  if (out.passed)
    out.detail << "50 forms exact; dimension identity on " << tested.size() << " (d, m)";
}

// 8. Image-dimension formula.
void image_dimensions(const AcceptanceOptions&, Outcome& out) {
  const std::vector<TensorFormat> formats = {
      {{3}, {1}},          {{3}, {2}},    {{4}, {1}},          {{4}, {3}},
      {{5}, {2}},          {{6}, {2}},    {{2, 1}, {1, 1}},    {{2, 2}, {2, 1}},
      {{1, 1, 1}, {1, 1, 1}}, {{2, 2, 2}, {1, 1, 2}}};
  int odd = 0, even = 0;
  for (const auto& format : formats) {
    BigInt ambient = 1;
    bool all_even = true;
    for (int l = 0; l < format.k(); ++l) {
      ambient *= binomial(format.degrees[l] + format.dims[l], format.degrees[l]);
      all_even = all_even && format.degrees[l] % 2 == 0;
    }
    (all_even ? even : odd)++;
    const BigInt expected = ambient - (all_even ? 2 : 1);
    const BigInt got = image_dimension(format);
    if (got != expected)
      out.fail(format.to_string() + " gave " + got.get_str() + ", expected " +
               expected.get_str());
    if (BigInt(monomial_basis(format).size()) != ambient)
      out.fail(format.to_string() + ": ambient count disagrees with the basis");
  }
  if (odd == 0 || even == 0) out.fail("formats do not span both parities");
  if (out.passed) out.detail << odd << " odd and " << even << " all-even formats exact";
}

struct Criterion {
  int id;
  const char* name;
  double limit;
  void (*fn)(const AcceptanceOptions&, Outcome&);
};

const Criterion kCriteria[] = {
    {1, "ED-degree reproduction", 60.0, ed_degree_reproduction},
    {2, "Boundary-format stabilization", 5.0, boundary_stabilization},
    {3, "Fiber dichotomy", 300.0, fiber_dichotomy},
    {4, "Exact kernel of phi", 10.0, phi_kernel},
    {5, "Bott tables", 5.0, bott_tables},
    {6, "Vanishing scan", 120.0, vanishing},
    {7, "Harmonic decomposition", 60.0, harmonic_forms},
    {8, "Image-dimension formulas", 5.0, image_dimensions},
};

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts) {
  std::vector<CriterionResult> results;
  for (const Criterion& c : kCriteria) {
    if (!opts.only.empty() && !opts.only.count(c.id)) continue;
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.fn(opts, outcome);
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    CriterionResult r;
    r.id = c.id;
    r.name = c.name;
    r.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.limit_seconds = c.limit;
    if (r.seconds >= c.limit)
      outcome.fail("took " + std::to_string(r.seconds) + " s, limit " +
                   std::to_string(c.limit) + " s");
    r.passed = outcome.passed;
    r.detail = outcome.detail.str();
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace singtuple
