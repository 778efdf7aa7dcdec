#include "singtuple/cohomology.h"

#include <sstream>
#include <stdexcept>

namespace singtuple {

namespace {

// lambda_i with the convention lambda_0 = lambda_{m+1} = 0.
void add_fundamental(Weight& w, int i, int times = 1) {
  if (i >= 1 && i <= static_cast<int>(w.size())) w[i - 1] += times;
}

Weight fundamental_sum(int m, std::initializer_list<int> indices, int t) {
  Weight w(m, 0);
  for (int i : indices) add_fundamental(w, i);
  add_fundamental(w, 1, t);
  return w;
}

}  // namespace

BundleDescriptor BundleDescriptor::line(int m, int t) {
  BundleDescriptor b{BundleFamily::kLine, m, 0, t};
  b.validate();
  return b;
}

BundleDescriptor BundleDescriptor::cotangent(int m, int r, int t) {
  BundleDescriptor b{BundleFamily::kCotangent, m, r, t};
  b.validate();
  return b;
}

BundleDescriptor BundleDescriptor::wedge_q_tensor_q(int m, int r, int t) {
  BundleDescriptor b{BundleFamily::kWedgeQTensorQ, m, r, t};
  b.validate();
  return b;
}

void BundleDescriptor::validate() const {
  if (m < 1) throw std::invalid_argument("projective dimension must be >= 1");
  if (family == BundleFamily::kLine) {
    if (r != 0) throw std::invalid_argument("line bundles take no r");
    return;
  }
  if (r < 0 || r > m) throw std::invalid_argument("r must lie in [0, m]");
}

std::string BundleDescriptor::to_string() const {
  std::ostringstream os;
  switch (family) {
    case BundleFamily::kLine:
      os << "O(" << t << ")";
      break;
    case BundleFamily::kCotangent:
      os << "Omega^" << r << "(" << t << ")";
      break;
    case BundleFamily::kWedgeQTensorQ:
      os << "Wedge^" << (m - r) << "Q*Q(" << t << ")";
      break;
  }
  os << " on P^" << m;
  return os.str();
}

std::vector<Weight> irreducible_summands(const BundleDescriptor& b) {
  b.validate();
  const int m = b.m;
  switch (b.family) {
    case BundleFamily::kLine:
      return {fundamental_sum(m, {}, b.t)};
    case BundleFamily::kCotangent:
      // Omega^r(t) = wedge^r of the twisted dual tautological quotient.
      return {fundamental_sum(m, {b.r + 1}, b.t - b.r - 1)};
    case BundleFamily::kWedgeQTensorQ:
      if (b.r == m) return {fundamental_sum(m, {m}, b.t)};          // Q(t)
      if (b.r == 0) return {fundamental_sum(m, {m}, b.t + 1)};      // Q(t+1)
      return {fundamental_sum(m, {b.r + 1, m}, b.t),
              fundamental_sum(m, {b.r}, b.t)};
  }
  throw std::logic_error("unknown bundle family");
}

std::vector<int> root_pairings(const Weight& w) {
  std::vector<int> out;
  int acc = 0;
  for (std::size_t s = 1; s <= w.size(); ++s) {
    acc += w[s - 1];
    out.push_back(static_cast<int>(s) + acc);
  }
  return out;
}

std::optional<int> bott_index(const Weight& w) {
  int negatives = 0;
  for (int p : root_pairings(w)) {
    if (p == 0) return std::nullopt;
    if (p < 0) ++negatives;
  }
  return negatives;
}

CohomologySupport bott_support(const BundleDescriptor& b) {
  CohomologySupport out;
  for (const Weight& w : irreducible_summands(b))
    if (auto q = bott_index(w)) out.insert(*q);
  return out;
}

bool kunneth_nonvanishing(const std::vector<BundleDescriptor>& factors, int q) {
  if (factors.empty()) throw std::invalid_argument("need at least one factor");
  std::set<int> reachable{0};
  for (const auto& f : factors) {
    std::set<int> next;
    for (int a : reachable)
      for (int b : bott_support(f)) next.insert(a + b);
    reachable = std::move(next);
  }
  return reachable.count(q) > 0;
}

std::vector<KoszulSummand> enumerate_koszul_summands(const TensorFormat& format,
                                                     int r, int slot) {
  const int k = format.k();
  if (slot < 0 || slot >= k) throw std::out_of_range("slot out of range");
  if (r < 2 || r > format.total_dim() + 1)
    throw std::out_of_range("r must lie in [2, sum m + 1]");

  std::vector<KoszulSummand> out;
  std::vector<int> comp(k, 0);
  auto emit = [&] {
    KoszulSummand s{r, slot, comp, {}};
    for (int l = 0; l < k; ++l) {
      const int d = format.degrees[l], m = format.dims[l];
      if (l == slot)
        s.factors.push_back(BundleDescriptor::wedge_q_tensor_q(
            m, comp[l], -d * (r - 1) + comp[l] - 2));
      else
        s.factors.push_back(
            BundleDescriptor::cotangent(m, comp[l], 2 * comp[l] - d * (r - 1)));
    }
    out.push_back(std::move(s));
  };
  // Compositions in lexicographic order, r_l capped at m_l.
  auto rec = [&](auto&& self, int l, int remaining) -> void {
    if (l == k - 1) {
      if (remaining <= format.dims[l]) {
        comp[l] = remaining;
        emit();
      }
      return;
    }
    for (int v = 0; v <= std::min(remaining, format.dims[l]); ++v) {
      comp[l] = v;
      self(self, l + 1, remaining - v);
    }
  };
  rec(rec, 0, r);
  return out;
}

VanishingReport vanishing_scan(const TensorFormat& format) {
  VanishingReport report;
  const int k = format.k();
  for (int r = 2; r <= format.total_dim(); ++r) {
    for (int j = 0; j < k; ++j) {
      for (const auto& summand : enumerate_koszul_summands(format, r, j)) {
        std::vector<std::vector<int>> supports;
        bool empty = false;
        for (const auto& f : summand.factors) {
          const auto s = bott_support(f);
          if (s.empty()) empty = true;
          supports.emplace_back(s.begin(), s.end());
        }
        if (empty) continue;
        std::vector<int> q(k, 0);
        auto rec = [&](auto&& self, int l, int sum) -> void {
          if (sum > r - 1) return;
          if (l == k) {
            report.witnesses.push_back({r, j, summand.composition, q});
            return;
          }
          for (int v : supports[l]) {
            q[l] = v;
            self(self, l + 1, sum + v);
          }
        };
        rec(rec, 0, 0);
      }
    }
  }
  report.all_clear = report.witnesses.empty();
  return report;
}

}  // namespace singtuple
