// Cohomology of the homogeneous bundles that appear in the Koszul
// resolution of the singular-tuple locus, via Bott's theorem on P^m.
//
// Weights are written in fundamental-weight coordinates c_1..c_m
// (lambda = sum c_i lambda_i).  For such a weight the pairings of
// lambda + delta with the roots alpha_1 + ... + alpha_s are
//   p_s = s + c_1 + ... + c_s,   s = 1..m;
// the weight is singular when some p_s vanishes, otherwise its index is the
// number of negative p_s.  All three families reduce to weights whose tail
// c_2..c_m is dominant, where these pairings decide everything.

#ifndef SINGTUPLE_COHOMOLOGY_H_
#define SINGTUPLE_COHOMOLOGY_H_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "singtuple/tensor.h"

namespace singtuple {

enum class BundleFamily {
  kLine,            // O(t)
  kCotangent,       // Omega^r(t)
  kWedgeQTensorQ,   // wedge^(m-r) Q (x) Q (t)
};

struct BundleDescriptor {
  BundleFamily family = BundleFamily::kLine;
  int m = 1;  // ambient P^m
  int r = 0;  // unused for line bundles
  int t = 0;

  static BundleDescriptor line(int m, int t);
  static BundleDescriptor cotangent(int m, int r, int t);
  static BundleDescriptor wedge_q_tensor_q(int m, int r, int t);

  /// Throws std::invalid_argument for m < 1 or r outside [0, m].
  void validate() const;
  std::string to_string() const;
  bool operator==(const BundleDescriptor&) const = default;
};

using CohomologySupport = std::set<int>;
using Weight = std::vector<int>;  // c_1..c_m

/// Irreducible summands of the bundle (one weight each, two for
/// WedgeQTensorQ with 1 <= r <= m-1).
std::vector<Weight> irreducible_summands(const BundleDescriptor& b);

std::vector<int> root_pairings(const Weight& w);

/// nullopt when the weight is singular.
std::optional<int> bott_index(const Weight& w);

/// Degrees q with H^q != 0.
CohomologySupport bott_support(const BundleDescriptor& b);

/// True when q = q_1 + ... + q_k for some q_i in the support of factor i.
bool kunneth_nonvanishing(const std::vector<BundleDescriptor>& factors, int q);

struct KoszulSummand {
  int r = 0;
  int slot = 0;                      // j, 0-based
  std::vector<int> composition;      // r_0..r_{k-1}, sum r
  std::vector<BundleDescriptor> factors;
};

/// Summands of wedge^r of the dual bundle twisted into slot j.  Requires
/// 2 <= r <= sum m_l + 1; throws std::out_of_range otherwise.
std::vector<KoszulSummand> enumerate_koszul_summands(const TensorFormat& format,
                                                     int r, int slot);

struct VanishingWitness {
  int r = 0;
  int slot = 0;
  std::vector<int> composition;
  std::vector<int> degrees;  // q_l per factor, sum <= r - 1
};

struct VanishingReport {
  bool all_clear = true;
  std::vector<VanishingWitness> witnesses;
};

/// Every nonvanishing product H^{q_1} (x) ... (x) H^{q_k} with
/// q_1 + ... + q_k <= r - 1, over r = 2..sum m_l and all slots.
VanishingReport vanishing_scan(const TensorFormat& format);

}  // namespace singtuple

#endif  // SINGTUPLE_COHOMOLOGY_H_
