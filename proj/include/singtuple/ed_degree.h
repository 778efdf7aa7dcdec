// Number of singular tuples of a general tensor of a given format.
//
// The count is the coefficient of t_1^{m_1} ... t_k^{m_k} in
//   prod_l sum_{i=0}^{m_l} that_l^i t_l^{m_l - i},  that_l = (sum_i d_i t_i) - t_l,
// expanded exactly.  The geometric sum is used instead of the quotient form
// so the case that_l = t_l needs no special handling.

#ifndef SINGTUPLE_ED_DEGREE_H_
#define SINGTUPLE_ED_DEGREE_H_

#include <optional>
#include <vector>

#include "singtuple/polynomial.h"
#include "singtuple/tensor.h"

namespace singtuple {

BigInt ed_degree(const TensorFormat& format);

struct StabilizationReport {
  std::vector<int> swept;       // values of m_slot
  std::vector<BigInt> values;   // ed_degree at each swept value
  int boundary = 0;             // sum of the other m_i
  std::optional<int> constant_from;  // first m_slot of the constant tail
  bool constant_beyond_boundary = false;
  std::optional<BigInt> boundary_value;
};

/// Sweeps m_slot over [first, last] with the other dims fixed.  `dims` must
/// have length k; its entry at `slot` is ignored.  Requires d_slot = 1.
StabilizationReport stabilization_check(const std::vector<int>& degrees,
                                        const std::vector<int>& dims, int slot,
                                        int first, int last);

}  // namespace singtuple

#endif  // SINGTUPLE_ED_DEGREE_H_
