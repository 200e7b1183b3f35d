#pragma once

#include <algorithm>
#include <limits>
#include <vector>

#include "gk2/curve_params.hpp"
#include "gk2/semigroup.hpp"

namespace gk2 {

/// nu_l: ordered pairs (i, j) of nongaps with rho_i + rho_j = rho_l.
inline int_t nu(const NumericalSemigroup& s, int_t l) {
  const int_t rho = s.nth_nongap(l);
  int_t count = 0;
  for (int_t a = 0; a <= rho; ++a)
    if (s.contains(a) && s.contains(rho - a)) ++count;
  return count;
}

/// First index m >= l from which nu_m = rho_m + 1 - 2g is strictly increasing
/// (rho_m + 1 >= 4g implies rho_m >= 2c - 1).
inline int_t tail_index(const NumericalSemigroup& s, int_t l) {
  int_t m = l;
  while (s.nth_nongap(m) + 1 < 4 * s.genus()) ++m;
  return m;
}

/// Feng-Rao designed distance d_ORD(C_l) = min { nu_m : m >= l }.
inline int_t d_ord(const NumericalSemigroup& s, int_t l) {
  detail::require(l >= 1, "d_ord: index must be >= 1");
  const int_t stop = tail_index(s, l);
  int_t best = std::numeric_limits<int_t>::max();
  for (int_t m = l; m <= stop; ++m) best = std::min(best, nu(s, m));
  return best;
}

/// One row of the dual one-point code table C_l = C^perp(D, rho_l P).
struct CodeTableRow {
  int_t length = 0;     // N
  int_t index = 0;      // l
  int_t dimension = 0;  // k = N - l
  int_t rho = 0;
  int_t nu = 0;
  int_t d_ord = 0;
  friend bool operator==(const CodeTableRow&, const CodeTableRow&) = default;
};

/// Rows for l = l_first..l_last; nu is evaluated once per index and d_ORD by suffix minima.
inline std::vector<CodeTableRow> code_table(const NumericalSemigroup& s, const CurveParams& c, int_t l_first,
                                            int_t l_last) {
  const int_t length = c.code_length();
  detail::require(l_first >= 1 && l_first <= l_last, "code_table: empty or invalid index range");
  detail::require(l_last <= length - 1, "code_table: index beyond N - 1");
  const int_t stop = std::max(l_last, tail_index(s, l_last));
  std::vector<int_t> nus;
  for (int_t m = l_first; m <= stop; ++m) nus.push_back(nu(s, m));
  std::vector<int_t> suffix(nus.size());
  int_t best = std::numeric_limits<int_t>::max();
  for (std::size_t i = nus.size(); i-- > 0;) {
    best = std::min(best, nus[i]);
    suffix[i] = best;
  }
  std::vector<CodeTableRow> rows;
  for (int_t l = l_first; l <= l_last; ++l) {
    const auto i = static_cast<std::size_t>(l - l_first);
    rows.push_back({length, l, length - l, s.nth_nongap(l), nus[i], suffix[i]});
  }
  return rows;
}

}  // namespace gk2
