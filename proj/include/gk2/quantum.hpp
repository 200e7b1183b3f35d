#pragma once

#include <algorithm>
#include <optional>
#include <string>

#include "gk2/curve_params.hpp"
#include "gk2/fengrao.hpp"
#include "gk2/semigroup.hpp"

namespace gk2 {

enum class QuantumRegime { large_index, intermediate };

inline const char* to_string(QuantumRegime r) { return r == QuantumRegime::large_index ? "large-index" : "intermediate"; }

/// Admissible CSS dimensions s in [s_min, s_max] for an [[N, s, D >= d_floor]] code
/// built from the nested pair C_{l+s} in C_l.
struct QuantumRange {
  int_t length = 0;
  int_t index = 0;
  int_t d_floor = 0;
  int_t s_min = 0;
  int_t s_max = 0;
  QuantumRegime regime = QuantumRegime::intermediate;
  std::optional<std::string> discrepancy;

  bool empty() const { return s_min > s_max; }
};

/// Tabulated bounds for one index, used to annotate a computed range.
struct QuantumReference {
  int_t index = 0;
  int_t d_floor = 0;
  int_t s_min = 0;
  int_t s_max = 0;
};

/// Large-index regime l in [3g - 1, N - g]: s in [1, N - 2l], D >= l + 1 - g.
inline QuantumRange range_corollary(const CurveParams& c, int_t l) {
  const int_t length = c.code_length();
  detail::require(l >= 3 * c.g - 1 && l <= length - c.g,
                  "range_corollary: l = " + std::to_string(l) + " outside [3g-1, N-g] = [" +
                      std::to_string(3 * c.g - 1) + ", " + std::to_string(length - c.g) + "]");
  QuantumRange r;
  r.length = length;
  r.index = l;
  r.d_floor = l + 1 - c.g;
  r.s_min = 1;
  r.s_max = length - 2 * l;
  r.regime = QuantumRegime::large_index;
  return r;
}

/// Intermediate regime l in [g, 3g - 1]:
/// s in [max{2g - l, 1}, min{N - 2l, N - l - g + 1 - d_ORD(C_l)}], D >= d_ORD(C_l).
inline QuantumRange range_prop(const CurveParams& c, const NumericalSemigroup& s, int_t l,
                               const std::optional<QuantumReference>& reference = std::nullopt) {
  detail::require(l >= c.g && l <= 3 * c.g - 1, "range_prop: l = " + std::to_string(l) + " outside [g, 3g-1] = [" +
                                                     std::to_string(c.g) + ", " + std::to_string(3 * c.g - 1) + "]");
  const int_t length = c.code_length();
  QuantumRange r;
  r.length = length;
  r.index = l;
  r.d_floor = d_ord(s, l);
  r.s_min = std::max<int_t>(2 * c.g - l, 1);
  r.s_max = std::min(length - 2 * l, length - l - c.g + 1 - r.d_floor);
  r.regime = QuantumRegime::intermediate;
  if (reference) {
    std::string note;
    auto diff = [&](const char* what, int_t table, int_t computed) {
      if (table == computed) return;
      if (!note.empty()) note += "; ";
      note += std::string(what) + ": table " + std::to_string(table) + ", formula " + std::to_string(computed);
    };
    diff("d_ord", reference->d_floor, r.d_floor);
    diff("s_min", reference->s_min, r.s_min);
    diff("s_max", reference->s_max, r.s_max);
    if (!note.empty()) r.discrepancy = note;
  }
  return r;
}

/// Dimensions of the nested codes C_{l+s} = C1 in C2 = C_l.
struct CssDimensions {
  int_t k_outer = 0;  // k2 = N - h(rho_l)
  int_t k_inner = 0;  // k1 = N - h(rho_{l+s})
  int_t quantum_dimension() const { return k_outer - k_inner; }
};

inline CssDimensions css_dimensions(const CurveParams& c, const NumericalSemigroup& s, int_t l, int_t extra) {
  detail::require(l >= 1 && extra >= 1, "css_dimensions: l and s must be positive");
  const int_t length = c.code_length();
  CssDimensions d;
  d.k_outer = length - s.count_nongaps_upto(s.nth_nongap(l));
  d.k_inner = length - s.count_nongaps_upto(s.nth_nongap(l + extra));
  detail::ensure(d.quantum_dimension() == extra, "css_dimensions: k2 - k1 != s");
  return d;
}

}  // namespace gk2
