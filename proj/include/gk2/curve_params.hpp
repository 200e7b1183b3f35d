#pragma once

#include <string>

#include "gk2/error.hpp"
#include "gk2/integer.hpp"

namespace gk2 {

/// The two orbits of F_{q^2}-rational points: O1 the q+1 points at infinity,
/// O2 the q^3 - q affine ones.
enum class Orbit { o1, o2 };

inline const char* to_string(Orbit o) { return o == Orbit::o1 ? "O1" : "O2"; }

inline Orbit parse_orbit(const std::string& s) {
  if (s == "O1" || s == "o1" || s == "1") return Orbit::o1;
  if (s == "O2" || s == "o2" || s == "2") return Orbit::o2;
  throw invalid_argument("unknown orbit '" + s + "', expected O1 or O2");
}

/// Scalars of the curve GK_{2,n} over F_{q^{2n}}.
struct CurveParams {
  int_t q = 0;
  int_t n = 0;
  int_t p = 0;      // characteristic
  int_t e = 0;      // q = p^e
  int_t m = 0;      // (q^n + 1) / (q + 1)
  int_t s = 0;      // (m - 1) / (q^2 - q)
  int_t g = 0;      // genus
  int_t n_rat = 0;  // number of F_{q^{2n}}-rational points
  int_t m_q = 0;    // pole budget of holomorphic differentials, (2g - 2) / (q + 1)

  static CurveParams make(int_t q, int_t n) {
    using namespace detail;
    CurveParams c;
    require(prime_power(q, c.p, c.e), "q = " + std::to_string(q) + " is not a prime power");
    require(n >= 3 && n % 2 == 1, "n = " + std::to_string(n) + " must be an odd integer >= 3");
    c.q = q;
    c.n = n;
    const int_t qn = ipow(q, n);
    const int_t qq = q * q - q;
    ensure((qn + 1) % (q + 1) == 0, "q + 1 does not divide q^n + 1");
    c.m = (qn + 1) / (q + 1);
    ensure((c.m - 1) % qq == 0, "q^2 - q does not divide m - 1");
    c.s = (c.m - 1) / qq;
    const int_t twice_g = checked_mul(q - 1, checked_sub(checked_add(checked_mul(qn, q), qn), q * q));
    ensure(twice_g % 2 == 0, "genus numerator is odd");
    c.g = twice_g / 2;
    c.n_rat = checked_add(checked_add(checked_mul(qn, qn), 1), checked_mul(checked_mul(2, c.g), qn));
    c.m_q = checked_mul(qn, q) - qn - q * q + 2 * q - 2;
    ensure(checked_mul(c.m_q, q + 1) == 2 * c.g - 2, "(q + 1) * M_q != 2g - 2");
    return c;
  }

  int_t q_pow_n() const { return detail::ipow(q, n); }

  /// Length of the one-point codes: all rational points but the distinguished one.
  int_t code_length() const { return n_rat - 1; }

  /// Extension degree of F_{q^{2n}} over F_p.
  int_t field_degree() const { return 2 * n * e; }
};

}  // namespace gk2
