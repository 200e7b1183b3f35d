#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gk2/curve_params.hpp"
#include "gk2/semigroup.hpp"

namespace gk2 {

/// Pole orders of the generating functions at the distinguished point of an orbit.
/// O1: mq + i(q^2 - q) for i = 0..s, then q^n + 1.
/// O2: q^n + 1 - k for k = 0..s, then q^n + 1 - m.
inline std::vector<int_t> generator_pole_orders(const CurveParams& c, Orbit orbit) {
  std::vector<int_t> out;
  const int_t qn1 = c.q_pow_n() + 1;
  for (int_t i = 0; i <= c.s; ++i)
    out.push_back(orbit == Orbit::o1 ? c.m * c.q + i * (c.q * c.q - c.q) : qn1 - i);
  out.push_back(orbit == Orbit::o1 ? qn1 : qn1 - c.m);
  return out;
}

/// Weierstrass semigroup at a point of O1 (infinite points).
inline NumericalSemigroup h_o1(const CurveParams& c) {
  auto s = NumericalSemigroup::from_generators(generator_pole_orders(c, Orbit::o1));
  detail::ensure(s.genus() == c.g, "h_o1: genus " + std::to_string(s.genus()) + " != g = " + std::to_string(c.g));
  return s;
}

/// Weierstrass semigroup at a point of O2 (affine F_{q^2}-rational points).
inline NumericalSemigroup h_o2(const CurveParams& c) {
  auto s = NumericalSemigroup::from_generators(generator_pole_orders(c, Orbit::o2));
  detail::ensure(s.genus() == c.g, "h_o2: genus " + std::to_string(s.genus()) + " != g = " + std::to_string(c.g));
  return s;
}

inline NumericalSemigroup weierstrass_semigroup(const CurveParams& c, Orbit orbit) {
  return orbit == Orbit::o1 ? h_o1(c) : h_o2(c);
}

/// Gap set at R built from the holomorphic differentials z^k (y-a)^j x^l dz:
/// values k + (q^n+1) j + l m + 1 under k(q^2-q) + (j+l) m <= M_q.
/// Asserts distinct triples give distinct values, |L| = g and L = gaps(h_o2).
inline std::vector<int_t> gap_set_l(const CurveParams& c) {
  const int_t qn1 = c.q_pow_n() + 1;
  const int_t qq = c.q * c.q - c.q;
  std::vector<int_t> values;
  for (int_t j = 0; j <= c.q * c.q - 2; ++j)
    for (int_t l = 0; l <= c.q; ++l)
      for (int_t k = 0; k <= c.m - 1; ++k) {
        if (k * qq + (j + l) * c.m > c.m_q) break;
        values.push_back(k + qn1 * j + l * c.m + 1);
      }
  const std::size_t raw = values.size();
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  detail::ensure(values.size() == raw, "gap_set_l: two triples produced the same value");
  detail::ensure(static_cast<int_t>(values.size()) == c.g,
                 "gap_set_l: |L| = " + std::to_string(values.size()) + " != g = " + std::to_string(c.g));
  detail::ensure(values == h_o2(c).gaps(), "gap_set_l: L differs from the gap set of H(R)");
  return values;
}

/// Largest admissible k for a given j + l (closed form).
inline int_t k_max(const CurveParams& c, int_t j_plus_l) {
  detail::require(j_plus_l >= 0, "k_max: j + l must be nonnegative");
  detail::require(j_plus_l <= c.q * c.q - 2,
                  "k_max: j + l = " + std::to_string(j_plus_l) + " >= q^2 - 1 admits no k");
  if (j_plus_l < c.q - 1) return c.m - 1;
  return c.m - 1 - (c.s * (j_plus_l - c.q + 1) + 1);
}

struct CanonicalRep {
  int_t a = 0;
  int_t b = 0;
  int_t c = 0;
  friend bool operator==(const CanonicalRep&, const CanonicalRep&) = default;
};

/// Unique x = a(mq) + b(q^2 - q) + c(q^n + 1) with 0 <= b <= m-1, 0 <= c <= q-1.
/// x lies in <mq, mq + q^2 - q, q^n + 1> iff a >= b.
inline CanonicalRep canonical_rep(const CurveParams& p, int_t x) {
  const int_t mq = p.m * p.q;
  const int_t qq = p.q * p.q - p.q;
  const int_t qn1 = p.q_pow_n() + 1;
  // x = (a q + c(q+1)) m + b(q^2-q); gcd(q^2-q, m) = 1 since m = 1 + s(q^2-q).
  const int_t b = detail::floor_mod(detail::floor_mod(x, p.m) * detail::mod_inverse(qq, p.m), p.m);
  const int_t rest = x - b * qq;  // divisible by m
  detail::ensure(rest % p.m == 0, "canonical_rep: residue mismatch");
  const int_t t = rest / p.m;  // t = a q + c (q + 1)
  const int_t c = detail::floor_mod(t, p.q);  // t = c (mod q)
  const int_t a_times_q = t - c * (p.q + 1);
  detail::ensure(a_times_q % p.q == 0, "canonical_rep: quotient mismatch");
  CanonicalRep r{a_times_q / p.q, b, c};
  detail::ensure(r.a * mq + r.b * qq + r.c * qn1 == x, "canonical_rep: reconstruction failed");
  return r;
}

/// The telescopic sub-semigroup <mq, mq + q^2 - q, q^n + 1> of H(P1).
inline std::vector<int_t> telescopic_sequence(const CurveParams& c) {
  return {c.m * c.q, c.m * c.q + c.q * c.q - c.q, c.q_pow_n() + 1};
}

/// Closed form of the genus of the telescopic sub-semigroup.
inline int_t telescopic_sub_genus_closed_form(const CurveParams& c) {
  const int_t q = c.q, m = c.m, qn = c.q_pow_n();
  const int_t twice = q * (m * m - 3 * m + 2) + q * q * (m - 1) - qn + qn * q;
  return twice / 2;
}

struct PartitionReport {
  int_t telescopic_genus = 0;  // g(S)
  int_t sieve_genus = 0;       // genus of S by sieve
  int_t family_i_total = 0;    // sum |S_i|
  int_t family_j_total = 0;    // sum |S_j|
  int_t remainder = 0;         // g(S) - sum |S_i| - sum |S_j|
  int_t g = 0;
  bool subsets_ok = false;      // every S_i, S_j lies in H1 \ S
  bool disjoint_ok = false;     // all sets pairwise disjoint
  bool cardinality_ok = false;  // |S_i| = (is - i) q, |S_j| = ((q^2-q)s - j) q
  bool genus_ok = false;        // remainder == g
  bool all_ok() const { return subsets_ok && disjoint_ok && cardinality_ok && genus_ok; }
};

/// Builds the explicit families S_i (i = 1..q^2-q-1) and S_j (j = q^2-q..(q^2-q)s-1)
/// of elements of H(P1) outside the telescopic S and checks their counting identities.
inline PartitionReport verify_partition(const CurveParams& c) {
  PartitionReport r;
  r.g = c.g;
  const int_t q = c.q, s = c.s, mq = c.m * c.q, qq = q * q - q, qn1 = c.q_pow_n() + 1;
  const auto seq = telescopic_sequence(c);
  const auto sub = NumericalSemigroup::from_generators(seq);
  const auto h1 = h_o1(c);
  r.telescopic_genus = telescopic_genus(seq);
  r.sieve_genus = sub.genus();

  std::set<int_t> seen;
  std::size_t inserted = 0;
  r.subsets_ok = true;
  r.cardinality_ok = true;

  auto build = [&](int_t idx, int_t upper) -> int_t {
    std::set<int_t> members;
    for (int_t k = 1; k <= upper; ++k)
      for (int_t k3 = 0; k3 <= q - 1; ++k3) {
        const int_t x = idx * mq + (idx + k) * qq + k3 * qn1;
        if (!h1.contains(x) || sub.contains(x)) r.subsets_ok = false;
        members.insert(x);
      }
    for (int_t x : members) {
      seen.insert(x);
      ++inserted;
    }
    return static_cast<int_t>(members.size());
  };

  for (int_t i = 1; i <= qq - 1; ++i) {
    const int_t size = build(i, i * s - i);
    if (size != std::max<int_t>(i * s - i, 0) * q) r.cardinality_ok = false;
    r.family_i_total += size;
  }
  for (int_t j = qq; j <= qq * s - 1; ++j) {
    const int_t size = build(j, qq * s - j);
    if (size != (qq * s - j) * q) r.cardinality_ok = false;
    r.family_j_total += size;
  }
  r.disjoint_ok = seen.size() == inserted;
  r.remainder = r.telescopic_genus - r.family_i_total - r.family_j_total;
  r.genus_ok = r.remainder == c.g && r.sieve_genus == r.telescopic_genus;
  return r;
}

/// Frobenius dimension of GK_{2,n}: s + 2. Stated for n >= 5.
inline int_t frobenius_dim_gk2(const CurveParams& c) {
  detail::require(c.n >= 5, "frobenius_dim_gk2: formula holds for n >= 5 only (n = " + std::to_string(c.n) + ")");
  return (c.m - 1) / (c.q * c.q - c.q) + 2;
}

/// Frobenius dimension of GK_{1,n}: q^{n-3} + sum_{i=2}^{n-2} (-1)^{i+1} q^i + 1.
inline int_t frobenius_dim_gk1(const CurveParams& c) {
  int_t r = detail::ipow(c.q, c.n - 3) + 1;
  for (int_t i = 2; i <= c.n - 2; ++i) {
    const int_t term = detail::ipow(c.q, i);
    r = (i % 2 == 1) ? detail::checked_add(r, term) : detail::checked_sub(r, term);
  }
  return r;
}

/// 1 + number of nonzero nongaps <= q^n of <gens>, evaluated by a sieve up to q^n.
inline int_t frobenius_dim_by_count(const CurveParams& c, Orbit orbit) {
  const int_t bound = c.q_pow_n();
  detail::require(bound <= 1'000'000, "frobenius_dim_by_count: q^n too large for a direct sieve");
  const auto gens = generator_pole_orders(c, orbit);
  std::vector<char> in(static_cast<std::size_t>(bound + 1), 0);
  in[0] = 1;
  int_t count = 0;
  for (int_t x = 1; x <= bound; ++x) {
    for (int_t g : gens)
      if (g <= x && in[static_cast<std::size_t>(x - g)]) {
        in[static_cast<std::size_t>(x)] = 1;
        ++count;
        break;
      }
  }
  return count + 1;
}

/// True iff the Frobenius dimensions of GK_{1,n} and GK_{2,n} differ;
/// std::nullopt for n = 3, where the GK_{2,n} formula is not asserted.
inline std::optional<bool> non_isomorphism_check(int_t q, int_t n) {
  const auto c = CurveParams::make(q, n);
  if (n < 5) return std::nullopt;
  return frobenius_dim_gk1(c) != frobenius_dim_gk2(c);
}

}  // namespace gk2
