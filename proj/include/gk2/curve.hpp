#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "gk2/curve_params.hpp"
#include "gk2/gf.hpp"
#include "gk2/gk2_semigroups.hpp"
#include "gk2/semigroup.hpp"

namespace gk2 {

enum class PointClass { o1, o2, generic };

inline const char* to_string(PointClass c) {
  switch (c) {
    case PointClass::o1: return "O1";
    case PointClass::o2: return "O2";
    case PointClass::generic: return "generic";
  }
  return "?";
}

/// Rational point of GK_{2,n}: affine (x, y, z) or the infinite point (1 : a : 0 : 0) with a^{q+1} = 1.
struct CurvePoint {
  enum class Kind { affine, infinity };
  Kind kind = Kind::affine;
  GfElement x, y, z;
  GfElement a;
  PointClass cls = PointClass::generic;

  bool is_infinite() const { return kind == Kind::infinity; }

  /// Deterministic order: affine points by (x, y, z), then infinite points by a.
  friend bool operator<(const CurvePoint& l, const CurvePoint& r) {
    if (l.kind != r.kind) return l.kind == Kind::affine;
    if (l.kind == Kind::infinity) return l.a < r.a;
    if (l.x != r.x) return l.x < r.x;
    if (l.y != r.y) return l.y < r.y;
    return l.z < r.z;
  }
  friend bool operator==(const CurvePoint& l, const CurvePoint& r) {
    if (l.kind != r.kind) return false;
    if (l.kind == Kind::infinity) return l.a == r.a;
    return l.x == r.x && l.y == r.y && l.z == r.z;
  }
};

inline std::string describe(const CurvePoint& p) {
  if (p.is_infinite()) return "(1 : " + std::to_string(p.a.serial()) + " : 0 : 0)";
  return "(" + std::to_string(p.x.serial()) + ", " + std::to_string(p.y.serial()) + ", " +
         std::to_string(p.z.serial()) + ")";
}

/// The field F_{q^{2n}} for a parameter set, within the 2^20 table limit.
inline GfContext make_curve_field(const CurveParams& c) {
  return GfContext::make(static_cast<std::uint32_t>(c.p), static_cast<std::uint32_t>(c.field_degree()));
}

namespace detail {

inline void check_field(const CurveParams& c, const GfContext& f) {
  require(f.characteristic() == static_cast<std::uint32_t>(c.p) &&
              f.degree() == static_cast<std::uint32_t>(c.field_degree()),
          "field does not match F_{q^{2n}} for q = " + std::to_string(c.q) + ", n = " + std::to_string(c.n));
}

inline std::uint32_t subfield_q2_degree(const CurveParams& c) { return static_cast<std::uint32_t>(2 * c.e); }

}  // namespace detail

/// O1 for infinite points, O2 for affine points with x, y, z in F_{q^2}, generic otherwise.
inline PointClass classify_point(const CurveParams& c, const GfContext& f, const CurvePoint& p) {
  if (p.is_infinite()) return PointClass::o1;
  const auto d = detail::subfield_q2_degree(c);
  if (f.in_subfield(p.x, d) && f.in_subfield(p.y, d) && f.in_subfield(p.z, d)) return PointClass::o2;
  return PointClass::generic;
}

/// Affine points above a single x.
inline void points_over_x(const CurveParams& c, const GfContext& f, GfElement x, std::vector<CurvePoint>& out) {
  const int_t q = c.q;
  const GfElement xq1 = f.pow(x, q + 1);
  if (xq1 == f.one()) {
    // y = 0; both sides of the z-equation vanish, the single smooth point has z = 0.
    out.push_back({CurvePoint::Kind::affine, x, f.zero(), f.zero(), {}, PointClass::generic});
    return;
  }
  const GfElement denom = f.sub(xq1, f.one());
  const GfElement artin = f.sub(f.pow(x, q * q), x);
  for (GfElement y : f.nth_roots(denom, q + 1)) {
    const GfElement rhs = f.div(f.mul(y, artin), denom);
    for (GfElement z : f.nth_roots(rhs, c.m)) out.push_back({CurvePoint::Kind::affine, x, y, z, {}, PointClass::generic});
  }
}

/// All F_{q^{2n}}-rational points, sorted deterministically and classified.
/// Asserts the count equals q^{2n} + 1 + 2g q^n. `threads` = 0 uses the hardware concurrency.
inline std::vector<CurvePoint> enumerate_points(const CurveParams& c, const GfContext& f, unsigned threads = 1) {
  detail::check_field(c, f);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::uint32_t size = f.size();
  threads = std::min<unsigned>(threads, std::max<std::uint32_t>(1, size / 1024));
  std::vector<std::vector<CurvePoint>> parts(threads);
  auto work = [&](unsigned t) {
    const std::uint32_t lo = static_cast<std::uint32_t>(std::uint64_t{size} * t / threads);
    const std::uint32_t hi = static_cast<std::uint32_t>(std::uint64_t{size} * (t + 1) / threads);
    for (std::uint32_t v = lo; v < hi; ++v) points_over_x(c, f, GfElement{v}, parts[t]);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  std::vector<CurvePoint> pts;
  for (auto& part : parts) pts.insert(pts.end(), part.begin(), part.end());
  for (GfElement a : f.nth_roots(f.one(), c.q + 1))
    pts.push_back({CurvePoint::Kind::infinity, {}, {}, {}, a, PointClass::o1});
  for (auto& p : pts) p.cls = classify_point(c, f, p);
  std::sort(pts.begin(), pts.end());
  detail::ensure(static_cast<int_t>(pts.size()) == c.n_rat, "enumerate_points: found " + std::to_string(pts.size()) +
                                                                 " points, expected " + std::to_string(c.n_rat));
  return pts;
}

/// The distinguished infinite point P1 = (1 : -1 : 0 : 0).
inline CurvePoint distinguished_o1(const GfContext& f) {
  return {CurvePoint::Kind::infinity, {}, {}, {}, f.neg(f.one()), PointClass::o1};
}

/// The a with a^{q+1} = -1 of least serial value, used for R = (0, a, 0).
inline GfElement distinguished_a(const CurveParams& c, const GfContext& f) {
  const auto roots = f.nth_roots(f.neg(f.one()), c.q + 1);
  detail::ensure(!roots.empty(), "no (q+1)-th root of -1 in the field");
  return roots.front();
}

inline CurvePoint distinguished_o2(const CurveParams& c, const GfContext& f) {
  return {CurvePoint::Kind::affine, f.zero(), distinguished_a(c, f), f.zero(), {}, PointClass::o2};
}

inline CurvePoint distinguished_point(const CurveParams& c, const GfContext& f, Orbit orbit) {
  return orbit == Orbit::o1 ? distinguished_o1(f) : distinguished_o2(c, f);
}

/// Monomial in the generating functions of an orbit.
/// O1: exponents[k] on theta_k = z^k / (x + y), k = 0..s, last entry on alpha = (x - 1)/(x + y).
/// O2: exponents[k] on f_k = z^k / (y - a), k = 0..s, last entry on f = x / (y - a).
struct PoleBasisFunction {
  Orbit orbit = Orbit::o1;
  std::vector<int_t> exponents;
  int_t pole_order = 0;
};

inline int_t pole_order_of(const CurveParams& c, Orbit orbit, const std::vector<int_t>& exponents) {
  const auto gens = generator_pole_orders(c, orbit);
  detail::require(exponents.size() == gens.size(), "pole basis: exponent vector has wrong length");
  int_t total = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) total += exponents[i] * gens[i];
  return total;
}

/// Exponent vector realising `target` as a combination of the generator pole orders,
/// lexicographically smallest in generator order.
inline std::vector<int_t> represent(const std::vector<int_t>& gens, int_t target) {
  const std::size_t k = gens.size();
  // reach[i][v]: v is a nonnegative combination of gens[i..k-1]
  std::vector<std::vector<char>> reach(k + 1, std::vector<char>(static_cast<std::size_t>(target + 1), 0));
  reach[k][0] = 1;
  for (std::size_t i = k; i-- > 0;)
    for (int_t v = 0; v <= target; ++v) {
      const auto uv = static_cast<std::size_t>(v);
      reach[i][uv] = reach[i + 1][uv] || (v >= gens[i] && reach[i][uv - static_cast<std::size_t>(gens[i])]);
    }
  detail::ensure(reach[0][static_cast<std::size_t>(target)],
                 "pole basis: nongap " + std::to_string(target) + " is not representable");
  std::vector<int_t> e(k, 0);
  int_t rest = target;
  for (std::size_t i = 0; i < k; ++i) {
    while (!reach[i + 1][static_cast<std::size_t>(rest)]) {
      rest -= gens[i];
      ++e[i];
    }
  }
  return e;
}

/// One function per nongap rho_1..rho_l: a basis of L(rho_l P) with distinct pole orders.
inline std::vector<PoleBasisFunction> build_basis(const CurveParams& c, Orbit orbit, int_t l) {
  detail::require(l >= 1, "build_basis: l must be >= 1");
  const auto gens = generator_pole_orders(c, orbit);
  const auto sg = NumericalSemigroup::from_generators(gens);
  std::vector<PoleBasisFunction> basis;
  for (int_t i = 1; i <= l; ++i) {
    const int_t rho = sg.nth_nongap(i);
    PoleBasisFunction fn{orbit, represent(gens, rho), rho};
    detail::ensure(pole_order_of(c, orbit, fn.exponents) == rho, "build_basis: pole order mismatch");
    basis.push_back(std::move(fn));
  }
  return basis;
}

/// Value of a basis monomial at a rational point other than the orbit's distinguished point.
/// At non-distinguished infinite points theta_k and f_k vanish (positive valuation
/// m - k(q^2 - q)); alpha -> 1/(1 + a) and f -> 1/a there.
inline GfElement eval_basis(const CurveParams& c, const GfContext& f, const PoleBasisFunction& fn,
                            const CurvePoint& pt) {
  const std::size_t last = fn.exponents.size() - 1;
  detail::require(fn.exponents.size() == static_cast<std::size_t>(c.s + 2), "eval_basis: malformed exponent vector");
  const GfElement minus_one = f.neg(f.one());

  if (pt.is_infinite()) {
    if (fn.orbit == Orbit::o1 && pt.a == minus_one)
      throw invalid_argument("eval_basis: P1 is the pole of every O1 basis function");
    for (std::size_t k = 0; k < last; ++k)
      if (fn.exponents[k] > 0) return f.zero();
    const GfElement base = fn.orbit == Orbit::o1 ? f.inv(f.add(f.one(), pt.a)) : f.inv(pt.a);
    return f.pow(base, fn.exponents[last]);
  }

  GfElement denom;
  GfElement last_numerator;
  if (fn.orbit == Orbit::o1) {
    denom = f.add(pt.x, pt.y);
    last_numerator = f.sub(pt.x, f.one());
  } else {
    const GfElement a = distinguished_a(c, f);
    if (pt.x == f.zero() && pt.y == a && pt.z == f.zero())
      throw invalid_argument("eval_basis: R is the pole of every O2 basis function");
    denom = f.sub(pt.y, a);
    last_numerator = pt.x;
  }
  int_t total = 0;
  for (int_t e : fn.exponents) total += e;
  if (denom == f.zero()) {
    if (total == 0) return f.one();
    throw needs_local_resolution("eval_basis: denominator vanishes at affine point " + describe(pt));
  }
  GfElement value = f.one();
  for (std::size_t k = 0; k < last; ++k)
    if (fn.exponents[k] > 0) value = f.mul(value, f.pow(pt.z, static_cast<int_t>(k) * fn.exponents[k]));
  value = f.mul(value, f.pow(last_numerator, fn.exponents[last]));
  return f.mul(value, f.pow(f.inv(denom), total));
}

/// Dense row-major matrix over a finite field.
struct FieldMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<GfElement> data;

  GfElement& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const GfElement& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Evaluation-code generator matrix: row i is the i-th basis function of L(rho_l P)
/// on D = every rational point except the distinguished one, in enumeration order.
struct CodeMatrix {
  FieldMatrix matrix;
  std::vector<CurvePoint> support;
  std::vector<PoleBasisFunction> basis;
};

inline CodeMatrix code_matrix(const CurveParams& c, const GfContext& f, const std::vector<CurvePoint>& points,
                              Orbit orbit, int_t l) {
  detail::check_field(c, f);
  const CurvePoint dist = distinguished_point(c, f, orbit);
  CodeMatrix out;
  for (const auto& p : points)
    if (!(p == dist)) out.support.push_back(p);
  detail::ensure(out.support.size() + 1 == points.size(), "code_matrix: distinguished point not among the points");
  out.basis = build_basis(c, orbit, l);
  out.matrix.rows = out.basis.size();
  out.matrix.cols = out.support.size();
  out.matrix.data.resize(out.matrix.rows * out.matrix.cols);
  for (std::size_t r = 0; r < out.basis.size(); ++r)
    for (std::size_t j = 0; j < out.support.size(); ++j) {
      try {
        out.matrix.at(r, j) = eval_basis(c, f, out.basis[r], out.support[j]);
      } catch (const needs_local_resolution& e) {
        throw needs_local_resolution(std::string(e.what()) + " (basis row " + std::to_string(r) + ", pole order " +
                                     std::to_string(out.basis[r].pole_order) + ")");
      }
    }
  return out;
}

/// Rank by Gaussian elimination.
inline std::size_t rank(FieldMatrix m, const GfContext& f) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols && r < m.rows; ++col) {
    std::size_t piv = r;
    while (piv < m.rows && m.at(piv, col) == f.zero()) ++piv;
    if (piv == m.rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    const GfElement inv = f.inv(m.at(r, col));
    for (std::size_t j = col; j < m.cols; ++j) m.at(r, j) = f.mul(m.at(r, j), inv);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, col) == f.zero()) continue;
      const GfElement factor = m.at(i, col);
      for (std::size_t j = col; j < m.cols; ++j) m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
    }
    ++r;
  }
  return r;
}

/// Exact minimum Hamming weight of the row space, scanning one representative per
/// projective class (first nonzero coefficient 1). Rejects instances above `max_work`
/// codeword-coordinate evaluations.
inline std::size_t min_weight_exhaustive(const FieldMatrix& m, const GfContext& f,
                                         std::uint64_t max_work = 400'000'000) {
  detail::require(m.rows >= 1, "min_weight_exhaustive: empty matrix");
  const std::uint64_t q = f.size();
  long double classes = 0;
  for (std::size_t i = 0; i < m.rows; ++i) {
    long double t = 1;
    for (std::size_t j = 0; j < i; ++j) t *= static_cast<long double>(q);
    classes += t;
  }
  const long double work = classes * static_cast<long double>(m.cols);
  detail::require(work <= static_cast<long double>(max_work),
                  "min_weight_exhaustive: instance too large (about " + std::to_string(static_cast<double>(work)) +
                      " evaluations, limit " + std::to_string(max_work) + ")");
  std::size_t best = m.cols + 1;
  std::vector<GfElement> word(m.cols);
  // Lead row r has coefficient 1, rows after it run over all of F_q.
  for (std::size_t lead = 0; lead < m.rows; ++lead) {
    const std::size_t free_rows = m.rows - lead - 1;
    std::vector<std::uint32_t> coeff(free_rows, 0);
    while (true) {
      for (std::size_t j = 0; j < m.cols; ++j) word[j] = m.at(lead, j);
      for (std::size_t i = 0; i < free_rows; ++i) {
        if (coeff[i] == 0) continue;
        const GfElement a{coeff[i]};
        for (std::size_t j = 0; j < m.cols; ++j) word[j] = f.add(word[j], f.mul(a, m.at(lead + 1 + i, j)));
      }
      std::size_t w = 0;
      for (const auto& x : word) w += x != f.zero();
      if (w > 0) best = std::min(best, w);
      std::size_t i = 0;
      while (i < free_rows && ++coeff[i] == q) coeff[i++] = 0;
      if (i == free_rows) break;
    }
  }
  detail::ensure(best <= m.cols, "min_weight_exhaustive: all codewords are zero");
  return best;
}

/// Matrix file: header "N=<int> L=<int> p=<int> deg=<int>", then one line per row of
/// space-separated serialized elements.
inline void write_matrix(std::ostream& os, const FieldMatrix& m, const GfContext& f) {
  os << "N=" << m.cols << " L=" << m.rows << " p=" << f.characteristic() << " deg=" << f.degree() << '\n';
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (j) os << ' ';
      os << m.at(r, j).serial();
    }
    os << '\n';
  }
}

}  // namespace gk2
