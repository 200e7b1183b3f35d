#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gk2/error.hpp"
#include "gk2/integer.hpp"

namespace gk2 {

/// Element of F_{p^deg}. `value` is the serialized form sum c_i p^i of the
/// coefficient vector in the polynomial basis (c_0 is the constant term).
struct GfElement {
  std::uint32_t value = 0;

  std::uint64_t serial() const { return value; }
  friend auto operator<=>(const GfElement&, const GfElement&) = default;
};

/// Arithmetic context for F_{p^deg} modulo a fixed irreducible polynomial.
/// Immutable after construction; multiplication goes through log/exp tables.
class GfContext {
 public:
  static constexpr std::uint64_t max_size = std::uint64_t{1} << 20;

  /// Field of size p^deg with modulus the first irreducible monic polynomial of
  /// degree deg when coefficient vectors are compared constant term first.
  static GfContext make(std::uint32_t p, std::uint32_t deg) {
    detail::require(detail::is_prime(p), "make_field: p = " + std::to_string(p) + " is not prime");
    detail::require(deg >= 1, "make_field: degree must be >= 1");
    std::uint64_t size = 1;
    for (std::uint32_t i = 0; i < deg; ++i) {
      size *= p;
      detail::require(size <= max_size, "make_field: p^deg exceeds 2^20");
    }
    return GfContext(p, deg, static_cast<std::uint32_t>(size));
  }

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return deg_; }
  std::uint32_t size() const { return size_; }
  std::uint32_t multiplicative_order() const { return size_ - 1; }

  /// Monic modulus, coefficients low to high (length deg + 1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  GfElement primitive() const { return primitive_; }

  GfElement zero() const { return {0}; }
  GfElement one() const { return {1}; }

  GfElement from_serial(std::uint64_t v) const {
    detail::require(v < size_, "element serial " + std::to_string(v) + " out of range");
    return {static_cast<std::uint32_t>(v)};
  }

  /// The prime-field element k mod p.
  GfElement scalar(int_t k) const { return {static_cast<std::uint32_t>(detail::floor_mod(k, p_))}; }

  std::vector<std::uint32_t> coefficients(GfElement a) const {
    std::vector<std::uint32_t> c(deg_);
    std::uint32_t v = a.value;
    for (std::uint32_t i = 0; i < deg_; ++i) {
      c[i] = v % p_;
      v /= p_;
    }
    return c;
  }

  GfElement from_coefficients(std::span<const std::uint32_t> c) const {
    detail::require(c.size() <= deg_, "from_coefficients: too many coefficients");
    std::uint32_t v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * p_ + c[i] % p_;
    return {v};
  }

  GfElement add(GfElement a, GfElement b) const {
    if (p_ == 2) return {a.value ^ b.value};
    std::uint32_t x = a.value, y = b.value, out = 0;
    for (std::uint32_t i = 0; i < deg_; ++i) {
      out += ((x % p_ + y % p_) % p_) * pow_p_[i];
      x /= p_;
      y /= p_;
    }
    return {out};
  }

  GfElement neg(GfElement a) const {
    if (p_ == 2) return a;
    std::uint32_t x = a.value, out = 0;
    for (std::uint32_t i = 0; i < deg_; ++i) {
      out += ((p_ - x % p_) % p_) * pow_p_[i];
      x /= p_;
    }
    return {out};
  }

  GfElement sub(GfElement a, GfElement b) const { return add(a, neg(b)); }

  GfElement mul(GfElement a, GfElement b) const {
    if (a.value == 0 || b.value == 0) return zero();
    const std::uint32_t q1 = size_ - 1;
    return {exp_[(log_[a.value] + log_[b.value]) % q1]};
  }

  GfElement inv(GfElement a) const {
    detail::require(a.value != 0, "inverse of zero");
    const std::uint32_t q1 = size_ - 1;
    return {exp_[(q1 - log_[a.value]) % q1]};
  }

  GfElement div(GfElement a, GfElement b) const { return mul(a, inv(b)); }

  GfElement pow(GfElement a, int_t e) const {
    if (a.value == 0) {
      detail::require(e >= 0, "negative power of zero");
      return e == 0 ? one() : zero();
    }
    const int_t q1 = size_ - 1;
    const int_t k = detail::floor_mod(static_cast<int_t>(log_[a.value]) * detail::floor_mod(e, q1), q1);
    return {exp_[static_cast<std::size_t>(k)]};
  }

  /// a^{p^k}.
  GfElement frobenius(GfElement a, std::uint32_t k = 1) const {
    for (std::uint32_t i = 0; i < k; ++i) a = pow(a, p_);
    return a;
  }

  /// Discrete logarithm to the base primitive().
  std::uint32_t log(GfElement a) const {
    detail::require(a.value != 0, "log of zero");
    return log_[a.value];
  }

  GfElement exp(int_t k) const { return {exp_[static_cast<std::size_t>(detail::floor_mod(k, size_ - 1))]}; }

  /// All t with t^d = c, sorted by serial value.
  std::vector<GfElement> nth_roots(GfElement c, int_t d) const {
    detail::require(d >= 1, "nth_roots: exponent must be >= 1");
    if (c.value == 0) return {zero()};
    const int_t q1 = size_ - 1;
    const int_t g = std::gcd(d, q1);
    const int_t e = log_[c.value];
    if (e % g != 0) return {};
    const int_t step = q1 / g;
    const int_t base = detail::floor_mod((e / g) * detail::mod_inverse(d / g, step), step);
    std::vector<GfElement> roots;
    for (int_t k = 0; k < g; ++k) roots.push_back(exp(base + k * step));
    std::sort(roots.begin(), roots.end());
    return roots;
  }

  bool in_subfield(GfElement a, std::uint32_t sub_deg) const { return frobenius(a, sub_deg) == a; }

  /// Elements of the subfield F_{p^sub_deg}, sorted by serial value.
  std::vector<GfElement> subfield_elements(std::uint32_t sub_deg) const {
    detail::require(sub_deg >= 1 && deg_ % sub_deg == 0,
                    "subfield_elements: " + std::to_string(sub_deg) + " does not divide " + std::to_string(deg_));
    std::uint32_t sub_size = 1;
    for (std::uint32_t i = 0; i < sub_deg; ++i) sub_size *= p_;
    const std::uint32_t stride = (size_ - 1) / (sub_size - 1);
    std::vector<GfElement> out{zero()};
    for (std::uint32_t k = 0; k + 1 < sub_size; ++k) out.push_back({exp_[k * stride]});
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  using Poly = std::vector<std::uint32_t>;

  GfContext(std::uint32_t p, std::uint32_t deg, std::uint32_t size) : p_(p), deg_(deg), size_(size) {
    pow_p_.resize(deg_);
    std::uint32_t w = 1;
    for (std::uint32_t i = 0; i < deg_; ++i) {
      pow_p_[i] = w;
      w *= p_;
    }
    choose_modulus();
    choose_primitive();
    build_tables();
  }

  // ---- dense polynomial helpers over F_p, coefficients low to high ----

  static void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }

  Poly poly_mod(Poly a, const Poly& m) const {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint32_t lead_inv = static_cast<std::uint32_t>(detail::mod_inverse(m.back(), p_));
    while (a.size() >= m.size()) {
      const std::uint32_t f = static_cast<std::uint32_t>((std::uint64_t{a.back()} * lead_inv) % p_);
      const std::size_t shift = a.size() - 1 - dm;
      for (std::size_t i = 0; i <= dm; ++i)
        a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + std::uint64_t{p_ - f} * m[i]) % p_);
      trim(a);
    }
    return a;
  }

  Poly poly_mulmod(const Poly& a, const Poly& b) const {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j)
        r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p_);
    }
    return poly_mod(std::move(r), modulus_);
  }

  Poly poly_powmod(Poly base, std::uint64_t e) const {
    Poly r{1};
    base = poly_mod(std::move(base), modulus_);
    while (e > 0) {
      if (e & 1) r = poly_mulmod(r, base);
      base = poly_mulmod(base, base);
      e >>= 1;
    }
    return r;
  }

  Poly to_poly(std::uint32_t v) const {
    Poly a(deg_);
    for (std::uint32_t i = 0; i < deg_; ++i) {
      a[i] = v % p_;
      v /= p_;
    }
    trim(a);
    return a;
  }

  std::uint32_t from_poly(const Poly& a) const {
    std::uint32_t v = 0;
    for (std::size_t i = a.size(); i-- > 0;) v = v * p_ + a[i];
    return v;
  }

  bool irreducible(const Poly& f) const {
    const std::uint32_t d = static_cast<std::uint32_t>(f.size() - 1);
    // trial division by every monic polynomial of degree 1..d/2
    for (std::uint32_t k = 1; 2 * k <= d; ++k) {
      std::uint64_t count = 1;
      for (std::uint32_t i = 0; i < k; ++i) count *= p_;
      for (std::uint64_t t = 0; t < count; ++t) {
        Poly div(k + 1);
        std::uint64_t v = t;
        for (std::uint32_t i = 0; i < k; ++i) {
          div[i] = static_cast<std::uint32_t>(v % p_);
          v /= p_;
        }
        div[k] = 1;
        if (poly_mod(f, div).empty()) return false;
      }
    }
    return true;
  }

  void choose_modulus() {
    // Counter t enumerates (c_0, ..., c_{deg-1}) with c_0 the most significant digit.
    for (std::uint32_t t = 0; t < size_; ++t) {
      Poly f(deg_ + 1);
      std::uint32_t v = t;
      for (std::uint32_t i = 0; i < deg_; ++i) {
        f[deg_ - 1 - i] = v % p_;
        v /= p_;
      }
      f[deg_] = 1;
      if (irreducible(f)) {
        modulus_ = f;
        return;
      }
    }
    throw consistency_error("make_field: no irreducible polynomial found");
  }

  void choose_primitive() {
    const std::uint64_t order = size_ - 1;
    std::vector<std::uint64_t> primes;
    std::uint64_t r = order;
    for (std::uint64_t d = 2; d * d <= r; ++d) {
      if (r % d == 0) {
        primes.push_back(d);
        while (r % d == 0) r /= d;
      }
    }
    if (r > 1) primes.push_back(r);
    for (std::uint32_t v = 1; v < size_; ++v) {
      const Poly a = to_poly(v);
      bool full = true;
      for (std::uint64_t pr : primes) {
        if (!full) break;
        if (poly_powmod(a, order / pr) == Poly{1}) full = false;
      }
      if (full) {
        primitive_ = {v};
        return;
      }
    }
    throw consistency_error("make_field: no primitive element found");
  }

  void build_tables() {
    const std::uint32_t q1 = size_ - 1;
    exp_.assign(q1, 0);
    log_.assign(size_, 0);
    Poly g = to_poly(primitive_.value);
    g.resize(deg_, 0);
    std::vector<std::uint64_t> prod(2 * deg_, 0);
    Poly cur(deg_, 0);
    cur[0] = 1;
    for (std::uint32_t k = 0; k < q1; ++k) {
      std::uint32_t v = 0;
      for (std::size_t i = deg_; i-- > 0;) v = v * p_ + cur[i];
      detail::ensure(k == 0 || v != 1, "make_field: primitive element has short order");
      exp_[k] = v;
      log_[v] = k;
      // cur <- cur * g mod modulus (monic), without reallocation
      std::fill(prod.begin(), prod.end(), 0);
      for (std::uint32_t i = 0; i < deg_; ++i) {
        if (cur[i] == 0) continue;
        for (std::uint32_t j = 0; j < deg_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{cur[i]} * g[j]) % p_;
      }
      for (std::size_t top = 2 * deg_ - 1; top-- > deg_;) {
        const std::uint64_t f = prod[top];
        if (f == 0) continue;
        const std::size_t shift = top - deg_;
        for (std::uint32_t i = 0; i <= deg_; ++i) prod[shift + i] = (prod[shift + i] + (p_ - f) * modulus_[i]) % p_;
      }
      for (std::uint32_t i = 0; i < deg_; ++i) cur[i] = static_cast<std::uint32_t>(prod[i]);
    }
    Poly last = cur;
    trim(last);
    detail::ensure(last == Poly{1}, "make_field: primitive element order mismatch");
  }

  std::uint32_t p_;
  std::uint32_t deg_;
  std::uint32_t size_;
  std::vector<std::uint32_t> pow_p_;
  Poly modulus_;
  GfElement primitive_{};
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

}  // namespace gk2
