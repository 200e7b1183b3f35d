#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "gk2/error.hpp"
#include "gk2/integer.hpp"

namespace gk2 {

/// Numerical semigroup given by a finite generating set with gcd 1.
///
/// Membership is materialised up to conductor + max(generators); every
/// integer at or beyond the conductor is a member. Nongaps are 1-indexed
/// with nth_nongap(1) == 0.
class NumericalSemigroup {
 public:
  static NumericalSemigroup from_generators(std::span<const int_t> gens) {
    detail::require(!gens.empty(), "numerical semigroup: empty generator set");
    std::vector<int_t> sorted(gens.begin(), gens.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    int_t d = 0;
    for (int_t g : sorted) {
      detail::require(g > 0, "numerical semigroup: generators must be positive, got " + std::to_string(g));
      d = std::gcd(d, g);
    }
    detail::require(d == 1, "numerical semigroup: gcd of generators is " + std::to_string(d) + ", expected 1");
    return NumericalSemigroup(std::move(sorted));
  }

  static NumericalSemigroup from_generators(std::initializer_list<int_t> gens) {
    return from_generators(std::span<const int_t>(gens.begin(), gens.size()));
  }

  const std::vector<int_t>& generators() const { return generators_; }
  int_t conductor() const { return conductor_; }
  int_t genus() const { return static_cast<int_t>(gaps_.size()); }
  const std::vector<int_t>& gaps() const { return gaps_; }

  /// Sorted nongaps 0 = rho_1 < rho_2 < ... up to conductor + max(generators).
  const std::vector<int_t>& nongaps() const { return nongaps_; }

  bool contains(int_t x) const {
    if (x < 0) return false;
    if (x >= conductor_) return true;
    return member_[static_cast<std::size_t>(x)] != 0;
  }

  int_t nth_nongap(int_t l) const {
    detail::require(l >= 1, "nth_nongap: index must be >= 1");
    if (l <= static_cast<int_t>(nongaps_.size())) return nongaps_[static_cast<std::size_t>(l - 1)];
    return l + genus() - 1;
  }

  /// Number of nongaps <= x.
  int_t count_nongaps_upto(int_t x) const {
    if (x < 0) return 0;
    if (x >= conductor_) return x + 1 - genus();
    return static_cast<int_t>(std::upper_bound(nongaps_.begin(), nongaps_.end(), x) - nongaps_.begin());
  }

  /// Index l with nth_nongap(l) == rho; rho must be a nongap.
  int_t index_of(int_t rho) const {
    detail::require(contains(rho), "index_of: " + std::to_string(rho) + " is a gap");
    return count_nongaps_upto(rho);
  }

  /// Symmetric iff 2g - 1 is a gap. The trivial semigroup N counts as symmetric.
  bool is_symmetric() const { return genus() == 0 || !contains(2 * genus() - 1); }

 private:
  explicit NumericalSemigroup(std::vector<int_t> gens) : generators_(std::move(gens)) { sieve(); }

  void sieve() {
    const int_t smallest = generators_.front();
    int_t run = 0;
    for (int_t x = 0;; ++x) {
      bool in = x == 0;
      for (int_t g : generators_) {
        if (g > x) break;
        if (member_[static_cast<std::size_t>(x - g)]) {
          in = true;
          break;
        }
      }
      member_.push_back(in ? 1 : 0);
      run = in ? run + 1 : 0;
      if (run == smallest) {
        conductor_ = x - smallest + 1;
        break;
      }
    }
    member_.resize(static_cast<std::size_t>(conductor_));
    for (int_t x = 0; x < conductor_; ++x) {
      if (member_[static_cast<std::size_t>(x)])
        nongaps_.push_back(x);
      else
        gaps_.push_back(x);
    }
    const int_t window = conductor_ + generators_.back();
    for (int_t x = conductor_; x <= window; ++x) nongaps_.push_back(x);
  }

  std::vector<int_t> generators_;
  std::vector<char> member_;
  std::vector<int_t> nongaps_;
  std::vector<int_t> gaps_;
  int_t conductor_ = 0;
};

/// Whether the ordered sequence (a_1, ..., a_k) is telescopic:
/// a_i / d_i lies in <a_1/d_{i-1}, ..., a_{i-1}/d_{i-1}> for i >= 2, d_i = gcd(a_1..a_i).
inline bool is_telescopic(std::span<const int_t> seq) {
  detail::require(!seq.empty(), "is_telescopic: empty sequence");
  int_t total = 0;
  for (int_t a : seq) {
    detail::require(a > 0, "is_telescopic: entries must be positive");
    total = std::gcd(total, a);
  }
  detail::require(total == 1, "is_telescopic: gcd of sequence must be 1");

  int_t d_prev = seq[0];
  for (std::size_t i = 1; i < seq.size(); ++i) {
    const int_t d_i = std::gcd(d_prev, seq[i]);
    std::vector<int_t> scaled;
    for (std::size_t j = 0; j < i; ++j) scaled.push_back(seq[j] / d_prev);
    const auto partial = NumericalSemigroup::from_generators(scaled);
    if (!partial.contains(seq[i] / d_i)) return false;
    d_prev = d_i;
  }
  return true;
}

inline bool is_telescopic(std::initializer_list<int_t> seq) {
  return is_telescopic(std::span<const int_t>(seq.begin(), seq.size()));
}

/// Closed-form genus 1/2 (1 + sum (d_{i-1}/d_i - 1) a_i) of a telescopic sequence, d_0 := 0.
inline int_t telescopic_genus(std::span<const int_t> seq) {
  detail::require(is_telescopic(seq), "telescopic_genus: sequence is not telescopic");
  int_t twice = 1;
  int_t d_prev = 0;
  for (int_t a : seq) {
    const int_t d_i = std::gcd(d_prev, a);
    twice = detail::checked_add(twice, detail::checked_mul(d_prev / d_i - 1, a));
    d_prev = d_i;
  }
  detail::ensure(twice % 2 == 0, "telescopic_genus: odd numerator");
  return twice / 2;
}

inline int_t telescopic_genus(std::initializer_list<int_t> seq) {
  return telescopic_genus(std::span<const int_t>(seq.begin(), seq.size()));
}

}  // namespace gk2
