#pragma once

// Big Witt vectors W_S(R) over finite divisor-stable truncation sets.
//
// Same scheme as the p-typical case: ghost components
//
//   w_n(x) = sum_{d | n} d x_d^{n/d}
//
// are computed in the cover and inverted by s_n = (g_n - sum_{d|n, d<n} d s_d^{n/d}) / n.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cuspk/ring.hpp"
#include "cuspk/witt.hpp"

namespace cuspk {

class TruncationSet {
 public:
  TruncationSet() = default;
  // Sorts and deduplicates; throws InvalidParams unless divisor-stable and positive.
  explicit TruncationSet(std::vector<std::int64_t> elements);

  const std::vector<std::int64_t>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(std::int64_t m) const;
  // Position of m in elements(), or -1.
  std::ptrdiff_t position(std::int64_t m) const;
  // divisors(i): positions of the proper divisors of elements()[i], ascending.
  const std::vector<std::size_t>& proper_divisors(std::size_t i) const { return divisors_[i]; }

  bool operator==(const TruncationSet& other) const { return elements_ == other.elements_; }

  std::string to_string() const;

 private:
  std::vector<std::int64_t> elements_;
  std::vector<std::vector<std::size_t>> divisors_;
};

bool is_divisor_stable(const std::vector<std::int64_t>& elements);

// S/n = {m >= 1 : n m in S}.
TruncationSet ts_divide(const TruncationSet& s, std::int64_t n);

class BigWittVector {
 public:
  BigWittVector(Ring ring, TruncationSet set, std::vector<std::uint64_t> codes);

  static BigWittVector zero(const Ring& ring, const TruncationSet& set);
  static BigWittVector one(const Ring& ring, const TruncationSet& set);
  // Component at elements()[0] is the least significant base-|R| digit.
  static BigWittVector from_index(const Ring& ring, const TruncationSet& set, std::uint64_t index);

  const Ring& ring() const { return ring_; }
  const TruncationSet& set() const { return set_; }
  const std::vector<std::uint64_t>& codes() const { return codes_; }
  // Component x_m; m must lie in S.
  RingElement component(std::int64_t m) const;
  std::uint64_t index() const;
  bool is_zero() const;

  BigWittVector operator+(const BigWittVector& other) const;
  BigWittVector operator-(const BigWittVector& other) const;
  BigWittVector operator*(const BigWittVector& other) const;
  BigWittVector operator-() const;
  bool operator==(const BigWittVector& other) const;

  // "{1:c1,2:c2,...}@W_S(R)"
  std::string to_string() const;

 private:
  Ring ring_;
  TruncationSet set_;
  std::vector<std::uint64_t> codes_;
};

BigWittVector bw_add(const BigWittVector& x, const BigWittVector& y);
BigWittVector bw_sub(const BigWittVector& x, const BigWittVector& y);
BigWittVector bw_mul(const BigWittVector& x, const BigWittVector& y);
BigWittVector bw_neg(const BigWittVector& x);
BigWittVector bw_scale(const BigWittVector& x, const Integer& k);

// V_n : W_{S/n} -> W_S.  x must be indexed by ts_divide(s, n).
BigWittVector bw_verschiebung(std::int64_t n, const BigWittVector& x, const TruncationSet& s);
// F_n : W_S -> W_{S/n} with w_m(F_n x) = w_{mn}(x).
BigWittVector bw_frobenius(std::int64_t n, const BigWittVector& x);
// Teichmuller lift [r] = (r, 0, 0, ...).
BigWittVector bw_teichmuller(const RingElement& r, const TruncationSet& s);

std::vector<CoverElement> bw_ghost(const BigWittVector& x);
BigWittVector bw_from_ghost(const Ring& ring, const TruncationSet& s, const std::vector<CoverElement>& ghosts);

// Number of nu >= 0 with m p^nu in S.
std::size_t p_typical_length(const TruncationSet& s, std::int64_t m_prime, std::int64_t p);

// Decomposition W_S(R) = prod_{m' in S, p not | m'} W_{c(m')}(R) for R of
// characteristic p^k.  The factor at m' has p-typical ghost components
// w_nu = w_{m' p^nu}(x); it is the image of x under the idempotent for m'
// followed by F_{m'}.  Throws NotPLocal for other rings.
std::map<std::int64_t, WittVector> p_typical_split(const BigWittVector& x, std::int64_t p);

}  // namespace cuspk
