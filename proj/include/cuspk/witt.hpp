#pragma once

// Truncated p-typical Witt vectors W_n(R).
//
// No structure polynomial is ever written down.  Each operation lifts the
// components into the torsion-free cover, combines ghost components
//
//   w_k(x) = sum_{i <= k} p^i x_i^{p^{k-i}},
//
// and recovers components through the exact recursion
//
//   s_k = (g_k - sum_{i < k} p^i s_i^{p^{k-i}}) / p^k.
//
// The divisions are exact because the ghost map of a torsion-free ring is
// injective and the true components exist; a remainder is reported as
// InexactDivision and indicates a bug.

#include <cstdint>
#include <string>
#include <vector>

#include "cuspk/ring.hpp"

namespace cuspk {

class WittVector {
 public:
  WittVector(Ring ring, std::int64_t p, std::vector<std::uint64_t> codes);

  static WittVector zero(const Ring& ring, std::int64_t p, std::size_t length);
  static WittVector one(const Ring& ring, std::int64_t p, std::size_t length);
  static WittVector from_components(const Ring& ring, std::int64_t p, const std::vector<RingElement>& components);
  // Enumeration order: component 0 is the least significant base-|R| digit.
  static WittVector from_index(const Ring& ring, std::int64_t p, std::size_t length, std::uint64_t index);

  const Ring& ring() const { return ring_; }
  std::int64_t prime() const { return p_; }
  std::size_t length() const { return codes_.size(); }
  const std::vector<std::uint64_t>& codes() const { return codes_; }
  RingElement component(std::size_t i) const;
  std::uint64_t index() const;
  bool is_zero() const;

  WittVector operator+(const WittVector& other) const;
  WittVector operator-(const WittVector& other) const;
  WittVector operator*(const WittVector& other) const;
  WittVector operator-() const;

  bool operator==(const WittVector& other) const;

  // "(c0,c1,...)@W_n(R,p)"
  std::string to_string() const;

 private:
  Ring ring_;
  std::int64_t p_;
  std::vector<std::uint64_t> codes_;
};

WittVector witt_add(const WittVector& x, const WittVector& y);
WittVector witt_sub(const WittVector& x, const WittVector& y);
WittVector witt_mul(const WittVector& x, const WittVector& y);
WittVector witt_neg(const WittVector& x);
// k * x for any integer k, via ghost scaling.
WittVector witt_scale(const WittVector& x, const Integer& k);

// V_k : W_n -> W_{n+k}, prepending k zero components.
WittVector verschiebung(const WittVector& x, std::size_t k = 1);
// F : W_{n+1} -> W_n with w_j(F x) = w_{j+1}(x).  x must have length >= 1.
WittVector frobenius(const WittVector& x);
WittVector teichmuller(const RingElement& r, std::int64_t p, std::size_t length);
WittVector restrict_to(const WittVector& x, std::size_t length);

std::vector<CoverElement> ghost(const WittVector& x);
// Inverse of the ghost map on its image.
WittVector from_ghost(const Ring& ring, std::int64_t p, const std::vector<CoverElement>& ghosts);

}  // namespace cuspk
