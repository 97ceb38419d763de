#pragma once

// Finite commutative rings with exact lifts to a torsion-free cover.
//
// Supported kinds:
//   Zmod(n)                   cover Z
//   GaloisField(p, f)         cover Z[x]/(f~), f~ the integer lift of the monic modulus f
//   Product(R_1, ..., R_k)    cover is the product of the component covers
//
// Elements are stored as a single code in [0, |R|): the residue for Zmod, the
// base-p digits of the reduced polynomial for GaloisField, and a mixed-radix
// combination of component codes for Product.  The code doubles as the index
// used when enumerating the ring.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace cuspk {

using Integer = mpz_class;

enum class RingKind { Zmod, GaloisField, Product };

class RingElement;

// Element of the cover.  The coefficient layout is owned by the ring:
// one integer for Zmod, deg(f) integers for GaloisField, and the component
// layouts concatenated for Product.
struct CoverElement {
  std::vector<Integer> coeffs;

  bool operator==(const CoverElement& other) const { return coeffs == other.coeffs; }
};

class Ring {
 public:
  static Ring zmod(std::int64_t n);
  // Uses the default modulus (see default_modulus).
  static Ring galois_field(std::int64_t p, int degree);
  // modulus is c_0, ..., c_{d-1}, 1 and must be monic and irreducible mod p.
  static Ring galois_field(std::int64_t p, std::vector<std::int64_t> modulus);
  static Ring product(std::vector<Ring> factors);

  // "Z9", "F5", "F2^2", with "x" joining product factors ("Z4xF3").  The
  // optional modulus applies to a single GaloisField spec.
  static Ring parse(std::string_view spec,
                    const std::optional<std::vector<std::int64_t>>& modulus = std::nullopt);

  // Smallest monic irreducible of the given degree over F_p, ordered by the
  // integer sum c_i p^i of its non-leading coefficients.
  static std::vector<std::int64_t> default_modulus(std::int64_t p, int degree);

  RingKind kind() const;
  std::int64_t characteristic() const;
  std::uint64_t cardinality() const;
  // Display name; round-trips through parse() when the modulus is the default.
  std::string name() const;
  // Structural identity (includes the modulus).
  const std::string& key() const;

  // GaloisField data.
  std::int64_t field_prime() const;
  int field_degree() const;
  const std::vector<std::int64_t>& modulus() const;
  const std::vector<Ring>& factors() const;

  // If the characteristic is a prime power p^k, returns p.
  std::optional<std::int64_t> characteristic_prime() const;
  // True for F_q and Z/p, and products of those over one prime p: the
  // finite stand-ins for perfectoid bases.
  bool is_perfect_fp_algebra(std::int64_t p) const;

  RingElement zero() const;
  RingElement one() const;
  RingElement from_int(std::int64_t value) const;
  RingElement element(std::uint64_t code) const;
  // GaloisField only: coefficients c_0 .. c_{d-1}, each reduced mod p.
  RingElement from_coeffs(std::span<const std::int64_t> coeffs) const;
  std::vector<RingElement> elements() const;

  // Arithmetic on codes; no ownership checks.  Used by the Witt modules.
  std::uint64_t add_code(std::uint64_t x, std::uint64_t y) const;
  std::uint64_t sub_code(std::uint64_t x, std::uint64_t y) const;
  std::uint64_t mul_code(std::uint64_t x, std::uint64_t y) const;
  std::uint64_t neg_code(std::uint64_t x) const;
  std::uint64_t pow_code(std::uint64_t x, std::uint64_t e) const;
  std::uint64_t code_from_int(std::int64_t value) const;

  // Cover.
  std::size_t cover_width() const;
  CoverElement lift_code(std::uint64_t code) const;
  std::uint64_t reduce_code(const CoverElement& c) const;
  CoverElement lift(const RingElement& x) const;
  RingElement reduce(const CoverElement& c) const;

  CoverElement cover_zero() const;
  CoverElement cover_from_integer(const Integer& value) const;
  CoverElement cover_add(const CoverElement& x, const CoverElement& y) const;
  CoverElement cover_sub(const CoverElement& x, const CoverElement& y) const;
  CoverElement cover_neg(const CoverElement& x) const;
  CoverElement cover_mul(const CoverElement& x, const CoverElement& y) const;
  CoverElement cover_pow(const CoverElement& x, std::uint64_t e) const;
  CoverElement cover_scale(const CoverElement& x, const Integer& k) const;
  // Throws InexactDivision if some coefficient is not divisible by k.
  CoverElement cover_div_exact(const CoverElement& x, const Integer& k) const;
  void cover_add_scaled(CoverElement& acc, const CoverElement& x, const Integer& k) const;
  bool cover_is_zero(const CoverElement& x) const;
  std::string cover_to_string(const CoverElement& x) const;

  std::string format_code(std::uint64_t code) const;

  bool operator==(const Ring& other) const;

  struct Impl;

 private:
  explicit Ring(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

class RingElement {
 public:
  RingElement(Ring ring, std::uint64_t code) : ring_(std::move(ring)), code_(code) {}

  const Ring& ring() const { return ring_; }
  std::uint64_t code() const { return code_; }

  RingElement operator+(const RingElement& other) const;
  RingElement operator-(const RingElement& other) const;
  RingElement operator*(const RingElement& other) const;
  RingElement operator-() const;
  RingElement pow(std::uint64_t e) const;

  bool is_zero() const { return code_ == 0; }
  bool is_unit() const;
  bool is_nilpotent() const;

  // Zero divisor in the strict sense: nonzero y with x*y = 0 exists.
  bool is_zero_divisor() const;

  std::string to_string() const;

  bool operator==(const RingElement& other) const;

 private:
  Ring ring_;
  std::uint64_t code_;
};

enum class RingOp { Add, Sub, Mul };

RingElement ring_arith(const RingElement& x, const RingElement& y, RingOp op);

}  // namespace cuspk
