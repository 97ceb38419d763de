#pragma once

// Unit groups of R[t] and R[t]/t^N over finite rings R.
//
// Two arithmetic modes are kept apart on purpose.  In R[t] a polynomial is a
// unit iff c_0 is a unit and every other coefficient is nilpotent.  In
// R[t]/t^N every c_0-unit is a unit, so the same question means something
// else there and poly_is_unit refuses it.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cuspk/ring.hpp"

namespace cuspk {

class TruncatedPoly {
 public:
  // R[t]; trailing zero coefficients are trimmed.
  static TruncatedPoly polynomial(const Ring& ring, std::vector<std::uint64_t> coeffs);
  // R[t]/t^N, N >= 1; coefficients at degree >= N are dropped.
  static TruncatedPoly truncated(const Ring& ring, std::vector<std::uint64_t> coeffs, std::size_t n);
  // "1+2t+3t^2", "1-t^3", "2*t".  Coefficients are integers reduced into R.
  static TruncatedPoly parse(const Ring& ring, std::string_view text, std::optional<std::size_t> n = std::nullopt);

  const Ring& ring() const { return ring_; }
  bool is_truncated() const { return n_.has_value(); }
  std::optional<std::size_t> modulus_degree() const { return n_; }
  // Polynomial mode: trimmed.  Truncated mode: exactly N entries.
  const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }
  std::uint64_t coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  // -1 for the zero polynomial.
  std::ptrdiff_t degree() const;

  TruncatedPoly operator+(const TruncatedPoly& other) const;
  TruncatedPoly operator*(const TruncatedPoly& other) const;
  TruncatedPoly pow(std::uint64_t e) const;
  bool is_one() const;
  bool operator==(const TruncatedPoly& other) const;

  std::string to_string() const;

 private:
  TruncatedPoly(Ring ring, std::vector<std::uint64_t> coeffs, std::optional<std::size_t> n);
  void normalize();

  Ring ring_;
  std::vector<std::uint64_t> coeffs_;
  std::optional<std::size_t> n_;
};

// Polynomial mode only; throws QuotientMode otherwise.
bool poly_is_unit(const TruncatedPoly& f);

// Nilpotent elements of R, ascending by code.
std::vector<std::uint64_t> nilradical(const Ring& ring);

struct OnePlusNilGroup {
  Ring ring;
  std::size_t n = 0;
  std::vector<TruncatedPoly> elements;

  bool contains(const TruncatedPoly& f) const;
  TruncatedPoly multiply(const TruncatedPoly& f, const TruncatedPoly& g) const;
  // f^{-1}, found as f^{|G|-1}.
  TruncatedPoly inverse(const TruncatedPoly& f) const;
};

// {1 + n_1 t + ... + n_{N-1} t^{N-1} : n_i nilpotent} in R[t]/t^N.
// Throws BudgetExceeded when |Nil(R)|^{N-1} > budget.
OnePlusNilGroup one_plus_nil_group(const Ring& ring, std::size_t n, std::uint64_t budget = std::uint64_t{1} << 20);

struct RootSearch {
  bool exists = false;
  std::optional<TruncatedPoly> witness;
  // Empty when a root exists.
  std::string obstruction;
  std::uint64_t searched = 0;
};

// Is u = y^p for some y in 1 + Nil(R)[t] mod t^N?  u must be truncated and lie in that group.
RootSearch has_pth_root(const TruncatedPoly& u, std::int64_t p, std::uint64_t budget = std::uint64_t{1} << 20);

struct TorsionStep {
  std::size_t index = 0;     // coefficient t^i under examination
  Integer multiplier;        // coefficient of x_i in the t^i term of x^{p^k}
  std::string equation;      // "4*x_2 = 0"
  std::string conclusion;    // "x_2 = 0"
};

struct TorsionTrace {
  std::int64_t p = 0;
  std::size_t n = 0;
  unsigned k = 0;
  std::vector<TorsionStep> steps;
  bool concludes_identity = false;
};

// Runs the induction showing 1 + t Z[[t]] has no p-power torsion mod t^N:
// if x_1 = ... = x_{i-1} = 0 then the t^i coefficient of x^{p^k} is p^k x_i,
// so x_i = 0.  The multiplier is read off an exact integer expansion.
TorsionTrace torsion_free_check(std::int64_t p, std::size_t n, unsigned k);

// Integer polynomial check: x^{p^k} == 1 mod t^N.
bool is_p_power_torsion(const std::vector<Integer>& x, std::int64_t p, unsigned k, std::size_t n);

}  // namespace cuspk
