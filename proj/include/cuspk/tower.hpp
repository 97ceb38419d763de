#pragma once

// Finite model of the (phi - can) towers
//
//   prod_{nu=0}^{N} G_nu  --(phi - can)-->  prod_{nu=0}^{N} H_nu
//   (phi - can)(x)_nu = phi_{nu-1}(x_{nu-1}) - can_nu(x_nu)
//
// with G_nu, H_nu Witt groups W_len(R).  Below the regime index s the
// Frobenius phi_nu : G_nu -> H_{nu+1} is invertible; from s on the canonical
// map can_nu : G_nu -> H_nu is.  phi_N leaves the truncation and is dropped.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cuspk/ring.hpp"
#include "cuspk/witt.hpp"

namespace cuspk {

using LevelMap = std::function<WittVector(const WittVector&)>;

struct TowerLevel {
  std::size_t g_length = 0;  // G_nu = W_{g_length}(R)
  std::size_t h_length = 0;  // H_nu = W_{h_length}(R)
  LevelMap can;              // G_nu -> H_nu
  LevelMap phi;              // G_nu -> H_{nu+1}; may be empty at nu = N
  std::optional<LevelMap> can_inverse;
  std::optional<LevelMap> phi_inverse;
};

using TowerElement = std::vector<WittVector>;

class TowerSpec {
 public:
  // Validates shapes, additivity of can/phi and the regime inverses on
  // deterministic samples.  Throws InvalidParams or RegimeViolation.
  TowerSpec(Ring ring, std::int64_t p, int s, int truncation, std::vector<TowerLevel> levels);

  // Default instantiation.  Below s: G = W_{nu+1}, H = W_nu, can = restriction,
  // phi = identity onto W_{nu+1}.  From s on: G = H = W_nu, can = identity,
  // phi = V o Fbar with Fbar(x) = F(x, 0).
  static TowerSpec standard(const Ring& ring, std::int64_t p, int s, int truncation);

  const Ring& ring() const { return ring_; }
  std::int64_t prime() const { return p_; }
  int regime() const { return s_; }
  int truncation() const { return n_; }
  const std::vector<TowerLevel>& levels() const { return levels_; }
  const TowerLevel& level(int nu) const { return levels_.at(static_cast<std::size_t>(nu)); }

  TowerElement zero_domain() const;
  TowerElement zero_codomain() const;
  bool in_domain(const TowerElement& x) const;
  bool in_codomain(const TowerElement& y) const;

 private:
  Ring ring_;
  std::int64_t p_;
  int s_;
  int n_;
  std::vector<TowerLevel> levels_;
};

TowerElement phi_minus_can(const TowerSpec& spec, const TowerElement& x);

// Some x with phi_minus_can(x) = y.
TowerElement solve_preimage(const TowerSpec& spec, const TowerElement& y);

// W_s(R) -> ker(phi - can), and its inverse x -> x_{s-1}.
TowerElement kernel_embed(const TowerSpec& spec, const WittVector& w);
WittVector kernel_project(const TowerSpec& spec, const TowerElement& x);

TowerElement tower_add(const TowerElement& x, const TowerElement& y);
bool tower_is_zero(const TowerElement& x);

// Case 1 (b and a' do not divide m'): regime s(a,b,r,p,m').
TowerSpec instantiate_case1(std::int64_t a, std::int64_t b, std::int64_t r, std::int64_t p, std::int64_t m_prime,
                            const Ring& ring, int truncation);
// Case 2 (b does not divide m', a' does): regime min(s, v_p(a)).
TowerSpec instantiate_case2(std::int64_t a, std::int64_t b, std::int64_t r, std::int64_t p, std::int64_t m_prime,
                            const Ring& ring, int truncation);

// Exhaustive oracle.  Solves the level equations from nu = 0 upward, keeping
// every partial assignment that satisfies the equations seen so far.  The
// equation at level nu only involves x_{nu-1} and x_nu, so this enumerates the
// kernel exactly.  Throws BudgetExceeded when more than `budget` candidates
// would be examined.
std::vector<TowerElement> brute_force_kernel(const TowerSpec& spec, std::uint64_t budget = std::uint64_t{1} << 26);

// Full enumeration of phi_minus_can over the domain; returns the image size.
// Throws BudgetExceeded when the domain exceeds the budget.
std::uint64_t brute_force_image_size(const TowerSpec& spec, std::uint64_t budget = std::uint64_t{1} << 20);

// Log base |R| of the domain and codomain orders.
std::size_t domain_exponent(const TowerSpec& spec);
std::size_t codomain_exponent(const TowerSpec& spec);

}  // namespace cuspk
