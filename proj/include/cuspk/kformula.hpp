#pragma once

// Group-structure formulas for the relative K-groups of the cusp y^a = x^b.
//
// Even degree 2r, product form:   prod_{m' in J_p} W_{h(a,b,r,p,m')}(R)
// Even degree 2r, quotient form:  W_S(R) / (V_a W_{S/a}(R) + V_b W_{S/b}(R)),  S = S(a,b,r)
// Odd degrees vanish.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cuspk/abelian.hpp"
#include "cuspk/cuspcomb.hpp"
#include "cuspk/ring.hpp"

namespace cuspk {

enum class FactorKind { Witt, WittQuotient, Symbolic };

std::string_view to_string(FactorKind kind);

struct Factor {
  std::string label;
  FactorKind kind = FactorKind::Witt;
  int n = 0;
  // WittQuotient only: W_n / V_k W_{n-k}.
  std::optional<int> k;
  // Symbolic only.
  std::string token;

  bool operator==(const Factor& other) const = default;
};

// Witt(n); nullopt when n == 0.
std::optional<Factor> make_witt_factor(std::string label, int n);
// W_n / V_k W_{n-k}.  Collapses to Witt(n) when n <= k and is trivial when k == 0.
std::optional<Factor> make_quotient_factor(std::string label, int n, int k);

struct GroupDescriptor {
  std::int64_t p = 0;
  std::vector<Factor> factors;
  // Trivial factors dropped while building.
  std::size_t trivial_omitted = 0;
  // Set for truncated infinite products: the weight bound M.
  std::optional<std::int64_t> tail_truncated_at;

  bool is_trivial() const { return factors.empty(); }
  bool has_symbolic() const;
  // Adds f, or counts it as omitted when it is trivial.
  void push(std::optional<Factor> f);
};

// |R|^{min(n,k)} per factor, multiplied out.  Throws SymbolicFactor.
Integer descriptor_order(const GroupDescriptor& d, const Ring& ring);

GroupDescriptor k_even_product_form(const CuspParams& params, std::int64_t r);
// Odd degrees: always trivial.
GroupDescriptor k_odd(const CuspParams& params, std::int64_t r);

enum class QuotientRoute { Auto, Closure, Reduction };

struct QuotientOptions {
  QuotientRoute route = QuotientRoute::Auto;
  // Maximum number of Witt vectors enumerated by the chosen route.
  std::uint64_t budget = std::uint64_t{1} << 24;
  // Auto picks the closure route when |R|^{|S|} is at most this.
  std::uint64_t closure_limit = std::uint64_t{1} << 14;
};

struct QuotientResult {
  FiniteAbelianGroup group;
  QuotientRoute route = QuotientRoute::Auto;
  std::vector<std::int64_t> truncation_set;
  // Vectors enumerated.
  std::uint64_t states = 0;
};

QuotientResult k_even_quotient_form(const CuspParams& params, std::int64_t r, const Ring& ring,
                                    const QuotientOptions& options = {});

// Truncated at weights m <= M.  Odd r is not meaningful here; degree is 2r.
GroupDescriptor tc_minus_table(const CuspParams& params, std::int64_t r, std::int64_t M);
GroupDescriptor tp_table(const CuspParams& params, std::int64_t M);

// Closed form for W_n(F_q) and products of fields; brute force otherwise.
FiniteAbelianGroup realize_witt(int n, const Ring& ring, std::int64_t p, std::uint64_t budget = std::uint64_t{1} << 20);
// Brute-force W_n / V_k W_{n-k}.
FiniteAbelianGroup realize_witt_quotient(int n, int k, const Ring& ring, std::int64_t p,
                                         std::uint64_t budget = std::uint64_t{1} << 20);
FiniteAbelianGroup realize_descriptor(const GroupDescriptor& d, const Ring& ring,
                                      std::uint64_t budget = std::uint64_t{1} << 20);

struct CuspReport {
  CuspParams params;
  std::int64_t r = 0;
  GroupDescriptor even_product;
  FiniteAbelianGroup even_product_group;
  std::optional<QuotientResult> even_quotient;
  // Filled when the quotient form was skipped.
  std::string quotient_note;
  bool forms_agree = false;
  std::vector<std::string> odd_tokens;
  bool extension_determined = false;
  // False for bases that are not perfect F_p-algebras.
  bool perfect_base = false;
};

// r must be >= 0.
CuspReport k_padic_cusp_report(const CuspParams& params, std::int64_t r, const Ring& ring,
                               const QuotientOptions& options = {});

}  // namespace cuspk
