#pragma once

// Finite abelian groups in invariant-factor form d_1 | d_2 | ... | d_k, d_i > 1.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cuspk/arith.hpp"

namespace cuspk {

class FiniteAbelianGroup {
 public:
  // Trivial group.
  FiniteAbelianGroup() = default;

  // Validates the divisibility chain; throws InvalidParams.
  static FiniteAbelianGroup from_invariant_factors(std::vector<Integer> factors);
  // Direct sum of cyclic groups of the given orders (entries equal to 1 are ignored).
  static FiniteAbelianGroup from_cyclic_orders(const std::vector<Integer>& orders);
  // hist[o] = number of elements of order o.
  static FiniteAbelianGroup from_order_histogram(const std::map<Integer, Integer>& hist);

  const std::vector<Integer>& invariant_factors() const { return factors_; }
  Integer order() const;
  bool is_trivial() const { return factors_.empty(); }

  FiniteAbelianGroup direct_sum(const FiniteAbelianGroup& other) const;

  bool operator==(const FiniteAbelianGroup& other) const { return factors_ == other.factors_; }

  // "[4,4]"; "[]" for the trivial group.
  std::string to_string() const;

 private:
  std::vector<Integer> factors_;
};

bool compare(const FiniteAbelianGroup& g1, const FiniteAbelianGroup& g2);

// Order of x in a group whose order divides group_order.  scale(x, k) must
// return k x, is_zero tests the identity.
template <class T, class Scale, class IsZero>
Integer element_order(const T& x, const Integer& group_order, const std::vector<std::pair<Integer, unsigned>>& primes,
                      Scale scale, IsZero is_zero) {
  Integer ord = group_order;
  for (const auto& [q, e] : primes) {
    for (unsigned i = 0; i < e; ++i) {
      const Integer candidate = ord / q;
      if (!is_zero(scale(x, candidate))) break;
      ord = candidate;
    }
  }
  return ord;
}

}  // namespace cuspk
