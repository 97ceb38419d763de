#include "cuspk/abelian.hpp"

#include <algorithm>
#include <functional>

#include "cuspk/error.hpp"

namespace cuspk {

namespace {

// Prime-power decomposition {q: [exponents]} -> invariant factors.
std::vector<Integer> assemble(std::map<Integer, std::vector<unsigned>> parts) {
  std::size_t k = 0;
  for (auto& [q, exps] : parts) {
    std::sort(exps.begin(), exps.end(), std::greater<>());
    k = std::max(k, exps.size());
  }
  std::vector<Integer> out(k, 1);
  // out[0] is the largest factor until the final reverse.
  for (const auto& [q, exps] : parts) {
    for (std::size_t i = 0; i < exps.size(); ++i) out[i] *= pow_integer(q.get_si(), exps[i]);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

unsigned log_exact(Integer n, const Integer& q) {
  unsigned e = 0;
  while (n % q == 0) {
    n /= q;
    ++e;
  }
  if (n != 1) throw Error(ErrorKind::InvalidParams, "torsion count is not a prime power");
  return e;
}

}  // namespace

FiniteAbelianGroup FiniteAbelianGroup::from_invariant_factors(std::vector<Integer> factors) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] <= 1) throw Error(ErrorKind::InvalidParams, "invariant factors must exceed 1");
    if (i > 0 && factors[i] % factors[i - 1] != 0) {
      throw Error(ErrorKind::InvalidParams, "invariant factors must form a divisibility chain");
    }
  }
  FiniteAbelianGroup g;
  g.factors_ = std::move(factors);
  return g;
}

FiniteAbelianGroup FiniteAbelianGroup::from_cyclic_orders(const std::vector<Integer>& orders) {
  std::map<Integer, std::vector<unsigned>> parts;
  for (const auto& n : orders) {
    if (n < 1) throw Error(ErrorKind::InvalidParams, "cyclic orders must be positive");
    for (const auto& [q, e] : factorize(n)) parts[q].push_back(e);
  }
  FiniteAbelianGroup g;
  g.factors_ = assemble(std::move(parts));
  return g;
}

FiniteAbelianGroup FiniteAbelianGroup::from_order_histogram(const std::map<Integer, Integer>& hist) {
  Integer total = 0;
  for (const auto& [o, c] : hist) total += c;
  if (total < 1) throw Error(ErrorKind::InvalidParams, "empty order histogram");
  std::map<Integer, std::vector<unsigned>> parts;
  for (const auto& [q, e_total] : factorize(total)) {
    // t[j] = log_q |G[q^j]|; the number of cyclic q-parts of exponent >= j is t[j] - t[j-1].
    std::vector<unsigned> t{0};
    for (unsigned j = 1; t.back() < e_total; ++j) {
      const Integer qj = pow_integer(q.get_si(), j);
      Integer count = 0;
      for (const auto& [o, c] : hist) {
        if (qj % o == 0) count += c;
      }
      t.push_back(log_exact(count, q));
      if (j > e_total) throw Error(ErrorKind::InvalidParams, "inconsistent order histogram");
    }
    std::vector<unsigned> exps;
    for (std::size_t j = 1; j < t.size(); ++j) {
      const unsigned at_least_j = t[j] - t[j - 1];
      const unsigned at_least_next = j + 1 < t.size() ? t[j + 1] - t[j] : 0;
      for (unsigned c = at_least_next; c < at_least_j; ++c) exps.push_back(static_cast<unsigned>(j));
    }
    parts[q] = std::move(exps);
  }
  FiniteAbelianGroup g;
  g.factors_ = assemble(std::move(parts));
  return g;
}

Integer FiniteAbelianGroup::order() const {
  Integer out = 1;
  for (const auto& d : factors_) out *= d;
  return out;
}

FiniteAbelianGroup FiniteAbelianGroup::direct_sum(const FiniteAbelianGroup& other) const {
  auto orders = factors_;
  orders.insert(orders.end(), other.factors_.begin(), other.factors_.end());
  return from_cyclic_orders(orders);
}

std::string FiniteAbelianGroup::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += ",";
    out += factors_[i].get_str();
  }
  return out + "]";
}

bool compare(const FiniteAbelianGroup& g1, const FiniteAbelianGroup& g2) { return g1 == g2; }

}  // namespace cuspk
