#include "cuspk/kformula.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "cuspk/bigwitt.hpp"
#include "cuspk/error.hpp"
#include "cuspk/witt.hpp"

namespace cuspk {

namespace {

// q^e, or nullopt when it does not fit in 64 bits.
std::optional<std::uint64_t> checked_upow(std::uint64_t q, std::size_t e) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (__builtin_mul_overflow(out, q, &out)) return std::nullopt;
  }
  return out;
}

std::uint64_t require_budget(std::uint64_t q, std::size_t e, std::uint64_t budget, const std::string& what) {
  const auto n = checked_upow(q, e);
  if (!n || *n > budget) {
    throw Error(ErrorKind::BudgetExceeded,
                what + " needs " + std::to_string(q) + "^" + std::to_string(e) + " states, budget " + std::to_string(budget));
  }
  return *n;
}

std::string label_of(std::int64_t m) { return std::to_string(m); }

FiniteAbelianGroup histogram_group(const std::map<Integer, Integer>& hist) {
  return FiniteAbelianGroup::from_order_histogram(hist);
}

QuotientResult closure_route(const TruncationSet& s, std::int64_t a, std::int64_t b, const Ring& ring,
                             std::uint64_t budget) {
  const std::uint64_t q = ring.cardinality();
  const std::uint64_t total = require_budget(q, s.size(), budget, "closure of W_S");

  // Generators V_n [r] placed at each d in S/n.  Every element of W_{S/n} is a
  // sum of V_d [x_d], so these generate V_n W_{S/n}.
  std::vector<BigWittVector> gens;
  std::vector<char> seen_gen(total, 0);
  for (auto n : {a, b}) {
    const auto sn = ts_divide(s, n);
    for (std::size_t i = 0; i < sn.size(); ++i) {
      for (std::uint64_t c = 1; c < q; ++c) {
        std::vector<std::uint64_t> codes(sn.size(), 0);
        codes[i] = c;
        auto g = bw_verschiebung(n, BigWittVector(ring, sn, std::move(codes)), s);
        const auto idx = g.index();
        if (!seen_gen[idx]) {
          seen_gen[idx] = 1;
          gens.push_back(std::move(g));
        }
      }
    }
  }

  std::vector<char> in_h(total, 0);
  std::vector<std::uint64_t> h_list{0};
  in_h[0] = 1;
  for (std::size_t head = 0; head < h_list.size(); ++head) {
    const auto h = BigWittVector::from_index(ring, s, h_list[head]);
    for (const auto& g : gens) {
      const auto idx = bw_add(h, g).index();
      if (!in_h[idx]) {
        in_h[idx] = 1;
        h_list.push_back(idx);
      }
    }
  }

  // Label cosets; orders are constant on a coset so one representative each suffices.
  constexpr auto kUnset = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> coset(total, kUnset);
  std::vector<std::uint64_t> reps;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (coset[idx] != kUnset) continue;
    const auto label = reps.size();
    reps.push_back(idx);
    const auto x = BigWittVector::from_index(ring, s, idx);
    for (auto h : h_list) coset[bw_add(x, BigWittVector::from_index(ring, s, h)).index()] = label;
  }

  const Integer quotient_order = Integer(static_cast<unsigned long>(reps.size()));
  const auto primes = factorize(quotient_order);
  std::map<Integer, Integer> hist;
  for (auto idx : reps) {
    const auto x = BigWittVector::from_index(ring, s, idx);
    const auto ord = element_order(
        x, quotient_order, primes, [](const BigWittVector& v, const Integer& k) { return bw_scale(v, k); },
        [&](const BigWittVector& v) { return in_h[v.index()] != 0; });
    hist[ord] += 1;
  }
  QuotientResult out;
  out.group = histogram_group(hist);
  out.route = QuotientRoute::Closure;
  out.states = total;
  return out;
}

// V_a W_{S/a} + V_b W_{S/b} is the set of x with x_m = 0 whenever a does not
// divide m and b does not divide m: the complement T of the multiples of a or
// b is itself a truncation set, and the subgroup is the kernel of restriction
// to T.  So the vectors supported on T form a set of coset representatives
// and membership is a support test.
QuotientResult reduction_route(const TruncationSet& s, std::int64_t a, std::int64_t b, const Ring& ring,
                               std::uint64_t budget) {
  const std::uint64_t q = ring.cardinality();
  std::vector<std::size_t> free_pos;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto m = s.elements()[i];
    if (m % a != 0 && m % b != 0) free_pos.push_back(i);
  }
  const std::uint64_t total = require_budget(q, free_pos.size(), budget, "reduced quotient");
  const Integer quotient_order = Integer(static_cast<unsigned long>(total));
  const auto primes = factorize(quotient_order);
  const auto is_in_h = [&](const BigWittVector& v) {
    return std::all_of(free_pos.begin(), free_pos.end(), [&](std::size_t i) { return v.codes()[i] == 0; });
  };

  std::map<Integer, Integer> hist;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<std::uint64_t> codes(s.size(), 0);
    auto rest = idx;
    for (auto i : free_pos) {
      codes[i] = rest % q;
      rest /= q;
    }
    const BigWittVector x(ring, s, std::move(codes));
    const auto ord = element_order(
        x, quotient_order, primes, [](const BigWittVector& v, const Integer& k) { return bw_scale(v, k); }, is_in_h);
    hist[ord] += 1;
  }
  QuotientResult out;
  out.group = histogram_group(hist);
  out.route = QuotientRoute::Reduction;
  out.states = total;
  return out;
}

FiniteAbelianGroup brute_force_witt(int n, int k, const Ring& ring, std::int64_t p, std::uint64_t budget) {
  // Cosets of V_k W_{n-k} in W_n are determined by the first k components.
  const int width = std::min(n, k);
  const std::uint64_t q = ring.cardinality();
  const std::uint64_t total = require_budget(q, static_cast<std::size_t>(width), budget, "Witt group enumeration");
  const Integer order = Integer(static_cast<unsigned long>(total));
  const auto primes = factorize(order);
  const auto killed = [width](const WittVector& v) {
    for (int i = 0; i < width; ++i) {
      if (v.codes()[static_cast<std::size_t>(i)] != 0) return false;
    }
    return true;
  };
  std::map<Integer, Integer> hist;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    auto x = WittVector::from_index(ring, p, static_cast<std::size_t>(n), idx);
    const auto ord = element_order(
        x, order, primes, [](const WittVector& v, const Integer& c) { return witt_scale(v, c); }, killed);
    hist[ord] += 1;
  }
  return histogram_group(hist);
}

}  // namespace

std::string_view to_string(FactorKind kind) {
  switch (kind) {
    case FactorKind::Witt: return "Witt";
    case FactorKind::WittQuotient: return "WittQuotient";
    case FactorKind::Symbolic: return "Symbolic";
  }
  return "?";
}

std::optional<Factor> make_witt_factor(std::string label, int n) {
  if (n < 0) throw Error(ErrorKind::InvalidParams, "negative Witt length");
  if (n == 0) return std::nullopt;
  return Factor{std::move(label), FactorKind::Witt, n, std::nullopt, {}};
}

std::optional<Factor> make_quotient_factor(std::string label, int n, int k) {
  if (n < 0 || k < 0) throw Error(ErrorKind::InvalidParams, "negative Witt quotient index");
  if (n <= k) return make_witt_factor(std::move(label), n);
  // V_0 is the identity, so W_n / V_0 W_n = 0.
  if (k == 0) return std::nullopt;
  return Factor{std::move(label), FactorKind::WittQuotient, n, k, {}};
}

bool GroupDescriptor::has_symbolic() const {
  return std::any_of(factors.begin(), factors.end(), [](const Factor& f) { return f.kind == FactorKind::Symbolic; });
}

void GroupDescriptor::push(std::optional<Factor> f) {
  if (f) {
    factors.push_back(std::move(*f));
  } else {
    ++trivial_omitted;
  }
}

Integer descriptor_order(const GroupDescriptor& d, const Ring& ring) {
  Integer out = 1;
  for (const auto& f : d.factors) {
    if (f.kind == FactorKind::Symbolic) throw Error(ErrorKind::SymbolicFactor, "factor " + f.label + " is symbolic");
    const int e = f.k ? std::min(f.n, *f.k) : f.n;
    out *= pow_integer(static_cast<std::int64_t>(ring.cardinality()), static_cast<unsigned>(e));
  }
  return out;
}

GroupDescriptor k_even_product_form(const CuspParams& params, std::int64_t r) {
  GroupDescriptor d;
  d.p = params.p;
  for (const auto& [m_prime, h] : h_scan(params, r)) d.push(make_witt_factor(label_of(m_prime), h));
  return d;
}

GroupDescriptor k_odd(const CuspParams& params, std::int64_t /*r*/) {
  GroupDescriptor d;
  d.p = params.p;
  return d;
}

QuotientResult k_even_quotient_form(const CuspParams& params, std::int64_t r, const Ring& ring,
                                    const QuotientOptions& options) {
  const auto elems = S_set(params.a, params.b, r);
  QuotientResult out;
  out.truncation_set = elems;
  if (elems.empty()) {
    out.route = options.route == QuotientRoute::Auto ? QuotientRoute::Reduction : options.route;
    return out;
  }
  const TruncationSet s(elems);
  auto route = options.route;
  if (route == QuotientRoute::Auto) {
    const auto total = checked_upow(ring.cardinality(), s.size());
    route = total && *total <= options.closure_limit ? QuotientRoute::Closure : QuotientRoute::Reduction;
  }
  auto result = route == QuotientRoute::Closure ? closure_route(s, params.a, params.b, ring, options.budget)
                                                : reduction_route(s, params.a, params.b, ring, options.budget);
  result.truncation_set = elems;
  return result;
}

GroupDescriptor tc_minus_table(const CuspParams& params, std::int64_t r, std::int64_t M) {
  if (M < 1) throw Error(ErrorKind::InvalidParams, "weight bound M must be >= 1");
  GroupDescriptor d;
  d.p = params.p;
  d.tail_truncated_at = M;
  const int va = vp(params.a, params.p);
  for (std::int64_t m = 1; m <= M; ++m) {
    if (m % params.b == 0) continue;
    const int v = vp(m, params.p);
    const bool low = l_count(params.a, params.b, m) < r;
    const int n = low ? v : v + 1;
    if (m % params.a == 0) {
      d.push(make_quotient_factor(label_of(m), n, va));
    } else {
      d.push(make_witt_factor(label_of(m), n));
    }
  }
  return d;
}

GroupDescriptor tp_table(const CuspParams& params, std::int64_t M) {
  if (M < 1) throw Error(ErrorKind::InvalidParams, "weight bound M must be >= 1");
  GroupDescriptor d;
  d.p = params.p;
  d.tail_truncated_at = M;
  const int va = vp(params.a, params.p);
  for (std::int64_t m = 1; m <= M; ++m) {
    if (m % params.b == 0) continue;
    const int v = vp(m, params.p);
    if (m % params.a == 0) {
      d.push(make_quotient_factor(label_of(m), v, va));
    } else {
      d.push(make_witt_factor(label_of(m), v));
    }
  }
  return d;
}

FiniteAbelianGroup realize_witt(int n, const Ring& ring, std::int64_t p, std::uint64_t budget) {
  if (n < 0) throw Error(ErrorKind::InvalidParams, "negative Witt length");
  if (n == 0) return {};
  switch (ring.kind()) {
    case RingKind::GaloisField:
      if (ring.field_prime() == p) {
        // W_n(F_{p^e}) = (Z/p^n)^e.
        return FiniteAbelianGroup::from_cyclic_orders(
            std::vector<Integer>(static_cast<std::size_t>(ring.field_degree()), pow_integer(p, static_cast<unsigned>(n))));
      }
      break;
    case RingKind::Zmod:
      if (ring.characteristic() == p) return FiniteAbelianGroup::from_cyclic_orders({pow_integer(p, static_cast<unsigned>(n))});
      break;
    case RingKind::Product: {
      FiniteAbelianGroup out;
      for (const auto& f : ring.factors()) out = out.direct_sum(realize_witt(n, f, p, budget));
      return out;
    }
  }
  return brute_force_witt(n, n, ring, p, budget);
}

FiniteAbelianGroup realize_witt_quotient(int n, int k, const Ring& ring, std::int64_t p, std::uint64_t budget) {
  if (n < 0 || k < 0) throw Error(ErrorKind::InvalidParams, "negative Witt quotient index");
  if (std::min(n, k) == 0) return {};
  return brute_force_witt(n, k, ring, p, budget);
}

FiniteAbelianGroup realize_descriptor(const GroupDescriptor& d, const Ring& ring, std::uint64_t budget) {
  FiniteAbelianGroup out;
  for (const auto& f : d.factors) {
    switch (f.kind) {
      case FactorKind::Symbolic:
        throw Error(ErrorKind::SymbolicFactor, "cannot realize symbolic factor " + f.token);
      case FactorKind::Witt:
        out = out.direct_sum(realize_witt(f.n, ring, d.p, budget));
        break;
      case FactorKind::WittQuotient:
        out = out.direct_sum(realize_witt_quotient(f.n, *f.k, ring, d.p, budget));
        break;
    }
  }
  return out;
}

CuspReport k_padic_cusp_report(const CuspParams& params, std::int64_t r, const Ring& ring,
                               const QuotientOptions& options) {
  if (r < 0) throw Error(ErrorKind::InvalidParams, "the report is defined for r >= 0");
  CuspReport rep;
  rep.params = params;
  rep.r = r;
  rep.even_product = k_even_product_form(params, r);
  rep.even_product_group = realize_descriptor(rep.even_product, ring, options.budget);
  try {
    rep.even_quotient = k_even_quotient_form(params, r, ring, options);
    rep.forms_agree = compare(rep.even_product_group, rep.even_quotient->group);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BudgetExceeded) throw;
    rep.quotient_note = e.what();
  }
  rep.odd_tokens = {"TatePic", "OnePlusRadicalSeries"};
  rep.extension_determined = false;
  rep.perfect_base = ring.is_perfect_fp_algebra(params.p);
  return rep;
}

}  // namespace cuspk
