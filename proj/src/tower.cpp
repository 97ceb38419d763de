#include "cuspk/tower.hpp"

#include <random>
#include <set>
#include <string>

#include "cuspk/cuspcomb.hpp"
#include "cuspk/error.hpp"

namespace cuspk {

namespace {

constexpr int kValidationSamples = 16;

WittVector random_witt(const Ring& ring, std::int64_t p, std::size_t length, std::mt19937_64& rng) {
  std::vector<std::uint64_t> codes(length);
  std::uniform_int_distribution<std::uint64_t> dist(0, ring.cardinality() - 1);
  for (auto& c : codes) c = dist(rng);
  return WittVector(ring, p, std::move(codes));
}

void require_length(const WittVector& v, std::size_t length, const std::string& what) {
  if (v.length() != length) {
    throw Error(ErrorKind::ShapeMismatch,
                what + " has length " + std::to_string(v.length()) + ", expected " + std::to_string(length));
  }
}

void check_additive(const LevelMap& f, const WittVector& x, const WittVector& y, const std::string& what) {
  if (!(f(x + y) == f(x) + f(y))) throw Error(ErrorKind::InvalidParams, what + " is not additive");
}

void check_inverse(const LevelMap& f, const LevelMap& g, const WittVector& x, const WittVector& y,
                   const std::string& what) {
  // g o f = id on the source and f o g = id on the target.
  if (!(g(f(x)) == x) || !(f(g(y)) == y)) throw Error(ErrorKind::RegimeViolation, what + " inverse check failed");
}

const LevelMap& need(const std::optional<LevelMap>& f, const std::string& what) {
  if (!f) throw Error(ErrorKind::RegimeViolation, "missing inverse for " + what);
  return *f;
}

std::string level_name(const char* map, int nu) { return std::string(map) + "_" + std::to_string(nu); }

}  // namespace

TowerSpec::TowerSpec(Ring ring, std::int64_t p, int s, int truncation, std::vector<TowerLevel> levels)
    : ring_(std::move(ring)), p_(p), s_(s), n_(truncation), levels_(std::move(levels)) {
  if (s_ < 0) throw Error(ErrorKind::InvalidParams, "regime index must be >= 0");
  if (n_ < s_) throw Error(ErrorKind::InvalidParams, "truncation N must be >= s");
  if (levels_.size() != static_cast<std::size_t>(n_) + 1) {
    throw Error(ErrorKind::InvalidParams, "expected N + 1 tower levels");
  }
  std::mt19937_64 rng(0x5eed);
  for (int nu = 0; nu <= n_; ++nu) {
    const auto& lv = levels_[static_cast<std::size_t>(nu)];
    if (!lv.can) throw Error(ErrorKind::InvalidParams, "missing " + level_name("can", nu));
    if (nu < n_ && !lv.phi) throw Error(ErrorKind::InvalidParams, "missing " + level_name("phi", nu));
    for (int i = 0; i < kValidationSamples; ++i) {
      const auto x = random_witt(ring_, p_, lv.g_length, rng);
      const auto y = random_witt(ring_, p_, lv.g_length, rng);
      require_length(lv.can(x), lv.h_length, level_name("can", nu));
      check_additive(lv.can, x, y, level_name("can", nu));
      if (nu < n_) {
        const auto next_h = levels_[static_cast<std::size_t>(nu) + 1].h_length;
        require_length(lv.phi(x), next_h, level_name("phi", nu));
        check_additive(lv.phi, x, y, level_name("phi", nu));
        if (nu < s_) {
          check_inverse(lv.phi, need(lv.phi_inverse, level_name("phi", nu)), x, random_witt(ring_, p_, next_h, rng),
                        level_name("phi", nu));
        }
      }
      if (nu >= s_) {
        check_inverse(lv.can, need(lv.can_inverse, level_name("can", nu)), x,
                      random_witt(ring_, p_, lv.h_length, rng), level_name("can", nu));
      }
    }
  }
}

TowerSpec TowerSpec::standard(const Ring& ring, std::int64_t p, int s, int truncation) {
  if (s < 0 || truncation < s) throw Error(ErrorKind::InvalidParams, "need 0 <= s <= N");
  const LevelMap identity = [](const WittVector& x) { return x; };
  std::vector<TowerLevel> levels;
  for (int nu = 0; nu <= truncation; ++nu) {
    TowerLevel lv;
    const auto unu = static_cast<std::size_t>(nu);
    if (nu < s) {
      lv.g_length = unu + 1;
      lv.h_length = unu;
      lv.can = [unu](const WittVector& x) { return restrict_to(x, unu); };
      lv.phi = identity;
      lv.phi_inverse = identity;
    } else {
      lv.g_length = unu;
      lv.h_length = unu;
      lv.can = identity;
      lv.can_inverse = identity;
      // On F_p-algebras F(x, 0) is additive in x, so V o Fbar is a group map.
      lv.phi = [](const WittVector& x) {
        auto ext = x.codes();
        ext.push_back(0);
        return verschiebung(frobenius(WittVector(x.ring(), x.prime(), std::move(ext))), 1);
      };
    }
    if (nu == truncation) lv.phi = nullptr;
    levels.push_back(std::move(lv));
  }
  return TowerSpec(ring, p, s, truncation, std::move(levels));
}

TowerElement TowerSpec::zero_domain() const {
  TowerElement out;
  for (const auto& lv : levels_) out.push_back(WittVector::zero(ring_, p_, lv.g_length));
  return out;
}

TowerElement TowerSpec::zero_codomain() const {
  TowerElement out;
  for (const auto& lv : levels_) out.push_back(WittVector::zero(ring_, p_, lv.h_length));
  return out;
}

bool TowerSpec::in_domain(const TowerElement& x) const {
  if (x.size() != levels_.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].length() != levels_[i].g_length || !(x[i].ring() == ring_) || x[i].prime() != p_) return false;
  }
  return true;
}

bool TowerSpec::in_codomain(const TowerElement& y) const {
  if (y.size() != levels_.size()) return false;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i].length() != levels_[i].h_length || !(y[i].ring() == ring_) || y[i].prime() != p_) return false;
  }
  return true;
}

TowerElement phi_minus_can(const TowerSpec& spec, const TowerElement& x) {
  if (!spec.in_domain(x)) throw Error(ErrorKind::ShapeMismatch, "tower element does not match the domain");
  TowerElement out;
  out.reserve(x.size());
  for (int nu = 0; nu <= spec.truncation(); ++nu) {
    const auto i = static_cast<std::size_t>(nu);
    auto v = -spec.level(nu).can(x[i]);
    if (nu > 0) v = spec.level(nu - 1).phi(x[i - 1]) + v;
    out.push_back(std::move(v));
  }
  return out;
}

TowerElement solve_preimage(const TowerSpec& spec, const TowerElement& y) {
  if (!spec.in_codomain(y)) throw Error(ErrorKind::ShapeMismatch, "target does not match the codomain");
  const int s = spec.regime();
  auto x = spec.zero_domain();
  // Below the regime: x_{s-1} = 0 and x_{nu-1} = phi^{-1}(y_nu + can(x_nu)).
  for (int nu = s - 1; nu >= 1; --nu) {
    const auto& inv = need(spec.level(nu - 1).phi_inverse, level_name("phi", nu - 1));
    x[static_cast<std::size_t>(nu) - 1] = inv(y[static_cast<std::size_t>(nu)] + spec.level(nu).can(x[static_cast<std::size_t>(nu)]));
  }
  // From the regime on: x_nu = can^{-1}(phi(x_{nu-1}) - y_nu).
  for (int nu = s; nu <= spec.truncation(); ++nu) {
    const auto i = static_cast<std::size_t>(nu);
    const auto& inv = need(spec.level(nu).can_inverse, level_name("can", nu));
    auto rhs = -y[i];
    if (nu > 0) rhs = spec.level(nu - 1).phi(x[i - 1]) + rhs;
    x[i] = inv(rhs);
  }
  return x;
}

TowerElement kernel_embed(const TowerSpec& spec, const WittVector& w) {
  const int s = spec.regime();
  auto x = spec.zero_domain();
  if (s == 0) {
    if (w.length() != 0) throw Error(ErrorKind::ShapeMismatch, "the kernel is W_0 when s = 0");
    return x;
  }
  const auto top = static_cast<std::size_t>(s) - 1;
  require_length(w, spec.level(s - 1).g_length, "kernel coordinate");
  x[top] = w;
  for (int nu = s - 1; nu >= 1; --nu) {
    const auto& inv = need(spec.level(nu - 1).phi_inverse, level_name("phi", nu - 1));
    x[static_cast<std::size_t>(nu) - 1] = inv(spec.level(nu).can(x[static_cast<std::size_t>(nu)]));
  }
  for (int nu = s; nu <= spec.truncation(); ++nu) {
    const auto i = static_cast<std::size_t>(nu);
    const auto& inv = need(spec.level(nu).can_inverse, level_name("can", nu));
    x[i] = inv(spec.level(nu - 1).phi(x[i - 1]));
  }
  return x;
}

WittVector kernel_project(const TowerSpec& spec, const TowerElement& x) {
  if (!spec.in_domain(x)) throw Error(ErrorKind::ShapeMismatch, "tower element does not match the domain");
  if (spec.regime() == 0) return WittVector::zero(spec.ring(), spec.prime(), 0);
  return x[static_cast<std::size_t>(spec.regime()) - 1];
}

TowerElement tower_add(const TowerElement& x, const TowerElement& y) {
  if (x.size() != y.size()) throw Error(ErrorKind::ShapeMismatch, "tower elements of different depth");
  TowerElement out;
  out.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out.push_back(x[i] + y[i]);
  return out;
}

bool tower_is_zero(const TowerElement& x) {
  for (const auto& v : x) {
    if (!v.is_zero()) return false;
  }
  return true;
}

namespace {

void check_case_params(std::int64_t a, std::int64_t b, std::int64_t p, std::int64_t m_prime) {
  make_cusp_params(a, b, p);
  if (b % p == 0) throw Error(ErrorKind::InvalidParams, "parameters are not normalized: p divides b");
  if (m_prime < 1 || m_prime % p == 0) throw Error(ErrorKind::InvalidParams, "m' must be positive and prime to p");
  if (m_prime % b == 0) throw Error(ErrorKind::InvalidParams, "b divides m'");
}

std::int64_t a_prime_of(std::int64_t a, std::int64_t p) {
  while (a % p == 0) a /= p;
  return a;
}

}  // namespace

TowerSpec instantiate_case1(std::int64_t a, std::int64_t b, std::int64_t r, std::int64_t p, std::int64_t m_prime,
                            const Ring& ring, int truncation) {
  check_case_params(a, b, p, m_prime);
  if (m_prime % a_prime_of(a, p) == 0) throw Error(ErrorKind::InvalidParams, "case 1 needs a' not dividing m'");
  return TowerSpec::standard(ring, p, s_func(a, b, r, p, m_prime), truncation);
}

TowerSpec instantiate_case2(std::int64_t a, std::int64_t b, std::int64_t r, std::int64_t p, std::int64_t m_prime,
                            const Ring& ring, int truncation) {
  check_case_params(a, b, p, m_prime);
  if (m_prime % a_prime_of(a, p) != 0) throw Error(ErrorKind::InvalidParams, "case 2 needs a' dividing m'");
  const int s = std::min(s_func(a, b, r, p, m_prime), vp(a, p));
  return TowerSpec::standard(ring, p, s, truncation);
}

std::vector<TowerElement> brute_force_kernel(const TowerSpec& spec, std::uint64_t budget) {
  const Ring& ring = spec.ring();
  const std::uint64_t q = ring.cardinality();
  std::uint64_t examined = 0;
  const auto level_size = [&](std::size_t length) {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < length; ++i) {
      if (__builtin_mul_overflow(n, q, &n)) throw Error(ErrorKind::BudgetExceeded, "tower level too large");
    }
    return n;
  };
  const auto charge = [&](std::uint64_t n) {
    if (__builtin_add_overflow(examined, n, &examined) || examined > budget) {
      throw Error(ErrorKind::BudgetExceeded, "brute-force kernel exceeds budget " + std::to_string(budget));
    }
  };

  std::vector<TowerElement> partial;
  {
    const auto& lv = spec.level(0);
    const auto n = level_size(lv.g_length);
    charge(n);
    for (std::uint64_t idx = 0; idx < n; ++idx) {
      auto x0 = WittVector::from_index(ring, spec.prime(), lv.g_length, idx);
      if (lv.can(x0).is_zero()) partial.push_back({std::move(x0)});
    }
  }
  for (int nu = 1; nu <= spec.truncation(); ++nu) {
    const auto& lv = spec.level(nu);
    const auto n = level_size(lv.g_length);
    std::vector<WittVector> candidates;
    std::vector<WittVector> images;
    candidates.reserve(n);
    images.reserve(n);
    for (std::uint64_t idx = 0; idx < n; ++idx) {
      candidates.push_back(WittVector::from_index(ring, spec.prime(), lv.g_length, idx));
      images.push_back(lv.can(candidates.back()));
    }
    std::vector<TowerElement> next;
    for (const auto& x : partial) {
      charge(n);
      const auto target = spec.level(nu - 1).phi(x.back());
      for (std::uint64_t idx = 0; idx < n; ++idx) {
        if (!(images[idx] == target)) continue;
        auto extended = x;
        extended.push_back(candidates[idx]);
        next.push_back(std::move(extended));
      }
    }
    partial = std::move(next);
  }
  return partial;
}

std::size_t domain_exponent(const TowerSpec& spec) {
  std::size_t e = 0;
  for (const auto& lv : spec.levels()) e += lv.g_length;
  return e;
}

std::size_t codomain_exponent(const TowerSpec& spec) {
  std::size_t e = 0;
  for (const auto& lv : spec.levels()) e += lv.h_length;
  return e;
}

std::uint64_t brute_force_image_size(const TowerSpec& spec, std::uint64_t budget) {
  const std::uint64_t q = spec.ring().cardinality();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < domain_exponent(spec); ++i) {
    if (__builtin_mul_overflow(total, q, &total) || total > budget) {
      throw Error(ErrorKind::BudgetExceeded, "tower domain exceeds budget " + std::to_string(budget));
    }
  }
  std::set<std::vector<std::uint64_t>> image;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    TowerElement x;
    auto rest = idx;
    for (const auto& lv : spec.levels()) {
      std::vector<std::uint64_t> codes(lv.g_length);
      for (auto& c : codes) {
        c = rest % q;
        rest /= q;
      }
      x.emplace_back(spec.ring(), spec.prime(), std::move(codes));
    }
    std::vector<std::uint64_t> flat;
    for (const auto& v : phi_minus_can(spec, x)) flat.insert(flat.end(), v.codes().begin(), v.codes().end());
    image.insert(std::move(flat));
  }
  return image.size();
}

}  // namespace cuspk
