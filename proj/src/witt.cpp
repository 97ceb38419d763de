#include "cuspk/witt.hpp"

#include <algorithm>

#include "cuspk/arith.hpp"
#include "cuspk/error.hpp"

namespace cuspk {

namespace {

void require_compatible(const WittVector& x, const WittVector& y) {
  if (!(x.ring() == y.ring())) {
    throw Error(ErrorKind::MixedRings, "Witt vectors over " + x.ring().name() + " and " + y.ring().name());
  }
  if (x.prime() != y.prime() || x.length() != y.length()) {
    throw Error(ErrorKind::ShapeMismatch, "W_" + std::to_string(x.length()) + " (p=" + std::to_string(x.prime()) +
                                              ") vs W_" + std::to_string(y.length()) +
                                              " (p=" + std::to_string(y.prime()) + ")");
  }
}

std::vector<CoverElement> ghost_of_lifts(const Ring& ring, std::int64_t p, const std::vector<CoverElement>& lifts) {
  const std::size_t n = lifts.size();
  const auto pu = static_cast<std::uint64_t>(p);
  std::vector<CoverElement> out;
  out.reserve(n);
  std::vector<CoverElement> powers = lifts;  // powers[i] = lift_i^{p^{k-i}}
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < k; ++i) powers[i] = ring.cover_pow(powers[i], pu);
    CoverElement w = ring.cover_zero();
    for (std::size_t i = 0; i <= k; ++i) ring.cover_add_scaled(w, powers[i], prime_power(p, static_cast<unsigned>(i)));
    out.push_back(std::move(w));
  }
  return out;
}

WittVector combine(const WittVector& x, const WittVector& y, bool multiply, bool subtract) {
  require_compatible(x, y);
  const Ring& ring = x.ring();
  auto gx = ghost(x);
  const auto gy = ghost(y);
  for (std::size_t k = 0; k < gx.size(); ++k) {
    if (multiply) {
      gx[k] = ring.cover_mul(gx[k], gy[k]);
    } else if (subtract) {
      gx[k] = ring.cover_sub(gx[k], gy[k]);
    } else {
      gx[k] = ring.cover_add(gx[k], gy[k]);
    }
  }
  return from_ghost(ring, x.prime(), gx);
}

}  // namespace

WittVector::WittVector(Ring ring, std::int64_t p, std::vector<std::uint64_t> codes)
    : ring_(std::move(ring)), p_(p), codes_(std::move(codes)) {
  if (!is_prime(p_)) throw Error(ErrorKind::InvalidParams, "Witt vectors need a prime p, got " + std::to_string(p_));
  for (auto c : codes_) {
    if (c >= ring_.cardinality()) throw Error(ErrorKind::InvalidParams, "component code out of range");
  }
}

WittVector WittVector::zero(const Ring& ring, std::int64_t p, std::size_t length) {
  return WittVector(ring, p, std::vector<std::uint64_t>(length, 0));
}

WittVector WittVector::one(const Ring& ring, std::int64_t p, std::size_t length) {
  return teichmuller(ring.one(), p, length);
}

WittVector WittVector::from_components(const Ring& ring, std::int64_t p, const std::vector<RingElement>& components) {
  std::vector<std::uint64_t> codes;
  codes.reserve(components.size());
  for (const auto& c : components) {
    if (!(c.ring() == ring)) throw Error(ErrorKind::MixedRings, "component from " + c.ring().name());
    codes.push_back(c.code());
  }
  return WittVector(ring, p, std::move(codes));
}

WittVector WittVector::from_index(const Ring& ring, std::int64_t p, std::size_t length, std::uint64_t index) {
  std::vector<std::uint64_t> codes(length);
  const std::uint64_t q = ring.cardinality();
  for (std::size_t i = 0; i < length; ++i) {
    codes[i] = index % q;
    index /= q;
  }
  return WittVector(ring, p, std::move(codes));
}

RingElement WittVector::component(std::size_t i) const { return RingElement(ring_, codes_.at(i)); }

std::uint64_t WittVector::index() const {
  std::uint64_t out = 0;
  for (std::size_t i = codes_.size(); i-- > 0;) out = out * ring_.cardinality() + codes_[i];
  return out;
}

bool WittVector::is_zero() const {
  return std::all_of(codes_.begin(), codes_.end(), [](std::uint64_t c) { return c == 0; });
}

WittVector WittVector::operator+(const WittVector& other) const { return witt_add(*this, other); }
WittVector WittVector::operator-(const WittVector& other) const { return witt_sub(*this, other); }
WittVector WittVector::operator*(const WittVector& other) const { return witt_mul(*this, other); }
WittVector WittVector::operator-() const { return witt_neg(*this); }

bool WittVector::operator==(const WittVector& other) const {
  return p_ == other.p_ && codes_ == other.codes_ && ring_ == other.ring_;
}

std::string WittVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < codes_.size(); ++i) {
    if (i) out += ",";
    out += ring_.format_code(codes_[i]);
  }
  out += ")@W_" + std::to_string(codes_.size()) + "(" + ring_.name() + "," + std::to_string(p_) + ")";
  return out;
}

std::vector<CoverElement> ghost(const WittVector& x) {
  std::vector<CoverElement> lifts;
  lifts.reserve(x.length());
  for (auto c : x.codes()) lifts.push_back(x.ring().lift_code(c));
  return ghost_of_lifts(x.ring(), x.prime(), lifts);
}

WittVector from_ghost(const Ring& ring, std::int64_t p, const std::vector<CoverElement>& ghosts) {
  const auto pu = static_cast<std::uint64_t>(p);
  std::vector<std::uint64_t> codes;
  codes.reserve(ghosts.size());
  std::vector<CoverElement> powers;  // powers[i] = s_i^{p^{k-i}}
  powers.reserve(ghosts.size());
  for (std::size_t k = 0; k < ghosts.size(); ++k) {
    for (std::size_t i = 0; i < k; ++i) powers[i] = ring.cover_pow(powers[i], pu);
    CoverElement t = ghosts[k];
    for (std::size_t i = 0; i < k; ++i) {
      ring.cover_add_scaled(t, powers[i], -prime_power(p, static_cast<unsigned>(i)));
    }
    CoverElement s = k == 0 ? std::move(t) : ring.cover_div_exact(t, prime_power(p, static_cast<unsigned>(k)));
    codes.push_back(ring.reduce_code(s));
    powers.push_back(std::move(s));
  }
  return WittVector(ring, p, std::move(codes));
}

WittVector witt_add(const WittVector& x, const WittVector& y) { return combine(x, y, false, false); }
WittVector witt_sub(const WittVector& x, const WittVector& y) { return combine(x, y, false, true); }
WittVector witt_mul(const WittVector& x, const WittVector& y) { return combine(x, y, true, false); }

WittVector witt_neg(const WittVector& x) { return witt_scale(x, -1); }

WittVector witt_scale(const WittVector& x, const Integer& k) {
  auto g = ghost(x);
  for (auto& w : g) w = x.ring().cover_scale(w, k);
  return from_ghost(x.ring(), x.prime(), g);
}

WittVector verschiebung(const WittVector& x, std::size_t k) {
  std::vector<std::uint64_t> codes(k, 0);
  codes.insert(codes.end(), x.codes().begin(), x.codes().end());
  return WittVector(x.ring(), x.prime(), std::move(codes));
}

WittVector frobenius(const WittVector& x) {
  if (x.length() == 0) throw Error(ErrorKind::ShapeMismatch, "Frobenius needs a source of length >= 1");
  auto g = ghost(x);
  g.erase(g.begin());
  return from_ghost(x.ring(), x.prime(), g);
}

WittVector teichmuller(const RingElement& r, std::int64_t p, std::size_t length) {
  std::vector<std::uint64_t> codes(length, 0);
  if (length > 0) codes[0] = r.code();
  return WittVector(r.ring(), p, std::move(codes));
}

WittVector restrict_to(const WittVector& x, std::size_t length) {
  if (length > x.length()) {
    throw Error(ErrorKind::ShapeMismatch, "cannot restrict W_" + std::to_string(x.length()) + " to W_" + std::to_string(length));
  }
  return WittVector(x.ring(), x.prime(),
                    std::vector<std::uint64_t>(x.codes().begin(), x.codes().begin() + static_cast<std::ptrdiff_t>(length)));
}

}  // namespace cuspk
