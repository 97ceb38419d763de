#include "cuspk/bigwitt.hpp"

#include <algorithm>

#include "cuspk/arith.hpp"
#include "cuspk/error.hpp"

namespace cuspk {

bool is_divisor_stable(const std::vector<std::int64_t>& elements) {
  for (auto m : elements) {
    if (m < 1) return false;
    for (std::int64_t d = 1; d * d <= m; ++d) {
      if (m % d != 0) continue;
      if (std::find(elements.begin(), elements.end(), d) == elements.end()) return false;
      if (std::find(elements.begin(), elements.end(), m / d) == elements.end()) return false;
    }
  }
  return true;
}

TruncationSet::TruncationSet(std::vector<std::int64_t> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (!is_divisor_stable(elements_)) throw Error(ErrorKind::InvalidParams, "truncation set is not divisor-stable");
  divisors_.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (elements_[i] % elements_[j] == 0) divisors_[i].push_back(j);
    }
  }
}

bool TruncationSet::contains(std::int64_t m) const { return position(m) >= 0; }

std::ptrdiff_t TruncationSet::position(std::int64_t m) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), m);
  if (it == elements_.end() || *it != m) return -1;
  return it - elements_.begin();
}

std::string TruncationSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(elements_[i]);
  }
  return out + "}";
}

TruncationSet ts_divide(const TruncationSet& s, std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidParams, "ts_divide needs n >= 1");
  std::vector<std::int64_t> out;
  for (auto m : s.elements()) {
    if (m % n == 0) out.push_back(m / n);
  }
  return TruncationSet(std::move(out));
}

namespace {

void require_compatible(const BigWittVector& x, const BigWittVector& y) {
  if (!(x.ring() == y.ring())) {
    throw Error(ErrorKind::MixedRings, "big Witt vectors over " + x.ring().name() + " and " + y.ring().name());
  }
  if (!(x.set() == y.set())) {
    throw Error(ErrorKind::ShapeMismatch, "truncation sets " + x.set().to_string() + " and " + y.set().to_string());
  }
}

enum class Op { Add, Sub, Mul };

BigWittVector combine(const BigWittVector& x, const BigWittVector& y, Op op) {
  require_compatible(x, y);
  const Ring& ring = x.ring();
  auto gx = bw_ghost(x);
  const auto gy = bw_ghost(y);
  for (std::size_t i = 0; i < gx.size(); ++i) {
    switch (op) {
      case Op::Add: gx[i] = ring.cover_add(gx[i], gy[i]); break;
      case Op::Sub: gx[i] = ring.cover_sub(gx[i], gy[i]); break;
      case Op::Mul: gx[i] = ring.cover_mul(gx[i], gy[i]); break;
    }
  }
  return bw_from_ghost(ring, x.set(), gx);
}

}  // namespace

BigWittVector::BigWittVector(Ring ring, TruncationSet set, std::vector<std::uint64_t> codes)
    : ring_(std::move(ring)), set_(std::move(set)), codes_(std::move(codes)) {
  if (codes_.size() != set_.size()) {
    throw Error(ErrorKind::ShapeMismatch, "component count does not match the truncation set");
  }
  for (auto c : codes_) {
    if (c >= ring_.cardinality()) throw Error(ErrorKind::InvalidParams, "component code out of range");
  }
}

BigWittVector BigWittVector::zero(const Ring& ring, const TruncationSet& set) {
  return BigWittVector(ring, set, std::vector<std::uint64_t>(set.size(), 0));
}

BigWittVector BigWittVector::one(const Ring& ring, const TruncationSet& set) { return bw_teichmuller(ring.one(), set); }

BigWittVector BigWittVector::from_index(const Ring& ring, const TruncationSet& set, std::uint64_t index) {
  std::vector<std::uint64_t> codes(set.size());
  const std::uint64_t q = ring.cardinality();
  for (auto& c : codes) {
    c = index % q;
    index /= q;
  }
  return BigWittVector(ring, set, std::move(codes));
}

RingElement BigWittVector::component(std::int64_t m) const {
  const auto pos = set_.position(m);
  if (pos < 0) throw Error(ErrorKind::ShapeMismatch, std::to_string(m) + " is not in " + set_.to_string());
  return RingElement(ring_, codes_[static_cast<std::size_t>(pos)]);
}

std::uint64_t BigWittVector::index() const {
  std::uint64_t out = 0;
  for (std::size_t i = codes_.size(); i-- > 0;) out = out * ring_.cardinality() + codes_[i];
  return out;
}

bool BigWittVector::is_zero() const {
  return std::all_of(codes_.begin(), codes_.end(), [](std::uint64_t c) { return c == 0; });
}

BigWittVector BigWittVector::operator+(const BigWittVector& other) const { return bw_add(*this, other); }
BigWittVector BigWittVector::operator-(const BigWittVector& other) const { return bw_sub(*this, other); }
BigWittVector BigWittVector::operator*(const BigWittVector& other) const { return bw_mul(*this, other); }
BigWittVector BigWittVector::operator-() const { return bw_neg(*this); }

bool BigWittVector::operator==(const BigWittVector& other) const {
  return codes_ == other.codes_ && set_ == other.set_ && ring_ == other.ring_;
}

std::string BigWittVector::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < codes_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(set_.elements()[i]) + ":" + ring_.format_code(codes_[i]);
  }
  return out + "}@W_" + set_.to_string() + "(" + ring_.name() + ")";
}

std::vector<CoverElement> bw_ghost(const BigWittVector& x) {
  const Ring& ring = x.ring();
  const auto& elems = x.set().elements();
  std::vector<CoverElement> lifts;
  lifts.reserve(elems.size());
  for (auto c : x.codes()) lifts.push_back(ring.lift_code(c));

  std::vector<CoverElement> out;
  out.reserve(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    CoverElement w = ring.cover_scale(lifts[i], Integer(static_cast<long>(elems[i])));
    for (auto j : x.set().proper_divisors(i)) {
      if (x.codes()[j] == 0) continue;
      const auto d = elems[j];
      ring.cover_add_scaled(w, ring.cover_pow(lifts[j], static_cast<std::uint64_t>(elems[i] / d)),
                            Integer(static_cast<long>(d)));
    }
    out.push_back(std::move(w));
  }
  return out;
}

BigWittVector bw_from_ghost(const Ring& ring, const TruncationSet& s, const std::vector<CoverElement>& ghosts) {
  if (ghosts.size() != s.size()) throw Error(ErrorKind::ShapeMismatch, "ghost vector length does not match S");
  const auto& elems = s.elements();
  std::vector<CoverElement> exact;
  exact.reserve(elems.size());
  std::vector<std::uint64_t> codes;
  codes.reserve(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    CoverElement t = ghosts[i];
    for (auto j : s.proper_divisors(i)) {
      if (ring.cover_is_zero(exact[j])) continue;
      const auto d = elems[j];
      ring.cover_add_scaled(t, ring.cover_pow(exact[j], static_cast<std::uint64_t>(elems[i] / d)),
                            Integer(static_cast<long>(-d)));
    }
    if (elems[i] != 1) t = ring.cover_div_exact(t, Integer(static_cast<long>(elems[i])));
    codes.push_back(ring.reduce_code(t));
    exact.push_back(std::move(t));
  }
  return BigWittVector(ring, s, std::move(codes));
}

BigWittVector bw_add(const BigWittVector& x, const BigWittVector& y) { return combine(x, y, Op::Add); }
BigWittVector bw_sub(const BigWittVector& x, const BigWittVector& y) { return combine(x, y, Op::Sub); }
BigWittVector bw_mul(const BigWittVector& x, const BigWittVector& y) { return combine(x, y, Op::Mul); }
BigWittVector bw_neg(const BigWittVector& x) { return bw_scale(x, -1); }

BigWittVector bw_scale(const BigWittVector& x, const Integer& k) {
  auto g = bw_ghost(x);
  for (auto& w : g) w = x.ring().cover_scale(w, k);
  return bw_from_ghost(x.ring(), x.set(), g);
}

BigWittVector bw_verschiebung(std::int64_t n, const BigWittVector& x, const TruncationSet& s) {
  if (n < 1) throw Error(ErrorKind::InvalidParams, "V_n needs n >= 1");
  if (!(x.set() == ts_divide(s, n))) {
    throw Error(ErrorKind::ShapeMismatch, "V_" + std::to_string(n) + " source must be indexed by S/" + std::to_string(n));
  }
  std::vector<std::uint64_t> codes(s.size(), 0);
  const auto& elems = s.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i] % n != 0) continue;
    codes[i] = x.codes()[static_cast<std::size_t>(x.set().position(elems[i] / n))];
  }
  return BigWittVector(x.ring(), s, std::move(codes));
}

BigWittVector bw_frobenius(std::int64_t n, const BigWittVector& x) {
  if (n < 1) throw Error(ErrorKind::InvalidParams, "F_n needs n >= 1");
  const auto target = ts_divide(x.set(), n);
  const auto g = bw_ghost(x);
  std::vector<CoverElement> shifted;
  shifted.reserve(target.size());
  for (auto m : target.elements()) shifted.push_back(g[static_cast<std::size_t>(x.set().position(m * n))]);
  return bw_from_ghost(x.ring(), target, shifted);
}

BigWittVector bw_teichmuller(const RingElement& r, const TruncationSet& s) {
  std::vector<std::uint64_t> codes(s.size(), 0);
  if (!s.empty()) codes[0] = r.code();
  return BigWittVector(r.ring(), s, std::move(codes));
}

std::size_t p_typical_length(const TruncationSet& s, std::int64_t m_prime, std::int64_t p) {
  std::size_t c = 0;
  for (std::int64_t m = m_prime; s.contains(m); m *= p) ++c;
  return c;
}

std::map<std::int64_t, WittVector> p_typical_split(const BigWittVector& x, std::int64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidParams, "p_typical_split needs a prime p");
  const auto char_prime = x.ring().characteristic_prime();
  if (!char_prime || *char_prime != p) {
    throw Error(ErrorKind::NotPLocal, x.ring().name() + " does not have characteristic a power of " + std::to_string(p));
  }
  std::map<std::int64_t, WittVector> out;
  for (auto m : x.set().elements()) {
    if (m % p == 0) continue;
    const auto fx = bw_frobenius(m, x);
    const auto len = p_typical_length(x.set(), m, p);
    std::vector<std::uint64_t> codes;
    codes.reserve(len);
    std::int64_t q = 1;
    for (std::size_t nu = 0; nu < len; ++nu, q *= p) {
      codes.push_back(fx.codes()[static_cast<std::size_t>(fx.set().position(q))]);
    }
    out.emplace(m, WittVector(x.ring(), p, std::move(codes)));
  }
  return out;
}

}  // namespace cuspk
