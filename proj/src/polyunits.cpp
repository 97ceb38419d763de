#include "cuspk/polyunits.hpp"

#include <algorithm>
#include <charconv>

#include "cuspk/arith.hpp"
#include "cuspk/error.hpp"

namespace cuspk {

namespace {

// Integer polynomials truncated at t^n.
std::vector<Integer> int_mul(const std::vector<Integer>& f, const std::vector<Integer>& g, std::size_t n) {
  std::vector<Integer> out(n, 0);
  for (std::size_t i = 0; i < f.size() && i < n; ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size() && i + j < n; ++j) out[i + j] += f[i] * g[j];
  }
  return out;
}

std::vector<Integer> int_pow(std::vector<Integer> f, Integer e, std::size_t n) {
  std::vector<Integer> out(n, 0);
  if (n > 0) out[0] = 1;
  while (e > 0) {
    if (e % 2 == 1) out = int_mul(out, f, n);
    e /= 2;
    if (e > 0) f = int_mul(f, f, n);
  }
  return out;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::InvalidParams, "cannot parse polynomial '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

TruncatedPoly::TruncatedPoly(Ring ring, std::vector<std::uint64_t> coeffs, std::optional<std::size_t> n)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)), n_(n) {
  for (auto c : coeffs_) {
    if (c >= ring_.cardinality()) throw Error(ErrorKind::InvalidParams, "coefficient code out of range");
  }
  normalize();
}

void TruncatedPoly::normalize() {
  if (n_) {
    coeffs_.resize(*n_, 0);
  } else {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
}

TruncatedPoly TruncatedPoly::polynomial(const Ring& ring, std::vector<std::uint64_t> coeffs) {
  return TruncatedPoly(ring, std::move(coeffs), std::nullopt);
}

TruncatedPoly TruncatedPoly::truncated(const Ring& ring, std::vector<std::uint64_t> coeffs, std::size_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidParams, "truncation degree must be >= 1");
  if (coeffs.size() > n) coeffs.resize(n);
  return TruncatedPoly(ring, std::move(coeffs), n);
}

TruncatedPoly TruncatedPoly::parse(const Ring& ring, std::string_view text, std::optional<std::size_t> n) {
  std::string compact;
  for (char c : text) {
    if (c != ' ') compact.push_back(c);
  }
  if (compact.empty()) throw Error(ErrorKind::InvalidParams, "empty polynomial");
  std::vector<std::uint64_t> coeffs;
  std::size_t pos = 0;
  while (pos < compact.size()) {
    int sign = 1;
    if (compact[pos] == '+' || compact[pos] == '-') {
      if (compact[pos] == '-') sign = -1;
      ++pos;
    }
    const auto end = compact.find_first_of("+-", pos);
    const std::string_view term = std::string_view(compact).substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    pos = end == std::string::npos ? compact.size() : end;
    if (term.empty()) throw Error(ErrorKind::InvalidParams, "empty term in '" + std::string(text) + "'");

    std::int64_t coef = 1;
    std::size_t exponent = 0;
    const auto tpos = term.find('t');
    if (tpos == std::string_view::npos) {
      coef = parse_int(term, text);
    } else {
      auto head = term.substr(0, tpos);
      if (!head.empty() && head.back() == '*') head.remove_suffix(1);
      if (!head.empty()) coef = parse_int(head, text);
      const auto tail = term.substr(tpos + 1);
      if (tail.empty()) {
        exponent = 1;
      } else if (tail.front() == '^') {
        const auto e = parse_int(tail.substr(1), text);
        if (e < 0) throw Error(ErrorKind::InvalidParams, "negative exponent in '" + std::string(text) + "'");
        exponent = static_cast<std::size_t>(e);
      } else {
        throw Error(ErrorKind::InvalidParams, "cannot parse polynomial '" + std::string(text) + "'");
      }
    }
    if (coeffs.size() <= exponent) coeffs.resize(exponent + 1, 0);
    coeffs[exponent] = ring.add_code(coeffs[exponent], ring.code_from_int(sign * coef));
  }
  if (n) return truncated(ring, std::move(coeffs), *n);
  return polynomial(ring, std::move(coeffs));
}

std::ptrdiff_t TruncatedPoly::degree() const {
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] != 0) return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

namespace {

void require_same(const TruncatedPoly& f, const TruncatedPoly& g) {
  if (!(f.ring() == g.ring())) throw Error(ErrorKind::MixedRings, "polynomials over different rings");
  if (f.modulus_degree() != g.modulus_degree()) throw Error(ErrorKind::ShapeMismatch, "polynomials in different modes");
}

}  // namespace

TruncatedPoly TruncatedPoly::operator+(const TruncatedPoly& other) const {
  require_same(*this, other);
  std::vector<std::uint64_t> out(std::max(coeffs_.size(), other.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = ring_.add_code(coeff(i), other.coeff(i));
  return TruncatedPoly(ring_, std::move(out), n_);
}

TruncatedPoly TruncatedPoly::operator*(const TruncatedPoly& other) const {
  require_same(*this, other);
  if (coeffs_.empty() || other.coeffs_.empty()) return TruncatedPoly(ring_, {}, n_);
  std::size_t len = coeffs_.size() + other.coeffs_.size() - 1;
  if (n_) len = std::min(len, *n_);
  std::vector<std::uint64_t> out(len, 0);
  for (std::size_t i = 0; i < coeffs_.size() && i < len; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size() && i + j < len; ++j) {
      out[i + j] = ring_.add_code(out[i + j], ring_.mul_code(coeffs_[i], other.coeffs_[j]));
    }
  }
  return TruncatedPoly(ring_, std::move(out), n_);
}

TruncatedPoly TruncatedPoly::pow(std::uint64_t e) const {
  TruncatedPoly out(ring_, {ring_.code_from_int(1)}, n_);
  TruncatedPoly base = *this;
  while (e > 0) {
    if (e & 1) out = out * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return out;
}

bool TruncatedPoly::is_one() const {
  if (coeff(0) != ring_.code_from_int(1)) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

bool TruncatedPoly::operator==(const TruncatedPoly& other) const {
  return n_ == other.n_ && coeffs_ == other.coeffs_ && ring_ == other.ring_;
}

std::string TruncatedPoly::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!out.empty()) out += "+";
    const auto c = ring_.format_code(coeffs_[i]);
    if (i == 0) {
      out += c;
      continue;
    }
    if (c != "1") out += c.find('+') == std::string::npos ? c : "(" + c + ")";
    out += i == 1 ? "t" : "t^" + std::to_string(i);
  }
  if (out.empty()) out = "0";
  if (n_) out += " mod t^" + std::to_string(*n_);
  return out;
}

bool poly_is_unit(const TruncatedPoly& f) {
  if (f.is_truncated()) {
    throw Error(ErrorKind::QuotientMode, "the unit criterion applies to R[t], not R[t]/t^N");
  }
  const Ring& ring = f.ring();
  if (!ring.element(f.coeff(0)).is_unit()) return false;
  for (std::size_t i = 1; i < f.coeffs().size(); ++i) {
    if (!ring.element(f.coeffs()[i]).is_nilpotent()) return false;
  }
  return true;
}

std::vector<std::uint64_t> nilradical(const Ring& ring) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t c = 0; c < ring.cardinality(); ++c) {
    if (ring.element(c).is_nilpotent()) out.push_back(c);
  }
  return out;
}

bool OnePlusNilGroup::contains(const TruncatedPoly& f) const {
  return std::find(elements.begin(), elements.end(), f) != elements.end();
}

TruncatedPoly OnePlusNilGroup::multiply(const TruncatedPoly& f, const TruncatedPoly& g) const { return f * g; }

TruncatedPoly OnePlusNilGroup::inverse(const TruncatedPoly& f) const { return f.pow(elements.size() - 1); }

OnePlusNilGroup one_plus_nil_group(const Ring& ring, std::size_t n, std::uint64_t budget) {
  if (n < 1) throw Error(ErrorKind::InvalidParams, "truncation degree must be >= 1");
  const auto nil = nilradical(ring);
  std::uint64_t total = 1;
  for (std::size_t i = 1; i < n; ++i) {
    if (__builtin_mul_overflow(total, nil.size(), &total) || total > budget) {
      throw Error(ErrorKind::BudgetExceeded, "1 + Nil(R)[t] mod t^" + std::to_string(n) + " exceeds budget");
    }
  }
  OnePlusNilGroup g{ring, n, {}};
  g.elements.reserve(total);
  const auto one = ring.code_from_int(1);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<std::uint64_t> coeffs(n, 0);
    coeffs[0] = one;
    auto rest = idx;
    for (std::size_t i = 1; i < n; ++i) {
      coeffs[i] = nil[rest % nil.size()];
      rest /= nil.size();
    }
    g.elements.push_back(TruncatedPoly::truncated(ring, std::move(coeffs), n));
  }
  return g;
}

RootSearch has_pth_root(const TruncatedPoly& u, std::int64_t p, std::uint64_t budget) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidParams, "p=" + std::to_string(p) + " is not prime");
  if (!u.is_truncated()) throw Error(ErrorKind::InvalidParams, "has_pth_root works in R[t]/t^N");
  const Ring& ring = u.ring();
  const std::size_t n = *u.modulus_degree();
  if (u.coeff(0) != ring.code_from_int(1)) throw Error(ErrorKind::InvalidParams, "u must have constant term 1");
  for (std::size_t i = 1; i < n; ++i) {
    if (!ring.element(u.coeff(i)).is_nilpotent()) {
      throw Error(ErrorKind::InvalidParams, "u must have nilpotent higher coefficients");
    }
  }

  const auto group = one_plus_nil_group(ring, n, budget);
  RootSearch out;
  for (const auto& y : group.elements) {
    ++out.searched;
    if (y.pow(static_cast<std::uint64_t>(p)) == u) {
      out.exists = true;
      out.witness = y;
      return out;
    }
  }
  // The t^1 coefficient of (1 + y_1 t + ...)^p is p y_1.
  bool linear_solvable = n < 2;
  const auto pc = ring.code_from_int(p);
  for (auto y1 : nilradical(ring)) {
    if (n >= 2 && ring.mul_code(pc, y1) == u.coeff(1)) linear_solvable = true;
  }
  if (!linear_solvable) {
    out.obstruction = "t^1 coefficient: " + std::to_string(p) + "*y_1 = " + ring.format_code(u.coeff(1)) +
                      " has no nilpotent solution in " + ring.name();
  } else {
    out.obstruction = "no y in 1+Nil(" + ring.name() + ")[t] mod t^" + std::to_string(n) + " has y^" +
                      std::to_string(p) + " = u (exhaustive)";
  }
  return out;
}

TorsionTrace torsion_free_check(std::int64_t p, std::size_t n, unsigned k) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidParams, "p=" + std::to_string(p) + " is not prime");
  if (n < 1) throw Error(ErrorKind::InvalidParams, "truncation degree must be >= 1");
  TorsionTrace trace{p, n, k, {}, true};
  const Integer exponent = pow_integer(p, k);
  for (std::size_t i = 1; i < n; ++i) {
    // With x_1..x_{i-1} = 0, x = 1 + x_i t^i + O(t^{i+1}); x_i enters the t^i
    // coefficient of x^{p^k} linearly, with the coefficient of t^i in (1 + t^i)^{p^k}.
    std::vector<Integer> probe(i + 1, 0);
    probe[0] = 1;
    probe[i] = 1;
    const auto expanded = int_pow(probe, exponent, i + 1);
    TorsionStep step;
    step.index = i;
    step.multiplier = expanded[i];
    const auto xi = "x_" + std::to_string(i);
    step.equation = step.multiplier.get_str() + "*" + xi + " = 0";
    if (step.multiplier != 0) {
      step.conclusion = xi + " = 0";
    } else {
      step.conclusion = xi + " undetermined";
      trace.concludes_identity = false;
    }
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

bool is_p_power_torsion(const std::vector<Integer>& x, std::int64_t p, unsigned k, std::size_t n) {
  const auto power = int_pow(x, pow_integer(p, k), n);
  for (std::size_t i = 0; i < n; ++i) {
    if (power[i] != (i == 0 ? 1 : 0)) return false;
  }
  return true;
}

}  // namespace cuspk
