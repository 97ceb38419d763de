#include "cuspk/ring.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "cuspk/arith.hpp"
#include "cuspk/error.hpp"

namespace cuspk {

namespace {

constexpr std::uint64_t kMaxCardinality = std::uint64_t{1} << 62;
constexpr std::uint64_t kTableLimit = 256;

std::int64_t mod_floor(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

// Polynomials over F_p as coefficient vectors, lowest degree first.
using Poly = std::vector<std::int64_t>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo monic g over F_p.
Poly poly_rem(Poly f, const Poly& g, std::int64_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const std::int64_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = mod_floor(f[shift + i] - lead * g[i], p);
    }
    trim(f);
  }
  return f;
}

bool is_irreducible(const Poly& f, std::int64_t p) {
  const int d = static_cast<int>(f.size()) - 1;
  for (int k = 1; 2 * k <= d; ++k) {
    // every monic polynomial of degree k
    std::uint64_t count = 1;
    for (int i = 0; i < k; ++i) count *= static_cast<std::uint64_t>(p);
    for (std::uint64_t t = 0; t < count; ++t) {
      Poly g(k + 1);
      std::uint64_t rest = t;
      for (int i = 0; i < k; ++i) {
        g[i] = static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(p));
        rest /= static_cast<std::uint64_t>(p);
      }
      g[k] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::string join_ints(std::span<const std::int64_t> xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out;
}

template <typename Coeff>
std::string format_poly(std::span<const Coeff> coeffs) {
  std::string out;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const Coeff& c = coeffs[k];
    if (c == 0) continue;
    std::ostringstream term;
    const bool negative = c < 0;
    Coeff mag = negative ? Coeff(-c) : c;
    if (!out.empty()) {
      out += negative ? "-" : "+";
    } else if (negative) {
      out += "-";
    }
    if (k == 0 || mag != 1) term << mag;
    if (k >= 1) term << "x";
    if (k >= 2) term << "^" << k;
    out += term.str();
  }
  return out.empty() ? "0" : out;
}

}  // namespace

struct Ring::Impl {
  RingKind kind = RingKind::Zmod;
  std::int64_t n = 0;
  std::int64_t p = 0;
  int degree = 0;
  Poly modulus;
  std::vector<Integer> modulus_z;
  std::vector<Ring> factors;
  std::vector<std::uint64_t> radix;
  std::vector<std::size_t> cover_offsets;
  std::uint64_t cardinality = 0;
  std::int64_t characteristic = 0;
  std::size_t cover_width = 0;
  std::string key;
  std::string name;
  std::vector<std::uint16_t> add_table;
  std::vector<std::uint16_t> mul_table;

  // GaloisField digit helpers.
  void decode(std::uint64_t code, std::int64_t* digits) const {
    for (int i = 0; i < degree; ++i) {
      digits[i] = static_cast<std::int64_t>(code % static_cast<std::uint64_t>(p));
      code /= static_cast<std::uint64_t>(p);
    }
  }
  std::uint64_t encode(const std::int64_t* digits) const {
    std::uint64_t code = 0;
    for (int i = degree; i-- > 0;) code = code * static_cast<std::uint64_t>(p) + static_cast<std::uint64_t>(digits[i]);
    return code;
  }

  std::uint64_t gf_add(std::uint64_t x, std::uint64_t y, bool subtract) const {
    std::vector<std::int64_t> a(degree), b(degree);
    decode(x, a.data());
    decode(y, b.data());
    for (int i = 0; i < degree; ++i) a[i] = mod_floor(subtract ? a[i] - b[i] : a[i] + b[i], p);
    return encode(a.data());
  }

  std::uint64_t gf_mul(std::uint64_t x, std::uint64_t y) const {
    std::vector<std::int64_t> a(degree), b(degree);
    decode(x, a.data());
    decode(y, b.data());
    std::vector<std::int64_t> prod(2 * degree - 1, 0);
    for (int i = 0; i < degree; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < degree; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    for (int k = 2 * degree - 2; k >= degree; --k) {
      const std::int64_t c = prod[k];
      if (c == 0) continue;
      for (int i = 0; i < degree; ++i) prod[k - degree + i] = mod_floor(prod[k - degree + i] - c * modulus[i], p);
      prod[k] = 0;
    }
    return encode(prod.data());
  }

  // Product helpers.
  std::uint64_t component(std::uint64_t code, std::size_t i) const {
    return (code / radix[i]) % factors[i].cardinality();
  }
};

// ---------------------------------------------------------------------------
// Construction

Ring Ring::zmod(std::int64_t n) {
  if (n < 2) throw Error(ErrorKind::UnsupportedRing, "Z/n requires n >= 2, got " + std::to_string(n));
  if (static_cast<std::uint64_t>(n) > kMaxCardinality) throw Error(ErrorKind::UnsupportedRing, "modulus too large");
  auto impl = std::make_shared<Impl>();
  impl->kind = RingKind::Zmod;
  impl->n = n;
  impl->cardinality = static_cast<std::uint64_t>(n);
  impl->characteristic = n;
  impl->cover_width = 1;
  impl->key = "Z" + std::to_string(n);
  impl->name = impl->key;
  return Ring(std::move(impl));
}

std::vector<std::int64_t> Ring::default_modulus(std::int64_t p, int degree) {
  if (!is_prime(p)) throw Error(ErrorKind::UnsupportedRing, std::to_string(p) + " is not prime");
  if (degree < 1) throw Error(ErrorKind::UnsupportedRing, "field degree must be >= 1");
  std::uint64_t count = 1;
  for (int i = 0; i < degree; ++i) {
    if (count > kMaxCardinality / static_cast<std::uint64_t>(p)) throw Error(ErrorKind::UnsupportedRing, "field too large");
    count *= static_cast<std::uint64_t>(p);
  }
  for (std::uint64_t t = 0; t < count; ++t) {
    Poly f(degree + 1);
    std::uint64_t rest = t;
    for (int i = 0; i < degree; ++i) {
      f[i] = static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(p));
      rest /= static_cast<std::uint64_t>(p);
    }
    f[degree] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw Error(ErrorKind::UnsupportedRing, "no irreducible polynomial found");  // unreachable for prime p
}

Ring Ring::galois_field(std::int64_t p, int degree) {
  return galois_field(p, default_modulus(p, degree));
}

Ring Ring::galois_field(std::int64_t p, std::vector<std::int64_t> modulus) {
  if (!is_prime(p)) throw Error(ErrorKind::UnsupportedRing, std::to_string(p) + " is not prime");
  if (modulus.size() < 2) throw Error(ErrorKind::UnsupportedRing, "modulus must have degree >= 1");
  if (modulus.back() != 1) throw Error(ErrorKind::UnsupportedRing, "modulus must be monic");
  for (auto c : modulus) {
    if (c < 0 || c >= p) throw Error(ErrorKind::UnsupportedRing, "modulus coefficients must lie in [0, p)");
  }
  if (!is_irreducible(modulus, p)) {
    throw Error(ErrorKind::UnsupportedRing, "modulus " + join_ints(modulus) + " is reducible mod " + std::to_string(p));
  }
  const int degree = static_cast<int>(modulus.size()) - 1;
  auto impl = std::make_shared<Impl>();
  impl->kind = RingKind::GaloisField;
  impl->p = p;
  impl->degree = degree;
  impl->modulus = modulus;
  for (auto c : modulus) impl->modulus_z.emplace_back(static_cast<long>(c));
  std::uint64_t q = 1;
  for (int i = 0; i < degree; ++i) {
    if (q > kMaxCardinality / static_cast<std::uint64_t>(p)) throw Error(ErrorKind::UnsupportedRing, "field too large");
    q *= static_cast<std::uint64_t>(p);
  }
  impl->cardinality = q;
  impl->characteristic = p;
  impl->cover_width = static_cast<std::size_t>(degree);
  const bool is_default = (modulus == default_modulus(p, degree));
  impl->key = "F" + std::to_string(p) + "[" + join_ints(modulus) + "]";
  if (degree == 1) {
    impl->name = "F" + std::to_string(p);
  } else {
    impl->name = "F" + std::to_string(p) + "^" + std::to_string(degree);
  }
  if (!is_default) impl->name += "[" + join_ints(modulus) + "]";
  if (q <= kTableLimit && degree > 1) {
    impl->add_table.resize(q * q);
    impl->mul_table.resize(q * q);
    for (std::uint64_t x = 0; x < q; ++x) {
      for (std::uint64_t y = 0; y < q; ++y) {
        impl->add_table[x * q + y] = static_cast<std::uint16_t>(impl->gf_add(x, y, false));
        impl->mul_table[x * q + y] = static_cast<std::uint16_t>(impl->gf_mul(x, y));
      }
    }
  }
  return Ring(std::move(impl));
}

Ring Ring::product(std::vector<Ring> factors) {
  if (factors.empty()) throw Error(ErrorKind::UnsupportedRing, "product needs at least one factor");
  if (factors.size() == 1) return factors.front();
  auto impl = std::make_shared<Impl>();
  impl->kind = RingKind::Product;
  std::uint64_t card = 1;
  std::int64_t ch = 1;
  std::size_t width = 0;
  for (const auto& f : factors) {
    impl->radix.push_back(card);
    impl->cover_offsets.push_back(width);
    if (card > kMaxCardinality / f.cardinality()) throw Error(ErrorKind::UnsupportedRing, "product too large");
    card *= f.cardinality();
    ch = std::lcm(ch, f.characteristic());
    width += f.cover_width();
    if (!impl->key.empty()) {
      impl->key += "x";
      impl->name += "x";
    }
    impl->key += "(" + f.key() + ")";
    impl->name += f.name();
  }
  impl->cover_offsets.push_back(width);
  impl->factors = std::move(factors);
  impl->cardinality = card;
  impl->characteristic = ch;
  impl->cover_width = width;
  return Ring(std::move(impl));
}

Ring Ring::parse(std::string_view spec, const std::optional<std::vector<std::int64_t>>& modulus) {
  auto fail = [&]() -> Ring { throw Error(ErrorKind::UnsupportedRing, "cannot parse ring spec '" + std::string(spec) + "'"); };
  auto parse_int = [&](std::string_view s) -> std::int64_t {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) fail();
    return v;
  };
  std::vector<std::string_view> tokens;
  std::size_t start = 0;
  while (true) {
    auto pos = spec.find('x', start);
    tokens.push_back(spec.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  if (modulus && tokens.size() != 1) {
    throw Error(ErrorKind::UnsupportedRing, "--modulus applies to a single field spec");
  }
  std::vector<Ring> rings;
  for (auto tok : tokens) {
    if (tok.size() < 2) fail();
    if (tok[0] == 'Z') {
      if (modulus) throw Error(ErrorKind::UnsupportedRing, "--modulus applies to F<p>^<d> specs only");
      rings.push_back(zmod(parse_int(tok.substr(1))));
    } else if (tok[0] == 'F') {
      auto caret = tok.find('^');
      std::int64_t p = parse_int(tok.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1));
      std::int64_t d = caret == std::string_view::npos ? 1 : parse_int(tok.substr(caret + 1));
      // "F9" is read as F3^2.
      if (caret == std::string_view::npos && p > 1 && !is_prime(p)) {
        std::int64_t q = 2;
        while (p % q != 0) ++q;
        std::int64_t rest = p;
        d = 0;
        while (rest % q == 0) {
          rest /= q;
          ++d;
        }
        if (rest != 1) throw Error(ErrorKind::UnsupportedRing, std::to_string(p) + " is not a prime power");
        p = q;
      }
      if (d < 1 || d > 62) fail();
      if (modulus) {
        if (static_cast<std::int64_t>(modulus->size()) != d + 1) {
          throw Error(ErrorKind::UnsupportedRing, "modulus degree does not match " + std::string(tok));
        }
        rings.push_back(galois_field(p, *modulus));
      } else {
        rings.push_back(galois_field(p, static_cast<int>(d)));
      }
    } else {
      fail();
    }
  }
  return product(std::move(rings));
}

// ---------------------------------------------------------------------------
// Accessors

RingKind Ring::kind() const { return impl_->kind; }
std::int64_t Ring::characteristic() const { return impl_->characteristic; }
std::uint64_t Ring::cardinality() const { return impl_->cardinality; }
std::string Ring::name() const { return impl_->name; }
const std::string& Ring::key() const { return impl_->key; }
std::int64_t Ring::field_prime() const { return impl_->p; }
int Ring::field_degree() const { return impl_->degree; }
const std::vector<std::int64_t>& Ring::modulus() const { return impl_->modulus; }
const std::vector<Ring>& Ring::factors() const { return impl_->factors; }
std::size_t Ring::cover_width() const { return impl_->cover_width; }

std::optional<std::int64_t> Ring::characteristic_prime() const {
  std::int64_t n = impl_->characteristic;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      while (n % d == 0) n /= d;
      if (n == 1) return d;
      return std::nullopt;
    }
  }
  return n;
}

bool Ring::is_perfect_fp_algebra(std::int64_t p) const {
  switch (impl_->kind) {
    case RingKind::Zmod: return impl_->n == p && is_prime(p);
    case RingKind::GaloisField: return impl_->p == p;
    case RingKind::Product:
      return std::all_of(impl_->factors.begin(), impl_->factors.end(),
                         [p](const Ring& f) { return f.is_perfect_fp_algebra(p); });
  }
  return false;
}

bool Ring::operator==(const Ring& other) const {
  return impl_ == other.impl_ || impl_->key == other.impl_->key;
}

// ---------------------------------------------------------------------------
// Code arithmetic

std::uint64_t Ring::add_code(std::uint64_t x, std::uint64_t y) const {
  const Impl& r = *impl_;
  switch (r.kind) {
    case RingKind::Zmod: {
      const auto n = static_cast<std::uint64_t>(r.n);
      const std::uint64_t s = x + y;
      return s >= n ? s - n : s;
    }
    case RingKind::GaloisField:
      if (r.degree == 1) {
        const auto n = static_cast<std::uint64_t>(r.p);
        const std::uint64_t s = x + y;
        return s >= n ? s - n : s;
      }
      if (!r.add_table.empty()) return r.add_table[x * r.cardinality + y];
      return r.gf_add(x, y, false);
    case RingKind::Product: {
      std::uint64_t out = 0;
      for (std::size_t i = 0; i < r.factors.size(); ++i) {
        out += r.radix[i] * r.factors[i].add_code(r.component(x, i), r.component(y, i));
      }
      return out;
    }
  }
  return 0;
}

std::uint64_t Ring::neg_code(std::uint64_t x) const {
  const Impl& r = *impl_;
  switch (r.kind) {
    case RingKind::Zmod:
      return x == 0 ? 0 : static_cast<std::uint64_t>(r.n) - x;
    case RingKind::GaloisField:
      if (r.degree == 1) return x == 0 ? 0 : static_cast<std::uint64_t>(r.p) - x;
      return r.gf_add(0, x, true);
    case RingKind::Product: {
      std::uint64_t out = 0;
      for (std::size_t i = 0; i < r.factors.size(); ++i) out += r.radix[i] * r.factors[i].neg_code(r.component(x, i));
      return out;
    }
  }
  return 0;
}

std::uint64_t Ring::sub_code(std::uint64_t x, std::uint64_t y) const { return add_code(x, neg_code(y)); }

std::uint64_t Ring::mul_code(std::uint64_t x, std::uint64_t y) const {
  const Impl& r = *impl_;
  switch (r.kind) {
    case RingKind::Zmod:
      return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * y) % static_cast<std::uint64_t>(r.n));
    case RingKind::GaloisField:
      if (r.degree == 1) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * y) % static_cast<std::uint64_t>(r.p));
      }
      if (!r.mul_table.empty()) return r.mul_table[x * r.cardinality + y];
      return r.gf_mul(x, y);
    case RingKind::Product: {
      std::uint64_t out = 0;
      for (std::size_t i = 0; i < r.factors.size(); ++i) {
        out += r.radix[i] * r.factors[i].mul_code(r.component(x, i), r.component(y, i));
      }
      return out;
    }
  }
  return 0;
}

std::uint64_t Ring::pow_code(std::uint64_t x, std::uint64_t e) const {
  std::uint64_t result = code_from_int(1);
  std::uint64_t base = x;
  while (e > 0) {
    if (e & 1U) result = mul_code(result, base);
    e >>= 1U;
    if (e) base = mul_code(base, base);
  }
  return result;
}

std::uint64_t Ring::code_from_int(std::int64_t value) const {
  const Impl& r = *impl_;
  switch (r.kind) {
    case RingKind::Zmod: return static_cast<std::uint64_t>(mod_floor(value, r.n));
    case RingKind::GaloisField: return static_cast<std::uint64_t>(mod_floor(value, r.p));
    case RingKind::Product: {
      std::uint64_t out = 0;
      for (std::size_t i = 0; i < r.factors.size(); ++i) out += r.radix[i] * r.factors[i].code_from_int(value);
      return out;
    }
  }
  return 0;
}

RingElement Ring::zero() const { return RingElement(*this, 0); }
RingElement Ring::one() const { return RingElement(*this, code_from_int(1)); }
RingElement Ring::from_int(std::int64_t value) const { return RingElement(*this, code_from_int(value)); }

RingElement Ring::element(std::uint64_t code) const {
  if (code >= impl_->cardinality) throw Error(ErrorKind::InvalidParams, "element code out of range");
  return RingElement(*this, code);
}

RingElement Ring::from_coeffs(std::span<const std::int64_t> coeffs) const {
  if (impl_->kind != RingKind::GaloisField) throw Error(ErrorKind::UnsupportedRing, "from_coeffs requires a Galois field");
  std::vector<std::int64_t> digits(impl_->degree, 0);
  Poly f(coeffs.begin(), coeffs.end());
  for (auto& c : f) c = mod_floor(c, impl_->p);
  f = poly_rem(f, impl_->modulus, impl_->p);
  std::copy(f.begin(), f.end(), digits.begin());
  return RingElement(*this, impl_->encode(digits.data()));
}

std::vector<RingElement> Ring::elements() const {
  std::vector<RingElement> out;
  out.reserve(impl_->cardinality);
  for (std::uint64_t c = 0; c < impl_->cardinality; ++c) out.emplace_back(*this, c);
  return out;
}

std::string Ring::format_code(std::uint64_t code) const {
  const Impl& r = *impl_;
  switch (r.kind) {
    case RingKind::Zmod: return std::to_string(code);
    case RingKind::GaloisField: {
      if (r.degree == 1) return std::to_string(code);
      std::vector<std::int64_t> digits(r.degree);
      r.decode(code, digits.data());
      return format_poly<std::int64_t>(digits);
    }
    case RingKind::Product: {
      std::string out = "(";
      for (std::size_t i = 0; i < r.factors.size(); ++i) {
        if (i) out += ",";
        out += r.factors[i].format_code(r.component(code, i));
      }
      return out + ")";
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Cover

CoverElement Ring::cover_zero() const { return CoverElement{std::vector<Integer>(impl_->cover_width, 0)}; }

CoverElement Ring::cover_from_integer(const Integer& value) const {
  const Impl& r = *impl_;
  CoverElement out = cover_zero();
  switch (r.kind) {
    case RingKind::Zmod:
    case RingKind::GaloisField:
      out.coeffs[0] = value;
      break;
    case RingKind::Product:
      for (std::size_t i = 0; i < r.factors.size(); ++i) out.coeffs[r.cover_offsets[i]] = value;
      break;
  }
  return out;
}

CoverElement Ring::lift_code(std::uint64_t code) const {
  const Impl& r = *impl_;
  CoverElement out = cover_zero();
  switch (r.kind) {
    case RingKind::Zmod:
      out.coeffs[0] = Integer(static_cast<unsigned long>(code));
      break;
    case RingKind::GaloisField: {
      std::vector<std::int64_t> digits(r.degree);
      r.decode(code, digits.data());
      for (int i = 0; i < r.degree; ++i) out.coeffs[i] = static_cast<long>(digits[i]);
      break;
    }
    case RingKind::Product:
      for (std::size_t i = 0; i < r.factors.size(); ++i) {
        CoverElement part = r.factors[i].lift_code(r.component(code, i));
        std::move(part.coeffs.begin(), part.coeffs.end(), out.coeffs.begin() + static_cast<std::ptrdiff_t>(r.cover_offsets[i]));
      }
      break;
  }
  return out;
}

std::uint64_t Ring::reduce_code(const CoverElement& c) const {
  const Impl& r = *impl_;
  if (c.coeffs.size() != r.cover_width) throw Error(ErrorKind::ShapeMismatch, "cover element has the wrong width");
  switch (r.kind) {
    case RingKind::Zmod: {
      Integer m;
      mpz_fdiv_r_ui(m.get_mpz_t(), c.coeffs[0].get_mpz_t(), static_cast<unsigned long>(r.n));
      return m.get_ui();
    }
    case RingKind::GaloisField: {
      std::vector<std::int64_t> digits(r.degree);
      Integer m;
      for (int i = 0; i < r.degree; ++i) {
        mpz_fdiv_r_ui(m.get_mpz_t(), c.coeffs[i].get_mpz_t(), static_cast<unsigned long>(r.p));
        digits[i] = static_cast<std::int64_t>(m.get_ui());
      }
      return r.encode(digits.data());
    }
    case RingKind::Product: {
      std::uint64_t out = 0;
      for (std::size_t i = 0; i < r.factors.size(); ++i) {
        CoverElement part{std::vector<Integer>(c.coeffs.begin() + static_cast<std::ptrdiff_t>(r.cover_offsets[i]),
                                               c.coeffs.begin() + static_cast<std::ptrdiff_t>(r.cover_offsets[i + 1]))};
        out += r.radix[i] * r.factors[i].reduce_code(part);
      }
      return out;
    }
  }
  return 0;
}

CoverElement Ring::lift(const RingElement& x) const {
  if (!(x.ring() == *this)) throw Error(ErrorKind::MixedRings, "lift of an element of " + x.ring().name() + " into " + name());
  return lift_code(x.code());
}

RingElement Ring::reduce(const CoverElement& c) const { return RingElement(*this, reduce_code(c)); }

CoverElement Ring::cover_add(const CoverElement& x, const CoverElement& y) const {
  CoverElement out = x;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += y.coeffs[i];
  return out;
}

CoverElement Ring::cover_sub(const CoverElement& x, const CoverElement& y) const {
  CoverElement out = x;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] -= y.coeffs[i];
  return out;
}

CoverElement Ring::cover_neg(const CoverElement& x) const {
  CoverElement out = x;
  for (auto& c : out.coeffs) c = -c;
  return out;
}

CoverElement Ring::cover_scale(const CoverElement& x, const Integer& k) const {
  CoverElement out = x;
  for (auto& c : out.coeffs) c *= k;
  return out;
}

void Ring::cover_add_scaled(CoverElement& acc, const CoverElement& x, const Integer& k) const {
  for (std::size_t i = 0; i < acc.coeffs.size(); ++i) mpz_addmul(acc.coeffs[i].get_mpz_t(), x.coeffs[i].get_mpz_t(), k.get_mpz_t());
}

CoverElement Ring::cover_div_exact(const CoverElement& x, const Integer& k) const {
  CoverElement out = x;
  for (auto& c : out.coeffs) {
    if (!mpz_divisible_p(c.get_mpz_t(), k.get_mpz_t())) {
      throw Error(ErrorKind::InexactDivision, c.get_str() + " is not divisible by " + k.get_str() + " in the cover of " + name());
    }
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), k.get_mpz_t());
  }
  return out;
}

namespace {

// Product in Z[x]/(f) for monic f given by its integer coefficients c_0..c_d.
void poly_mul_into(std::span<const Integer> a, std::span<const Integer> b, std::span<const Integer> modulus,
                   std::span<Integer> out) {
  const std::size_t d = a.size();
  if (d == 1) {
    mpz_mul(out[0].get_mpz_t(), a[0].get_mpz_t(), b[0].get_mpz_t());
    return;
  }
  std::vector<Integer> prod(2 * d - 1, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) mpz_addmul(prod[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  for (std::size_t k = 2 * d - 1; k-- > d;) {
    if (prod[k] == 0) continue;
    for (std::size_t i = 0; i < d; ++i) mpz_submul(prod[k - d + i].get_mpz_t(), prod[k].get_mpz_t(), modulus[i].get_mpz_t());
  }
  for (std::size_t i = 0; i < d; ++i) out[i] = std::move(prod[i]);
}

}  // namespace

CoverElement Ring::cover_mul(const CoverElement& x, const CoverElement& y) const {
  const Impl& r = *impl_;
  CoverElement out = cover_zero();
  switch (r.kind) {
    case RingKind::Zmod:
      mpz_mul(out.coeffs[0].get_mpz_t(), x.coeffs[0].get_mpz_t(), y.coeffs[0].get_mpz_t());
      break;
    case RingKind::GaloisField:
      poly_mul_into(x.coeffs, y.coeffs, r.modulus_z, out.coeffs);
      break;
    case RingKind::Product:
      for (std::size_t i = 0; i < r.factors.size(); ++i) {
        const auto lo = static_cast<std::ptrdiff_t>(r.cover_offsets[i]);
        const auto hi = static_cast<std::ptrdiff_t>(r.cover_offsets[i + 1]);
        CoverElement xi{std::vector<Integer>(x.coeffs.begin() + lo, x.coeffs.begin() + hi)};
        CoverElement yi{std::vector<Integer>(y.coeffs.begin() + lo, y.coeffs.begin() + hi)};
        CoverElement zi = r.factors[i].cover_mul(xi, yi);
        std::move(zi.coeffs.begin(), zi.coeffs.end(), out.coeffs.begin() + lo);
      }
      break;
  }
  return out;
}

CoverElement Ring::cover_pow(const CoverElement& x, std::uint64_t e) const {
  if (impl_->kind == RingKind::Zmod) {
    CoverElement out = cover_zero();
    mpz_pow_ui(out.coeffs[0].get_mpz_t(), x.coeffs[0].get_mpz_t(), e);
    return out;
  }
  CoverElement result = cover_from_integer(1);
  CoverElement base = x;
  while (e > 0) {
    if (e & 1U) result = cover_mul(result, base);
    e >>= 1U;
    if (e) base = cover_mul(base, base);
  }
  return result;
}

bool Ring::cover_is_zero(const CoverElement& x) const {
  return std::all_of(x.coeffs.begin(), x.coeffs.end(), [](const Integer& c) { return c == 0; });
}

std::string Ring::cover_to_string(const CoverElement& x) const {
  const Impl& r = *impl_;
  switch (r.kind) {
    case RingKind::Zmod: return x.coeffs[0].get_str();
    case RingKind::GaloisField:
      if (r.degree == 1) return x.coeffs[0].get_str();
      return format_poly<Integer>(x.coeffs);
    case RingKind::Product: {
      std::string out = "(";
      for (std::size_t i = 0; i < r.factors.size(); ++i) {
        if (i) out += ",";
        const auto lo = static_cast<std::ptrdiff_t>(r.cover_offsets[i]);
        const auto hi = static_cast<std::ptrdiff_t>(r.cover_offsets[i + 1]);
        out += r.factors[i].cover_to_string(CoverElement{std::vector<Integer>(x.coeffs.begin() + lo, x.coeffs.begin() + hi)});
      }
      return out + ")";
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Elements

namespace {

void require_same(const RingElement& x, const RingElement& y) {
  if (!(x.ring() == y.ring())) {
    throw Error(ErrorKind::MixedRings, "operands belong to " + x.ring().name() + " and " + y.ring().name());
  }
}

}  // namespace

RingElement RingElement::operator+(const RingElement& other) const {
  require_same(*this, other);
  return RingElement(ring_, ring_.add_code(code_, other.code_));
}

RingElement RingElement::operator-(const RingElement& other) const {
  require_same(*this, other);
  return RingElement(ring_, ring_.sub_code(code_, other.code_));
}

RingElement RingElement::operator*(const RingElement& other) const {
  require_same(*this, other);
  return RingElement(ring_, ring_.mul_code(code_, other.code_));
}

RingElement RingElement::operator-() const { return RingElement(ring_, ring_.neg_code(code_)); }

RingElement RingElement::pow(std::uint64_t e) const { return RingElement(ring_, ring_.pow_code(code_, e)); }

bool RingElement::is_unit() const {
  switch (ring_.kind()) {
    case RingKind::Zmod:
      return std::gcd(code_, static_cast<std::uint64_t>(ring_.characteristic())) == 1;
    case RingKind::GaloisField:
      return code_ != 0;
    case RingKind::Product: {
      const auto& fs = ring_.factors();
      std::uint64_t rest = code_;
      for (const auto& f : fs) {
        if (!RingElement(f, rest % f.cardinality()).is_unit()) return false;
        rest /= f.cardinality();
      }
      return true;
    }
  }
  return false;
}

bool RingElement::is_nilpotent() const {
  // The nilpotency index of a nilpotent element never exceeds |R|.
  return ring_.pow_code(code_, ring_.cardinality()) == 0;
}

bool RingElement::is_zero_divisor() const {
  for (std::uint64_t y = 1; y < ring_.cardinality(); ++y) {
    if (ring_.mul_code(code_, y) == 0) return true;
  }
  return false;
}

std::string RingElement::to_string() const { return ring_.format_code(code_); }

bool RingElement::operator==(const RingElement& other) const { return code_ == other.code_ && ring_ == other.ring_; }

RingElement ring_arith(const RingElement& x, const RingElement& y, RingOp op) {
  switch (op) {
    case RingOp::Add: return x + y;
    case RingOp::Sub: return x - y;
    case RingOp::Mul: return x * y;
  }
  return x;
}

}  // namespace cuspk
