#include "quiddity/ring.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <charconv>
#include <limits>
#include <numeric>

#include "quiddity/intmath.hpp"

namespace qlab {

namespace {

// Dense polynomials over F_p, ascending coefficients, no trailing zeros.
using Poly = std::vector<std::uint64_t>;

void pnorm(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int pdeg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly pmul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], p), p);
    }
  }
  pnorm(r);
  return r;
}

std::uint64_t scalar_inv(std::uint64_t a, std::uint64_t p) {
  return powmod(a % p, p - 2, p);  // p prime
}

// Remainder of a by b (b nonzero, any leading coefficient).
Poly pmod(Poly a, const Poly& b, std::uint64_t p) {
  const std::uint64_t linv = scalar_inv(b.back(), p);
  while (pdeg(a) >= pdeg(b)) {
    std::uint64_t c = mulmod(a.back(), linv, p);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = submod(a[shift + i], mulmod(c, b[i], p), p);
    }
    pnorm(a);
  }
  return a;
}

Poly pmulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  return pmod(pmul(a, b, p), f, p);
}

Poly ppowmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly r{1};
  base = pmod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = pmulmod(r, base, f, p);
    base = pmulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Poly pgcd(Poly a, Poly b, std::uint64_t p) {
  while (!b.empty()) {
    Poly r = pmod(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    std::uint64_t s = scalar_inv(a.back(), p);
    for (auto& c : a) c = mulmod(c, s, p);
  }
  return a;
}

std::uint64_t peval(const Poly& f, std::uint64_t x, std::uint64_t p) {
  std::uint64_t r = 0;
  for (std::size_t i = f.size(); i-- > 0;) r = addmod(mulmod(r, x, p), f[i], p);
  return r;
}

bool rabin_irreducible(std::uint64_t p, const Poly& f) {
  const unsigned n = static_cast<unsigned>(pdeg(f));
  Poly x{0, 1};
  // p^k exponents all divide p^n which fits in 64 bits (checked by caller).
  auto ppow = [&](unsigned k) {
    std::uint64_t e = 1;
    for (unsigned i = 0; i < k; ++i) e *= p;
    return e;
  };
  if (ppowmod(x, ppow(n), f, p) != pmod(x, f, p)) return false;
  unsigned m = n;
  for (unsigned r = 2; r * r <= m; ++r) {
    if (m % r) continue;
    while (m % r == 0) m /= r;
    Poly h = ppowmod(x, ppow(n / r), f, p);
    Poly d = pmod(x, f, p);
    // h - x
    Poly g(std::max(h.size(), d.size()), 0);
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::uint64_t hv = i < h.size() ? h[i] : 0;
      std::uint64_t dv = i < d.size() ? d[i] : 0;
      g[i] = submod(hv, dv, p);
    }
    pnorm(g);
    if (pdeg(pgcd(g, f, p)) != 0) return false;
  }
  if (m > 1) {
    Poly h = ppowmod(x, ppow(n / m), f, p);
    Poly d = pmod(x, f, p);
    Poly g(std::max(h.size(), d.size()), 0);
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::uint64_t hv = i < h.size() ? h[i] : 0;
      std::uint64_t dv = i < d.size() ? d[i] : 0;
      g[i] = submod(hv, dv, p);
    }
    pnorm(g);
    if (pdeg(pgcd(g, f, p)) != 0) return false;
  }
  return true;
}

bool parse_u64(std::string_view s, std::uint64_t& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

// Signed decimal reduced into [0, m). Magnitude must fit in 64 bits.
bool parse_residue(std::string_view s, std::uint64_t m, std::uint64_t& out) {
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s.remove_prefix(1);
  }
  std::uint64_t v;
  if (!parse_u64(s, v)) return false;
  v %= m;
  out = negative && v ? m - v : v;
  return true;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

bool poly_irreducible_over_fp(std::uint64_t p, const std::vector<std::uint64_t>& f) {
  Poly g = f;
  pnorm(g);
  const int n = pdeg(g);
  if (n < 1) return false;
  if (n == 1) return true;
  if (n <= 3 && p <= 2'000'000) {
    for (std::uint64_t x = 0; x < p; ++x)
      if (peval(g, x, p) == 0) return false;
    return true;
  }
  if (n == 4 && p <= 3163) {
    for (std::uint64_t x = 0; x < p; ++x)
      if (peval(g, x, p) == 0) return false;
    for (std::uint64_t u = 0; u < p; ++u) {
      for (std::uint64_t v = 0; v < p; ++v) {
        Poly q{v, u, 1};
        if (pmod(g, q, p).empty()) return false;
      }
    }
    return true;
  }
  return rabin_irreducible(p, g);
}

std::vector<std::uint64_t> find_irreducible_poly(std::uint64_t p, unsigned degree) {
  if (degree == 0) raise(Err::OutOfRange, "degree must be positive");
  std::uint64_t total = 1;
  for (unsigned i = 0; i < degree; ++i) {
    if (total > budget() / p) raise(Err::Budget, "polynomial search space too large");
    total *= p;
  }
  for (std::uint64_t v = 0; v < total; ++v) {
    std::vector<std::uint64_t> f(degree + 1, 0);
    std::uint64_t t = v;
    for (unsigned i = 0; i < degree; ++i) {
      f[i] = t % p;
      t /= p;
    }
    f[degree] = 1;
    if (poly_irreducible_over_fp(p, f)) return f;
  }
  raise(Err::ReduciblePolynomial, "no irreducible polynomial found");
}

Ring Ring::zmod(std::uint64_t n) {
  if (n < 2) raise(Err::NTooSmall, "modulus must be at least 2");
  Ring r;
  r.kind_ = Kind::ZMod;
  r.card_ = n;
  r.char_ = n;
  r.field_ = is_prime_u64(n);
  r.p_ = n;
  r.deg_ = 1;
  return r;
}

Ring Ring::gf(std::uint64_t p, unsigned degree, std::vector<std::uint64_t> modpoly) {
  if (!is_prime_u64(p)) raise(Err::CompositeP, "GF base must be prime");
  if (degree < 1) raise(Err::MalformedSpec, "GF degree must be at least 1");
  if (modpoly.size() != degree + 1)
    raise(Err::MalformedSpec, "modulus polynomial needs degree+1 coefficients");
  for (auto& c : modpoly) c %= p;
  if (modpoly.back() != 1) raise(Err::MalformedSpec, "modulus polynomial must be monic");
  std::uint64_t card = 1;
  for (unsigned i = 0; i < degree; ++i) {
    if (card > std::numeric_limits<std::uint64_t>::max() / p)
      raise(Err::TooLarge, "cardinality exceeds 64 bits");
    card *= p;
  }
  if (!poly_irreducible_over_fp(p, modpoly))
    raise(Err::ReduciblePolynomial, "modulus polynomial is reducible");
  Ring r;
  r.kind_ = Kind::GF;
  r.card_ = card;
  r.char_ = p;
  r.field_ = true;
  r.p_ = p;
  r.deg_ = degree;
  r.modpoly_ = std::move(modpoly);
  r.pw_.resize(degree + 1);
  r.pw_[0] = 1;
  for (unsigned i = 1; i <= degree; ++i) r.pw_[i] = r.pw_[i - 1] * p;
  if (p == 2) {
    r.modmask_ = 0;
    for (unsigned i = 0; i <= degree; ++i)
      if (r.modpoly_[i]) r.modmask_ |= 1ull << i;
  }
  return r;
}

Ring Ring::parse(std::string_view s) {
  if (s.rfind("Z/", 0) == 0) {
    std::uint64_t n;
    if (!parse_u64(s.substr(2), n)) raise(Err::MalformedSpec, "bad modulus in ring spec");
    return zmod(n);
  }
  if (s.rfind("GF(", 0) == 0) {
    std::size_t caret = s.find('^', 3);
    std::size_t close = s.find(')', 3);
    if (caret == std::string_view::npos || close == std::string_view::npos ||
        caret > close || close + 1 >= s.size() || s[close + 1] != ':')
      raise(Err::MalformedSpec, "expected GF(<p>^<n>):<c0>,...,<cn>");
    std::uint64_t p, n;
    if (!parse_u64(s.substr(3, caret - 3), p) ||
        !parse_u64(s.substr(caret + 1, close - caret - 1), n))
      raise(Err::MalformedSpec, "bad p or n in ring spec");
    if (n == 0 || n > 64) raise(Err::MalformedSpec, "GF degree out of range");
    if (!is_prime_u64(p)) raise(Err::CompositeP, "GF base must be prime");
    auto parts = split(s.substr(close + 2), ',');
    if (parts.size() != n + 1)
      raise(Err::MalformedSpec, "modulus polynomial needs degree+1 coefficients");
    std::vector<std::uint64_t> coeffs(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (!parse_residue(parts[i], p, coeffs[i]))
        raise(Err::MalformedSpec, "bad coefficient in modulus polynomial");
    }
    return gf(p, static_cast<unsigned>(n), std::move(coeffs));
  }
  raise(Err::MalformedSpec, "ring spec must start with Z/ or GF(");
}

std::string Ring::spec() const {
  if (kind_ == Kind::ZMod) return "Z/" + std::to_string(card_);
  std::string s = "GF(" + std::to_string(p_) + "^" + std::to_string(deg_) + "):";
  for (unsigned i = 0; i <= deg_; ++i) {
    if (i) s += ",";
    s += std::to_string(modpoly_[i]);
  }
  return s;
}

void Ring::check_elt(Elt a) const { assert(a < card_); (void)a; }

Elt Ring::from_int(std::int64_t v) const {
  const std::uint64_t m = kind_ == Kind::ZMod ? card_ : p_;
  std::uint64_t r;
  if (v >= 0) {
    r = static_cast<std::uint64_t>(v) % m;
  } else {
    std::uint64_t mag = static_cast<std::uint64_t>(-(v + 1)) + 1;
    r = mag % m;
    if (r) r = m - r;
  }
  return r;
}

Elt Ring::add(Elt a, Elt b) const {
  check_elt(a);
  check_elt(b);
  if (kind_ == Kind::ZMod) return addmod(a, b, card_);
  if (p_ == 2) return a ^ b;
  if (deg_ == 1) return addmod(a, b, p_);
  Elt r = 0;
  for (unsigned i = 0; i < deg_; ++i) {
    std::uint64_t ca = (a / pw_[i]) % p_;
    std::uint64_t cb = (b / pw_[i]) % p_;
    r += addmod(ca, cb, p_) * pw_[i];
  }
  return r;
}

Elt Ring::neg(Elt a) const {
  check_elt(a);
  if (kind_ == Kind::ZMod) return a ? card_ - a : 0;
  if (p_ == 2) return a;
  if (deg_ == 1) return a ? p_ - a : 0;
  Elt r = 0;
  for (unsigned i = 0; i < deg_; ++i) {
    std::uint64_t c = (a / pw_[i]) % p_;
    r += (c ? p_ - c : 0) * pw_[i];
  }
  return r;
}

Elt Ring::sub(Elt a, Elt b) const { return add(a, neg(b)); }

Elt Ring::mul(Elt a, Elt b) const {
  check_elt(a);
  check_elt(b);
  if (kind_ == Kind::ZMod) return mulmod(a, b, card_);
  if (deg_ == 1) return mulmod(a, b, p_);
  if (p_ == 2) {
    unsigned __int128 acc = 0;
    std::uint64_t bb = b;
    while (bb) {
      int i = std::countr_zero(bb);
      acc ^= static_cast<unsigned __int128>(a) << i;
      bb &= bb - 1;
    }
    for (int bit = 2 * static_cast<int>(deg_) - 2; bit >= static_cast<int>(deg_); --bit) {
      if ((acc >> bit) & 1)
        acc ^= static_cast<unsigned __int128>(modmask_) << (bit - deg_);
    }
    return static_cast<Elt>(acc);
  }
  std::array<std::uint64_t, 64> da{}, db{};
  std::array<std::uint64_t, 127> prod{};
  std::uint64_t ta = a, tb = b;
  for (unsigned i = 0; i < deg_; ++i) {
    da[i] = ta % p_;
    ta /= p_;
    db[i] = tb % p_;
    tb /= p_;
  }
  for (unsigned i = 0; i < deg_; ++i) {
    if (!da[i]) continue;
    for (unsigned j = 0; j < deg_; ++j) {
      if (!db[j]) continue;
      prod[i + j] = addmod(prod[i + j], mulmod(da[i], db[j], p_), p_);
    }
  }
  for (int k = 2 * static_cast<int>(deg_) - 2; k >= static_cast<int>(deg_); --k) {
    std::uint64_t c = prod[k];
    if (!c) continue;
    prod[k] = 0;
    for (unsigned i = 0; i < deg_; ++i) {
      prod[k - deg_ + i] =
          submod(prod[k - deg_ + i], mulmod(c, modpoly_[i], p_), p_);
    }
  }
  Elt r = 0;
  for (unsigned i = 0; i < deg_; ++i) r += prod[i] * pw_[i];
  return r;
}

Elt Ring::pow(Elt a, std::uint64_t e) const {
  Elt r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

bool Ring::is_unit(Elt a) const {
  check_elt(a);
  if (kind_ == Kind::GF) return a != 0;
  return std::gcd(a, card_) == 1;
}

Elt Ring::inv(Elt a) const {
  if (!is_unit(a)) raise(Err::NotAUnit, "element " + show(a) + " is not a unit");
  if (kind_ == Kind::ZMod) {
    // extended gcd
    std::int64_t t = 0, nt = 1;
    std::uint64_t r = card_, nr = a;
    while (nr) {
      std::uint64_t q = r / nr;
      std::int64_t tmp = t - static_cast<std::int64_t>(q) * nt;
      t = nt;
      nt = tmp;
      std::uint64_t rr = r - q * nr;
      r = nr;
      nr = rr;
    }
    return t < 0 ? static_cast<Elt>(t + static_cast<std::int64_t>(card_))
                 : static_cast<Elt>(t);
  }
  if (deg_ == 1) return powmod(a, p_ - 2, p_);
  // extended polynomial gcd against the modulus
  Poly r0 = modpoly_, r1 = coeffs(a);
  pnorm(r1);
  Poly s0{}, s1{1};
  while (!r1.empty()) {
    // r0 = q r1 + r2
    Poly q;
    Poly rem = r0;
    const std::uint64_t linv = scalar_inv(r1.back(), p_);
    q.assign(rem.size() > r1.size() ? rem.size() - r1.size() + 1 : 1, 0);
    while (pdeg(rem) >= pdeg(r1)) {
      std::uint64_t c = mulmod(rem.back(), linv, p_);
      std::size_t shift = rem.size() - r1.size();
      q[shift] = c;
      for (std::size_t i = 0; i < r1.size(); ++i)
        rem[shift + i] = submod(rem[shift + i], mulmod(c, r1[i], p_), p_);
      pnorm(rem);
    }
    pnorm(q);
    Poly qs = pmul(q, s1, p_);
    Poly s2(std::max(s0.size(), qs.size()), 0);
    for (std::size_t i = 0; i < s2.size(); ++i) {
      std::uint64_t av = i < s0.size() ? s0[i] : 0;
      std::uint64_t bv = i < qs.size() ? qs[i] : 0;
      s2[i] = submod(av, bv, p_);
    }
    pnorm(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant times the gcd (degree 0 since the modulus is irreducible)
  std::uint64_t s = scalar_inv(r0.empty() ? 1 : r0[0], p_);
  Poly res;
  res.reserve(s0.size());
  for (auto c : s0) res.push_back(mulmod(c, s, p_));
  res = pmod(std::move(res), modpoly_, p_);
  std::vector<std::uint64_t> full(deg_, 0);
  for (std::size_t i = 0; i < res.size(); ++i) full[i] = res[i];
  return from_coeffs(full);
}

std::vector<std::uint64_t> Ring::coeffs(Elt a) const {
  check_elt(a);
  if (kind_ == Kind::ZMod) return {a};
  std::vector<std::uint64_t> c(deg_);
  for (unsigned i = 0; i < deg_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

Elt Ring::from_coeffs(const std::vector<std::uint64_t>& c) const {
  if (kind_ == Kind::ZMod) {
    if (c.size() != 1) raise(Err::MalformedElement, "expected a single residue");
    return c[0] % card_;
  }
  if (c.size() > deg_) raise(Err::MalformedElement, "coefficient list too long");
  Elt r = 0;
  for (std::size_t i = 0; i < c.size(); ++i) r += (c[i] % p_) * pw_[i];
  return r;
}

std::vector<Elt> Ring::elements() const {
  if (card_ > budget()) raise(Err::Budget, "ring too large to enumerate");
  std::vector<Elt> v(card_);
  for (std::uint64_t i = 0; i < card_; ++i) v[i] = i;
  return v;
}

std::uint64_t Ring::order(Elt a) const {
  if (!is_unit(a)) raise(Err::NotAUnit, "order requires a unit");
  const std::uint64_t cap = budget();
  Elt acc = a;
  std::uint64_t k = 1;
  while (acc != one()) {
    acc = mul(acc, a);
    if (++k > cap) raise(Err::OrderCapExceeded, "order iteration cap hit");
  }
  return k;
}

bool Ring::is_generator(Elt a) const {
  if (!field_) raise(Err::NotAField, "generators are defined for fields");
  if (a == 0) raise(Err::NotAUnit, "zero generates nothing");
  const std::uint64_t half = (card_ - 1) / 2;
  Elt acc = a;
  for (std::uint64_t k = 1; k <= half; ++k) {
    if (acc == one()) return false;
    acc = mul(acc, a);
  }
  return true;
}

std::string Ring::show(Elt a) const {
  check_elt(a);
  if (kind_ == Kind::ZMod) return std::to_string(a);
  std::string s = "[";
  auto c = coeffs(a);
  for (unsigned i = 0; i < deg_; ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + "]";
}

Elt Ring::parse_element(std::string_view s) const {
  if (kind_ == Kind::ZMod) {
    std::uint64_t r;
    if (!parse_residue(s, card_, r)) raise(Err::MalformedElement, "bad residue");
    return r;
  }
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    raise(Err::MalformedElement, "expected [c0,c1,...]");
  auto parts = split(s.substr(1, s.size() - 2), ',');
  if (parts.empty() || parts.size() > deg_)
    raise(Err::MalformedElement, "coefficient count must be in [1, degree]");
  Elt r = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::uint64_t c;
    if (!parse_residue(parts[i], p_, c)) raise(Err::MalformedElement, "bad coefficient");
    r += c * pw_[i];
  }
  return r;
}

bool Ring::same(const Ring& o) const {
  if (kind_ != o.kind_ || card_ != o.card_) return false;
  if (kind_ == Kind::GF && (p_ != o.p_ || deg_ != o.deg_ || modpoly_ != o.modpoly_))
    return false;
  return true;
}

Mat2 mat_id(const Ring& r) { return {r.one(), r.zero(), r.zero(), r.one()}; }

Mat2 mat_mul(const Ring& r, const Mat2& x, const Mat2& y) {
  return {r.add(r.mul(x.a, y.a), r.mul(x.b, y.c)),
          r.add(r.mul(x.a, y.b), r.mul(x.b, y.d)),
          r.add(r.mul(x.c, y.a), r.mul(x.d, y.c)),
          r.add(r.mul(x.c, y.b), r.mul(x.d, y.d))};
}

bool mat_is_id(const Ring& r, const Mat2& m) {
  return m.a == r.one() && m.b == r.zero() && m.c == r.zero() && m.d == r.one();
}

bool mat_is_neg_id(const Ring& r, const Mat2& m) {
  const Elt n1 = r.neg(r.one());
  return m.a == n1 && m.b == r.zero() && m.c == r.zero() && m.d == n1;
}

}  // namespace qlab
