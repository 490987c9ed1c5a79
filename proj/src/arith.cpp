#include "quiddity/arith.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "quiddity/intmath.hpp"

namespace qlab {

namespace {

std::uint64_t reduce_signed(std::int64_t a, std::uint64_t m) {
  if (a >= 0) return static_cast<std::uint64_t>(a) % m;
  std::uint64_t mag = static_cast<std::uint64_t>(-(a + 1)) + 1;
  std::uint64_t r = mag % m;
  return r ? m - r : 0;
}

std::uint64_t pollard_brent(std::uint64_t n) {
  if ((n & 1) == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    auto step = [&](std::uint64_t x) { return addmod(mulmod(x, x, n), c, n); };
    std::uint64_t x = 2, y = 2, d = 1, q = 1, ys = 0, r = 1;
    const std::uint64_t blk = 128;
    while (d == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = step(y);
      for (std::uint64_t k = 0; k < r && d == 1; k += blk) {
        ys = y;
        const std::uint64_t lim = std::min(blk, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          y = step(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        d = std::gcd(q, n);
      }
      r <<= 1;
    }
    if (d == n) {
      d = 1;
      while (d == 1) {
        ys = step(ys);
        d = std::gcd(x > ys ? x - ys : ys - x, n);
      }
    }
    if (d != n) return d;
  }
}

void factor_into(std::uint64_t n, std::map<std::uint64_t, unsigned>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    ++out[n];
    return;
  }
  std::uint64_t d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

std::uint64_t mersenne(unsigned n) {
  return n == 64 ? ~0ull : (1ull << n) - 1;
}

}  // namespace

int legendre(std::int64_t a, std::uint64_t p) {
  if ((p & 1) == 0) raise(Err::PEven, "p must be odd");
  if (!is_prime_u64(p)) raise(Err::PNotPrime, "p must be prime");
  std::uint64_t r = reduce_signed(a, p);
  std::uint64_t e = powmod(r, (p - 1) / 2, p);
  if (e == 0) return 0;
  return e == 1 ? 1 : -1;
}

bool is_square(const Ring& field, Elt x) {
  if (!field.is_field()) raise(Err::NotAField, "squares need a field");
  if (x == 0) return true;
  if (field.characteristic() == 2) return true;
  const std::uint64_t q = field.cardinality(), p = field.p();
  Elt norm = field.pow(x, (q - 1) / (p - 1));
  std::uint64_t c = field.coeffs(norm)[0];  // lands in the prime subfield
  return powmod(c, (p - 1) / 2, p) == 1;
}

std::vector<Elt> square_table(const Ring& field) {
  if (!field.is_field()) raise(Err::NotAField, "squares need a field");
  if (field.cardinality() > 1'000'000) raise(Err::TooLarge, "field too large");
  std::vector<bool> seen(field.cardinality(), false);
  for (Elt y = 0; y < field.cardinality(); ++y) seen[field.mul(y, y)] = true;
  std::vector<Elt> out;
  for (Elt x = 0; x < field.cardinality(); ++x)
    if (seen[x]) out.push_back(x);
  return out;
}

std::uint64_t count_x_with_square_shift(const Ring& field, Elt a) {
  if (!field.is_field()) raise(Err::NotAField, "count needs a field");
  if (field.characteristic() == 2) raise(Err::CharTwo, "odd characteristic required");
  if (a == 0) raise(Err::AZero, "a must be nonzero");
  const std::uint64_t q = field.cardinality();
  return is_square(field, field.neg(a)) ? (q + 1) / 2 : (q - 1) / 2;
}

Factorization factorize(std::uint64_t n) {
  if (n < 2) raise(Err::OutOfRange, "factorize needs n >= 2");
  Factorization f;
  f.value = n;
  std::map<std::uint64_t, unsigned> acc;
  for (std::uint64_t d : {2ull, 3ull, 5ull}) {
    while (n % d == 0) {
      ++acc[d];
      n /= d;
    }
  }
  for (std::uint64_t d = 7; d <= 1'000'000 && d * d <= n; d += 6) {
    for (std::uint64_t e : {d, d + 4}) {
      while (n % e == 0) {
        ++acc[e];
        n /= e;
      }
    }
  }
  factor_into(n, acc);
  f.factors.assign(acc.begin(), acc.end());
  return f;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) raise(Err::OutOfRange, "phi needs n >= 1");
  if (n == 1) return 1;
  std::uint64_t r = 1;
  for (auto [p, e] : factorize(n).factors) {
    r *= p - 1;
    for (unsigned i = 1; i < e; ++i) r *= p;
  }
  return r;
}

int moebius(std::uint64_t n) {
  if (n == 0) raise(Err::OutOfRange, "moebius needs n >= 1");
  if (n == 1) return 1;
  auto f = factorize(n);
  for (auto [p, e] : f.factors)
    if (e > 1) return 0;
  return f.factors.size() % 2 ? -1 : 1;
}

std::uint64_t mersenne_phi(unsigned n) {
  if (n < 1 || n > 64) raise(Err::OutOfRange, "n must lie in [1, 64]");
  if (n == 1) return 1;
  unsigned s = 0;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      s = d;
      break;
    }
  }
  if (s == 0) return euler_phi(mersenne(n));  // n prime: no proper split
  const unsigned b = n / s;
  // 2^n - 1 = (2^b - 1) * (1 + 2^b + ... + 2^((s-1)b)); the parts are coprime
  // since any common prime divides s yet also 2^b - 1, forcing a prime factor
  // of n smaller than s.
  return mersenne_phi(b) * euler_phi(mersenne(n) / mersenne(b));
}

std::vector<std::uint64_t> mersenne_phi_deficit(unsigned a, unsigned b) {
  if (a < 2 || a > b || b > 64) raise(Err::OutOfRange, "need 2 <= a <= b <= 64");
  std::vector<std::uint64_t> out;
  for (unsigned n = a; n <= b; ++n) {
    if (mersenne_phi(n) < (1ull << (n - 1))) out.push_back(n);
  }
  return out;
}

int trace_char2(const Ring& field, Elt x) {
  if (!field.is_field() || field.characteristic() != 2)
    raise(Err::WrongCharacteristic, "trace needs a field of characteristic 2");
  Elt acc = x, frob = x;
  for (unsigned i = 1; i < field.degree(); ++i) {
    frob = field.mul(frob, frob);
    acc = field.add(acc, frob);
  }
  return acc == field.one() ? 1 : 0;
}

bool splits_char2(const Ring& field, Elt a, Elt b) {
  if (!field.is_field() || field.characteristic() != 2)
    raise(Err::WrongCharacteristic, "splitting test needs characteristic 2");
  if (a == 0) raise(Err::AZero, "a must be nonzero");
  Elt c = field.mul(b, field.inv(field.mul(a, a)));
  return trace_char2(field, c) == 0;
}

bool szymiczek_sum_check(const Ring& field, std::uint64_t m) {
  if (!field.is_field()) raise(Err::NotAField, "generator sums need a field");
  if (field.cardinality() > 512) raise(Err::TooLarge, "cardinality capped at 512");
  const std::uint64_t q = field.cardinality();
  Elt sum = field.zero();
  for (Elt g = 1; g < q; ++g) {
    if (field.is_generator(g)) sum = field.add(sum, field.pow(g, m));
  }
  const std::uint64_t e = (q - 1) / std::gcd(m, q - 1);
  const std::int64_t rhs =
      static_cast<std::int64_t>(moebius(e)) *
      static_cast<std::int64_t>(euler_phi(q - 1) / euler_phi(e));
  return sum == field.from_int(rhs);
}

}  // namespace qlab
