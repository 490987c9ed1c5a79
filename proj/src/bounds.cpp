#include "quiddity/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <thread>

#include "quiddity/arith.hpp"
#include "quiddity/error.hpp"
#include "quiddity/intmath.hpp"

namespace qlab {

namespace {

using u128 = unsigned __int128;

void run_workers(unsigned threads, const std::function<void()>& fn) {
  if (threads <= 1) {
    fn();
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned i = 0; i < threads; ++i) pool.emplace_back(fn);
  for (auto& t : pool) t.join();
}

}  // namespace

EllBound ell_lower_bound(const Ring& field) {
  if (!field.is_field()) raise(Err::NotAField, "lower bound needs a field");
  const std::uint64_t q = field.cardinality();
  if (q > (1ull << 20)) raise(Err::TooLarge, "lower bound capped at cardinality 2^20");

  EllBound out;
  out.ring = field;
  std::optional<FamilyReport> best;
  auto consider = [&](FamilyReport&& rep) {
    if (!rep.irreducible) return;
    if (!best || rep.size > best->size) best = std::move(rep);
  };
  auto guarded = [](const std::function<void()>& fn) {
    try {
      fn();
    } catch (const Error& e) {
      if (!is_budget_error(e.kind())) throw;
    }
  };

  guarded([&] {
    const auto [y, size] = monomial_bound_witness(field);
    (void)size;
    consider(monomial_minimal(field, y));
  });

  guarded([&] {
    // units of order q-1 or (q-1)/2 are the g^k with gcd(k, q-1) in {1, 2}
    Elt g = 0;
    for (Elt c = 1; c < q; ++c)
      if (field.is_generator(c)) {
        g = c;
        break;
      }
    struct Cand {
      std::uint64_t size;
      Elt u;
    };
    std::vector<Cand> cands;
    Elt pw = field.one();
    for (std::uint64_t k = 1; k < q; ++k) {
      pw = field.mul(pw, g);
      const std::uint64_t d = std::gcd(k, q - 1);
      if (d > 2) continue;
      const std::uint64_t h = (q - 1) / d;
      std::uint64_t m;
      if (field.characteristic() == 2)
        m = 3 * h;
      else
        m = h % 2 == 0 ? 3 * h / 2 : 3 * h;
      cands.push_back({m, pw});
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
      return a.size != b.size ? a.size > b.size : a.u < b.u;
    });
    std::uint64_t steps = 0;
    for (const auto& c : cands) {
      if (best && c.size <= best->size) break;
      steps += c.size / 6 + 1;
      if (steps > budget()) break;
      if (!trinomial_root_witness(field, c.u, c.size)) {
        consider(trinomial_minimal(field, c.u));
        break;
      }
    }
  });

  if (field.characteristic() > 2)
    guarded([&] { consider(monomial_minimal(field, field.from_int(2))); });

  guarded([&] { consider(quadrinomial_minimal(field, field.zero(), field.zero())); });

  out.lower = best->size;
  out.lower_witness = std::move(*best);
  return out;
}

std::uint64_t ell_theoretic_upper(const Ring& r) {
  const std::uint64_t n = r.cardinality();
  if (n > (1ull << 40)) raise(Err::TooLarge, "group order overflows");
  u128 sl2;
  if (r.kind() == Ring::Kind::GF) {
    const u128 q = n;
    sl2 = q * q * q - q;
  } else {
    sl2 = 1;
    for (const auto& [p, k] : factorize(n).factors) {
      u128 pk = 1;
      for (unsigned i = 2; i < 3 * k; ++i) pk *= p;
      sl2 *= pk * (u128(p) * p - 1);
    }
  }
  const u128 denom = r.characteristic() == 2 ? u128(n) : u128(2) * n;
  const u128 res = sl2 / denom + 2;
  if (res > u128(UINT64_MAX)) raise(Err::TooLarge, "bound overflows");
  return static_cast<std::uint64_t>(res);
}

namespace {

SurvivorSearch survivor_core(const Ring& field, std::uint64_t n_max,
                             std::vector<std::vector<Elt>>* keep) {
  if (!field.is_field()) raise(Err::NotAField, "survivor search needs a field");
  if (field.cardinality() > 16) raise(Err::TooLarge, "search capped at cardinality 16");
  if (n_max < 1) raise(Err::OutOfRange, "depth must be positive");
  const std::uint64_t q = field.cardinality();
  const Elt zero = field.zero();
  const Elt one = field.one();
  const Elt neg1 = field.neg(one);
  std::vector<Elt> alphabet;
  for (Elt x = 0; x < q; ++x)
    if (x != zero && x != one && x != neg1) alphabet.push_back(x);

  SurvivorSearch out;
  auto record = [&](std::uint64_t depth, std::uint64_t count) {
    out.counts.emplace_back(depth, count);
    if (count == 0) {
      out.cutoff = depth;
      out.upper = std::max<std::uint64_t>(4, depth + 2);
    }
  };

  std::vector<std::vector<Elt>> frontier;
  for (Elt x : alphabet) frontier.push_back({x});
  record(1, frontier.size());

  std::uint64_t depth = 1;
  const std::uint64_t cap = std::min<std::uint64_t>(budget(), 10'000'000);
  while (!out.cutoff && depth < n_max) {
    ++depth;
    std::vector<std::vector<Elt>> next;
    for (const auto& t : frontier) {
      for (Elt c : alphabet) {
        // suffix windows ending at c; shorter windows were checked earlier
        Elt s1 = c;
        Elt s2 = one;
        bool dead = false;
        for (std::size_t j = t.size(); j-- > 0;) {
          const Elt s0 = field.sub(field.mul(t[j], s1), s2);
          if (s0 == one || s0 == neg1) {
            dead = true;
            break;
          }
          s2 = s1;
          s1 = s0;
        }
        if (dead) continue;
        if (next.size() >= cap) {
          out.budget_exhausted = true;
          return out;
        }
        next.push_back(t);
        next.back().push_back(c);
      }
    }
    record(depth, next.size());
    frontier = std::move(next);
  }
  if (keep) *keep = std::move(frontier);
  return out;
}

}  // namespace

SurvivorSearch ell_upper_bound_search(const Ring& field, std::uint64_t n_max) {
  return survivor_core(field, n_max, nullptr);
}

std::vector<std::vector<Elt>> survivors_at_depth(const Ring& field, std::uint64_t n) {
  std::vector<std::vector<Elt>> got;
  survivor_core(field, n, &got);
  return got;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> scan_dynomial_pairs(std::uint64_t p,
                                                                         unsigned threads) {
  if (!is_prime_u64(p)) raise(Err::PNotPrime, "modulus must be prime");
  if (p > 3000) raise(Err::RangeTooLarge, "scan capped at p = 3000");
  if (p < 5) return {};
  if (threads == 0) threads = 1;

  std::vector<char> sq(p, 0);
  for (std::uint64_t y = 0; y < p; ++y) sq[mulmod(y, y, p)] = 1;
  std::vector<std::uint64_t> inv(p, 0);
  inv[1] = 1;
  for (std::uint64_t i = 2; i < p; ++i) inv[i] = mulmod(p - p / i, inv[p % i], p);
  auto delta = [&](std::uint64_t a, std::uint64_t b) {
    const std::uint64_t r = mulmod(a, inv[b], p);
    const std::uint64_t t = mulmod(r, (r + p - 1) % p, p);
    return (mulmod(a, a, p) + mulmod(4 % p, t, p)) % p;
  };

  std::vector<std::vector<std::uint64_t>> buckets(p);
  std::atomic<std::uint64_t> next_a{2};
  run_workers(threads, [&] {
    for (;;) {
      const std::uint64_t a = next_a.fetch_add(1);
      if (a > p - 3) return;
      auto& bs = buckets[a];
      for (std::uint64_t b = a + 1; b <= p - 2; ++b) {
        if (sq[delta(a, b)]) continue;
        if (sq[delta(b, a)]) continue;
        bs.push_back(b);
      }
    }
  });

  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t a = 2; a <= p - 3; ++a)
    for (std::uint64_t b : buckets[a]) out.emplace_back(a, b);
  return out;
}

std::vector<std::uint64_t> scan_trinomial(std::uint64_t p, unsigned threads) {
  if (!is_prime_u64(p)) raise(Err::PNotPrime, "modulus must be prime");
  if (p < 5) raise(Err::PTooSmall, "scan needs p >= 5");
  if (p > 5000) raise(Err::RangeTooLarge, "scan capped at p = 5000");
  if (threads == 0) threads = 1;

  const std::uint64_t half = (p - 1) / 2;
  std::vector<char> keep(half + 1, 0);
  std::atomic<std::uint64_t> next_x{2};
  run_workers(threads, [&] {
    for (;;) {
      const std::uint64_t x = next_x.fetch_add(1);
      if (x > half) return;
      std::uint64_t h = 1;
      std::uint64_t z = x;
      while (z != 1) {
        z = mulmod(z, x, p);
        ++h;
      }
      const std::uint64_t m = h % 2 == 0 ? 3 * h / 2 : 3 * h;
      bool root = false;
      std::uint64_t xl = 1;
      for (std::uint64_t l = 1; l <= m / 6 && !root; ++l) {
        xl = mulmod(xl, x, p);
        const std::uint64_t x2l = mulmod(xl, xl, p);
        const std::uint64_t xl1 = mulmod(xl, x, p);
        if ((x2l + xl1 + p - 1) % p == 0 || (x2l + p - xl1 + p - 1) % p == 0) root = true;
      }
      keep[x] = !root;
    }
  });

  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 2; x <= half; ++x)
    if (keep[x]) out.push_back(x);
  return out;
}

std::vector<std::uint64_t> verify_generator_conjecture(std::uint64_t a, std::uint64_t b,
                                                       unsigned threads,
                                                       std::ostream* verbose) {
  if (a <= 2 || a >= b) raise(Err::OutOfRange, "need 2 < a < b");
  if (b > 2'000'000) raise(Err::RangeTooLarge, "range capped at 2000000");
  if (threads == 0) threads = 1;

  std::vector<char> comp(b + 1, 0);
  for (std::uint64_t i = 2; i * i <= b; ++i)
    if (!comp[i])
      for (std::uint64_t j = i * i; j <= b; j += i) comp[j] = 1;
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = a; p <= b; ++p)
    if (!comp[p]) primes.push_back(p);

  std::vector<std::uint64_t> wit(primes.size(), 0);
  std::atomic<std::size_t> next_i{0};
  run_workers(threads, [&] {
    for (;;) {
      const std::size_t i = next_i.fetch_add(1);
      if (i >= primes.size()) return;
      const std::uint64_t p = primes[i];
      const std::uint64_t half = (p - 1) / 2;
      for (std::uint64_t j = 2; j < p; ++j) {
        // order > (p-1)/2 forces order p-1
        std::uint64_t z = j;
        bool gen = true;
        for (std::uint64_t k = 1; k <= half; ++k) {
          if (z == 1) {
            gen = false;
            break;
          }
          z = mulmod(z, j, p);
        }
        if (!gen) continue;
        const std::uint64_t d = (mulmod(j, j, p) + 4) % p;
        if (powmod(d, half, p) == p - 1) {
          wit[i] = j;
          break;
        }
      }
    }
  });

  std::vector<std::uint64_t> bad;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (wit[i] == 0)
      bad.push_back(primes[i]);
    else if (verbose)
      *verbose << "p=" << primes[i] << " j=" << wit[i] << "\n";
  }
  return bad;
}

Char2Bound char2_generator_bound(unsigned n, const std::vector<std::uint64_t>* modpoly) {
  if (n < 2 || n > 16) raise(Err::OutOfRange, "degree must lie in [2, 16]");
  const Ring f = modpoly ? Ring::gf(2, n, *modpoly)
                         : Ring::gf(2, n, find_irreducible_poly(2, n));
  const std::uint64_t q = f.cardinality();
  const std::uint64_t mer = q - 1;

  Char2Bound out;
  out.odd_squarefree = n % 2 == 1 && moebius(mer) != 0;
  out.phi_at_least_half = euler_phi(mer) >= (1ull << (n - 1));
  const std::uint64_t m = 3 * mer;
  for (Elt g = 1; g < q; ++g) {
    if (!f.is_generator(g)) continue;
    if (!trinomial_root_witness(f, g, m)) {
      out.found = true;
      out.generator = g;
      out.bound = m;
      break;
    }
  }
  return out;
}

}  // namespace qlab
