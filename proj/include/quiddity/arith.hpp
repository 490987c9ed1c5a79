#pragma once
#include <cstdint>
#include <utility>
#include <vector>

#include "quiddity/ring.hpp"

namespace qlab {

struct Factorization {
  std::uint64_t value = 1;
  std::vector<std::pair<std::uint64_t, unsigned>> factors;  // (prime, exponent), ascending
};

// Euler criterion. Returns -1, 0 or 1.
int legendre(std::int64_t a, std::uint64_t p);

// Any finite field, any characteristic. Extension fields of odd
// characteristic reduce through the norm to the prime subfield.
bool is_square(const Ring& field, Elt x);

// All squares, ascending enumeration order. Cardinality capped at 1e6.
std::vector<Elt> square_table(const Ring& field);

// |{x : x^2 + a is a square}| for a != 0 in odd characteristic.
std::uint64_t count_x_with_square_shift(const Ring& field, Elt a);

// Trial division to 1e6, then Brent-cycle Pollard rho on the cofactor.
Factorization factorize(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
int moebius(std::uint64_t n);

// phi(2^n - 1) computed by splitting off 2^b - 1, b = n / (smallest prime
// factor of n), recursively; the split parts are coprime.
std::uint64_t mersenne_phi(unsigned n);
// All n in [a, b] with phi(2^n - 1) < 2^(n-1). Requires 2 <= a <= b <= 64.
std::vector<std::uint64_t> mersenne_phi_deficit(unsigned a, unsigned b);

// Absolute trace of GF(2^n): sum of the n Frobenius images, lands in {0, 1}.
int trace_char2(const Ring& field, Elt x);
// X^2 + aX + b splits over GF(2^n) iff trace(b a^-2) = 0. Requires a != 0.
bool splits_char2(const Ring& field, Elt a, Elt b);

// Sum of g^m over all generators g equals mu(e) phi(q-1) / phi(e) in the
// field, e = (q-1)/gcd(m, q-1). Brute-force sum against the closed form.
bool szymiczek_sum_check(const Ring& field, std::uint64_t m);

}  // namespace qlab
