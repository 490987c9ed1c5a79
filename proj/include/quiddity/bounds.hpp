#pragma once
#include <cstdint>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "quiddity/families.hpp"

namespace qlab {

struct EllBound {
  Ring ring;
  std::uint64_t lower = 0;
  FamilyReport lower_witness;
  std::optional<std::uint64_t> upper;
  std::string upper_method = "none";  // "exhaustive-search" when computed
};

// Best of: monomial bound witness, trinomial witnesses over units of order
// q-1 or (q-1)/2, the 2-monomial of size char, and the (0,0) quadrinomial
// floor of size 4. Fields only, cardinality <= 2^20.
EllBound ell_lower_bound(const Ring& field);

// |SL2(A)| / |A| + 2 in characteristic 2, |SL2(A)| / (2|A|) + 2 otherwise.
std::uint64_t ell_theoretic_upper(const Ring& r);

struct SurvivorSearch {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> counts;  // (depth, survivors)
  std::optional<std::uint64_t> cutoff;  // smallest depth with zero survivors
  std::optional<std::uint64_t> upper;   // cutoff + 2
  bool budget_exhausted = false;
};

// Iterative deepening over tuples avoiding {0, 1, -1}, pruning a candidate as
// soon as any suffix window continuant lands in {1, -1} (windows not touching
// the last element were checked when the prefix was admitted). A zero-survivor
// depth n bounds every irreducible solution size by n + 2.
SurvivorSearch ell_upper_bound_search(const Ring& field, std::uint64_t n_max);

// Survivor tuples at exactly depth n (same pruning).
std::vector<std::vector<Elt>> survivors_at_depth(const Ring& field, std::uint64_t n);

// Pairs 1 < a < b < p-1 with both dynomial discriminants non-square mod p.
std::vector<std::pair<std::uint64_t, std::uint64_t>> scan_dynomial_pairs(
    std::uint64_t p, unsigned threads = 1);

// Units u in [2, (p-1)/2] whose trinomial passes the root test, ascending.
std::vector<std::uint64_t> scan_trinomial(std::uint64_t p, unsigned threads = 1);

// Primes p in [a, b] with no generator j of (Z/pZ)* such that j^2 + 4 is a
// non-square. Expected empty. Verbose stream logs the witness per prime.
std::vector<std::uint64_t> verify_generator_conjecture(std::uint64_t a, std::uint64_t b,
                                                       unsigned threads = 1,
                                                       std::ostream* verbose = nullptr);

struct Char2Bound {
  bool found = false;
  Elt generator = 0;
  std::uint64_t bound = 0;        // 3(2^n - 1) when found
  bool odd_squarefree = false;    // n odd and 2^n - 1 squarefree
  bool phi_at_least_half = false; // phi(2^n - 1) >= 2^(n-1)
};

// Scan GF(2^n) generators for one whose trinomial of size 3(2^n - 1) is
// irreducible. Either sufficient condition guarantees a hit. 2 <= n <= 16.
Char2Bound char2_generator_bound(unsigned n,
                                 const std::vector<std::uint64_t>* modpoly = nullptr);

}  // namespace qlab
