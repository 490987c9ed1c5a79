#pragma once
#include <cstddef>
#include <optional>
#include <vector>

#include "quiddity/continuant.hpp"

namespace qlab {

struct Tuple {
  Ring ring;
  std::vector<Elt> a;

  std::size_t size() const { return a.size(); }
  bool operator==(const Tuple& o) const { return ring == o.ring && a == o.a; }
};

// +1 / -1 when the matrix product is Id / -Id, empty otherwise. In
// characteristic 2 the two coincide and the sign is reported as +1.
std::optional<int> is_quiddity(const Tuple& t);

// (a_1..a_m) + (b_1..b_l) = (a_1+b_l, a_2..a_{m-1}, a_m+b_1, b_2..b_{l-1}).
// Both sizes must be >= 2. The sum is a solution iff the left operand is,
// whenever the right operand is one.
Tuple oplus(const Tuple& t1, const Tuple& t2);

// Same orbit under cyclic rotations of the tuple or of its reversal.
bool equivalent(const Tuple& t1, const Tuple& t2);

struct ReductionWitness {
  std::size_t start;       // cyclic window start, 0-based
  std::size_t window_len;  // j, window continuant in {1, -1}
  Tuple summand;           // window extended to a solution, size j+2
  Tuple complement;        // size n-j, oplus(complement, summand) ~ t
};

// Requires a solution of size >= 3. Scans window lengths 1..floor((n-2)/2) in
// increasing order, start indexes ascending within a length; first hit wins.
// Empty result means irreducible. Size 3 is always irreducible.
std::optional<ReductionWitness> is_reducible(const Tuple& t);

// Re-checks a witness end to end; false on any failure, never throws.
bool verify_witness(const Tuple& t, const ReductionWitness& w);

}  // namespace qlab
