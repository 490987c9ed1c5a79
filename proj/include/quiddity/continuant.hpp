#pragma once
#include <cstdint>
#include <span>
#include <vector>

#include "quiddity/ring.hpp"

namespace qlab {

// K(-1) = 0, K(0) = 1, K(n) = a_n K(n-1) - K(n-2). Empty span gives 1.
Elt continuant(const Ring& r, std::span<const Elt> a);

// Product M(a_n) ... M(a_1) of factors [[a_i, -1], [1, 0]]. Requires n >= 1.
// Equals [[K(a_1..a_n), -K(a_2..a_n)], [K(a_1..a_{n-1}), -K(a_2..a_{n-1})]].
Mat2 m_matrix(const Ring& r, std::span<const Elt> a);

// K(x, ..., x) (n copies) through the closed form
// sum_i (-1)^i C(n-i, i) x^(n-2i) with binomials reduced in-ring.
Elt constant_continuant(const Ring& r, Elt x, std::uint64_t n);

struct ContinuantTriple {
  Elt k_n;      // K(a_1..a_n)
  Elt k_left;   // K(a_1..a_{n-1})
  Elt k_right;  // K(a_2..a_n)
};
ContinuantTriple continuant_triple(const Ring& r, std::span<const Elt> a);

struct Extension {
  std::vector<Elt> tuple;  // (x, a_1, ..., a_n, y)
  int sign;                // sign of the extended solution, +1 in char 2
};

// If K(a) = e with e in {1, -1}, then (e K(a_2..a_n), a_1..a_n, e K(a_1..a_{n-1}))
// is a solution of sign -e. Raises ContinuantNotUnitSign otherwise.
Extension extend_to_solution(const Ring& r, std::span<const Elt> a);

}  // namespace qlab
