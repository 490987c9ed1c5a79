#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quiddity/quiddity.hpp"

namespace qlab {

enum class Family {
  Monomial,
  Dynomial,
  Trinomial,
  Quadrinomial,
  QuasiMonomial,
  Towed,
  Polarized,
};
const char* family_name(Family f);

enum class Verdict { IrreducibleCertified, ReducibleCertified, Inconclusive };
const char* verdict_name(Verdict v);

struct FamilyReport {
  Family kind;
  std::vector<Elt> params;
  std::uint64_t size = 0;
  Tuple tuple;
  int sign = 1;
  bool irreducible = false;
  // "general-scan", or the name of the criterion that settled the verdict.
  std::string decided_by;
  std::vector<std::pair<std::string, std::string>> criterion_data;
};

// (x, ..., x), smallest size with matrix power +-Id.
FamilyReport monomial_minimal(const Ring& r, Elt x);

// First y (enumeration order) whose monomial minimal size is q+1 (char 2)
// resp. (q+1)/2 (odd char). Returns (y, size).
std::pair<Elt, std::uint64_t> monomial_bound_witness(const Ring& field);

// (a, b, a, b, ...), a != b, smallest even size 2m with M_2(a,b)^m = +-Id.
FamilyReport dynomial_minimal(const Ring& r, Elt a, Elt b);

// (u, u^-1) dynomial; size 6 and irreducible for every valid u.
FamilyReport dynomial_inverse_pair(const Ring& r, Elt u);

// Both discriminants non-square certifies irreducibility (sufficient only).
// delta1 = a^2 + 4ab^-1(ab^-1 - 1), delta2 = b^2 + 4a^-1 b(a^-1 b - 1).
Verdict dynomial_criterion(const Ring& field, Elt a, Elt b,
                           Elt* delta1 = nullptr, Elt* delta2 = nullptr);

// (u, u^-1, u^-1, u, ...) over a field. Size 3h (char 2), 3h/2 (odd char,
// h = ord(u) even), 3h (odd char, h odd). Irreducible iff u is a root of no
// X^2l + X^(l+1) - 1 or X^2l - X^(l+1) - 1 with 1 <= l <= floor(size/6).
FamilyReport trinomial_minimal(const Ring& field, Elt u);

// Root-test witness: smallest l and polynomial sign ('+' or '-') with
// u^2l +- u^(l+1) - 1 = 0 in the range above, if any.
std::optional<std::pair<std::uint64_t, char>> trinomial_root_witness(
    const Ring& field, Elt u, std::uint64_t size);

// u^2+4 non-square certifies irreducible; u^2+4 square with u or -u a
// generator certifies reducible; anything else is inconclusive.
Verdict trinomial_square_criterion(const Ring& field, Elt u, Elt* disc = nullptr);

// (alpha, a, b, beta, ...) with alpha = b(ab-1)^-1, beta = a(ab-1)^-1.
// Hard size cap 1e4.
FamilyReport quadrinomial_minimal(const Ring& r, Elt a, Elt b);

// (a, x, ..., x, a): unique minimal with K(x..x) = e in {1,-1} over the
// m-2 interior copies and a = e K over m-3 copies.
FamilyReport quasi_monomial_minimal(const Ring& r, Elt x);

// Over Z/pZ, p prime >= 5. b = 1 gives (2,1,2,1); b = -1 gives
// (0, -1, 2 x (p-1), 3); otherwise (-l-1, b, 2 x l, b) with l the
// representative in [1, p-1] of -(b+1)(b-1)^-1. Irreducible iff b not in
// {-1, 1, 3}.
FamilyReport towed_minimal(const Ring& zp, Elt b);

// (x, ..., x, -x, ..., -x) with l copies each, odd characteristic, x != 0.
FamilyReport polarized_minimal(const Ring& r, Elt x);

}  // namespace qlab
