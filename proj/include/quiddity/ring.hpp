#pragma once
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "quiddity/error.hpp"

namespace qlab {

// Canonical element index: the residue for Z/NZ, sum c_i p^i for a GF(p^n)
// coefficient vector (c_0,...,c_{n-1}). Ascending index is the enumeration
// order for both kinds.
using Elt = std::uint64_t;

class Ring {
public:
  enum class Kind { ZMod, GF };

  // Placeholder state (cardinality 0), only fit for assignment.
  Ring() = default;

  static Ring zmod(std::uint64_t n);
  static Ring gf(std::uint64_t p, unsigned degree, std::vector<std::uint64_t> modpoly);
  // Grammar: "Z/<N>" or "GF(<p>^<n>):<c0>,<c1>,...,<cn>" with c_n = 1.
  static Ring parse(std::string_view spec);

  Kind kind() const { return kind_; }
  std::uint64_t cardinality() const { return card_; }
  std::uint64_t characteristic() const { return char_; }
  bool is_field() const { return field_; }
  std::uint64_t p() const { return p_; }
  unsigned degree() const { return deg_; }
  const std::vector<std::uint64_t>& modpoly() const { return modpoly_; }
  std::string spec() const;

  Elt zero() const { return 0; }
  Elt one() const { return 1; }
  Elt from_int(std::int64_t v) const;

  Elt add(Elt a, Elt b) const;
  Elt sub(Elt a, Elt b) const;
  Elt neg(Elt a) const;
  Elt mul(Elt a, Elt b) const;
  Elt pow(Elt a, std::uint64_t e) const;
  bool is_unit(Elt a) const;
  Elt inv(Elt a) const;

  std::vector<std::uint64_t> coeffs(Elt a) const;
  Elt from_coeffs(const std::vector<std::uint64_t>& c) const;

  std::vector<Elt> elements() const;
  // Multiplicative order by iterated multiplication, capped by budget().
  std::uint64_t order(Elt a) const;
  // Fields only. Never iterates past (q-1)/2: no 1 in that window means the
  // order exceeds (q-1)/2 and must be q-1.
  bool is_generator(Elt a) const;

  std::string show(Elt a) const;
  Elt parse_element(std::string_view s) const;

  bool same(const Ring& o) const;
  bool operator==(const Ring& o) const { return same(o); }
  bool operator!=(const Ring& o) const { return !same(o); }

private:
  void check_elt(Elt a) const;

  Kind kind_ = Kind::ZMod;
  std::uint64_t card_ = 0;
  std::uint64_t char_ = 0;
  bool field_ = false;
  std::uint64_t p_ = 0;      // GF base prime (== card_ for ZMod prime checks)
  unsigned deg_ = 1;
  std::vector<std::uint64_t> modpoly_;  // GF only, ascending, monic
  std::vector<std::uint64_t> pw_;       // GF only, p^0..p^deg
  std::uint64_t modmask_ = 0;           // GF char-2 fast path
};

// Smallest (by coefficient index) monic irreducible polynomial of the given
// degree, ascending coefficients including the leading 1.
std::vector<std::uint64_t> find_irreducible_poly(std::uint64_t p, unsigned degree);
bool poly_irreducible_over_fp(std::uint64_t p, const std::vector<std::uint64_t>& f);

struct Mat2 {
  Elt a, b, c, d;  // [[a, b], [c, d]]
  bool operator==(const Mat2& o) const = default;
};

Mat2 mat_id(const Ring& r);
Mat2 mat_mul(const Ring& r, const Mat2& x, const Mat2& y);
bool mat_is_id(const Ring& r, const Mat2& m);
bool mat_is_neg_id(const Ring& r, const Mat2& m);

}  // namespace qlab
