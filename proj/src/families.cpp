#include "quiddity/families.hpp"

#include <cassert>
#include "quiddity/arith.hpp"

namespace qlab {

const char* family_name(Family f) {
  switch (f) {
    case Family::Monomial: return "monomial";
    case Family::Dynomial: return "dynomial";
    case Family::Trinomial: return "trinomial";
    case Family::Quadrinomial: return "quadrinomial";
    case Family::QuasiMonomial: return "quasi_monomial";
    case Family::Towed: return "towed";
    case Family::Polarized: return "polarized";
  }
  return "?";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::IrreducibleCertified: return "irreducible-certified";
    case Verdict::ReducibleCertified: return "reducible-certified";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

Mat2 m1(const Ring& r, Elt x) { return {x, r.neg(r.one()), r.one(), r.zero()}; }

// Smallest k >= 1 with b^k = +-Id; sign is +1 when Id matches first (char 2
// collapses the two).
std::pair<std::uint64_t, int> matrix_order_pm(const Ring& r, const Mat2& b) {
  const std::uint64_t cap = budget();
  Mat2 acc = b;
  for (std::uint64_t k = 1; k <= cap; ++k) {
    if (mat_is_id(r, acc)) return {k, 1};
    if (mat_is_neg_id(r, acc)) return {k, -1};
    acc = mat_mul(r, acc, b);
  }
  raise(Err::OrderCapExceeded, "matrix power iteration cap hit");
}

// Size and sign of the x-monomial minimal solution without building a report.
std::pair<std::uint64_t, int> monomial_size_sign(const Ring& r, Elt x) {
  return matrix_order_pm(r, m1(r, x));
}

bool scan_irreducible(const Tuple& t) {
  return t.size() >= 3 && !is_reducible(t).has_value();
}

std::vector<Elt> repeat_block(const std::vector<Elt>& blk, std::uint64_t times) {
  std::vector<Elt> out;
  out.reserve(blk.size() * times);
  for (std::uint64_t i = 0; i < times; ++i) out.insert(out.end(), blk.begin(), blk.end());
  return out;
}

}  // namespace

FamilyReport monomial_minimal(const Ring& r, Elt x) {
  auto [n, sgn] = monomial_size_sign(r, x);
  FamilyReport rep;
  rep.kind = Family::Monomial;
  rep.params = {x};
  rep.size = n;
  rep.tuple = Tuple{r, std::vector<Elt>(n, x)};
  rep.sign = sgn;
  if (x == r.zero()) {
    rep.irreducible = false;
    rep.decided_by = "zero-pair";
  } else if (r.is_field()) {
    rep.irreducible = true;
    rep.decided_by = "field-monomial";
  } else {
    rep.irreducible = scan_irreducible(rep.tuple);
    rep.decided_by = "general-scan";
  }
  return rep;
}

std::pair<Elt, std::uint64_t> monomial_bound_witness(const Ring& field) {
  if (!field.is_field()) raise(Err::NotAField, "the bound witness needs a field");
  const std::uint64_t q = field.cardinality();
  const std::uint64_t target = field.characteristic() == 2 ? q + 1 : (q + 1) / 2;
  const Elt one = field.one(), neg1 = field.neg(one), zero = field.zero();
  std::uint64_t steps = 0;
  for (Elt y = 0; y < q; ++y) {
    Elt km1 = one, km2 = zero;
    for (std::uint64_t s = 1; s <= target; ++s) {
      if (++steps > budget()) raise(Err::Budget, "bound witness scan exceeds the budget");
      Elt k = field.sub(field.mul(y, km1), km2);
      km2 = km1;
      km1 = k;
      if (km2 == zero && (km1 == one || km1 == neg1)) {
        if (s == target) return {y, target};
        break;
      }
    }
  }
  raise(Err::WitnessNotFound, "no element attains the monomial bound");
}

FamilyReport dynomial_minimal(const Ring& r, Elt a, Elt b) {
  if (a == b) raise(Err::OutOfRange, "dynomial entries must differ");
  const std::vector<Elt> blk{a, b};
  auto [m, sgn] = matrix_order_pm(r, m_matrix(r, blk));
  FamilyReport rep;
  rep.kind = Family::Dynomial;
  rep.params = {a, b};
  rep.size = 2 * m;
  rep.tuple = Tuple{r, repeat_block(blk, m)};
  rep.sign = sgn;
  rep.irreducible = scan_irreducible(rep.tuple);
  rep.decided_by = "general-scan";
  if (r.characteristic() % 2 == 1 && r.is_unit(a) && r.is_unit(b)) {
    const Elt four = r.from_int(4);
    const Elt ab1 = r.mul(a, r.inv(b));
    const Elt ba1 = r.mul(b, r.inv(a));
    Elt d1 = r.add(r.mul(a, a), r.mul(four, r.mul(ab1, r.sub(ab1, r.one()))));
    Elt d2 = r.add(r.mul(b, b), r.mul(four, r.mul(ba1, r.sub(ba1, r.one()))));
    rep.criterion_data.emplace_back("delta1", r.show(d1));
    rep.criterion_data.emplace_back("delta2", r.show(d2));
    if (r.is_field()) {
      rep.criterion_data.emplace_back("delta1_square",
                                      is_square(r, d1) ? "true" : "false");
      rep.criterion_data.emplace_back("delta2_square",
                                      is_square(r, d2) ? "true" : "false");
    }
  }
  return rep;
}

FamilyReport dynomial_inverse_pair(const Ring& r, Elt u) {
  if (!r.is_unit(u)) raise(Err::NotAUnit, "u must be a unit");
  const Elt ui = r.inv(u);
  if (u == r.one() || u == r.neg(r.one()) || u == ui)
    raise(Err::BadU, "u must avoid {1, -1} and its own inverse");
  FamilyReport rep = dynomial_minimal(r, u, ui);
  if (rep.size != 6 || !rep.irreducible)
    raise(Err::WitnessNotFound, "inverse pair failed the size-6 irreducibility law");
  rep.decided_by = "inverse-pair";
  return rep;
}

Verdict dynomial_criterion(const Ring& field, Elt a, Elt b, Elt* delta1, Elt* delta2) {
  if (!field.is_field()) raise(Err::NotAField, "the criterion needs a field");
  if (field.characteristic() == 2) raise(Err::CharTwo, "odd characteristic required");
  if (!field.is_unit(a) || !field.is_unit(b))
    raise(Err::NotUnits, "both entries must be units");
  const Elt one = field.one(), neg1 = field.neg(one);
  if (a == b || a == one || a == neg1 || b == one || b == neg1)
    raise(Err::OutOfRange, "entries must differ and avoid {1, -1}");
  const Elt four = field.from_int(4);
  const Elt ab1 = field.mul(a, field.inv(b));
  const Elt ba1 = field.mul(b, field.inv(a));
  Elt d1 = field.add(field.mul(a, a),
                     field.mul(four, field.mul(ab1, field.sub(ab1, one))));
  Elt d2 = field.add(field.mul(b, b),
                     field.mul(four, field.mul(ba1, field.sub(ba1, one))));
  if (delta1) *delta1 = d1;
  if (delta2) *delta2 = d2;
  if (!is_square(field, d1) && !is_square(field, d2)) return Verdict::IrreducibleCertified;
  return Verdict::Inconclusive;
}

FamilyReport trinomial_minimal(const Ring& field, Elt u) {
  if (!field.is_field()) raise(Err::NotAField, "trinomial solutions need a field");
  if (!field.is_unit(u)) raise(Err::NotAUnit, "u must be a unit");
  const std::uint64_t h = field.order(u);
  const std::uint64_t m =
      field.characteristic() == 2 ? 3 * h : (h % 2 == 0 ? 3 * h / 2 : 3 * h);
  const Elt ui = field.inv(u);
  FamilyReport rep;
  rep.kind = Family::Trinomial;
  rep.params = {u};
  rep.size = m;
  rep.tuple = Tuple{field, repeat_block({u, ui, ui}, m / 3)};
  auto sgn = is_quiddity(rep.tuple);
  assert(sgn);
  rep.sign = sgn.value_or(1);
  auto root = trinomial_root_witness(field, u, m);
  rep.irreducible = !root.has_value();
  rep.decided_by = "root-test";
  rep.criterion_data.emplace_back("order_u", std::to_string(h));
  rep.criterion_data.emplace_back("checked_l_max", std::to_string(m / 6));
  if (root) {
    rep.criterion_data.emplace_back("root_l", std::to_string(root->first));
    rep.criterion_data.emplace_back("root_sign", std::string(1, root->second));
  }
  return rep;
}

std::optional<std::pair<std::uint64_t, char>> trinomial_root_witness(
    const Ring& field, Elt u, std::uint64_t size) {
  if (!field.is_field()) raise(Err::NotAField, "trinomial solutions need a field");
  if (!field.is_unit(u)) raise(Err::NotAUnit, "u must be a unit");
  const std::uint64_t lmax = size / 6;
  const Elt one = field.one();
  Elt ul = one;
  for (std::uint64_t l = 1; l <= lmax; ++l) {
    ul = field.mul(ul, u);
    const Elt u2l = field.mul(ul, ul);
    const Elt ul1 = field.mul(ul, u);
    if (field.sub(field.add(u2l, ul1), one) == field.zero()) return {{l, '+'}};
    if (field.sub(field.sub(u2l, ul1), one) == field.zero()) return {{l, '-'}};
  }
  return std::nullopt;
}

Verdict trinomial_square_criterion(const Ring& field, Elt u, Elt* disc) {
  if (!field.is_field()) raise(Err::NotAField, "the criterion needs a field");
  if (field.characteristic() == 2) raise(Err::CharTwo, "odd characteristic required");
  if (!field.is_unit(u)) raise(Err::NotAUnit, "u must be a unit");
  if (u == field.one() || u == field.neg(field.one()))
    raise(Err::BadU, "u must avoid {1, -1}");
  const Elt d = field.add(field.mul(u, u), field.from_int(4));
  if (disc) *disc = d;
  if (!is_square(field, d)) return Verdict::IrreducibleCertified;
  if (field.is_generator(u) || field.is_generator(field.neg(u)))
    return Verdict::ReducibleCertified;
  return Verdict::Inconclusive;
}

FamilyReport quadrinomial_minimal(const Ring& r, Elt a, Elt b) {
  const Elt d = r.sub(r.mul(a, b), r.one());
  if (!r.is_unit(d)) raise(Err::ABNotInvertible, "ab - 1 must be a unit");
  const Elt di = r.inv(d);
  const std::vector<Elt> blk{r.mul(b, di), a, b, r.mul(a, di)};
  const Mat2 m4 = m_matrix(r, blk);
  Mat2 acc = m4;
  std::uint64_t k = 0;
  int sgn = 0;
  for (std::uint64_t i = 1; 4 * i <= 10'000; ++i) {
    if (mat_is_id(r, acc)) {
      k = i;
      sgn = 1;
      break;
    }
    if (mat_is_neg_id(r, acc)) {
      k = i;
      sgn = -1;
      break;
    }
    acc = mat_mul(r, acc, m4);
  }
  if (k == 0) raise(Err::SizeCapExceeded, "quadrinomial size exceeds 10^4");
  FamilyReport rep;
  rep.kind = Family::Quadrinomial;
  rep.params = {a, b};
  rep.size = 4 * k;
  rep.tuple = Tuple{r, repeat_block(blk, k)};
  rep.sign = sgn;
  rep.irreducible = scan_irreducible(rep.tuple);
  rep.decided_by = "general-scan";
  rep.criterion_data.emplace_back("alpha", r.show(blk[0]));
  rep.criterion_data.emplace_back("beta", r.show(blk[3]));
  return rep;
}

FamilyReport quasi_monomial_minimal(const Ring& r, Elt x) {
  const Elt one = r.one(), neg1 = r.neg(one), zero = r.zero();
  const std::uint64_t cap = budget();
  Elt km1 = one, km2 = zero;  // K_0, K_{-1}
  std::uint64_t j = 0;
  int eps = 0;
  for (std::uint64_t i = 1; i <= cap; ++i) {
    Elt k = r.sub(r.mul(x, km1), km2);
    km2 = km1;
    km1 = k;
    if (k == one) {
      j = i;
      eps = 1;
      break;
    }
    if (k == neg1) {
      j = i;
      eps = -1;
      break;
    }
  }
  if (j == 0) raise(Err::OrderCapExceeded, "interior continuant iteration cap hit");
  const Elt a = eps == 1 ? km2 : r.neg(km2);  // km2 = K_{j-1}
  FamilyReport rep;
  rep.kind = Family::QuasiMonomial;
  rep.params = {x};
  rep.size = j + 2;
  std::vector<Elt> t;
  t.reserve(j + 2);
  t.push_back(a);
  t.insert(t.end(), j, x);
  t.push_back(a);
  rep.tuple = Tuple{r, std::move(t)};
  rep.sign = r.characteristic() == 2 ? 1 : -eps;
  if (x != zero) {
    rep.irreducible = true;
    rep.decided_by = "quasi-monomial-nonzero";
  } else {
    rep.irreducible = scan_irreducible(rep.tuple);
    rep.decided_by = "general-scan";
  }
  auto [mono_n, mono_sgn] = monomial_size_sign(r, x);
  (void)mono_sgn;
  rep.criterion_data.emplace_back("epsilon", eps == 1 ? "1" : "-1");
  rep.criterion_data.emplace_back("a", r.show(a));
  rep.criterion_data.emplace_back(
      "coincides_monomial", (a == x && mono_n == rep.size) ? "true" : "false");
  return rep;
}

FamilyReport towed_minimal(const Ring& zp, Elt b) {
  if (zp.kind() != Ring::Kind::ZMod || !zp.is_field())
    raise(Err::PNotPrime, "towed solutions live over Z/pZ with p prime");
  const std::uint64_t p = zp.cardinality();
  if (p < 5) raise(Err::PTooSmall, "p must be at least 5");
  const Elt one = zp.one(), neg1 = zp.neg(one);
  FamilyReport rep;
  rep.kind = Family::Towed;
  rep.params = {b};
  std::vector<Elt> t;
  if (b == one) {
    t = {2, 1, 2, 1};
  } else if (b == neg1) {
    if (p + 2 > budget()) raise(Err::Budget, "towed tuple too long for the budget");
    t.reserve(p + 2);
    t.push_back(zp.zero());
    t.push_back(neg1);
    t.insert(t.end(), p - 1, Elt{2});
    t.push_back(Elt{3});
  } else {
    const Elt li = zp.mul(zp.neg(zp.add(b, one)), zp.inv(zp.sub(b, one)));
    const std::uint64_t l = li;  // representative in [1, p-1]; b = -1 was split off
    if (l + 3 > budget()) raise(Err::Budget, "towed tuple too long for the budget");
    t.reserve(l + 3);
    t.push_back(zp.neg((l + 1) % p));
    t.push_back(b);
    t.insert(t.end(), l, Elt{2});
    t.push_back(b);
    rep.criterion_data.emplace_back("l", std::to_string(l));
  }
  rep.size = t.size();
  rep.tuple = Tuple{zp, std::move(t)};
  auto sgn = is_quiddity(rep.tuple);
  assert(sgn);
  rep.sign = sgn.value_or(1);
  rep.irreducible = b != one && b != neg1 && b != zp.from_int(3);
  rep.decided_by = "towed-form";
  return rep;
}

FamilyReport polarized_minimal(const Ring& r, Elt x) {
  if (r.characteristic() == 2) raise(Err::CharTwo, "odd characteristic required");
  if (x == r.zero()) raise(Err::XZero, "x must be nonzero");
  const Mat2 mp = m1(r, x), mn = m1(r, r.neg(x));
  Mat2 pp = mp, nn = mn;
  const std::uint64_t cap = budget();
  std::uint64_t l = 0;
  int sgn = 0;
  for (std::uint64_t i = 1; i <= cap; ++i) {
    const Mat2 prod = mat_mul(r, nn, pp);
    if (mat_is_id(r, prod)) {
      l = i;
      sgn = 1;
      break;
    }
    if (mat_is_neg_id(r, prod)) {
      l = i;
      sgn = -1;
      break;
    }
    pp = mat_mul(r, pp, mp);
    nn = mat_mul(r, nn, mn);
  }
  if (l == 0) raise(Err::OrderCapExceeded, "polarized iteration cap hit");
  FamilyReport rep;
  rep.kind = Family::Polarized;
  rep.params = {x};
  rep.size = 2 * l;
  std::vector<Elt> t;
  t.reserve(2 * l);
  t.insert(t.end(), l, x);
  t.insert(t.end(), l, r.neg(x));
  rep.tuple = Tuple{r, std::move(t)};
  rep.sign = sgn;
  rep.irreducible = scan_irreducible(rep.tuple);
  rep.decided_by = "general-scan";
  rep.criterion_data.emplace_back("l", std::to_string(l));
  if (r.is_field()) {
    auto [mono_n, mono_sgn] = monomial_size_sign(r, x);
    (void)mono_sgn;
    rep.criterion_data.emplace_back("monomial_size", std::to_string(mono_n));
  }
  return rep;
}

}  // namespace qlab
