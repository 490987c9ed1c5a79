#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "quiddity/families.hpp"

using namespace qlab;

namespace {

bool raises(Err want, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == want;
  }
  return false;
}

std::string cdata(const FamilyReport& rep, const std::string& key) {
  for (const auto& [k, v] : rep.criterion_data)
    if (k == key) return v;
  return "<missing>";
}

// Every report must carry a genuine solution of the claimed sign whose
// irreducibility flag matches the window scan.
void check_report(const FamilyReport& rep) {
  REQUIRE(rep.tuple.size() == rep.size);
  const auto s = is_quiddity(rep.tuple);
  REQUIRE(s.has_value());
  CHECK(*s == rep.sign);
  if (rep.size >= 3)
    CHECK(rep.irreducible == !is_reducible(rep.tuple).has_value());
  else
    CHECK_FALSE(rep.irreducible);
}

const Ring f4 = Ring::gf(2, 2, {1, 1, 1});
const Ring f8 = Ring::gf(2, 3, {1, 1, 0, 1});
const Ring f9 = Ring::gf(3, 2, {1, 0, 1});
const Ring f25 = Ring::gf(5, 2, {1, 1, 1});
const Ring f27 = Ring::gf(3, 3, {2, 0, 1, 1});

}  // namespace

TEST_CASE("monomial") {
  const FamilyReport z = monomial_minimal(Ring::zmod(7), 0);
  CHECK(z.size == 2);
  CHECK(z.tuple.a == std::vector<Elt>{0, 0});
  CHECK(z.decided_by == "zero-pair");
  check_report(z);

  const FamilyReport m4 = monomial_minimal(f4, 2);  // x = X
  CHECK(m4.size == 5);
  CHECK(m4.sign == 1);
  CHECK(m4.decided_by == "field-monomial");
  check_report(m4);

  const FamilyReport m9 = monomial_minimal(f9, 3);  // x = X
  CHECK(m9.size == 4);
  CHECK(m9.sign == -1);
  check_report(m9);

  const FamilyReport z6 = monomial_minimal(Ring::zmod(6), 3);
  CHECK(z6.size == 6);
  CHECK(z6.irreducible);
  CHECK(z6.decided_by == "general-scan");
  check_report(z6);

  const FamilyReport ones = monomial_minimal(Ring::zmod(5), 1);
  CHECK(ones.size == 3);
  CHECK(ones.sign == -1);
  check_report(ones);

  for (std::uint64_t n : {5, 6, 8, 9, 12}) {
    const Ring r = Ring::zmod(n);
    for (Elt x = 0; x < n; ++x) check_report(monomial_minimal(r, x));
  }
}

TEST_CASE("monomial bound witness") {
  const auto [y7, s7] = monomial_bound_witness(Ring::zmod(7));
  CHECK(y7 == 3);
  CHECK(s7 == 4);
  const auto [y9, s9] = monomial_bound_witness(f9);
  CHECK(y9 == 4);  // X + 1
  CHECK(s9 == 5);

  const std::vector<std::pair<Ring, std::uint64_t>> cases = {
      {f4, 5},
      {f8, 9},
      {f9, 5},
      {Ring::gf(2, 4, find_irreducible_poly(2, 4)), 17},
      {f25, 13},
      {f27, 14},
      {Ring::gf(7, 2, find_irreducible_poly(7, 2)), 25},
  };
  for (const auto& [field, want] : cases) {
    const auto [y, size] = monomial_bound_witness(field);
    CHECK(size == want);
    const FamilyReport rep = monomial_minimal(field, y);
    CHECK(rep.size == want);
    CHECK(rep.irreducible);
    check_report(rep);
  }
  CHECK(raises(Err::NotAField, [] { monomial_bound_witness(Ring::zmod(6)); }));
}

TEST_CASE("dynomial") {
  const Ring z7 = Ring::zmod(7);
  const FamilyReport d34 = dynomial_minimal(z7, 3, 4);
  CHECK(d34.size == 8);
  CHECK(d34.irreducible);
  check_report(d34);

  const FamilyReport d23 = dynomial_minimal(z7, 2, 3);
  CHECK(d23.size == 8);
  CHECK_FALSE(d23.irreducible);
  check_report(d23);

  const FamilyReport big = dynomial_minimal(Ring::zmod(49), 2, 3);
  CHECK(big.size == 56);
  CHECK(big.irreducible);
  check_report(big);

  const FamilyReport z77 = dynomial_minimal(Ring::zmod(77), 2, 5);
  CHECK(z77.size == 30);
  CHECK(z77.sign == -1);
  CHECK_FALSE(z77.irreducible);
  check_report(z77);

  // certified pairs stay irreducible after lifting p -> p^2
  const FamilyReport l49 = dynomial_minimal(Ring::zmod(49), 2, 4);
  CHECK(l49.size == 42);
  CHECK(l49.irreducible);
  check_report(l49);
  const FamilyReport l529 = dynomial_minimal(Ring::zmod(529), 2, 5);
  CHECK(l529.size == 552);
  CHECK(l529.irreducible);
  check_report(l529);

  CHECK(raises(Err::OutOfRange, [&] { dynomial_minimal(z7, 3, 3); }));
}

TEST_CASE("dynomial criterion") {
  Elt d1 = 0, d2 = 0;
  CHECK(dynomial_criterion(Ring::zmod(23), 2, 5, &d1, &d2) ==
        Verdict::IrreducibleCertified);
  CHECK(d1 == 15);
  CHECK(d2 == 17);
  CHECK(dynomial_criterion(Ring::zmod(47), 3, 4, &d1, &d2) ==
        Verdict::IrreducibleCertified);
  CHECK(d1 == 20);
  CHECK(d2 == 23);
  CHECK(dynomial_criterion(Ring::zmod(17), 2, 3, &d1, &d2) ==
        Verdict::IrreducibleCertified);
  CHECK(d1 == 5);
  CHECK(d2 == 12);
  CHECK(dynomial_criterion(Ring::zmod(59), 2, 57) == Verdict::Inconclusive);
  CHECK(dynomial_minimal(Ring::zmod(59), 2, 57).irreducible);

  CHECK(raises(Err::NotAField, [] { dynomial_criterion(Ring::zmod(6), 2, 3); }));
  CHECK(raises(Err::CharTwo, [] { dynomial_criterion(f4, 2, 3); }));
  CHECK(raises(Err::NotUnits, [] { dynomial_criterion(Ring::zmod(7), 0, 3); }));
  CHECK(raises(Err::OutOfRange, [] { dynomial_criterion(Ring::zmod(7), 3, 3); }));
  CHECK(raises(Err::OutOfRange, [] { dynomial_criterion(Ring::zmod(7), 1, 3); }));

  // certificate is sound against the scan on whole small fields
  for (std::uint64_t p : {5, 7, 13, 17}) {
    const Ring r = Ring::zmod(p);
    std::uint64_t certified = 0;
    for (Elt a = 2; a < p - 1; ++a) {
      for (Elt b = 2; b < p - 1; ++b) {
        if (a == b) continue;
        const FamilyReport rep = dynomial_minimal(r, a, b);
        check_report(rep);
        if (dynomial_criterion(r, a, b) == Verdict::IrreducibleCertified) {
          ++certified;
          CHECK(rep.irreducible);
        }
      }
    }
    CHECK(certified > 0);
  }
}

TEST_CASE("inverse pair") {
  const FamilyReport z9 = dynomial_inverse_pair(Ring::zmod(9), 2);
  CHECK(z9.size == 6);
  CHECK(z9.sign == 1);
  CHECK(z9.irreducible);
  CHECK(z9.decided_by == "inverse-pair");
  CHECK(z9.tuple.a == std::vector<Elt>{2, 5, 2, 5, 2, 5});
  check_report(z9);

  const FamilyReport pf9 = dynomial_inverse_pair(f9, 3);  // X, inverse -X
  CHECK(pf9.size == 6);
  CHECK(pf9.irreducible);
  check_report(pf9);

  CHECK(raises(Err::NotAUnit, [] { dynomial_inverse_pair(Ring::zmod(9), 3); }));
  CHECK(raises(Err::BadU, [] { dynomial_inverse_pair(Ring::zmod(9), 1); }));
  CHECK(raises(Err::BadU, [] { dynomial_inverse_pair(Ring::zmod(9), 8); }));
  CHECK(raises(Err::BadU, [] { dynomial_inverse_pair(Ring::zmod(8), 3); }));
}

TEST_CASE("trinomial") {
  const Ring z7 = Ring::zmod(7);
  const FamilyReport red = trinomial_minimal(z7, 2);
  CHECK(red.size == 9);
  CHECK_FALSE(red.irreducible);
  CHECK(red.decided_by == "root-test");
  CHECK(cdata(red, "order_u") == "3");
  CHECK(cdata(red, "root_l") == "1");
  CHECK(cdata(red, "root_sign") == "+");
  check_report(red);

  const FamilyReport irr = trinomial_minimal(z7, 4);
  CHECK(irr.size == 9);
  CHECK(irr.sign == -1);
  CHECK(irr.irreducible);
  CHECK(irr.tuple.a == std::vector<Elt>{4, 2, 2, 4, 2, 2, 4, 2, 2});
  CHECK(cdata(irr, "order_u") == "3");
  CHECK(cdata(irr, "checked_l_max") == "1");
  check_report(irr);

  const FamilyReport z31 = trinomial_minimal(Ring::zmod(31), 3);
  CHECK(z31.size == 45);
  CHECK(z31.irreducible);
  CHECK(cdata(z31, "order_u") == "30");
  check_report(z31);

  const FamilyReport z13 = trinomial_minimal(Ring::zmod(13), 5);
  CHECK(z13.size == 6);
  CHECK(z13.irreducible);
  CHECK(cdata(z13, "order_u") == "4");
  check_report(z13);

  const auto w = trinomial_root_witness(z7, 2, 9);
  REQUIRE(w.has_value());
  CHECK(w->first == 1);
  CHECK(w->second == '+');
  CHECK_FALSE(trinomial_root_witness(z7, 4, 9).has_value());

  CHECK(raises(Err::NotAField, [] { trinomial_minimal(Ring::zmod(6), 5); }));
  CHECK(raises(Err::NotAUnit, [&] { trinomial_minimal(z7, 0); }));
}

TEST_CASE("trinomial square criterion") {
  Elt disc = 0;
  CHECK(trinomial_square_criterion(Ring::zmod(13), 5, &disc) ==
        Verdict::Inconclusive);
  CHECK(disc == 3);
  CHECK(trinomial_square_criterion(Ring::zmod(13), 2, &disc) ==
        Verdict::IrreducibleCertified);
  CHECK(disc == 8);
  CHECK(trinomial_square_criterion(Ring::zmod(19), 10) ==
        Verdict::ReducibleCertified);
  CHECK(trinomial_square_criterion(Ring::zmod(23), 18) ==
        Verdict::ReducibleCertified);

  CHECK(raises(Err::NotAField, [] { trinomial_square_criterion(Ring::zmod(6), 5); }));
  CHECK(raises(Err::CharTwo, [&] { trinomial_square_criterion(f4, 2); }));
  CHECK(raises(Err::NotAUnit, [] { trinomial_square_criterion(Ring::zmod(7), 0); }));
  CHECK(raises(Err::BadU, [] { trinomial_square_criterion(Ring::zmod(7), 6); }));

  // certificates in both directions agree with the root test
  for (std::uint64_t p : {7, 11, 13, 17, 19, 23}) {
    const Ring r = Ring::zmod(p);
    for (Elt u = 2; u < p - 1; ++u) {
      const FamilyReport rep = trinomial_minimal(r, u);
      check_report(rep);
      const Verdict v = trinomial_square_criterion(r, u);
      if (v == Verdict::IrreducibleCertified) CHECK(rep.irreducible);
      if (v == Verdict::ReducibleCertified) CHECK_FALSE(rep.irreducible);
    }
  }
}

TEST_CASE("root test range suffices") {
  const std::vector<Ring> fields = {
      Ring::zmod(3),  Ring::zmod(5),  Ring::zmod(7),  Ring::zmod(11),
      Ring::zmod(13), Ring::zmod(17), Ring::zmod(19), Ring::zmod(23),
      f4,             f8,             f9,             f25,
      f27,            Ring::gf(2, 4, find_irreducible_poly(2, 4))};
  for (const Ring& r : fields) {
    const Elt one = r.one();
    for (Elt u = 1; u < r.cardinality(); ++u) {
      if (!r.is_unit(u)) continue;
      const std::uint64_t h = r.order(u);
      std::uint64_t m = 3 * h;
      if (r.characteristic() != 2 && h % 2 == 0) m = 3 * h / 2;
      const bool bounded = trinomial_root_witness(r, u, m).has_value();
      // values at l repeat with period h, so l <= h sees every root
      bool unbounded = false;
      for (std::uint64_t l = 1; l <= h && !unbounded; ++l) {
        const Elt x2l = r.pow(u, 2 * l);
        const Elt xl1 = r.pow(u, l + 1);
        if (r.sub(r.add(x2l, xl1), one) == r.zero()) unbounded = true;
        if (r.sub(r.sub(x2l, xl1), one) == r.zero()) unbounded = true;
      }
      CHECK(bounded == unbounded);
      CHECK(trinomial_minimal(r, u).irreducible == !bounded);
    }
  }
}

TEST_CASE("quadrinomial") {
  const FamilyReport z8 = quadrinomial_minimal(Ring::zmod(8), 2, 6);
  CHECK(z8.size == 8);
  CHECK(z8.tuple.a == std::vector<Elt>{2, 2, 6, 6, 2, 2, 6, 6});
  CHECK(cdata(z8, "alpha") == "2");
  CHECK(cdata(z8, "beta") == "6");
  check_report(z8);

  const FamilyReport z43 = quadrinomial_minimal(Ring::zmod(43), 2, 4);
  CHECK(z43.size == 12);
  CHECK(z43.irreducible);
  CHECK(cdata(z43, "alpha") == "19");
  CHECK(cdata(z43, "beta") == "31");
  check_report(z43);

  for (const Ring& r : {Ring::zmod(5), Ring::zmod(8), f4}) {
    const FamilyReport zz = quadrinomial_minimal(r, 0, 0);
    CHECK(zz.size == 4);
    CHECK(zz.tuple.a == std::vector<Elt>{0, 0, 0, 0});
    CHECK(zz.irreducible);
    check_report(zz);
  }

  CHECK(raises(Err::ABNotInvertible, [] { quadrinomial_minimal(Ring::zmod(8), 3, 3); }));
  CHECK(raises(Err::ABNotInvertible, [] { quadrinomial_minimal(Ring::zmod(6), 3, 5); }));
}

TEST_CASE("quasi-monomial") {
  const FamilyReport z9 = quasi_monomial_minimal(Ring::zmod(9), 3);
  CHECK(z9.size == 4);
  CHECK(z9.tuple.a == std::vector<Elt>{6, 3, 3, 6});
  CHECK(z9.sign == 1);
  CHECK(z9.decided_by == "quasi-monomial-nonzero");
  CHECK(cdata(z9, "epsilon") == "-1");
  CHECK(cdata(z9, "a") == "6");
  CHECK(cdata(z9, "coincides_monomial") == "false");
  check_report(z9);

  const FamilyReport z10 = quasi_monomial_minimal(Ring::zmod(10), 3);
  CHECK(z10.tuple.a == std::vector<Elt>{8, 3, 3, 3, 8});
  check_report(z10);

  const FamilyReport z21 = quasi_monomial_minimal(Ring::zmod(21), 4);
  CHECK(z21.tuple.a == std::vector<Elt>{7, 4, 4, 4, 4, 7});
  CHECK(z21.irreducible);
  check_report(z21);

  const FamilyReport zero = quasi_monomial_minimal(Ring::zmod(7), 0);
  CHECK(zero.size == 4);
  CHECK(zero.tuple.a == std::vector<Elt>{0, 0, 0, 0});
  CHECK(zero.decided_by == "general-scan");
  check_report(zero);

  const FamilyReport one = quasi_monomial_minimal(Ring::zmod(7), 1);
  CHECK(one.size == 3);
  CHECK(cdata(one, "coincides_monomial") == "true");
  check_report(one);

  for (std::uint64_t n : {5, 9, 12}) {
    const Ring r = Ring::zmod(n);
    for (Elt x = 0; x < n; ++x) check_report(quasi_monomial_minimal(r, x));
  }
}

TEST_CASE("towed") {
  const Ring z11 = Ring::zmod(11);
  const FamilyReport b8 = towed_minimal(z11, 8);
  CHECK(b8.tuple.a == std::vector<Elt>{5, 8, 2, 2, 2, 2, 2, 8});
  CHECK(b8.irreducible);
  CHECK(b8.decided_by == "towed-form");
  CHECK(cdata(b8, "l") == "5");
  check_report(b8);

  const FamilyReport b9 = towed_minimal(z11, 9);
  CHECK(b9.tuple.a == std::vector<Elt>{3, 9, 2, 2, 2, 2, 2, 2, 2, 9});
  check_report(b9);

  const FamilyReport b0 = towed_minimal(z11, 0);
  CHECK(b0.tuple.a == std::vector<Elt>{9, 0, 2, 0});
  CHECK(b0.irreducible);
  check_report(b0);

  const FamilyReport b1 = towed_minimal(z11, 1);
  CHECK(b1.tuple.a == std::vector<Elt>{2, 1, 2, 1});
  CHECK_FALSE(b1.irreducible);
  check_report(b1);

  const FamilyReport bneg = towed_minimal(z11, 10);
  CHECK(bneg.size == 13);
  CHECK_FALSE(bneg.irreducible);
  check_report(bneg);

  const FamilyReport b2 = towed_minimal(z11, 2);
  CHECK(b2.size == 11);
  CHECK(b2.tuple.a == std::vector<Elt>(11, 2));
  CHECK(b2.irreducible);
  check_report(b2);

  const FamilyReport b3 = towed_minimal(z11, 3);
  CHECK(b3.size == 12);
  CHECK_FALSE(b3.irreducible);
  check_report(b3);

  for (std::uint64_t p : {5, 7, 13}) {
    const Ring r = Ring::zmod(p);
    for (Elt b = 0; b < p; ++b) check_report(towed_minimal(r, b));
  }

  CHECK(raises(Err::PNotPrime, [] { towed_minimal(Ring::zmod(10), 2); }));
  CHECK(raises(Err::PTooSmall, [] { towed_minimal(Ring::zmod(3), 2); }));
}

TEST_CASE("polarized") {
  const FamilyReport z8 = polarized_minimal(Ring::zmod(8), 3);
  CHECK(z8.size == 6);
  CHECK(z8.tuple.a == std::vector<Elt>{3, 3, 3, 5, 5, 5});
  CHECK(z8.irreducible);
  CHECK(cdata(z8, "l") == "3");
  check_report(z8);

  const FamilyReport pf9 = polarized_minimal(f9, 3);  // x = X
  CHECK(pf9.size == 8);
  CHECK_FALSE(pf9.irreducible);
  CHECK(cdata(pf9, "monomial_size") == "4");
  check_report(pf9);

  const FamilyReport z7 = polarized_minimal(Ring::zmod(7), 4);
  CHECK(z7.size == 8);
  CHECK_FALSE(z7.irreducible);
  check_report(z7);

  const FamilyReport pf25 = polarized_minimal(f25, 5);  // x = X
  CHECK(pf25.size == 24);
  CHECK(cdata(pf25, "monomial_size") ==
        std::to_string(monomial_minimal(f25, 5).size));
  check_report(pf25);

  const FamilyReport z6 = polarized_minimal(Ring::zmod(6), 2);
  CHECK(z6.size == 6);
  check_report(z6);

  for (std::uint64_t n : {5, 7, 9}) {
    const Ring r = Ring::zmod(n);
    for (Elt x = 1; x < n; ++x) check_report(polarized_minimal(r, x));
  }

  CHECK(raises(Err::CharTwo, [] { polarized_minimal(f4, 2); }));
  CHECK(raises(Err::XZero, [] { polarized_minimal(Ring::zmod(7), 0); }));
}

TEST_CASE("family and verdict names") {
  CHECK(std::string(family_name(Family::Monomial)) == "monomial");
  CHECK(std::string(family_name(Family::QuasiMonomial)) == "quasi_monomial");
  CHECK(std::string(verdict_name(Verdict::IrreducibleCertified)) ==
        "irreducible-certified");
  CHECK(std::string(verdict_name(Verdict::Inconclusive)) == "inconclusive");
}
