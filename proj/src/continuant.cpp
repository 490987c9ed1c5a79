#include "quiddity/continuant.hpp"
#include "quiddity/intmath.hpp"

namespace qlab {

namespace {

Mat2 m1(const Ring& r, Elt x) { return {x, r.neg(r.one()), r.one(), r.zero()}; }

}  // namespace

Elt continuant(const Ring& r, std::span<const Elt> a) {
  Elt km1 = r.one(), km2 = r.zero();  // K_0, K_{-1}
  for (Elt x : a) {
    Elt k = r.sub(r.mul(x, km1), km2);
    km2 = km1;
    km1 = k;
  }
  return km1;
}

Mat2 m_matrix(const Ring& r, std::span<const Elt> a) {
  if (a.empty()) raise(Err::TooShort, "matrix needs at least one entry");
  Mat2 p = m1(r, a[0]);
  for (std::size_t i = 1; i < a.size(); ++i) p = mat_mul(r, m1(r, a[i]), p);
  return p;
}

Elt constant_continuant(const Ring& r, Elt x, std::uint64_t n) {
  if (n == 0) return r.one();
  if (n >= (1ull << 32) || n * n / 4 > budget())
    raise(Err::Budget, "closed form too long for the budget");
  const std::uint64_t ch = r.characteristic();
  // dm[i] = C(m - i, i) mod char, built along anti-diagonals of Pascal's
  // triangle: C(m-i, i) = C(m-1-i, i) + C(m-1-i, i-1).
  std::vector<std::uint64_t> dm2{1}, dm1{1};  // m = 0, 1
  for (std::uint64_t m = 2; m <= n; ++m) {
    std::vector<std::uint64_t> cur(m / 2 + 1);
    for (std::uint64_t i = 0; i < cur.size(); ++i) {
      std::uint64_t v = i < dm1.size() ? dm1[i] : 0;
      if (i >= 1 && i - 1 < dm2.size()) v = addmod(v, dm2[i - 1], ch);
      cur[i] = v;
    }
    dm2 = std::move(dm1);
    dm1 = std::move(cur);
  }
  std::vector<Elt> xp(n + 1);
  xp[0] = r.one();
  for (std::uint64_t j = 1; j <= n; ++j) xp[j] = r.mul(xp[j - 1], x);
  Elt acc = r.zero();
  for (std::uint64_t i = 0; i < dm1.size(); ++i) {
    // the reduced binomial is a prime-subfield constant, so its residue is
    // already a canonical element index
    Elt term = r.mul(static_cast<Elt>(dm1[i]), xp[n - 2 * i]);
    acc = i % 2 ? r.sub(acc, term) : r.add(acc, term);
  }
  return acc;
}

ContinuantTriple continuant_triple(const Ring& r, std::span<const Elt> a) {
  if (a.empty()) return {r.one(), r.zero(), r.zero()};
  Elt km1 = r.one(), km2 = r.zero();
  for (Elt x : a) {
    Elt k = r.sub(r.mul(x, km1), km2);
    km2 = km1;
    km1 = k;
  }
  return {km1, km2, continuant(r, a.subspan(1))};
}

Extension extend_to_solution(const Ring& r, std::span<const Elt> a) {
  auto t = continuant_triple(r, a);
  int eps;
  if (t.k_n == r.one()) {
    eps = 1;
  } else if (t.k_n == r.neg(r.one())) {
    eps = -1;
  } else {
    raise(Err::ContinuantNotUnitSign, "continuant must be 1 or -1");
  }
  auto scaled = [&](Elt v) { return eps == 1 ? v : r.neg(v); };
  Extension ext;
  ext.tuple.reserve(a.size() + 2);
  ext.tuple.push_back(scaled(t.k_right));
  ext.tuple.insert(ext.tuple.end(), a.begin(), a.end());
  ext.tuple.push_back(scaled(t.k_left));
  ext.sign = r.characteristic() == 2 ? 1 : -eps;
  return ext;
}

}  // namespace qlab
