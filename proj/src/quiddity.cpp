#include "quiddity/quiddity.hpp"

#include <algorithm>

namespace qlab {

std::optional<int> is_quiddity(const Tuple& t) {
  const Ring& r = t.ring;
  Mat2 m = m_matrix(r, t.a);
  if (mat_is_id(r, m)) return 1;
  if (mat_is_neg_id(r, m)) return -1;
  return std::nullopt;
}

Tuple oplus(const Tuple& t1, const Tuple& t2) {
  if (!t1.ring.same(t2.ring)) raise(Err::RingMismatch, "operands live in different rings");
  if (t1.size() < 2 || t2.size() < 2) raise(Err::TooShort, "both operands need size >= 2");
  const Ring& r = t1.ring;
  const auto& a = t1.a;
  const auto& b = t2.a;
  std::vector<Elt> c;
  c.reserve(a.size() + b.size() - 2);
  c.push_back(r.add(a.front(), b.back()));
  c.insert(c.end(), a.begin() + 1, a.end() - 1);
  c.push_back(r.add(a.back(), b.front()));
  c.insert(c.end(), b.begin() + 1, b.end() - 1);
  return {r, std::move(c)};
}

namespace {

bool has_rotation(const std::vector<Elt>& pat, const std::vector<Elt>& v) {
  std::vector<Elt> d;
  d.reserve(2 * v.size());
  d.insert(d.end(), v.begin(), v.end());
  d.insert(d.end(), v.begin(), v.end());
  return std::search(d.begin(), d.end(), pat.begin(), pat.end()) != d.end();
}

}  // namespace

bool equivalent(const Tuple& t1, const Tuple& t2) {
  if (!t1.ring.same(t2.ring)) raise(Err::RingMismatch, "operands live in different rings");
  if (t1.size() != t2.size()) return false;
  if (t1.size() == 0) return true;
  if (has_rotation(t1.a, t2.a)) return true;
  std::vector<Elt> rev(t2.a.rbegin(), t2.a.rend());
  return has_rotation(t1.a, rev);
}

std::optional<ReductionWitness> is_reducible(const Tuple& t) {
  if (!is_quiddity(t)) raise(Err::NotASolution, "reducibility applies to solutions");
  const std::size_t n = t.size();
  if (n < 3) raise(Err::TooShort, "no reducibility verdict below size 3");
  const Ring& r = t.ring;
  const std::size_t jmax = (n - 2) / 2;
  if (jmax == 0) return std::nullopt;
  if (static_cast<std::uint64_t>(n) * jmax > budget())
    raise(Err::Budget, "window scan exceeds the budget");
  const Elt one = r.one(), neg1 = r.neg(one), zero = r.zero();

  // Equivalent to scanning lengths j ascending with starts ascending inside
  // each length: every start is swept once, and later starts may only claim
  // strictly shorter windows than the best hit so far.
  std::size_t best_j = 0, best_i = 0;
  bool found = false;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t limit = found ? best_j - 1 : jmax;
    Elt km1 = one, km2 = zero;
    for (std::size_t j = 1; j <= limit; ++j) {
      Elt k = r.sub(r.mul(t.a[(i + j - 1) % n], km1), km2);
      km2 = km1;
      km1 = k;
      if (k == one || k == neg1) {
        best_j = j;
        best_i = i;
        found = true;
        break;
      }
    }
  }
  if (!found) return std::nullopt;

  std::vector<Elt> window(best_j);
  for (std::size_t k = 0; k < best_j; ++k) window[k] = t.a[(best_i + k) % n];
  Extension ext = extend_to_solution(r, window);
  const Elt x = ext.tuple.front(), y = ext.tuple.back();
  const std::size_t m = n - best_j;
  std::vector<Elt> comp(m);
  for (std::size_t k = 0; k < m; ++k) comp[k] = t.a[(best_i + best_j + k) % n];
  comp[0] = r.sub(comp[0], y);
  comp[m - 1] = r.sub(comp[m - 1], x);
  return ReductionWitness{best_i, best_j, Tuple{r, std::move(ext.tuple)},
                          Tuple{r, std::move(comp)}};
}

bool verify_witness(const Tuple& t, const ReductionWitness& w) {
  try {
    if (!t.ring.same(w.summand.ring) || !t.ring.same(w.complement.ring)) return false;
    const std::size_t n = t.size();
    if (n < 4 || w.start >= n) return false;
    if (w.window_len < 1 || w.window_len > n - 3) return false;
    if (w.summand.size() != w.window_len + 2) return false;
    if (w.complement.size() != n - w.window_len) return false;
    if (w.summand.size() < 3 || w.complement.size() < 3) return false;
    for (std::size_t k = 0; k < w.window_len; ++k) {
      if (w.summand.a[k + 1] != t.a[(w.start + k) % n]) return false;
    }
    if (!is_quiddity(w.summand) || !is_quiddity(w.complement) || !is_quiddity(t))
      return false;
    return equivalent(t, oplus(w.complement, w.summand));
  } catch (const Error&) {
    return false;
  }
}

}  // namespace qlab
