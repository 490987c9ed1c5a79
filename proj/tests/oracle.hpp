#pragma once
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "quiddity/quiddity.hpp"

namespace qlab {

inline std::vector<std::vector<Elt>> orientations(const std::vector<Elt>& a) {
  std::vector<std::vector<Elt>> out;
  std::vector<Elt> cur = a;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t rot = 0; rot < cur.size(); ++rot) {
      std::vector<Elt> v(cur.size());
      for (std::size_t i = 0; i < cur.size(); ++i) v[i] = cur[(i + rot) % cur.size()];
      out.push_back(std::move(v));
    }
    std::reverse(cur.begin(), cur.end());
  }
  return out;
}

// Direct reducibility: some orientation splits as complement + summand with
// both parts solutions of size >= 3. Interiors of both parts are pinned by the
// orientation; only the two summand boundary entries are free.
inline bool oracle_reducible(const Tuple& t) {
  const Ring& r = t.ring;
  const std::size_t n = t.size();
  if (n < 4) return false;
  const std::uint64_t q = r.cardinality();
  for (const auto& tp : orientations(t.a)) {
    for (std::size_t l = 3; l + 1 <= n; ++l) {
      const std::size_t m = n + 2 - l;  // complement size, >= 3
      for (Elt b1 = 0; b1 < q; ++b1) {
        for (Elt bl = 0; bl < q; ++bl) {
          std::vector<Elt> s;
          s.reserve(l);
          s.push_back(b1);
          s.insert(s.end(), tp.begin() + m, tp.end());
          s.push_back(bl);
          if (!is_quiddity({r, s})) continue;
          std::vector<Elt> c;
          c.reserve(m);
          c.push_back(r.sub(tp[0], bl));
          c.insert(c.end(), tp.begin() + 1, tp.begin() + (m - 1));
          c.push_back(r.sub(tp[m - 1], b1));
          if (!is_quiddity({r, c})) continue;
          if (oplus({r, c}, {r, s}).a != tp) {
            std::fprintf(stderr, "oracle: sum law violated\n");
            std::abort();
          }
          return true;
        }
      }
    }
  }
  return false;
}

}  // namespace qlab
