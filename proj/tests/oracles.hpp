#pragma once

// Brute-force reference computations, independent of the library algorithms.

#include <bit>
#include <cstdint>
#include <vector>

#include "tstar/graphauto.hpp"

namespace oracle {

/// Counts automorphisms by backtracking over color- and degree-compatible
/// bijections. Each vertex keeps the set of images still consistent with
/// the assignments so far; the vertex with the fewest is assigned next.
inline std::uint64_t count_automorphisms(const tstar::ColoredGraph& g) {
  const std::size_t n = g.size(), words = (n + 63) / 64;
  using Set = std::vector<std::uint64_t>;
  std::vector<Set> nbr(n, Set(words, 0));
  for (auto [u, v] : g.edges()) {
    nbr[u][v / 64] |= 1ull << (v % 64);
    nbr[v][u / 64] |= 1ull << (u % 64);
  }
  std::vector<Set> dom(n, Set(words, 0));
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w)
      if (g.color(static_cast<std::uint32_t>(v)) == g.color(static_cast<std::uint32_t>(w)) &&
          g.degree(static_cast<std::uint32_t>(v)) == g.degree(static_cast<std::uint32_t>(w)))
        dom[v][w / 64] |= 1ull << (w % 64);

  std::vector<char> done(n, 0);
  std::uint64_t count = 0;
  auto size = [&](const Set& s) {
    std::size_t c = 0;
    for (auto x : s) c += static_cast<std::size_t>(std::popcount(x));
    return c;
  };
  auto rec = [&](auto&& self, std::vector<Set>& d, std::size_t assigned) -> void {
    if (assigned == n) {
      ++count;
      return;
    }
    std::size_t v = n, best = n + 1;
    for (std::size_t u = 0; u < n; ++u)
      if (!done[u]) {
        const std::size_t s = size(d[u]);
        if (s < best) best = s, v = u;
      }
    if (best == 0) return;
    done[v] = 1;
    for (std::size_t wi = 0; wi < words; ++wi)
      for (std::uint64_t bits = d[v][wi]; bits; bits &= bits - 1) {
        const std::size_t w = wi * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        std::vector<Set> next = d;
        bool dead = false;
        for (std::size_t u = 0; u < n && !dead; ++u) {
          if (done[u]) continue;
          const bool adj = (nbr[v][u / 64] >> (u % 64)) & 1;
          std::size_t left = 0;
          for (std::size_t k = 0; k < words; ++k) {
            next[u][k] &= adj ? nbr[w][k] : ~nbr[w][k];
            if (k == w / 64) next[u][k] &= ~(1ull << (w % 64));
            left |= next[u][k] != 0;
          }
          dead = left == 0;
        }
        if (!dead) self(self, next, assigned + 1);
      }
    done[v] = 0;
  };
  rec(rec, dom, 0);
  return count;
}

}  // namespace oracle
