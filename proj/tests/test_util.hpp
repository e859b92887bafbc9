#pragma once

// Shared test-only helpers: independent oracles kept deliberately naive so
// they cannot share bugs with the production implementations.

#include <functional>
#include <random>
#include <vector>

#include "doctest.h"
#include "parkspan/multigraph.hpp"

namespace testutil {

using parkspan::BivarPoly;
using parkspan::Multigraph;

// Tutte polynomial straight from the subset (corank-nullity) expansion:
// T(x,y) = sum over copy subsets A of (x-1)^{r(E)-r(A)} (y-1)^{|A|-r(A)}.
inline BivarPoly whitney_tutte(const Multigraph& g) {
  auto cps = g.copies();
  int ec = static_cast<int>(cps.size());
  REQUIRE(ec <= 20);
  auto rank = [&](unsigned long mask) {
    std::vector<int> parent(g.v + 1);
    for (int i = 0; i <= g.v; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    int merged = 0;
    for (int b = 0; b < ec; ++b)
      if (mask >> b & 1) {
        int a = find(cps[b].first), c = find(cps[b].second);
        if (a != c) {
          parent[a] = c;
          ++merged;
        }
      }
    return merged;
  };
  unsigned long all = ec == 0 ? 0UL : (~0UL >> (64 - ec));
  int rE = rank(all);
  BivarPoly xm1 = BivarPoly::monomial(1, 0) + BivarPoly::constant(-1);
  BivarPoly ym1 = BivarPoly::monomial(0, 1) + BivarPoly::constant(-1);
  std::vector<BivarPoly> xp{BivarPoly::constant(1)}, yp{BivarPoly::constant(1)};
  for (int i = 1; i <= ec; ++i) {
    xp.push_back(xp.back() * xm1);
    yp.push_back(yp.back() * ym1);
  }
  BivarPoly total = BivarPoly::zero();
  for (unsigned long mask = 0; mask < (1UL << ec); ++mask) {
    int rA = rank(mask);
    total = total + xp[rE - rA] * yp[__builtin_popcountl(mask) - rA];
  }
  return total;
}

// Connected multigraph on every pair of 3..vmax vertices (full support).
inline Multigraph random_full_support(std::mt19937& rng, int vmax, int max_mult) {
  std::uniform_int_distribution<int> dv(3, vmax);
  std::uniform_int_distribution<int> dm(1, max_mult);
  Multigraph g;
  g.v = dv(rng);
  for (int i = 1; i <= g.v; ++i)
    for (int j = i + 1; j <= g.v; ++j) g.add_edge(i, j, dm(rng));
  return g;
}

}  // namespace testutil
