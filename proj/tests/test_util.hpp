#pragma once

// Shared helpers for the test suites: independent oracles (chain counts,
// Bell numbers), relabeling, and reusable input pools.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "hopf/families.hpp"
#include "hopf/interval.hpp"

namespace testutil {

using hopf::Color;
using hopf::ElementId;
using hopf::Interval;

// Number of bottom-to-top chains, by the standard recursion
// f(x) = 1 if x = top else sum of f(y) over y > x.
inline long long chain_count_oracle(const Interval& P) {
  int n = P.size();
  std::vector<long long> memo(n, -1);
  std::function<long long(int)> f = [&](int x) -> long long {
    if (x == P.top()) return 1;
    if (memo[x] >= 0) return memo[x];
    long long total = 0;
    for (int y = 0; y < n; ++y)
      if (P.less(x, y)) total += f(y);
    return memo[x] = total;
  };
  return f(P.bottom());
}

// Bell numbers via the Bell triangle.
inline long long bell_number(int n) {
  std::vector<std::vector<long long>> tri{{1}};
  for (int i = 1; i <= n; ++i) {
    std::vector<long long> row{tri.back().back()};
    for (long long x : tri.back()) row.push_back(row.back() + x);
    tri.push_back(std::move(row));
  }
  return tri[n][0];
}

// Rebuilds P with element x renamed to perm[x]; colors (plain or contextual)
// move along.  Used to test relabeling invariance of canonical forms.
inline Interval relabel(const Interval& P, const std::vector<int>& perm) {
  int n = P.size();
  std::vector<std::vector<bool>> t(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[perm[x]][perm[y]] = P.leq(x, y);
  if (P.has_relative_colors()) {
    std::vector<Color> rel(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x)
      for (int z = 0; z < n; ++z)
        if (P.leq(x, z)) rel[perm[x] * n + perm[z]] = P.relative_color(x, z);
    return Interval::from_leq_table_rel(t, std::move(rel));
  }
  std::vector<Color> colors(n);
  for (int x = 0; x < n; ++x) colors[perm[x]] = P.color(x);
  return Interval::from_leq_table(t, std::move(colors));
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

// Every labeled partial order on {0..n-1}, returned as strict less-than pair
// lists (suitable as cover input; transitive closure is a no-op on them).
inline std::vector<std::vector<std::pair<int, int>>> all_poset_relations(
    int n) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) slots.emplace_back(i, j);
  std::vector<std::vector<std::pair<int, int>>> out;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
    for (size_t k = 0; k < slots.size(); ++k)
      if (mask & (1u << k)) lt[slots[k].first][slots[k].second] = true;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        if (lt[i][j] && lt[j][i]) ok = false;  // antisymmetry
        for (int k = 0; k < n && ok; ++k)
          if (lt[i][j] && lt[j][k] && !lt[i][k]) ok = false;  // transitivity
      }
    if (!ok) continue;
    std::vector<std::pair<int, int>> rel;
    for (size_t k = 0; k < slots.size(); ++k)
      if (mask & (1u << k)) rel.push_back(slots[k]);
    out.push_back(std::move(rel));
  }
  return out;
}

// First `count` seeds (from start_seed up) whose random interval is a
// lattice / is not a lattice.
inline std::vector<Interval> random_lattices(int count, int max_size,
                                             std::uint64_t start_seed = 1) {
  std::vector<Interval> out;
  for (std::uint64_t seed = start_seed;
       static_cast<int>(out.size()) < count; ++seed) {
    Interval P = hopf::random_interval(seed, max_size);
    if (hopf::is_lattice(P)) out.push_back(std::move(P));
  }
  return out;
}

inline std::vector<Interval> random_nonlattices(int count, int max_size,
                                                std::uint64_t start_seed = 1) {
  std::vector<Interval> out;
  for (std::uint64_t seed = start_seed;
       static_cast<int>(out.size()) < count; ++seed) {
    Interval P = hopf::random_interval(seed, max_size);
    if (!hopf::is_lattice(P)) out.push_back(std::move(P));
  }
  return out;
}

// All colored partition posets with at most two colors and at most four
// atoms (skipping the invalid single-atom/top-color combinations).
inline std::vector<Interval> small_colored_posets() {
  std::vector<Interval> out;
  for (int a = 1; a <= 4; ++a) out.push_back(hopf::partition_lattice(a));
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; a + b <= 4; ++b) {
      if (a + b < 1) continue;
      for (int r = 1; r <= 2; ++r) {
        if (a + b == 1) {  // top color pinned to the atom's color
          if ((a == 1 && r != 1) || (b == 1 && r != 2)) continue;
        }
        out.push_back(hopf::colored_partition_poset({a, b}, r));
      }
    }
  return out;
}

}  // namespace testutil
