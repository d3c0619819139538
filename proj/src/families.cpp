#include "hopf/families.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace hopf {

namespace {

std::vector<std::vector<int>> all_rgs(int k) {
  // Restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(prefix).
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k);
  if (k == 0) {
    out.push_back(cur);
    return out;
  }
  auto rec = [&](auto&& self, int i, int mx) -> void {
    if (i == k) {
      out.push_back(cur);
      return;
    }
    for (int b = 0; b <= mx + 1; ++b) {
      cur[i] = b;
      self(self, i + 1, std::max(mx, b));
    }
  };
  cur[0] = 0;
  rec(rec, 1, 0);
  return out;
}

int rgs_blocks(const std::vector<int>& rgs) {
  int m = -1;
  for (int b : rgs) m = std::max(m, b);
  return m + 1;
}

std::string atom_label(int atom) {
  return std::to_string(atom + 1);  // atoms are printed 1-based
}

}  // namespace

int ColoredPartition::blocks() const { return rgs_blocks(block_of); }

Interval boolean_lattice(int n) {
  if (n < 0 || n > 20) throw SizeLimit("boolean_lattice: n out of range");
  int m = 1 << n;
  std::vector<std::vector<bool>> t(m, std::vector<bool>(m));
  std::vector<std::string> names(m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) t[a][b] = (a & b) == a;
    std::string s = "{";
    for (int i = 0; i < n; ++i)
      if (a & (1 << i)) s += (s.size() > 1 ? "," : "") + atom_label(i);
    names[a] = s + "}";
  }
  return Interval::from_leq_table(t, {}, std::move(names));
}

Interval chain_lattice(int n) {
  if (n < 0) throw SizeLimit("chain_lattice: n must be nonnegative");
  int m = n + 1;
  std::vector<std::vector<bool>> t(m, std::vector<bool>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) t[a][b] = a <= b;
  return Interval::from_leq_table(t);
}

Interval colored_partition_interval(const std::vector<int>& atom_colors,
                                    int num_colors,
                                    const ColoredPartition& top) {
  int n = static_cast<int>(atom_colors.size());
  if (n < 1) throw InvalidInput("colored_partition_interval: no atoms");
  if (n > 6) throw SizeLimit("colored_partition_interval: more than 6 atoms");
  int tb = top.blocks();
  if (static_cast<int>(top.block_of.size()) != n ||
      static_cast<int>(top.block_colors.size()) != tb)
    throw InvalidInput("colored_partition_interval: malformed top");

  // Atoms of each top block; singleton top blocks must carry the atom color.
  std::vector<std::vector<int>> block_atoms(tb);
  for (int i = 0; i < n; ++i) block_atoms[top.block_of[i]].push_back(i);
  for (int b = 0; b < tb; ++b) {
    if (block_atoms[b].empty())
      throw InvalidInput("colored_partition_interval: empty top block");
    if (block_atoms[b].size() == 1 &&
        top.block_colors[b] != atom_colors[block_atoms[b][0]])
      throw InvalidInput("singleton block color must equal its atom's color");
  }

  // Per top block, every colored partition of its atoms that sits below it:
  // the one-block partition of a block of size >= 2 is pinned to the top
  // block's color, singletons to the atom color, everything else is free.
  struct LocalPart {
    std::vector<int> rgs;     // over the block's atoms
    std::vector<int> colors;  // per local block
  };
  std::vector<std::vector<LocalPart>> local(tb);
  for (int b = 0; b < tb; ++b) {
    const auto& atoms = block_atoms[b];
    int k = static_cast<int>(atoms.size());
    for (const auto& rgs : all_rgs(k)) {
      int nb = rgs_blocks(rgs);
      std::vector<std::vector<int>> members(nb);
      for (int i = 0; i < k; ++i) members[rgs[i]].push_back(i);
      std::vector<int> colors(nb, 0);
      auto rec = [&](auto&& self, int blk) -> void {
        if (blk == nb) {
          local[b].push_back({rgs, colors});
          return;
        }
        if (members[blk].size() == 1) {
          colors[blk] = atom_colors[atoms[members[blk][0]]];
          self(self, blk + 1);
        } else if (nb == 1) {
          colors[blk] = top.block_colors[b];
          self(self, blk + 1);
        } else {
          for (int c = 1; c <= num_colors; ++c) {
            colors[blk] = c;
            self(self, blk + 1);
          }
        }
      };
      rec(rec, 0);
    }
  }

  // Combine the per-block partitions into global colored partitions.
  std::vector<ColoredPartition> elems;
  {
    std::vector<size_t> idx(tb, 0);
    for (;;) {
      ColoredPartition cp;
      cp.block_of.assign(n, -1);
      for (int b = 0; b < tb; ++b) {
        const LocalPart& lp = local[b][idx[b]];
        int base = static_cast<int>(cp.block_colors.size());
        int nb = rgs_blocks(lp.rgs);
        for (int c = 0; c < nb; ++c) cp.block_colors.push_back(lp.colors[c]);
        for (size_t i = 0; i < block_atoms[b].size(); ++i)
          cp.block_of[block_atoms[b][i]] = base + lp.rgs[i];
      }
      // Normalize block numbering to first-occurrence order.
      std::vector<int> remap(cp.block_colors.size(), -1);
      std::vector<int> colors;
      int next = 0;
      for (int i = 0; i < n; ++i) {
        int& r = remap[cp.block_of[i]];
        if (r < 0) {
          r = next++;
          colors.push_back(cp.block_colors[cp.block_of[i]]);
        }
        cp.block_of[i] = r;
      }
      cp.block_colors = std::move(colors);
      elems.push_back(std::move(cp));
      int b = tb - 1;
      while (b >= 0 && ++idx[b] == local[b].size()) idx[b--] = 0;
      if (b < 0) break;
    }
  }
  std::sort(elems.begin(), elems.end(),
            [](const ColoredPartition& a, const ColoredPartition& b) {
              return std::tie(a.block_of, a.block_colors) <
                     std::tie(b.block_of, b.block_colors);
            });

  auto below = [&](const ColoredPartition& s, const ColoredPartition& t) {
    // Refinement with color agreement on common blocks.
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (s.block_of[i] == s.block_of[j] && t.block_of[i] != t.block_of[j])
          return false;
    for (int b = 0; b < s.blocks(); ++b) {
      int tblock = -1;
      for (int i = 0; i < n; ++i)
        if (s.block_of[i] == b && tblock < 0) tblock = t.block_of[i];
      bool equal = true;
      for (int i = 0; i < n; ++i)
        if ((s.block_of[i] == b) != (t.block_of[i] == tblock)) equal = false;
      if (equal && s.block_colors[b] != t.block_colors[tblock]) return false;
    }
    return true;
  };

  int m = static_cast<int>(elems.size());
  std::vector<std::vector<bool>> t(m, std::vector<bool>(m));
  std::vector<std::string> names(m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) t[a][b] = below(elems[a], elems[b]);
    const ColoredPartition& cp = elems[a];
    int nb = cp.blocks();
    std::vector<std::vector<int>> members(nb);
    for (int i = 0; i < n; ++i) members[cp.block_of[i]].push_back(i);
    std::string nm;
    for (int b = 0; b < nb; ++b) {
      if (b) nm += "|";
      for (int i : members[b]) nm += atom_label(i);
      if (num_colors > 1 && members[b].size() > 1)
        nm += "_" + std::to_string(cp.block_colors[b]);
    }
    names[a] = nm;
  }
  if (num_colors == 1)
    return Interval::from_leq_table(t, {}, std::move(names));

  // Relative color of tau over sigma: per block B of tau that merges two or
  // more sigma-blocks, Horner base-37 packing of (tau's color of B, sorted
  // colors of the sigma-blocks inside B) — injective for digits in 1..36.
  std::vector<Color> rel(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (!t[a][b]) continue;
      const ColoredPartition& s = elems[a];
      const ColoredPartition& tau = elems[b];
      int nb = tau.blocks();
      for (int B = 0; B < nb; ++B) {
        std::vector<int> inner;  // colors of sigma-blocks inside B
        std::vector<bool> seen(s.blocks(), false);
        for (int i = 0; i < n; ++i)
          if (tau.block_of[i] == B && !seen[s.block_of[i]]) {
            seen[s.block_of[i]] = true;
            inner.push_back(s.block_colors[s.block_of[i]]);
          }
        if (inner.size() < 2) continue;
        std::sort(inner.begin(), inner.end());
        long long f = tau.block_colors[B];
        for (int c : inner) f = f * 37 + c;
        rel[a * m + b].push_back(static_cast<int>(f));
      }
    }
  return Interval::from_leq_table_rel(t, std::move(rel), std::move(names));
}

Interval colored_partition_poset(const std::vector<int>& counts, int r) {
  int num_colors = static_cast<int>(counts.size());
  if (num_colors < 1) throw InvalidInput("need at least one color");
  if (r < 1 || r > num_colors) throw InvalidInput("top color out of range");
  std::vector<int> atom_colors;
  for (int c = 0; c < num_colors; ++c) {
    if (counts[c] < 0) throw InvalidInput("negative atom count");
    for (int i = 0; i < counts[c]; ++i) atom_colors.push_back(c + 1);
  }
  int n = static_cast<int>(atom_colors.size());
  if (n < 1) throw InvalidInput("need at least one atom");
  if (n > 6) throw SizeLimit("colored_partition_poset: more than 6 atoms");
  ColoredPartition top;
  top.block_of.assign(n, 0);
  top.block_colors = {n == 1 ? atom_colors[0] : r};
  if (n == 1 && r != atom_colors[0])
    throw InvalidInput("single-atom poset: top color is pinned to the atom");
  return colored_partition_interval(atom_colors, num_colors, top);
}

Interval partition_lattice(int n) {
  if (n < 1 || n > 6) throw SizeLimit("partition_lattice: need 1 <= n <= 6");
  return colored_partition_poset(std::vector<int>{n}, 1);
}

Interval distributive_lattice_of_ideals(
    int n, const std::vector<std::pair<int, int>>& covers,
    const std::vector<std::string>& names) {
  if (n < 0 || n > 16) throw SizeLimit("ideal lattice: n out of range");
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) leq[i][i] = true;
  for (auto [x, y] : covers) {
    if (x < 0 || x >= n || y < 0 || y >= n)
      throw InvalidInput("cover references unknown element");
    leq[x][y] = true;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (leq[i][k])
        for (int j = 0; j < n; ++j)
          if (leq[k][j]) leq[i][j] = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && leq[i][j] && leq[j][i])
        throw NotAPartialOrder("ideal lattice input has a cycle");

  std::vector<int> ideals;
  for (int s = 0; s < (1 << n); ++s) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j)
      if (s & (1 << j))
        for (int i = 0; i < n; ++i)
          if (leq[i][j] && !(s & (1 << i))) ok = false;
    if (ok) ideals.push_back(s);
  }
  int m = static_cast<int>(ideals.size());
  std::vector<std::vector<bool>> t(m, std::vector<bool>(m));
  std::vector<std::string> inames(m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) t[a][b] = (ideals[a] & ideals[b]) == ideals[a];
    std::string s = "{";
    for (int i = 0; i < n; ++i)
      if (ideals[a] & (1 << i))
        s += (s.size() > 1 ? "," : "") +
             (i < static_cast<int>(names.size()) ? names[i] : atom_label(i));
    inames[a] = s + "}";
  }
  return Interval::from_leq_table(t, {}, std::move(inames));
}

Interval figure_lattice(int which) {
  if (which == 1) {
    // 0 < a,b < c < 1 with c = a v b.
    return Interval::from_covers(
        5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}}, {},
        {"0", "a", "b", "c", "1"});
  }
  if (which == 2) {
    // atoms a,b,c below d, then the top.
    return Interval::from_covers(
        6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}, {4, 5}}, {},
        {"0", "a", "b", "c", "d", "1"});
  }
  if (which == 3) {
    // 0 < a < b,b' < 1 (upper diamond over a).
    return Interval::from_covers(
        5, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}}, {},
        {"0", "a", "b", "b'", "1"});
  }
  throw InvalidInput("figure_lattice: which must be 1, 2 or 3");
}

Interval random_interval(std::uint64_t seed, int max_size) {
  if (max_size < 1 || max_size > 14)
    throw SizeLimit("random_interval: max_size must be in [1, 14]");
  std::mt19937_64 rng(seed);
  int core = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(
                                              std::max(1, max_size - 2)));
  std::vector<std::vector<bool>> leq(core, std::vector<bool>(core, false));
  for (int i = 0; i < core; ++i) leq[i][i] = true;
  for (int i = 0; i < core; ++i)
    for (int j = i + 1; j < core; ++j)
      if (rng() % 100 < 35) leq[i][j] = true;
  for (int k = 0; k < core; ++k)
    for (int i = 0; i < core; ++i)
      if (leq[i][k])
        for (int j = 0; j < core; ++j)
          if (leq[k][j]) leq[i][j] = true;

  bool has_bottom = false, has_top = false;
  for (int x = 0; x < core; ++x) {
    bool bot = true, top = true;
    for (int y = 0; y < core; ++y) {
      if (!leq[x][y]) bot = false;
      if (!leq[y][x]) top = false;
    }
    if (bot) has_bottom = true;
    if (top) has_top = true;
  }
  int n = core + (has_bottom ? 0 : 1) + (has_top ? 0 : 1);
  std::vector<std::vector<bool>> full(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) full[i][i] = true;
  int off = has_bottom ? 0 : 1;
  for (int i = 0; i < core; ++i)
    for (int j = 0; j < core; ++j) full[i + off][j + off] = leq[i][j];
  if (!has_bottom)
    for (int j = 0; j < n; ++j) full[0][j] = true;
  if (!has_top)
    for (int i = 0; i < n; ++i) full[i][n - 1] = true;
  return Interval::from_leq_table(full);
}

}  // namespace hopf
