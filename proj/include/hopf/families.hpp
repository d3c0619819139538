#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hopf/interval.hpp"

namespace hopf {

// A colored partition of a colored ground set: blocks as a restricted-growth
// string over atoms, one color per block.  Singleton blocks carry their
// atom's color.
struct ColoredPartition {
  std::vector<int> block_of;      // rgs: atom -> block index
  std::vector<int> block_colors;  // block index -> color
  int blocks() const;
  bool operator==(const ColoredPartition&) const = default;
};

Interval boolean_lattice(int n);
Interval chain_lattice(int n);  // n+1 elements

// Partitions of {1..n} by refinement.  1 <= n <= 6 (SizeLimit otherwise).
Interval partition_lattice(int n);

// The interval [0-hat, top] in the poset of N-colored partitions of the given
// colored atom set.  Elements are uncolored when num_colors == 1.
Interval colored_partition_interval(const std::vector<int>& atom_colors,
                                    int num_colors,
                                    const ColoredPartition& top);

// Colored partition poset truncated to the single top colored r.
// counts[i] = number of atoms with color i+1.
Interval colored_partition_poset(const std::vector<int>& counts, int r);

// Order ideals of the poset given by a cover relation on n elements (no
// bottom/top required), ordered by inclusion.
Interval distributive_lattice_of_ideals(
    int n, const std::vector<std::pair<int, int>>& covers,
    const std::vector<std::string>& names = {});

// The three worked lattices (5, 6 and 5 elements).
Interval figure_lattice(int which);

// Reproducible random interval: random DAG, transitive closure, bottom/top
// adjoined when absent.  max_size <= 14.
Interval random_interval(std::uint64_t seed, int max_size);

}  // namespace hopf
