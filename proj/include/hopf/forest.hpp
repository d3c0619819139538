#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hopf/algebra.hpp"
#include "hopf/interval.hpp"

namespace hopf {

// Forest node set, sorted ascending.  Nodes have indecomposable lower
// intervals and exclude bottom and top.
struct Forest {
  std::vector<ElementId> nodes;
  int size() const { return static_cast<int>(nodes.size()); }
  auto operator<=>(const Forest&) const = default;
};

// J values stored on the antichains of F (every subset G delegates to the
// maximal elements of G).  The empty antichain maps to bottom.
struct JMap {
  std::map<std::vector<ElementId>, ElementId> on_antichains;
  // Lookup for an arbitrary subset G of the forest.
  ElementId at(const Interval& P, std::vector<ElementId> G) const;
};

struct PosetForest {
  Forest forest;
  JMap jmap;
};

// I_1 c ... c I_k = F; the implicit I_0 is empty.  Each ideal is sorted.
struct Filtration {
  std::vector<std::vector<ElementId>> ideals;
  int length() const { return static_cast<int>(ideals.size()); }
};

// Elements a != bottom, top with [bottom, a] indecomposable.
std::vector<ElementId> forest_candidates(const Interval& P, ClassRegistry& reg);

// Full (all-antichain) validity checks.
bool is_forest_lattice(const Interval& P, const Forest& F, ClassRegistry& reg);
bool is_forest_poset(const Interval& P, const PosetForest& F,
                     ClassRegistry& reg);

std::vector<Forest> enumerate_forests_lattice(const Interval& P,
                                              ClassRegistry& reg);
std::vector<PosetForest> enumerate_forests_poset(const Interval& P,
                                                 ClassRegistry& reg);

int sign_degree(const Forest& F);  // |F| + 1

Monomial theta(const Interval& P, const Forest& F, ClassRegistry& reg);
Monomial theta(const Interval& P, const PosetForest& F, ClassRegistry& reg);

Forest chain_to_forest(const Chain& C, const Interval& P, ClassRegistry& reg);
PosetForest chain_to_forest_poset(const Chain& C, const Interval& P,
                                  ClassRegistry& reg);

Chain forest_to_chain(const Forest& F, const Interval& P, ClassRegistry& reg);
Chain forest_to_chain(const PosetForest& F, const Interval& P,
                      ClassRegistry& reg);

std::vector<Filtration> enumerate_filtrations(const Forest& F,
                                              const Interval& P);

// Direct fiber enumeration; asserts agreement with (-1)^{|F|+1} and with the
// filtration sum, throwing InternalInvariant on mismatch.
int fiber_sign_sum(const Forest& F, const Interval& P, ClassRegistry& reg);

// Signed sum over forests; dispatches on is_lattice unless forced.
HopfElement antipode_forests(const Interval& P, ClassRegistry& reg);
HopfElement antipode_forests_poset(const Interval& P, ClassRegistry& reg);

}  // namespace hopf
