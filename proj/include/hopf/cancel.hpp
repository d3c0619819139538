#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hopf/algebra.hpp"
#include "hopf/forest.hpp"
#include "hopf/interval.hpp"

namespace hopf {

struct CancellationReport {
  // Forests grouped by the class monomial of Theta, with their signs.
  std::map<Monomial, std::vector<std::pair<Forest, int>>> groups;
  std::vector<std::pair<Forest, Forest>> canceling_pairs;
  bool is_cancellation_free = true;
};

// Both throw InputDecomposable when P is decomposable (the notions are
// defined for indecomposable intervals only).
bool is_upper_indecomposable(const Interval& P, ClassRegistry& reg);
bool is_sui(const Interval& P, ClassRegistry& reg);

CancellationReport cancellation_report(const Interval& P, ClassRegistry& reg);

// Checks is_sui over the indecomposable factors of every subinterval of
// every generator (the finite subinterval closure of the generating set).
bool family_upper_indecomposable(const std::vector<Interval>& generators,
                                 ClassRegistry& reg);

}  // namespace hopf
