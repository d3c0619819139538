#pragma once

#include <vector>

#include "hopf/canonical.hpp"
#include "hopf/interval.hpp"

namespace hopf {

// Unique factorization into indecomposables (Lemma: product over the prime
// center reconstructs the interval).  Witnesses are the prime-center elements.
struct Factorization {
  std::vector<std::pair<ClassId, ElementId>> factors;  // sorted by ClassId
  bool complete = false;  // product of representatives verified equivalent
};

// All a admitting a complement a' with [0,a] x [0,a'] equivalent to P.
// Defined by brute-force complement search; always contains bottom and top.
std::vector<ElementId> center(const Interval& P, ClassRegistry& reg);

// Distributive-and-complemented characterization (lattices only); this is
// the center w.r.t. plain Cartesian-product decomposability.
std::vector<ElementId> center_via_distributivity(const Interval& P);

// Minimal nonzero elements of the center.  Empty for the singleton.
std::vector<ElementId> prime_center(const Interval& P, ClassRegistry& reg);

bool is_decomposable(const Interval& P, ClassRegistry& reg);

Factorization factor_indecomposable(const Interval& P, ClassRegistry& reg);

// Sorted multiset of indecomposable class ids of P (empty for singleton).
// Memoized by certificate in the registry.
std::vector<ClassId> class_factors(const Interval& P, ClassRegistry& reg);

bool element_is_distributive(const Interval& P, ElementId a);
bool element_is_complemented(const Interval& P, ElementId a);

}  // namespace hopf
