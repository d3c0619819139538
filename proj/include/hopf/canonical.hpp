#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "hopf/interval.hpp"

namespace hopf {

// Certificate of the (color-)isomorphism class: two intervals are equivalent
// iff their certificates are byte-equal.
struct CanonicalForm {
  std::string bytes;
  std::string hex() const;
  bool operator==(const CanonicalForm&) const = default;
};

// Canonical relabeling: perm[k] = element placed at canonical position k.
// Exact backtracking over an invariant-refined ordered partition, choosing the
// lexicographically minimal encoding.
struct CanonicalLabeling {
  CanonicalForm form;
  std::vector<ElementId> order;
};

CanonicalLabeling canonical_labeling(const Interval& P);
CanonicalForm canonical_form(const Interval& P);

bool are_equivalent(const Interval& P, const Interval& Q);

// For equivalent P, Q: bijection w with w[x] = matching element of Q.
// Throws InternalInvariant if the intervals are not equivalent.
std::vector<ElementId> equivalence_witness(const Interval& P,
                                           const Interval& Q);

using ClassId = int;

// Maps certificates to stable class ids with pretty names "X1", "X2", ... in
// registration order.  Also hosts the per-run memo caches used by the
// decomposition and antipode machinery.  Mutable; confine to one thread.
class ClassRegistry {
 public:
  ClassId register_class(const Interval& P);

  const std::string& name(ClassId id) const { return names_.at(id); }
  const Interval& representative(ClassId id) const { return reps_.at(id); }
  const std::string& certificate(ClassId id) const { return certs_.at(id); }
  int count() const { return static_cast<int>(names_.size()); }

  // Memoized certificate of a labeled interval (keyed by raw structure).
  const std::string& certificate_of(const Interval& P);

  // Caches owned here, filled by decompose.cpp.
  std::unordered_map<std::string, std::vector<ClassId>>& factor_cache() {
    return factor_cache_;
  }
  std::unordered_map<std::string, std::vector<ElementId>>& center_cache() {
    return center_cache_;
  }

 private:
  std::unordered_map<std::string, ClassId> by_cert_;
  std::vector<std::string> names_;
  std::vector<std::string> certs_;
  std::vector<Interval> reps_;
  std::unordered_map<std::string, std::string> cert_cache_;
  std::unordered_map<std::string, std::vector<ClassId>> factor_cache_;
  std::unordered_map<std::string, std::vector<ElementId>> center_cache_;
};

}  // namespace hopf
