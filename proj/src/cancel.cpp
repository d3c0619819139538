#include "hopf/cancel.hpp"

#include <set>
#include <string>

#include "hopf/decompose.hpp"
#include "hopf/errors.hpp"

namespace hopf {

namespace {

// Every proper upper interval is indecomposable (no input checks).
bool upper_indecomposable_core(const Interval& P, ClassRegistry& reg) {
  for (int x = 0; x < P.size(); ++x) {
    if (x == P.top()) continue;
    if (is_decomposable(subinterval(P, x, P.top()).interval, reg))
      return false;
  }
  return true;
}

}  // namespace

bool is_upper_indecomposable(const Interval& P, ClassRegistry& reg) {
  if (is_decomposable(P, reg))
    throw InputDecomposable("upper-indecomposability needs indecomposable P");
  return upper_indecomposable_core(P, reg);
}

bool is_sui(const Interval& P, ClassRegistry& reg) {
  if (is_decomposable(P, reg))
    throw InputDecomposable("s.u.i. is defined for indecomposable P");
  bool direct = true;
  for (int x = 0; x < P.size() && direct; ++x)
    for (int y = 0; y < P.size() && direct; ++y) {
      if (!P.leq(x, y)) continue;
      Interval S = subinterval(P, x, y).interval;
      if (!is_decomposable(S, reg) && !upper_indecomposable_core(S, reg))
        direct = false;
    }
  // Lower-interval criterion; must agree with the direct scan.
  bool lower = true;
  for (int a = 0; a < P.size() && lower; ++a) {
    Interval L = subinterval(P, P.bottom(), a).interval;
    if (!is_decomposable(L, reg) && !upper_indecomposable_core(L, reg))
      lower = false;
  }
  if (direct != lower)
    throw InternalInvariant("s.u.i. criteria disagree");
  return direct;
}

CancellationReport cancellation_report(const Interval& P, ClassRegistry& reg) {
  CancellationReport rep;
  if (P.size() == 1) return rep;
  if (is_lattice(P)) {
    for (const Forest& F : enumerate_forests_lattice(P, reg))
      rep.groups[theta(P, F, reg)].push_back(
          {F, sign_degree(F) % 2 == 0 ? 1 : -1});
  } else {
    for (const PosetForest& F : enumerate_forests_poset(P, reg))
      rep.groups[theta(P, F, reg)].push_back(
          {F.forest, sign_degree(F.forest) % 2 == 0 ? 1 : -1});
  }
  for (auto& [m, group] : rep.groups) {
    for (size_t i = 0; i < group.size(); ++i)
      for (size_t j = i + 1; j < group.size(); ++j)
        if (group[i].second != group[j].second) {
          rep.canceling_pairs.push_back({group[i].first, group[j].first});
          rep.is_cancellation_free = false;
        }
  }
  return rep;
}

bool family_upper_indecomposable(const std::vector<Interval>& generators,
                                 ClassRegistry& reg) {
  std::set<std::string> seen;
  for (const Interval& G : generators) {
    for (int x = 0; x < G.size(); ++x)
      for (int y = 0; y < G.size(); ++y) {
        if (!G.leq(x, y)) continue;
        Interval S = subinterval(G, x, y).interval;
        if (S.size() == 1) continue;
        if (!seen.insert(reg.certificate_of(S)).second) continue;
        if (is_decomposable(S, reg)) continue;
        if (!upper_indecomposable_core(S, reg)) return false;
      }
  }
  return true;
}

}  // namespace hopf
