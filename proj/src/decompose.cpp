#include "hopf/decompose.hpp"

#include <algorithm>

namespace hopf {

namespace {

int downset_size(const Interval& P, ElementId a) {
  int k = 0;
  for (int z = 0; z < P.size(); ++z)
    if (P.leq(z, a)) ++k;
  return k;
}

}  // namespace

std::vector<ElementId> center(const Interval& P, ClassRegistry& reg) {
  auto& cache = reg.center_cache();
  auto it = cache.find(P.raw_key());
  if (it != cache.end()) return it->second;

  int n = P.size();
  std::vector<int> dsz(n);
  for (int a = 0; a < n; ++a) dsz[a] = downset_size(P, a);
  std::vector<ElementId> out;
  for (int a = 0; a < n; ++a) {
    bool in_center = false;
    for (int b = 0; b < n && !in_center; ++b) {
      if (dsz[a] * dsz[b] != n) continue;
      // In any factorization the complement pair meets at bottom and joins
      // at top; cheap necessary filter before the isomorphism check.
      auto j = join(P, a, b);
      auto m = meet(P, a, b);
      if (!j || *j != P.top() || !m || *m != P.bottom()) continue;
      auto prod = cartesian_product(subinterval(P, P.bottom(), a).interval,
                                    subinterval(P, P.bottom(), b).interval);
      if (reg.certificate_of(prod.interval) == reg.certificate_of(P))
        in_center = true;
    }
    if (in_center) out.push_back(a);
  }
  cache.emplace(P.raw_key(), out);
  return out;
}

std::vector<ElementId> prime_center(const Interval& P, ClassRegistry& reg) {
  auto Z = center(P, reg);
  std::vector<ElementId> out;
  for (ElementId a : Z) {
    if (a == P.bottom()) continue;
    bool minimal = true;
    for (ElementId b : Z)
      if (b != P.bottom() && P.less(b, a)) minimal = false;
    if (minimal) out.push_back(a);
  }
  return out;
}

bool is_decomposable(const Interval& P, ClassRegistry& reg) {
  if (P.size() == 1) return false;  // the unit: neither D nor I
  return prime_center(P, reg).size() > 1;
}

std::vector<ClassId> class_factors(const Interval& P, ClassRegistry& reg) {
  const std::string& cert = reg.certificate_of(P);
  auto& cache = reg.factor_cache();
  auto it = cache.find(cert);
  if (it != cache.end()) return it->second;
  std::vector<ClassId> out;
  if (P.size() > 1) {
    for (ElementId a : prime_center(P, reg))
      out.push_back(
          reg.register_class(subinterval(P, P.bottom(), a).interval));
    std::sort(out.begin(), out.end());
  }
  cache.emplace(cert, out);
  return out;
}

Factorization factor_indecomposable(const Interval& P, ClassRegistry& reg) {
  Factorization f;
  if (P.size() == 1) {
    f.complete = true;  // empty product is the unit
    return f;
  }
  for (ElementId a : prime_center(P, reg)) {
    ClassId id = reg.register_class(subinterval(P, P.bottom(), a).interval);
    f.factors.emplace_back(id, a);
  }
  std::sort(f.factors.begin(), f.factors.end());
  // Verify the product of the factors reconstructs P.
  Interval acc = subinterval(P, P.bottom(), P.bottom()).interval;
  for (auto& [id, a] : f.factors)
    acc = cartesian_product(acc, subinterval(P, P.bottom(), a).interval)
              .interval;
  f.complete = reg.certificate_of(acc) == reg.certificate_of(P);
  return f;
}

bool element_is_complemented(const Interval& P, ElementId a) {
  for (int b = 0; b < P.size(); ++b) {
    auto j = join(P, a, b);
    auto m = meet(P, a, b);
    if (j && m && *j == P.top() && *m == P.bottom()) return true;
  }
  return false;
}

bool element_is_distributive(const Interval& P, ElementId a) {
  auto J = [&](ElementId x, ElementId y) { return *join(P, x, y); };
  auto M = [&](ElementId x, ElementId y) { return *meet(P, x, y); };
  for (int x = 0; x < P.size(); ++x)
    for (int y = 0; y < P.size(); ++y) {
      if (M(a, J(x, y)) != J(M(a, x), M(a, y))) return false;
      if (M(x, J(a, y)) != J(M(x, a), M(x, y))) return false;
      if (J(a, M(x, y)) != M(J(a, x), J(a, y))) return false;
      if (J(x, M(a, y)) != M(J(x, a), J(x, y))) return false;
    }
  return true;
}

std::vector<ElementId> center_via_distributivity(const Interval& P) {
  if (!is_lattice(P))
    throw NotALattice("center_via_distributivity needs a lattice");
  std::vector<ElementId> out;
  for (int a = 0; a < P.size(); ++a)
    if (element_is_distributive(P, a) && element_is_complemented(P, a))
      out.push_back(a);
  return out;
}

}  // namespace hopf
