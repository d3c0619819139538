#include "hopf/forest.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "hopf/decompose.hpp"
#include "hopf/errors.hpp"

namespace hopf {

namespace {

std::vector<ElementId> max_elements(const Interval& P,
                                    const std::vector<ElementId>& v) {
  std::vector<ElementId> out;
  for (ElementId x : v) {
    bool maximal = true;
    for (ElementId y : v)
      if (y != x && P.less(x, y)) maximal = false;
    if (maximal) out.push_back(x);
  }
  return out;
}

std::vector<ElementId> min_elements(const Interval& P,
                                    const std::vector<ElementId>& v) {
  std::vector<ElementId> out;
  for (ElementId x : v) {
    bool minimal = true;
    for (ElementId y : v)
      if (y != x && P.less(y, x)) minimal = false;
    if (minimal) out.push_back(x);
  }
  return out;
}

// Certificate of the product of lower intervals over the given elements.
std::string product_certificate(const Interval& P,
                                const std::vector<ElementId>& elems,
                                ClassRegistry& reg) {
  Interval acc = subinterval(P, P.bottom(), P.bottom()).interval;
  for (ElementId a : elems)
    acc = cartesian_product(acc, subinterval(P, P.bottom(), a).interval)
              .interval;
  return reg.certificate_of(acc);
}

// All antichains of the node set (including the empty one), each sorted.
std::vector<std::vector<ElementId>> antichains_of(
    const Interval& P, const std::vector<ElementId>& nodes) {
  std::vector<std::vector<ElementId>> out;
  std::vector<ElementId> cur;
  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == nodes.size()) {
      out.push_back(cur);
      return;
    }
    self(self, i + 1);
    for (ElementId a : cur)
      if (P.leq(a, nodes[i]) || P.leq(nodes[i], a)) return;
    cur.push_back(nodes[i]);
    self(self, i + 1);
    cur.pop_back();
  };
  rec(rec, 0);
  return out;
}

// Every element of b lies below some element of a.
bool dominates(const Interval& P, const std::vector<ElementId>& a,
               const std::vector<ElementId>& b) {
  for (ElementId y : b) {
    bool covered = false;
    for (ElementId x : a)
      if (P.leq(y, x)) covered = true;
    if (!covered) return false;
  }
  return true;
}

bool is_minimal_upper_bound(const Interval& P, ElementId c,
                            const std::vector<ElementId>& A) {
  for (ElementId a : A)
    if (!P.leq(a, c)) return false;
  for (int d = 0; d < P.size(); ++d) {
    if (!P.less(d, c)) continue;
    bool ub = true;
    for (ElementId a : A)
      if (!P.leq(a, d)) ub = false;
    if (ub) return false;
  }
  return true;
}

ElementId join_of(const Interval& P, const std::vector<ElementId>& v) {
  ElementId j = P.bottom();
  for (ElementId a : v) {
    auto r = join(P, j, a);
    if (!r) throw NotALattice("join does not exist");
    j = *r;
  }
  return j;
}

std::vector<ElementId> preds_of(const Interval& P,
                                const std::vector<ElementId>& nodes,
                                ElementId b, bool b_is_top) {
  std::vector<ElementId> below;
  for (ElementId a : nodes)
    if (b_is_top ? a != b : P.less(a, b)) below.push_back(a);
  if (b_is_top) return max_elements(P, nodes);
  return max_elements(P, below);
}

Monomial theta_unchecked(const Interval& P, const Forest& F,
                         const JMap* jmap, ClassRegistry& reg) {
  Monomial m;
  auto tilde = [&](const std::vector<ElementId>& preds) -> ElementId {
    if (jmap) return jmap->at(P, preds);
    return join_of(P, preds);
  };
  for (ElementId b : F.nodes) {
    ElementId bt = tilde(preds_of(P, F.nodes, b, false));
    m = m * class_monomial(subinterval(P, bt, b).interval, reg);
  }
  ElementId tt = tilde(max_elements(P, F.nodes));
  m = m * class_monomial(subinterval(P, tt, P.top()).interval, reg);
  return m;
}

// Condition (1): comparable or meeting only at bottom.
bool non_overlapping(const Interval& P, ElementId a, ElementId b,
                     bool lattice_mode) {
  if (P.leq(a, b) || P.leq(b, a)) return true;
  if (lattice_mode) {
    auto m = meet(P, a, b);
    return m && *m == P.bottom();
  }
  return lower_interval_intersection(P, a, b).size() == 1;
}

bool antichain_product_ok(const Interval& P,
                          const std::vector<ElementId>& A,
                          ClassRegistry& reg) {
  if (A.size() < 2) return true;
  return product_certificate(P, A, reg) ==
         reg.certificate_of(
             subinterval(P, P.bottom(), join_of(P, A)).interval);
}

void enumerate_jmaps(const Interval& P, const Forest& F, ClassRegistry& reg,
                     std::vector<PosetForest>& out) {
  auto chains = antichains_of(P, F.nodes);
  std::sort(chains.begin(), chains.end(),
            [](const auto& a, const auto& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  std::map<std::vector<ElementId>, ElementId> assigned;
  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == chains.size()) {
      out.push_back({F, JMap{assigned}});
      return;
    }
    const auto& A = chains[i];
    if (A.empty()) {
      assigned[A] = P.bottom();
      self(self, i + 1);
      assigned.erase(A);
      return;
    }
    std::string want = product_certificate(P, A, reg);
    for (int c = 0; c < P.size(); ++c) {
      if (c == P.top()) continue;
      if (!is_minimal_upper_bound(P, c, A)) continue;
      if (reg.certificate_of(subinterval(P, P.bottom(), c).interval) != want)
        continue;
      bool mono = true;
      for (auto& [B, v] : assigned) {
        if (dominates(P, A, B) && !P.leq(v, c)) mono = false;
        if (dominates(P, B, A) && !P.leq(c, v)) mono = false;
      }
      if (!mono) continue;
      assigned[A] = c;
      self(self, i + 1);
      assigned.erase(A);
    }
  };
  rec(rec, 0);
}

}  // namespace

ElementId JMap::at(const Interval& P, std::vector<ElementId> G) const {
  std::vector<ElementId> A = max_elements(P, G);
  std::sort(A.begin(), A.end());
  auto it = on_antichains.find(A);
  if (it == on_antichains.end())
    throw NotAForest("J is not defined on this subset");
  return it->second;
}

std::vector<ElementId> forest_candidates(const Interval& P,
                                         ClassRegistry& reg) {
  std::vector<ElementId> out;
  for (int a = 0; a < P.size(); ++a) {
    if (a == P.bottom() || a == P.top()) continue;
    Interval L = subinterval(P, P.bottom(), a).interval;
    if (!is_decomposable(L, reg)) out.push_back(a);
  }
  return out;
}

bool is_forest_lattice(const Interval& P, const Forest& F,
                       ClassRegistry& reg) {
  if (!is_lattice(P)) throw NotALattice("forests of lattices need a lattice");
  auto cand = forest_candidates(P, reg);
  for (ElementId a : F.nodes)
    if (std::find(cand.begin(), cand.end(), a) == cand.end()) return false;
  for (size_t i = 0; i < F.nodes.size(); ++i)
    for (size_t j = i + 1; j < F.nodes.size(); ++j)
      if (!non_overlapping(P, F.nodes[i], F.nodes[j], true)) return false;
  if (!F.nodes.empty() && join_of(P, F.nodes) == P.top()) return false;
  for (const auto& A : antichains_of(P, F.nodes))
    if (!antichain_product_ok(P, A, reg)) return false;
  return true;
}

bool is_forest_poset(const Interval& P, const PosetForest& F,
                     ClassRegistry& reg) {
  auto cand = forest_candidates(P, reg);
  const auto& nodes = F.forest.nodes;
  for (ElementId a : nodes)
    if (std::find(cand.begin(), cand.end(), a) == cand.end()) return false;
  for (size_t i = 0; i < nodes.size(); ++i)
    for (size_t j = i + 1; j < nodes.size(); ++j)
      if (!non_overlapping(P, nodes[i], nodes[j], false)) return false;
  auto chains = antichains_of(P, nodes);
  if (chains.size() != F.jmap.on_antichains.size()) return false;
  for (const auto& A : chains) {
    auto it = F.jmap.on_antichains.find(A);
    if (it == F.jmap.on_antichains.end()) return false;
    ElementId c = it->second;
    if (A.empty()) {
      if (c != P.bottom()) return false;
      continue;
    }
    if (c == P.top() || !is_minimal_upper_bound(P, c, A)) return false;
    if (reg.certificate_of(subinterval(P, P.bottom(), c).interval) !=
        product_certificate(P, A, reg))
      return false;
  }
  for (auto& [A, v] : F.jmap.on_antichains)
    for (auto& [B, w] : F.jmap.on_antichains)
      if (dominates(P, A, B) && !P.leq(w, v)) return false;
  return true;
}

std::vector<Forest> enumerate_forests_lattice(const Interval& P,
                                              ClassRegistry& reg) {
  if (!is_lattice(P))
    throw NotALattice("enumerate_forests_lattice needs a lattice");
  auto cand = forest_candidates(P, reg);
  std::vector<Forest> out;
  std::vector<ElementId> cur;
  auto rec = [&](auto&& self, size_t start, ElementId cur_join) -> void {
    out.push_back(Forest{cur});
    for (size_t i = start; i < cand.size(); ++i) {
      ElementId b = cand[i];
      bool ok = true;
      for (ElementId a : cur)
        if (!non_overlapping(P, a, b, true)) ok = false;
      if (!ok) continue;
      ElementId nj = *join(P, cur_join, b);
      if (nj == P.top()) continue;
      // Condition (2) on every antichain through b; older antichains were
      // validated when their last element was added.
      std::vector<ElementId> incomp;
      for (ElementId a : cur)
        if (!P.leq(a, b) && !P.leq(b, a)) incomp.push_back(a);
      for (auto A : antichains_of(P, incomp)) {
        A.push_back(b);
        if (!antichain_product_ok(P, A, reg)) ok = false;
      }
      if (!ok) continue;
      cur.push_back(b);
      std::sort(cur.begin(), cur.end());
      self(self, i + 1, nj);
      cur.erase(std::find(cur.begin(), cur.end(), b));
    }
  };
  rec(rec, 0, P.bottom());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PosetForest> enumerate_forests_poset(const Interval& P,
                                                 ClassRegistry& reg) {
  auto cand = forest_candidates(P, reg);
  std::vector<PosetForest> out;
  std::vector<ElementId> cur;
  auto rec = [&](auto&& self, size_t start) -> void {
    Forest F{cur};
    std::sort(F.nodes.begin(), F.nodes.end());
    enumerate_jmaps(P, F, reg, out);
    for (size_t i = start; i < cand.size(); ++i) {
      ElementId b = cand[i];
      bool ok = true;
      for (ElementId a : cur)
        if (!non_overlapping(P, a, b, false)) ok = false;
      if (!ok) continue;
      cur.push_back(b);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [](const PosetForest& a,
                                       const PosetForest& b) {
    if (a.forest != b.forest) return a.forest < b.forest;
    return a.jmap.on_antichains < b.jmap.on_antichains;
  });
  return out;
}

int sign_degree(const Forest& F) { return F.size() + 1; }

Monomial theta(const Interval& P, const Forest& F, ClassRegistry& reg) {
  if (!is_forest_lattice(P, F, reg))
    throw NotAForest("theta: not a forest of the lattice");
  return theta_unchecked(P, F, nullptr, reg);
}

Monomial theta(const Interval& P, const PosetForest& F, ClassRegistry& reg) {
  if (!is_forest_poset(P, F, reg))
    throw NotAForest("theta: not a forest of the poset");
  return theta_unchecked(P, F.forest, &F.jmap, reg);
}

Forest chain_to_forest(const Chain& C, const Interval& P, ClassRegistry& reg) {
  if (!chain_in_interval(P, C))
    throw ChainNotInInterval("chain_to_forest: not a chain of the interval");
  std::set<ElementId> s;
  for (size_t i = 1; i + 1 < C.elements.size(); ++i) {
    Subinterval sub = subinterval(P, P.bottom(), C.elements[i]);
    for (ElementId a : prime_center(sub.interval, reg))
      s.insert(sub.embedding[a]);
  }
  return Forest{std::vector<ElementId>(s.begin(), s.end())};
}

PosetForest chain_to_forest_poset(const Chain& C, const Interval& P,
                                  ClassRegistry& reg) {
  Forest F = chain_to_forest(C, P, reg);
  // First chain prefix whose prime center contains the node.
  std::map<ElementId, int> level;
  for (size_t i = 1; i + 1 < C.elements.size(); ++i) {
    Subinterval sub = subinterval(P, P.bottom(), C.elements[i]);
    for (ElementId a : prime_center(sub.interval, reg)) {
      ElementId g = sub.embedding[a];
      if (!level.count(g)) level[g] = static_cast<int>(i);
    }
  }
  JMap jm;
  for (auto A : antichains_of(P, F.nodes)) {
    if (A.empty()) {
      jm.on_antichains[A] = P.bottom();
      continue;
    }
    std::vector<ElementId> order = A;
    std::sort(order.begin(), order.end(), [&](ElementId a, ElementId b) {
      return level[a] != level[b] ? level[a] < level[b] : a < b;
    });
    ElementId acc = order[0];
    for (size_t i = 1; i < order.size(); ++i) {
      // Join taken inside the lower interval of the chain element where the
      // new node first appears.
      Subinterval sub =
          subinterval(P, P.bottom(), C.elements[level[order[i]]]);
      ElementId la = -1, lb = -1;
      for (int x = 0; x < sub.interval.size(); ++x) {
        if (sub.embedding[x] == acc) la = x;
        if (sub.embedding[x] == order[i]) lb = x;
      }
      if (la < 0 || lb < 0)
        throw InternalInvariant("chain_to_forest_poset: element escaped");
      auto j = join(sub.interval, la, lb);
      if (!j) throw InternalInvariant("chain_to_forest_poset: join missing");
      acc = sub.embedding[*j];
    }
    jm.on_antichains[A] = acc;
  }
  return {F, jm};
}

namespace {

Chain layered_chain(const Interval& P, const Forest& F,
                    const std::function<ElementId(
                        const std::vector<ElementId>&)>& bound) {
  std::vector<ElementId> rem = F.nodes;
  std::vector<ElementId> tops;
  while (!rem.empty()) {
    std::vector<ElementId> S = max_elements(P, rem);
    std::sort(S.begin(), S.end());
    tops.push_back(bound(S));
    std::vector<ElementId> next;
    for (ElementId x : rem)
      if (std::find(S.begin(), S.end(), x) == S.end()) next.push_back(x);
    rem = next;
  }
  Chain C;
  C.elements.push_back(P.bottom());
  for (auto it = tops.rbegin(); it != tops.rend(); ++it)
    C.elements.push_back(*it);
  if (P.top() != P.bottom()) C.elements.push_back(P.top());
  for (size_t i = 1; i < C.elements.size(); ++i)
    if (!P.less(C.elements[i - 1], C.elements[i]))
      throw InternalInvariant("forest_to_chain: layers not strictly nested");
  return C;
}

}  // namespace

Chain forest_to_chain(const Forest& F, const Interval& P, ClassRegistry&) {
  return layered_chain(
      P, F, [&](const std::vector<ElementId>& S) { return join_of(P, S); });
}

Chain forest_to_chain(const PosetForest& F, const Interval& P,
                      ClassRegistry&) {
  return layered_chain(P, F.forest, [&](const std::vector<ElementId>& S) {
    return F.jmap.at(P, S);
  });
}

std::vector<Filtration> enumerate_filtrations(const Forest& F,
                                              const Interval& P) {
  std::vector<Filtration> out;
  std::vector<std::vector<ElementId>> ideals;
  std::vector<ElementId> I;
  auto rec = [&](auto&& self) -> void {
    if (I.size() == F.nodes.size()) {
      out.push_back(Filtration{ideals});
      return;
    }
    std::vector<ElementId> rest;
    for (ElementId x : F.nodes)
      if (std::find(I.begin(), I.end(), x) == I.end()) rest.push_back(x);
    std::vector<ElementId> M = min_elements(P, rest);
    int k = static_cast<int>(M.size());
    for (int mask = 1; mask < (1 << k); ++mask) {
      std::vector<ElementId> saved = I;
      for (int b = 0; b < k; ++b)
        if (mask & (1 << b)) I.push_back(M[b]);
      std::sort(I.begin(), I.end());
      ideals.push_back(I);
      self(self);
      ideals.pop_back();
      I = saved;
    }
  };
  rec(rec);
  return out;
}

int fiber_sign_sum(const Forest& F, const Interval& P, ClassRegistry& reg) {
  int direct = 0, fiber = 0;
  for (const Chain& C : enumerate_chains(P))
    if (chain_to_forest(C, P, reg).nodes == F.nodes) {
      direct += C.length() % 2 == 0 ? 1 : -1;
      ++fiber;
    }
  auto filts = enumerate_filtrations(F, P);
  int fsum = 0;
  for (const Filtration& G : filts) fsum += G.length() % 2 == 0 ? -1 : 1;
  int expected = sign_degree(F) % 2 == 0 ? 1 : -1;
  if (direct != expected || fsum != expected ||
      fiber != static_cast<int>(filts.size()))
    throw InternalInvariant("fiber sign sum mismatch");
  return direct;
}

HopfElement antipode_forests_poset(const Interval& P, ClassRegistry& reg) {
  if (P.size() == 1) return HopfElement::unit();
  HopfElement chi;
  for (const PosetForest& F : enumerate_forests_poset(P, reg))
    chi.add_term(theta_unchecked(P, F.forest, &F.jmap, reg),
                 sign_degree(F.forest) % 2 == 0 ? 1 : -1);
  return chi;
}

HopfElement antipode_forests(const Interval& P, ClassRegistry& reg) {
  if (P.size() == 1) return HopfElement::unit();
  if (!is_lattice(P)) return antipode_forests_poset(P, reg);
  HopfElement chi;
  for (const Forest& F : enumerate_forests_lattice(P, reg))
    chi.add_term(theta_unchecked(P, F, nullptr, reg),
                 sign_degree(F) % 2 == 0 ? 1 : -1);
  return chi;
}

}  // namespace hopf
