#include "hopf/algebra.hpp"

#include <algorithm>

#include "hopf/errors.hpp"

namespace hopf {

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.factors.reserve(factors.size() + o.factors.size());
  std::merge(factors.begin(), factors.end(), o.factors.begin(),
             o.factors.end(), std::back_inserter(r.factors));
  return r;
}

std::string Monomial::to_string(const ClassRegistry& reg) const {
  if (factors.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < factors.size();) {
    size_t j = i;
    while (j < factors.size() && factors[j] == factors[i]) ++j;
    if (!out.empty()) out += "*";
    out += reg.name(factors[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

HopfElement HopfElement::unit() {
  HopfElement e;
  e.terms[Monomial{}] = 1;
  return e;
}

void HopfElement::add_term(const Monomial& m, const Int& c) {
  if (c == 0) return;
  auto [it, fresh] = terms.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

HopfElement HopfElement::operator+(const HopfElement& o) const {
  HopfElement r = *this;
  for (auto& [m, c] : o.terms) r.add_term(m, c);
  return r;
}

HopfElement HopfElement::operator-(const HopfElement& o) const {
  HopfElement r = *this;
  for (auto& [m, c] : o.terms) r.add_term(m, -c);
  return r;
}

HopfElement HopfElement::operator*(const HopfElement& o) const {
  HopfElement r;
  for (auto& [m1, c1] : terms)
    for (auto& [m2, c2] : o.terms) r.add_term(m1 * m2, c1 * c2);
  return r;
}

std::string HopfElement::to_string(const ClassRegistry& reg) const {
  if (terms.empty()) return "0";
  std::vector<std::pair<std::pair<int, std::vector<std::string>>,
                        const std::pair<const Monomial, Int>*>>
      order;
  for (auto& t : terms) {
    std::vector<std::string> names;
    for (ClassId id : t.first.factors) names.push_back(reg.name(id));
    order.push_back({{t.first.degree(), std::move(names)}, &t});
  }
  std::sort(order.begin(), order.end(),
            [](auto& a, auto& b) { return a.first < b.first; });
  std::string out;
  for (auto& [key, t] : order) {
    const Int& c = t->second;
    Int mag = c < 0 ? Int(-c) : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    std::string mono = t->first.to_string(reg);
    if (mag != 1 || mono == "1") {
      out += mag.str();
      if (mono != "1") out += "*";
    }
    if (mono != "1") out += mono;
  }
  return out;
}

void TensorElement::add_term(const Monomial& l, const Monomial& r,
                             const Int& c) {
  if (c == 0) return;
  auto key = std::make_pair(l, r);
  auto [it, fresh] = terms.emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

TensorElement TensorElement::operator*(const TensorElement& o) const {
  TensorElement r;
  for (auto& [p1, c1] : terms)
    for (auto& [p2, c2] : o.terms)
      r.add_term(p1.first * p2.first, p1.second * p2.second, c1 * c2);
  return r;
}

void TripleTensor::add_term(const Monomial& a, const Monomial& b,
                            const Monomial& c, const Int& v) {
  if (v == 0) return;
  auto key = std::make_tuple(a, b, c);
  auto [it, fresh] = terms.emplace(key, v);
  if (!fresh) {
    it->second += v;
    if (it->second == 0) terms.erase(it);
  }
}

Monomial class_monomial(const Interval& P, ClassRegistry& reg) {
  return Monomial{class_factors(P, reg)};
}

TensorElement coproduct(const Interval& P, ClassRegistry& reg) {
  TensorElement d;
  for (int x = 0; x < P.size(); ++x) {
    Monomial l = class_monomial(subinterval(P, P.bottom(), x).interval, reg);
    Monomial r = class_monomial(subinterval(P, x, P.top()).interval, reg);
    d.add_term(l, r, 1);
  }
  return d;
}

TensorElement coproduct(const Monomial& m, ClassRegistry& reg) {
  TensorElement d;
  d.add_term(Monomial{}, Monomial{}, 1);
  for (ClassId id : m.factors) d = d * coproduct(reg.representative(id), reg);
  return d;
}

int counit(const Interval& P) { return P.size() == 1 ? 1 : 0; }

TripleTensor coassoc_left(const Interval& P, ClassRegistry& reg) {
  TripleTensor t;
  for (auto& [pr, c] : coproduct(P, reg).terms)
    for (auto& [qr, c2] : coproduct(pr.first, reg).terms)
      t.add_term(qr.first, qr.second, pr.second, c * c2);
  return t;
}

TripleTensor coassoc_right(const Interval& P, ClassRegistry& reg) {
  TripleTensor t;
  for (auto& [pr, c] : coproduct(P, reg).terms)
    for (auto& [qr, c2] : coproduct(pr.second, reg).terms)
      t.add_term(pr.first, qr.first, qr.second, c * c2);
  return t;
}

Monomial omega(const Chain& C, const Interval& P, ClassRegistry& reg) {
  if (!chain_in_interval(P, C))
    throw ChainNotInInterval("omega: chain is not a chain of the interval");
  Monomial m;
  for (size_t i = 1; i < C.elements.size(); ++i)
    m = m * class_monomial(
                subinterval(P, C.elements[i - 1], C.elements[i]).interval,
                reg);
  return m;
}

HopfElement antipode_chains(const Interval& P, ClassRegistry& reg) {
  // Per-pair link classes are memoized for the duration of the run via the
  // registry's certificate/factor caches; pairs repeat heavily across chains.
  std::map<std::pair<ElementId, ElementId>, Monomial> link;
  auto link_monomial = [&](ElementId x, ElementId y) -> const Monomial& {
    auto it = link.find({x, y});
    if (it == link.end())
      it = link
               .emplace(std::make_pair(x, y),
                        class_monomial(subinterval(P, x, y).interval, reg))
               .first;
    return it->second;
  };
  HopfElement chi;
  for (const Chain& C : enumerate_chains(P)) {
    Monomial m;
    for (size_t i = 1; i < C.elements.size(); ++i)
      m = m * link_monomial(C.elements[i - 1], C.elements[i]);
    chi.add_term(m, C.length() % 2 == 0 ? 1 : -1);
  }
  return chi;
}

ClassFunction convolve(ClassFunction f, ClassFunction g) {
  return [f = std::move(f), g = std::move(g)](const Interval& P,
                                              ClassRegistry& reg) {
    HopfElement r;
    for (int x = 0; x < P.size(); ++x) {
      HopfElement fx = f(subinterval(P, P.bottom(), x).interval, reg);
      HopfElement gx = g(subinterval(P, x, P.top()).interval, reg);
      r = r + fx * gx;
    }
    return r;
  };
}

bool antipode_axiom_check(const Interval& P, ClassRegistry& reg) {
  ClassFunction chi = [](const Interval& Q, ClassRegistry& r) {
    return antipode_chains(Q, r);
  };
  ClassFunction ident = [](const Interval& Q, ClassRegistry& r) {
    HopfElement e;
    e.add_term(class_monomial(Q, r), 1);
    return e;
  };
  HopfElement lhs = convolve(chi, ident)(P, reg);
  HopfElement rhs;
  if (counit(P) == 1) rhs = HopfElement::unit();
  return lhs == rhs;
}

Int evaluate_mobius(const Interval& P) {
  Int sum = 0;
  for (const Chain& C : enumerate_chains(P))
    sum += (C.length() % 2 == 0) ? 1 : -1;
  return sum;
}

Int mobius_recursive(const Interval& P) {
  // mu(0,0) = 1; sum over z <= y of mu(0,z) = 0 for y > 0.
  std::vector<Int> mu(P.size());
  std::vector<ElementId> order(P.size());
  for (int i = 0; i < P.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](ElementId a, ElementId b) {
    int da = 0, db = 0;
    for (int z = 0; z < P.size(); ++z) {
      if (P.leq(z, a)) ++da;
      if (P.leq(z, b)) ++db;
    }
    return da != db ? da < db : a < b;
  });
  for (ElementId y : order) {
    if (y == P.bottom()) {
      mu[y] = 1;
      continue;
    }
    Int s = 0;
    for (int z = 0; z < P.size(); ++z)
      if (P.less(z, y)) s += mu[z];
    mu[y] = -s;
  }
  return mu[P.top()];
}

}  // namespace hopf
