#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hopf/canonical.hpp"
#include "hopf/decompose.hpp"
#include "hopf/interval.hpp"

namespace hopf {

using Int = boost::multiprecision::cpp_int;

// Sorted multiset of indecomposable class ids; empty = the unit 1.
struct Monomial {
  std::vector<ClassId> factors;
  int degree() const { return static_cast<int>(factors.size()); }
  auto operator<=>(const Monomial&) const = default;
  Monomial operator*(const Monomial& o) const;
  std::string to_string(const ClassRegistry& reg) const;
};

// Integer linear combination of monomials; no zero coefficients stored.
struct HopfElement {
  std::map<Monomial, Int> terms;

  static HopfElement unit();  // 1
  static HopfElement zero() { return {}; }
  void add_term(const Monomial& m, const Int& c);
  HopfElement operator+(const HopfElement& o) const;
  HopfElement operator-(const HopfElement& o) const;
  HopfElement operator*(const HopfElement& o) const;
  bool operator==(const HopfElement&) const = default;
  // Terms ordered by (degree, factor ids); sign-aware rendering.
  std::string to_string(const ClassRegistry& reg) const;
};

struct TensorElement {
  std::map<std::pair<Monomial, Monomial>, Int> terms;
  void add_term(const Monomial& l, const Monomial& r, const Int& c);
  TensorElement operator*(const TensorElement& o) const;
  bool operator==(const TensorElement&) const = default;
};

// Triple tensors, used only for the coassociativity check.
struct TripleTensor {
  std::map<std::tuple<Monomial, Monomial, Monomial>, Int> terms;
  void add_term(const Monomial& a, const Monomial& b, const Monomial& c,
                const Int& v);
  bool operator==(const TripleTensor&) const = default;
};

Monomial class_monomial(const Interval& P, ClassRegistry& reg);

// delta(P) = sum over x of [0,x] (x) [x,1].
TensorElement coproduct(const Interval& P, ClassRegistry& reg);
// delta extended multiplicatively to a monomial.
TensorElement coproduct(const Monomial& m, ClassRegistry& reg);

int counit(const Interval& P);

// (delta (x) id) delta and (id (x) delta) delta.
TripleTensor coassoc_left(const Interval& P, ClassRegistry& reg);
TripleTensor coassoc_right(const Interval& P, ClassRegistry& reg);

// Omega(C) = product of [c_{i-1}, c_i] classes.  Throws ChainNotInInterval.
Monomial omega(const Chain& C, const Interval& P, ClassRegistry& reg);

// chi(P) = sum over chains of (-1)^len Omega(C).
HopfElement antipode_chains(const Interval& P, ClassRegistry& reg);

using ClassFunction =
    std::function<HopfElement(const Interval&, ClassRegistry&)>;

// (f * g)(P) = sum over x of f([0,x]) g([x,1]).
ClassFunction convolve(ClassFunction f, ClassFunction g);

// chi * id = eta eps, checked as HopfElements.
bool antipode_axiom_check(const Interval& P, ClassRegistry& reg);

// mu(0,1) as the alternating chain sum / via the standard recursion.
Int evaluate_mobius(const Interval& P);
Int mobius_recursive(const Interval& P);

}  // namespace hopf
