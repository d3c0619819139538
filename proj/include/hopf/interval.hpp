#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopf/errors.hpp"

namespace hopf {

using ElementId = int;

// An element's color is a sorted multiset of small positive integers.
// The empty multiset is "uncolored" and acts as the unit under product.
using Color = std::vector<int>;

// A finite poset with unique minimum and maximum.  The order is stored as a
// full <= table; all queries are O(1).  Immutable after construction.
class Interval {
 public:
  // Validates the order axioms and locates bottom/top.
  // Throws NotAPartialOrder / NoUniqueBottom / NoUniqueTop.
  static Interval from_leq_table(const std::vector<std::vector<bool>>& leq,
                                 std::vector<Color> colors = {},
                                 std::vector<std::string> names = {});

  // Builds the reflexive-transitive closure of a cover relation, then
  // validates as above.  covers are pairs (x, y) meaning y covers x.
  static Interval from_covers(int n,
                              const std::vector<std::pair<int, int>>& covers,
                              std::vector<Color> colors = {},
                              std::vector<std::string> names = {});

  // Colors are contextual: rel[x*n+z] is the color of z relative to x (for
  // x <= z).  An interval's own element colors are rel[bottom][.], the
  // diagonal must be empty (a singleton is the unit class), subintervals
  // restrict the matrix and products combine it componentwise.
  static Interval from_leq_table_rel(const std::vector<std::vector<bool>>& leq,
                                     std::vector<Color> rel,
                                     std::vector<std::string> names = {});

  int size() const { return n_; }
  bool leq(ElementId x, ElementId y) const { return leq_[x * n_ + y] != 0; }
  bool less(ElementId x, ElementId y) const { return x != y && leq(x, y); }
  ElementId bottom() const { return bottom_; }
  ElementId top() const { return top_; }
  const Color& color(ElementId x) const { return colors_[x]; }
  const std::string& name(ElementId x) const { return names_[x]; }
  bool has_relative_colors() const { return !rel_.empty(); }
  // Color of z relative to x; for plain intervals this is just color(z).
  const Color& relative_color(ElementId x, ElementId z) const {
    return rel_.empty() ? colors_[z] : rel_[x * n_ + z];
  }
  bool covers(ElementId x, ElementId y) const;  // y covers x

  // Structural key: size, order table, colors (names excluded).  Equal keys
  // mean equal labeled intervals; used for memoization.
  const std::string& raw_key() const { return raw_key_; }

 private:
  Interval() = default;
  void finalize();

  int n_ = 0;
  std::vector<std::uint8_t> leq_;
  ElementId bottom_ = 0;
  ElementId top_ = 0;
  std::vector<Color> colors_;
  std::vector<Color> rel_;  // n*n when present; colors_ = bottom row
  std::vector<std::string> names_;
  std::string raw_key_;
};

// A bottom-to-top chain; length = number of steps = elements - 1.
struct Chain {
  std::vector<ElementId> elements;
  int length() const { return static_cast<int>(elements.size()) - 1; }
  bool operator==(const Chain&) const = default;
  bool operator<(const Chain& o) const { return elements < o.elements; }
};

// Result of a Cartesian product: the interval together with the pairing map
// psi (element k of the product is the pair pairs[k]).
struct Product {
  Interval interval;
  std::vector<std::pair<ElementId, ElementId>> pairs;
};

// Induced order on {z : x <= z <= y}; element k corresponds to ambient id
// embedding[k].  Throws NotComparable if x is not <= y.
struct Subinterval {
  Interval interval;
  std::vector<ElementId> embedding;
};

Subinterval subinterval(const Interval& P, ElementId x, ElementId y);

// Componentwise order on P x Q; bottom = (0,0), top = (1,1); colors combine
// by multiset union.
Product cartesian_product(const Interval& P, const Interval& Q);

// Every bottom-to-top chain exactly once, in lexicographic order by element
// indices.  The singleton interval yields one chain of length 0.
std::vector<Chain> enumerate_chains(const Interval& P);

bool chain_in_interval(const Interval& P, const Chain& C);

// Least upper / greatest lower bound when it exists uniquely.
std::optional<ElementId> join(const Interval& P, ElementId x, ElementId y);
std::optional<ElementId> meet(const Interval& P, ElementId x, ElementId y);
bool is_lattice(const Interval& P);

// {z : z <= a and z <= b}, ascending by element index.
std::vector<ElementId> lower_interval_intersection(const Interval& P,
                                                   ElementId a, ElementId b);

Color combine_colors(const Color& a, const Color& b);

}  // namespace hopf
