#include <doctest.h>

#include <algorithm>
#include <optional>
#include <set>

#include "hopf/canonical.hpp"
#include "hopf/errors.hpp"
#include "hopf/families.hpp"
#include "hopf/interval.hpp"
#include "test_util.hpp"

using namespace hopf;

namespace {

Interval two_chain() { return chain_lattice(1); }

Interval diamond() { return boolean_lattice(2); }

}  // namespace

TEST_CASE("singleton interval") {
  Interval P = Interval::from_leq_table({{true}});
  CHECK(P.size() == 1);
  CHECK(P.bottom() == P.top());
  CHECK(enumerate_chains(P).size() == 1);
  CHECK(enumerate_chains(P)[0].length() == 0);
}

TEST_CASE("two-chain from table") {
  Interval P = Interval::from_leq_table({{true, true}, {false, true}});
  CHECK(P.size() == 2);
  CHECK(P.bottom() == 0);
  CHECK(P.top() == 1);
  auto chains = enumerate_chains(P);
  REQUIRE(chains.size() == 1);
  CHECK(chains[0].length() == 1);
}

TEST_CASE("validation rejects non-intervals") {
  // 2-antichain: reflexive only, no minimum.
  CHECK_THROWS_AS(Interval::from_leq_table({{true, false}, {false, true}}),
                  NoUniqueBottom);
  // Antisymmetry violation.
  CHECK_THROWS_AS(Interval::from_leq_table({{true, true}, {true, true}}),
                  NotAPartialOrder);
  // Missing reflexivity.
  CHECK_THROWS_AS(Interval::from_leq_table({{false, true}, {false, true}}),
                  NotAPartialOrder);
  // Non-transitive: 0<1, 1<2 but not 0<2.
  CHECK_THROWS_AS(
      Interval::from_leq_table({{true, true, false},
                                {false, true, true},
                                {false, false, true}}),
      NotAPartialOrder);
  // Two maximal elements above a common bottom.
  CHECK_THROWS_AS(Interval::from_leq_table({{true, true, true},
                                            {false, true, false},
                                            {false, false, true}}),
                  NoUniqueTop);
}

TEST_CASE("from_covers closes transitively") {
  // 0 < a,b < 1 given only as covers.
  Interval P = Interval::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(P.leq(0, 3));
  CHECK(P.covers(0, 1));
  CHECK_FALSE(P.covers(0, 3));
  CHECK(are_equivalent(P, diamond()));
}

TEST_CASE("subinterval basics") {
  Interval P = figure_lattice(1);  // 0 < a,b < c < 1
  SUBCASE("full subinterval is the whole interval") {
    auto S = subinterval(P, P.bottom(), P.top());
    CHECK(S.interval.size() == P.size());
    CHECK(are_equivalent(S.interval, P));
  }
  SUBCASE("lower interval of c is a diamond") {
    auto S = subinterval(P, 0, 3);
    CHECK(S.interval.size() == 4);
    CHECK(are_equivalent(S.interval, diamond()));
    // Embedding maps back into the ambient interval.
    for (int k = 0; k < S.interval.size(); ++k)
      CHECK(P.leq(0, S.embedding[k]));
  }
  SUBCASE("degenerate subinterval is a singleton") {
    CHECK(subinterval(P, 1, 1).interval.size() == 1);
  }
  SUBCASE("incomparable endpoints throw") {
    CHECK_THROWS_AS(subinterval(P, 1, 2), NotComparable);  // a vs b
  }
}

TEST_CASE("cartesian product") {
  Interval c = two_chain();
  SUBCASE("product with a singleton is the other factor") {
    Interval s = chain_lattice(0);
    auto prod = cartesian_product(figure_lattice(2), s);
    CHECK(are_equivalent(prod.interval, figure_lattice(2)));
  }
  SUBCASE("2-chain squared is the diamond") {
    auto prod = cartesian_product(c, c);
    CHECK(prod.interval.size() == 4);
    CHECK(are_equivalent(prod.interval, diamond()));
  }
  SUBCASE("order is componentwise and psi is tracked") {
    Interval P = chain_lattice(2), Q = diamond();
    auto prod = cartesian_product(P, Q);
    CHECK(prod.interval.size() == P.size() * Q.size());
    for (int i = 0; i < prod.interval.size(); ++i)
      for (int j = 0; j < prod.interval.size(); ++j) {
        auto [x1, y1] = prod.pairs[i];
        auto [x2, y2] = prod.pairs[j];
        CHECK(prod.interval.leq(i, j) == (P.leq(x1, x2) && Q.leq(y1, y2)));
      }
  }
}

TEST_CASE("chain enumeration") {
  SUBCASE("diamond has 3 chains") {
    auto chains = enumerate_chains(diamond());
    REQUIRE(chains.size() == 3);
    for (const Chain& C : chains) CHECK(chain_in_interval(diamond(), C));
    CHECK(std::is_sorted(chains.begin(), chains.end()));
  }
  SUBCASE("B3 has 13 chains") {
    CHECK(enumerate_chains(boolean_lattice(3)).size() == 13);
  }
  SUBCASE("counts match the recursive oracle") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      Interval P = random_interval(seed, 9);
      auto chains = enumerate_chains(P);
      CHECK(static_cast<long long>(chains.size()) ==
            testutil::chain_count_oracle(P));
      // No duplicates: lexicographic order is strict.
      for (size_t i = 1; i < chains.size(); ++i)
        CHECK(chains[i - 1] < chains[i]);
    }
  }
  SUBCASE("product chain count matches the oracle") {
    auto prod = cartesian_product(chain_lattice(2), diamond());
    CHECK(static_cast<long long>(enumerate_chains(prod.interval).size()) ==
          testutil::chain_count_oracle(prod.interval));
  }
}

TEST_CASE("join and meet") {
  Interval B = diamond();
  SUBCASE("diamond joins/meets") {
    CHECK(join(B, 1, 2) == B.top());
    CHECK(meet(B, 1, 2) == B.bottom());
    CHECK(is_lattice(B));
  }
  SUBCASE("figure 1: a v b = c") {
    Interval P = figure_lattice(1);
    CHECK(join(P, 1, 2) == 3);
    CHECK(is_lattice(P));
  }
  SUBCASE("two minimal upper bounds means no join") {
    // 0 < a,b < c,d < 1: a,b have minimal upper bounds c and d.
    Interval P = Interval::from_covers(
        6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}});
    CHECK_FALSE(join(P, 1, 2).has_value());
    CHECK_FALSE(is_lattice(P));
  }
  SUBCASE("lattice laws on a sample lattice") {
    Interval P = figure_lattice(2);
    REQUIRE(is_lattice(P));
    for (int x = 0; x < P.size(); ++x) {
      CHECK(join(P, x, x) == x);
      CHECK(meet(P, x, x) == x);
      for (int y = 0; y < P.size(); ++y) {
        CHECK(join(P, x, y) == join(P, y, x));
        CHECK(meet(P, x, y) == meet(P, y, x));
        for (int z = 0; z < P.size(); ++z)
          CHECK(join(P, *join(P, x, y), z) == join(P, x, *join(P, y, z)));
      }
    }
  }
}

TEST_CASE("lower interval intersection") {
  Interval B = diamond();
  CHECK(lower_interval_intersection(B, 1, 2) ==
        std::vector<ElementId>{B.bottom()});
  CHECK(lower_interval_intersection(B, 1, 1).size() == 2);  // [0, a]
  Interval F2 = figure_lattice(2);
  // a < d, so the intersection is all of [0, a].
  CHECK(lower_interval_intersection(F2, 1, 4) ==
        std::vector<ElementId>{0, 1});
}

TEST_CASE("color combination is multiset union") {
  CHECK(combine_colors({}, {}) == Color{});
  CHECK(combine_colors({1}, {}) == Color{1});
  CHECK(combine_colors({1, 2}, {1}) == Color{1, 1, 2});
}
