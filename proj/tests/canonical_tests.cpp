#include <doctest.h>

#include <random>
#include <vector>

#include "hopf/canonical.hpp"
#include "hopf/errors.hpp"
#include "hopf/families.hpp"
#include "hopf/interval.hpp"
#include "test_util.hpp"

using namespace hopf;

TEST_CASE("certificates are relabeling invariant") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    Interval P = random_interval(1000 + trial, 10);
    auto perm = testutil::random_permutation(P.size(), rng);
    Interval Q = testutil::relabel(P, perm);
    CHECK(canonical_form(P) == canonical_form(Q));
  }
}

TEST_CASE("relabeling invariance with colors") {
  std::mt19937_64 rng(777);
  Interval P = colored_partition_poset({2, 1}, 2);
  for (int trial = 0; trial < 20; ++trial) {
    auto perm = testutil::random_permutation(P.size(), rng);
    CHECK(canonical_form(P) == canonical_form(testutil::relabel(P, perm)));
  }
}

TEST_CASE("non-isomorphic intervals get distinct certificates") {
  CHECK(canonical_form(chain_lattice(2)) != canonical_form(boolean_lattice(2)));
  CHECK(canonical_form(chain_lattice(1)) != canonical_form(chain_lattice(2)));
  CHECK(canonical_form(figure_lattice(1)) != canonical_form(figure_lattice(3)));
}

TEST_CASE("colors distinguish otherwise equal intervals") {
  auto colored_two_chain = [](int top_color) {
    return Interval::from_covers(2, {{0, 1}}, {{}, {top_color}});
  };
  CHECK(canonical_form(colored_two_chain(1)) !=
        canonical_form(colored_two_chain(2)));
  CHECK(canonical_form(colored_two_chain(1)) ==
        canonical_form(colored_two_chain(1)));
}

TEST_CASE("equivalence is an equivalence relation") {
  std::vector<Interval> pool;
  for (std::uint64_t seed = 1; seed <= 12; ++seed)
    pool.push_back(random_interval(seed, 8));
  pool.push_back(boolean_lattice(2));
  pool.push_back(cartesian_product(chain_lattice(1), chain_lattice(1)).interval);
  for (const auto& P : pool) CHECK(are_equivalent(P, P));
  for (const auto& P : pool)
    for (const auto& Q : pool) {
      CHECK(are_equivalent(P, Q) == are_equivalent(Q, P));
      for (const auto& R : pool)
        if (are_equivalent(P, Q) && are_equivalent(Q, R))
          CHECK(are_equivalent(P, R));
    }
}

TEST_CASE("products commute up to equivalence") {
  Interval P = figure_lattice(1), Q = boolean_lattice(2);
  CHECK(are_equivalent(cartesian_product(P, Q).interval,
                       cartesian_product(Q, P).interval));
}

TEST_CASE("equivalence witness is an order isomorphism") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    Interval P = random_interval(500 + trial, 8);
    auto perm = testutil::random_permutation(P.size(), rng);
    Interval Q = testutil::relabel(P, perm);
    auto w = equivalence_witness(P, Q);
    for (int x = 0; x < P.size(); ++x)
      for (int y = 0; y < P.size(); ++y)
        CHECK(P.leq(x, y) == Q.leq(w[x], w[y]));
    // Corresponding lower and upper subintervals stay equivalent.
    for (int x = 0; x < P.size(); ++x) {
      CHECK(are_equivalent(subinterval(P, P.bottom(), x).interval,
                           subinterval(Q, Q.bottom(), w[x]).interval));
      CHECK(are_equivalent(subinterval(P, x, P.top()).interval,
                           subinterval(Q, w[x], Q.top()).interval));
    }
  }
  CHECK_THROWS_AS(equivalence_witness(chain_lattice(2), boolean_lattice(2)),
                  InternalInvariant);
}

TEST_CASE("registry assigns stable ids and names") {
  ClassRegistry reg;
  ClassId a = reg.register_class(chain_lattice(1));
  ClassId b = reg.register_class(boolean_lattice(2));
  // Different labeling of the diamond: same class.
  ClassId b2 = reg.register_class(
      cartesian_product(chain_lattice(1), chain_lattice(1)).interval);
  CHECK(a != b);
  CHECK(b == b2);
  CHECK(reg.name(a) == "X1");
  CHECK(reg.name(b) == "X2");
  CHECK(reg.count() == 2);
  CHECK(are_equivalent(reg.representative(b), boolean_lattice(2)));
  CHECK(reg.certificate(a) == canonical_form(chain_lattice(1)).bytes);
}

TEST_CASE("large symmetric inputs canonicalize quickly") {
  // The partition lattice on five points has a large automorphism group;
  // the search must still terminate promptly.
  Interval P = partition_lattice(5);
  CHECK(P.size() == 52);
  std::mt19937_64 rng(4242);
  auto perm = testutil::random_permutation(P.size(), rng);
  CHECK(canonical_form(P) == canonical_form(testutil::relabel(P, perm)));
  CHECK(canonical_form(P) != canonical_form(boolean_lattice(4)));
}

TEST_CASE("canonical labeling reconstructs the certificate") {
  Interval P = figure_lattice(2);
  auto L = canonical_labeling(P);
  CHECK(L.order.size() == static_cast<size_t>(P.size()));
  CHECK(L.form == canonical_form(P));
  CHECK(L.form.hex().size() == L.form.bytes.size() * 2);
}
