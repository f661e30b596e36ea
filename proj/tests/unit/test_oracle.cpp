#include <doctest.h>

#include <vector>

#include "multicover/hypergraph.hpp"
#include "multicover/matching.hpp"
#include "multicover/oracle.hpp"
#include "test_fixtures.hpp"

using namespace multicover;

TEST_CASE("minimum cover of the triangle instance is 3") {
  Hypergraph h = fixtures::triangle_plus_full();
  OracleResult r = exact_min_multicover(h);
  CHECK(r.value == 3);
  CHECK_FALSE(r.timed_out);
  CHECK(static_cast<long long>(r.witness.size()) == r.value);
  CHECK(is_multicover(h, r.witness).ok);
}

TEST_CASE("forced instances") {
  CHECK(exact_min_multicover(fixtures::two_singletons()).value == 2);
  // k = 0: every edge is needed
  Hypergraph h = fixtures::zero_capacity();
  CHECK(exact_min_multicover(h).value == h.num_edges());
}

TEST_CASE("exhaustive and branch-and-bound agree") {
  for (const Hypergraph& h :
       {fixtures::triangle_plus_full(), fixtures::zero_capacity(),
        fixtures::disjoint_pairs()}) {
    OracleResult ex = exact_min_multicover(h, kDefaultOracleBudget,
                                           OracleMethod::Exhaustive);
    OracleResult bb = exact_min_multicover(h, kDefaultOracleBudget,
                                           OracleMethod::BranchAndBound);
    CHECK(ex.value == bb.value);
    CHECK(ex.method == OracleMethod::Exhaustive);
    CHECK(bb.method == OracleMethod::BranchAndBound);
  }
}

TEST_CASE("maximum matching values") {
  Hypergraph h = fixtures::triangle_plus_full();
  OracleResult nu = exact_max_k_matching(h, capacity_vector(h).k);
  CHECK(nu.value == 1);
  CHECK(is_k_matching(h, nu.witness, capacity_vector(h).k).ok);

  std::vector<int> zeros(h.num_vertices(), 0);
  CHECK(exact_max_k_matching(h, zeros).value == 0);

  Hypergraph disjoint(4, {{0, 1}, {2, 3}}, {2, 2, 2, 2});
  std::vector<int> ones(4, 1);
  CHECK(exact_max_k_matching(disjoint, ones).value == 2);
}

TEST_CASE("matching oracle validates the capacity vector") {
  Hypergraph h = fixtures::triangle_plus_full();
  std::vector<int> short_k{1, 1};
  CHECK_THROWS_AS(exact_max_k_matching(h, short_k), std::invalid_argument);
  std::vector<int> negative{1, -1, 1};
  CHECK_THROWS_AS(exact_max_k_matching(h, negative), std::invalid_argument);
}

TEST_CASE("duality crosscheck on plain and duplicate-edge instances") {
  CHECK(duality_crosscheck(fixtures::triangle_plus_full()));
  CHECK(duality_crosscheck(fixtures::zero_capacity()));

  // triangle instance with the full edge listed twice, demands unchanged
  Hypergraph dup(3, {{0, 1}, {1, 2}, {0, 2}, {0, 1, 2}, {0, 1, 2}}, {2, 2, 2});
  CHECK(duality_crosscheck(dup));
}

TEST_CASE("cardinality identity m - nu_k = Opt") {
  for (const Hypergraph& h :
       {fixtures::triangle_plus_full(), fixtures::zero_capacity(),
        fixtures::disjoint_pairs()}) {
    OracleResult opt = exact_min_multicover(h);
    OracleResult nu = exact_max_k_matching(h, capacity_vector(h).k);
    CHECK(h.num_edges() - nu.value == opt.value);
  }
}

TEST_CASE("a starved budget reports bounds instead of an answer") {
  // The bait edge {0,1,3,4} lures the greedy incumbent to size 5, but the two
  // doubled triples cover everything with 4, so the search must branch to
  // close the gap and a budget of one node cannot finish.
  Hypergraph h(6, {{0, 1, 3, 4}, {0, 1, 2}, {0, 1, 2}, {3, 4, 5}, {3, 4, 5}},
               {2, 2, 2, 2, 2, 2});
  OracleResult starved =
      exact_min_multicover(h, 1, OracleMethod::BranchAndBound);
  CHECK(starved.timed_out);
  CHECK(starved.lower_bound <= starved.upper_bound);
  CHECK(starved.value == starved.upper_bound);
  CHECK(is_multicover(h, starved.witness).ok);  // incumbent is always feasible

  OracleResult full = exact_min_multicover(h);
  CHECK_FALSE(full.timed_out);
  CHECK(full.value >= starved.lower_bound);
  CHECK(full.value <= starved.upper_bound);
}

TEST_CASE("oracle refuses infeasible instances") {
  Hypergraph h(2, {{0, 1}, {0}}, {2, 2});
  CHECK_THROWS_AS(exact_min_multicover(h), std::invalid_argument);
}
