#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "multicover/generator.hpp"
#include "multicover/hypergraph.hpp"
#include "multicover/lp.hpp"
#include "multicover/rounding.hpp"
#include "test_fixtures.hpp"

using namespace multicover;

namespace {

const std::vector<double> kTrianglePoint{0.5, 0.5, 0.5, 1.0};

RoundingParams triangle_params() {
  return RoundingParams::from(fixtures::triangle_plus_full(), 7);
}

}  // namespace

TEST_CASE("rounding parameters for delta = 2") {
  RoundingParams p = triangle_params();
  CHECK(p.delta == 2);
  CHECK(p.lambda == doctest::Approx(1.5));
  CHECK(p.alpha == doctest::Approx(2.0 * std::exp(0.5) / (47.0 * 3.0)));
  CHECK(p.t == 73);
  CHECK(p.lambda_exact() == make_rational(3, 2));
  CHECK(p.c1_threshold() == make_rational(2, 3));
  CHECK(p.c2_threshold() == make_rational(1, 2));
}

TEST_CASE("partition of the triangle LP point") {
  Partition part = make_partition(kTrianglePoint, triangle_params());
  CHECK(part.c1 == std::vector<int>{3});
  CHECK(part.c2 == std::vector<int>{0, 1, 2});
  CHECK(part.c3 == std::vector<int>{0, 1, 2});
}

TEST_CASE("integral point puts the whole support in c1") {
  RoundingParams p = triangle_params();
  Partition part = make_partition({1.0, 0.0, 1.0, 1.0}, p);
  CHECK(part.c1 == std::vector<int>{0, 2, 3});
  CHECK(part.c2.empty());
  CHECK(part.c3.empty());
}

TEST_CASE("value exactly at the c1 threshold lands in c1") {
  RoundingParams p = triangle_params();  // threshold 2/3
  Partition part = make_partition({2.0 / 3.0, 0.5, 0.0, 1.0}, p);
  CHECK(part.c1 == std::vector<int>{0, 3});
  CHECK(part.c2 == std::vector<int>{1});

  Partition exact = make_partition_exact(
      {make_rational(2, 3), make_rational(1, 2), make_rational(0, 1),
       make_rational(1, 1)},
      p);
  CHECK(exact.c1 == part.c1);
  CHECK(exact.c2 == part.c2);
  CHECK(exact.c3 == part.c3);
}

TEST_CASE("partition invariants: c2 inside c3, c1 disjoint from c3") {
  Partition part = make_partition(kTrianglePoint, triangle_params());
  for (int j : part.c2)
    CHECK(std::find(part.c3.begin(), part.c3.end(), j) != part.c3.end());
  for (int j : part.c1)
    CHECK(std::find(part.c3.begin(), part.c3.end(), j) == part.c3.end());
}

TEST_CASE("threshold cover of the triangle instance") {
  Hypergraph h = fixtures::triangle_plus_full();
  LpSolution sol = solve_lp(build_relaxation(h), LpMode::Float);
  CoverSolution c = threshold_cover(h, sol);
  CHECK(c.chosen == std::vector<int>{0, 1, 2, 3});
  CHECK(is_multicover(h, c).ok);
  // |C| = 4 < delta * Opt = 2 * 3
  CHECK(static_cast<int>(c.chosen.size()) < 2 * 3);
}

TEST_CASE("threshold cover on an integral optimum picks the forced edges") {
  Hypergraph h = fixtures::two_singletons();
  LpSolution sol = solve_lp(build_relaxation(h), LpMode::Rational);
  CoverSolution c = threshold_cover(h, sol);
  CHECK(c.chosen == std::vector<int>{0, 1});
}

TEST_CASE("threshold cover rejects non-optimal points") {
  Hypergraph h = fixtures::triangle_plus_full();
  RoundingParams p = triangle_params();
  CHECK_THROWS_AS(threshold_cover(h, {0.6, 0.0, 0.0, 0.9}, p),
                  std::invalid_argument);
}

TEST_CASE("repair completes the c1-only partial cover deterministically") {
  Hypergraph h = fixtures::triangle_plus_full();
  Partition part = make_partition(kTrianglePoint, triangle_params());
  CoverSolution partial;
  partial.chosen = {3};
  CoverSolution full = repair(h, partial, part, kTrianglePoint);
  CHECK(full.chosen == std::vector<int>{0, 1, 3});
  CHECK(is_multicover(h, full).ok);
}

TEST_CASE("repair returns an already-feasible cover unchanged") {
  Hypergraph h = fixtures::triangle_plus_full();
  Partition part = make_partition(kTrianglePoint, triangle_params());
  CoverSolution partial;
  partial.chosen = {0, 1, 3};
  CHECK(repair(h, partial, part, kTrianglePoint).chosen == partial.chosen);
}

TEST_CASE("deterministic branch on the triangle instance") {
  Hypergraph h = fixtures::triangle_plus_full();
  Alg1Result res = algorithm1_solve(h, triangle_params());
  CHECK(res.trace.branch != Branch::Randomized);
  CHECK(res.trace.alpha_fired);  // |C1| = 1 >= alpha * 5/2 ~ 0.058
  CHECK(res.trace.t_fired);      // 73 * 1 >= 3
  CHECK(res.cover.chosen == std::vector<int>{0, 1, 2, 3});
  CHECK_FALSE(res.trace.ratio_claims_applicable);  // delta = 2
  CHECK(res.trace.opt_star == doctest::Approx(2.5));
  CHECK(static_cast<double>(res.cover.chosen.size()) / 3.0 ==
        doctest::Approx(4.0 / 3.0));
}

TEST_CASE("flat pair enters the randomized branch and repairs to feasibility") {
  GenSpec spec;
  spec.family = Family::Flat;
  spec.n = 12;
  spec.flat_degree = 8;
  spec.seed = 3;
  FlatInstance flat = generate_flat(spec);
  REQUIRE(flat.point.found);

  RoundingParams p = RoundingParams::from(flat.h, 17);
  Alg1Result res = algorithm1_from_point(flat.h, flat.point.x, p);
  CHECK(res.trace.branch == Branch::Randomized);
  CHECK(is_multicover(flat.h, res.cover).ok);
  CHECK(res.trace.final_size <=
        res.trace.x_count + flat.h.num_vertices() - res.trace.y_count);

  Alg1Result again = algorithm1_from_point(flat.h, flat.point.x, p);
  CHECK(again.cover.chosen == res.cover.chosen);  // same seed, same draw
  CHECK(res.cover.trial_seed.has_value());
}

TEST_CASE("randomized rounding keeps c1 and honors clamped probabilities") {
  Hypergraph h = fixtures::triangle_plus_full();
  RoundingParams p = triangle_params();
  Partition part = make_partition(kTrianglePoint, p);
  // lambda * x = 0.75 for the three pair edges; the full edge is kept as c1
  auto [cover, trace] = randomized_round(h, kTrianglePoint, part, p, 1234);
  CHECK(std::find(cover.chosen.begin(), cover.chosen.end(), 3) !=
        cover.chosen.end());
  CHECK(is_multicover(h, cover).ok);
  CHECK(trace.final_size <= trace.x_count + h.num_vertices() - trace.y_count);
}

TEST_CASE("clamp: lambda*x >= 1 includes every c3 edge") {
  Hypergraph h = fixtures::disjoint_pairs();  // delta = 1 would clamp; use raw params
  RoundingParams p = RoundingParams::from(h, 5);
  // force a partition where both edges sit in c3 with lambda*x >= 1
  Partition part;
  part.c3 = {0, 1, 2, 3};
  std::vector<double> x{0.99, 0.99, 0.99, 0.99};
  p.lambda = 1.5;
  auto [cover, trace] = randomized_round(h, x, part, p, 42);
  CHECK(cover.chosen == std::vector<int>{0, 1, 2, 3});
  CHECK(trace.y_count == h.num_vertices());
}

TEST_CASE("empirical mean of covered vertices on direct rounding trials") {
  Hypergraph h = fixtures::triangle_plus_full();
  RoundingParams p = triangle_params();
  Partition part = make_partition(kTrianglePoint, p);
  const int trials = 4000;
  double sum_y = 0, sum_y2 = 0;
  for (int i = 0; i < trials; ++i) {
    auto [cover, trace] = randomized_round(h, kTrianglePoint, part, p,
                                           static_cast<std::uint64_t>(i));
    sum_y += static_cast<double>(trace.y_count);
    sum_y2 += static_cast<double>(trace.y_count) * trace.y_count;
  }
  const double mean = sum_y / trials;
  const double var = (sum_y2 - trials * mean * mean) / (trials - 1);
  const double se = std::sqrt(std::max(0.0, var) / trials);
  const double bound = (1.0 - std::exp(-p.lambda)) * h.num_vertices();
  CHECK(mean >= bound - 3 * se);
}

TEST_CASE("monte carlo rejects points where a deterministic trigger fires") {
  Hypergraph h = fixtures::triangle_plus_full();
  RoundingParams p = triangle_params();
  CHECK_THROWS_AS(monte_carlo_verify(h, kTrianglePoint, p, 100, 1),
                  std::invalid_argument);
}

TEST_CASE("monte carlo rejects zero trials") {
  GenSpec spec;
  spec.family = Family::Flat;
  spec.n = 12;
  spec.seed = 3;
  FlatInstance flat = generate_flat(spec);
  RoundingParams p = RoundingParams::from(flat.h, 2);
  CHECK_THROWS_WITH_AS(monte_carlo_verify(flat.h, flat.point.x, p, 0, 1),
                       "monte_carlo_verify: no trials", std::invalid_argument);
}

TEST_CASE("monte carlo statistics are job-count invariant") {
  GenSpec spec;
  spec.family = Family::Flat;
  spec.n = 12;
  spec.seed = 9;
  FlatInstance flat = generate_flat(spec);
  RoundingParams p = RoundingParams::from(flat.h, 2);
  StatsReport one = monte_carlo_verify(flat.h, flat.point.x, p, 500, 77, 1, true);
  StatsReport four = monte_carlo_verify(flat.h, flat.point.x, p, 500, 77, 4, true);
  CHECK(one.to_json() == four.to_json());
  CHECK(one.size_identity_violations == 0);
}

TEST_CASE("search helper finds a flat point and reports impossibility honestly") {
  GenSpec spec;
  spec.family = Family::Flat;
  spec.n = 12;
  spec.seed = 4;
  FlatInstance flat = generate_flat(spec);
  FeasiblePoint found = force_randomized_branch(flat.h);
  CHECK(found.found);
  RoundingParams p = RoundingParams::from(flat.h);
  Partition part = make_partition(found.x, p);
  CHECK(static_cast<long long>(part.c1.size()) * p.t <
        static_cast<long long>(part.c2.size()));

  FeasiblePoint none = force_randomized_branch(fixtures::triangle_plus_full());
  CHECK_FALSE(none.found);
  CHECK_FALSE(none.reason.empty());
}
