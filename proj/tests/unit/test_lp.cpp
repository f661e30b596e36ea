#include <doctest.h>

#include <cmath>
#include <sstream>
#include <vector>

#include "multicover/hypergraph.hpp"
#include "multicover/lp.hpp"
#include "multicover/rational.hpp"
#include "test_fixtures.hpp"

using namespace multicover;

TEST_CASE("relaxation of the triangle-plus-full instance") {
  LpModel m = build_relaxation(fixtures::triangle_plus_full());
  CHECK(m.rows == 3);
  CHECK(m.cols == 4);
  for (int i = 0; i < 3; ++i) {
    CHECK(m.at(i, 3) == 1);  // full edge hits every vertex
    CHECK(m.rhs[i] == 2);
  }
  // each pair edge covers exactly two vertices
  for (int j = 0; j < 3; ++j) {
    int ones = m.at(0, j) + m.at(1, j) + m.at(2, j);
    CHECK(ones == 2);
  }
}

TEST_CASE("relaxation of the two-singleton instance") {
  LpModel m = build_relaxation(fixtures::two_singletons());
  CHECK(m.rows == 1);
  CHECK(m.cols == 2);
  CHECK(m.at(0, 0) == 1);
  CHECK(m.at(0, 1) == 1);
  CHECK(m.rhs[0] == 2);
}

TEST_CASE("build_relaxation rejects invalid instances") {
  Hypergraph bad(1, {{0}, {0}}, {3});
  CHECK_THROWS_AS(build_relaxation(bad), std::invalid_argument);
}

TEST_CASE("rational optimum of triangle-plus-full is 5/2") {
  LpModel m = build_relaxation(fixtures::triangle_plus_full());
  LpSolution sol = solve_lp(m, LpMode::Rational);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective_exact == make_rational(5, 2));
  CHECK(verify_lp_optimality(m, sol));
  // every row holds exactly
  for (int i = 0; i < m.rows; ++i) {
    Rational row(0);
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j)) row += sol.x_exact[j];
    CHECK(row >= Rational(m.rhs[i]));
  }
}

TEST_CASE("float optimum matches the rational one within 1e-6") {
  LpModel m = build_relaxation(fixtures::triangle_plus_full());
  LpSolution f = solve_lp(m, LpMode::Float);
  REQUIRE(f.status == LpStatus::Optimal);
  CHECK(std::abs(f.objective - 2.5) <= 1e-6);
  CHECK(verify_lp_optimality(m, f));
}

TEST_CASE("forced instance solves to the all-ones point") {
  LpModel m = build_relaxation(fixtures::two_singletons());
  LpSolution sol = solve_lp(m, LpMode::Rational);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective_exact == make_rational(2, 1));
  CHECK(sol.x_exact[0] == make_rational(1, 1));
  CHECK(sol.x_exact[1] == make_rational(1, 1));
}

TEST_CASE("objective sits between max demand and m") {
  for (const Hypergraph& h :
       {fixtures::triangle_plus_full(), fixtures::zero_capacity(),
        fixtures::disjoint_pairs()}) {
    LpSolution sol = solve_lp(build_relaxation(h), LpMode::Float);
    REQUIRE(sol.status == LpStatus::Optimal);
    int max_b = 0;
    for (int v = 0; v < h.num_vertices(); ++v) max_b = std::max(max_b, h.demand(v));
    CHECK(sol.objective >= max_b - 1e-9);
    CHECK(sol.objective <= h.num_edges() + 1e-9);
  }
}

TEST_CASE("infeasible model is reported, not solved") {
  LpModel m;
  m.rows = 1;
  m.cols = 1;
  m.a = {1};
  m.rhs = {2};  // single unit column cannot reach 2
  LpSolution sol = solve_lp(m, LpMode::Float);
  CHECK(sol.status == LpStatus::Infeasible);
}

TEST_CASE("certificate check rejects tampered solutions") {
  LpModel m = build_relaxation(fixtures::triangle_plus_full());
  LpSolution sol = solve_lp(m, LpMode::Float);
  REQUIRE(sol.status == LpStatus::Optimal);

  LpSolution perturbed = sol;
  perturbed.x[0] += 0.1;  // stays feasible, objective no longer matches duals
  perturbed.objective += 0.1;
  CHECK_FALSE(verify_lp_optimality(m, perturbed));

  LpSolution zero = sol;
  for (auto& v : zero.x) v = 0;
  zero.objective = 0;
  CHECK_FALSE(verify_lp_optimality(m, zero));
}

TEST_CASE("rational mode without duals is an error in the certificate check") {
  LpModel m = build_relaxation(fixtures::two_singletons());
  LpSolution sol = solve_lp(m, LpMode::Rational);
  sol.dual_exact.clear();
  CHECK_THROWS_AS(verify_lp_optimality(m, sol), std::invalid_argument);
}

TEST_CASE("interchange dump lists every column and row") {
  LpModel m = build_relaxation(fixtures::triangle_plus_full());
  std::ostringstream out;
  write_lp_interchange(out, m);
  const std::string text = out.str();
  CHECK(text.find("x1") != std::string::npos);
  CHECK(text.find("x4") != std::string::npos);
  CHECK(text.find(">= 2") != std::string::npos);
}

TEST_CASE("disjoint union solves blockwise") {
  // two copies of the two-singleton instance glued side by side
  Hypergraph h(2, {{0}, {0}, {1}, {1}}, {2, 2});
  LpSolution sol = solve_lp(build_relaxation(h), LpMode::Rational);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective_exact == make_rational(4, 1));
}
