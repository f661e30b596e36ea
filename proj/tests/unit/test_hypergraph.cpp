#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "multicover/hypergraph.hpp"
#include "multicover/rational.hpp"
#include "test_fixtures.hpp"

using namespace multicover;

TEST_CASE("validate accepts the minimal feasible instance") {
  Hypergraph h(1, {{0}, {0}}, {2});
  CHECK(validate(h).ok);
}

TEST_CASE("validate flags a degree below the demand") {
  Hypergraph h(1, {{0}, {0}}, {3});
  auto rep = validate(h);
  CHECK_FALSE(rep.ok);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0] == "deg(v1)=2 < b_1=3");
}

TEST_CASE("validate flags out-of-range vertices with 1-based indices") {
  Hypergraph h(3, {{0, 4}, {0, 1}, {1, 2}, {0, 2}}, {2, 2, 2});
  auto rep = validate(h);
  CHECK_FALSE(rep.ok);
  bool found = false;
  for (const auto& v : rep.violations)
    if (v.find("vertex 5") != std::string::npos &&
        v.find("out of range") != std::string::npos)
      found = true;
  CHECK(found);
}

TEST_CASE("validate flags demands below 2, empty edges, repeated vertices") {
  Hypergraph bad_demand(1, {{0}, {0}}, {1});
  CHECK_FALSE(validate(bad_demand).ok);

  Hypergraph empty_edge(2, {{0, 1}, {}, {0, 1}}, {2, 2});
  CHECK_FALSE(validate(empty_edge).ok);

  Hypergraph repeated(2, {{0, 0, 1}, {0, 1}}, {2, 2});
  CHECK_FALSE(validate(repeated).ok);
}

TEST_CASE("duplicate edges are distinct objects and valid") {
  Hypergraph h(2, {{0, 1}, {0, 1}}, {2, 2});
  CHECK(validate(h).ok);
  CHECK(h.num_edges() == 2);
  CHECK(h.degree(0) == 2);
}

TEST_CASE("degree profile of the triangle-plus-full instance") {
  auto p = degree_profile(fixtures::triangle_plus_full());
  CHECK(p.delta_max == 3);
  CHECK(p.delta_bar == make_rational(3, 1));
  CHECK(p.ell_max == 3);
  CHECK(p.ell_bar == make_rational(9, 4));
  CHECK(p.b_min == 2);
  CHECK(p.b_bar == make_rational(2, 1));
  CHECK(p.delta == 2);
}

TEST_CASE("degree profile of the two-singleton instance") {
  auto p = degree_profile(fixtures::two_singletons());
  CHECK(p.delta_max == 2);
  CHECK(p.ell_max == 1);
  CHECK(p.ell_bar == make_rational(1, 1));
  CHECK(p.delta == 1);
}

TEST_CASE("double counting: n*avg_deg = total incidence = m*avg_ell") {
  for (const Hypergraph& h :
       {fixtures::triangle_plus_full(), fixtures::zero_capacity(),
        fixtures::disjoint_pairs()}) {
    auto p = degree_profile(h);
    Rational total(h.total_incidence());
    CHECK(Rational(h.num_vertices()) * p.delta_bar == total);
    CHECK(Rational(h.num_edges()) * p.ell_bar == total);
  }
}

TEST_CASE("is_multicover counts and slacks") {
  Hypergraph h = fixtures::triangle_plus_full();
  auto ok = is_multicover(h, std::vector<int>{0, 1, 2});
  CHECK(ok.ok);
  CHECK(ok.slack == std::vector<int>{0, 0, 0});

  auto bad = is_multicover(h, std::vector<int>{0, 3});
  CHECK_FALSE(bad.ok);  // vertex 3 covered once
  CHECK(bad.slack[2] == -1);

  std::vector<int> all{0, 1, 2, 3};
  CHECK(is_multicover(h, all).ok);
}

TEST_CASE("is_k_matching loads") {
  Hypergraph h = fixtures::triangle_plus_full();
  std::vector<int> k{1, 1, 1};
  auto one = is_k_matching(h, std::vector<int>{3}, k);
  CHECK(one.ok);
  CHECK(one.load == std::vector<int>{1, 1, 1});

  auto two = is_k_matching(h, std::vector<int>{0, 1}, k);
  CHECK_FALSE(two.ok);  // vertex 2 load 2
  CHECK(two.load[1] == 2);

  MatchingSolution empty{{}, {0, 0, 0}};
  CHECK(is_k_matching(h, empty).ok);
}

TEST_CASE("complement inverts the chosen set") {
  Hypergraph h = fixtures::triangle_plus_full();
  MatchingSolution m{{3}, {1, 1, 1}};
  auto cover = complement(h, m);
  CHECK(cover.chosen == std::vector<int>{0, 1, 2});
  CHECK(cover.provenance == Provenance::Duality);

  MatchingSolution none{{}, {1, 1, 1}};
  CHECK(complement(h, none).chosen == std::vector<int>{0, 1, 2, 3});

  MatchingSolution full{{0, 1, 2, 3}, {1, 1, 1}};
  CHECK(complement(h, full).chosen.empty());
}

TEST_CASE("is_multicover is monotone under edge addition") {
  Hypergraph h = fixtures::triangle_plus_full();
  std::vector<int> chosen{0, 1, 2};
  REQUIRE(is_multicover(h, chosen).ok);
  chosen.push_back(3);
  CHECK(is_multicover(h, chosen).ok);
}

TEST_CASE("normalize_indices sorts and deduplicates") {
  std::vector<int> idx{3, 1, 3, 0, 1};
  normalize_indices(idx);
  CHECK(idx == std::vector<int>{0, 1, 3});
}
