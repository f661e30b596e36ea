#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "multicover/hypergraph.hpp"
#include "multicover/rational.hpp"
#include "multicover/rounding.hpp"

namespace multicover {

enum class Family : std::uint8_t { Random, Uniform, NearUniform, Flat };

const char* to_string(Family f);
Family family_from_string(const std::string& s);

struct GenConstraints {
  bool demand_at_least_3 = false;  // b_min >= 3
  bool degree_gap_2 = false;       // max degree >= b_min + 2 (same as delta >= 3)
};

struct GenSpec {
  Family family = Family::Random;
  int n = 10;
  int m = 20;  // minimum; targeted repair edges may push the count higher
  int ell_min = 2;
  int ell_max = 3;
  int b_lo = 2;
  int b_hi = 2;
  Rational epsilon = make_rational(1, 2);  // near-uniform: ell <= (1+eps)*avg_ell
  GenConstraints constraints;
  std::uint64_t seed = 0;
  int retries = 100;
  int flat_degree = 8;  // flat family: private edges per vertex; must be >= 8
};

struct GenerationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Deterministic per (spec, seed). Samples edge sizes uniformly in
// [ell_min, ell_max] (uniform family: always ell_max), vertices without
// replacement, then demands; degree deficits are repaired by appending
// targeted edges. Retries with an advanced substream until the structural
// constraints hold; throws GenerationError when the budget runs out.
Hypergraph generate(const GenSpec& spec);

struct FlatInstance {
  Hypergraph h;
  FeasiblePoint point;  // exact fractional point defeating both branch tests
};

// One hub edge spanning all vertices (x = 1) plus flat_degree private
// single-vertex edges per vertex (x = 1/flat_degree), all demands 2. The
// point is an LP optimum with objective n + 1; its partition has |C1| = 1
// and |C2| = n * flat_degree, so neither deterministic test can fire once
// flat_degree >= 8 and n * flat_degree > 73.
FlatInstance generate_flat(const GenSpec& spec);

}  // namespace multicover
