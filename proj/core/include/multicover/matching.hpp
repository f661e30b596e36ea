#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "multicover/hypergraph.hpp"
#include "multicover/rational.hpp"

namespace multicover {

// k_i = deg(v_i) - b_i: the matching-side capacities dual to the demands.
struct CapacityVector {
  std::vector<int> k;
};

// Throws std::invalid_argument when some deg(v) < b_v.
CapacityVector capacity_vector(const Hypergraph& h);

enum class EdgeOrder : std::uint8_t { Input, SizeIncreasing, SeededRandom };

const char* to_string(EdgeOrder o);

// The visit order for the greedy scan. SizeIncreasing ties break by index;
// SeededRandom is a seeded shuffle.
std::vector<int> edge_ordering(const Hypergraph& h, EdgeOrder order,
                               std::uint64_t seed = 0);

// Scan the edges once, keeping each edge whose addition stays within every
// capacity. Maximal for the order; at least a 1/ell fraction of the optimum.
MatchingSolution greedy_k_matching(const Hypergraph& h, const CapacityVector& k,
                                   const std::vector<int>& order);
MatchingSolution greedy_k_matching(const Hypergraph& h, const CapacityVector& k,
                                   EdgeOrder order = EdgeOrder::Input,
                                   std::uint64_t seed = 0);

// Greedy matching with k_i = deg - b_i, then S := E \ M. The complement of a
// k-matching is always a b-multicover.
std::pair<CoverSolution, MatchingSolution> duality_cover(
    const Hypergraph& h, EdgeOrder order = EdgeOrder::Input, std::uint64_t seed = 0);

// Exact-rational bound data: nu_k <= value * Opt, and the cover-side ratio
// (1-r) * (avg_deg * ell) / (avg_demand * avg_ell) + r.
struct DualityBound {
  Rational value;      // (avg_deg/avg_demand) * (ell/avg_ell) - 1
  Rational delta_bar;  // average degree
  Rational b_bar;      // average demand
  Rational ell_bar;    // average edge size
  int ell = 0;

  Rational ratio_bound(const Rational& r) const;
  Rational ratio_bound_default() const;  // r = 1/ell
};

DualityBound matching_number_bound(const Hypergraph& h);

// Hypothesis gate for the 5/6 * delta guarantee of the duality cover on
// near-uniform instances: b >= 3, max degree >= b + 2 (same as delta >= 3),
// and ell <= (1 + eps) * avg_ell.
struct NearUniformGate {
  bool eligible = false;
  bool demand_ok = false;    // b_min >= 3
  bool degree_ok = false;    // delta_cap >= b_min + 2  <=>  delta >= 3
  bool spread_ok = false;    // ell <= (1+eps) * avg_ell, exact rationals
  Rational bound;            // (5/6) * delta
  Rational refined_bound;    // (5/6 - 1/(2*ell)) * delta, reported alongside
};

NearUniformGate near_uniform_gate(const Hypergraph& h,
                                  const Rational& eps = make_rational(1, 2));

}  // namespace multicover
