#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "multicover/hypergraph.hpp"

namespace multicover {

enum class OracleMethod : std::uint8_t { Auto, Exhaustive, BranchAndBound };

const char* to_string(OracleMethod m);

struct OracleResult {
  long long value = 0;       // exact optimum, or the incumbent when timed out
  std::vector<int> witness;  // an optimal (or incumbent) edge set, sorted
  long long explored = 0;    // nodes visited / subsets enumerated
  OracleMethod method = OracleMethod::Exhaustive;  // what actually ran
  bool timed_out = false;
  long long lower_bound = 0;  // final proof bounds; equal when !timed_out
  long long upper_bound = 0;
};

inline constexpr long long kDefaultOracleBudget = 10'000'000;

// Minimum b-multicover. Auto enumerates all subsets when m <= 12, otherwise
// branch-and-bound on the edge covering the most residual demand, pruned by
// ceil(LP objective) at the root and residual counting bounds per node.
OracleResult exact_min_multicover(const Hypergraph& h,
                                  long long budget = kDefaultOracleBudget,
                                  OracleMethod method = OracleMethod::Auto);

// Maximum k-matching for an arbitrary capacity vector.
OracleResult exact_max_k_matching(const Hypergraph& h, std::span<const int> k,
                                  long long budget = kDefaultOracleBudget,
                                  OracleMethod method = OracleMethod::Auto);

// With k = deg - b: checks m - nu_k = Opt and that the complement of the
// matching witness is a multicover of size Opt. Throws on oracle timeout.
bool duality_crosscheck(const Hypergraph& h, long long budget = kDefaultOracleBudget);

}  // namespace multicover
