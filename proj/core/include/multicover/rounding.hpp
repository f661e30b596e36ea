#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "multicover/hypergraph.hpp"
#include "multicover/lp.hpp"
#include "multicover/rational.hpp"

namespace multicover {

// Tolerance for float comparisons against the 1/delta and 2/(delta+1)
// thresholds: one order above the LP duality-gap tolerance, so tight
// variables never silently fall out of their class.
inline constexpr double kThresholdEps = 1e-7;
inline constexpr int kDefaultT = 73;

struct RoundingParams {
  int delta_cap = 0;  // max vertex degree
  int b_min = 0;      // min demand
  int ell = 0;        // max edge size
  int delta = 0;      // delta_cap - b_min + 1
  double lambda = 0;  // (delta + 1) / 2
  double alpha = 0;   // (b_min - 1) * delta * e^{delta/4} / (47 * ell)
  int t = kDefaultT;
  std::uint64_t seed = 0;

  Rational lambda_exact() const { return make_rational(delta + 1, 2); }
  Rational c1_threshold() const { return make_rational(2, delta + 1); }
  Rational c2_threshold() const { return make_rational(1, delta); }

  static RoundingParams from(const Hypergraph& h, std::uint64_t seed = 0);
};

// c1: x >= 2/(delta+1); c2: 1/delta <= x < 2/(delta+1); c3: 0 < x < 2/(delta+1).
// c1 and c3 partition the support; c2 is a subset of c3. All index lists sorted.
struct Partition {
  std::vector<int> c1, c2, c3;
};

Partition make_partition(const std::vector<double>& x, const RoundingParams& p,
                         double eps = kThresholdEps);
Partition make_partition_exact(const std::vector<Rational>& x, const RoundingParams& p);

enum class Branch : std::uint8_t { DeterministicAlpha, DeterministicT, Randomized };

const char* branch_name(Branch b);

struct RoundingTrace {
  Branch branch = Branch::Randomized;
  bool alpha_fired = false;
  bool t_fired = false;
  long long x_count = 0;        // |cover| before repair
  long long y_count = 0;        // vertices meeting demand before repair
  long long repairs_added = 0;  // final_size - x_count
  long long final_size = 0;
  bool ratio_claims_applicable = false;  // delta >= 3
  bool repair_fallback_used = false;     // a non-c3 edge was needed (synthetic points only)
  double opt_star = 0;                   // objective of the point driving the branch test
};

struct Alg1Result {
  CoverSolution cover;
  RoundingTrace trace;
  Partition partition;
};

// All variables with x >= 1/delta; feasible at every LP optimum.
// Throws std::invalid_argument if the set fails to cover (non-optimal input).
CoverSolution threshold_cover(const Hypergraph& h, const LpSolution& sol);
CoverSolution threshold_cover(const Hypergraph& h, const std::vector<double>& x,
                              const RoundingParams& p);

// Full pipeline: partition, deterministic test |C1| >= alpha*obj - eps or
// t|C1| >= |C2|, else randomized rounding of C3 with prob min(1, lambda*x)
// followed by greedy repair. Single-run randomized draws use the trial-0
// substream of params.seed, so one run reproduces Monte-Carlo trial 0.
Alg1Result algorithm1_solve(const Hypergraph& h, const RoundingParams& p);
Alg1Result algorithm1_solve(const Hypergraph& h, const LpSolution& lp,
                            const RoundingParams& p);
Alg1Result algorithm1_from_point(const Hypergraph& h, const std::vector<double>& x,
                                 const RoundingParams& p);

// One rounding trial: keep C1, sample each C3 edge independently, then repair.
std::pair<CoverSolution, RoundingTrace> randomized_round(
    const Hypergraph& h, const std::vector<double>& x, const Partition& part,
    const RoundingParams& p, std::uint64_t trial_seed);

// Deterministic completion: deficient vertices in increasing index; candidates
// from the vertex's unchosen C3 edges by decreasing x then lowest index; any
// unchosen incident edge as a last resort (flagged via fallback_used).
CoverSolution repair(const Hypergraph& h, const CoverSolution& partial,
                     const Partition& part, const std::vector<double>& x,
                     bool* fallback_used = nullptr);

struct StatsFlags {
  bool mean_x_lower = false;   // mean(X) > 1 + t/2 - 3*se
  bool mean_x_upper = false;   // mean(X) <= lambda*obj + 3*se
  bool mean_y_lower = false;   // mean(Y) >= (1 - e^-lambda)*n - 3*se
  bool var_y_upper = false;    // varhat(Y) <= n^2*(1 - (1 - e^-lambda)^2) * 1.05
  bool success_prob = false;   // Pr[|C| <= (15*delta+14)/20 * obj] >= 0.53 - 3*se
  bool objective_floor_holds = false;       // (b-1)*n/(alpha*ell) < obj
  bool all() const {
    return mean_x_lower && mean_x_upper && mean_y_lower && var_y_upper &&
           success_prob && objective_floor_holds;
  }
};

struct StatsReport {
  long long trials = 0;
  double mean_x = 0, var_x = 0, mean_y = 0, var_y = 0, p_success = 0;
  double se_x = 0, se_y = 0, se_p = 0;
  double x_lower_bound = 0, x_upper_bound = 0;
  double y_lower_bound = 0, var_y_bound = 0;
  double success_threshold = 0;  // (15*delta+14)/20 * obj
  double objective_floor = 0;       // (b-1)*n/(alpha*ell)
  double opt_star = 0;
  bool opt_star_is_lp_optimal = false;  // false: proxy objective of a synthetic point
  long long size_identity_violations = 0;         // final > X + n - Y occurrences (expect 0)
  StatsFlags flags;
  std::uint64_t seed = 0;

  std::string to_json() const;
};

// Requires the randomized-branch trigger to fail (throws otherwise) and
// trials >= 1. Trials use substreams f(seed, i); partial sums are integers,
// so the result is identical for any job count.
StatsReport monte_carlo_verify(const Hypergraph& h, const std::vector<double>& x,
                               const RoundingParams& p, long long trials,
                               std::uint64_t seed, int jobs = 1,
                               bool opt_star_is_lp_optimal = false);

struct FeasiblePoint {
  bool found = false;
  std::vector<double> x;
  std::vector<Rational> x_exact;
  std::string reason;  // why no point was produced
};

// Greedy search for a feasible point whose partition defeats both
// deterministic triggers: a minimal set of edges is pinned to x = 1 (these
// form C1) and each vertex's remaining demand is spread evenly over its
// other edges, clamped into [1/delta, 2/(delta+1)) so the spread lands in
// C2. Conservative: the search is not exhaustive, so impossibility reports
// name the failing trigger for the best point this family produced.
FeasiblePoint force_randomized_branch(const Hypergraph& h);

}  // namespace multicover
