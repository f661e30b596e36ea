#pragma once

#include "multicover/hypergraph.hpp"
#include "multicover/rational.hpp"

#include <iosfwd>
#include <stdexcept>
#include <vector>

namespace multicover {

// The covering relaxation: minimize sum(x) subject to Ax >= b, x in [0,1]^m,
// where A is the n x m vertex-edge incidence matrix.
struct LpModel {
  int rows = 0;  // n
  int cols = 0;  // m
  std::vector<std::uint8_t> a;  // row-major incidence
  std::vector<int> rhs;

  std::uint8_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

LpModel build_relaxation(const Hypergraph& h);

enum class LpMode { Float, Rational };
enum class LpStatus { Optimal, Infeasible };

struct SimplexLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// x and duals are always populated as doubles; the *_exact twins are filled
// in rational mode only and are the authority in tests.
struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  LpMode mode = LpMode::Float;
  std::vector<double> x;
  double objective = 0.0;
  std::vector<double> dual;  // row duals y >= 0
  std::vector<Rational> x_exact;
  Rational objective_exact;
  std::vector<Rational> dual_exact;
  long long iterations = 0;
};

// Bounded-variable primal simplex, Bland's rule for entering and leaving
// (lowest index), dense tableau. Valid instances admit the all-ones point,
// so the surplus basis is feasible from the start and no phase 1 is needed;
// Infeasible is returned exactly when some row has sum(A_i) < b_i.
// Throws SimplexLimitError if the iteration cap is hit.
LpSolution solve_lp(const LpModel& model, LpMode mode = LpMode::Float);

// Certificate check: primal feasibility, dual feasibility and matching
// primal/dual objectives (exact in rational mode, within 1e-9*(1+|obj|) in
// float mode). Throws std::invalid_argument if a rational-mode solution
// carries no dual certificate.
bool verify_lp_optimality(const LpModel& model, const LpSolution& sol);

// Dump in LP interchange text format for cross-checks with external solvers.
void write_lp_interchange(std::ostream& out, const LpModel& model);

}  // namespace multicover
