#include "multicover/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace multicover {

LpModel build_relaxation(const Hypergraph& h) {
  auto rep = validate(h);
  if (!rep.ok)
    throw std::invalid_argument("build_relaxation: invalid hypergraph: " +
                                rep.violations.front());
  LpModel model;
  model.rows = h.num_vertices();
  model.cols = h.num_edges();
  model.a.assign(static_cast<std::size_t>(model.rows) * model.cols, 0);
  for (int j = 0; j < model.cols; ++j)
    for (int v : h.edge(j))
      model.a[static_cast<std::size_t>(v) * model.cols + j] = 1;
  model.rhs = h.demands();
  return model;
}

namespace {

template <class Num>
struct NumTraits;

template <>
struct NumTraits<double> {
  static constexpr bool exact = false;
  static double zero() { return 0.0; }
  static double dual_tol() { return 1e-9; }
  static bool is_zero(double v) { return std::fabs(v) <= 1e-11; }
  static double from_int(long long v) { return static_cast<double>(v); }
};

template <>
struct NumTraits<Rational> {
  static constexpr bool exact = true;
  static Rational zero() { return Rational(0); }
  static Rational dual_tol() { return Rational(0); }
  static bool is_zero(const Rational& v) { return v == 0; }
  static Rational from_int(long long v) { return Rational(v); }
};

enum class VarState : std::uint8_t { Basic, AtLower, AtUpper };

// Variables 0..m-1 are the structural x_j in [0,1]; m..m+n-1 are surplus
// s_i >= 0 from Ax - s = b. Constraint matrix G = [A | -I].
template <class Num>
struct Simplex {
  using T = NumTraits<Num>;

  const LpModel& model;
  int n, m, total;
  std::vector<Num> tab;    // n x total, current B^-1 G
  std::vector<Num> beta;   // basic values
  std::vector<Num> red;    // reduced costs
  std::vector<int> basis;  // row -> variable
  std::vector<VarState> state;
  long long iterations = 0;

  explicit Simplex(const LpModel& mod)
      : model(mod), n(mod.rows), m(mod.cols), total(mod.cols + mod.rows) {}

  Num& tref(int i, int j) { return tab[static_cast<std::size_t>(i) * total + j]; }

  Num g(int i, int j) const {
    if (j < m) return T::from_int(model.at(i, j));
    return T::from_int(j - m == i ? -1 : 0);
  }

  bool has_upper(int j) const { return j < m; }

  Num bound_value(int j, VarState s) const {
    if (s == VarState::AtUpper) return T::from_int(1);
    return T::zero();
  }

  // Start from x at the upper bounds with the surplus variables basic:
  // beta_i = deg(i) - b_i, feasible on any validated instance.
  void init() {
    tab.assign(static_cast<std::size_t>(n) * total, T::zero());
    beta.assign(n, T::zero());
    red.assign(total, T::zero());
    basis.resize(n);
    state.assign(total, VarState::AtLower);

    for (int j = 0; j < m; ++j) state[j] = VarState::AtUpper;
    for (int i = 0; i < n; ++i) {
      basis[i] = m + i;
      state[m + i] = VarState::Basic;
      long long rowsum = 0;
      for (int j = 0; j < m; ++j) rowsum += model.at(i, j);
      beta[i] = T::from_int(rowsum - model.rhs[i]);
      // B = -I  =>  B^-1 G = -G = [-A | I]
      for (int j = 0; j < m; ++j) tref(i, j) = T::from_int(-model.at(i, j));
      tref(i, m + i) = T::from_int(1);
    }
    for (int j = 0; j < m; ++j) red[j] = T::from_int(1);  // c_B = 0 initially
  }

  // Bland: lowest-index nonbasic variable with a favorable reduced cost.
  int pick_entering() const {
    for (int j = 0; j < total; ++j) {
      if (state[j] == VarState::Basic) continue;
      if (state[j] == VarState::AtLower && red[j] < -T::dual_tol()) return j;
      if (state[j] == VarState::AtUpper && red[j] > T::dual_tol()) return j;
    }
    return -1;
  }

  void solve() {
    init();
    const long long limit = 20000 + 200LL * total;
    const Num one = T::from_int(1);
    while (true) {
      int q = pick_entering();
      if (q < 0) return;
      if (++iterations > limit)
        throw SimplexLimitError("simplex iteration limit exceeded");

      const int dir = state[q] == VarState::AtLower ? 1 : -1;
      // Displacement t >= 0 of the entering variable toward its other bound.
      bool bounded = has_upper(q);
      Num t_best = bounded ? one : T::zero();
      int leave_row = -1;
      bool leave_to_upper = false;

      for (int i = 0; i < n; ++i) {
        Num w = tref(i, q);
        if (T::is_zero(w)) continue;
        Num rate = dir > 0 ? w : Num(-w);  // beta_i decreases at this rate
        const int bv = basis[i];
        if (rate > T::zero()) {
          Num ratio = beta[i] / rate;  // basic var hits its lower bound 0
          if (!bounded || ratio < t_best ||
              (ratio == t_best && (leave_row < 0 || bv < basis[leave_row]))) {
            bounded = true;
            t_best = ratio;
            leave_row = i;
            leave_to_upper = false;
          }
        } else if (has_upper(bv)) {
          Num ratio = (one - beta[i]) / Num(-rate);  // hits its upper bound 1
          if (!bounded || ratio < t_best ||
              (ratio == t_best && (leave_row < 0 || bv < basis[leave_row]))) {
            bounded = true;
            t_best = ratio;
            leave_row = i;
            leave_to_upper = true;
          }
        }
      }
      if (!bounded)
        throw std::logic_error("unbounded direction in a box-constrained LP");

      // Only a bound flip of the entering variable: move it across, no pivot.
      if (leave_row < 0) {
        for (int i = 0; i < n; ++i) {
          Num w = tref(i, q);
          if (!T::is_zero(w)) beta[i] -= Num(T::from_int(dir) * t_best * w);
        }
        state[q] = state[q] == VarState::AtLower ? VarState::AtUpper : VarState::AtLower;
        continue;
      }

      // Pivot on (leave_row, q).
      Num enter_val = bound_value(q, state[q]) + T::from_int(dir) * t_best;
      for (int i = 0; i < n; ++i) {
        if (i == leave_row) continue;
        Num w = tref(i, q);
        if (!T::is_zero(w)) beta[i] -= Num(T::from_int(dir) * t_best * w);
      }
      const int leaving = basis[leave_row];
      state[leaving] = leave_to_upper ? VarState::AtUpper : VarState::AtLower;

      Num piv = tref(leave_row, q);
      for (int j = 0; j < total; ++j) tref(leave_row, j) /= piv;
      for (int i = 0; i < n; ++i) {
        if (i == leave_row) continue;
        Num f = tref(i, q);
        if (T::is_zero(f)) continue;
        for (int j = 0; j < total; ++j) tref(i, j) -= Num(f * tref(leave_row, j));
        tref(i, q) = T::zero();
      }
      Num fr = red[q];
      if (!T::is_zero(fr))
        for (int j = 0; j < total; ++j) red[j] -= Num(fr * tref(leave_row, j));

      basis[leave_row] = q;
      state[q] = VarState::Basic;
      beta[leave_row] = enter_val;
    }
  }

  std::vector<Num> structural_values() const {
    std::vector<Num> x(m, T::zero());
    for (int j = 0; j < m; ++j)
      if (state[j] == VarState::AtUpper) x[j] = T::from_int(1);
    for (int i = 0; i < n; ++i)
      if (basis[i] < m) x[basis[i]] = beta[i];
    return x;
  }

  // y = c_B B^-1, recovered from the surplus columns: B^-1 = -tab[:, m:].
  std::vector<Num> duals() const {
    std::vector<Num> y(n, T::zero());
    for (int k = 0; k < n; ++k) {
      if (basis[k] >= m) continue;  // c is 0 on surplus variables
      for (int i = 0; i < n; ++i)
        y[i] -= tab[static_cast<std::size_t>(k) * total + m + i];
    }
    return y;
  }
};

template <class Num>
void run_mode(const LpModel& model, LpSolution& sol) {
  Simplex<Num> s(model);
  s.solve();
  auto x = s.structural_values();
  auto y = s.duals();
  Num obj = NumTraits<Num>::zero();
  for (const auto& v : x) obj += v;
  sol.iterations = s.iterations;

  sol.x.resize(model.cols);
  sol.dual.resize(model.rows);
  if constexpr (NumTraits<Num>::exact) {
    sol.x_exact = std::move(x);
    sol.dual_exact = std::move(y);
    sol.objective_exact = obj;
    for (int j = 0; j < model.cols; ++j) sol.x[j] = to_double(sol.x_exact[j]);
    for (int i = 0; i < model.rows; ++i) sol.dual[i] = to_double(sol.dual_exact[i]);
    sol.objective = to_double(sol.objective_exact);
  } else {
    for (int j = 0; j < model.cols; ++j) sol.x[j] = x[j];
    for (int i = 0; i < model.rows; ++i) sol.dual[i] = y[i];
    sol.objective = obj;
  }
}

}  // namespace

LpSolution solve_lp(const LpModel& model, LpMode mode) {
  LpSolution sol;
  sol.mode = mode;
  for (int i = 0; i < model.rows; ++i) {
    long long rowsum = 0;
    for (int j = 0; j < model.cols; ++j) rowsum += model.at(i, j);
    if (rowsum < model.rhs[i]) {
      sol.status = LpStatus::Infeasible;
      return sol;
    }
  }
  sol.status = LpStatus::Optimal;
  if (mode == LpMode::Rational)
    run_mode<Rational>(model, sol);
  else
    run_mode<double>(model, sol);
  return sol;
}

namespace {

bool verify_exact(const LpModel& model, const LpSolution& sol) {
  if (sol.x_exact.empty() && model.cols > 0)
    throw std::invalid_argument("rational-mode solution lacks exact values");
  if (sol.dual_exact.empty() && model.rows > 0)
    throw std::invalid_argument("rational-mode solution lacks a dual certificate");

  Rational primal(0);
  for (int j = 0; j < model.cols; ++j) {
    const Rational& v = sol.x_exact[j];
    if (v < 0 || v > 1) return false;
    primal += v;
  }
  if (primal != sol.objective_exact) return false;
  for (int i = 0; i < model.rows; ++i) {
    Rational row(0);
    for (int j = 0; j < model.cols; ++j)
      if (model.at(i, j)) row += sol.x_exact[j];
    if (row < model.rhs[i]) return false;
  }
  Rational dual_obj(0);
  for (int i = 0; i < model.rows; ++i) {
    if (sol.dual_exact[i] < 0) return false;
    dual_obj += sol.dual_exact[i] * model.rhs[i];
  }
  for (int j = 0; j < model.cols; ++j) {
    Rational ya(0);
    for (int i = 0; i < model.rows; ++i)
      if (model.at(i, j)) ya += sol.dual_exact[i];
    if (ya > 1) dual_obj -= ya - 1;  // upper-bound duals w_j = max(0, yA_j - 1)
  }
  return dual_obj == primal;
}

bool verify_float(const LpModel& model, const LpSolution& sol) {
  const double tol = 1e-9;
  double primal = 0;
  for (int j = 0; j < model.cols; ++j) {
    double v = sol.x[j];
    if (v < -tol || v > 1 + tol) return false;
    primal += v;
  }
  if (std::fabs(primal - sol.objective) > tol * (1 + std::fabs(primal))) return false;
  for (int i = 0; i < model.rows; ++i) {
    double row = 0;
    for (int j = 0; j < model.cols; ++j)
      if (model.at(i, j)) row += sol.x[j];
    if (row < model.rhs[i] - tol * (1 + model.rhs[i])) return false;
  }
  double dual_obj = 0;
  for (int i = 0; i < model.rows; ++i) {
    if (sol.dual[i] < -tol) return false;
    dual_obj += sol.dual[i] * model.rhs[i];
  }
  for (int j = 0; j < model.cols; ++j) {
    double ya = 0;
    for (int i = 0; i < model.rows; ++i)
      if (model.at(i, j)) ya += sol.dual[i];
    if (ya > 1) dual_obj -= ya - 1;
  }
  return std::fabs(dual_obj - primal) <= tol * (1 + std::fabs(primal));
}

}  // namespace

bool verify_lp_optimality(const LpModel& model, const LpSolution& sol) {
  if (sol.status != LpStatus::Optimal) return false;
  if (sol.mode == LpMode::Rational) return verify_exact(model, sol);
  return verify_float(model, sol);
}

void write_lp_interchange(std::ostream& out, const LpModel& model) {
  out << "\\ set multicover LP relaxation\nMinimize\n obj:";
  for (int j = 0; j < model.cols; ++j) out << (j ? " + x" : " x") << j + 1;
  out << "\nSubject To\n";
  for (int i = 0; i < model.rows; ++i) {
    out << " c" << i + 1 << ":";
    bool first = true;
    for (int j = 0; j < model.cols; ++j) {
      if (model.at(i, j)) {
        out << (first ? " x" : " + x") << j + 1;
        first = false;
      }
    }
    out << " >= " << model.rhs[i] << "\n";
  }
  out << "Bounds\n";
  for (int j = 0; j < model.cols; ++j) out << " 0 <= x" << j + 1 << " <= 1\n";
  out << "End\n";
}

}  // namespace multicover
