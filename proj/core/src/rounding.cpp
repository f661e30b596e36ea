#include "multicover/rounding.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "multicover/rng.hpp"
#include "json.hpp"

namespace multicover {

RoundingParams RoundingParams::from(const Hypergraph& h, std::uint64_t seed) {
  auto prof = degree_profile(h);
  RoundingParams p;
  p.delta_cap = prof.delta_max;
  p.b_min = prof.b_min;
  p.ell = prof.ell_max;
  p.delta = prof.delta;
  p.lambda = (p.delta + 1) / 2.0;
  p.alpha = (p.b_min - 1) * p.delta * std::exp(p.delta / 4.0) / (47.0 * p.ell);
  p.seed = seed;
  return p;
}

const char* branch_name(Branch b) {
  switch (b) {
    case Branch::DeterministicAlpha: return "deterministic-c1-alpha";
    case Branch::DeterministicT: return "deterministic-c1-t";
    case Branch::Randomized: return "randomized";
  }
  return "?";
}

Partition make_partition(const std::vector<double>& x, const RoundingParams& p,
                         double eps) {
  const double c1_thr = 2.0 / (p.delta + 1) - eps;
  const double c2_thr = 1.0 / p.delta - eps;
  Partition part;
  for (int j = 0; j < static_cast<int>(x.size()); ++j) {
    if (x[j] <= 0) continue;
    if (x[j] >= c1_thr) {
      part.c1.push_back(j);
    } else {
      part.c3.push_back(j);
      if (x[j] >= c2_thr) part.c2.push_back(j);
    }
  }
  return part;
}

Partition make_partition_exact(const std::vector<Rational>& x, const RoundingParams& p) {
  const Rational c1_thr = p.c1_threshold();
  const Rational c2_thr = p.c2_threshold();
  Partition part;
  for (int j = 0; j < static_cast<int>(x.size()); ++j) {
    if (x[j] <= 0) continue;
    if (x[j] >= c1_thr) {
      part.c1.push_back(j);
    } else {
      part.c3.push_back(j);
      if (x[j] >= c2_thr) part.c2.push_back(j);
    }
  }
  return part;
}

namespace {

std::vector<int> coverage_counts(const Hypergraph& h, const std::vector<int>& chosen) {
  std::vector<int> cov(h.num_vertices(), 0);
  for (int j : chosen)
    for (int v : h.edge(j)) ++cov[v];
  return cov;
}

long long covered_vertices(const Hypergraph& h, const std::vector<int>& cov) {
  long long y = 0;
  for (int v = 0; v < h.num_vertices(); ++v)
    if (cov[v] >= h.demand(v)) ++y;
  return y;
}

CoverSolution threshold_pick(const Hypergraph& h, const std::vector<int>& c1,
                             const std::vector<int>& c2, Provenance prov) {
  CoverSolution c;
  c.chosen.reserve(c1.size() + c2.size());
  c.chosen.insert(c.chosen.end(), c1.begin(), c1.end());
  c.chosen.insert(c.chosen.end(), c2.begin(), c2.end());
  normalize_indices(c.chosen);
  c.provenance = prov;
  return c;
}

}  // namespace

CoverSolution threshold_cover(const Hypergraph& h, const LpSolution& sol) {
  if (sol.status != LpStatus::Optimal)
    throw std::invalid_argument("threshold_cover: LP solution is not optimal");
  RoundingParams p = RoundingParams::from(h);
  if (sol.mode == LpMode::Rational && !sol.x_exact.empty()) {
    const Rational thr = p.c2_threshold();
    CoverSolution c;
    for (int j = 0; j < static_cast<int>(sol.x_exact.size()); ++j)
      if (sol.x_exact[j] >= thr) c.chosen.push_back(j);
    c.provenance = Provenance::Threshold;
    if (!is_multicover(h, c).ok)
      throw std::invalid_argument("threshold_cover: point is not an LP optimum");
    return c;
  }
  return threshold_cover(h, sol.x, p);
}

CoverSolution threshold_cover(const Hypergraph& h, const std::vector<double>& x,
                              const RoundingParams& p) {
  const double thr = 1.0 / p.delta - kThresholdEps;
  CoverSolution c;
  for (int j = 0; j < static_cast<int>(x.size()); ++j)
    if (x[j] >= thr) c.chosen.push_back(j);
  c.provenance = Provenance::Threshold;
  if (!is_multicover(h, c).ok)
    throw std::invalid_argument("threshold_cover: point is not an LP optimum");
  return c;
}

CoverSolution repair(const Hypergraph& h, const CoverSolution& partial,
                     const Partition& part, const std::vector<double>& x,
                     bool* fallback_used) {
  if (fallback_used) *fallback_used = false;
  CoverSolution out = partial;
  normalize_indices(out.chosen);
  std::vector<char> chosen_mask(h.num_edges(), 0);
  for (int j : out.chosen) chosen_mask[j] = 1;
  std::vector<char> in_c3(h.num_edges(), 0);
  for (int j : part.c3) in_c3[j] = 1;
  std::vector<int> cov = coverage_counts(h, out.chosen);

  auto add_edge = [&](int j) {
    chosen_mask[j] = 1;
    out.chosen.push_back(j);
    for (int u : h.edge(j)) ++cov[u];
  };

  std::vector<int> cand;
  for (int v = 0; v < h.num_vertices(); ++v) {
    if (cov[v] >= h.demand(v)) continue;
    cand.clear();
    for (int j : h.incident_edges(v))
      if (in_c3[j] && !chosen_mask[j]) cand.push_back(j);
    std::sort(cand.begin(), cand.end(), [&](int a, int b) {
      if (x[a] != x[b]) return x[a] > x[b];
      return a < b;
    });
    for (int j : cand) {
      if (cov[v] >= h.demand(v)) break;
      add_edge(j);
    }
    if (cov[v] < h.demand(v)) {
      // C3 exhausted: only reachable from synthetic fractional points.
      if (fallback_used) *fallback_used = true;
      for (int j : h.incident_edges(v)) {
        if (cov[v] >= h.demand(v)) break;
        if (!chosen_mask[j]) add_edge(j);
      }
      if (cov[v] < h.demand(v))
        throw std::invalid_argument("repair: vertex demand exceeds its degree");
    }
  }
  normalize_indices(out.chosen);
  return out;
}

std::pair<CoverSolution, RoundingTrace> randomized_round(
    const Hypergraph& h, const std::vector<double>& x, const Partition& part,
    const RoundingParams& p, std::uint64_t trial_seed) {
  CoverSolution cover;
  cover.chosen = part.c1;
  SplitMix64 rng(trial_seed);
  for (int j : part.c3) {
    const double prob = std::min(1.0, p.lambda * x[j]);
    if (rng.next_unit() < prob) cover.chosen.push_back(j);
  }
  normalize_indices(cover.chosen);

  RoundingTrace trace;
  trace.branch = Branch::Randomized;
  trace.x_count = static_cast<long long>(cover.chosen.size());
  trace.y_count = covered_vertices(h, coverage_counts(h, cover.chosen));
  trace.ratio_claims_applicable = p.delta >= 3;
  trace.opt_star = std::accumulate(x.begin(), x.end(), 0.0);

  bool fallback = false;
  CoverSolution full = repair(h, cover, part, x, &fallback);
  full.provenance = Provenance::Alg1Randomized;
  full.trial_seed = trial_seed;
  trace.repair_fallback_used = fallback;
  trace.final_size = static_cast<long long>(full.chosen.size());
  trace.repairs_added = trace.final_size - trace.x_count;
  return {std::move(full), trace};
}

Alg1Result algorithm1_from_point(const Hypergraph& h, const std::vector<double>& x,
                                 const RoundingParams& p) {
  Alg1Result res;
  res.partition = make_partition(x, p);
  const double opt_star = std::accumulate(x.begin(), x.end(), 0.0);
  const auto c1 = static_cast<double>(res.partition.c1.size());
  const bool alpha_fired = c1 >= p.alpha * opt_star - kThresholdEps;
  const bool t_fired =
      static_cast<long long>(p.t) * res.partition.c1.size() >= res.partition.c2.size();

  if (alpha_fired || t_fired) {
    CoverSolution det = threshold_pick(h, res.partition.c1, res.partition.c2,
                                       Provenance::Alg1Deterministic);
    RoundingTrace trace;
    trace.branch = alpha_fired ? Branch::DeterministicAlpha : Branch::DeterministicT;
    trace.alpha_fired = alpha_fired;
    trace.t_fired = t_fired;
    trace.opt_star = opt_star;
    trace.ratio_claims_applicable = p.delta >= 3;
    trace.x_count = static_cast<long long>(det.chosen.size());
    trace.y_count = covered_vertices(h, coverage_counts(h, det.chosen));
    if (is_multicover(h, det).ok) {
      trace.final_size = trace.x_count;
    } else {
      // C1 u C2 covers at every LP optimum; synthetic points may fall short.
      bool fallback = false;
      det = repair(h, det, res.partition, x, &fallback);
      det.provenance = Provenance::Alg1Deterministic;
      trace.repair_fallback_used = fallback;
      trace.final_size = static_cast<long long>(det.chosen.size());
      trace.repairs_added = trace.final_size - trace.x_count;
    }
    res.cover = std::move(det);
    res.trace = trace;
    return res;
  }

  auto [cover, trace] = randomized_round(h, x, res.partition, p,
                                         substream_seed(p.seed, 0));
  res.cover = std::move(cover);
  res.trace = trace;
  return res;
}

Alg1Result algorithm1_solve(const Hypergraph& h, const LpSolution& lp,
                            const RoundingParams& p) {
  if (lp.status != LpStatus::Optimal)
    throw std::invalid_argument("algorithm1_solve: LP solution is not optimal");
  return algorithm1_from_point(h, lp.x, p);
}

Alg1Result algorithm1_solve(const Hypergraph& h, const RoundingParams& p) {
  LpSolution lp = solve_lp(build_relaxation(h), LpMode::Float);
  return algorithm1_solve(h, lp, p);
}

namespace {

struct TrialSums {
  long long sx = 0, sxx = 0, sy = 0, syy = 0;
  long long successes = 0, size_identity_violations = 0;

  void add(const TrialSums& o) {
    sx += o.sx;
    sxx += o.sxx;
    sy += o.sy;
    syy += o.syy;
    successes += o.successes;
    size_identity_violations += o.size_identity_violations;
  }
};

TrialSums run_trials(const Hypergraph& h, const std::vector<double>& x,
                     const Partition& part, const RoundingParams& p,
                     std::uint64_t seed, long long lo, long long hi,
                     double success_threshold) {
  TrialSums s;
  for (long long i = lo; i < hi; ++i) {
    auto [cover, trace] = randomized_round(h, x, part, p, substream_seed(seed, i));
    s.sx += trace.x_count;
    s.sxx += trace.x_count * trace.x_count;
    s.sy += trace.y_count;
    s.syy += trace.y_count * trace.y_count;
    if (static_cast<double>(trace.final_size) <= success_threshold) ++s.successes;
    if (trace.final_size > trace.x_count + h.num_vertices() - trace.y_count)
      ++s.size_identity_violations;
  }
  return s;
}

}  // namespace

StatsReport monte_carlo_verify(const Hypergraph& h, const std::vector<double>& x,
                               const RoundingParams& p, long long trials,
                               std::uint64_t seed, int jobs,
                               bool opt_star_is_lp_optimal) {
  if (trials <= 0) throw std::invalid_argument("monte_carlo_verify: no trials");
  const Partition part = make_partition(x, p);
  const double opt_star = std::accumulate(x.begin(), x.end(), 0.0);
  const auto c1 = static_cast<double>(part.c1.size());
  if (c1 >= p.alpha * opt_star - kThresholdEps)
    throw std::invalid_argument(
        "monte_carlo_verify: |C1| >= alpha*obj, deterministic branch applies");
  if (static_cast<long long>(p.t) * part.c1.size() >= part.c2.size())
    throw std::invalid_argument(
        "monte_carlo_verify: t|C1| >= |C2|, deterministic branch applies");

  StatsReport rep;
  rep.trials = trials;
  rep.seed = seed;
  rep.opt_star = opt_star;
  rep.opt_star_is_lp_optimal = opt_star_is_lp_optimal;
  rep.success_threshold = (15.0 * p.delta + 14.0) / 20.0 * opt_star;

  TrialSums sums;
  const int workers =
      static_cast<int>(std::max<long long>(1, std::min<long long>(jobs, trials)));
  if (workers == 1) {
    sums = run_trials(h, x, part, p, seed, 0, trials, rep.success_threshold);
  } else {
    std::vector<TrialSums> partial(workers);
    std::vector<std::thread> pool;
    const long long chunk = (trials + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const long long lo = w * chunk, hi = std::min<long long>(trials, lo + chunk);
      pool.emplace_back([&, w, lo, hi] {
        partial[w] = run_trials(h, x, part, p, seed, lo, hi, rep.success_threshold);
      });
    }
    for (auto& t : pool) t.join();
    for (const auto& ps : partial) sums.add(ps);
  }

  const double nt = static_cast<double>(trials);
  rep.mean_x = static_cast<double>(sums.sx) / nt;
  rep.mean_y = static_cast<double>(sums.sy) / nt;
  if (trials > 1) {
    rep.var_x = (static_cast<double>(sums.sxx) - nt * rep.mean_x * rep.mean_x) / (nt - 1);
    rep.var_y = (static_cast<double>(sums.syy) - nt * rep.mean_y * rep.mean_y) / (nt - 1);
    rep.var_x = std::max(0.0, rep.var_x);
    rep.var_y = std::max(0.0, rep.var_y);
  }
  rep.p_success = static_cast<double>(sums.successes) / nt;
  rep.se_x = std::sqrt(rep.var_x / nt);
  rep.se_y = std::sqrt(rep.var_y / nt);
  rep.se_p = std::sqrt(rep.p_success * (1 - rep.p_success) / nt);
  rep.size_identity_violations = sums.size_identity_violations;

  const int n = h.num_vertices();
  const double one_minus = 1.0 - std::exp(-p.lambda);
  rep.x_lower_bound = 1.0 + p.t / 2.0;
  rep.x_upper_bound = p.lambda * opt_star;
  rep.y_lower_bound = one_minus * n;
  rep.var_y_bound = static_cast<double>(n) * n * (1.0 - one_minus * one_minus);
  rep.objective_floor = (p.b_min - 1) * static_cast<double>(n) / (p.alpha * p.ell);

  rep.flags.mean_x_lower = rep.mean_x > rep.x_lower_bound - 3 * rep.se_x;
  rep.flags.mean_x_upper = rep.mean_x <= rep.x_upper_bound + 3 * rep.se_x;
  rep.flags.mean_y_lower = rep.mean_y >= rep.y_lower_bound - 3 * rep.se_y;
  rep.flags.var_y_upper = rep.var_y <= rep.var_y_bound * 1.05;
  rep.flags.success_prob = rep.p_success >= 0.53 - 3 * rep.se_p;
  rep.flags.objective_floor_holds = rep.objective_floor < opt_star;
  return rep;
}

std::string StatsReport::to_json() const {
  nlohmann::json j;
  j["trials"] = trials;
  j["mean_x"] = mean_x;
  j["var_x"] = var_x;
  j["mean_y"] = mean_y;
  j["var_y"] = var_y;
  j["p_success"] = p_success;
  j["se_x"] = se_x;
  j["se_y"] = se_y;
  j["se_p"] = se_p;
  j["x_lower_bound"] = x_lower_bound;
  j["x_upper_bound"] = x_upper_bound;
  j["y_lower_bound"] = y_lower_bound;
  j["var_y_bound"] = var_y_bound;
  j["success_threshold"] = success_threshold;
  j["objective_floor"] = objective_floor;
  j["opt_star"] = opt_star;
  j["opt_star_is_lp_optimal"] = opt_star_is_lp_optimal;
  j["size_identity_violations"] = size_identity_violations;
  j["flags"] = {{"mean_x_lower", flags.mean_x_lower},
                {"mean_x_upper", flags.mean_x_upper},
                {"mean_y_lower", flags.mean_y_lower},
                {"var_y_upper", flags.var_y_upper},
                {"success_prob", flags.success_prob},
                {"objective_floor_holds", flags.objective_floor_holds}};
  j["seed"] = seed;
  return j.dump(2);
}

// Grows a set S of edges pinned to x = 1 (these form C1) and spreads each
// vertex's remaining demand uniformly over its other edges, clamped up to
// 1/delta so the spread lands in C2. A vertex v still needing rem_b units
// from rem_deg edges forces values >= rem_b/rem_deg; whenever that reaches
// the C1 threshold 2/(delta+1), the spread cannot stay low and another edge
// must be pinned. Pinning more edges only ever hurts the branch tests, so
// the first S whose spread fits is also the best this family offers.
FeasiblePoint force_randomized_branch(const Hypergraph& h) {
  FeasiblePoint fp;
  auto rep = validate(h);
  if (!rep.ok) {
    fp.reason = "invalid instance: " + rep.violations.front();
    return fp;
  }
  RoundingParams p = RoundingParams::from(h);
  if (p.delta <= 1) {
    fp.reason = "delta = 1: every vertex is demand-saturated and the only "
                "cover is the full edge set";
    return fp;
  }
  const Rational c1_thr = p.c1_threshold();
  const Rational c2_thr = p.c2_threshold();
  const int n = h.num_vertices(), m = h.num_edges();

  std::vector<char> pinned(m, 0);
  std::vector<int> pinned_at(n, 0);  // |S| edges through v
  int pinned_count = 0;

  std::vector<Rational> rate(n);
  std::vector<Rational> val(m);
  while (true) {
    bool needs_pin = false;
    for (int v = 0; v < n; ++v) {
      const int rem_b = h.demand(v) - pinned_at[v];
      const int rem_deg = h.degree(v) - pinned_at[v];
      rate[v] = rem_b <= 0 ? Rational(0) : make_rational(rem_b, rem_deg);
      if (rem_b > 0 && rate[v] >= c1_thr) needs_pin = true;
    }
    if (!needs_pin) {
      bool fits = true;
      for (int j = 0; j < m && fits; ++j) {
        if (pinned[j]) {
          val[j] = 1;
          continue;
        }
        val[j] = c2_thr;
        for (int v : h.edge(j)) val[j] = std::max(val[j], rate[v]);
        if (val[j] >= c1_thr) fits = false;
      }
      if (fits) {
        Rational obj(0);
        for (int j = 0; j < m; ++j) obj += val[j];
        const double guard = 2 * kThresholdEps;
        const bool alpha_defeated =
            pinned_count < p.alpha * to_double(obj) - guard;
        const bool t_defeated =
            static_cast<long long>(p.t) * pinned_count < m - pinned_count;
        double closest = 1;
        for (int j = 0; j < m; ++j)
          if (!pinned[j])
            closest = std::min(closest, to_double(c1_thr) - to_double(val[j]));
        if (alpha_defeated && t_defeated && closest > guard) {
          fp.found = true;
          fp.x_exact = val;
          fp.x.resize(m);
          for (int j = 0; j < m; ++j) fp.x[j] = to_double(val[j]);
          return fp;
        }
        if (!alpha_defeated)
          fp.reason = "|C1| = " + std::to_string(pinned_count) +
                      " already meets alpha * objective; larger C1 only helps "
                      "the deterministic branch";
        else if (!t_defeated)
          fp.reason = "t|C1| >= |C2| at the smallest workable C1";
        else
          fp.reason = "spread values sit within float tolerance of the C1 threshold";
        return fp;
      }
    }
    // Pin the edge covering the most threshold-bound vertices; ties lowest.
    int best = -1, best_gain = -1;
    for (int j = 0; j < m; ++j) {
      if (pinned[j]) continue;
      int gain = 0;
      for (int v : h.edge(j))
        if (h.demand(v) - pinned_at[v] > 0 && rate[v] >= c1_thr) ++gain;
      if (gain > best_gain) {
        best_gain = gain;
        best = j;
      }
    }
    if (best < 0 || best_gain == 0) {
      fp.reason = "no edge can relieve the threshold-bound vertices";
      return fp;
    }
    pinned[best] = 1;
    ++pinned_count;
    for (int v : h.edge(best)) ++pinned_at[v];
  }
}

}  // namespace multicover
