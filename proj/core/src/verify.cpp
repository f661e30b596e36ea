#include "multicover/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <string>

#include "multicover/generator.hpp"
#include "multicover/lp.hpp"
#include "multicover/matching.hpp"
#include "multicover/oracle.hpp"
#include "multicover/rng.hpp"
#include "multicover/rounding.hpp"
#include "json.hpp"

namespace multicover {

void SuiteResult::add(std::string name, bool ok, std::string detail) {
  pass = pass && ok;
  checks.push_back({std::move(name), ok, std::move(detail)});
}

namespace {

std::string padded(const char* prefix, int i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s-%03d", prefix, i);
  return buf;
}

bool has_duplicate_edge(const Hypergraph& h) {
  std::set<std::vector<int>> seen;
  for (auto e : h.raw_edges()) {
    std::sort(e.begin(), e.end());
    if (!seen.insert(e).second) return true;
  }
  return false;
}

std::string counts(int total, long long failures) {
  return std::to_string(total) + " instances, " + std::to_string(failures) +
         " failures";
}

}  // namespace

std::vector<std::pair<std::string, Hypergraph>> small_corpus(std::uint64_t seed,
                                                             int count, int max_m,
                                                             int dup_every) {
  std::vector<std::pair<std::string, Hypergraph>> out;
  for (int attempt = 0; static_cast<int>(out.size()) < count; ++attempt) {
    if (attempt > count * 200 + 1000)
      throw GenerationError("small corpus: retry budget exhausted");
    const std::uint64_t sub = substream_seed(seed, attempt);
    SplitMix64 rng(sub ^ 0xabcdef12345ULL);
    GenSpec spec;
    spec.family = Family::Random;
    spec.n = 3 + static_cast<int>(rng.next_in(0, 3));
    spec.m = 4 + static_cast<int>(rng.next_in(0, 4));
    spec.ell_min = 2;
    spec.ell_max = std::min(3, spec.n);
    spec.b_lo = 2;
    spec.b_hi = spec.n >= 4 ? 3 : 2;
    spec.seed = sub;
    const bool want_dup =
        dup_every > 0 && static_cast<int>(out.size()) % dup_every == 0;
    Hypergraph h = generate(spec);
    if (h.num_edges() + (want_dup ? 1 : 0) > max_m) continue;
    if (want_dup) {
      auto edges = h.raw_edges();
      edges.push_back(edges[rng.next_in(0, edges.size() - 1)]);
      h = Hypergraph(h.num_vertices(), std::move(edges), h.demands());
      if (!validate(h).ok) continue;
    }
    out.emplace_back(padded("small", static_cast<int>(out.size())), std::move(h));
  }
  return out;
}

std::vector<std::pair<std::string, Hypergraph>> lemma_corpus(std::uint64_t seed,
                                                             int count) {
  std::vector<std::pair<std::string, Hypergraph>> out;
  for (int attempt = 0; static_cast<int>(out.size()) < count; ++attempt) {
    if (attempt > count * 200 + 1000)
      throw GenerationError("lemma corpus: retry budget exhausted");
    const std::uint64_t sub = substream_seed(seed ^ 0x11d7, attempt);
    SplitMix64 rng(sub ^ 0x5151);
    GenSpec spec;
    spec.family = Family::Random;
    spec.n = 4 + static_cast<int>(rng.next_in(0, 5));
    spec.m = 8 + static_cast<int>(rng.next_in(0, 7));
    spec.ell_min = 2;
    spec.ell_max = std::min(4, spec.n);
    spec.b_lo = 2;
    spec.b_hi = 3;
    spec.seed = sub;
    Hypergraph h = generate(spec);
    if (h.num_edges() > 20) continue;
    if (degree_profile(h).delta < 2) continue;  // strictness needs delta >= 2
    out.emplace_back(padded("lemma", static_cast<int>(out.size())), std::move(h));
  }
  return out;
}

std::vector<std::pair<std::string, Hypergraph>> ratio_corpus(std::uint64_t seed,
                                                             int count) {
  std::vector<std::pair<std::string, Hypergraph>> out;
  for (int attempt = 0; static_cast<int>(out.size()) < count; ++attempt) {
    if (attempt > count * 200 + 1000)
      throw GenerationError("ratio corpus: retry budget exhausted");
    const std::uint64_t sub = substream_seed(seed ^ 0x4a7f, attempt);
    SplitMix64 rng(sub ^ 0x9292);
    GenSpec spec;
    spec.family = Family::Random;
    spec.n = 8 + static_cast<int>(rng.next_in(0, 6));
    spec.m = 15 + static_cast<int>(rng.next_in(0, 7));
    spec.ell_min = 2;
    spec.ell_max = 4;
    spec.b_lo = 2;
    spec.b_hi = 3;
    spec.seed = sub;
    Hypergraph h = generate(spec);
    if (h.num_edges() > 24) continue;
    out.emplace_back(padded("ratio", static_cast<int>(out.size())), std::move(h));
  }
  return out;
}

std::vector<std::pair<std::string, Hypergraph>> gated_corpus(std::uint64_t seed,
                                                             int count) {
  std::vector<std::pair<std::string, Hypergraph>> out;
  for (int attempt = 0; static_cast<int>(out.size()) < count; ++attempt) {
    if (attempt > count * 200 + 1000)
      throw GenerationError("gated corpus: retry budget exhausted");
    const std::uint64_t sub = substream_seed(seed ^ 0xc2c2, attempt);
    SplitMix64 rng(sub ^ 0x77aa);
    GenSpec spec;
    spec.family = Family::NearUniform;
    spec.n = 7 + static_cast<int>(rng.next_in(0, 4));
    spec.m = 2 * spec.n + static_cast<int>(rng.next_in(0, 7));
    spec.ell_min = 3;
    spec.ell_max = std::min(4, spec.n);
    spec.b_lo = 3;
    spec.b_hi = 3;
    spec.epsilon = make_rational(1, 2);
    spec.constraints.demand_at_least_3 = true;
    spec.constraints.degree_gap_2 = true;
    spec.seed = sub;
    Hypergraph h = generate(spec);
    if (h.num_edges() > 26) continue;
    if (!near_uniform_gate(h).eligible) continue;
    out.emplace_back(padded("gated", static_cast<int>(out.size())), std::move(h));
  }
  return out;
}

SuiteResult verify_duality(const VerifyOptions& opt) {
  SuiteResult suite;
  suite.suite = "duality";
  auto corpus = small_corpus(opt.seed, opt.count, opt.max_m, 10);

  long long eq_fail = 0, card_fail = 0, cross_fail = 0;
  long long greedy_fail = 0, strict_greedy_fail = 0, maximal_fail = 0;
  long long dup_seen = 0;
  for (int i = 0; i < static_cast<int>(corpus.size()); ++i) {
    const Hypergraph& h = corpus[i].second;
    const int m = h.num_edges();
    if (has_duplicate_edge(h)) ++dup_seen;
    CapacityVector k = capacity_vector(h);

    // Complementarity over every edge subset.
    std::vector<int> members, rest;
    for (unsigned long long mask = 0; mask < (1ULL << m); ++mask) {
      members.clear();
      rest.clear();
      for (int j = 0; j < m; ++j)
        (mask >> j & 1 ? members : rest).push_back(j);
      const bool matching_ok = is_k_matching(h, members, k.k).ok;
      const bool cover_ok = is_multicover(h, rest).ok;
      if (matching_ok != cover_ok) {
        ++eq_fail;
        break;
      }
    }

    OracleResult cover = exact_min_multicover(h, kDefaultOracleBudget,
                                              OracleMethod::Exhaustive);
    OracleResult matching = exact_max_k_matching(h, k.k, kDefaultOracleBudget,
                                                 OracleMethod::Exhaustive);
    if (m - matching.value != cover.value) ++card_fail;
    if (!duality_crosscheck(h)) ++cross_fail;

    // Greedy guarantee under a random capacity vector.
    SplitMix64 rng(substream_seed(opt.seed ^ 0xfeed, i));
    CapacityVector k2;
    k2.k.resize(h.num_vertices());
    for (int v = 0; v < h.num_vertices(); ++v)
      k2.k[v] = static_cast<int>(rng.next_in(0, h.degree(v)));
    MatchingSolution greedy = greedy_k_matching(h, k2, EdgeOrder::Input);
    OracleResult nu = exact_max_k_matching(h, k2.k, kDefaultOracleBudget,
                                           OracleMethod::Exhaustive);
    const long long ell = degree_profile(h).ell_max;
    const long long gsize = static_cast<long long>(greedy.chosen.size());
    if (ell * gsize < nu.value) ++greedy_fail;
    if ((gsize + 1) * (ell + 1) <= nu.value) ++strict_greedy_fail;

    // Maximality: every skipped edge must now violate a capacity.
    std::vector<int> load(h.num_vertices(), 0);
    std::vector<char> in_greedy(m, 0);
    for (int j : greedy.chosen) {
      in_greedy[j] = 1;
      for (int v : h.edge(j)) ++load[v];
    }
    for (int j = 0; j < m; ++j) {
      if (in_greedy[j]) continue;
      bool fits = true;
      for (int v : h.edge(j))
        if (load[v] + 1 > k2.k[v]) {
          fits = false;
          break;
        }
      if (fits) {
        ++maximal_fail;
        break;
      }
    }
  }

  const int total = static_cast<int>(corpus.size());
  suite.add("matching-cover-complementarity", eq_fail == 0, counts(total, eq_fail));
  suite.add("cardinality-identity", card_fail == 0, counts(total, card_fail));
  suite.add("oracle-crosscheck", cross_fail == 0, counts(total, cross_fail));
  suite.add("duplicate-edge-instances", dup_seen * 10 >= total,
            std::to_string(dup_seen) + " of " + std::to_string(total));
  suite.add("greedy-one-over-ell", greedy_fail == 0, counts(total, greedy_fail));
  suite.add("greedy-above-one-over-ell-plus-one", strict_greedy_fail == 0,
            counts(total, strict_greedy_fail));
  suite.add("greedy-maximality", maximal_fail == 0, counts(total, maximal_fail));
  return suite;
}

SuiteResult verify_lemmas(const VerifyOptions& opt) {
  SuiteResult suite;
  suite.suite = "lemmas";
  auto corpus = lemma_corpus(opt.seed, opt.count);

  long long cert_fail = 0, gap_fail = 0, optstar_fail = 0, oracle_timeouts = 0;
  long long count_fail = 0, strict_count_fail = 0, mass_fail = 0;
  long long threshold_fail = 0, strict_fail = 0;
  long long point_structure_fail = 0;

  for (int i = 0; i < static_cast<int>(corpus.size()); ++i) {
    const Hypergraph& h = corpus[i].second;
    auto prof = degree_profile(h);
    LpModel model = build_relaxation(h);
    LpSolution fsol = solve_lp(model, LpMode::Float);
    LpSolution rsol = solve_lp(model, LpMode::Rational);

    if (!verify_lp_optimality(model, rsol) || !verify_lp_optimality(model, fsol))
      ++cert_fail;
    const double robj = to_double(rsol.objective_exact);
    if (std::fabs(fsol.objective - robj) > 1e-6 * (1 + std::fabs(robj))) ++gap_fail;

    OracleResult oracle = exact_min_multicover(h);
    if (oracle.timed_out) {
      ++oracle_timeouts;
    } else if (rsol.objective_exact > Rational(oracle.value)) {
      ++optstar_fail;
    }

    // Threshold structure at the exact optimum, all vertices.
    const Rational thr1 = make_rational(1, prof.delta);
    const Rational thr2 = make_rational(2, prof.delta + 1);
    for (int v = 0; v < h.num_vertices(); ++v) {
      int cnt1 = 0, cnt2 = 0;
      for (int j : h.incident_edges(v)) {
        if (rsol.x_exact[j] >= thr1) ++cnt1;
        if (rsol.x_exact[j] >= thr2) ++cnt2;
      }
      if (cnt1 < h.demand(v)) ++count_fail;
      if (cnt2 < h.demand(v) - 1 || cnt1 < h.demand(v)) ++strict_count_fail;
    }

    // delta*obj >= (2*delta/(delta+1))*|{x >= thr2}| + |{thr1 <= x < thr2}|.
    long long big = 0, mid = 0;
    for (const auto& xv : rsol.x_exact) {
      if (xv >= thr2)
        ++big;
      else if (xv >= thr1)
        ++mid;
    }
    const Rational lhs = Rational(prof.delta) * rsol.objective_exact;
    const Rational rhs =
        make_rational(2 * prof.delta, prof.delta + 1) * big + Rational(mid);
    if (lhs < rhs) ++mass_fail;

    try {
      CoverSolution tc = threshold_cover(h, rsol);
      if (!oracle.timed_out &&
          static_cast<long long>(tc.chosen.size()) >=
              static_cast<long long>(prof.delta) * oracle.value)
        ++strict_fail;
    } catch (const std::exception&) {
      ++threshold_fail;
    }

    // Random feasible points: base rate max_{v in E_j} b_v/deg(v), rational
    // upward jitter, clamped at 1. Coverage stays >= demand by construction.
    SplitMix64 rng(substream_seed(opt.seed ^ 0xbead, i));
    for (int rep = 0; rep < 3; ++rep) {
      std::vector<Rational> x(h.num_edges());
      for (int j = 0; j < h.num_edges(); ++j) {
        Rational base(0);
        for (int v : h.edge(j))
          base = std::max(base, make_rational(h.demand(v), h.degree(v)));
        const Rational jitter = make_rational(
            static_cast<long long>(rng.next_in(0, 1000)), 2000);
        x[j] = base + (Rational(1) - base) * jitter;
      }
      for (int v = 0; v < h.num_vertices(); ++v) {
        int cnt1 = 0, cnt2 = 0;
        for (int j : h.incident_edges(v)) {
          if (x[j] >= thr1) ++cnt1;
          if (x[j] >= thr2) ++cnt2;
        }
        if (cnt1 < h.demand(v) || cnt2 < h.demand(v) - 1) ++point_structure_fail;
      }
    }
  }

  const int total = static_cast<int>(corpus.size());
  suite.add("rational-certificates", cert_fail == 0, counts(total, cert_fail));
  suite.add("float-rational-gap", gap_fail == 0, counts(total, gap_fail));
  suite.add("lp-below-integral", optstar_fail == 0,
            counts(total, optstar_fail) + ", " + std::to_string(oracle_timeouts) +
                " oracle timeouts");
  suite.add("threshold-count-per-vertex", count_fail == 0,
            counts(total, count_fail));
  suite.add("strict-threshold-count-per-vertex", strict_count_fail == 0,
            counts(total, strict_count_fail));
  suite.add("partition-mass-inequality", mass_fail == 0, counts(total, mass_fail));
  suite.add("threshold-cover-feasible", threshold_fail == 0,
            counts(total, threshold_fail));
  suite.add("threshold-cover-strict-ratio", strict_fail == 0,
            counts(total, strict_fail));
  suite.add("feasible-point-threshold-structure", point_structure_fail == 0,
            counts(total, point_structure_fail));
  return suite;
}

SuiteResult verify_rounding(const VerifyOptions& opt) {
  SuiteResult suite;
  suite.suite = "rounding";

  long long trigger_fail = 0, feasible_fail = 0, identity_fail = 0, repro_fail = 0;
  long long flags_fail = 0, jobs_mismatch = 0, forced_fail = 0;
  std::string flag_detail;

  for (int i = 0; i < opt.flat_pairs; ++i) {
    GenSpec spec;
    spec.family = Family::Flat;
    spec.n = 40 + 10 * i;
    spec.flat_degree = 8;
    spec.seed = substream_seed(opt.seed ^ 0xf1a7, i);
    FlatInstance flat = generate_flat(spec);
    RoundingParams params = RoundingParams::from(flat.h, spec.seed);

    Alg1Result one = algorithm1_from_point(flat.h, flat.point.x, params);
    if (one.trace.branch != Branch::Randomized) ++trigger_fail;
    if (!is_multicover(flat.h, one.cover).ok) ++feasible_fail;
    if (one.trace.final_size >
        one.trace.x_count + flat.h.num_vertices() - one.trace.y_count)
      ++identity_fail;
    Alg1Result two = algorithm1_from_point(flat.h, flat.point.x, params);
    if (one.cover.chosen != two.cover.chosen) ++repro_fail;

    // The same construction must come out of the search helper.
    FeasiblePoint forced = force_randomized_branch(flat.h);
    if (!forced.found) ++forced_fail;

    StatsReport mc = monte_carlo_verify(flat.h, flat.point.x, params, opt.trials,
                                        substream_seed(opt.seed ^ 0x3c3c, i),
                                        opt.jobs, true);
    StatsReport mc_other =
        monte_carlo_verify(flat.h, flat.point.x, params, opt.trials,
                           substream_seed(opt.seed ^ 0x3c3c, i),
                           opt.jobs == 1 ? 4 : 1, true);
    if (!mc.flags.all() || mc.size_identity_violations != 0) {
      ++flags_fail;
      if (flag_detail.empty()) flag_detail = " first failing report: " + mc.to_json();
    }
    if (mc.to_json() != mc_other.to_json()) ++jobs_mismatch;
  }

  suite.add("flat-pairs-enter-randomized-branch", trigger_fail == 0,
            counts(opt.flat_pairs, trigger_fail));
  suite.add("randomized-cover-feasible", feasible_fail == 0,
            counts(opt.flat_pairs, feasible_fail));
  suite.add("size-identity", identity_fail == 0, counts(opt.flat_pairs, identity_fail));
  suite.add("same-seed-same-cover", repro_fail == 0,
            counts(opt.flat_pairs, repro_fail));
  suite.add("search-helper-finds-flat-point", forced_fail == 0,
            counts(opt.flat_pairs, forced_fail));
  suite.add("monte-carlo-flags",
            flags_fail == 0,
            counts(opt.flat_pairs, flags_fail) + " (" + std::to_string(opt.trials) +
                " trials each)" + flag_detail);
  suite.add("job-count-invariance", jobs_mismatch == 0,
            counts(opt.flat_pairs, jobs_mismatch));
  return suite;
}

SuiteResult verify_ratios(const VerifyOptions& opt) {
  SuiteResult suite;
  suite.suite = "ratios";

  auto random_part = ratio_corpus(opt.seed, opt.count);
  auto gated_part = gated_corpus(opt.seed, opt.near_uniform_count);

  long long alpha_checked = 0, t_checked = 0, det_fail = 0, randomized_runs = 0;
  long long small_delta = 0, infeasible_fail = 0, below_opt_fail = 0;
  long long avg_ratio_fail = 0, avg_ratio_checked = 0, oracle_timeouts = 0;

  auto run_one = [&](const Hypergraph& h, int idx) {
    RoundingParams params =
        RoundingParams::from(h, substream_seed(opt.seed ^ 0xa151, idx));
    LpSolution lp = solve_lp(build_relaxation(h), LpMode::Float);
    Alg1Result res = algorithm1_solve(h, lp, params);
    if (!is_multicover(h, res.cover).ok) ++infeasible_fail;
    OracleResult oracle = exact_min_multicover(h);
    if (!oracle.timed_out &&
        static_cast<long long>(res.cover.chosen.size()) < oracle.value)
      ++below_opt_fail;

    if (res.trace.branch == Branch::Randomized) {
      ++randomized_runs;
    } else if (!res.trace.ratio_claims_applicable) {
      ++small_delta;
    } else {
      const double size = static_cast<double>(res.cover.chosen.size());
      double bound = 0;
      if (res.trace.branch == Branch::DeterministicAlpha) {
        ++alpha_checked;
        bound = (1.0 - (params.b_min - 1) * std::exp(params.delta / 4.0) /
                           (94.0 * params.ell)) *
                params.delta;
      } else {
        ++t_checked;
        bound = 148.0 / 149.0 * params.delta;
      }
      if (size > bound * res.trace.opt_star * (1 + 1e-9) + 1e-9) ++det_fail;
    }

    // Duality cover against the average-degree ratio bound, exact.
    if (oracle.timed_out) {
      ++oracle_timeouts;
      return;
    }
    auto [cover, matching] = duality_cover(h, EdgeOrder::Input);
    ++avg_ratio_checked;
    const Rational ratio = matching_number_bound(h).ratio_bound_default();
    if (Rational(static_cast<long long>(cover.chosen.size())) > ratio * oracle.value)
      ++avg_ratio_fail;
  };

  for (int i = 0; i < static_cast<int>(random_part.size()); ++i)
    run_one(random_part[i].second, i);
  for (int i = 0; i < static_cast<int>(gated_part.size()); ++i)
    run_one(gated_part[i].second, static_cast<int>(random_part.size()) + i);

  // The 5/6 guarantee on the hypothesis-gated corpus.
  long long gated_fail = 0, gated_checked = 0, gated_vs_lp = 0;
  for (const auto& [id, h] : gated_part) {
    NearUniformGate gate = near_uniform_gate(h);
    if (!gate.eligible) continue;
    auto [cover, matching] = duality_cover(h, EdgeOrder::Input);
    const long long size = static_cast<long long>(cover.chosen.size());
    OracleResult oracle = exact_min_multicover(h);
    ++gated_checked;
    if (oracle.timed_out) {
      ++gated_vs_lp;
      LpSolution lp = solve_lp(build_relaxation(h), LpMode::Float);
      const long long ceil_star =
          static_cast<long long>(std::ceil(lp.objective - 1e-6));
      if (Rational(size) > gate.bound * ceil_star) ++gated_fail;
    } else {
      if (Rational(size) > gate.bound * oracle.value) ++gated_fail;
    }
  }

  // Matching-number bound on exhaustively solvable instances.
  long long nu_bound_fail = 0;
  auto tiny = small_corpus(opt.seed ^ 0x60d, std::min(opt.count, 60), 12, 0);
  for (const auto& [id, h] : tiny) {
    CapacityVector k = capacity_vector(h);
    OracleResult nu = exact_max_k_matching(h, k.k, kDefaultOracleBudget,
                                           OracleMethod::Exhaustive);
    OracleResult oc = exact_min_multicover(h, kDefaultOracleBudget,
                                           OracleMethod::Exhaustive);
    if (Rational(nu.value) > matching_number_bound(h).value * oc.value) ++nu_bound_fail;
  }

  const long long det_total = alpha_checked + t_checked;
  suite.add("deterministic-branch-ratios", det_fail == 0 && det_total > 0,
            std::to_string(det_total) + " runs checked (alpha " +
                std::to_string(alpha_checked) + ", t " + std::to_string(t_checked) +
                ", randomized " + std::to_string(randomized_runs) +
                ", small-delta skips " + std::to_string(small_delta) + "), " +
                std::to_string(det_fail) + " failures");
  suite.add("covers-feasible", infeasible_fail == 0,
            counts(static_cast<int>(random_part.size() + gated_part.size()),
                   infeasible_fail));
  suite.add("covers-at-least-opt", below_opt_fail == 0,
            counts(static_cast<int>(random_part.size() + gated_part.size()),
                   below_opt_fail));
  suite.add("duality-ratio-bound", avg_ratio_fail == 0,
            std::to_string(avg_ratio_checked) + " checked, " +
                std::to_string(avg_ratio_fail) + " failures, " +
                std::to_string(oracle_timeouts) + " oracle timeouts");
  suite.add("five-sixths-delta-on-gated", gated_fail == 0 && gated_checked > 0,
            std::to_string(gated_checked) + " checked (" +
                std::to_string(gated_vs_lp) + " vs ceil(lp)), " +
                std::to_string(gated_fail) + " failures");
  suite.add("matching-number-bound", nu_bound_fail == 0,
            counts(static_cast<int>(tiny.size()), nu_bound_fail));
  return suite;
}

std::string suite_to_text(const SuiteResult& s) {
  std::ostringstream out;
  out << "suite " << s.suite << ": " << (s.pass ? "PASS" : "FAIL") << "\n";
  for (const auto& c : s.checks) {
    out << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
  return out.str();
}

std::string suite_to_json(const SuiteResult& s) {
  nlohmann::json j;
  j["suite"] = s.suite;
  j["pass"] = s.pass;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : s.checks)
    arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = std::move(arr);
  return j.dump(2) + "\n";
}

}  // namespace multicover
