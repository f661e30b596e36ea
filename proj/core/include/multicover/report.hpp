#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "multicover/hypergraph.hpp"
#include "multicover/oracle.hpp"

namespace multicover {

enum class Algo : std::uint8_t { Threshold, Alg1, Duality, Exact };

const char* to_string(Algo a);
Algo algo_from_string(const std::string& s);

// One (instance, algorithm) outcome with the matching per-instance bound.
// `bound` is a ratio against `bound_basis` ("opt" for oracle-exact values,
// "opt_star" for LP objectives, "ceil_opt_star" for the conservative check
// used when the oracle times out). wall_ms stays 0 unless timings were
// requested, so reports are byte-stable across machines.
struct RatioRow {
  std::string instance;
  std::string algorithm;
  std::string branch;  // algorithm-1 branch, empty otherwise
  long long size = 0;
  long long opt = 0;  // oracle value; best lower bound when !opt_is_exact
  bool opt_is_exact = false;
  double opt_star = 0;
  double ratio_opt = 0;  // 0 when opt is not exact
  double ratio_opt_star = 0;
  int delta = 0;
  std::string bound_name;
  double bound = 0;
  std::string bound_basis;
  bool bound_applicable = false;
  bool bound_satisfied = false;
  std::string aux_bound_name;
  double aux_bound = 0;
  std::uint64_t seed = 0;
  long long wall_ms = 0;
};

RatioRow solve_one(const Hypergraph& h, const std::string& instance_id, Algo algo,
                   std::uint64_t seed, bool exact_lp, long long oracle_budget,
                   bool timings);

struct BenchOptions {
  std::vector<Algo> algorithms = {Algo::Threshold, Algo::Alg1, Algo::Duality};
  std::uint64_t seed = 0;
  int jobs = 1;
  bool exact_lp = false;
  bool timings = false;
  long long oracle_budget = kDefaultOracleBudget;
  int roundtrip_rows = 10;
};

struct BenchReport {
  std::vector<RatioRow> rows;
  std::string summary;      // aggregate text block, deterministic
  bool roundtrip_ok = true; // sampled rows recomputed from scratch and compared
};

// One row per (instance, algorithm), ordered by corpus position then by the
// algorithm list; per-row seeds are substreams of options.seed, so output is
// identical for every job count.
BenchReport bench_run(const std::vector<std::pair<std::string, Hypergraph>>& corpus,
                      const BenchOptions& options);

extern const char* const kCsvHeader;

std::string rows_to_csv(const std::vector<RatioRow>& rows);
std::string rows_to_json(const std::vector<RatioRow>& rows);
std::string row_to_text(const RatioRow& row);

}  // namespace multicover
