#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "multicover/hypergraph.hpp"

namespace multicover {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  bool pass = true;

  void add(std::string name, bool ok, std::string detail = "");
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  int count = 100;               // main corpus size
  int near_uniform_count = 25;   // gated corpus size (ratios suite)
  int flat_pairs = 3;            // flat pairs (rounding suite)
  long long trials = 2000;       // Monte-Carlo trials per pair
  int jobs = 1;
  int max_m = 12;                // exhaustive ceiling (duality suite)
};

// Deterministic corpora, named and ordered by substream index.
std::vector<std::pair<std::string, Hypergraph>> small_corpus(std::uint64_t seed,
                                                             int count, int max_m,
                                                             int dup_every = 10);
std::vector<std::pair<std::string, Hypergraph>> lemma_corpus(std::uint64_t seed,
                                                             int count);
std::vector<std::pair<std::string, Hypergraph>> ratio_corpus(std::uint64_t seed,
                                                             int count);
std::vector<std::pair<std::string, Hypergraph>> gated_corpus(std::uint64_t seed,
                                                             int count);

// Matching/cover complementarity, exhaustive over all edge subsets, plus the
// cardinality identity and the greedy matching guarantees.
SuiteResult verify_duality(const VerifyOptions& opt);

// Rational LP certificates, float agreement, threshold structure at optima
// and at random feasible points, and the threshold cover guarantee.
SuiteResult verify_lemmas(const VerifyOptions& opt);

// Flat-family randomized rounding: trigger, feasibility, the size identity,
// Monte-Carlo statistics flags, and cross-job reproducibility.
SuiteResult verify_rounding(const VerifyOptions& opt);

// Per-branch deterministic ratios, the duality cover bounds, and the
// matching-number bound, against oracle optima.
SuiteResult verify_ratios(const VerifyOptions& opt);

std::string suite_to_text(const SuiteResult& s);
std::string suite_to_json(const SuiteResult& s);

}  // namespace multicover
