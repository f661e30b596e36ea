#pragma once

#include "multicover/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace multicover {

// A hypergraph instance of the set multicover problem: n vertices, an ordered
// list of m hyperedges and a per-vertex demand vector b (each b_i >= 2).
//
// Vertex and edge indices are 0-based in memory; every text/JSON format is
// 1-based. The edge list is a multi-set: equal edges stay distinct objects
// and are never merged. Instances are immutable after construction and safe
// to share across threads; incidence is precomputed both ways.
//
// Construction never rejects data. Structural problems (out-of-range
// vertices, repeated vertices inside one edge, demands below 2, degrees
// below demands) are reported by validate(); all algorithms assume a
// validated instance.
class Hypergraph {
 public:
  Hypergraph(int n, std::vector<std::vector<int>> edges, std::vector<int> demands);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  std::span<const int> edge(int j) const {
    return {edge_flat_.data() + edge_off_[j],
            static_cast<std::size_t>(edge_off_[j + 1] - edge_off_[j])};
  }
  int edge_size(int j) const { return edge_off_[j + 1] - edge_off_[j]; }

  std::span<const int> incident_edges(int v) const {
    return {inc_flat_.data() + inc_off_[v],
            static_cast<std::size_t>(inc_off_[v + 1] - inc_off_[v])};
  }
  int degree(int v) const { return inc_off_[v + 1] - inc_off_[v]; }

  int demand(int v) const { return demands_[v]; }
  const std::vector<int>& demands() const { return demands_; }
  const std::vector<std::vector<int>>& raw_edges() const { return edges_; }

  long long total_incidence() const { return total_incidence_; }

  bool operator==(const Hypergraph& o) const {
    return n_ == o.n_ && edges_ == o.edges_ && demands_ == o.demands_;
  }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> edges_;
  std::vector<int> demands_;
  // CSR incidence, both directions. Out-of-range vertices are kept in
  // edges_ for validate() but excluded from the flattened views.
  std::vector<int> edge_flat_, edge_off_;
  std::vector<int> inc_flat_, inc_off_;
  long long total_incidence_ = 0;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// Checks every instance invariant: n >= 1, m >= 1, indices in range, edges
// are sets, demands >= 2, and deg(v) >= b_v (otherwise no multicover exists).
// Violations are data, not faults.
ValidationReport validate(const Hypergraph& h);

// The seven degree statistics. Averages are exact rationals so that bound
// formulas evaluate exactly; delta = Delta - min(b) + 1.
struct DegreeProfile {
  int delta_max = 0;   // max vertex degree
  Rational delta_bar;  // average vertex degree
  int ell_max = 0;     // max edge size
  Rational ell_bar;    // average edge size
  int b_min = 0;       // min demand
  Rational b_bar;      // average demand
  int delta = 0;       // delta_max - b_min + 1
};

DegreeProfile degree_profile(const Hypergraph& h);

enum class Provenance : std::uint8_t {
  Threshold,
  Alg1Deterministic,
  Alg1Randomized,
  Duality,
  Exact,
};

const char* to_string(Provenance p);

// An edge subset claimed to be a b-multicover. `chosen` is kept sorted and
// duplicate-free (an edge is picked or not).
struct CoverSolution {
  std::vector<int> chosen;
  Provenance provenance = Provenance::Exact;
  std::optional<std::uint64_t> trial_seed;
};

// An edge subset claimed to be a k-matching for the given capacity vector.
struct MatchingSolution {
  std::vector<int> chosen;
  std::vector<int> capacities;
};

struct CoverCheck {
  bool ok = false;
  std::vector<int> slack;  // per vertex: chosen incident count - b_v
};

struct MatchingCheck {
  bool ok = false;
  std::vector<int> load;  // per vertex: chosen incident count
};

CoverCheck is_multicover(const Hypergraph& h, std::span<const int> chosen);
CoverCheck is_multicover(const Hypergraph& h, const CoverSolution& c);

MatchingCheck is_k_matching(const Hypergraph& h, const MatchingSolution& m);
MatchingCheck is_k_matching(const Hypergraph& h, std::span<const int> chosen,
                            std::span<const int> capacities);

// S := E \ M, the covering side of the matching/covering duality.
CoverSolution complement(const Hypergraph& h, const MatchingSolution& m);

// Sorts and deduplicates an index list in place.
void normalize_indices(std::vector<int>& idx);

}  // namespace multicover
