#include "multicover/matching.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "multicover/rng.hpp"

namespace multicover {

CapacityVector capacity_vector(const Hypergraph& h) {
  CapacityVector kv;
  kv.k.resize(h.num_vertices());
  for (int v = 0; v < h.num_vertices(); ++v) {
    const int k = h.degree(v) - h.demand(v);
    if (k < 0)
      throw std::invalid_argument("capacity_vector: vertex " + std::to_string(v + 1) +
                                  " has degree below its demand");
    kv.k[v] = k;
  }
  return kv;
}

const char* to_string(EdgeOrder o) {
  switch (o) {
    case EdgeOrder::Input: return "input";
    case EdgeOrder::SizeIncreasing: return "size-increasing";
    case EdgeOrder::SeededRandom: return "seeded-random";
  }
  return "?";
}

std::vector<int> edge_ordering(const Hypergraph& h, EdgeOrder order,
                               std::uint64_t seed) {
  std::vector<int> idx(h.num_edges());
  std::iota(idx.begin(), idx.end(), 0);
  switch (order) {
    case EdgeOrder::Input:
      break;
    case EdgeOrder::SizeIncreasing:
      std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        return h.edge_size(a) < h.edge_size(b);
      });
      break;
    case EdgeOrder::SeededRandom: {
      SplitMix64 rng(seed);
      for (int i = h.num_edges() - 1; i > 0; --i)
        std::swap(idx[i], idx[rng.next_in(0, i)]);
      break;
    }
  }
  return idx;
}

MatchingSolution greedy_k_matching(const Hypergraph& h, const CapacityVector& k,
                                   const std::vector<int>& order) {
  MatchingSolution m;
  m.capacities = k.k;
  std::vector<int> load(h.num_vertices(), 0);
  for (int j : order) {
    bool fits = true;
    for (int v : h.edge(j)) {
      if (load[v] + 1 > k.k[v]) {
        fits = false;
        break;
      }
    }
    if (!fits) continue;
    m.chosen.push_back(j);
    for (int v : h.edge(j)) ++load[v];
  }
  normalize_indices(m.chosen);
  return m;
}

MatchingSolution greedy_k_matching(const Hypergraph& h, const CapacityVector& k,
                                   EdgeOrder order, std::uint64_t seed) {
  return greedy_k_matching(h, k, edge_ordering(h, order, seed));
}

std::pair<CoverSolution, MatchingSolution> duality_cover(const Hypergraph& h,
                                                         EdgeOrder order,
                                                         std::uint64_t seed) {
  MatchingSolution m = greedy_k_matching(h, capacity_vector(h), order, seed);
  CoverSolution s = complement(h, m);
  s.provenance = Provenance::Duality;
  return {std::move(s), std::move(m)};
}

Rational DualityBound::ratio_bound(const Rational& r) const {
  const Rational full = (delta_bar * ell) / (b_bar * ell_bar);
  return (Rational(1) - r) * full + r;
}

Rational DualityBound::ratio_bound_default() const {
  return ratio_bound(make_rational(1, ell));
}

DualityBound matching_number_bound(const Hypergraph& h) {
  auto prof = degree_profile(h);
  DualityBound b;
  b.delta_bar = prof.delta_bar;
  b.b_bar = prof.b_bar;
  b.ell_bar = prof.ell_bar;
  b.ell = prof.ell_max;
  b.value = (prof.delta_bar / prof.b_bar) * (Rational(prof.ell_max) / prof.ell_bar) -
            Rational(1);
  return b;
}

NearUniformGate near_uniform_gate(const Hypergraph& h, const Rational& eps) {
  auto prof = degree_profile(h);
  NearUniformGate g;
  g.demand_ok = prof.b_min >= 3;
  g.degree_ok = prof.delta_max >= prof.b_min + 2;
  g.spread_ok = Rational(prof.ell_max) <= (Rational(1) + eps) * prof.ell_bar;
  g.eligible = g.demand_ok && g.degree_ok && g.spread_ok;
  g.bound = make_rational(5, 6) * prof.delta;
  g.refined_bound =
      (make_rational(5, 6) - make_rational(1, 2 * prof.ell_max)) * prof.delta;
  return g;
}

}  // namespace multicover
