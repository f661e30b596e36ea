#include "multicover/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace multicover {

Hypergraph::Hypergraph(int n, std::vector<std::vector<int>> edges,
                       std::vector<int> demands)
    : n_(n), edges_(std::move(edges)), demands_(std::move(demands)) {
  const int m = static_cast<int>(edges_.size());
  edge_off_.assign(m + 1, 0);
  inc_off_.assign(std::max(n_, 0) + 1, 0);

  for (int j = 0; j < m; ++j) {
    int in_range = 0;
    for (int v : edges_[j]) {
      if (v >= 0 && v < n_) {
        ++in_range;
        ++inc_off_[v + 1];
      }
    }
    edge_off_[j + 1] = edge_off_[j] + in_range;
  }
  for (int v = 0; v < n_; ++v) inc_off_[v + 1] += inc_off_[v];

  edge_flat_.resize(edge_off_[m]);
  inc_flat_.resize(n_ >= 0 ? inc_off_[n_] : 0);
  std::vector<int> cursor(inc_off_.begin(), inc_off_.end() - 1);
  int pos = 0;
  for (int j = 0; j < m; ++j) {
    for (int v : edges_[j]) {
      if (v >= 0 && v < n_) {
        edge_flat_[pos++] = v;
        inc_flat_[cursor[v]++] = j;
      }
    }
  }
  total_incidence_ = static_cast<long long>(edge_flat_.size());
}

ValidationReport validate(const Hypergraph& h) {
  ValidationReport rep;
  auto flag = [&rep](const std::string& msg) {
    rep.ok = false;
    rep.violations.push_back(msg);
  };

  if (h.num_vertices() < 1) flag("n must be >= 1");
  if (h.num_edges() < 1) flag("m must be >= 1");
  if (static_cast<int>(h.demands().size()) != h.num_vertices())
    flag("demand vector length != n");

  const auto& edges = h.raw_edges();
  for (int j = 0; j < static_cast<int>(edges.size()); ++j) {
    const auto& e = edges[j];
    if (e.empty()) {
      std::ostringstream os;
      os << "edge " << j + 1 << " is empty";
      flag(os.str());
      continue;
    }
    std::set<int> seen;
    for (int v : e) {
      if (v < 0 || v >= h.num_vertices()) {
        std::ostringstream os;
        os << "edge " << j + 1 << ": vertex " << v + 1 << " out of range [1, "
           << h.num_vertices() << "]";
        flag(os.str());
      } else if (!seen.insert(v).second) {
        std::ostringstream os;
        os << "edge " << j + 1 << ": vertex " << v + 1 << " repeated within the edge";
        flag(os.str());
      }
    }
  }

  for (int v = 0; v < h.num_vertices() && v < static_cast<int>(h.demands().size()); ++v) {
    if (h.demand(v) < 2) {
      std::ostringstream os;
      os << "demand b_" << v + 1 << "=" << h.demand(v) << " below 2";
      flag(os.str());
    }
    if (h.degree(v) < h.demand(v)) {
      std::ostringstream os;
      os << "deg(v" << v + 1 << ")=" << h.degree(v) << " < b_" << v + 1 << "="
         << h.demand(v);
      flag(os.str());
    }
  }
  return rep;
}

DegreeProfile degree_profile(const Hypergraph& h) {
  DegreeProfile p;
  const int n = h.num_vertices();
  const int m = h.num_edges();
  long long deg_sum = 0;
  for (int v = 0; v < n; ++v) {
    p.delta_max = std::max(p.delta_max, h.degree(v));
    deg_sum += h.degree(v);
  }
  long long size_sum = 0;
  for (int j = 0; j < m; ++j) {
    p.ell_max = std::max(p.ell_max, h.edge_size(j));
    size_sum += h.edge_size(j);
  }
  long long b_sum = 0;
  p.b_min = h.demand(0);
  for (int v = 0; v < n; ++v) {
    p.b_min = std::min(p.b_min, h.demand(v));
    b_sum += h.demand(v);
  }
  p.delta_bar = make_rational(deg_sum, n);
  p.ell_bar = make_rational(size_sum, m);
  p.b_bar = make_rational(b_sum, n);
  p.delta = p.delta_max - p.b_min + 1;
  return p;
}

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Threshold: return "threshold";
    case Provenance::Alg1Deterministic: return "alg1-deterministic";
    case Provenance::Alg1Randomized: return "alg1-randomized";
    case Provenance::Duality: return "duality";
    case Provenance::Exact: return "exact";
  }
  return "?";
}

void normalize_indices(std::vector<int>& idx) {
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
}

CoverCheck is_multicover(const Hypergraph& h, std::span<const int> chosen) {
  CoverCheck res;
  std::vector<int> count(h.num_vertices(), 0);
  for (int j : chosen)
    for (int v : h.edge(j)) ++count[v];
  res.ok = true;
  res.slack.resize(h.num_vertices());
  for (int v = 0; v < h.num_vertices(); ++v) {
    res.slack[v] = count[v] - h.demand(v);
    if (res.slack[v] < 0) res.ok = false;
  }
  return res;
}

CoverCheck is_multicover(const Hypergraph& h, const CoverSolution& c) {
  return is_multicover(h, std::span<const int>(c.chosen));
}

MatchingCheck is_k_matching(const Hypergraph& h, std::span<const int> chosen,
                            std::span<const int> capacities) {
  MatchingCheck res;
  res.load.assign(h.num_vertices(), 0);
  for (int j : chosen)
    for (int v : h.edge(j)) ++res.load[v];
  res.ok = true;
  for (int v = 0; v < h.num_vertices(); ++v)
    if (res.load[v] > capacities[v]) res.ok = false;
  return res;
}

MatchingCheck is_k_matching(const Hypergraph& h, const MatchingSolution& m) {
  return is_k_matching(h, m.chosen, m.capacities);
}

CoverSolution complement(const Hypergraph& h, const MatchingSolution& m) {
  CoverSolution cover;
  cover.provenance = Provenance::Duality;
  std::vector<char> in(h.num_edges(), 0);
  for (int j : m.chosen) in[j] = 1;
  for (int j = 0; j < h.num_edges(); ++j)
    if (!in[j]) cover.chosen.push_back(j);
  return cover;
}

}  // namespace multicover
