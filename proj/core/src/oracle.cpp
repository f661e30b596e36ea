#include "multicover/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "multicover/lp.hpp"

namespace multicover {

const char* to_string(OracleMethod m) {
  switch (m) {
    case OracleMethod::Auto: return "auto";
    case OracleMethod::Exhaustive: return "exhaustive";
    case OracleMethod::BranchAndBound: return "branch-and-bound";
  }
  return "?";
}

namespace {

std::vector<int> mask_to_indices(unsigned long long mask, int m) {
  std::vector<int> idx;
  for (int j = 0; j < m; ++j)
    if (mask >> j & 1) idx.push_back(j);
  return idx;
}

OracleResult exhaustive_min_cover(const Hypergraph& h) {
  const int m = h.num_edges();
  OracleResult res;
  res.method = OracleMethod::Exhaustive;
  int best = m + 1;
  unsigned long long best_mask = 0;
  std::vector<int> cov(h.num_vertices());
  for (unsigned long long mask = 0; mask < (1ULL << m); ++mask) {
    ++res.explored;
    const int size = __builtin_popcountll(mask);
    if (size >= best) continue;
    std::fill(cov.begin(), cov.end(), 0);
    for (int j = 0; j < m; ++j)
      if (mask >> j & 1)
        for (int v : h.edge(j)) ++cov[v];
    bool ok = true;
    for (int v = 0; v < h.num_vertices(); ++v)
      if (cov[v] < h.demand(v)) {
        ok = false;
        break;
      }
    if (ok) {
      best = size;
      best_mask = mask;
    }
  }
  if (best > m) throw std::invalid_argument("exhaustive oracle: instance infeasible");
  res.value = res.lower_bound = res.upper_bound = best;
  res.witness = mask_to_indices(best_mask, m);
  return res;
}

OracleResult exhaustive_max_matching(const Hypergraph& h, std::span<const int> k) {
  const int m = h.num_edges();
  OracleResult res;
  res.method = OracleMethod::Exhaustive;
  int best = -1;
  unsigned long long best_mask = 0;
  std::vector<int> load(h.num_vertices());
  for (unsigned long long mask = 0; mask < (1ULL << m); ++mask) {
    ++res.explored;
    const int size = __builtin_popcountll(mask);
    if (size <= best) continue;
    std::fill(load.begin(), load.end(), 0);
    bool ok = true;
    for (int j = 0; j < m && ok; ++j)
      if (mask >> j & 1)
        for (int v : h.edge(j))
          if (++load[v] > k[v]) {
            ok = false;
            break;
          }
    if (ok) {
      best = size;
      best_mask = mask;
    }
  }
  res.value = res.lower_bound = res.upper_bound = best;
  res.witness = mask_to_indices(best_mask, m);
  return res;
}

// Greedy incumbent: repeatedly add the edge covering the most residual
// demand, ties by lowest index. Terminates because deg(v) >= b_v.
std::vector<int> greedy_cover(const Hypergraph& h) {
  const int m = h.num_edges();
  std::vector<int> residual(h.num_vertices());
  for (int v = 0; v < h.num_vertices(); ++v) residual[v] = h.demand(v);
  std::vector<char> used(m, 0);
  std::vector<int> chosen;
  while (true) {
    long long total = 0;
    for (int v = 0; v < h.num_vertices(); ++v) total += residual[v];
    if (total == 0) break;
    int best = -1, best_gain = -1;
    for (int j = 0; j < m; ++j) {
      if (used[j]) continue;
      int gain = 0;
      for (int v : h.edge(j))
        if (residual[v] > 0) ++gain;
      if (gain > best_gain) {
        best_gain = gain;
        best = j;
      }
    }
    if (best < 0 || best_gain == 0)
      throw std::invalid_argument("greedy cover: instance infeasible");
    used[best] = 1;
    chosen.push_back(best);
    for (int v : h.edge(best))
      if (residual[v] > 0) --residual[v];
  }
  return chosen;
}

struct CoverBnb {
  const Hypergraph& h;
  long long budget;
  long long explored = 0;
  bool out_of_budget = false;
  int best;
  std::vector<int> best_set;
  int root_lb;
  long long ell;

  std::vector<int> residual;   // remaining demand per vertex
  std::vector<int> avail;      // undecided + chosen incident edges per vertex
  std::vector<char> decided;   // 0 undecided, 1 chosen, 2 excluded
  std::vector<int> chosen_stack;

  CoverBnb(const Hypergraph& hh, long long b, int ub_seed_size,
           const std::vector<int>& ub_seed, int lb)
      : h(hh), budget(b), best(ub_seed_size), best_set(ub_seed), root_lb(lb) {
    residual.resize(h.num_vertices());
    avail.resize(h.num_vertices());
    for (int v = 0; v < h.num_vertices(); ++v) {
      residual[v] = h.demand(v);
      avail[v] = h.degree(v);
    }
    decided.assign(h.num_edges(), 0);
    ell = 1;
    for (int j = 0; j < h.num_edges(); ++j) ell = std::max<long long>(ell, h.edge_size(j));
  }

  // Each uncovered unit at v needs a distinct edge through v, and every edge
  // retires at most ell units in total.
  bool prune(int chosen_count) {
    long long total = 0;
    int max_res = 0;
    for (int v = 0; v < h.num_vertices(); ++v) {
      if (residual[v] > avail[v]) return true;  // demand no longer reachable
      total += std::max(residual[v], 0);
      max_res = std::max(max_res, residual[v]);
    }
    const long long lb_extra =
        std::max<long long>(max_res, (total + ell - 1) / ell);
    return chosen_count + lb_extra >= best;
  }

  bool satisfied() const {
    for (int v = 0; v < h.num_vertices(); ++v)
      if (residual[v] > 0) return false;
    return true;
  }

  int pick_edge() const {
    int best_j = -1, best_gain = -1;
    for (int j = 0; j < h.num_edges(); ++j) {
      if (decided[j]) continue;
      int gain = 0;
      for (int v : h.edge(j))
        if (residual[v] > 0) ++gain;
      if (gain > best_gain) {
        best_gain = gain;
        best_j = j;
      }
    }
    return best_j;
  }

  void dfs() {
    if (out_of_budget) return;
    if (++explored > budget) {
      out_of_budget = true;
      return;
    }
    const int chosen_count = static_cast<int>(chosen_stack.size());
    if (satisfied()) {
      if (chosen_count < best) {
        best = chosen_count;
        best_set = chosen_stack;
      }
      return;
    }
    if (prune(chosen_count)) return;
    if (best == root_lb) return;  // already provably optimal
    const int j = pick_edge();
    if (j < 0) return;

    // Include first: covers trend short.
    decided[j] = 1;
    chosen_stack.push_back(j);
    for (int v : h.edge(j)) --residual[v];
    dfs();
    for (int v : h.edge(j)) ++residual[v];
    chosen_stack.pop_back();

    decided[j] = 2;
    for (int v : h.edge(j)) --avail[v];
    dfs();
    for (int v : h.edge(j)) ++avail[v];
    decided[j] = 0;
  }
};

OracleResult bnb_min_cover(const Hypergraph& h, long long budget) {
  LpSolution lp = solve_lp(build_relaxation(h), LpMode::Float);
  if (lp.status != LpStatus::Optimal)
    throw std::invalid_argument("oracle: instance infeasible");
  // Safety slack keeps a float objective a hair above an integer from
  // rounding the true ceiling up.
  const int root_lb = static_cast<int>(std::ceil(lp.objective - 1e-6));

  std::vector<int> seed_set = greedy_cover(h);
  std::sort(seed_set.begin(), seed_set.end());
  CoverBnb bnb(h, budget, static_cast<int>(seed_set.size()), seed_set, root_lb);
  bnb.dfs();

  OracleResult res;
  res.method = OracleMethod::BranchAndBound;
  res.explored = bnb.explored;
  res.witness = bnb.best_set;
  std::sort(res.witness.begin(), res.witness.end());
  res.upper_bound = bnb.best;
  res.timed_out = bnb.out_of_budget;
  res.lower_bound = res.timed_out ? root_lb : bnb.best;
  res.value = bnb.best;
  return res;
}

struct MatchBnb {
  const Hypergraph& h;
  std::span<const int> k;
  long long budget;
  long long explored = 0;
  bool out_of_budget = false;
  int best = -1;
  std::vector<int> best_set;

  std::vector<int> load;
  std::vector<int> chosen_stack;

  MatchBnb(const Hypergraph& hh, std::span<const int> kk, long long b)
      : h(hh), k(kk), budget(b) {
    load.assign(h.num_vertices(), 0);
  }

  bool fits(int j) const {
    for (int v : h.edge(j))
      if (load[v] + 1 > k[v]) return false;
    return true;
  }

  // Upper bound from position `next`: every addable edge individually, and
  // total residual capacity divided by the smallest remaining edge.
  int upper_from(int next, int chosen_count) {
    int addable = 0;
    int min_size = 0;
    long long cap = 0;
    for (int v = 0; v < h.num_vertices(); ++v) cap += k[v] - load[v];
    for (int j = next; j < h.num_edges(); ++j) {
      if (!fits(j)) continue;
      ++addable;
      if (min_size == 0 || h.edge_size(j) < min_size) min_size = h.edge_size(j);
    }
    long long by_cap = min_size > 0 ? cap / min_size : 0;
    return chosen_count + static_cast<int>(std::min<long long>(addable, by_cap));
  }

  void dfs(int next) {
    if (out_of_budget) return;
    if (++explored > budget) {
      out_of_budget = true;
      return;
    }
    const int chosen_count = static_cast<int>(chosen_stack.size());
    if (chosen_count > best) {
      best = chosen_count;
      best_set = chosen_stack;
    }
    if (next >= h.num_edges()) return;
    if (upper_from(next, chosen_count) <= best) return;

    if (fits(next)) {
      chosen_stack.push_back(next);
      for (int v : h.edge(next)) ++load[v];
      dfs(next + 1);
      for (int v : h.edge(next)) --load[v];
      chosen_stack.pop_back();
    }
    dfs(next + 1);
  }
};

OracleResult bnb_max_matching(const Hypergraph& h, std::span<const int> k,
                              long long budget) {
  MatchBnb bnb(h, k, budget);
  bnb.dfs(0);
  OracleResult res;
  res.method = OracleMethod::BranchAndBound;
  res.explored = bnb.explored;
  res.witness = bnb.best_set;
  std::sort(res.witness.begin(), res.witness.end());
  res.lower_bound = bnb.best;
  res.timed_out = bnb.out_of_budget;
  res.upper_bound = res.timed_out ? h.num_edges() : bnb.best;
  res.value = bnb.best;
  return res;
}

}  // namespace

OracleResult exact_min_multicover(const Hypergraph& h, long long budget,
                                  OracleMethod method) {
  if (method == OracleMethod::Auto)
    method = h.num_edges() <= 12 ? OracleMethod::Exhaustive
                                 : OracleMethod::BranchAndBound;
  if (method == OracleMethod::Exhaustive) {
    if (h.num_edges() > 24)
      throw std::invalid_argument("exhaustive oracle: too many edges");
    return exhaustive_min_cover(h);
  }
  return bnb_min_cover(h, budget);
}

OracleResult exact_max_k_matching(const Hypergraph& h, std::span<const int> k,
                                  long long budget, OracleMethod method) {
  if (static_cast<int>(k.size()) != h.num_vertices())
    throw std::invalid_argument("capacity vector length mismatch");
  for (int v = 0; v < h.num_vertices(); ++v)
    if (k[v] < 0) throw std::invalid_argument("negative capacity");
  if (method == OracleMethod::Auto)
    method = h.num_edges() <= 12 ? OracleMethod::Exhaustive
                                 : OracleMethod::BranchAndBound;
  if (method == OracleMethod::Exhaustive) {
    if (h.num_edges() > 24)
      throw std::invalid_argument("exhaustive oracle: too many edges");
    return exhaustive_max_matching(h, k);
  }
  return bnb_max_matching(h, k, budget);
}

bool duality_crosscheck(const Hypergraph& h, long long budget) {
  std::vector<int> k(h.num_vertices());
  for (int v = 0; v < h.num_vertices(); ++v) {
    k[v] = h.degree(v) - h.demand(v);
    if (k[v] < 0) throw std::invalid_argument("duality_crosscheck: invalid instance");
  }
  OracleResult cover = exact_min_multicover(h, budget);
  OracleResult matching = exact_max_k_matching(h, k, budget);
  if (cover.timed_out || matching.timed_out)
    throw std::runtime_error("duality_crosscheck: oracle budget exhausted");
  if (h.num_edges() - matching.value != cover.value) return false;

  std::vector<char> in_matching(h.num_edges(), 0);
  for (int j : matching.witness) in_matching[j] = 1;
  std::vector<int> complement_set;
  for (int j = 0; j < h.num_edges(); ++j)
    if (!in_matching[j]) complement_set.push_back(j);
  if (static_cast<long long>(complement_set.size()) != cover.value) return false;
  return is_multicover(h, complement_set).ok;
}

}  // namespace multicover
