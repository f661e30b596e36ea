#include "multicover/generator.hpp"

#include <algorithm>
#include <string>

#include "multicover/rng.hpp"

namespace multicover {

const char* to_string(Family f) {
  switch (f) {
    case Family::Random: return "random";
    case Family::Uniform: return "uniform";
    case Family::NearUniform: return "near-uniform";
    case Family::Flat: return "flat";
  }
  return "?";
}

Family family_from_string(const std::string& s) {
  if (s == "random") return Family::Random;
  if (s == "uniform") return Family::Uniform;
  if (s == "near-uniform") return Family::NearUniform;
  if (s == "flat") return Family::Flat;
  throw GenerationError("unknown family: " + s);
}

namespace {

void check_spec(const GenSpec& spec) {
  if (spec.n < 1) throw GenerationError("n must be >= 1");
  if (spec.m < 1) throw GenerationError("m must be >= 1");
  if (spec.ell_min < 1 || spec.ell_min > spec.ell_max || spec.ell_max > spec.n)
    throw GenerationError("edge size range must satisfy 1 <= ell_min <= ell_max <= n");
  if (spec.b_lo < 2 || spec.b_lo > spec.b_hi)
    throw GenerationError("demand range must satisfy 2 <= b_lo <= b_hi");
  if (spec.constraints.demand_at_least_3 && spec.b_lo < 3)
    throw GenerationError("demand_at_least_3 requires b_lo >= 3");
}

std::vector<int> sample_distinct(SplitMix64& rng, int size, int n) {
  std::vector<int> edge;
  edge.reserve(size);
  while (static_cast<int>(edge.size()) < size) {
    const int v = static_cast<int>(rng.next_in(0, n - 1));
    if (std::find(edge.begin(), edge.end(), v) == edge.end()) edge.push_back(v);
  }
  std::sort(edge.begin(), edge.end());
  return edge;
}

struct Attempt {
  Hypergraph h;
  std::string failure;  // empty on success
};

Attempt attempt_generate(const GenSpec& spec, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const bool uniform = spec.family == Family::Uniform;
  auto pick_size = [&] {
    return uniform ? spec.ell_max
                   : spec.ell_min + static_cast<int>(rng.next_in(
                                        0, spec.ell_max - spec.ell_min));
  };

  std::vector<std::vector<int>> edges;
  edges.reserve(spec.m);
  for (int j = 0; j < spec.m; ++j)
    edges.push_back(sample_distinct(rng, pick_size(), spec.n));

  std::vector<int> demands(spec.n);
  for (int v = 0; v < spec.n; ++v)
    demands[v] = spec.b_lo + static_cast<int>(rng.next_in(0, spec.b_hi - spec.b_lo));

  // Raise deficient degrees with targeted edges instead of resampling the
  // whole instance; each pass covers up to ell deficient vertices at once.
  std::vector<int> deg(spec.n, 0);
  for (const auto& e : edges)
    for (int v : e) ++deg[v];
  while (true) {
    std::vector<int> deficient;
    for (int v = 0; v < spec.n; ++v)
      if (deg[v] < demands[v]) deficient.push_back(v);
    if (deficient.empty()) break;
    const int size = pick_size();
    std::vector<int> edge(deficient.begin(),
                          deficient.begin() + std::min<std::size_t>(size, deficient.size()));
    while (static_cast<int>(edge.size()) < size) {
      const int v = static_cast<int>(rng.next_in(0, spec.n - 1));
      if (std::find(edge.begin(), edge.end(), v) == edge.end()) edge.push_back(v);
    }
    std::sort(edge.begin(), edge.end());
    for (int v : edge) ++deg[v];
    edges.push_back(std::move(edge));
  }

  Hypergraph h(spec.n, std::move(edges), std::move(demands));
  auto rep = validate(h);
  if (!rep.ok) return {std::move(h), "validation failed: " + rep.violations.front()};

  auto prof = degree_profile(h);
  if (spec.constraints.demand_at_least_3 && prof.b_min < 3)
    return {std::move(h), "b_min below 3"};
  if (spec.constraints.degree_gap_2 && prof.delta_max < prof.b_min + 2)
    return {std::move(h), "max degree below b_min + 2"};
  if (spec.family == Family::NearUniform || spec.family == Family::Uniform) {
    const Rational lhs(prof.ell_max);
    const Rational rhs = (Rational(1) + spec.epsilon) * prof.ell_bar;
    if (lhs > rhs)
      return {std::move(h), "near-uniform spread violated: ell = " +
                                std::to_string(prof.ell_max) + ", (1+eps)*avg = " +
                                rational_to_string(rhs)};
  }
  return {std::move(h), ""};
}

}  // namespace

Hypergraph generate(const GenSpec& spec) {
  check_spec(spec);
  if (spec.family == Family::Flat) return generate_flat(spec).h;
  std::string last_failure = "no attempts made";
  for (int attempt = 0; attempt < std::max(1, spec.retries); ++attempt) {
    Attempt a = attempt_generate(spec, substream_seed(spec.seed, attempt));
    if (a.failure.empty()) return std::move(a.h);
    last_failure = a.failure;
  }
  throw GenerationError("generation failed after " +
                        std::to_string(std::max(1, spec.retries)) +
                        " attempts; last: " + last_failure);
}

FlatInstance generate_flat(const GenSpec& spec) {
  const int n = spec.n;
  const int p = spec.flat_degree;
  if (p < 8)
    throw GenerationError(
        "flat family needs flat_degree >= 8: below that the alpha test "
        "(p*e^{p/4} > 47) fires and the run goes deterministic");
  if (static_cast<long long>(n) * p <= kDefaultT)
    throw GenerationError(
        "flat family needs n * flat_degree > 73 so the t test cannot fire");

  std::vector<std::vector<int>> edges;
  edges.reserve(1 + static_cast<std::size_t>(n) * p);
  std::vector<int> hub(n);
  for (int v = 0; v < n; ++v) hub[v] = v;
  edges.push_back(std::move(hub));
  for (int v = 0; v < n; ++v)
    for (int c = 0; c < p; ++c) edges.push_back({v});

  FlatInstance out{Hypergraph(n, std::move(edges), std::vector<int>(n, 2)), {}};
  auto rep = validate(out.h);
  if (!rep.ok)
    throw GenerationError("flat construction invalid: " + rep.violations.front());

  out.point.found = true;
  out.point.x_exact.assign(out.h.num_edges(), make_rational(1, p));
  out.point.x_exact[0] = 1;
  out.point.x.resize(out.h.num_edges());
  for (int j = 0; j < out.h.num_edges(); ++j)
    out.point.x[j] = to_double(out.point.x_exact[j]);

  // Postcondition recheck: the emitted point must defeat both deterministic
  // tests and cover every demand.
  RoundingParams params = RoundingParams::from(out.h);
  Partition part = make_partition_exact(out.point.x_exact, params);
  const double obj = n + 1;
  if (part.c1.size() != 1 ||
      part.c2.size() != static_cast<std::size_t>(n) * p ||
      static_cast<double>(part.c1.size()) >= params.alpha * obj - kThresholdEps ||
      static_cast<long long>(params.t) * part.c1.size() >= part.c2.size())
    throw GenerationError("flat construction failed its branch-trigger recheck");
  for (int v = 0; v < n; ++v)
    if (out.h.degree(v) != p + 1)
      throw GenerationError("flat construction degree mismatch");
  return out;
}

}  // namespace multicover
