// multicover: solve / gen / verify / bench front end over the core library.
// Exit codes: 0 success, 1 usage, 2 parse/validation, 3 infeasible,
// 4 property failure, 5 oracle timeout.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "multicover/generator.hpp"
#include "multicover/hypergraph.hpp"
#include "multicover/io.hpp"
#include "multicover/rational.hpp"
#include "multicover/report.hpp"
#include "multicover/rng.hpp"
#include "multicover/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitProperty = 4;
constexpr int kExitTimeout = 5;

struct GlobalFlags {
  std::uint64_t seed = 0;
  std::string format = "text";
  bool exact_lp = false;
  int jobs = 1;
};

// Deficient vertices make the demands unsatisfiable; that is exit 3, not a
// validation error, and the message names the first such vertex.
int reject_bad_instance(const multicover::Hypergraph& h) {
  auto rep = multicover::validate(h);
  std::vector<int> deficient;
  for (int v = 0; v < h.num_vertices(); ++v)
    if (h.degree(v) < h.demand(v)) deficient.push_back(v);
  if (rep.violations.size() > deficient.size()) {
    std::cerr << "error: invalid instance\n";
    for (const auto& msg : rep.violations) std::cerr << "  " << msg << "\n";
    return kExitParse;
  }
  if (!deficient.empty()) {
    const int v = deficient.front();
    std::cerr << "error: infeasible instance: vertex " << v + 1
              << " has degree " << h.degree(v) << " < demand " << h.demand(v)
              << "\n";
    return kExitInfeasible;
  }
  return kExitOk;
}

// Corpus = every .txt/.json instance in the directory, ordered by stem;
// paired text/JSON files count once (text wins), manifests and emitted
// fractional points are skipped.
std::vector<std::pair<std::string, multicover::Hypergraph>> load_corpus(
    const fs::path& dir) {
  std::map<std::string, fs::path> picks;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const fs::path& p = entry.path();
    const std::string ext = p.extension().string();
    if (ext != ".txt" && ext != ".json") continue;
    const std::string name = p.filename().string();
    if (name == "manifest.json" || name.ends_with(".point.json")) continue;
    const std::string stem = p.stem().string();
    auto it = picks.find(stem);
    if (it == picks.end() || ext == ".txt") picks[stem] = p;
  }
  std::vector<std::pair<std::string, multicover::Hypergraph>> corpus;
  corpus.reserve(picks.size());
  for (const auto& [stem, path] : picks)
    corpus.emplace_back(stem, multicover::read_instance(path));
  return corpus;
}

json spec_to_json(const multicover::GenSpec& spec) {
  json j;
  j["family"] = multicover::to_string(spec.family);
  j["n"] = spec.n;
  j["m"] = spec.m;
  j["ell_min"] = spec.ell_min;
  j["ell_max"] = spec.ell_max;
  j["b_lo"] = spec.b_lo;
  j["b_hi"] = spec.b_hi;
  j["epsilon"] = multicover::rational_to_string(spec.epsilon);
  j["demand_at_least_3"] = spec.constraints.demand_at_least_3;
  j["degree_gap_2"] = spec.constraints.degree_gap_2;
  j["flat_degree"] = spec.flat_degree;
  j["seed"] = spec.seed;
  return j;
}

multicover::Rational parse_rational_arg(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos)
    return multicover::make_rational(std::stoll(s), 1);
  return multicover::make_rational(std::stoll(s.substr(0, slash)),
                                   std::stoll(s.substr(slash + 1)));
}

int run_solve(const GlobalFlags& g, const std::string& path,
              const std::string& algo_name, long long oracle_budget,
              bool timings) {
  multicover::Hypergraph h = multicover::read_instance(path);
  if (int rc = reject_bad_instance(h); rc != kExitOk) return rc;
  const multicover::Algo algo = multicover::algo_from_string(algo_name);
  multicover::RatioRow row =
      multicover::solve_one(h, fs::path(path).stem().string(), algo, g.seed,
                            g.exact_lp, oracle_budget, timings);
  if (g.format == "json")
    std::cout << multicover::rows_to_json({row}) << "\n";
  else
    std::cout << multicover::row_to_text(row) << "\n";
  return row.opt_is_exact ? kExitOk : kExitTimeout;
}

int run_gen(const GlobalFlags& g, multicover::GenSpec spec, int count,
            const fs::path& out_dir) {
  fs::create_directories(out_dir);
  json manifest;
  manifest["seed"] = g.seed;
  manifest["count"] = count;
  manifest["instances"] = json::array();

  std::vector<std::string> written;
  for (int i = 0; i < count; ++i) {
    spec.seed = multicover::substream_seed(g.seed, static_cast<std::uint64_t>(i));
    std::ostringstream name;
    name << multicover::to_string(spec.family) << "-" << std::setw(3)
         << std::setfill('0') << i;
    const fs::path base = out_dir / name.str();

    json entry;
    entry["file"] = name.str() + ".txt";
    entry["json"] = name.str() + ".json";
    entry["spec"] = spec_to_json(spec);

    if (spec.family == multicover::Family::Flat) {
      multicover::FlatInstance flat = multicover::generate_flat(spec);
      multicover::write_instance_files(base, flat.h);
      json pt;
      pt["x"] = flat.point.x;
      std::vector<std::string> exact;
      exact.reserve(flat.point.x_exact.size());
      for (const auto& r : flat.point.x_exact)
        exact.push_back(multicover::rational_to_string(r));
      pt["x_exact"] = exact;
      const fs::path point_path = out_dir / (name.str() + ".point.json");
      std::ofstream pf(point_path);
      pf << pt.dump(2) << "\n";
      entry["point"] = name.str() + ".point.json";
      written.push_back(point_path.filename().string());
    } else {
      multicover::Hypergraph h = multicover::generate(spec);
      multicover::write_instance_files(base, h);
    }
    written.push_back(name.str() + ".txt");
    written.push_back(name.str() + ".json");
    manifest["instances"].push_back(entry);
  }

  const fs::path manifest_path = out_dir / "manifest.json";
  {
    std::ofstream mf(manifest_path);
    mf << manifest.dump(2) << "\n";
  }
  if (g.format == "json") {
    std::cout << manifest.dump(2) << "\n";
  } else {
    for (const auto& f : written) std::cout << "wrote " << (out_dir / f).string() << "\n";
    std::cout << "wrote " << manifest_path.string() << "\n";
  }
  return kExitOk;
}

int run_verify(const GlobalFlags& g, const std::string& suite,
               const multicover::VerifyOptions& opt) {
  std::vector<multicover::SuiteResult> results;
  if (suite == "duality" || suite == "all")
    results.push_back(multicover::verify_duality(opt));
  if (suite == "lemmas" || suite == "all")
    results.push_back(multicover::verify_lemmas(opt));
  if (suite == "rounding" || suite == "all")
    results.push_back(multicover::verify_rounding(opt));
  if (suite == "ratios" || suite == "all")
    results.push_back(multicover::verify_ratios(opt));

  bool all_pass = true;
  if (g.format == "json") {
    std::string sep;
    std::cout << "[";
    for (const auto& r : results) {
      std::cout << sep << multicover::suite_to_json(r);
      sep = ",";
      all_pass = all_pass && r.pass;
    }
    std::cout << "]\n";
  } else {
    for (const auto& r : results) {
      std::cout << multicover::suite_to_text(r);
      all_pass = all_pass && r.pass;
    }
  }
  return all_pass ? kExitOk : kExitProperty;
}

int run_bench(const GlobalFlags& g, const fs::path& corpus_dir,
              const std::vector<std::string>& algo_names,
              const fs::path& out_base, bool timings, long long oracle_budget) {
  auto corpus = load_corpus(corpus_dir);
  multicover::BenchOptions options;
  options.algorithms.clear();
  for (const auto& name : algo_names)
    options.algorithms.push_back(multicover::algo_from_string(name));
  options.seed = g.seed;
  options.jobs = g.jobs;
  options.exact_lp = g.exact_lp;
  options.timings = timings;
  options.oracle_budget = oracle_budget;

  if (corpus.empty())
    std::cerr << "warning: corpus directory " << corpus_dir.string()
              << " holds no instances; writing an empty report\n";

  multicover::BenchReport report = multicover::bench_run(corpus, options);

  const fs::path csv_path = out_base.string() + ".csv";
  const fs::path json_path = out_base.string() + ".json";
  if (out_base.has_parent_path()) fs::create_directories(out_base.parent_path());
  {
    std::ofstream cf(csv_path);
    cf << multicover::rows_to_csv(report.rows);
  }
  {
    std::ofstream jf(json_path);
    jf << multicover::rows_to_json(report.rows) << "\n";
  }

  if (g.format == "json") {
    json j;
    j["rows"] = report.rows.size();
    j["csv"] = csv_path.string();
    j["json"] = json_path.string();
    j["roundtrip_ok"] = report.roundtrip_ok;
    j["summary"] = report.summary;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "wrote " << csv_path.string() << " (" << report.rows.size()
              << " rows)\n";
    std::cout << "wrote " << json_path.string() << "\n";
    std::cout << report.summary;
    std::cout << "roundtrip: " << (report.roundtrip_ok ? "ok" : "FAILED")
              << "\n";
  }
  return report.roundtrip_ok ? kExitOk : kExitProperty;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"set multicover toolkit: LP-guided rounding, matching duality, "
               "exact oracles, generators, and benchmark reports"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  app.add_option("--seed", g.seed, "RNG seed (env MULTICOVER_SEED)")
      ->envname("MULTICOVER_SEED");
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--exact-lp", g.exact_lp, "solve LPs in exact rational mode");
  app.add_option("--jobs", g.jobs, "worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  // solve
  auto* solve = app.add_subcommand("solve", "solve one instance, print a ratio report");
  std::string solve_path;
  std::string solve_algo = "alg1";
  long long solve_budget = multicover::kDefaultOracleBudget;
  bool solve_timings = false;
  solve->add_option("instance", solve_path, "instance file (.txt or .json)")
      ->required()
      ->check(CLI::ExistingFile);
  solve->add_option("--algo", solve_algo, "algorithm")
      ->check(CLI::IsMember({"threshold", "alg1", "duality", "exact"}))
      ->capture_default_str();
  solve->add_option("--oracle-budget", solve_budget, "branch-and-bound node budget");
  solve->add_flag("--timings", solve_timings, "record wall time per row");

  // gen
  auto* gen = app.add_subcommand("gen", "generate instances plus a manifest");
  multicover::GenSpec spec;
  std::string gen_family = "random";
  std::string gen_epsilon = "1/2";
  int gen_count = 1;
  std::string gen_out = "corpus";
  gen->add_option("--family", gen_family, "instance family")
      ->check(CLI::IsMember({"random", "uniform", "near-uniform", "flat"}))
      ->capture_default_str();
  gen->add_option("--n", spec.n, "vertices")->check(CLI::PositiveNumber)->capture_default_str();
  gen->add_option("--m", spec.m, "edges (minimum; repair may add more)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  gen->add_option("--ell-min", spec.ell_min, "smallest edge size")->capture_default_str();
  gen->add_option("--ell-max", spec.ell_max, "largest edge size")->capture_default_str();
  gen->add_option("--b-lo", spec.b_lo, "smallest demand")->capture_default_str();
  gen->add_option("--b-hi", spec.b_hi, "largest demand")->capture_default_str();
  gen->add_option("--epsilon", gen_epsilon,
                  "near-uniform spread bound, ell <= (1+eps)*avg (p/q or int)")
      ->capture_default_str();
  gen->add_option("--flat-degree", spec.flat_degree,
                  "flat family: private edges per vertex (>= 8)")
      ->capture_default_str();
  bool gen_b3 = false, gen_gap2 = false;
  gen->add_flag("--require-demand-3", gen_b3, "only emit instances with b >= 3");
  gen->add_flag("--require-degree-gap", gen_gap2,
                "only emit instances with max degree >= b_min + 2");
  gen->add_option("--count", gen_count, "instances to emit")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  gen->add_option("--out", gen_out, "output directory")->capture_default_str();

  // verify
  auto* verify = app.add_subcommand("verify", "run a property suite");
  std::string verify_suite;
  multicover::VerifyOptions vopt;
  verify->add_option("suite", verify_suite, "duality|lemmas|rounding|ratios|all")
      ->required()
      ->check(CLI::IsMember({"duality", "lemmas", "rounding", "ratios", "all"}));
  verify->add_option("--count", vopt.count, "main corpus size")->capture_default_str();
  verify->add_option("--near-uniform-count", vopt.near_uniform_count,
                     "gated corpus size (ratios suite)")
      ->capture_default_str();
  verify->add_option("--flat-pairs", vopt.flat_pairs, "flat pairs (rounding suite)")
      ->capture_default_str();
  verify->add_option("--trials", vopt.trials, "Monte-Carlo trials per pair")
      ->capture_default_str();
  verify->add_option("--max-m", vopt.max_m, "exhaustive ceiling (duality suite)")
      ->capture_default_str();

  // bench
  auto* bench = app.add_subcommand("bench", "run a corpus, write CSV + JSON reports");
  std::string bench_dir;
  std::vector<std::string> bench_algos = {"threshold", "alg1", "duality"};
  std::string bench_out = "bench_report";
  bool bench_timings = false;
  long long bench_budget = multicover::kDefaultOracleBudget;
  bench->add_option("corpus", bench_dir, "directory of instance files")
      ->required()
      ->check(CLI::ExistingDirectory);
  bench->add_option("--algos", bench_algos, "algorithms to run")
      ->delimiter(',')
      ->capture_default_str();
  bench->add_option("--out", bench_out, "report path base (.csv/.json appended)")
      ->capture_default_str();
  bench->add_flag("--timings", bench_timings, "record wall time per row");
  bench->add_option("--oracle-budget", bench_budget, "branch-and-bound node budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve->parsed())
      return run_solve(g, solve_path, solve_algo, solve_budget, solve_timings);
    if (gen->parsed()) {
      spec.family = multicover::family_from_string(gen_family);
      spec.epsilon = parse_rational_arg(gen_epsilon);
      spec.constraints.demand_at_least_3 = gen_b3;
      spec.constraints.degree_gap_2 = gen_gap2;
      return run_gen(g, spec, gen_count, gen_out);
    }
    if (verify->parsed()) {
      vopt.seed = g.seed;
      vopt.jobs = g.jobs;
      return run_verify(g, verify_suite, vopt);
    }
    if (bench->parsed())
      return run_bench(g, bench_dir, bench_algos, bench_out, bench_timings,
                       bench_budget);
  } catch (const multicover::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const multicover::GenerationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitUsage;
}
