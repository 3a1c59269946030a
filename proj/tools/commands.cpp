#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "gcsq/baselines.hpp"
#include "gcsq/csv.hpp"
#include "gcsq/error.hpp"
#include "gcsq/ingest.hpp"
#include "gcsq/metrics.hpp"
#include "gcsq/rng.hpp"
#include "gcsq/version.hpp"

namespace gcsq::cli {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

Error usage(const std::string& msg) { return Error(ErrorCode::kUsage, msg); }

std::optional<BaselineMethod> baseline_for(const std::string& method) {
  if (method == "diana") return BaselineMethod::kDiana;
  if (method == "agglomerative") return BaselineMethod::kAgglomerative;
  if (method == "pam") return BaselineMethod::kPam;
  return std::nullopt;
}

json solver_to_json(const ClusterConfig& c) {
  json j;
  j["backend"] = c.solver.backend;
  j["exact_cap"] = c.solver.exact_cap;
  j["sa_sweeps"] = c.solver.sa.sweeps ? json(*c.solver.sa.sweeps) : json("auto");
  j["sa_restarts"] = c.solver.sa.restarts;
  j["sa_t_initial"] = c.solver.sa.t_initial ? json(*c.solver.sa.t_initial) : json("auto");
  j["sa_t_final"] = c.solver.sa.t_final ? json(*c.solver.sa.t_final) : json("auto");
  j["epsilon"] = c.epsilon;
  j["min_split_size"] = c.min_split_size;
  return j;
}

std::string format_fixed(double v, int digits) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(digits) << v;
  return ss.str();
}

std::string format_real(double v) {
  std::ostringstream ss;
  ss << std::setprecision(std::numeric_limits<double>::max_digits10) << v;
  return ss.str();
}

}  // namespace

// --- generate -------------------------------------------------------------

GenerateSummary run_generate(const GenerateOptions& opts, std::ostream& out) {
  if (opts.out_prefix.empty()) throw usage("generate needs --out <prefix>");
  GeneratedGraph gen = generate(opts.spec);

  GenerateSummary s;
  s.graph_path = opts.out_prefix;
  s.graph_path += ".csv";
  s.truth_path = opts.out_prefix;
  s.truth_path += ".json";
  s.sizes = gen.sizes;
  s.gini = gini(gen.sizes);
  s.size_ratio = size_ratio(gen.sizes);

  write_csv_file(s.graph_path, gen.graph.to_dense());
  json sidecar;
  sidecar["labels"] = std::vector<std::size_t>(gen.truth.labels().begin(), gen.truth.labels().end());
  sidecar["spec"] = genspec_to_json(opts.spec);
  sidecar["seed"] = opts.spec.seed;
  sidecar["sizes"] = gen.sizes;
  write_text_file(s.truth_path, sidecar.dump(2) + "\n");

  out << "graph: " << s.graph_path.string() << "\n"
      << "truth: " << s.truth_path.string() << "\n"
      << "sizes:";
  for (auto size : s.sizes) out << ' ' << size;
  out << "\ngini: " << format_fixed(s.gini, 4) << "\nsize_ratio: " << format_fixed(s.size_ratio, 2)
      << "\n";
  return s;
}

// --- cluster --------------------------------------------------------------

void check_cluster_options(const ClusterOptions& opts) {
  const bool classical = baseline_for(opts.method).has_value();
  if (opts.method != "gcsq" && !classical) {
    throw usage("unknown method '" + opts.method + "' (expected gcsq, diana, agglomerative or pam)");
  }
  if (opts.method == "gcsq" && (opts.k || opts.select_k)) {
    throw usage("gcsq determines the cluster count itself; drop --k/--select-k");
  }
  if (classical && !opts.k && !opts.select_k) {
    throw usage(opts.method + " needs --k or --select-k");
  }
  if (opts.k && opts.select_k) throw usage("--k and --select-k are mutually exclusive");
  if (opts.select_k && (opts.select_k->first < 2 || opts.select_k->first > opts.select_k->second)) {
    throw usage("--select-k range must be a:b with 2 <= a <= b");
  }
}

MethodRun run_method(const SignedGraph& g, const std::string& method, std::optional<std::size_t> k,
                     std::optional<std::pair<std::size_t, std::size_t>> k_range,
                     const ClusterConfig& gcsq, std::uint64_t seed) {
  MethodRun run;
  const auto start = Clock::now();
  if (method == "gcsq") {
    ClusterConfig cfg = gcsq;
    cfg.solver.sa.seed = seed;
    ClusterResult r = cluster(g, cfg);
    run.partition = std::move(r.partition);
    run.extra["solves"] = r.solves;
    run.extra["accepted_splits"] = r.accepted_splits;
    if (cfg.record_trace) {
      run.extra["trace"] = partition_to_json(run.partition, 0.0, &r.trace).at("trace");
    }
  } else if (auto m = baseline_for(method)) {
    std::size_t clamped = 0;
    const DissimilarityMatrix d = to_dissimilarity(g, &clamped);
    if (clamped > 0) run.extra["clamped_weights"] = clamped;
    if (k_range) {
      KSelection sel = select_k(d, *m, k_range->first, k_range->second, seed);
      run.partition = std::move(sel.partition);
      run.extra["selection"] = {{"k_range", {k_range->first, k_range->second}},
                                {"k", sel.k},
                                {"silhouette", sel.silhouette}};
    } else {
      run.partition = run_baseline(*m, d, k.value_or(0), seed);
    }
  } else {
    throw usage("unknown method '" + method + "'");
  }
  run.runtime_ms = elapsed_ms(start);
  return run;
}

ExperimentReport run_cluster(const ClusterOptions& opts) {
  check_cluster_options(opts);
  ExperimentReport rep;
  rep.tool_version = kVersion;
  rep.method = opts.method;

  auto start = Clock::now();
  const SignedGraph g = opts.input_kind == GraphInputKind::kCorrelation
                            ? load_correlation_csv(opts.graph_path, opts.has_header)
                            : SignedGraph::from_dense(read_csv_file(opts.graph_path, opts.has_header).values);
  std::optional<Partition> truth;
  if (opts.truth_path) {
    truth = load_truth(*opts.truth_path);
    if (truth->size() != g.size()) {
      throw Error(ErrorCode::kShapeMismatch, "truth has " + std::to_string(truth->size()) +
                                                 " labels for a " + std::to_string(g.size()) +
                                                 "-node graph");
    }
  }
  rep.timings.load_ms = elapsed_ms(start);

  rep.dataset.kind = opts.input_kind == GraphInputKind::kCorrelation ? "correlation" : "graph";
  rep.dataset.path = opts.graph_path.string();
  rep.dataset.content_hash = fnv1a64_file(opts.graph_path);
  rep.dataset.nodes = g.size();

  json& cfg = rep.config;
  cfg["method"] = opts.method;
  cfg["input_kind"] = rep.dataset.kind;
  cfg["header"] = opts.has_header;
  cfg["master_seed"] = opts.seed;
  if (opts.k) cfg["k"] = *opts.k;
  if (opts.select_k) cfg["select_k"] = {opts.select_k->first, opts.select_k->second};
  if (opts.truth_path) cfg["truth"] = opts.truth_path->string();
  if (opts.method == "gcsq") {
    cfg["solver"] = solver_to_json(opts.gcsq);
    cfg["trace"] = opts.gcsq.record_trace;
  }
  if (!opts.config_file.empty()) cfg["config_file"] = opts.config_file;

  MethodRun run = run_method(g, opts.method, opts.k, opts.select_k, opts.gcsq, opts.seed);
  rep.timings.cluster_ms = run.runtime_ms;

  start = Clock::now();
  rep.metrics = report(g, run.partition, truth ? &*truth : nullptr);
  rep.timings.metrics_ms = elapsed_ms(start);

  rep.partition = partition_to_json(run.partition, rep.metrics.agreement);
  if (run.extra.contains("trace")) {
    rep.partition["trace"] = run.extra.at("trace");
    run.extra.erase("trace");
  }
  rep.extra = std::move(run.extra);
  return rep;
}

// --- benchmark ------------------------------------------------------------

const std::vector<std::string>& not_implemented_methods() {
  static const std::vector<std::string> kMethods{"kmeans", "spectral"};
  return kMethods;
}

std::vector<BenchmarkRow> run_benchmark(const BenchmarkOptions& opts) {
  for (const auto& m : opts.methods) {
    if (m != "gcsq" && !baseline_for(m)) throw usage("unknown benchmark method '" + m + "'");
  }
  struct Instance {
    SizeProfile profile;
    std::size_t k;
    std::size_t seed_index;
    std::uint64_t seed;
  };
  std::vector<Instance> instances;
  for (auto profile : opts.profiles) {
    for (auto k : opts.ks) {
      for (std::size_t s = 0; s < opts.seeds; ++s) {
        instances.push_back({profile, k, s, mix_seed(opts.master_seed, instances.size())});
      }
    }
  }

  std::vector<std::vector<BenchmarkRow>> results(instances.size());
  std::vector<std::exception_ptr> errors(instances.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t idx = next++; idx < instances.size(); idx = next++) {
      const Instance& inst = instances[idx];
      try {
        GenSpec spec = opts.base;
        spec.n = opts.n;
        spec.k = inst.k;
        spec.profile = inst.profile;
        spec.seed = inst.seed;
        const GeneratedGraph gen = generate(spec);
        for (const auto& method : opts.methods) {
          std::optional<std::size_t> k;
          if (method != "gcsq") k = inst.k;  // classical methods get the true k
          MethodRun run = run_method(gen.graph, method, k, std::nullopt, opts.gcsq, inst.seed);
          BenchmarkRow row;
          row.profile = std::string(profile_name(inst.profile));
          row.k = inst.k;
          row.seed_index = inst.seed_index;
          row.seed = inst.seed;
          row.method = method;
          row.nmi = nmi(run.partition, gen.truth);
          row.modularity = modularity(gen.graph, run.partition);
          row.runtime_ms = run.runtime_ms;
          results[idx].push_back(std::move(row));
        }
      } catch (...) {
        errors[idx] = std::current_exception();
      }
    }
  };

  const std::size_t threads = std::clamp<std::size_t>(opts.jobs, 1, std::max<std::size_t>(1, instances.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<BenchmarkRow> rows;
  for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(rows));
  return rows;
}

void write_benchmark_csv(std::ostream& out, const std::vector<BenchmarkRow>& rows) {
  out << "profile,k,seed,method,nmi,modularity,runtime_ms\n";
  for (const auto& r : rows) {
    out << r.profile << ',' << r.k << ',' << r.seed << ',' << r.method << ','
        << format_real(r.nmi) << ',' << format_real(r.modularity) << ','
        << format_fixed(r.runtime_ms, 3) << '\n';
  }
}

json benchmark_to_json(const BenchmarkOptions& opts, const std::vector<BenchmarkRow>& rows) {
  json j;
  j["tool"] = "gcsq";
  j["version"] = kVersion;
  json cfg;
  cfg["n"] = opts.n;
  cfg["ks"] = opts.ks;
  std::vector<std::string> profiles;
  for (auto p : opts.profiles) profiles.emplace_back(profile_name(p));
  cfg["profiles"] = profiles;
  cfg["seeds"] = opts.seeds;
  cfg["methods"] = opts.methods;
  cfg["master_seed"] = opts.master_seed;
  cfg["generator"] = genspec_to_json(opts.base);
  cfg["solver"] = solver_to_json(opts.gcsq);
  j["config"] = std::move(cfg);
  j["not_implemented"] = not_implemented_methods();
  json arr = json::array();
  for (const auto& r : rows) {
    arr.push_back({{"profile", r.profile}, {"k", r.k}, {"seed_index", r.seed_index},
                   {"seed", r.seed}, {"method", r.method}, {"nmi", r.nmi},
                   {"modularity", r.modularity}, {"runtime_ms", r.runtime_ms}});
  }
  j["rows"] = std::move(arr);
  return j;
}

// --- correlate ------------------------------------------------------------

CorrelateSummary run_correlate(const CorrelateOptions& opts, std::ostream& diag) {
  if (opts.out.empty()) throw usage("correlate needs --out <graph.csv>");
  FeatureMatrix x = load_feature_csv(opts.input, opts.has_header);
  if (opts.sample_rows < 1.0) x = sample_rows(x, opts.sample_rows, opts.seed);
  CorrelationGraph cg = pearson_matrix(x, {opts.drop_constant});
  for (auto c : cg.dropped_features) {
    diag << "gcsq: warning: dropped constant feature "
         << (c < x.names.size() ? x.names[c] : std::to_string(c)) << "\n";
  }
  std::vector<std::string> header;
  if (!x.names.empty()) {
    for (auto c : cg.kept_features) header.push_back(x.names[c]);
  }
  write_csv_file(opts.out, cg.graph.to_dense(), header);
  return {x.values.rows(), x.values.cols(), cg.dropped_features};
}

// --- entry point ----------------------------------------------------------

namespace {

json read_flat_config(const std::string& path) {
  json j = json::object();
  std::istringstream in(read_text_file(path));
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#' || line[first] == ';' ||
        line[first] == '[') {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r\"");
      const auto b = s.find_last_not_of(" \t\r\"");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    j[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return j;
}

// Fills options that the command line left unset. Keys are long option
// names without dashes, looked up on the active subcommand first.
void apply_flat_config(CLI::App& root, CLI::App& active, const json& values) {
  for (const auto& [key, value] : values.items()) {
    const std::string flag = "--" + key;
    CLI::Option* opt = active.get_option_no_throw(flag);
    if (!opt) opt = root.get_option_no_throw(flag);
    if (!opt || key == "config") throw usage("config file: unknown key '" + key + "'");
    if (opt->count() > 0) continue;
    const std::string text = value.get<std::string>();
    if (opt->get_delimiter() != '\0' && opt->get_expected_max() > 1) {
      std::stringstream ss(text);
      std::string item;
      while (std::getline(ss, item, opt->get_delimiter())) opt->add_result(item);
    } else {
      opt->add_result(text);
    }
    try {
      opt->run_callback();
    } catch (const CLI::Error& e) {
      throw usage("config file: " + key + ": " + e.what());
    }
  }
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument(text);
    return {std::stoul(text.substr(0, colon)), std::stoul(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw usage("expected a range a:b, got '" + text + "'");
  }
}

void add_solver_flags(CLI::App* sub, ClusterConfig& cfg, std::optional<std::size_t>& sweeps,
                      std::optional<double>& t0, std::optional<double>& tf) {
  sub->add_option("--solver", cfg.solver.backend, "QUBO backend: auto, exact, sa")
      ->capture_default_str();
  sub->add_option("--exact-cap", cfg.solver.exact_cap, "largest problem the exact backend takes")
      ->capture_default_str();
  sub->add_option("--sa-sweeps", sweeps, "annealing sweeps per restart (default 100*n)");
  sub->add_option("--sa-restarts", cfg.solver.sa.restarts, "annealing restarts")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  sub->add_option("--sa-t0", t0, "initial temperature (default max |coefficient|)");
  sub->add_option("--sa-tf", tf, "final temperature (default 1e-3 * t0)");
  sub->add_option("--epsilon", cfg.epsilon, "splits need cut < -epsilon")->capture_default_str();
  sub->add_option("--min-split", cfg.min_split_size, "smallest cluster that is split")
      ->capture_default_str();
}

void add_generator_flags(CLI::App* sub, GenSpec& spec, std::vector<double>& intra,
                         std::vector<double>& inter) {
  sub->add_option("--intra", intra, "intra-cluster weight range lo,hi")
      ->expected(2)
      ->delimiter(',');
  sub->add_option("--inter", inter, "inter-cluster weight range lo,hi")
      ->expected(2)
      ->delimiter(',');
  sub->add_option("--noise", spec.noise_flip_prob, "per-edge sign flip probability")
      ->capture_default_str();
  sub->add_option("--keep-prob", spec.edge_keep_prob, "per-edge keep probability (sparsity)")
      ->capture_default_str();
  sub->add_option("--moderate-ratio", spec.moderate_ratio, "max/min size ratio of the moderate profile")
      ->capture_default_str();
}

void apply_ranges(GenSpec& spec, const std::vector<double>& intra, const std::vector<double>& inter) {
  if (intra.size() == 2) {
    spec.intra_lo = intra[0];
    spec.intra_hi = intra[1];
  }
  if (inter.size() == 2) {
    spec.inter_lo = inter[0];
    spec.inter_hi = inter[1];
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Divisive QUBO correlation clustering for signed graphs"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t master_seed = 0;
  std::size_t jobs = 1;
  std::string out_path;
  std::string format_name;
  std::string config_path;
  app.add_option("--master-seed", master_seed, "seed every random stream derives from")
      ->capture_default_str();
  app.add_option("--jobs", jobs, "worker threads for benchmark runs")->capture_default_str();
  app.add_option("--out", out_path, "output path (file or prefix, per command)");
  app.add_option("--format", format_name, "output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--config", config_path,
                 "flat key=value file of long-option names; command-line flags take precedence");

  // generate
  auto* gen_cmd = app.add_subcommand("generate", "write a synthetic signed graph and its truth");
  GenerateOptions gen_opts;
  std::string gen_profile = "uniform";
  std::vector<std::size_t> gen_sizes;
  std::vector<double> gen_intra;
  std::vector<double> gen_inter;
  std::optional<std::uint64_t> gen_seed;
  gen_cmd->add_option("--n", gen_opts.spec.n, "node count")->capture_default_str();
  gen_cmd->add_option("--k", gen_opts.spec.k, "cluster count")->capture_default_str();
  gen_cmd->add_option("--profile", gen_profile, "uniform, moderate, high_skew or explicit")
      ->capture_default_str();
  gen_cmd->add_option("--sizes", gen_sizes, "explicit cluster sizes")->delimiter(',');
  gen_cmd->add_option("--seed", gen_seed, "generator seed (default: --master-seed)");
  add_generator_flags(gen_cmd, gen_opts.spec, gen_intra, gen_inter);

  // cluster
  auto* cl_cmd = app.add_subcommand("cluster", "cluster a graph and emit an experiment report");
  ClusterOptions cl_opts;
  std::string cl_graph;
  std::string cl_truth;
  std::string cl_select;
  std::optional<std::size_t> cl_k;
  bool cl_correlation = false;
  std::optional<std::size_t> cl_sweeps;
  std::optional<double> cl_t0;
  std::optional<double> cl_tf;
  cl_cmd->add_option("--graph", cl_graph, "weight matrix CSV");
  cl_cmd->add_flag("--correlation", cl_correlation,
                   "treat the input as a correlation matrix (range-checked, diagonal ignored)");
  cl_cmd->add_flag("--header", cl_opts.has_header, "skip a header row");
  cl_cmd->add_option("--method", cl_opts.method, "gcsq, diana, agglomerative or pam")
      ->capture_default_str();
  cl_cmd->add_option("--k", cl_k, "cluster count (classical methods)");
  cl_cmd->add_option("--select-k", cl_select, "silhouette search range a:b (classical methods)");
  cl_cmd->add_option("--truth", cl_truth, "ground-truth labels (JSON sidecar or CSV)");
  cl_cmd->add_flag("--trace", cl_opts.gcsq.record_trace, "include the split trace");
  add_solver_flags(cl_cmd, cl_opts.gcsq, cl_sweeps, cl_t0, cl_tf);

  // benchmark
  auto* bm_cmd = app.add_subcommand("benchmark", "sweep profiles x k x seeds over all methods");
  BenchmarkOptions bm_opts;
  std::vector<std::string> bm_profiles{"uniform", "moderate", "high_skew"};
  std::vector<double> bm_intra;
  std::vector<double> bm_inter;
  std::optional<std::size_t> bm_sweeps;
  std::optional<double> bm_t0;
  std::optional<double> bm_tf;
  bm_cmd->add_option("--n", bm_opts.n, "nodes per instance")->capture_default_str();
  bm_cmd->add_option("--seeds", bm_opts.seeds, "instances per (profile, k)")->capture_default_str();
  bm_cmd->add_option("--ks", bm_opts.ks, "cluster counts")->delimiter(',')->capture_default_str();
  bm_cmd->add_option("--profiles", bm_profiles, "size profiles")->delimiter(',');
  bm_cmd->add_option("--methods", bm_opts.methods, "methods to run")->delimiter(',');
  add_generator_flags(bm_cmd, bm_opts.base, bm_intra, bm_inter);
  add_solver_flags(bm_cmd, bm_opts.gcsq, bm_sweeps, bm_t0, bm_tf);

  // correlate
  auto* co_cmd = app.add_subcommand("correlate", "turn a samples x features CSV into a correlation graph");
  CorrelateOptions co_opts;
  std::string co_input;
  co_cmd->add_option("--input", co_input, "feature CSV (rows = samples)");
  co_cmd->add_flag("--header", co_opts.has_header, "first row holds feature names");
  co_cmd->add_flag("--drop-constant", co_opts.drop_constant, "drop constant features with a warning");
  co_cmd->add_option("--sample-rows", co_opts.sample_rows, "keep each row with this probability")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help on a subcommand
      out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
      return 0;
    }
    err << "gcsq: " << error_code_name(ErrorCode::kUsage) << ": " << e.what() << "\n";
    return 2;
  }

  try {
    nlohmann::json config_values = json::object();
    if (!config_path.empty()) {
      config_values = read_flat_config(config_path);
      CLI::App* active = app.get_subcommands().front();
      apply_flat_config(app, *active, config_values);
    }
    const OutputFormat format =
        format_name == "csv" ? OutputFormat::kCsv : OutputFormat::kJson;
    auto emit = [&](const std::string& text) {
      if (out_path.empty()) {
        out << text;
      } else {
        write_text_file(out_path, text);
      }
    };

    if (gen_cmd->parsed()) {
      gen_opts.spec.profile = parse_profile(gen_profile);
      gen_opts.spec.sizes = gen_sizes;
      if (!gen_sizes.empty() && gen_cmd->count("--profile") == 0) {
        gen_opts.spec.profile = SizeProfile::kExplicit;
      }
      gen_opts.spec.seed = gen_seed.value_or(master_seed);
      apply_ranges(gen_opts.spec, gen_intra, gen_inter);
      gen_opts.out_prefix = out_path;
      run_generate(gen_opts, out);
      return 0;
    }

    if (cl_cmd->parsed()) {
      cl_opts.graph_path = cl_graph;
      cl_opts.input_kind = cl_correlation ? GraphInputKind::kCorrelation : GraphInputKind::kGraph;
      cl_opts.k = cl_k;
      if (!cl_select.empty()) cl_opts.select_k = parse_range(cl_select);
      if (!cl_truth.empty()) cl_opts.truth_path = cl_truth;
      cl_opts.gcsq.solver.sa.sweeps = cl_sweeps;
      cl_opts.gcsq.solver.sa.t_initial = cl_t0;
      cl_opts.gcsq.solver.sa.t_final = cl_tf;
      cl_opts.seed = master_seed;
      if (cl_graph.empty()) throw usage("cluster needs --graph <weights.csv>");
      cl_opts.config_file = config_values;
      if (!SolverRegistry::global().contains(cl_opts.gcsq.solver.backend)) {
        throw usage("unknown solver backend '" + cl_opts.gcsq.solver.backend + "'");
      }
      const ExperimentReport rep = run_cluster(cl_opts);
      if (format == OutputFormat::kCsv) {
        std::ostringstream csv;
        csv << "method,k,nmi,modularity,gini,size_ratio,agreement,cluster_ms\n"
            << rep.method << ',' << rep.metrics.k << ','
            << (rep.metrics.nmi ? format_real(*rep.metrics.nmi) : std::string()) << ','
            << format_real(rep.metrics.modularity) << ',' << format_real(rep.metrics.gini) << ','
            << format_real(rep.metrics.size_ratio) << ',' << format_real(rep.metrics.agreement)
            << ',' << format_fixed(rep.timings.cluster_ms, 3) << '\n';
        emit(csv.str());
      } else {
        emit(report_to_json(rep).dump(2) + "\n");
      }
      return 0;
    }

    if (bm_cmd->parsed()) {
      bm_opts.profiles.clear();
      for (const auto& p : bm_profiles) bm_opts.profiles.push_back(parse_profile(p));
      apply_ranges(bm_opts.base, bm_intra, bm_inter);
      validate(bm_opts.base);
      bm_opts.gcsq.solver.sa.sweeps = bm_sweeps;
      bm_opts.gcsq.solver.sa.t_initial = bm_t0;
      bm_opts.gcsq.solver.sa.t_final = bm_tf;
      bm_opts.master_seed = master_seed;
      bm_opts.jobs = jobs;
      if (!SolverRegistry::global().contains(bm_opts.gcsq.solver.backend)) {
        throw usage("unknown solver backend '" + bm_opts.gcsq.solver.backend + "'");
      }
      err << "gcsq: note: not implemented and omitted from the comparison:";
      for (const auto& m : not_implemented_methods()) err << ' ' << m;
      err << "\n";
      const auto rows = run_benchmark(bm_opts);
      if (format == OutputFormat::kJson && !format_name.empty()) {
        emit(benchmark_to_json(bm_opts, rows).dump(2) + "\n");
      } else {
        std::ostringstream csv;
        write_benchmark_csv(csv, rows);
        emit(csv.str());
      }
      return 0;
    }

    if (co_cmd->parsed()) {
      if (co_input.empty()) throw usage("correlate needs --input <features.csv>");
      co_opts.input = co_input;
      co_opts.out = out_path;
      co_opts.seed = master_seed;
      const auto s = run_correlate(co_opts, err);
      out << "samples: " << s.samples << "\nfeatures: " << s.features
          << "\nnodes: " << s.features - s.dropped.size() << "\n";
      return 0;
    }
  } catch (const Error& e) {
    err << "gcsq: " << error_code_name(e.code()) << ": " << e.what() << "\n";
    return e.code() == ErrorCode::kUsage ? 2 : 1;
  } catch (const std::exception& e) {
    err << "gcsq: E_INTERNAL: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace gcsq::cli
