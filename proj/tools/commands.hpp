#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gcsq/divisive.hpp"
#include "gcsq/synthgen.hpp"
#include "report.hpp"

namespace gcsq::cli {

enum class OutputFormat { kJson, kCsv };

// --- generate -------------------------------------------------------------

struct GenerateOptions {
  GenSpec spec;
  std::filesystem::path out_prefix;  // writes <prefix>.csv and <prefix>.json
};

struct GenerateSummary {
  std::filesystem::path graph_path;
  std::filesystem::path truth_path;
  std::vector<std::size_t> sizes;
  double gini = 0.0;
  double size_ratio = 1.0;
};

/// Writes the weight matrix CSV and the {labels, spec, seed} sidecar, then
/// prints the truth's gini and size ratio to `out`.
GenerateSummary run_generate(const GenerateOptions& opts, std::ostream& out);

// --- cluster --------------------------------------------------------------

enum class GraphInputKind { kGraph, kCorrelation };

struct ClusterOptions {
  std::filesystem::path graph_path;
  GraphInputKind input_kind = GraphInputKind::kGraph;
  bool has_header = false;
  std::string method = "gcsq";
  std::optional<std::size_t> k;
  std::optional<std::pair<std::size_t, std::size_t>> select_k;
  std::optional<std::filesystem::path> truth_path;
  ClusterConfig gcsq;        // solver settings; sa.seed is the master seed
  std::uint64_t seed = 0;    // master seed
  nlohmann::json config_file = nlohmann::json::object();  // echoed verbatim
};

/// Validates the method/k contract before any file is read.
void check_cluster_options(const ClusterOptions& opts);

ExperimentReport run_cluster(const ClusterOptions& opts);

/// Pure in-memory variant used by the benchmark and tests.
struct MethodRun {
  Partition partition;
  nlohmann::json extra = nlohmann::json::object();
  double runtime_ms = 0.0;
};
MethodRun run_method(const SignedGraph& g, const std::string& method,
                     std::optional<std::size_t> k,
                     std::optional<std::pair<std::size_t, std::size_t>> select_k,
                     const ClusterConfig& gcsq, std::uint64_t seed);

// --- benchmark ------------------------------------------------------------

struct BenchmarkOptions {
  std::size_t n = 60;
  std::vector<std::size_t> ks{5, 10, 20};
  std::vector<SizeProfile> profiles{SizeProfile::kUniform, SizeProfile::kModerate,
                                    SizeProfile::kHighSkew};
  std::size_t seeds = 10;
  std::vector<std::string> methods{"gcsq", "diana", "agglomerative", "pam"};
  GenSpec base;              // weight ranges, noise, sparsity
  ClusterConfig gcsq;
  std::uint64_t master_seed = 0;
  std::size_t jobs = 1;
};

struct BenchmarkRow {
  std::string profile;
  std::size_t k = 0;
  std::size_t seed_index = 0;
  std::uint64_t seed = 0;  // instance seed, mix_seed(master, run index)
  std::string method;
  double nmi = 0.0;
  double modularity = 0.0;
  double runtime_ms = 0.0;
};

/// Methods that appear in the comparison but have no implementation here.
const std::vector<std::string>& not_implemented_methods();

/// Rows ordered by (profile, k, seed index, method) regardless of `jobs`.
std::vector<BenchmarkRow> run_benchmark(const BenchmarkOptions& opts);

void write_benchmark_csv(std::ostream& out, const std::vector<BenchmarkRow>& rows);
nlohmann::json benchmark_to_json(const BenchmarkOptions& opts, const std::vector<BenchmarkRow>& rows);

// --- correlate ------------------------------------------------------------

struct CorrelateOptions {
  std::filesystem::path input;
  std::filesystem::path out;
  bool has_header = false;
  bool drop_constant = false;
  double sample_rows = 1.0;
  std::uint64_t seed = 0;
};

struct CorrelateSummary {
  std::size_t samples = 0;
  std::size_t features = 0;
  std::vector<std::size_t> dropped;
};

CorrelateSummary run_correlate(const CorrelateOptions& opts, std::ostream& diag);

// --- entry point ----------------------------------------------------------

/// Parses argv and dispatches. Errors are printed to `err` as
/// "gcsq: <CODE>: message"; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gcsq::cli
