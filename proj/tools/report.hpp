#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gcsq/divisive.hpp"
#include "gcsq/metrics.hpp"
#include "gcsq/signed_graph.hpp"
#include "gcsq/synthgen.hpp"

namespace gcsq::cli {

struct DatasetInfo {
  std::string kind;  // "graph", "correlation" or "generated"
  std::string path;
  std::string content_hash;  // "fnv1a64:<hex>" of the file bytes
  std::size_t nodes = 0;
  nlohmann::json spec;  // generator spec when kind == "generated"
};

struct PhaseTimings {
  double load_ms = 0.0;
  double cluster_ms = 0.0;
  double metrics_ms = 0.0;
};

/// One clustering run: what was run, on which data, with which settings,
/// and what came out. `config` holds every setting needed to re-run.
struct ExperimentReport {
  std::string tool_version;
  std::string method;
  nlohmann::json config = nlohmann::json::object();
  DatasetInfo dataset;
  MetricReport metrics;
  PhaseTimings timings;
  nlohmann::json partition;  // partition_to_json output
  nlohmann::json extra = nlohmann::json::object();  // solver stats, k selection
};

nlohmann::json metrics_to_json(const MetricReport& m);
MetricReport metrics_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const ExperimentReport& r);
ExperimentReport report_from_json(const nlohmann::json& j);

/// {labels, k, agreement, trace?}
nlohmann::json partition_to_json(const Partition& p, double agreement,
                                 const std::vector<SplitRecord>* trace = nullptr);

nlohmann::json genspec_to_json(const GenSpec& spec);
GenSpec genspec_from_json(const nlohmann::json& j);

/// Ground-truth sidecar: {labels, spec, seed}. Plain CSV label files (one
/// label per line or a single row) are accepted too.
Partition load_truth(const std::filesystem::path& path);

std::string fnv1a64_file(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace gcsq::cli
