#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gcsq/csv.hpp"
#include "gcsq/error.hpp"

namespace gcsq::cli {

using nlohmann::json;

json metrics_to_json(const MetricReport& m) {
  json j;
  j["nmi"] = m.nmi ? json(*m.nmi) : json(nullptr);
  j["modularity"] = m.modularity;
  j["gini"] = m.gini;
  j["size_ratio"] = m.size_ratio;
  j["agreement"] = m.agreement;
  j["k"] = m.k;
  return j;
}

MetricReport metrics_from_json(const json& j) {
  MetricReport m;
  if (j.contains("nmi") && !j.at("nmi").is_null()) m.nmi = j.at("nmi").get<double>();
  m.modularity = j.at("modularity").get<double>();
  m.gini = j.at("gini").get<double>();
  m.size_ratio = j.at("size_ratio").get<double>();
  m.agreement = j.at("agreement").get<double>();
  m.k = j.at("k").get<std::size_t>();
  return m;
}

json report_to_json(const ExperimentReport& r) {
  json j;
  j["tool"] = "gcsq";
  j["version"] = r.tool_version;
  j["method"] = r.method;
  j["config"] = r.config;
  json ds;
  ds["kind"] = r.dataset.kind;
  ds["path"] = r.dataset.path;
  ds["content_hash"] = r.dataset.content_hash;
  ds["nodes"] = r.dataset.nodes;
  if (!r.dataset.spec.is_null()) ds["spec"] = r.dataset.spec;
  j["dataset"] = std::move(ds);
  j["metrics"] = metrics_to_json(r.metrics);
  j["timings_ms"] = {{"load", r.timings.load_ms},
                     {"cluster", r.timings.cluster_ms},
                     {"metrics", r.timings.metrics_ms}};
  j["partition"] = r.partition;
  j["extra"] = r.extra;
  return j;
}

ExperimentReport report_from_json(const json& j) {
  try {
    ExperimentReport r;
    r.tool_version = j.at("version").get<std::string>();
    r.method = j.at("method").get<std::string>();
    r.config = j.at("config");
    const auto& ds = j.at("dataset");
    r.dataset.kind = ds.at("kind").get<std::string>();
    r.dataset.path = ds.at("path").get<std::string>();
    r.dataset.content_hash = ds.at("content_hash").get<std::string>();
    r.dataset.nodes = ds.at("nodes").get<std::size_t>();
    if (ds.contains("spec")) r.dataset.spec = ds.at("spec");
    r.metrics = metrics_from_json(j.at("metrics"));
    const auto& t = j.at("timings_ms");
    r.timings = {t.at("load").get<double>(), t.at("cluster").get<double>(),
                 t.at("metrics").get<double>()};
    r.partition = j.at("partition");
    r.extra = j.value("extra", json::object());
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("experiment report: ") + e.what());
  }
}

json partition_to_json(const Partition& p, double agreement, const std::vector<SplitRecord>* trace) {
  json j;
  j["labels"] = std::vector<std::size_t>(p.labels().begin(), p.labels().end());
  j["k"] = p.num_clusters();
  j["agreement"] = agreement;
  if (trace) {
    json steps = json::array();
    for (const auto& rec : *trace) {
      std::vector<int> mask(rec.mask.begin(), rec.mask.end());
      steps.push_back({{"nodes", rec.nodes}, {"mask", mask}, {"cut", rec.cut},
                       {"accepted", rec.accepted}});
    }
    j["trace"] = std::move(steps);
  }
  return j;
}

json genspec_to_json(const GenSpec& spec) {
  json j;
  j["n"] = spec.n;
  j["k"] = spec.k;
  j["profile"] = std::string(profile_name(spec.profile));
  if (spec.profile == SizeProfile::kExplicit) j["sizes"] = spec.sizes;
  j["moderate_ratio"] = spec.moderate_ratio;
  j["intra"] = {spec.intra_lo, spec.intra_hi};
  j["inter"] = {spec.inter_lo, spec.inter_hi};
  j["noise"] = spec.noise_flip_prob;
  j["edge_keep_prob"] = spec.edge_keep_prob;
  j["seed"] = spec.seed;
  return j;
}

GenSpec genspec_from_json(const json& j) {
  GenSpec spec;
  spec.n = j.at("n").get<std::size_t>();
  spec.k = j.at("k").get<std::size_t>();
  spec.profile = parse_profile(j.at("profile").get<std::string>());
  if (j.contains("sizes")) spec.sizes = j.at("sizes").get<std::vector<std::size_t>>();
  spec.moderate_ratio = j.value("moderate_ratio", kModerateTargetRatio);
  spec.intra_lo = j.at("intra").at(0).get<double>();
  spec.intra_hi = j.at("intra").at(1).get<double>();
  spec.inter_lo = j.at("inter").at(0).get<double>();
  spec.inter_hi = j.at("inter").at(1).get<double>();
  spec.noise_flip_prob = j.value("noise", 0.0);
  spec.edge_keep_prob = j.value("edge_keep_prob", 1.0);
  spec.seed = j.at("seed").get<std::uint64_t>();
  return spec;
}

Partition load_truth(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return Partition(json::parse(text).at("labels").get<std::vector<std::size_t>>());
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kParse, path.string() + ": " + e.what());
    }
  }
  std::istringstream in(text);
  const CsvTable t = read_csv(in, false);
  std::vector<std::size_t> labels;
  for (double v : t.values.data()) {
    if (v < 0.0 || v != std::floor(v)) {
      throw Error(ErrorCode::kParse, path.string() + ": labels must be non-negative integers");
    }
    labels.push_back(static_cast<std::size_t>(v));
  }
  return Partition(std::move(labels));
}

std::string fnv1a64_file(const std::filesystem::path& path) {
  const std::string bytes = read_text_file(path);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out) throw Error(ErrorCode::kIo, "write failed for '" + path.string() + "'");
}

}  // namespace gcsq::cli
