#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "commands.hpp"
#include "gcsq/csv.hpp"
#include "gcsq/error.hpp"
#include "gcsq/version.hpp"
#include "report.hpp"

namespace gcsq::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "gcsq");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("gcsq_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, GenerateIsByteDeterministic) {
  ASSERT_EQ(run({"--master-seed", "7", "--out", path("a"), "generate", "--n", "20", "--k", "3"}).code, 0);
  ASSERT_EQ(run({"--master-seed", "7", "--out", path("b"), "generate", "--n", "20", "--k", "3"}).code, 0);
  EXPECT_EQ(read_text_file(path("a.csv")), read_text_file(path("b.csv")));
  const json sidecar = json::parse(read_text_file(path("a.json")));
  EXPECT_EQ(sidecar.at("seed"), 7);
  EXPECT_EQ(sidecar.at("labels").size(), 20u);
  EXPECT_EQ(genspec_from_json(sidecar.at("spec")).k, 3u);
}

TEST_F(CliTest, GenerateInfeasible) {
  const auto r = run({"--out", path("g"), "generate", "--n", "5", "--k", "6"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("gcsq: E_INFEASIBLE: ", 0), 0u) << r.err;
  EXPECT_FALSE(fs::exists(path("g.csv")));
}

TEST_F(CliTest, UsageErrors) {
  ASSERT_EQ(run({"--out", path("g"), "generate", "--n", "12", "--k", "3"}).code, 0);
  const auto no_k = run({"cluster", "--graph", path("g.csv"), "--method", "pam"});
  EXPECT_EQ(no_k.code, 2);
  EXPECT_NE(no_k.err.find("E_USAGE"), std::string::npos);
  EXPECT_EQ(run({"cluster", "--graph", path("g.csv"), "--k", "3"}).code, 2);
  EXPECT_EQ(run({"cluster", "--graph", path("g.csv"), "--method", "pam", "--k", "3",
                 "--select-k", "2:4"}).code, 2);
  EXPECT_EQ(run({"cluster", "--graph", path("g.csv"), "--method", "kmeans", "--k", "3"}).code, 2);
  EXPECT_EQ(run({"cluster"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"cluster", "--graph", path("missing.csv")}).code, 1);
  EXPECT_EQ(run({"cluster", "--graph", path("g.csv"), "--solver", "nope"}).code, 2);
}

TEST_F(CliTest, ClusterReportRoundTrips) {
  ASSERT_EQ(run({"--master-seed", "3", "--out", path("g"), "generate", "--n", "15", "--k", "3"}).code, 0);
  const auto r = run({"cluster", "--graph", path("g.csv"), "--truth", path("g.json"), "--trace"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("tool"), "gcsq");
  EXPECT_EQ(j.at("version"), kVersion);
  EXPECT_EQ(j.at("method"), "gcsq");
  EXPECT_EQ(j.at("dataset").at("content_hash"), fnv1a64_file(path("g.csv")));
  EXPECT_EQ(j.at("metrics").at("nmi"), 1.0);
  EXPECT_EQ(j.at("metrics").at("k"), 3);
  EXPECT_TRUE(j.at("partition").contains("trace"));
  EXPECT_EQ(report_to_json(report_from_json(j)), j);
  EXPECT_THROW(report_from_json(json::object()), Error);
}

TEST_F(CliTest, ClassicalMethodsAndCsvFormat) {
  ASSERT_EQ(run({"--master-seed", "4", "--out", path("g"), "generate", "--n", "18", "--k", "3"}).code, 0);
  for (const std::string m : {"diana", "agglomerative", "pam"}) {
    const auto fixed = run({"cluster", "--graph", path("g.csv"), "--method", m, "--k", "3"});
    ASSERT_EQ(fixed.code, 0) << fixed.err;
    EXPECT_EQ(json::parse(fixed.out).at("metrics").at("k"), 3);
    const auto sel = run({"cluster", "--graph", path("g.csv"), "--method", m, "--select-k", "2:6"});
    ASSERT_EQ(sel.code, 0) << sel.err;
    EXPECT_EQ(json::parse(sel.out).at("metrics").at("k"), 3);
  }
  const auto csv = run({"--format", "csv", "cluster", "--graph", path("g.csv"), "--truth", path("g.json")});
  ASSERT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.rfind("method,k,nmi,modularity,gini,size_ratio,agreement,cluster_ms\ngcsq,3,1", 0), 0u)
      << csv.out;
}

TEST_F(CliTest, ConfigFileSuppliesDefaultsAndFlagsWin) {
  ASSERT_EQ(run({"--out", path("g"), "generate", "--n", "12", "--k", "2"}).code, 0);
  {
    std::ofstream cfg(path("run.cfg"));
    cfg << "# cluster settings\nmethod = pam\nk = 2\n";
  }
  const auto a = run({"--config", path("run.cfg"), "cluster", "--graph", path("g.csv")});
  ASSERT_EQ(a.code, 0) << a.err;
  const json ja = json::parse(a.out);
  EXPECT_EQ(ja.at("method"), "pam");
  EXPECT_EQ(ja.at("metrics").at("k"), 2);
  const auto b = run({"--config", path("run.cfg"), "cluster", "--graph", path("g.csv"), "--k", "4"});
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(json::parse(b.out).at("metrics").at("k"), 4);
  {
    std::ofstream cfg(path("bad.cfg"));
    cfg << "no_such_key = 1\n";
  }
  EXPECT_EQ(run({"--config", path("bad.cfg"), "cluster", "--graph", path("g.csv")}).code, 2);
}

std::string strip_runtime(const std::string& csv) {
  std::istringstream in(csv);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) out << line.substr(0, line.rfind(',')) << '\n';
  return out.str();
}

TEST_F(CliTest, BenchmarkRowsAndDeterminism) {
  const std::vector<std::string> args{"--master-seed", "1", "--jobs", "4", "benchmark",
                                      "--n", "60", "--seeds", "5", "--solver", "sa",
                                      "--sa-restarts", "2", "--sa-sweeps", "200"};
  const auto a = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_NE(a.err.find("kmeans"), std::string::npos);
  std::istringstream in(a.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "profile,k,seed,method,nmi,modularity,runtime_ms");
  std::size_t rows = 0;
  std::set<std::string> methods;
  while (std::getline(in, line)) {
    ++rows;
    std::vector<std::string> fields;
    std::stringstream ls(line);
    for (std::string f; std::getline(ls, f, ',');) fields.push_back(f);
    ASSERT_EQ(fields.size(), 7u) << line;
    methods.insert(fields[3]);
  }
  EXPECT_EQ(rows, 3u * 3u * 5u * 4u);
  EXPECT_EQ(methods, (std::set<std::string>{"gcsq", "diana", "agglomerative", "pam"}));

  auto serial = args;
  serial[3] = "1";
  EXPECT_EQ(strip_runtime(run(serial).out), strip_runtime(a.out));

  const auto js = run({"--format", "json", "benchmark", "--n", "12", "--seeds", "1", "--ks", "2",
                       "--profiles", "uniform"});
  ASSERT_EQ(js.code, 0) << js.err;
  const json j = json::parse(js.out);
  EXPECT_EQ(j.at("not_implemented"), json({"kmeans", "spectral"}));
  EXPECT_EQ(j.at("rows").size(), 4u);
}

TEST_F(CliTest, CorrelateThenCluster) {
  {
    std::ofstream f(path("x.csv"));
    f << "a,b,c,d\n";
    for (int r = 0; r < 20; ++r) {
      const double s = r % 5;
      f << s << ',' << 2 * s + (r % 2) << ',' << 7 << ',' << -s + 0.1 * (r % 3) << '\n';
    }
  }
  EXPECT_EQ(run({"--out", path("c.csv"), "correlate", "--input", path("x.csv"), "--header"}).code, 1);
  const auto r = run({"--out", path("c.csv"), "correlate", "--input", path("x.csv"), "--header",
                      "--drop-constant"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("nodes: 3"), std::string::npos);
  EXPECT_NE(r.err.find("c"), std::string::npos);
  const auto cl = run({"cluster", "--graph", path("c.csv"), "--correlation", "--header"});
  ASSERT_EQ(cl.code, 0) << cl.err;
  const json j = json::parse(cl.out);
  EXPECT_EQ(j.at("dataset").at("kind"), "correlation");
  EXPECT_EQ(j.at("partition").at("labels"), json({0, 0, 1}));
}

}  // namespace
}  // namespace gcsq::cli
