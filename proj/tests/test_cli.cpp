#include "cli.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = polyhankel::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json first_record(const std::string& text) {
  return nlohmann::json::parse(text.substr(0, text.find('\n')));
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "polyhankel_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

} // namespace

TEST(Cli, PZero) {
  const auto r = run({"pzero"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(first_record(r.out)["p0"].get<double>(), 5.738817179, 1e-8);
}

TEST(Cli, Lift) {
  const auto r = run({"lift", "--n", "12"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(first_record(r.out)["exponents"], nlohmann::json::array({2, 1}));
  const auto back = run({"lift", "--exponents", "2,1"});
  EXPECT_EQ(first_record(back.out)["n"], 12);
}

TEST(Cli, VerifyTheorem1) {
  const auto r = run({"verify-thm1", "--d", "2", "--p", "8", "--method", "grid"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = first_record(r.out);
  EXPECT_TRUE(j["exceeded_one"].get<bool>());
  EXPECT_NEAR(j["ratio"].get<double>(), 1.018534, 2e-6);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"lift", "--n", "0"}).code, 2);
  EXPECT_EQ(run({"schatten", "--d", "2", "--p", "-1"}).code, 2);
  EXPECT_EQ(run({"ratio", "--p", "2"}).code, 2);
  EXPECT_EQ(run({"verify-thm2", "--a", "1,1", "--b", "1,1", "--p", "7"}).code, 2);
  EXPECT_EQ(run({"ratio", "--d", "2", "--method", "simpson"}).code, 2);
}

TEST(Cli, ComputationErrors) {
  EXPECT_EQ(run({"lift", "--exponents", "1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1"}).code, 3);
  EXPECT_EQ(run({"--max-dim", "4", "matrix", "--d", "5"}).code, 3);
  EXPECT_EQ(run({"ratio", "--d", "9", "--p", "2"}).code, 3);
}

TEST(Cli, DeterministicMonteCarlo) {
  const std::vector<std::string> args{"ratio", "--d", "12", "--p", "6", "--method", "mc",
                                      "--samples", "50000", "--seed", "7"};
  const auto a = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  auto threaded = args;
  threaded.insert(threaded.end(), {"--threads", "1"});
  const auto b = run(threaded);
  EXPECT_EQ(a.out, b.out);
  const auto j = first_record(a.out);
  EXPECT_EQ(j["seed"], 7);
  EXPECT_EQ(j["samples"], 50000);
}

TEST(Cli, MatrixRoundTripReproducesSpectrum) {
  const auto csv = scratch("m.csv");
  const auto labels = scratch("labels.csv");
  const auto m = run({"matrix", "--linear", "1,0.5-2i,3i", "--csv", csv.string(), "--labels", labels.string()});
  ASSERT_EQ(m.code, 0) << m.err;
  const auto direct = run({"svd", "--linear", "1,0.5-2i,3i"});
  const auto reread = run({"svd", "--matrix", csv.string()});
  ASSERT_EQ(reread.code, 0) << reread.err;
  EXPECT_EQ(first_record(direct.out)["singular_values"], first_record(reread.out)["singular_values"]);
  std::ifstream in(labels);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "0,1,");
}

TEST(Cli, SymbolFileAndOutputFile) {
  const auto sym = scratch("phi.json");
  {
    std::ofstream f(sym);
    f << R"([{"exponents": [1], "re": 0.7071067811865476, "im": 0},)"
      << R"( {"exponents": [0, 1], "re": 0.7071067811865476, "im": 0}])";
  }
  const auto out = scratch("ratio.jsonl");
  const auto r = run({"--output", out.string(), "ratio", "--symbol", sym.string(), "--p", "inf"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_NEAR(first_record(ss.str())["ratio"].get<double>(), 1.1107207345395916, 1e-9);
}

TEST(Cli, ScanWritesOneRecordPerD) {
  const auto r = run({"scan", "--p", "8", "--d-max", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::vector<nlohmann::json> records;
  for (std::string line; std::getline(in, line);)
    records.push_back(nlohmann::json::parse(line));
  ASSERT_EQ(records.size(), 4u);
  for (int d = 1; d <= 3; ++d) {
    EXPECT_EQ(records[d - 1]["d"], d);
    for (const char* key : {"p", "inner_abs", "schatten", "l1", "l1_stderr", "ratio", "exceeded_one"})
      EXPECT_TRUE(records[d - 1].contains(key)) << key;
  }
  EXPECT_EQ(records.back()["minimal_d"], 2);
}

TEST(Cli, MaximizeEchoesSeed) {
  const auto r = run({"maximize", "--d", "2", "--p", "4", "--restarts", "2", "--iters", "20", "--seed", "11"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = first_record(r.out);
  EXPECT_EQ(j["seed"], 11);
  EXPECT_LE(j["best_ratio"].get<double>(), 1.0);
}
