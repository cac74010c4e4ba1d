#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli_app.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = permfact::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path fresh_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("permfact_cli_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST(CliCount, AllMethodsMatch) {
  const auto r = run({"count", "--n", "4", "--mu", "3,1", "--k", "4", "--method", "all"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("MATCH"), std::string::npos);
  EXPECT_EQ(r.out.find("MISMATCH"), std::string::npos);
  for (const char* m : {"spectral", "matrix", "brute", "two-cycle/rederived"})
    EXPECT_NE(r.out.find(std::string(m) + std::string(20 - std::string(m).size(), ' ') + "108"), std::string::npos) << m;
}

TEST(CliCount, AllMethodsJson) {
  const auto r = run({"count", "--mu", "3,1", "--k", "4", "--method", "all", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("verdict"), "MATCH");
  for (const auto& row : j.at("results")) {
    if (!row.at("in_verdict").get<bool>()) continue;
    EXPECT_EQ(row.at("count"), "108") << row.at("method");
  }
}

TEST(CliCount, SingleMethodValues) {
  EXPECT_EQ(run({"count", "--n", "4", "--mu", "1,1,1,1", "--k", "3"}).out, "0\n");
  const auto g = run({"count", "--n", "10", "--mu", "10", "--k", "9", "--method", "goulden"});
  const auto s = run({"count", "--n", "10", "--mu", "10", "--k", "9", "--method", "spectral"});
  EXPECT_EQ(g.code, 0);
  EXPECT_EQ(g.out, s.out);
  EXPECT_EQ(g.out, "100000000\n");
  EXPECT_EQ(run({"count", "--mu", "1,3", "--k", "4", "--method", "two-cycle", "--hook-signs", "rederived"}).out, "108\n");
  EXPECT_EQ(run({"count", "--mu", "1,3", "--k", "4", "--method", "two-cycle"}).out, "-54\n");
}

TEST(CliCount, JsonSchema) {
  const auto r = run({"count", "--mu", "2,2", "--k", "4", "--format", "json"});
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("n"), 4);
  EXPECT_EQ(j.at("mu"), json({2, 2}));
  EXPECT_EQ(j.at("k"), 4);
  EXPECT_EQ(j.at("count"), "104");
  EXPECT_EQ(j.at("method"), "spectral");
}

TEST(CliCount, UsageErrors) {
  EXPECT_EQ(run({"count", "--mu", "3,x", "--k", "2"}).code, 2);
  EXPECT_EQ(run({"count", "--n", "5", "--mu", "3,1", "--k", "2"}).code, 2);
  EXPECT_EQ(run({"count", "--mu", "4,4", "--k", "2", "--method", "brute"}).code, 2);
  EXPECT_EQ(run({"count", "--mu", "3,1", "--k", "2", "--method", "goulden"}).code, 2);
  EXPECT_EQ(run({"count", "--mu", "3", "--k", "2", "--method", "two-cycle"}).code, 2);
  EXPECT_EQ(run({"count", "--mu", "3", "--k", "2", "--method", "bogus"}).code, 2);
  EXPECT_EQ(run({"count", "--mu", "21", "--k", "2"}).code, 2);
  EXPECT_EQ(run({"count", "--mu", "5", "--k", "2", "--max-n", "4"}).code, 2);
  EXPECT_EQ(run({"count", "--k", "2"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(CliMatrix, PrintedA4) {
  const auto r = run({"matrix", "--n", "4", "--format", "json"});
  const auto a = permfact::io::matrix_from_json(json::parse(r.out));
  EXPECT_EQ(a.entries(), permfact::published_a4());
  EXPECT_EQ(run({"matrix", "--n", "4", "--format", "csv"}).out,
            ",1+1+1+1,2+1+1,2+2,3+1,4\n1+1+1+1,0,6,0,0,0\n2+1+1,1,0,1,4,0\n2+2,0,2,0,0,4\n3+1,0,3,0,0,3\n4,0,0,2,4,0\n");
  EXPECT_EQ(run({"matrix", "--n", "1"}).code, 2);
}

TEST(CliMatrix, EigenPairsSortedByRho) {
  const json j = json::parse(run({"matrix", "--n", "3", "--eigen", "--format", "json"}).out);
  std::vector<std::string> rhos;
  for (const auto& e : j.at("eigen")) rhos.push_back(e.at("rho"));
  EXPECT_EQ(rhos, (std::vector<std::string>{"-3", "0", "3"}));

  const json j8 = json::parse(run({"matrix", "--n", "8", "--eigen", "--format", "json"}).out);
  std::vector<long long> got;
  for (const auto& e : j8.at("eigen")) got.push_back(std::stoll(e.at("rho").get<std::string>()));
  EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
  // Every value in the printed n = 8 row occurs, with at least its printed multiplicity.
  auto printed = permfact::published_eigenvalue_table().at(8);
  for (long long v : printed) {
    const auto want = std::count(printed.begin(), printed.end(), v);
    EXPECT_GE(std::count(got.begin(), got.end(), v), want) << v;
  }
  EXPECT_EQ(got.size(), 22u);
}

TEST(CliChartable, TextAndTrivialRow) {
  const auto r = run({"chartable", "--n", "3"});
  EXPECT_EQ(r.out, "      1+1+1   2+1     3\n1+1+1     1    -1     1\n2+1       2     0    -1\n3         1     1     1\n");
  const json j = json::parse(run({"chartable", "--n", "6", "--format", "json"}).out);
  for (const auto& v : j.at("values").back()) EXPECT_EQ(v, "1");
}

TEST(CliChartable, CacheRoundTripIsByteIdentical) {
  const auto dir = fresh_dir("cache");
  const auto first = run({"chartable", "--n", "7", "--format", "json", "--cache-dir", dir.string()});
  ASSERT_TRUE(std::filesystem::exists(dir / "chartable_n7.json"));
  const auto second = run({"chartable", "--n", "7", "--format", "json", "--cache-dir", dir.string()});
  EXPECT_EQ(first.out, second.out);
  EXPECT_EQ(first.out, run({"chartable", "--n", "7", "--format", "json"}).out);
  { std::ofstream(dir / "chartable_n7.json") << "garbage"; }
  const auto third = run({"chartable", "--n", "7", "--format", "json", "--cache-dir", dir.string()});
  EXPECT_EQ(third.code, 0);
  EXPECT_EQ(third.out, first.out);
  EXPECT_NE(third.err.find("warning"), std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST(CliChartable, EnvironmentCacheDirAndOverride) {
  const auto env_dir = fresh_dir("env");
  const auto flag_dir = fresh_dir("flag");
  ::setenv(permfact::cli::kCacheEnv, env_dir.string().c_str(), 1);
  run({"chartable", "--n", "5"});
  EXPECT_TRUE(std::filesystem::exists(env_dir / "chartable_n5.json"));
  run({"chartable", "--n", "6", "--cache-dir", flag_dir.string()});
  EXPECT_TRUE(std::filesystem::exists(flag_dir / "chartable_n6.json"));
  EXPECT_FALSE(std::filesystem::exists(env_dir / "chartable_n6.json"));
  ::unsetenv(permfact::cli::kCacheEnv);
  std::filesystem::remove_all(env_dir);
  std::filesystem::remove_all(flag_dir);
}

TEST(CliSeries, Examples) {
  EXPECT_EQ(run({"series", "--n", "3", "--mu", "3", "--terms", "4"}).out, "0, 0, 3/2, 0\ncoefficients vanish unless j = 0 (mod 2)\n");
  const json j = json::parse(run({"series", "--mu", "1,1,1,1", "--terms", "5", "--format", "json"}).out);
  EXPECT_EQ(j.at("coefficients")[0], "1");
  EXPECT_EQ(j.at("coefficients")[1], "0");
  EXPECT_EQ(j.at("coefficients")[3], "0");
  EXPECT_EQ(run({"series", "--mu", "3", "--terms", "0"}).code, 2);
}

TEST(CliPartitions, Listing) {
  const json j = json::parse(run({"partitions", "--n", "10", "--format", "json"}).out);
  EXPECT_EQ(j.at("count"), 42);
  EXPECT_EQ(j.at("partitions")[0].at("parts"), json(std::vector<int>(10, 1)));
  const auto csv = run({"partitions", "--n", "3", "--format", "csv"}).out;
  EXPECT_EQ(csv, "partition,length,z,class_size,rho,conjugate\n1+1+1,3,6,1,-3,3\n2+1,2,2,3,0,2+1\n3,1,3,2,3,1+1+1\n");
}

TEST(CliVerify, DefaultPassesAndReportsFindings) {
  const auto r = run({"verify", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("failures"), 0);
  int findings = 0;
  for (const auto& c : j.at("checks")) findings += c.at("status") == "FINDING";
  EXPECT_EQ(findings, 2);
}

TEST(CliVerify, FaultInjectionNamesOffendingPair) {
  const auto r = run({"verify", "--inject-fault", "4,1,0"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL    eigen-relations"), std::string::npos);
  EXPECT_NE(r.out.find("n=4 A u: lambda=1+1+1+1 nu=2+1+1"), std::string::npos);
  EXPECT_EQ(run({"verify", "--inject-fault", "4,9,0"}).code, 2);
  EXPECT_EQ(run({"verify", "--inject-fault", "4,1"}).code, 2);
  EXPECT_EQ(run({"verify", "--inject-fault", "4,1,0,0"}).code, 2);
}

TEST(CliVerify, DeepRunIncludesPolynomialChecksToFive) {
  const auto r = run({"verify", "--deep"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("D* matrix and Schur eigenfunctions  [n <= 5"), std::string::npos);
}

TEST(CliDeterminism, RepeatedRunsAndJobCounts) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"chartable", "--n", "9", "--format", "csv"},
           {"matrix", "--n", "7", "--eigen"},
           {"count", "--mu", "4,2,1", "--k", "9", "--method", "all", "--format", "json"},
           {"series", "--mu", "5,2", "--terms", "12", "--format", "json"},
           {"verify", "--format", "json"}}) {
    const auto a = run(args);
    const auto b = run(args);
    EXPECT_EQ(a.out, b.out);
    auto with_jobs = args;
    with_jobs.insert(with_jobs.end(), {"--jobs", "4"});
    EXPECT_EQ(run(with_jobs).out, a.out);
  }
}
