// Copyright 2026 The ellipse-loci Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " \"" ELLIPSE_LOCUS_BIN "\" " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json run_json(const std::string& args, int expected_code = 0) {
  const RunResult r = run(args + " --format json");
  EXPECT_EQ(r.code, expected_code) << args;
  return nlohmann::json::parse(r.out);
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::path(ELLIPSE_LOCUS_SCRATCH) / name;
  fs::remove_all(p);
  return p;
}

TEST(Cli, LocusHappyPath) {
  const auto j = run_json("locus --a 2 --b 1 --t1 0.5 --t2 1.2 --rho 0,0.25,1");
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["command"], "locus");
  ASSERT_EQ(j["loci"].size(), 3u);
}

TEST(Cli, LocusSegmentAtMinusHalf) {
  const auto j = run_json("locus --a 2 --b 1 --t1 0.5 --t2 1.2 --rho -0.5");
  const std::string dump = j["loci"][0].dump();
  EXPECT_NE(dump.find("segment"), std::string::npos) << dump;
}

TEST(Cli, ValidationFailuresExitTwo) {
  EXPECT_EQ(run("locus --a 1 --b 2 --t1 0.5 --t2 1.2").code, 2);
  EXPECT_EQ(run("locus --a 2 --b 1 --t1 0.5").code, 2);
  EXPECT_EQ(run("locus --a 2 --b 1 --t1 0.5 --t2 0.5").code, 2);
  EXPECT_EQ(run("focal --a 1 --b 1").code, 2);
  EXPECT_EQ(run("verify --only no-such-check").code, 2);
  EXPECT_EQ(run("locus --a 2 --b 1 --t1 0.5 --t2 1.2 --format pdf").code, 2);
  EXPECT_EQ(run("no-such-command").code, 2);
  EXPECT_EQ(run("verify --only ratio-invariance", "ELLIPSE_LOCUS_SEED=abc").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, CircleCases) {
  EXPECT_EQ(run("locus --a 1 --b 1 --t1 0.5 --t2 1.2 --rho 0,1").code, 0);
  EXPECT_EQ(run("sweep-parallel --a 1 --b 1 --t0 1.0 --rho 0.5").code, 0);
  EXPECT_EQ(run("scan --a 1 --b 1 --family pinned --t1 0.5 --t2 1.2 --centers X2").code, 0);
}

TEST(Cli, SweepReportsInvariance) {
  const auto j = run_json("sweep-parallel --a 2 --b 1 --t0 1.0 --rho 0,0.5");
  EXPECT_TRUE(j["pass"].get<bool>());
  ASSERT_EQ(j["sweeps"].size(), 2u);
  // Vertical chords: t0 = 0.
  EXPECT_TRUE(run_json("sweep-parallel --a 2 --b 1 --t0 0 --rho 0.25")["pass"].get<bool>());
}

TEST(Cli, EnvelopeAxesAtZero) {
  const auto j = run_json("envelope --a 2 --b 1 --t1 0.9 --rho 0");
  const std::string dump = j["envelopes"][0].dump();
  EXPECT_NE(dump.find("ellipse"), std::string::npos) << dump;
  EXPECT_NE(dump.find("1.333333333"), std::string::npos) << dump;
}

TEST(Cli, FocalAndEquilateral) {
  const auto j = run_json("focal --a 2 --b 1");
  EXPECT_EQ(j["loci"].size(), 4u);
  const auto q = run_json("focal --a 1.1547005383792517 --b 1");
  EXPECT_TRUE(q["equilateral"]["equilateral"].get<bool>());
}

TEST(Cli, ScanClassifies) {
  const auto j = run_json("scan --a 2 --b 1 --family focal --centers X2,X6");
  ASSERT_EQ(j["results"].size(), 2u);
  EXPECT_EQ(j["results"][0]["classification"], "ellipse");
  EXPECT_EQ(j["results"][1]["classification"], "non-conic");
}

TEST(Cli, VerifyExitCodes) {
  const auto ok = run_json("verify --only ratio-invariance,product-invariance");
  EXPECT_TRUE(ok["pass"].get<bool>());
  EXPECT_EQ(ok["checks"].size(), 2u);
  const auto bad = run_json("verify --only implicit-consistency --inject-fault", 1);
  EXPECT_FALSE(bad["pass"].get<bool>());
  EXPECT_TRUE(bad["inject_fault"].get<bool>());
}

TEST(Cli, SeedFallsBackToEnvironment) {
  const RunResult r = run("verify --only ratio-invariance --format json", "ELLIPSE_LOCUS_SEED=4242");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["seed"], 4242);
  const RunResult f = run("verify --only ratio-invariance --format json --seed 5", "ELLIPSE_LOCUS_SEED=4242");
  EXPECT_EQ(nlohmann::json::parse(f.out)["seed"], 5);
  EXPECT_EQ(nlohmann::json::parse(run("verify --only ratio-invariance --format json").out)["seed"], 20260101);
}

TEST(Cli, OutputsAreDeterministic) {
  const fs::path d1 = scratch("det1");
  const fs::path d2 = scratch("det2");
  for (const char* cmd : {"locus --a 2 --b 1 --t1 0.5 --t2 1.2 --rho 0,0.25,1", "envelope --a 2 --b 1 --t1 0.4",
                          "verify --only ratio-invariance,scanner"}) {
    ASSERT_EQ(run(std::string(cmd) + " --out " + d1.string()).code, 0) << cmd;
    ASSERT_EQ(run(std::string(cmd) + " --out " + d2.string()).code, 0) << cmd;
  }
  int files = 0;
  for (const auto& entry : fs::directory_iterator(d1)) {
    ++files;
    EXPECT_EQ(slurp(entry.path()), slurp(d2 / entry.path().filename())) << entry.path();
  }
  EXPECT_GE(files, 5);
  EXPECT_TRUE(fs::exists(d1 / "report.json"));
  EXPECT_TRUE(fs::exists(d1 / "figure.svg"));
  std::ifstream csv(d1 / "geometry.csv");
  std::string header;
  std::getline(csv, header);
  EXPECT_EQ(header, "param,cx,cy,semi_major,semi_minor,rotation");
}

TEST(Cli, CsvToStdout) {
  const RunResult r = run("locus --a 2 --b 1 --t1 0.5 --t2 1.2 --rho 0.5 --samples 8 --format csv");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("t,x,y\n"), std::string::npos);
}

}  // namespace
