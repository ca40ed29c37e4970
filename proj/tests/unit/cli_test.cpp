#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli/app.hpp"

namespace nlsenergy::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "nlsenergy");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / ("nlsenergy_cli_" + std::string(info->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, BuildRejectsLowIndex) {
  const auto r = run_cli({"build", "--k", "1", "--p", "2", "--out", path("e.json")});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("k"), std::string::npos);
  EXPECT_FALSE(fs::exists(path("e.json")));
}

TEST_F(CliTest, BuildLowestCase) {
  const auto r = run_cli({"build", "--k", "2", "--p", "2", "--out", path("e.json")});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("Itilde_2_1"), std::string::npos);
  const auto doc = slurp(path("e.json"));
  // Two independent unknowns are solved; the redundant one stays zero.
  EXPECT_NE(doc.find("\"Itilde_2_1\": \"2\""), std::string::npos);
  EXPECT_NE(doc.find("\"Vtilde_2_1\": \"6\""), std::string::npos);
  EXPECT_NE(doc.find("\"Wtilde_2_1\": \"0\""), std::string::npos);
}

TEST_F(CliTest, BuildReportsCubicCoefficient) {
  const auto r = run_cli({"build", "--k", "6", "--p", "2", "--out", path("e.json")});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("cubic_coeff  -2"), std::string::npos) << r.out;
}

TEST_F(CliTest, InfeasiblePinExitsWithResidual) {
  const auto r = run_cli({"build", "--k", "3", "--p", "2", "--pin", "Vtilde_3_1", "--out", path("e.json")});
  EXPECT_EQ(r.code, kInfeasible);
  EXPECT_NE(r.err.find("irreducible residual"), std::string::npos);
}

TEST_F(CliTest, VerifyPassesAndCatchesCorruption) {
  auto r = run_cli({"verify", "--k", "4..5", "--p", "2,3", "--jobs", "2"});
  EXPECT_EQ(r.code, kOk) << r.out << r.err;
  const auto serial = run_cli({"verify", "--k", "4..5", "--p", "2,3"});
  EXPECT_EQ(serial.out, r.out);
  r = run_cli({"verify", "--k", "4", "--p", "2", "--corrupt-catalogue"});
  EXPECT_EQ(r.code, kVerificationFailed);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
  EXPECT_EQ(run_cli({"verify", "--k", "9x"}).code, kUsage);
}

TEST_F(CliTest, SimulatePlaneWave) {
  const auto r = run_cli({"simulate", "--preset", "planewave", "--k", "2", "--p", "2", "--n-modes", "32", "--dt",
                          "1e-4", "--t-end", "1", "--record-stride", "2000", "--out", path("pw.csv")});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto meta = nlohmann::json::parse(slurp(path("pw.meta.json")));
  EXPECT_LT(meta.at("results").at("planewave_error").get<double>(), 1e-8);
  EXPECT_EQ(meta.at("simulate").at("preset"), "planewave");
}

TEST_F(CliTest, CrosscheckExample) {
  const auto r = run_cli({"crosscheck", "--k", "5", "--p", "2", "--seed", "7", "--out", path("cc.csv")});
  EXPECT_EQ(r.code, kOk) << r.out << r.err;
  const auto csv = slurp(path("cc.csv"));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "t,E_k,dEk_fd,dEk_exact,dEk_decomposition,rel_fd,rel_decomposition");
}

TEST_F(CliTest, CrosscheckFailsOnImpossibleTolerance) {
  const auto r = run_cli({"crosscheck", "--k", "3", "--p", "2", "--t-end", "0", "--tol-fd", "1e-30", "--out",
                          path("cc.csv")});
  EXPECT_EQ(r.code, kVerificationFailed);
}

TEST_F(CliTest, MonitorWritesCubicRemainder) {
  const auto r = run_cli({"monitor", "--k", "6", "--p", "2", "--t-end", "50", "--record-stride", "1000", "--out",
                          path("mon.csv")});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto csv = slurp(path("mon.csv"));
  const auto header = csv.substr(0, csv.find('\n'));
  EXPECT_NE(header.find("cubic_remainder"), std::string::npos);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 52);
  EXPECT_TRUE(fs::exists(path("mon.densities.csv")));
}

TEST_F(CliTest, EnergyDocumentMustMatch) {
  ASSERT_EQ(run_cli({"build", "--k", "3", "--p", "2", "--out", path("e.json")}).code, kOk);
  auto r = run_cli({"simulate", "--energy", path("e.json"), "--p", "3", "--out", path("s.csv")});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_FALSE(fs::exists(path("s.csv")));
  r = run_cli({"simulate", "--energy", path("missing.json"), "--out", path("s.csv")});
  EXPECT_EQ(r.code, kUsage);
  // A tampered document is refused as well.
  auto doc = slurp(path("e.json"));
  doc.replace(doc.find("\"Vtilde_3_1\": \"9\""), 17, "\"Vtilde_3_1\": \"8\"");
  std::ofstream(path("bad.json")) << doc;
  r = run_cli({"simulate", "--energy", path("bad.json"), "--out", path("s.csv")});
  EXPECT_EQ(r.code, kUsage);
}

TEST_F(CliTest, RejectsFocusingAndBadInput) {
  EXPECT_EQ(run_cli({"simulate", "--k", "2", "--p", "2", "--nonlinearity", "focusing"}).code, kUsage);
  EXPECT_EQ(run_cli({"simulate", "--k", "2", "--p", "2", "--n-modes", "48"}).code, kUsage);
  EXPECT_EQ(run_cli({"simulate", "--k", "2", "--p", "2", "--dt", "-1"}).code, kUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kUsage);
  EXPECT_EQ(run_cli({"--help"}).code, kOk);
}

TEST_F(CliTest, RerunFromMetadataIsByteIdentical) {
  ASSERT_EQ(run_cli({"simulate", "--k", "3", "--p", "2", "--n-modes", "32", "--t-end", "0.05", "--record-stride", "10",
                     "--seed", "3", "--out", path("a.csv")})
                .code,
            kOk);
  ASSERT_EQ(run_cli({"--config", path("a.meta.json"), "simulate", "--out", path("b.csv")}).code, kOk);
  EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
  const auto meta = slurp(path("a.meta.json"));
  EXPECT_NE(meta.find("energy_sha256"), std::string::npos);
  EXPECT_NE(meta.find("\"seed\": 3"), std::string::npos);
}

TEST_F(CliTest, ConfigDocumentMirrorsFlags) {
  std::ofstream(path("cfg.json")) << "{\"build\": {\"k\": 2, \"p\": 3, \"out\": \"" << path("e.json") << "\"}}\n";
  const auto r = run_cli({"--config", path("cfg.json"), "build"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(slurp(path("e.json")).find("\"p\": 3"), std::string::npos);
}

}  // namespace
}  // namespace nlsenergy::cli
