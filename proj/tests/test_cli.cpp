#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "frameforge/acceptance.hpp"
#include "frameforge/commands.hpp"
#include "frameforge/constructions.hpp"

using namespace frameforge;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "frameforge");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliRun r;
  r.code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("frameforge_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
    unsetenv("FRAMEFORGE_TOL");
  }
  void TearDown() override {
    std::filesystem::remove_all(dir_);
    unsetenv("FRAMEFORGE_TOL");
  }
  std::string write(const std::string& name, const Json& j) {
    const auto path = dir_ / name;
    std::ofstream(path) << j.dump();
    return path.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

const Json* find_result(const Json& report, const std::string& name) {
  for (const Json& r : report["results"]) {
    if (r["name"] == name) return &r;
  }
  return nullptr;
}

}  // namespace

TEST_F(CliTest, DecomposeIdentityMatrix) {
  const std::string input = write("id.json", matrix_to_json(ComplexMatrix::Identity(4, 4)));
  const CliRun r = run({"decompose", "--input", input, "--epsilon", "0.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j["payload"]["a"].get<double>(), 4.0);
  EXPECT_EQ(j["status"], "pass");
  for (const Json& c : j["results"]) {
    EXPECT_TRUE(c.contains("measured") && c.contains("bound") && c.contains("pass"));
  }
}

TEST_F(CliTest, DecomposeZeroMatrixIsDegenerate) {
  const std::string input = write("zero.json", matrix_to_json(ComplexMatrix::Zero(3, 3)));
  const CliRun r = run({"decompose", "--input", input});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.json()["payload"]["degenerate"].get<bool>());
  EXPECT_EQ(r.json()["payload"]["a"].get<double>(), 0.0);
}

TEST_F(CliTest, DecomposeFrameManifestGivesRieszPair) {
  const std::string input = write("frame.json", frame_to_json(empty_hf_operator_model(2, 4)));
  const CliRun r = run({"decompose", "--input", input});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["payload"]["mode"], "riesz_pair");
  EXPECT_EQ(r.json()["payload"]["y"]["vectors"].size(), 8u);
}

TEST_F(CliTest, DecomposeRandomIsByteIdentical) {
  const CliRun a = run({"decompose", "--seed", "17"});
  const CliRun b = run({"decompose", "--seed", "17"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, run({"decompose", "--seed", "18"}).out);
}

TEST_F(CliTest, DecomposeInputErrors) {
  EXPECT_EQ(run({"decompose", "--input", path("missing.json")}).code, 2);
  std::ofstream(path("bad.json")) << "[1, 2";
  EXPECT_EQ(run({"decompose", "--input", path("bad.json")}).code, 2);
  const std::string rect = write("rect.json", matrix_to_json(ComplexMatrix::Ones(2, 3)));
  EXPECT_EQ(run({"decompose", "--input", rect}).code, 2);
  EXPECT_EQ(run({"decompose", "--epsilon", "1.5"}).code, 2);
}

TEST_F(CliTest, BuildPConvergentManifest) {
  const std::string manifest = path("pc.json");
  const CliRun r = run({"build", "--family", "p_convergent", "--p", "1.5", "--n-max", "3", "--manifest", manifest});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json m = read_json_file(manifest);
  EXPECT_EQ(m["vectors"].size(), 14u);
  EXPECT_EQ(m["dim"], 3);
  const Json report = r.json();
  const Json* parseval = find_result(report, "parseval");
  ASSERT_NE(parseval, nullptr);
  EXPECT_TRUE((*parseval)["pass"].get<bool>());
}

TEST_F(CliTest, BuildEmptyHfReportsTightConstant) {
  const CliRun r = run({"build", "--family", "empty_hf", "--n-max", "2", "--j-max", "100"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(r.json()["payload"]["tight_constant"].get<double>(), 0.993951024017395071655587279871, 1e-14);
}

TEST_F(CliTest, BuildHarmonicVectorFromConfig) {
  const std::string cfg = write("cfg.json", {{"family", {{"family", "harmonic_vector"}, {"params", {{"n_max", 1}}}}}});
  const CliRun r = run({"build", "--config", cfg});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json entries = r.json()["payload"]["entries"];
  ASSERT_EQ(entries.size(), 1u);
  EXPECT_NEAR(entries[0][0].get<double>(), 0.77970, 5e-6);
}

TEST_F(CliTest, BuildErrorsExitTwo) {
  EXPECT_EQ(run({"build", "--family", "p_convergent", "--p", "2.5", "--n-max", "3"}).code, 2);
  EXPECT_EQ(run({"build", "--family", "p_convergent", "--p", "1.5", "--n-max", "1000"}).code, 2);
  EXPECT_EQ(run({"build", "--family", "nbb_empty_hf", "--n-max", "100", "--j-max", "100"}).code, 2);
  EXPECT_EQ(run({"build", "--family", "nonsense"}).code, 2);
  EXPECT_EQ(run({"build"}).code, 2);
}

TEST_F(CliTest, DiagnoseHarmonicStream) {
  const CliRun r = run({"diagnose", "--stream", "harmonic"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json s = r.json()["payload"]["series"][0];
  EXPECT_EQ(s["classification"], "log-divergent");
  EXPECT_NEAR(s["log_fit"]["alpha"].get<double>(), 0.7797, 0.15 * 0.7797);
  EXPECT_EQ(s["budgets"].back(), 1000000);
}

TEST_F(CliTest, DiagnoseZeroStreamCsv) {
  const CliRun r = run({"diagnose", "--stream", "zero", "--budgets", "10,100,1000", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "budget,partial_sum\n10,0\n100,0\n1000,0\n");
  const CliRun j = run({"diagnose", "--stream", "zero", "--budgets", "10,100,1000"});
  EXPECT_EQ(j.json()["payload"]["series"][0]["classification"], "bounded");
}

TEST_F(CliTest, DiagnoseSphere) {
  const CliRun r = run({"diagnose", "--sphere", "4,16,64"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json s = r.json()["payload"]["sphere"];
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0]["value"].get<double>(), 2.0);
  EXPECT_EQ(s[1]["value"].get<double>(), 4.0);
  EXPECT_EQ(s[2]["value"].get<double>(), 8.0);
}

TEST_F(CliTest, DiagnoseManifestWithProbes) {
  const std::string input = write("frame.json", frame_to_json(empty_hf_frame(2, 50).frame));
  const CliRun r = run({"diagnose", "--input", input, "--budgets", "10,50,100"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(r.json()["payload"]["series"][0]["partial_sums"][1].get<double>(),
              0.7796968012336761 * 4.499205338329425, 1e-12);

  const std::string cfg = write("cfg.json", {{"input", input}, {"probes", Json::array({Json::array({1, 2, 3})})}});
  EXPECT_EQ(run({"diagnose", "--config", cfg}).code, 2);  // probe length 3 in dimension 2
  EXPECT_EQ(run({"diagnose", "--input", input, "--budgets", "10,1000"}).code, 2);  // beyond 100 vectors
  EXPECT_EQ(run({"diagnose"}).code, 2);
}

TEST_F(CliTest, VerifyFilterRunsOnlyDecomposition) {
  const CliRun r = run({"verify", "--filter", "decompose"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json criteria = r.json()["payload"]["criteria"];
  ASSERT_EQ(criteria.size(), 3u);
  for (const Json& c : criteria) EXPECT_EQ(c["module"], "decompose");
  EXPECT_EQ(run({"verify", "--filter", "no_such_criterion"}).code, 2);
}

TEST_F(CliTest, VerifyCsvFormat) {
  const CliRun r = run({"verify", "--filter", "07_p_convergent", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("name,measured,relation,bound,pass\n", 0), 0u);
  EXPECT_NE(r.out.find("07_p_convergent_frame.parseval,"), std::string::npos);
}

TEST_F(CliTest, TightenedToleranceFailsWithExitThree) {
  setenv("FRAMEFORGE_TOL", "1e-14", 1);
  const CliRun r = run({"verify", "--filter", "01_reconstruction"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("FAIL 01_reconstruction"), std::string::npos);
  setenv("FRAMEFORGE_TOL", "abc", 1);
  EXPECT_EQ(run({"verify", "--filter", "01_reconstruction"}).code, 2);
}

TEST_F(CliTest, RoundingFloorAtDimension256) {
  TolerancePolicy tight;
  tight.identity_tol = 1e-14;
  const CheckResult fail = rounding_floor_check(256, 3, tight);
  EXPECT_FALSE(fail.pass);
  EXPECT_GT(fail.measured, 1e-14);
  const CheckResult pass = rounding_floor_check(256, 3, TolerancePolicy{});
  EXPECT_TRUE(pass.pass);
  EXPECT_EQ(pass.measured, fail.measured);
}

TEST_F(CliTest, ProbeIsInconclusiveAndReproducible) {
  const CliRun a = run({"probe", "--seed", "5", "--budgets", "2,4,8"});
  ASSERT_EQ(a.code, 0) << a.err;
  const Json j = a.json();
  EXPECT_EQ(j["status"], "inconclusive");
  EXPECT_FALSE(j["payload"]["conclusive"].get<bool>());
  EXPECT_EQ(j["payload"]["union_probe"]["status"], "inconclusive");
  const Json lattice = j["payload"]["separated_set_probe"]["by_dim"];
  ASSERT_EQ(lattice.size(), 3u);
  EXPECT_EQ(lattice[0]["points"], 3);
  EXPECT_NEAR(lattice[0]["sup_standard_basis"].get<double>(), std::sqrt(2.0), 1e-15);
  EXPECT_EQ(a.out, run({"probe", "--seed", "5", "--budgets", "2,4,8"}).out);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"verify", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"diagnose", "--stream", "zero", "--budgets", "10,5"}).code, 2);
  EXPECT_EQ(run({"diagnose", "--stream", "zero", "--budgets", "a,b"}).code, 2);
  EXPECT_EQ(run({"decompose", "--help"}).code, 0);
}

TEST_F(CliTest, OutputFileAndTiming) {
  const std::string out = path("report.json");
  const CliRun r = run({"diagnose", "--stream", "zeta2", "--budgets", "10,100", "--out", out, "--timing"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  const Json j = read_json_file(out);
  EXPECT_TRUE(j["payload"].contains("wall_time_s"));
  EXPECT_FALSE(run({"diagnose", "--stream", "zeta2", "--budgets", "10,100"}).json()["payload"].contains("wall_time_s"));
}

TEST(Config, ApplyAndValidate) {
  ExperimentConfig c = apply_config_json(
      Json{{"seed", 9}, {"epsilon", 0.25}, {"budgets", {1, 2}}, {"filter", "ell1"}, {"identity_tol", 1e-9}}, {});
  EXPECT_EQ(c.seed, 9u);
  EXPECT_EQ(c.epsilon, 0.25);
  EXPECT_EQ(c.tol.identity_tol, 1e-9);
  EXPECT_NO_THROW(validate_config(c));
  EXPECT_THROW(apply_config_json(Json{{"seed", "x"}}, {}), Error);
  EXPECT_THROW(apply_config_json(Json::array(), {}), Error);
  c.budgets = {3, 3};
  EXPECT_THROW(validate_config(c), Error);
  EXPECT_EQ(parse_size_list("1,20,300"), (std::vector<std::size_t>{1, 20, 300}));
  EXPECT_THROW(parse_size_list("1,,2"), Error);
}
