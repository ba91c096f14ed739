#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

const std::string cli = WARPKNOT_CLI_PATH;
const std::string data = WARPKNOT_DATA_DIR;

struct run_result {
  int exit_code = -1;
  std::string out;
  std::string err;
};

run_result run_cli(const std::string& args) {
  const std::string out_path = testing::TempDir() + "warpknot_out.txt";
  const std::string err_path = testing::TempDir() + "warpknot_err.txt";
  const std::string cmd = cli + " " + args + " >" + out_path + " 2>" + err_path;
  const int status = std::system(cmd.c_str());
  run_result r;
  r.exit_code = WEXITSTATUS(status);
  auto slurp = [](const std::string& p) {
    std::ifstream in(p);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = testing::TempDir() + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(Cli, PolyOneBridgeTrefoil) {
  const auto r = run_cli("poly " + data + "/trefoil_one_bridge.gauss");
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("X = 1 + t + t^2"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("W = 1 + 2t + 2t^2 + t^3"), std::string::npos);
  EXPECT_NE(r.out.find("one-bridge: yes"), std::string::npos);
  EXPECT_NE(r.out.find("quotient identity W = (1+t) X: PASS"), std::string::npos);
  EXPECT_NE(r.out.find("RESULT poly line=2 n=3 W=[1,2,2,1] X=[1,1,1]"), std::string::npos);
}

TEST(Cli, PolyAlternatingTrefoil) {
  const auto r = run_cli("poly " + data + "/trefoil_alternating.gauss");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("X = 3t"), std::string::npos);
  EXPECT_NE(r.out.find("alternating: yes"), std::string::npos);
}

TEST(Cli, PolyMalformedInput) {
  const auto path = write_temp("bad.gauss", "O1 U1\nO1 Q2 U1 U2\n");
  const auto r = run_cli("poly " + path);
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("col"), std::string::npos) << r.err;
}

TEST(Cli, ArcCommand) {
  const auto r = run_cli("arc " + data + "/curl.arc");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("W = 2 + t"), std::string::npos);
  EXPECT_NE(r.out.find("X = 1"), std::string::npos);

  const auto r4 = run_cli("poly " + data + "/arc4.arc");  // poly dispatches on extension
  EXPECT_EQ(r4.exit_code, 0);
  EXPECT_NE(r4.out.find("W = 2 + 5t + 2t^2"), std::string::npos);
  EXPECT_NE(r4.out.find("X = 1 + 3t"), std::string::npos);
}

TEST(Cli, StateSumFourCrossings) {
  const auto r = run_cli("statesum " + data + "/fig8.shadow");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("Z = 8 + 24t + 24t^2 + 8t^3"), std::string::npos);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  EXPECT_NE(r.out.find("states = 16"), std::string::npos);
}

TEST(Cli, StateSumFromGaussFile) {
  const auto r = run_cli("statesum " + data + "/trefoil_alternating.gauss");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("Z = 6 + 12t + 6t^2"), std::string::npos);
}

TEST(Cli, StateSumMixedFile) {
  const auto r = run_cli("statesum " + data + "/shadows.shadow");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("Z = 2\n"), std::string::npos) << r.out;  // single crossing
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, StateSumRespectsLimit) {
  std::string big;
  for (int id = 1; id <= 21; ++id) big += std::to_string(id) + " " + std::to_string(id) + " ";
  const auto path = write_temp("big.shadow", big + "\n");
  const auto r = run_cli("statesum " + path);
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_NE(r.err.find("too_many_crossings"), std::string::npos) << r.err;
}

TEST(Cli, OrientCircle) {
  const auto r = run_cli("orient " + data + "/circle.curve");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("orientation (rotation): +1"), std::string::npos) << r.out;
}

TEST(Cli, OrientOddCurveRunsBothMethods) {
  const auto r = run_cli("orient " + data + "/trefoil.curve");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("orientation (odd-warping):"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("orientation (black-right):"), std::string::npos);
  EXPECT_NE(r.out.find("methods agree:"), std::string::npos);
  EXPECT_NE(r.out.find("RESULT orient agreement="), std::string::npos);
}

TEST(Cli, OrientEvenCurveBothMethods) {
  const auto r = run_cli("orient " + data + "/fig8.curve");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("orientation (warping): +1"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("orientation (rotation):"), std::string::npos);
}

TEST(Cli, OrientSerializesTheOrientedCurve) {
  const auto r = run_cli("orient " + data + "/lemniscate.curve --method black-right");
  EXPECT_EQ(r.exit_code, 0);
  // base 0 answers -1, so the reversed encoding is printed
  EXPECT_NE(r.out.find("orientation (black-right): -1"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("1 1R"), std::string::npos) << r.out;
}

TEST(Cli, OrientParityMismatch) {
  const auto r = run_cli("orient " + data + "/trefoil.curve --method rotation");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("odd_crossing_number"), std::string::npos) << r.err;
}

TEST(Cli, OrientMissingBase) {
  const auto path = write_temp("nobase.curve", "1 1L\nOUTER 1 LEFT\n");
  const auto r = run_cli("orient " + path);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("missing_base"), std::string::npos) << r.err;
  // the --base flag fills it in
  const auto r2 = run_cli("orient " + path + " --base 1");
  EXPECT_EQ(r2.exit_code, 0);
}

TEST(Cli, ChangeCommand) {
  const auto r = run_cli("change " + data + "/trefoil_one_bridge.gauss --crossing 1");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("U1 O2 O3 O1 U2 U3"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("A  = 1 + t + t^2"), std::string::npos);
  EXPECT_NE(r.out.find("identities"), std::string::npos);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);

  const auto bad = run_cli("change " + data + "/trefoil_one_bridge.gauss --crossing 9");
  EXPECT_EQ(bad.exit_code, 3);
}

TEST(Cli, RealizeFindsWitness) {
  const auto r = run_cli("realize \"[1,1,1]\"");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("realizable shape: yes"), std::string::npos);
  EXPECT_NE(r.out.find("witness:"), std::string::npos);
  EXPECT_NE(r.out.find("(matches)"), std::string::npos);

  const auto pretty = run_cli("realize \"1 + t + t^2\"");
  EXPECT_EQ(pretty.exit_code, 0);
}

TEST(Cli, RealizeRejectsGappedShape) {
  const auto r = run_cli("realize \"[1,0,2]\"");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("realizable shape: no"), std::string::npos);
  EXPECT_NE(r.out.find("search confirms no diagram"), std::string::npos);
}

TEST(Cli, RealizeTooLarge) {
  const auto r = run_cli("realize \"[8]\"");
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_NE(r.err.find("too_large"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli("").exit_code, 2);
  EXPECT_EQ(run_cli("poly").exit_code, 2);
  EXPECT_EQ(run_cli("frobnicate x").exit_code, 2);
  EXPECT_EQ(run_cli("poly /nonexistent/file.gauss").exit_code, 3);
}

TEST(Cli, ResultLinesAreKeyValueTokens) {
  // RESULT lines are the machine-readable surface: after the command name,
  // every token must be a single key=value with no internal spaces.
  const std::string invocations[] = {
      "poly " + data + "/diagrams.gauss",
      "arc " + data + "/curl.arc",
      "statesum " + data + "/shadows.shadow",
      "orient " + data + "/trefoil.curve",
      "change " + data + "/trefoil_one_bridge.gauss --crossing 2",
      "realize \"[2,1]\"",
  };
  for (const auto& args : invocations) {
    const auto r = run_cli(args);
    EXPECT_EQ(r.exit_code, 0) << args << "\n" << r.err;
    std::istringstream lines(r.out);
    std::string line;
    bool saw_result = false;
    while (std::getline(lines, line)) {
      if (line.rfind("RESULT ", 0) != 0) continue;
      saw_result = true;
      std::istringstream toks(line);
      std::string tok;
      toks >> tok;  // RESULT
      toks >> tok;  // command tag
      EXPECT_EQ(tok.find('='), std::string::npos) << line;
      while (toks >> tok)
        EXPECT_NE(tok.find('='), std::string::npos) << line << " token: " << tok;
    }
    EXPECT_TRUE(saw_result) << args;
  }
}

TEST(Cli, VerifyReducedRun) {
  // statesum-limit 6 empties the random state-sum tier so this stays quick;
  // the exhaustive sweeps still run at their pinned scales
  const auto r = run_cli("verify --max-exhaustive-n 3 --random-samples 100 "
                         "--random-max-n 8 --statesum-limit 6");
  EXPECT_EQ(r.exit_code, 0) << r.out;
  EXPECT_NE(r.out.find("[PASS] state_sum_closed_form"), std::string::npos);
  EXPECT_NE(r.out.find("[PASS] orientation_independence_witnesses"), std::string::npos);
  EXPECT_NE(r.out.find("RESULT verify passed=10 total=10"), std::string::npos);
  EXPECT_NE(r.out.find("all checks passed"), std::string::npos);
}

TEST(Cli, VerifySeedFromEnvironment) {
  const auto out_path = testing::TempDir() + "warpknot_env_out.txt";
  const std::string cmd = "WARPKNOT_SEED=321 " + cli +
                          " verify --max-exhaustive-n 1 --random-samples 1 --random-max-n 1 "
                          "--statesum-limit 1 >" +
                          out_path + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  EXPECT_EQ(WEXITSTATUS(status), 0);
  std::ifstream in(out_path);
  std::ostringstream buf;
  buf << in.rdbuf();
  EXPECT_NE(buf.str().find("seed=321"), std::string::npos) << buf.str();
}
