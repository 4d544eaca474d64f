#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

// End-to-end checks against the built binary.

namespace {

using nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string stdout_text;
};

std::string temp_path(const std::string& name) {
  return std::string("cli_test_") + name;
}

RunResult run_cli(const std::string& args) {
  const std::string out_file = temp_path("stdout.txt");
  const std::string command =
      std::string(LINDPUR_CLI_PATH) + " " + args + " > " + out_file + " 2> /dev/null";
  const int status = std::system(command.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(status);
  std::ifstream in(out_file, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  r.stdout_text = ss.str();
  return r;
}

std::string write_spec(const std::string& name, const std::string& content) {
  const std::string path = temp_path(name);
  std::ofstream f(path, std::ios::binary);
  f << content;
  return path;
}

const char* kQubitPairSpec = R"({
  "dim": 2,
  "generators": [
    {"hamiltonian": [[[0,0],[1,0]],[[1,0],[0,0]]],
     "lindblad_ops": [[[[0,0],[1,0]],[[0,0],[0,0]]]]},
    {"hamiltonian": [[[1,0],[0,0]],[[0,0],[-1,0]]],
     "lindblad_ops": [[[[0,0],[0,0]],[[0,0],[1,0]]]]}
  ],
  "t": 1.0,
  "seed": 7
})";

}  // namespace

TEST_CASE("purify command") {
  const std::string spec = write_spec("pair.json", kQubitPairSpec);
  SUBCASE("two generators purify and pass") {
    const RunResult r = run_cli("purify " + spec);
    REQUIRE(r.exit_code == 0);
    const json report = json::parse(r.stdout_text);
    CHECK(report.at("pass").get<bool>());
    CHECK(report.at("max_commutator_norm").get<double>() < 1e-10);
    CHECK(report.at("aux_dim").get<int>() == 2);
    CHECK(report.contains("spec_hash"));
    CHECK(report.contains("seed"));
    CHECK(report.contains("tol"));
  }
  SUBCASE("a single generator yields an empty commutator table") {
    const std::string single = write_spec("single.json", R"({
      "dim": 2,
      "generators": [{"hamiltonian": [[[0,0],[1,0]],[[1,0],[0,0]]]}]
    })");
    const RunResult r = run_cli("purify " + single);
    REQUIRE(r.exit_code == 0);
    const json report = json::parse(r.stdout_text);
    CHECK(report.at("commutator_norms").empty());
    CHECK(report.at("pass").get<bool>());
  }
  SUBCASE("malformed JSON exits 2") {
    const std::string bad = write_spec("bad.json", "{nope");
    CHECK(run_cli("purify " + bad).exit_code == 2);
  }
  SUBCASE("invariant violations exit 3") {
    const std::string nonherm = write_spec("nonherm.json", R"({
      "dim": 2,
      "generators": [{"hamiltonian": [[[0,0],[1,0]],[[2,0],[0,0]]]}]
    })");
    CHECK(run_cli("purify " + nonherm).exit_code == 3);
  }
}

TEST_CASE("zeno command") {
  const std::string spec = write_spec("pair.json", kQubitPairSpec);
  SUBCASE("default sweep has slope -1 and tiny recovery residual") {
    const std::string csv = temp_path("sweep.csv");
    const RunResult r = run_cli("zeno " + spec + " --n-steps 16 32 64 128 256 512 " +
                                "--csv " + csv);
    REQUIRE(r.exit_code == 0);
    const json report = json::parse(r.stdout_text);
    CHECK(std::abs(report.at("slope").get<double>() + 1.0) <= 0.1);
    CHECK(report.at("recovery_residual").get<double>() < 1e-10);
    CHECK(report.at("pass").get<bool>());

    std::ifstream csv_in(csv);
    std::string header;
    std::getline(csv_in, header);
    CHECK(header == "N,error");
    int rows = 0;
    for (std::string line; std::getline(csv_in, line);) {
      if (!line.empty()) ++rows;
    }
    CHECK(rows == 6);
  }
  SUBCASE("zero time gives zero errors and a null slope") {
    const RunResult r = run_cli("zeno " + spec + " --time 0 --n-steps 16 32");
    REQUIRE(r.exit_code == 0);
    const json report = json::parse(r.stdout_text);
    CHECK(report.at("slope").is_null());
    for (const auto& row : report.at("sweep")) {
      CHECK(row.at("error").get<double>() < 1e-12);
    }
  }
  SUBCASE("a single N cannot determine a slope") {
    const RunResult r = run_cli("zeno " + spec + " --n-steps 64");
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.stdout_text).at("slope").is_null());
  }
}

TEST_CASE("access command") {
  SUBCASE("the universal pair at d = 2 is accessible") {
    const RunResult r = run_cli("access --pair 2");
    REQUIRE(r.exit_code == 0);
    const json report = json::parse(r.stdout_text);
    CHECK(report.at("closure_dim").get<int>() == 12);
    CHECK(report.at("oracle_dim").get<int>() == 12);
    CHECK(report.at("pass").get<bool>());
  }
  SUBCASE("the purified pair collapses to dimension 2") {
    const RunResult r = run_cli("access --purified-pair 2");
    REQUIRE(r.exit_code == 0);
    const json report = json::parse(r.stdout_text);
    CHECK(report.at("closure_dim").get<int>() == 2);
    CHECK(report.at("pass").get<bool>());
  }
  SUBCASE("d = 1 violates the pair invariant") {
    CHECK(run_cli("access --pair 1").exit_code == 3);
  }
  SUBCASE("an exhausted dimension cap exits 4") {
    CHECK(run_cli("access --pair 2 --max-dim 5").exit_code == 4);
  }
  SUBCASE("spec input works too") {
    const std::string spec = write_spec("pair.json", kQubitPairSpec);
    const RunResult r = run_cli("access " + spec);
    REQUIRE(r.exit_code == 0);
    const json report = json::parse(r.stdout_text);
    CHECK(report.at("mode").get<std::string>() == "spec");
    CHECK(report.at("converged").get<bool>());
  }
}

TEST_CASE("demo appendix-a command") {
  const RunResult r = run_cli("demo appendix-a");
  REQUIRE(r.exit_code == 0);
  const json report = json::parse(r.stdout_text);
  CHECK_FALSE(report.at("cptp_at_unit_time").get<bool>());
  CHECK(std::abs(report.at("plus_state_min_eigenvalue").get<double>() + 0.2071) < 1e-3);
  CHECK(report.at("pass").get<bool>());
}

TEST_CASE("verify quartet command") {
  SUBCASE("d = 4 with 64 unitaries passes") {
    const RunResult r = run_cli("verify quartet 4 64 7");
    REQUIRE(r.exit_code == 0);
    const json report = json::parse(r.stdout_text);
    CHECK(report.at("max_pair_residual").get<double>() < 1e-8);
    CHECK(report.at("lindblad_reconstruction_error").get<double>() < 1e-8);
  }
  SUBCASE("d = 3 violates the quartet invariant") {
    CHECK(run_cli("verify quartet 3").exit_code == 3);
  }
}

TEST_CASE("reports are byte-identical across repeated runs") {
  const std::string spec = write_spec("pair.json", kQubitPairSpec);
  for (const std::string args :
       {std::string("purify ") + spec, std::string("zeno ") + spec + " --n-steps 16 32",
        std::string("access --pair 2"), std::string("demo appendix-a --seed 5")}) {
    const RunResult first = run_cli(args);
    const RunResult second = run_cli(args);
    CHECK(first.exit_code == second.exit_code);
    CHECK(first.stdout_text == second.stdout_text);
    CHECK_FALSE(first.stdout_text.empty());
  }
}

TEST_CASE("stdin input and --out files") {
  const std::string out = temp_path("report.json");
  const std::string command = std::string("echo '") + R"({"dim": 2, "generators":)" +
                              R"( [{"hamiltonian": [[[0,0],[1,0]],[[1,0],[0,0]]]}]})" +
                              "' | " + LINDPUR_CLI_PATH + " purify - --out " + out;
  const int status = std::system(command.c_str());
  REQUIRE(WEXITSTATUS(status) == 0);
  std::ifstream f(out);
  REQUIRE(f.good());
  const json report = json::parse(f);
  CHECK(report.at("pass").get<bool>());
}
