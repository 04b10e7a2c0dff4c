#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "bispec/cli.hpp"
#include "bispec/json_io.hpp"
#include "support/generators.hpp"
#include "support/json_compare.hpp"

using namespace bispec;
using bispec::testing::json_diff;
using bispec::testing::read_json;

namespace {

std::string fixture(const std::string& name) { return std::string(BISPEC_FIXTURE_DIR) + "/" + name; }
std::string golden(const std::string& name) { return std::string(BISPEC_GOLDEN_DIR) + "/" + name; }

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& stem) {
  return (std::filesystem::temp_directory_path() / ("bispec_test_" + stem + ".json")).string();
}

}  // namespace

TEST_CASE("JSON commands match goldens on stdout") {
  const struct {
    const char* command;
    const char* input;
    const char* golden;
  } cases[] = {
      {"spectral", "j.json", "spectral_j.json"},
      {"adjoint", "upper_1pi2.json", "adjoint_upper_1pi2.json"},
      {"norm", "diag_2e1_3e2.json", "norm_diag_2e1_3e2.json"},
      {"decompose", "j.json", "decompose_j.json"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.command);
    const Run r = run({c.command, fixture(c.input)});
    REQUIRE(r.code == cli::kOk);
    CHECK(json_diff(nlohmann::json::parse(r.out), read_json(golden(c.golden))) == "");
  }
}

TEST_CASE("--out writes the document and prints the summary") {
  const std::string path = temp_path("spectral");
  const Run r = run({"--out", path, "spectral", fixture("j.json")});
  REQUIRE(r.code == cli::kOk);
  CHECK(r.out.find("lambda[0]") != std::string::npos);
  CHECK(json_diff(read_json(path), read_json(golden("spectral_j.json"))) == "");
  std::remove(path.c_str());
}

TEST_CASE("demo-compact goldens") {
  const struct {
    const char* n;
    const char* p;
    const char* q;
    const char* golden;
  } cases[] = {{"4", "1", "1", "demo_compact_4_1_1.json"}, {"2", "1", "2", "demo_compact_2_1_2.json"}};
  for (const auto& c : cases) {
    const std::string path = temp_path("demo");
    const Run r = run({"--out", path, "demo-compact", "--n-max", c.n, "--p", c.p, "--q", c.q});
    REQUIRE(r.code == cli::kOk);
    CHECK_FALSE(r.out.empty());
    CHECK(json_diff(read_json(path), read_json(golden(c.golden)), 1e-10) == "");
    std::remove(path.c_str());
  }
}

TEST_CASE("verify") {
  const Run ok = run({"verify", fixture("identity3.json")});
  CHECK(ok.code == cli::kOk);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  CHECK(ok.out.find("PASS reconstruction") != std::string::npos);
  CHECK(ok.out.find("INFO invertible: yes") != std::string::npos);

  const Run e1 = run({"verify", fixture("e1.json")});
  CHECK(e1.code == cli::kOk);
  CHECK(e1.out.find("INFO invertible: no") != std::string::npos);

  const Run non_sa = run({"verify", fixture("nilpotent.json")});
  CHECK(non_sa.code == cli::kOk);
  CHECK(non_sa.out.find("INFO self_adjoint: no") != std::string::npos);
  CHECK(non_sa.out.find("eigen_equation") == std::string::npos);

  const std::string path = temp_path("verify");
  const Run with_out = run({"--out", path, "verify", fixture("random_sa4.json")});
  CHECK(with_out.code == cli::kOk);
  const auto doc = read_json(path);
  CHECK(doc.at("passed") == true);
  CHECK(doc.at("checks").size() >= 12);
  std::remove(path.c_str());
}

TEST_CASE("verify is deterministic for a fixed seed") {
  const Run a = run({"--seed", "7", "verify", fixture("random_sa4.json")});
  const Run b = run({"--seed", "7", "verify", fixture("random_sa4.json")});
  CHECK(a.out == b.out);
  const Run c = run({"verify", fixture("random_sa4.json")});
  const Run d = run({"--seed", std::to_string(cli::kDefaultSeed), "verify", fixture("random_sa4.json")});
  CHECK(c.out == d.out);
}

TEST_CASE("exit codes") {
  CHECK(run({"spectral", fixture("malformed.json")}).code == cli::kParseError);
  CHECK(run({"spectral", fixture("wrong_shape.json")}).code == cli::kParseError);
  CHECK(run({"norm", fixture("does_not_exist.json")}).code == cli::kParseError);
  CHECK(run({"spectral"}).code == cli::kParseError);
  CHECK(run({"frobnicate"}).code == cli::kParseError);
  CHECK(run({"demo-compact", "--n-max", "1"}).code == cli::kParseError);
  CHECK(run({"--tol", "-1", "norm", fixture("j.json")}).code == cli::kParseError);

  const Run nsa = run({"spectral", fixture("nilpotent.json")});
  CHECK(nsa.code == cli::kNotSelfAdjoint);
  CHECK(nsa.out.empty());
  CHECK_FALSE(nsa.err.empty());

  CHECK(run({"--max-sweeps", "1", "spectral", fixture("random_sa4.json")}).code == cli::kNoConvergence);
  CHECK(run({"--tol", "10", "verify", fixture("nilpotent.json")}).code == cli::kCheckFailed);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("spectral output round-trips to the input operator") {
  const std::string input = fixture("random_sa4.json");
  const Run r = run({"spectral", input});
  REQUIRE(r.code == cli::kOk);
  const auto d = json_io::decomposition_from_json(json_io::parse(r.out));
  const BicomplexMatrix t = json_io::matrix_from_json(json_io::load_file(input));
  const double err = testing::max_diff(reconstruct(d), t);
  CHECK(err <= d.reconstruction_error + 1e-14 * (1.0 + operator_norm(t)));
  CHECK(err <= 1e-10 * (1.0 + operator_norm(t)));

  const Run adj = run({"adjoint", input});
  const BicomplexMatrix t_star = json_io::matrix_from_json(json_io::parse(adj.out));
  CHECK(testing::max_diff(t_star, t) <= 1e-15 * (1.0 + operator_norm(t)));
}
