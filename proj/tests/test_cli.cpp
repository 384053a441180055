// Copyright 2026 opwitness contributors
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end tests driving the CLI binary.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "opwitness/io.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout + stderr
};

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("opwitness_cli_" + std::to_string(std::rand()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

RunResult run_cli(const std::string& args, const std::filesystem::path& dir) {
  const auto log = dir / "run.log";
  const std::string cmd = std::string(OPWITNESS_CLI_BIN) + " " + args + " > " +
                          log.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(log);
  std::ostringstream os;
  os << in.rdbuf();
  r.output = os.str();
  return r;
}

}  // namespace

TEST_CASE("choi command writes a trace-1 rank-1 matrix file") {
  TempDir tmp;
  const auto out = tmp.path / "choi.json";
  const RunResult r =
      run_cli("choi --gate cnot -o " + out.string(), tmp.path);
  CHECK(r.exit_code == 0);
  const json j = opw::read_json_file(out);
  CHECK(j.at("ordering") == "ABA~B~");
  const opw::ComplexMatrix m = opw::matrix_from_json(j);
  CHECK(std::abs(m.trace().real() - 1.0) < 1e-12);
  CHECK((m * m - m).norm() < 1e-10);  // rank-1 projector
}

TEST_CASE("choi --scale 4 yields integer entries") {
  TempDir tmp;
  const auto out = tmp.path / "choi4.json";
  const RunResult r =
      run_cli("choi --gate cnot --scale 4 -o " + out.string(), tmp.path);
  CHECK(r.exit_code == 0);
  const opw::ComplexMatrix m =
      opw::matrix_from_json(opw::read_json_file(out));
  for (int i = 0; i < 16; ++i)
    for (int k = 0; k < 16; ++k) {
      CHECK(std::abs(m(i, k).real() - std::round(m(i, k).real())) < 1e-12);
      CHECK(std::abs(m(i, k).imag()) < 1e-12);
    }
}

TEST_CASE("witness command prints eigenvalues and honors exit code 2") {
  TempDir tmp;
  {
    const RunResult r = run_cli("witness --gate sqrt_swap", tmp.path);
    CHECK(r.exit_code == 0);
    // -sqrt(5)/8 = -0.2795084...
    CHECK(r.output.find("-0.279508") != std::string::npos);
  }
  {
    const RunResult r = run_cli("witness --gate bell", tmp.path);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("-0.5") != std::string::npos);
  }
  {
    const auto ch = tmp.path / "depolarizing.json";
    opw::write_json_file(ch, json{{"depolarizing", 4}});
    const RunResult r = run_cli("witness --channel " + ch.string(), tmp.path);
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("no negative partial-transpose eigenvalue") !=
          std::string::npos);
  }
}

TEST_CASE("invalid channel files exit 1 and name the defect") {
  TempDir tmp;
  const auto bad = tmp.path / "bad.json";
  // single Kraus operator that is not trace preserving
  opw::write_json_file(
      bad, json::parse(R"({"kraus": [[[[1,0],[0,0]],[[0,0],[0,0]]]]})"));
  const RunResult r = run_cli("choi --channel " + bad.string(), tmp.path);
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("completeness defect") != std::string::npos);

  const RunResult r2 = run_cli("witness --gate nosuchgate", tmp.path);
  CHECK(r2.exit_code == 1);

  const RunResult r3 = run_cli("witness", tmp.path);
  CHECK(r3.exit_code == 1);
}

TEST_CASE("threshold command: all three modes") {
  TempDir tmp;
  {
    const RunResult r = run_cli("threshold --gate cnot --mode choi", tmp.path);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("0.11111111") != std::string::npos);
  }
  {
    const RunResult r = run_cli(
        "threshold --gate cnot --mode resource-free --input +0", tmp.path);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("0.33333333") != std::string::npos);
  }
  {
    const auto out = tmp.path / "report.json";
    const RunResult r = run_cli(
        "threshold --gate bell --mode npt --tol 1e-7 -o " + out.string(),
        tmp.path);
    CHECK(r.exit_code == 0);
    const json j = opw::read_json_file(out);
    CHECK(std::abs(j.at("p_star").get<double>() - 1.0 / 9.0) < 1e-6);
    CHECK(j.at("method") == "bisection");
  }
  {
    // cnot on |00> does not entangle: exit 2
    const RunResult r = run_cli(
        "threshold --gate cnot --mode resource-free --input 00", tmp.path);
    CHECK(r.exit_code == 2);
  }
  {
    const RunResult r = run_cli("threshold --gate cnot --mode bogus", tmp.path);
    CHECK(r.exit_code == 1);
  }
}

TEST_CASE("decompose command compares against the published lists") {
  TempDir tmp;
  {
    const RunResult r = run_cli("decompose --gate cnot --basis mu", tmp.path);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("16 nonzero mu terms") != std::string::npos);
    CHECK(r.output.find("all tuples match") != std::string::npos);
    CHECK(r.output.find("MISMATCH") == std::string::npos);
  }
  {
    const RunResult r =
        run_cli("decompose --gate sqrt_swap --basis mu", tmp.path);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("36 nonzero mu terms") != std::string::npos);
    CHECK(r.output.find("all tuples match") != std::string::npos);
  }
  {
    const RunResult r = run_cli("decompose --gate bell --basis mu", tmp.path);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("64 nonzero mu terms") != std::string::npos);
    CHECK(r.output.find("all tuples match") != std::string::npos);
  }
  {
    const RunResult r =
        run_cli("decompose --gate cnot --basis pauli", tmp.path);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("reconstruction error") != std::string::npos);
  }
  {
    const RunResult r =
        run_cli("decompose --gate cnot --basis fourier", tmp.path);
    CHECK(r.exit_code == 1);
  }
}

TEST_CASE("validate and estimate need a seed and are deterministic") {
  TempDir tmp;
  {
    const RunResult r =
        run_cli("validate --gate cnot --samples 2000 --seed 7", tmp.path);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("nonnegative on the sampled separable set") !=
          std::string::npos);
  }
  {
    const RunResult r = run_cli("validate --gate cnot --samples 2000", tmp.path);
    CHECK(r.exit_code == 1);  // seed required
  }
  {
    const RunResult a =
        run_cli("estimate --gate cnot --shots 100000 --seed 7", tmp.path);
    const RunResult b =
        run_cli("estimate --gate cnot --shots 100000 --seed 7", tmp.path);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("witness estimate") != std::string::npos);
  }
  {
    const RunResult r = run_cli("estimate --gate cnot --seed 7", tmp.path);
    CHECK(r.exit_code == 1);  // shots required
  }
}

TEST_CASE("reproduce passes and is byte-identical across runs") {
  TempDir tmp;
  const RunResult a = run_cli("reproduce", tmp.path);
  CHECK(a.exit_code == 0);
  CHECK(a.output.find("FAIL") == std::string::npos);
  const RunResult b = run_cli("reproduce", tmp.path);
  CHECK(a.output == b.output);
}
