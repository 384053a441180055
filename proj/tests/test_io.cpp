// Copyright 2026 opwitness contributors
// SPDX-License-Identifier: Apache-2.0

#include "opwitness/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <doctest.h>

#include "opwitness/random.hpp"

using namespace opw;
using nlohmann::json;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("opwitness_test_" + std::to_string(std::rand()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("matrix JSON round-trip preserves entries exactly") {
  Rng rng(1);
  const ComplexMatrix m = random_hermitian(4, rng);
  const json j = matrix_to_json(m, DimVector{2, 2}, "AB");
  CHECK(j.at("ordering") == "AB");
  CHECK(j.at("dims") == std::vector<int>{2, 2});
  const ComplexMatrix back = matrix_from_json(j);
  CHECK((m - back).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("matrix_from_json rejects malformed input") {
  CHECK_THROWS_AS(matrix_from_json(json::array()), Error);
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"([[1, 2], [3]])")), Error);
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"([[[1, 2], [0, "x"]]])")),
                  Error);
}

TEST_CASE("channel_from_json parses every node kind") {
  const json uni = json::parse(
      R"({"unitary": [[[0,0],[1,0]],[[1,0],[0,0]]]})");
  CHECK(channel_from_json(uni).kind() == ChannelExpr::Kind::unitary);

  const json dep = json{{"depolarizing", 4}};
  CHECK(channel_from_json(dep).kind() == ChannelExpr::Kind::depolarizing);

  const double s = 1.0 / std::sqrt(2.0);
  json k1 = json::array(), k2 = json::array();
  for (int r = 0; r < 2; ++r) {
    json row1 = json::array(), row2 = json::array();
    for (int c = 0; c < 2; ++c) {
      row1.push_back({r == c ? s : 0.0, 0.0});
      row2.push_back({r == c ? (r == 0 ? s : -s) : 0.0, 0.0});
    }
    k1.push_back(row1);
    k2.push_back(row2);
  }
  const json kr = json{{"kraus", json::array({k1, k2})}};
  CHECK(channel_from_json(kr).kind() == ChannelExpr::Kind::kraus);

  const json mix = json{
      {"mixture",
       json::array({json{{"weight", 0.25}, {"channel", uni}},
                    json{{"weight", 0.75}, {"channel", json{{"depolarizing", 2}}}}})}};
  const ChannelExpr ch = channel_from_json(mix);
  CHECK(ch.kind() == ChannelExpr::Kind::mixture);
  CHECK(ch.as_mixture().terms.size() == 2);
}

TEST_CASE("channel_from_json enforces exactly one kind key") {
  CHECK_THROWS_AS(channel_from_json(json::object()), Error);
  CHECK_THROWS_AS(
      channel_from_json(json{{"depolarizing", 2}, {"unitary", json::array()}}),
      Error);
  CHECK_THROWS_AS(channel_from_json(json{{"mixture", json::array({json{{"weight", 1.0}}})}}),
                  Error);
}

TEST_CASE("channel_from_json propagates completeness defects") {
  // single non-unitary Kraus operator: sum K†K != I
  const json bad = json::parse(
      R"({"kraus": [[[[1,0],[0,0]],[[0,0],[0,0]]]]})");
  CHECK_THROWS_WITH_AS(channel_from_json(bad),
                       doctest::Contains("completeness defect"), Error);
}

TEST_CASE("file round-trip through write_json_file/read_json_file") {
  TempDir tmp;
  const auto path = tmp.path / "doc.json";
  const json j = json{{"answer", 42}, {"nested", {{"x", 1.5}}}};
  write_json_file(path, j);
  CHECK(read_json_file(path) == j);

  std::ofstream(tmp.path / "broken.json") << "{ not json";
  CHECK_THROWS_AS(read_json_file(tmp.path / "broken.json"), Error);
  CHECK_THROWS_AS(read_json_file(tmp.path / "missing.json"), Error);
}

TEST_CASE("witness and report serialization carry the full contract") {
  const ChannelExpr ch = ChannelExpr::unitary(gate_matrix(GateId::cnot));
  const Witness w = build_witness(choi_state(ch), kPartitionAAt);
  const json jw = witness_to_json(w);
  CHECK(jw.at("ordering") == "ABA~B~");
  CHECK(jw.at("bipartition").at("first") == std::vector<int>{0, 2});
  CHECK(jw.at("eigenvalue").get<double>() == doctest::Approx(-0.5));
  CHECK((matrix_from_json(jw) - w.matrix).cwiseAbs().maxCoeff() == 0.0);

  const ThresholdReport r = witness_threshold(ch, w);
  const json jr = threshold_report_to_json(r);
  CHECK(jr.at("protocol") == "choi");
  CHECK(jr.at("method") == "analytic");
  CHECK(jr.at("p_star").get<double>() == doctest::Approx(1.0 / 9.0));
  CHECK(!jr.contains("bisection_tolerance"));

  const json jb = threshold_report_to_json(
      npt_threshold(ch, kPartitionAAt, 1e-6));
  CHECK(jb.at("method") == "bisection");
  CHECK(jb.at("bisection_tolerance").get<double>() == doctest::Approx(1e-6));
}

TEST_CASE("decomposition serialization") {
  const Witness w = build_witness(
      choi_state(ChannelExpr::unitary(gate_matrix(GateId::cnot))),
      kPartitionAAt);
  const json jp = pauli_decomposition_to_json(pauli_decompose(w));
  CHECK(jp.at("basis") == "pauli");
  CHECK(!jp.at("coefficients").empty());

  const json jm = mu_decomposition_to_json(mu_decompose(w));
  CHECK(jm.at("basis") == "mu");
  CHECK(jm.at("slot_order") == "A B A~ B~");
  CHECK(jm.at("terms").size() == 16);
}
