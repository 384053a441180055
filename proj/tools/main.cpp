// Copyright 2026 opwitness contributors
// SPDX-License-Identifier: Apache-2.0
//
// opwitness: certify nonseparability of two-qubit operations via the
// channel-state duality. Exit codes: 0 success, 2 channel not detectable,
// 1 usage or file-format errors.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "opwitness/choi.hpp"
#include "opwitness/io.hpp"
#include "opwitness/reproduce.hpp"
#include "opwitness/threshold.hpp"
#include "opwitness/witness.hpp"

namespace {

using namespace opw;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotDetectable = 2;

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("OPWITNESS_DATA_DIR")) return env;
  return OPWITNESS_DATA_DIR;
}

// Default comparison/bisection tolerance, overridable via OPWITNESS_TOL.
double default_tol(double fallback) {
  if (const char* env = std::getenv("OPWITNESS_TOL")) {
    try {
      return std::stod(env);
    } catch (const std::exception&) {
      throw Error("OPWITNESS_TOL is not a number: " + std::string(env));
    }
  }
  return fallback;
}

struct ChannelSource {
  std::string gate;     // registry name
  std::string channel;  // JSON file path
};

void add_channel_flags(CLI::App* cmd, ChannelSource& src) {
  auto* g = cmd->add_option("--gate", src.gate,
                            "registry gate: identity|cnot|swap|sqrt_swap|bell");
  auto* c = cmd->add_option("--channel", src.channel, "channel JSON file");
  g->excludes(c);
  c->excludes(g);
}

ChannelExpr resolve_channel(const ChannelSource& src) {
  if (!src.gate.empty() && !src.channel.empty())
    throw Error("give exactly one of --gate or --channel");
  if (!src.gate.empty())
    return ChannelExpr::unitary(gate_matrix(parse_gate_id(src.gate)));
  if (!src.channel.empty()) return channel_from_file(src.channel);
  throw Error("give exactly one of --gate or --channel");
}

std::string source_label(const ChannelSource& src) {
  return src.gate.empty() ? src.channel : src.gate;
}

struct MuTupleLists {
  std::set<MuTuple> positive;
  std::set<MuTuple> negative;
  bool alpha_convention = false;
  std::optional<double> source_eigenvalue;
};

std::optional<MuTupleLists> load_mu_lists(const std::string& gate) {
  const auto path = data_dir() / ("mu_tuples_" + gate + ".json");
  if (!std::filesystem::exists(path)) return std::nullopt;
  const json j = read_json_file(path);
  MuTupleLists out;
  auto tuple_of = [](const json& t) {
    return MuTuple{t[0].get<int>(), t[1].get<int>(), t[2].get<int>(),
                   t[3].get<int>()};
  };
  for (const auto& t : j.at("positive")) out.positive.insert(tuple_of(t));
  for (const auto& t : j.at("negative")) out.negative.insert(tuple_of(t));
  if (j.contains("errata")) {
    for (const auto& e : j.at("errata")) {
      const MuTuple printed = tuple_of(e.at("printed"));
      const MuTuple corrected = tuple_of(e.at("corrected"));
      for (auto* s : {&out.positive, &out.negative})
        if (s->erase(printed)) s->insert(corrected);
    }
  }
  out.alpha_convention = j.at("sign_convention").get<std::string>() == "alpha";
  if (j.contains("source_eigenvalue"))
    out.source_eigenvalue = j.at("source_eigenvalue").get<double>();
  return out;
}

std::string tuple_str(const MuTuple& t) {
  std::ostringstream os;
  os << "(" << t[0] << "," << t[1] << "," << t[2] << "," << t[3] << ")";
  return os.str();
}

int cmd_choi(const ChannelSource& src, double scale, std::string output) {
  if (output.empty()) output = "choi.json";
  const ChoiState rho = choi_state(resolve_channel(src));
  json j = matrix_to_json(ComplexMatrix(scale * rho.matrix), rho.dims,
                          rho.ordering);
  j["source"] = rho.source;
  j["scale"] = scale;
  write_json_file(output, j);
  std::cout << "choi state of " << source_label(src) << ": trace "
            << rho.matrix.trace().real() << ", written to " << output
            << " (scale " << scale << ")\n";
  return kExitOk;
}

int cmd_witness(const ChannelSource& src, const std::string& output) {
  const ChoiState rho = choi_state(resolve_channel(src));
  const Witness w = build_witness(rho, kPartitionAAt);
  if (!output.empty()) write_json_file(output, witness_to_json(w));
  std::cout << "witness for " << source_label(src)
            << ": eigenvalue " << w.eigenvalue << ", Tr(W*rho) "
            << evaluate(w, rho.matrix);
  if (!output.empty()) std::cout << ", written to " << output;
  std::cout << "\n";
  return kExitOk;
}

int cmd_threshold(const ChannelSource& src, const std::string& mode,
                  const std::string& input, double tol,
                  const std::string& output) {
  const ChannelExpr ch = resolve_channel(src);
  ThresholdReport report;
  if (mode == "choi") {
    const Witness w = build_witness(choi_state(ch), kPartitionAAt);
    report = witness_threshold(ch, w);
  } else if (mode == "npt") {
    report = npt_threshold(ch, kPartitionAAt, tol);
  } else if (mode == "resource-free") {
    if (input.empty())
      throw Error("--input is required for --mode resource-free");
    report = resource_free_threshold(ch, input);
  } else {
    throw Error("unknown --mode: " + mode +
                " (expected choi|resource-free|npt)");
  }
  report.gate = source_label(src);
  if (!output.empty()) write_json_file(output, threshold_report_to_json(report));
  std::cout << "threshold for " << report.gate << " ("
            << protocol_name(report.protocol) << ", "
            << method_name(report.method) << "): p* = " << report.p_star
            << " [f(1) = " << report.value_at_p1
            << ", f(0) = " << report.value_at_p0 << "]";
  if (!output.empty()) std::cout << ", written to " << output;
  std::cout << "\n";
  return kExitOk;
}

int cmd_decompose(const ChannelSource& src, const std::string& basis,
                  const std::string& output) {
  const ChoiState rho = choi_state(resolve_channel(src));

  // Registry gates with a published tuple list are decomposed with the same
  // witness the list was derived from (for sqrt_swap that is the projector
  // onto a specific degenerate eigenspace rather than the single most
  // negative eigenvector).
  std::optional<MuTupleLists> expected;
  if (!src.gate.empty()) expected = load_mu_lists(src.gate);
  const Witness w =
      (expected && expected->source_eigenvalue)
          ? build_eigenspace_witness(rho, kPartitionAAt,
                                     *expected->source_eigenvalue)
          : build_witness(rho, kPartitionAAt);
  std::cout << "witness: " << w.provenance << "\n";

  if (basis == "pauli") {
    const PauliDecomposition d = pauli_decompose(w);
    const double err = (pauli_reconstruct(d, 4) - w.matrix).norm();
    std::cout << d.size() << " nonzero Pauli terms, reconstruction error "
              << err << "\n";
    for (const auto& [word, c] : d)
      std::cout << "  " << word << "  " << c << "\n";
    if (!output.empty())
      write_json_file(output, pauli_decomposition_to_json(d));
  } else if (basis == "mu") {
    const MuDecomposition d = mu_decompose(w);
    const double err = (mu_reconstruct(d) - w.matrix).norm();
    std::cout << d.size() << " nonzero mu terms (slot order A B A~ B~), "
              << "reconstruction error " << err << "\n";
    int mismatches = 0;
    for (const auto& [t, c] : d) {
      double value = c.real();
      if (expected && expected->alpha_convention && mu_alpha(t) % 2 == 1)
        value = -value;
      std::cout << "  " << tuple_str(t) << "  " << c.real();
      if (std::abs(c.imag()) > 1e-12) std::cout << " + " << c.imag() << "i";
      if (expected) {
        const bool want_pos = expected->positive.count(t) > 0;
        const bool want_neg = expected->negative.count(t) > 0;
        const bool ok = (want_pos || want_neg) && ((value > 0) == want_pos);
        std::cout << "  [" << (ok ? "match" : "MISMATCH") << "]";
        if (!ok) ++mismatches;
      }
      std::cout << "\n";
    }
    if (expected) {
      for (const auto& t : expected->positive)
        if (!d.count(t)) {
          std::cout << "  " << tuple_str(t) << "  [MISSING, expected +]\n";
          ++mismatches;
        }
      for (const auto& t : expected->negative)
        if (!d.count(t)) {
          std::cout << "  " << tuple_str(t) << "  [MISSING, expected -]\n";
          ++mismatches;
        }
      std::cout << "comparison against the published list: "
                << (mismatches == 0 ? "all tuples match"
                                    : std::to_string(mismatches) +
                                          " mismatches")
                << "\n";
    }
    if (!output.empty()) write_json_file(output, mu_decomposition_to_json(d));
  } else {
    throw Error("unknown --basis: " + basis + " (expected pauli|mu)");
  }
  if (!output.empty()) std::cout << "written to " << output << "\n";
  return kExitOk;
}

int cmd_validate(const ChannelSource& src, long samples, std::uint64_t seed) {
  const Witness w =
      build_witness(choi_state(resolve_channel(src)), kPartitionAAt);
  const SeparableScan scan = validate_on_separable(w, samples, seed);
  std::cout << "minimum of Tr(W*rho) over " << samples
            << " random product states: " << scan.min_value << " at "
            << scan.argmin << "\n";
  std::cout << (scan.min_value >= -default_tol(1e-10)
                    ? "witness is nonnegative on the sampled separable set"
                    : "WITNESS VIOLATION on a separable state")
            << "\n";
  return kExitOk;
}

int cmd_estimate(const ChannelSource& src, long shots, std::uint64_t seed,
                 double p) {
  const ChannelExpr ideal = resolve_channel(src);
  const Witness w = build_witness(choi_state(ideal), kPartitionAAt);
  const ChoiState noisy = choi_state(depolarize_mix(ideal, p));
  const ShotEstimate e = estimate_witness(w, noisy.matrix, shots, seed);
  const double exact = evaluate(w, noisy.matrix);
  std::cout << "witness estimate at p = " << p << " with " << shots
            << " shots per setting: " << e.estimate << " +- " << e.std_error
            << " (exact " << exact << ", deviation "
            << (e.estimate - exact) / (e.std_error > 0 ? e.std_error : 1.0)
            << " sigma)\n";
  return kExitOk;
}

int cmd_reproduce(std::uint64_t seed) {
  const auto results = run_reproduction_checks(data_dir(), seed);
  int failures = 0;
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS" : "FAIL") << "  [" << std::setw(2) << r.id
              << "] " << r.name << ":" << r.detail << "\n";
    if (!r.pass) ++failures;
  }
  std::cout << results.size() - static_cast<std::size_t>(failures) << "/"
            << results.size() << " checks passed\n";
  return failures == 0 ? kExitOk : kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certify nonseparability of two-qubit operations via the "
               "channel-state duality"};
  app.require_subcommand(1);

  ChannelSource src;
  double scale = 1.0;
  std::string output;
  std::string mode = "choi";
  std::string input;
  std::string basis;
  double tol = default_tol(1e-7);
  long samples = 100000;
  long shots = 0;
  std::uint64_t seed = 0;
  double p = 1.0;

  auto* c_choi = app.add_subcommand("choi", "write a channel's Choi state");
  add_channel_flags(c_choi, src);
  c_choi->add_option("--scale", scale, "multiply entries before writing");
  c_choi->add_option("-o,--output", output, "output file (default choi.json)");

  auto* c_wit = app.add_subcommand(
      "witness", "build the witness from the most negative PT eigenvector");
  add_channel_flags(c_wit, src);
  c_wit->add_option("-o,--output", output, "output file");

  auto* c_thr =
      app.add_subcommand("threshold", "depolarizing-noise detection threshold");
  add_channel_flags(c_thr, src);
  c_thr->add_option("--mode", mode, "choi|resource-free|npt")
      ->default_val("choi");
  c_thr->add_option("--input", input,
                    "two-qubit product input for resource-free mode, e.g. +0");
  c_thr->add_option("--tol", tol, "bisection tolerance (npt mode)");
  c_thr->add_option("-o,--output", output, "report file");

  auto* c_dec = app.add_subcommand("decompose",
                                   "decompose the witness into local terms");
  add_channel_flags(c_dec, src);
  c_dec->add_option("--basis", basis, "pauli|mu")->required();
  c_dec->add_option("-o,--output", output, "output file");

  auto* c_val = app.add_subcommand(
      "validate", "scan random product states for witness violations");
  add_channel_flags(c_val, src);
  c_val->add_option("--samples", samples, "number of product states");
  c_val->add_option("--seed", seed, "RNG seed")->required();

  auto* c_est = app.add_subcommand(
      "estimate", "simulate shot-based measurement of the witness");
  add_channel_flags(c_est, src);
  c_est->add_option("--shots", shots, "shots per measurement setting")
      ->required();
  c_est->add_option("--seed", seed, "RNG seed")->required();
  c_est->add_option("--p", p, "depolarizing mixing parameter in [0,1]");

  auto* c_rep = app.add_subcommand(
      "reproduce", "run every published-value reproduction check");
  c_rep->add_option("--seed", seed, "RNG seed for the stochastic checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    std::cout << std::setprecision(12);
    if (app.got_subcommand(c_choi)) return cmd_choi(src, scale, output);
    if (app.got_subcommand(c_wit)) return cmd_witness(src, output);
    if (app.got_subcommand(c_thr))
      return cmd_threshold(src, mode, input, tol, output);
    if (app.got_subcommand(c_dec)) return cmd_decompose(src, basis, output);
    if (app.got_subcommand(c_val)) return cmd_validate(src, samples, seed);
    if (app.got_subcommand(c_est)) return cmd_estimate(src, shots, seed, p);
    if (app.got_subcommand(c_rep)) {
      if (c_rep->count("--seed") == 0) seed = 20260823;
      return cmd_reproduce(seed);
    }
  } catch (const NotDetectableError& e) {
    std::cerr << "not detectable: " << e.what() << "\n";
    return kExitNotDetectable;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
