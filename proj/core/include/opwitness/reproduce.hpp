// Copyright 2026 opwitness contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef OPWITNESS_REPRODUCE_HPP
#define OPWITNESS_REPRODUCE_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace opw {

struct CheckResult {
  int id;
  std::string name;
  bool pass;
  std::string detail;  // measured values, itemized mismatches, notes
};

// Runs the full battery of published-value reproduction checks. `data_dir`
// must contain the published matrices and mu-tuple lists shipped under
// data/. Deterministic for a fixed seed.
std::vector<CheckResult> run_reproduction_checks(
    const std::filesystem::path& data_dir, std::uint64_t seed);

// Resolves the data directory: explicit argument, then the OPWITNESS_DATA_DIR
// environment variable, then the compiled-in default.
std::filesystem::path default_data_dir();

}  // namespace opw

#endif  // OPWITNESS_REPRODUCE_HPP
