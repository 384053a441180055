// Copyright 2026 opwitness contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef OPWITNESS_IO_HPP
#define OPWITNESS_IO_HPP

#include <filesystem>
#include <string>

#include <json.hpp>

#include "opwitness/channel.hpp"
#include "opwitness/choi.hpp"
#include "opwitness/threshold.hpp"
#include "opwitness/witness.hpp"

namespace opw {

// Matrix file format: complex entries as [re, im], row-major nested arrays,
// plus "dims" (subsystem dimension vector) and "ordering" fields.

nlohmann::json matrix_to_json(const ComplexMatrix& m);
nlohmann::json matrix_to_json(const ComplexMatrix& m, const DimVector& dims,
                              const std::string& ordering);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

// Channel file format: a JSON document with exactly one of the keys
// "unitary", "kraus", "depolarizing", "mixture".
ChannelExpr channel_from_json(const nlohmann::json& j);
ChannelExpr channel_from_file(const std::filesystem::path& path);

nlohmann::json witness_to_json(const Witness& w);
nlohmann::json threshold_report_to_json(const ThresholdReport& r);
nlohmann::json pauli_decomposition_to_json(const PauliDecomposition& d);
nlohmann::json mu_decomposition_to_json(const MuDecomposition& d);

void write_json_file(const std::filesystem::path& path,
                     const nlohmann::json& j);
nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace opw

#endif  // OPWITNESS_IO_HPP
