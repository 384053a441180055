// Copyright 2026 opwitness contributors
// SPDX-License-Identifier: Apache-2.0

#include "opwitness/io.hpp"

#include <fstream>
#include <sstream>

namespace opw {

using nlohmann::json;

namespace {

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw Error("matrix entry is not a two-element [re, im] array");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json entries_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix entries_from_json(const json& rows) {
  if (!rows.is_array() || rows.empty()) {
    throw Error("matrix must be a non-empty nested row array");
  }
  const auto nrows = rows.size();
  const auto ncols = rows[0].size();
  ComplexMatrix m(static_cast<Eigen::Index>(nrows), static_cast<Eigen::Index>(ncols));
  for (std::size_t r = 0; r < nrows; ++r) {
    if (!rows[r].is_array() || rows[r].size() != ncols) {
      throw Error("matrix rows have inconsistent lengths");
    }
    for (std::size_t c = 0; c < ncols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          complex_from_json(rows[r][c]);
    }
  }
  return m;
}

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
  return json{{"matrix", entries_to_json(m)}};
}

json matrix_to_json(const ComplexMatrix& m, const DimVector& dims,
                    const std::string& ordering) {
  return json{{"matrix", entries_to_json(m)},
              {"dims", dims.dims},
              {"ordering", ordering}};
}

ComplexMatrix matrix_from_json(const json& j) {
  if (j.contains("matrix")) return entries_from_json(j.at("matrix"));
  return entries_from_json(j);
}

ChannelExpr channel_from_json(const json& j) {
  if (!j.is_object()) throw Error("channel document must be a JSON object");
  int keys = 0;
  for (const char* k : {"unitary", "kraus", "depolarizing", "mixture"}) {
    if (j.contains(k)) ++keys;
  }
  if (keys != 1) {
    throw Error(
        "channel document must contain exactly one of: unitary, kraus, "
        "depolarizing, mixture");
  }
  if (j.contains("unitary")) {
    return ChannelExpr::unitary(entries_from_json(j.at("unitary")));
  }
  if (j.contains("kraus")) {
    const auto& ops = j.at("kraus");
    if (!ops.is_array() || ops.empty()) {
      throw Error("\"kraus\" must be a non-empty array of matrices");
    }
    std::vector<ComplexMatrix> ks;
    for (const auto& op : ops) ks.push_back(entries_from_json(op));
    return ChannelExpr::kraus(std::move(ks));
  }
  if (j.contains("depolarizing")) {
    return ChannelExpr::depolarizing(j.at("depolarizing").get<int>());
  }
  const auto& terms = j.at("mixture");
  if (!terms.is_array() || terms.empty()) {
    throw Error("\"mixture\" must be a non-empty array");
  }
  std::vector<std::pair<double, ChannelExpr>> parsed;
  for (const auto& t : terms) {
    if (!t.contains("weight") || !t.contains("channel")) {
      throw Error("mixture terms need \"weight\" and \"channel\" keys");
    }
    parsed.emplace_back(t.at("weight").get<double>(),
                        channel_from_json(t.at("channel")));
  }
  return ChannelExpr::mixture(std::move(parsed));
}

ChannelExpr channel_from_file(const std::filesystem::path& path) {
  return channel_from_json(read_json_file(path));
}

json witness_to_json(const Witness& w) {
  return json{{"matrix", entries_to_json(w.matrix)},
              {"dims", w.dims.dims},
              {"ordering", "ABA~B~"},
              {"bipartition",
               {{"first", w.bipartition.first}, {"second", w.bipartition.second}}},
              {"eigenvalue", w.eigenvalue},
              {"provenance", w.provenance}};
}

json threshold_report_to_json(const ThresholdReport& r) {
  json j{{"protocol", protocol_name(r.protocol)},
         {"gate", r.gate},
         {"witness_value_at_p1", r.value_at_p1},
         {"witness_value_at_p0", r.value_at_p0},
         {"p_star", r.p_star},
         {"method", method_name(r.method)}};
  if (r.bisection_tolerance) j["bisection_tolerance"] = *r.bisection_tolerance;
  return j;
}

json pauli_decomposition_to_json(const PauliDecomposition& d) {
  json terms = json::object();
  for (const auto& [word, coeff] : d) terms[word] = coeff;
  return json{{"basis", "pauli"}, {"coefficients", terms}};
}

json mu_decomposition_to_json(const MuDecomposition& d) {
  json terms = json::array();
  for (const auto& [t, coeff] : d) {
    terms.push_back(json{{"tuple", {t[0], t[1], t[2], t[3]}},
                         {"coefficient", complex_to_json(coeff)}});
  }
  return json{{"basis", "mu"},
              {"slot_order", "A B A~ B~"},
              {"mu_basis", "mu1=I+sz, mu2=I-sz, mu3=sx+isy, mu4=sx-isy"},
              {"terms", terms}};
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open for writing: " + path.string());
  out << j.dump(2) << "\n";
  if (!out) throw Error("write failed: " + path.string());
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw Error("invalid JSON in " + path.string() + ": " + e.what());
  }
  return j;
}

}  // namespace opw
