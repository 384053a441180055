// Copyright 2026 opwitness contributors
// SPDX-License-Identifier: Apache-2.0

#include "opwitness/reproduce.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include "opwitness/io.hpp"
#include "opwitness/random.hpp"

namespace opw {

namespace {

using nlohmann::json;

constexpr double kSqrt5Over8 = 0.27950849718747373;  // sqrt(5)/8
constexpr double kSqrtSwapThreshold = 0.1827439976315568;  // 1/(1+2*sqrt(5))

struct MuPattern {
  std::set<MuTuple> positive;
  std::set<MuTuple> negative;
  bool alpha_convention = false;   // coefficient sign carries (-1)^alpha
  double source_eigenvalue = 0.0;  // 0 when unused
  std::vector<std::pair<MuTuple, MuTuple>> errata;  // printed -> corrected
};

MuTuple tuple_of(const json& j) {
  return MuTuple{j[0].get<int>(), j[1].get<int>(), j[2].get<int>(),
                 j[3].get<int>()};
}

std::string tuple_str(const MuTuple& t) {
  std::ostringstream os;
  os << "(" << t[0] << "," << t[1] << "," << t[2] << "," << t[3] << ")";
  return os.str();
}

MuPattern load_pattern(const std::filesystem::path& data_dir,
                       const std::string& gate) {
  const json j = read_json_file(data_dir / ("mu_tuples_" + gate + ".json"));
  MuPattern p;
  for (const auto& t : j.at("positive")) p.positive.insert(tuple_of(t));
  for (const auto& t : j.at("negative")) p.negative.insert(tuple_of(t));
  p.alpha_convention = j.at("sign_convention").get<std::string>() == "alpha";
  if (j.contains("source_eigenvalue")) {
    p.source_eigenvalue = j.at("source_eigenvalue").get<double>();
  }
  if (j.contains("errata")) {
    for (const auto& e : j.at("errata")) {
      p.errata.emplace_back(tuple_of(e.at("printed")),
                            tuple_of(e.at("corrected")));
    }
  }
  return p;
}

ComplexMatrix load_published_matrix(const std::filesystem::path& data_dir,
                                    const std::string& file, double& scale) {
  const json j = read_json_file(data_dir / file);
  scale = j.at("scale").get<double>();
  const auto& rows = j.at("matrix");
  ComplexMatrix m(16, 16);
  for (int r = 0; r < 16; ++r)
    for (int c = 0; c < 16; ++c)
      m(r, c) = Complex(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].get<double>(), 0.0);
  return m;
}

// Entrywise comparison; itemizes mismatches into `detail`.
bool compare_entrywise(const ComplexMatrix& got, const ComplexMatrix& expected,
                       double tol, std::ostringstream& detail,
                       const std::string& label) {
  int mismatches = 0;
  for (int r = 0; r < got.rows(); ++r) {
    for (int c = 0; c < got.cols(); ++c) {
      if (std::abs(got(r, c) - expected(r, c)) > tol) {
        if (mismatches < 8) {
          detail << " " << label << " mismatch at (" << r << "," << c
                 << "): got " << got(r, c) << ", published "
                 << expected(r, c).real() << ";";
        }
        ++mismatches;
      }
    }
  }
  if (mismatches == 0) {
    detail << " " << label << ": entrywise match;";
    return true;
  }
  detail << " " << label << ": " << mismatches << " mismatching entries;";
  return false;
}

// Support/sign comparison of a mu decomposition against a published pattern.
// With the alpha convention, published sign s means coefficient sign
// s * (-1)^alpha. `require_uniform` additionally demands equal magnitudes.
bool compare_pattern(const MuDecomposition& dec, const MuPattern& p,
                     bool require_uniform, std::ostringstream& detail) {
  std::set<MuTuple> expected_pos = p.positive;
  std::set<MuTuple> expected_neg = p.negative;
  for (const auto& [printed, corrected] : p.errata) {
    for (auto* s : {&expected_pos, &expected_neg}) {
      if (s->erase(printed)) {
        s->insert(corrected);
        detail << " applied documented erratum " << tuple_str(printed)
               << " -> " << tuple_str(corrected) << ";";
      }
    }
  }

  bool ok = true;
  std::set<MuTuple> seen;
  double magnitude = -1.0;
  for (const auto& [t, c] : dec) {
    if (std::abs(c) < 1e-12) continue;
    seen.insert(t);
    if (std::abs(c.imag()) > 1e-12) {
      detail << " complex coefficient at " << tuple_str(t) << ";";
      ok = false;
      continue;
    }
    double value = c.real();
    if (p.alpha_convention && mu_alpha(t) % 2 == 1) value = -value;
    const bool want_pos = expected_pos.count(t) > 0;
    const bool want_neg = expected_neg.count(t) > 0;
    if (!want_pos && !want_neg) {
      detail << " unexpected support at " << tuple_str(t) << ";";
      ok = false;
    } else if ((value > 0) != want_pos) {
      detail << " sign mismatch at " << tuple_str(t) << ";";
      ok = false;
    }
    if (require_uniform) {
      if (magnitude < 0) magnitude = std::abs(value);
      if (std::abs(std::abs(value) - magnitude) > 1e-10) {
        detail << " magnitude varies at " << tuple_str(t) << ";";
        ok = false;
      }
    }
  }
  for (const auto& t : expected_pos)
    if (!seen.count(t)) {
      detail << " missing tuple " << tuple_str(t) << ";";
      ok = false;
    }
  for (const auto& t : expected_neg)
    if (!seen.count(t)) {
      detail << " missing tuple " << tuple_str(t) << ";";
      ok = false;
    }
  detail << " support " << seen.size() << " tuples (expected "
         << expected_pos.size() + expected_neg.size() << ");";
  return ok;
}

ComplexMatrix mu_pattern_matrix(const MuPattern& p) {
  MuDecomposition d;
  for (const auto& t : p.positive) d[t] = 1.0;
  for (const auto& t : p.negative) d[t] = -1.0;
  if (p.alpha_convention) {
    for (auto& [t, c] : d)
      if (mu_alpha(t) % 2 == 1) c = -c;
  }
  return mu_reconstruct(d);
}

std::vector<double> schmidt_spectrum_a_at(const ComplexVector& psi) {
  // Coefficient matrix across the {A,A~}:{B,B~} split of |a b a~ b~>.
  ComplexMatrix coeff(4, 4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int at = 0; at < 2; ++at)
        for (int bt = 0; bt < 2; ++bt)
          coeff(a * 2 + at, b * 2 + bt) = psi(a * 8 + b * 4 + at * 2 + bt);
  Eigen::JacobiSVD<ComplexMatrix> svd(coeff);
  const auto l = svd.singularValues();
  std::vector<double> spec;
  for (int i = 0; i < l.size(); ++i) spec.push_back(l(i) * l(i));
  for (int i = 0; i < l.size(); ++i)
    for (int j = i + 1; j < l.size(); ++j) {
      spec.push_back(l(i) * l(j));
      spec.push_back(-l(i) * l(j));
    }
  std::sort(spec.begin(), spec.end());
  return spec;
}

CheckResult check_choi_construction(const std::filesystem::path& data_dir) {
  std::ostringstream detail;
  bool pass = true;

  const ChoiState rho = choi_state(ChannelExpr::unitary(gate_matrix(GateId::cnot)));
  const EigenSystem sys = hermitian_eigen(rho.matrix);
  const double second = sys.values(14);
  const double top = sys.values(15);
  pass &= std::abs(rho.matrix.trace().real() - 1.0) <= 1e-12;
  pass &= sys.values.minCoeff() >= -1e-10;
  pass &= second <= 1e-10;
  detail << "trace " << rho.matrix.trace().real() << ", top eigenvalue " << top
         << ", second " << second << ";";

  // vectorization target (1/2)(|0000> + |0101> + |1011> + |1110>)
  ComplexVector target = ComplexVector::Zero(16);
  target(0) = target(5) = target(11) = target(14) = 0.5;
  ComplexVector v = sys.vectors.col(15);
  int big = 0;
  v.cwiseAbs().maxCoeff(&big);
  v *= std::conj(v(big)) / std::abs(v(big)) *
       (target(big) / std::abs(target(big)));
  const double vec_err = (v - target).cwiseAbs().maxCoeff();
  pass &= vec_err <= 1e-12;
  detail << " vectorization error " << vec_err << ";";

  double scale = 4.0;
  const ComplexMatrix published =
      load_published_matrix(data_dir, "published_cnot_choi_matrix.json", scale);
  const ComplexMatrix pt =
      scale * partial_transpose(rho.matrix, rho.dims, kPartitionAAt);
  pass &= compare_entrywise(pt, published, 1e-12, detail,
                            "4*PT{A,A~}(choi) vs published Choi matrix");
  return {1, "Choi construction (CNOT)", pass, detail.str()};
}

CheckResult check_negative_eigs() {
  std::ostringstream detail;
  bool pass = true;
  struct Target {
    GateId gate;
    double value;
    int multiplicity;  // 0 = don't check
  };
  for (const Target& t : {Target{GateId::cnot, -0.5, 1},
                          Target{GateId::sqrt_swap, -kSqrt5Over8, 0},
                          Target{GateId::bell, -0.5, 1}}) {
    const ChoiState rho = choi_state(ChannelExpr::unitary(gate_matrix(t.gate)));
    const auto negs = negative_eigs(rho, kPartitionAAt);
    if (negs.empty()) {
      pass = false;
      detail << " " << gate_name(t.gate) << ": no negative eigenvalue;";
      continue;
    }
    const double min = negs.front().value;
    pass &= std::abs(min - t.value) <= 1e-9;
    detail << " " << gate_name(t.gate) << ": min " << min << " (target "
           << t.value << ", " << negs.size() << " negative);";
    if (t.multiplicity > 0) {
      int mult = 0;
      for (const auto& n : negs)
        if (std::abs(n.value - min) <= 1e-9) ++mult;
      pass &= mult == t.multiplicity;
      detail << " multiplicity " << mult << ";";
    }
  }
  return {2, "Negative PT eigenvalues", pass, detail.str()};
}

CheckResult check_choi_thresholds() {
  std::ostringstream detail;
  bool pass = true;
  struct Target {
    GateId gate;
    double p_star;
  };
  for (const Target& t :
       {Target{GateId::cnot, 1.0 / 9.0}, Target{GateId::sqrt_swap, kSqrtSwapThreshold},
        Target{GateId::bell, 1.0 / 9.0}}) {
    const ChannelExpr ch = ChannelExpr::unitary(gate_matrix(t.gate));
    const ChoiState rho = choi_state(ch);
    const Witness w = build_witness(rho, kPartitionAAt);
    const ThresholdReport analytic = witness_threshold(ch, w);
    const ThresholdReport bisect = npt_threshold(ch, kPartitionAAt, 1e-7);
    pass &= std::abs(analytic.p_star - t.p_star) <= 1e-9;
    pass &= std::abs(bisect.p_star - t.p_star) <= 1e-6;
    pass &= std::abs(bisect.p_star - analytic.p_star) <= 2e-6;
    detail << " " << gate_name(t.gate) << ": analytic " << analytic.p_star
           << ", bisection " << bisect.p_star << " (target " << t.p_star
           << ");";
  }
  return {3, "Detection thresholds, choi protocol", pass, detail.str()};
}

CheckResult check_resource_free_thresholds() {
  std::ostringstream detail;
  bool pass = true;
  struct Target {
    GateId gate;
    const char* input;
  };
  for (const Target& t : {Target{GateId::cnot, "+0"},
                          Target{GateId::sqrt_swap, "01"},
                          Target{GateId::bell, "00"}}) {
    const ChannelExpr ch = ChannelExpr::unitary(gate_matrix(t.gate));
    const ThresholdReport rf = resource_free_threshold(ch, t.input);
    const Witness w = build_witness(choi_state(ch), kPartitionAAt);
    const ThresholdReport choi_p = witness_threshold(ch, w);
    pass &= std::abs(rf.p_star - 1.0 / 3.0) <= 1e-9;
    pass &= rf.p_star > choi_p.p_star;
    detail << " " << gate_name(t.gate) << " on |" << t.input << ">: p* "
           << rf.p_star << " (choi protocol " << choi_p.p_star << ");";
  }
  return {4, "Detection thresholds, resource-free protocol", pass,
          detail.str()};
}

CheckResult check_mu_patterns(const std::filesystem::path& data_dir) {
  std::ostringstream detail;
  bool pass = true;

  // CNOT: unique witness, published 16-tuple list with the (-1)^alpha sign
  // convention; uniform magnitudes.
  {
    const MuPattern p = load_pattern(data_dir, "cnot");
    const Witness w =
        build_witness(choi_state(ChannelExpr::unitary(gate_matrix(GateId::cnot))),
                      kPartitionAAt);
    const MuDecomposition dec = mu_decompose(w);
    detail << " cnot:";
    pass &= compare_pattern(dec, p, /*require_uniform=*/true, detail);
    const double rec_err = (mu_reconstruct(dec) - w.matrix).norm();
    pass &= rec_err < 1e-10;
    detail << " reconstruction " << rec_err << ";";
  }

  // sqrt_swap: the published list decodes to the -1/8 PT eigenspace (the
  // text names -sqrt(5)/8). Our basis-independent eigenspace witness must
  // reproduce support and signs; the published uniform magnitudes correspond
  // to a specific non-uniform weighting inside that eigenspace, which is
  // validated as a genuine witness below.
  {
    const MuPattern p = load_pattern(data_dir, "sqrt_swap");
    const ChoiState rho =
        choi_state(ChannelExpr::unitary(gate_matrix(GateId::sqrt_swap)));
    const Witness w =
        build_eigenspace_witness(rho, kPartitionAAt, p.source_eigenvalue);
    const MuDecomposition dec = mu_decompose(w);
    detail << " sqrt_swap (eigenspace at " << p.source_eigenvalue << "):";
    pass &= compare_pattern(dec, p, /*require_uniform=*/false, detail);
    const double rec_err = (mu_reconstruct(dec) - w.matrix).norm();
    pass &= rec_err < 1e-10;
    detail << " reconstruction " << rec_err << ";";

    // published list, decoded literally, must itself be a valid witness:
    // Hermitian, PT PSD, PT supported in the negative eigenspace, negative
    // on the source Choi state
    const ComplexMatrix published = mu_pattern_matrix(p);
    const ComplexMatrix published_pt =
        partial_transpose(published, rho.dims, kPartitionAAt);
    bool valid = (published - published.adjoint()).cwiseAbs().maxCoeff() < 1e-12;
    valid &= is_psd(published_pt, 1e-10);
    const ComplexMatrix pt_choi =
        partial_transpose(rho.matrix, rho.dims, kPartitionAAt);
    valid &= (pt_choi * published_pt -
              p.source_eigenvalue * published_pt)
                 .cwiseAbs()
                 .maxCoeff() < 1e-9;
    const double on_source = (published * rho.matrix).trace().real() /
                             published.trace().real();
    valid &= on_source < 0;
    pass &= valid;
    detail << " published operator is a valid eigenspace witness: "
           << (valid ? "yes" : "NO") << " (value on source " << on_source
           << ");";
  }

  // bell: unique witness; published list has one documented misprint.
  {
    const MuPattern p = load_pattern(data_dir, "bell");
    const Witness w =
        build_witness(choi_state(ChannelExpr::unitary(gate_matrix(GateId::bell))),
                      kPartitionAAt);
    const MuDecomposition dec = mu_decompose(w);
    detail << " bell:";
    // the printed list must violate the 3<->4 Hermiticity pairing exactly at
    // the documented erratum, otherwise the correction would be unfounded
    for (const auto& [printed, corrected] : p.errata) {
      MuTuple partner{};
      for (int i = 0; i < 4; ++i) {
        const int x = printed[static_cast<std::size_t>(i)];
        partner[static_cast<std::size_t>(i)] = (x == 3) ? 4 : (x == 4) ? 3 : x;
      }
      const bool printed_violates = !p.positive.count(partner) &&
                                    !p.negative.count(partner);
      pass &= printed_violates;
      detail << " printed " << tuple_str(printed)
             << " lacks Hermiticity partner " << tuple_str(partner) << ": "
             << (printed_violates ? "confirmed" : "NOT confirmed") << ";";
    }
    pass &= compare_pattern(dec, p, /*require_uniform=*/true, detail);
    const double rec_err = (mu_reconstruct(dec) - w.matrix).norm();
    pass &= rec_err < 1e-10;
    detail << " reconstruction " << rec_err << ";";
  }

  return {5, "mu-decomposition patterns", pass, detail.str()};
}

CheckResult check_witness_validity(std::uint64_t seed) {
  std::ostringstream detail;
  bool pass = true;
  for (GateId g : {GateId::cnot, GateId::sqrt_swap, GateId::bell}) {
    const Witness w =
        build_witness(choi_state(ChannelExpr::unitary(gate_matrix(g))),
                      kPartitionAAt);
    const SeparableScan scan = validate_on_separable(w, 100000, seed);
    pass &= scan.min_value >= -1e-10;
    detail << " " << gate_name(g) << ": min over 1e5 product states "
           << scan.min_value << ";";
  }
  return {6, "Witness validity on separable product states", pass,
          detail.str()};
}

CheckResult check_pauli_roundtrip(std::uint64_t seed) {
  std::ostringstream detail;
  bool pass = true;
  Rng rng(seed);
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    const ComplexMatrix m = random_hermitian(16, rng);
    const PauliDecomposition dec = pauli_decompose(m);  // throws if complex
    const double err = (pauli_reconstruct(dec, 4) - m).norm();
    worst = std::max(worst, err);
    pass &= err < 1e-10;
  }
  detail << " worst reconstruction error over 50 random Hermitian operators: "
         << worst << ";";
  return {7, "Pauli decomposition round-trip", pass, detail.str()};
}

CheckResult check_cjks_linearity(std::uint64_t seed) {
  std::ostringstream detail;
  bool pass = true;
  Rng rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int t = 0; t < 50; ++t) {
    const ChannelExpr ch1 = ChannelExpr::kraus(random_kraus_ops(4, 3, rng));
    const ChannelExpr ch2 = ChannelExpr::kraus(random_kraus_ops(4, 2, rng));
    if (!cjks_linearity_check(ch1, ch2, unif(rng), 1)) {
      pass = false;
      detail << " failure at trial " << t << ";";
    }
  }
  detail << " 50 random channel mixtures checked;";
  return {8, "CJKS map linearity", pass, detail.str()};
}

CheckResult check_shot_estimator(std::uint64_t seed) {
  std::ostringstream detail;
  bool pass = true;
  const ChoiState rho =
      choi_state(ChannelExpr::unitary(gate_matrix(GateId::cnot)));
  const Witness w = build_witness(rho, kPartitionAAt);
  const ShotEstimate e1 = estimate_witness(w, rho.matrix, 1000000, seed);
  const ShotEstimate e2 = estimate_witness(w, rho.matrix, 1000000, seed);
  // The ideal Choi state is a stabilizer state, so every measured setting is
  // deterministic and the standard error is exactly 0; allow rounding slack.
  pass &= std::abs(e1.estimate + 0.5) <= 5.0 * e1.std_error + 1e-12;
  pass &= e1.estimate == e2.estimate && e1.std_error == e2.std_error;
  detail << " estimate " << e1.estimate << " +- " << e1.std_error
         << " (target -0.5); repeat run bit-identical: "
         << ((e1.estimate == e2.estimate) ? "yes" : "NO") << ";";

  // Genuinely stochastic case: half-depolarized channel.
  const ChoiState noisy = choi_state(
      depolarize_mix(ChannelExpr::unitary(gate_matrix(GateId::cnot)), 0.5));
  const ShotEstimate en = estimate_witness(w, noisy.matrix, 1000000, seed);
  const double exact = evaluate(w, noisy.matrix);
  pass &= en.std_error > 0.0;
  pass &= std::abs(en.estimate - exact) <= 5.0 * en.std_error;
  detail << " at p = 0.5: estimate " << en.estimate << " +- " << en.std_error
         << " (exact " << exact << ");";
  return {9, "Shot-based estimation of the CNOT witness", pass, detail.str()};
}

CheckResult check_pt_spectrum_oracle(std::uint64_t seed) {
  std::ostringstream detail;
  bool pass = true;
  Rng rng(seed);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const ComplexVector psi = haar_random_state(16, rng);
    const ComplexMatrix rho = psi * psi.adjoint();
    const EigenSystem sys = hermitian_eigen(
        partial_transpose(rho, DimVector{2, 2, 2, 2}, kPartitionAAt));
    const auto oracle = schmidt_spectrum_a_at(psi);
    for (int i = 0; i < 16; ++i) {
      const double err =
          std::abs(sys.values(i) - oracle[static_cast<std::size_t>(i)]);
      worst = std::max(worst, err);
      pass &= err <= 1e-9;
    }
  }
  detail << " worst spectrum deviation over 100 random pure states: " << worst
         << ";";
  return {10, "PT-spectrum Schmidt oracle", pass, detail.str()};
}

CheckResult check_published_witness_matrix(
    const std::filesystem::path& data_dir) {
  // Supplementary: 4*W_CNOT against the published witness matrix, and the
  // mu slot-order resolution (only the A B A~ B~ assignment reproduces the
  // published tuple list).
  std::ostringstream detail;
  bool pass = true;
  const Witness w =
      build_witness(choi_state(ChannelExpr::unitary(gate_matrix(GateId::cnot))),
                    kPartitionAAt);
  double scale = 4.0;
  const ComplexMatrix published = load_published_matrix(
      data_dir, "published_cnot_witness_matrix.json", scale);
  pass &= compare_entrywise(ComplexMatrix(scale * w.matrix), published, 1e-12,
                            detail, "4*W_CNOT vs published witness matrix");

  const MuPattern p = load_pattern(data_dir, "cnot");
  std::ostringstream scratch;
  const bool abab = compare_pattern(mu_decompose(w, MuSlotOrder::kABAtBt), p,
                                    true, scratch);
  std::ostringstream scratch2;
  const bool aabb = compare_pattern(mu_decompose(w, MuSlotOrder::kAAtBBt), p,
                                    true, scratch2);
  pass &= abab && !aabb;
  detail << " slot order (A,B,A~,B~) matches published list: "
         << (abab ? "yes" : "NO") << "; slot order (A,A~,B,B~) matches: "
         << (aabb ? "YES" : "no") << ";";
  return {11, "Published CNOT witness matrix and slot-order resolution", pass,
          detail.str()};
}

}  // namespace

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("OPWITNESS_DATA_DIR")) return env;
#ifdef OPWITNESS_DATA_DIR
  return OPWITNESS_DATA_DIR;
#else
  return "data";
#endif
}

std::vector<CheckResult> run_reproduction_checks(
    const std::filesystem::path& data_dir, std::uint64_t seed) {
  std::vector<CheckResult> results;
  results.push_back(check_choi_construction(data_dir));
  results.push_back(check_negative_eigs());
  results.push_back(check_choi_thresholds());
  results.push_back(check_resource_free_thresholds());
  results.push_back(check_mu_patterns(data_dir));
  results.push_back(check_witness_validity(seed));
  results.push_back(check_pauli_roundtrip(seed));
  results.push_back(check_cjks_linearity(seed));
  results.push_back(check_shot_estimator(seed));
  results.push_back(check_pt_spectrum_oracle(seed));
  results.push_back(check_published_witness_matrix(data_dir));
  return results;
}

}  // namespace opw
