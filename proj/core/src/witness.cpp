// Copyright 2026 opwitness contributors
// SPDX-License-Identifier: Apache-2.0

#include "opwitness/witness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "opwitness/random.hpp"

namespace opw {

namespace {

constexpr double kNegEigCutoff = -1e-10;

std::vector<int> complement(const std::vector<int>& part, int n) {
  std::vector<bool> in(static_cast<std::size_t>(n), false);
  for (int s : part) in[static_cast<std::size_t>(s)] = true;
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (!in[static_cast<std::size_t>(i)]) out.push_back(i);
  return out;
}

Witness make_witness(const ChoiState& rho, const std::vector<int>& partition,
                     const ComplexMatrix& projector, double eigenvalue,
                     const std::string& detail) {
  Witness w;
  w.matrix = partial_transpose(projector, rho.dims, partition);
  w.dims = rho.dims;
  w.bipartition = {partition, complement(partition, rho.dims.size())};
  w.eigenvalue = eigenvalue;
  w.provenance = rho.source + "; " + detail;
  return w;
}

// mu_i row/column bit: mu_1=2|0><0|, mu_2=2|1><1|, mu_3=2|0><1|, mu_4=2|1><0|
constexpr int kMuRowBit[5] = {0, 0, 1, 0, 1};
constexpr int kMuColBit[5] = {0, 0, 1, 1, 0};

// tuple slot -> stored subsystem position (A B A~ B~)
std::array<int, 4> slot_map(MuSlotOrder order) {
  return order == MuSlotOrder::kABAtBt ? std::array<int, 4>{0, 1, 2, 3}
                                       : std::array<int, 4>{0, 2, 1, 3};
}

std::pair<int, int> mu_entry(const MuTuple& t, MuSlotOrder order) {
  const auto map = slot_map(order);
  int rbits[4], cbits[4];
  for (int slot = 0; slot < 4; ++slot) {
    rbits[map[static_cast<std::size_t>(slot)]] = kMuRowBit[t[static_cast<std::size_t>(slot)]];
    cbits[map[static_cast<std::size_t>(slot)]] = kMuColBit[t[static_cast<std::size_t>(slot)]];
  }
  const int r = rbits[0] * 8 + rbits[1] * 4 + rbits[2] * 2 + rbits[3];
  const int c = cbits[0] * 8 + cbits[1] * 4 + cbits[2] * 2 + cbits[3];
  return {r, c};
}

const ComplexMatrix& pauli_1q(char p) {
  static const ComplexMatrix kI = ComplexMatrix::Identity(2, 2);
  static const ComplexMatrix kX = [] {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 1) = 1;
    m(1, 0) = 1;
    return m;
  }();
  static const ComplexMatrix kY = [] {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 1) = Complex(0, -1);
    m(1, 0) = Complex(0, 1);
    return m;
  }();
  static const ComplexMatrix kZ = [] {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = 1;
    m(1, 1) = -1;
    return m;
  }();
  switch (p) {
    case 'I': return kI;
    case 'X': return kX;
    case 'Y': return kY;
    case 'Z': return kZ;
  }
  throw Error(std::string("invalid Pauli letter: ") + p);
}

int qubit_count(const ComplexMatrix& m) {
  int n = 0;
  Eigen::Index side = 1;
  while (side < m.rows()) {
    side *= 2;
    ++n;
  }
  if (side != m.rows() || m.rows() != m.cols()) {
    throw DimensionError("operator side is not a power of two");
  }
  return n;
}

}  // namespace

std::vector<NegativeEig> negative_eigs(const ChoiState& rho,
                                       const std::vector<int>& partition) {
  const ComplexMatrix pt = partial_transpose(rho.matrix, rho.dims, partition);
  const EigenSystem sys = hermitian_eigen(pt);
  std::vector<NegativeEig> out;
  for (Eigen::Index i = 0; i < sys.values.size(); ++i) {
    if (sys.values(i) < kNegEigCutoff) {
      out.push_back({sys.values(i), sys.vectors.col(i)});
    }
  }
  return out;
}

Witness build_witness(const ChoiState& rho, const std::vector<int>& partition,
                      std::optional<int> selector) {
  const auto negs = negative_eigs(rho, partition);
  if (negs.empty()) {
    throw NotDetectableError(
        "build_witness: no negative partial-transpose eigenvalue (not "
        "NPT-detectable)");
  }
  const int k = selector.value_or(0);
  if (k < 0 || k >= static_cast<int>(negs.size())) {
    std::ostringstream os;
    os << "build_witness: eigenvector index " << k << " out of range (found "
       << negs.size() << " negative eigenvalues)";
    throw NotDetectableError(os.str());
  }
  const auto& [value, vec] = negs[static_cast<std::size_t>(k)];
  std::ostringstream detail;
  detail << "negative PT eigenvector " << k << " (eigenvalue " << value << ")";
  return make_witness(rho, partition, ComplexMatrix(vec * vec.adjoint()), value,
                      detail.str());
}

Witness build_eigenspace_witness(const ChoiState& rho,
                                 const std::vector<int>& partition,
                                 double eigenvalue, double tol) {
  const auto negs = negative_eigs(rho, partition);
  if (negs.empty()) {
    throw NotDetectableError(
        "build_eigenspace_witness: no negative partial-transpose eigenvalue");
  }
  ComplexMatrix proj =
      ComplexMatrix::Zero(rho.matrix.rows(), rho.matrix.cols());
  int rank = 0;
  for (const auto& [value, vec] : negs) {
    if (std::abs(value - eigenvalue) <= tol) {
      proj += vec * vec.adjoint();
      ++rank;
    }
  }
  if (rank == 0) {
    std::ostringstream os;
    os << "build_eigenspace_witness: no negative eigenvalue within " << tol
       << " of " << eigenvalue;
    throw NotDetectableError(os.str());
  }
  std::ostringstream detail;
  detail << "negative PT eigenspace at " << eigenvalue << " (rank " << rank
         << ")";
  return make_witness(rho, partition, ComplexMatrix(proj / rank), eigenvalue,
                      detail.str());
}

double evaluate(const Witness& w, const ComplexMatrix& rho) {
  if (rho.rows() != w.matrix.rows() || rho.cols() != w.matrix.cols()) {
    throw DimensionError("evaluate: state and witness dimensions differ");
  }
  const Complex t = (w.matrix * rho).trace();
  if (std::abs(t.imag()) > 1e-10) {
    std::ostringstream os;
    os << "evaluate: Tr(W rho) has imaginary part " << t.imag()
       << "; inputs are not Hermitian";
    throw Error(os.str());
  }
  return t.real();
}

SeparableScan validate_on_separable(const Witness& w, long samples,
                                    std::uint64_t seed) {
  if (samples < 1) throw Error("validate_on_separable: samples must be >= 1");

  const auto& [part1, part2] = w.bipartition;
  int d1 = 1, d2 = 1;
  for (int s : part1) d1 *= w.dims[s];
  for (int s : part2) d2 *= w.dims[s];

  // strides in the stored full ordering
  const int n = w.dims.size();
  std::vector<int> strides(static_cast<std::size_t>(n), 1);
  for (int i = n - 2; i >= 0; --i)
    strides[static_cast<std::size_t>(i)] =
        strides[static_cast<std::size_t>(i + 1)] * w.dims[i + 1];

  auto embed = [&](const std::vector<int>& part, int sub_index) {
    int idx = 0;
    for (int a = static_cast<int>(part.size()) - 1; a >= 0; --a) {
      const int ax = part[static_cast<std::size_t>(a)];
      idx += (sub_index % w.dims[ax]) * strides[static_cast<std::size_t>(ax)];
      sub_index /= w.dims[ax];
    }
    return idx;
  };

  double best = std::numeric_limits<double>::infinity();
  long best_sample = -1;
  ComplexVector best_a, best_b;
  ComplexVector psi(d1 * d2);

  for (long s = 0; s < samples; ++s) {
    Rng rng = substream(seed, static_cast<std::uint64_t>(s));
    const ComplexVector a = haar_random_state(d1, rng);
    const ComplexVector b = haar_random_state(d2, rng);
    psi.setZero();
    for (int i = 0; i < d1; ++i) {
      const int base = embed(part1, i);
      for (int j = 0; j < d2; ++j) psi(base + embed(part2, j)) = a(i) * b(j);
    }
    const double value = (psi.adjoint() * w.matrix * psi)(0).real();
    if (value < best) {
      best = value;
      best_sample = s;
      best_a = a;
      best_b = b;
    }
  }

  std::ostringstream desc;
  desc << "product state |a>|b> from sample " << best_sample << ", a = [";
  for (int i = 0; i < best_a.size(); ++i) {
    if (i) desc << ", ";
    desc << best_a(i);
  }
  desc << "], b = [";
  for (int i = 0; i < best_b.size(); ++i) {
    if (i) desc << ", ";
    desc << best_b(i);
  }
  desc << "]";
  return {best, desc.str()};
}

ComplexMatrix pauli_string_matrix(const std::string& word) {
  ComplexMatrix m = ComplexMatrix::Identity(1, 1);
  for (char p : word) m = kron(m, pauli_1q(p));
  return m;
}

PauliDecomposition pauli_decompose(const ComplexMatrix& w) {
  const int n = qubit_count(w);
  const double herm_dev = (w - w.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > kHermTol) {
    throw Error("pauli_decompose: operator is not Hermitian");
  }
  const double norm = std::pow(2.0, n);
  const char letters[4] = {'I', 'X', 'Y', 'Z'};

  PauliDecomposition out;
  std::string word(static_cast<std::size_t>(n), 'I');
  const long total = 1L << (2 * n);
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (int q = n - 1; q >= 0; --q) {
      word[static_cast<std::size_t>(q)] = letters[c & 3];
      c >>= 2;
    }
    const Complex t = (pauli_string_matrix(word) * w).trace();
    const double coeff = t.real() / norm;
    if (std::abs(t.imag()) / norm > 1e-12) {
      throw Error("pauli_decompose: complex coefficient for " + word);
    }
    if (std::abs(coeff) > 1e-14) out[word] = coeff;
  }
  return out;
}

PauliDecomposition pauli_decompose(const Witness& w) {
  return pauli_decompose(w.matrix);
}

ComplexMatrix pauli_reconstruct(const PauliDecomposition& d, int n_qubits) {
  const int side = 1 << n_qubits;
  ComplexMatrix out = ComplexMatrix::Zero(side, side);
  for (const auto& [word, coeff] : d) {
    if (static_cast<int>(word.size()) != n_qubits) {
      throw DimensionError("pauli_reconstruct: word length mismatch");
    }
    out += coeff * pauli_string_matrix(word);
  }
  return out;
}

int mu_alpha(const MuTuple& t) {
  int a = 0;
  for (int i : t)
    if (i == 3 || i == 4) ++a;
  return a;
}

ComplexMatrix mu_tensor(const MuTuple& t, MuSlotOrder order) {
  const auto [r, c] = mu_entry(t, order);
  ComplexMatrix m = ComplexMatrix::Zero(16, 16);
  m(r, c) = 16.0;  // each mu factor is twice a matrix unit
  return m;
}

MuDecomposition mu_decompose(const ComplexMatrix& w, MuSlotOrder order) {
  if (w.rows() != 16 || w.cols() != 16) {
    throw DimensionError("mu_decompose: expected a 16x16 operator");
  }
  MuDecomposition out;
  MuTuple t;
  for (t[0] = 1; t[0] <= 4; ++t[0])
    for (t[1] = 1; t[1] <= 4; ++t[1])
      for (t[2] = 1; t[2] <= 4; ++t[2])
        for (t[3] = 1; t[3] <= 4; ++t[3]) {
          const auto [r, c] = mu_entry(t, order);
          const Complex coeff = w(r, c) / 16.0;
          if (std::abs(coeff) > 1e-14) out[t] = coeff;
        }
  return out;
}

MuDecomposition mu_decompose(const Witness& w, MuSlotOrder order) {
  return mu_decompose(w.matrix, order);
}

ComplexMatrix mu_reconstruct(const MuDecomposition& d, MuSlotOrder order) {
  ComplexMatrix out = ComplexMatrix::Zero(16, 16);
  for (const auto& [t, coeff] : d) out += coeff * mu_tensor(t, order);
  return out;
}

ShotEstimate estimate_witness(const Witness& w, const ComplexMatrix& rho,
                              long shots_per_setting, std::uint64_t seed) {
  if (shots_per_setting < 1) {
    throw Error("estimate_witness: shots_per_setting must be >= 1");
  }
  const PauliDecomposition dec = pauli_decompose(w);
  const double n = static_cast<double>(shots_per_setting);

  double estimate = 0.0;
  double variance = 0.0;
  std::uint64_t setting = 0;
  for (const auto& [word, coeff] : dec) {
    const ComplexMatrix p = pauli_string_matrix(word);
    double expct = ((p * rho).trace()).real();
    expct = std::clamp(expct, -1.0, 1.0);
    const double prob_plus = 0.5 * (1.0 + expct);

    Rng rng = substream(seed, setting++);
    std::binomial_distribution<long> binom(shots_per_setting, prob_plus);
    const long plus = binom(rng);
    const double mean = 2.0 * static_cast<double>(plus) / n - 1.0;
    // sample variance of +-1 outcomes
    const double svar =
        (shots_per_setting > 1) ? (1.0 - mean * mean) * n / (n - 1.0) : 0.0;

    estimate += coeff * mean;
    variance += coeff * coeff * svar / n;
  }
  return {estimate, std::sqrt(variance)};
}

}  // namespace opw
