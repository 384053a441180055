// Copyright 2026 opwitness contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef OPWITNESS_WITNESS_HPP
#define OPWITNESS_WITNESS_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opwitness/choi.hpp"
#include "opwitness/linalg.hpp"

namespace opw {

// Raised when a Choi state has no negative partial-transpose eigenvalue, so
// no witness of this family exists.
class NotDetectableError : public Error {
 public:
  using Error::Error;
};

// Hermitian trace-1 witness: the partial transpose of a projector built from
// the negative eigenspace of a partially transposed Choi state.
struct Witness {
  ComplexMatrix matrix;
  DimVector dims;
  std::pair<std::vector<int>, std::vector<int>> bipartition;
  double eigenvalue = 0.0;  // Tr(W * rho_source)
  std::string provenance;
};

struct NegativeEig {
  double value;
  ComplexVector vector;
};

// Eigenpairs of partial_transpose(rho, partition) with eigenvalue < -1e-10,
// ascending. Empty result means "no NPT detection possible".
std::vector<NegativeEig> negative_eigs(const ChoiState& rho,
                                       const std::vector<int>& partition);

// W = PT(v v†, partition) for the selected negative eigenvector (default:
// most negative). Throws NotDetectableError when no negative eigenvalue
// exists or the index is out of range.
Witness build_witness(const ChoiState& rho, const std::vector<int>& partition,
                      std::optional<int> selector = std::nullopt);

// W = PT(P / rank, partition) where P projects onto the full eigenspace of
// the negative eigenvalue closest to `eigenvalue`. Basis-independent, so it
// stays deterministic even for degenerate eigenvalues.
Witness build_eigenspace_witness(const ChoiState& rho,
                                 const std::vector<int>& partition,
                                 double eigenvalue, double tol = 1e-8);

// Real part of Tr(W * rho); rejects pairs whose trace has imaginary part
// above 1e-10.
double evaluate(const Witness& w, const ComplexMatrix& rho);

struct SeparableScan {
  double min_value;
  std::string argmin;  // human-readable description of the minimizing state
};

// Minimum of evaluate over Haar-random pure product states across the
// witness bipartition. Deterministic for a fixed seed.
SeparableScan validate_on_separable(const Witness& w, long samples,
                                    std::uint64_t seed);

// --- Pauli decomposition (Hermitian measurable basis) ---

// Keys are length-n words over {I, X, Y, Z}; coefficients are real.
using PauliDecomposition = std::map<std::string, double>;

PauliDecomposition pauli_decompose(const ComplexMatrix& w);
PauliDecomposition pauli_decompose(const Witness& w);
ComplexMatrix pauli_reconstruct(const PauliDecomposition& d, int n_qubits);
ComplexMatrix pauli_string_matrix(const std::string& word);

// --- mu decomposition (matrix-unit basis of the paper's local strategy) ---

// mu_1 = I + sz, mu_2 = I - sz, mu_3 = sx + i sy, mu_4 = sx - i sy.
// Coefficients are indexed by (i,j,k,l) in {1..4}^4.
using MuTuple = std::array<int, 4>;
using MuDecomposition = std::map<MuTuple, Complex>;

// Assignment of tuple slots to the stored A B A~ B~ subsystems.
enum class MuSlotOrder {
  kABAtBt,  // slots (A, B, A~, B~) — the order that matches the printed lists
  kAAtBBt,  // slots (A, A~, B, B~)
};

MuDecomposition mu_decompose(const ComplexMatrix& w,
                             MuSlotOrder order = MuSlotOrder::kABAtBt);
MuDecomposition mu_decompose(const Witness& w,
                             MuSlotOrder order = MuSlotOrder::kABAtBt);
ComplexMatrix mu_reconstruct(const MuDecomposition& d,
                             MuSlotOrder order = MuSlotOrder::kABAtBt);
ComplexMatrix mu_tensor(const MuTuple& t,
                        MuSlotOrder order = MuSlotOrder::kABAtBt);

// Number of indices equal to 3 or 4 (the paper's alpha exponent).
int mu_alpha(const MuTuple& t);

// --- shot-based estimation ---

struct ShotEstimate {
  double estimate;
  double std_error;
};

// Simulates projective measurement of every nonzero Pauli term of W on rho
// (outcomes +-1 with Born probabilities, shots_per_setting each), and
// combines the per-setting means with the decomposition coefficients.
// Unbiased; deterministic for a fixed seed.
ShotEstimate estimate_witness(const Witness& w, const ComplexMatrix& rho,
                              long shots_per_setting, std::uint64_t seed);

}  // namespace opw

#endif  // OPWITNESS_WITNESS_HPP
