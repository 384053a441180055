// Copyright 2026 opwitness contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef OPWITNESS_CHOI_HPP
#define OPWITNESS_CHOI_HPP

#include <string>

#include "opwitness/channel.hpp"
#include "opwitness/linalg.hpp"

namespace opw {

// Trace-1 Choi state on the doubled space. Subsystem layout is always
// A B A~ B~ (subsystem indices 0..3); the A A~ : B B~ bipartition is the
// index sets {0,2} vs {1,3}.
struct ChoiState {
  ComplexMatrix matrix;
  DimVector dims;                    // [dA, dB, dA, dB]
  std::string ordering = "ABA~B~";
  std::string source;                // channel description
};

inline const std::vector<int> kPartitionAAt{0, 2};
inline const std::vector<int> kPartitionBBt{1, 3};

// Normalized maximally entangled resource
// (1/sqrt(dA*dB)) * sum_ij |ij>_{AB} |ij>_{A~B~}, as a density matrix in
// A B A~ B~ ordering.
ComplexMatrix resource_state(int dA, int dB);

// (ch ⊗ id)(resource_state), with ch acting on the A B factors. The channel
// input dimension must equal dA*dB.
ChoiState choi_state(const ChannelExpr& ch, int dA, int dB);

// Two-qubit convenience overload (dA = dB = 2).
ChoiState choi_state(const ChannelExpr& ch);

// Checks || choi(w*ch1 + (1-w)*ch2) - w*choi(ch1) - (1-w)*choi(ch2) ||_F
// <= 1e-10 for the given weight and, for trials > 1, additional
// deterministically generated weights.
bool cjks_linearity_check(const ChannelExpr& ch1, const ChannelExpr& ch2,
                          double weight, int trials);

}  // namespace opw

#endif  // OPWITNESS_CHOI_HPP
