// Copyright 2026 opwitness contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef OPWITNESS_RANDOM_HPP
#define OPWITNESS_RANDOM_HPP

#include <cstdint>
#include <random>

#include "opwitness/linalg.hpp"

namespace opw {

using Rng = std::mt19937_64;

// Derives an independent substream rng; used so sampling loops stay
// reproducible regardless of chunking.
Rng substream(std::uint64_t seed, std::uint64_t index);

// Haar-random pure state (normalized complex Gaussian vector).
ComplexVector haar_random_state(int dim, Rng& rng);

// Haar-random unitary (QR of a Ginibre matrix with phase correction).
ComplexMatrix random_unitary(int dim, Rng& rng);

// Random Hermitian matrix with entries of order 1.
ComplexMatrix random_hermitian(int dim, Rng& rng);

// Random trace-preserving Kraus channel with n_ops operators (Stinespring
// dilation of a Haar unitary).
std::vector<ComplexMatrix> random_kraus_ops(int dim, int n_ops, Rng& rng);

}  // namespace opw

#endif  // OPWITNESS_RANDOM_HPP
