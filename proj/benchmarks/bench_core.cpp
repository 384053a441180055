// Copyright 2026 opwitness contributors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "opwitness/choi.hpp"
#include "opwitness/random.hpp"
#include "opwitness/witness.hpp"

namespace {

using namespace opw;

void BM_Kron4x4(benchmark::State& state) {
  Rng rng(1);
  const ComplexMatrix a = random_hermitian(4, rng);
  const ComplexMatrix b = random_hermitian(4, rng);
  for (auto _ : state) benchmark::DoNotOptimize(kron(a, b));
}
BENCHMARK(BM_Kron4x4);

void BM_PartialTranspose16(benchmark::State& state) {
  Rng rng(2);
  const ComplexMatrix m = random_hermitian(16, rng);
  const DimVector dims{2, 2, 2, 2};
  for (auto _ : state)
    benchmark::DoNotOptimize(partial_transpose(m, dims, kPartitionAAt));
}
BENCHMARK(BM_PartialTranspose16);

void BM_HermitianEigen16(benchmark::State& state) {
  Rng rng(3);
  const ComplexMatrix m = random_hermitian(16, rng);
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigen(m));
}
BENCHMARK(BM_HermitianEigen16);

void BM_ChoiStateCnot(benchmark::State& state) {
  const ChannelExpr ch = ChannelExpr::unitary(gate_matrix(GateId::cnot));
  for (auto _ : state) benchmark::DoNotOptimize(choi_state(ch));
}
BENCHMARK(BM_ChoiStateCnot);

void BM_BuildWitness(benchmark::State& state) {
  const ChoiState rho =
      choi_state(ChannelExpr::unitary(gate_matrix(GateId::sqrt_swap)));
  for (auto _ : state)
    benchmark::DoNotOptimize(build_witness(rho, kPartitionAAt));
}
BENCHMARK(BM_BuildWitness);

void BM_PauliDecompose(benchmark::State& state) {
  const Witness w = build_witness(
      choi_state(ChannelExpr::unitary(gate_matrix(GateId::cnot))),
      kPartitionAAt);
  for (auto _ : state) benchmark::DoNotOptimize(pauli_decompose(w));
}
BENCHMARK(BM_PauliDecompose);

}  // namespace
