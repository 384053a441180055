// Copyright 2026 opwitness contributors
// SPDX-License-Identifier: Apache-2.0

#include "opwitness/choi.hpp"

#include <cmath>

#include <doctest.h>

#include "opwitness/random.hpp"

using namespace opw;

TEST_CASE("resource_state is the maximally entangled projector") {
  const ComplexMatrix r = resource_state(2, 2);
  CHECK(std::abs(r.trace().real() - 1.0) < 1e-12);
  CHECK((r * r - r).norm() < 1e-12);  // rank-1 projector

  // amplitudes 1/4 on |abab| pattern: <0000|r|1111> etc.
  CHECK(std::abs(r(0, 0).real() - 0.25) < 1e-12);
  CHECK(std::abs(r(0, 15).real() - 0.25) < 1e-12);  // |0000><1111|
  CHECK(std::abs(r(5, 10).real() - 0.25) < 1e-12);  // |0101><1010|
  CHECK(std::abs(r(1, 1).real()) < 1e-12);          // |0001| not in support

  // both marginals of the A B : A~ B~ split are maximally mixed
  const ComplexMatrix left = partial_trace(r, {2, 2, 2, 2}, {0, 1});
  CHECK((left - ComplexMatrix::Identity(4, 4) / 4.0).norm() < 1e-12);
}

TEST_CASE("choi_state of the identity channel is the resource state") {
  const ChoiState rho =
      choi_state(ChannelExpr::unitary(ComplexMatrix::Identity(4, 4)));
  CHECK((rho.matrix - resource_state(2, 2)).norm() < 1e-12);
  CHECK(rho.ordering == "ABA~B~");
  CHECK(rho.dims.dims == std::vector<int>{2, 2, 2, 2});
}

TEST_CASE("choi_state of the cnot channel") {
  const ChoiState rho = choi_state(ChannelExpr::unitary(gate_matrix(GateId::cnot)));
  CHECK(std::abs(rho.matrix.trace().real() - 1.0) < 1e-12);
  CHECK(is_psd(rho.matrix, 1e-10));

  // pure vectorization (1/2)(|0000> + |0101> + |1011> + |1110>)
  ComplexVector v = ComplexVector::Zero(16);
  v(0) = v(5) = v(11) = v(14) = 0.5;
  CHECK((rho.matrix - v * v.adjoint()).norm() < 1e-12);
}

TEST_CASE("choi_state of the depolarizing channel is maximally mixed") {
  const ChoiState rho = choi_state(ChannelExpr::depolarizing(4));
  CHECK((rho.matrix - ComplexMatrix::Identity(16, 16) / 16.0).norm() < 1e-12);
}

TEST_CASE("choi_state marginal on A~ B~ is maximally mixed for any channel") {
  Rng rng(23);
  for (int t = 0; t < 5; ++t) {
    const ChoiState rho =
        choi_state(ChannelExpr::kraus(random_kraus_ops(4, 2, rng)));
    CHECK(std::abs(rho.matrix.trace().real() - 1.0) < 1e-10);
    CHECK(is_psd(rho.matrix, 1e-10));
    const ComplexMatrix marg = partial_trace(rho.matrix, rho.dims, {2, 3});
    CHECK((marg - ComplexMatrix::Identity(4, 4) / 4.0).norm() < 1e-10);
  }
}

TEST_CASE("choi_state rejects dimension mismatch") {
  CHECK_THROWS_AS(
      choi_state(ChannelExpr::unitary(ComplexMatrix::Identity(4, 4)), 2, 3),
      DimensionError);
}

TEST_CASE("cjks_linearity_check holds for random channels and mixtures") {
  Rng rng(29);
  for (int t = 0; t < 5; ++t) {
    const ChannelExpr a = ChannelExpr::kraus(random_kraus_ops(4, 3, rng));
    const ChannelExpr b = ChannelExpr::kraus(random_kraus_ops(4, 2, rng));
    CHECK(cjks_linearity_check(a, b, 0.37, 3));
  }
  CHECK_THROWS_AS(
      cjks_linearity_check(ChannelExpr::depolarizing(4),
                           ChannelExpr::depolarizing(4), 1.5, 1),
      Error);
}

TEST_CASE("choi of a depolarized gate is affine in p") {
  const ChannelExpr ideal = ChannelExpr::unitary(gate_matrix(GateId::bell));
  const ComplexMatrix c1 = choi_state(ideal).matrix;
  const ComplexMatrix c0 = choi_state(ChannelExpr::depolarizing(4)).matrix;
  for (double p : {0.0, 0.2, 0.9, 1.0}) {
    const ComplexMatrix mixed = choi_state(depolarize_mix(ideal, p)).matrix;
    CHECK((mixed - p * c1 - (1 - p) * c0).norm() < 1e-12);
  }
}
