// Copyright 2026 opwitness contributors
// SPDX-License-Identifier: Apache-2.0

#include "opwitness/linalg.hpp"

#include <algorithm>
#include <cmath>

#include <doctest.h>

#include "opwitness/random.hpp"

using namespace opw;

namespace {

ComplexMatrix sigma_z() {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 1;
  m(1, 1) = -1;
  return m;
}

ComplexMatrix mu(int i) {
  // mu1 = I+sz, mu2 = I-sz, mu3 = sx+isy, mu4 = sx-isy
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  switch (i) {
    case 1: m(0, 0) = 2; break;
    case 2: m(1, 1) = 2; break;
    case 3: m(0, 1) = 2; break;
    case 4: m(1, 0) = 2; break;
  }
  return m;
}

// Oracle: PT spectrum of a pure state with Schmidt coefficients l_i is
// exactly {l_i^2} u {+-l_i l_j : i<j}. Schmidt coefficients come from an
// SVD of the coefficient matrix, independent of partial_transpose and
// hermitian_eigen.
std::vector<double> schmidt_pt_spectrum(const ComplexVector& psi, int d1,
                                        int d2) {
  ComplexMatrix coeff(d1, d2);
  for (int i = 0; i < d1; ++i)
    for (int j = 0; j < d2; ++j) coeff(i, j) = psi(i * d2 + j);
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

ComplexVector bell_phi_plus() {
  ComplexVector v = ComplexVector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return v;
}

}  // namespace

TEST_CASE("kron identity and sigma_z cases") {
  const ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
  CHECK((kron(i2, i2) - ComplexMatrix::Identity(4, 4)).norm() == doctest::Approx(0.0));

  const ComplexMatrix zz = kron(sigma_z(), sigma_z());
  ComplexMatrix expect = ComplexMatrix::Zero(4, 4);
  expect(0, 0) = 1;
  expect(1, 1) = -1;
  expect(2, 2) = -1;
  expect(3, 3) = 1;
  CHECK((zz - expect).norm() == doctest::Approx(0.0));
}

TEST_CASE("kron of mu1 and mu2 is 4|01><01|") {
  const ComplexMatrix m = kron(mu(1), mu(2));
  ComplexMatrix expect = ComplexMatrix::Zero(4, 4);
  expect(1, 1) = 4;
  CHECK((m - expect).norm() == doctest::Approx(0.0));
}

TEST_CASE("kron mixed-product identity on random inputs") {
  Rng rng(12345);
  for (int t = 0; t < 10; ++t) {
    const ComplexMatrix a = random_hermitian(3, rng);
    const ComplexMatrix b = random_hermitian(2, rng);
    const ComplexMatrix c = random_hermitian(3, rng);
    const ComplexMatrix d = random_hermitian(2, rng);
    CHECK(frobenius_distance(kron(a, b) * kron(c, d), kron(a * c, b * d)) <
          1e-10);
  }
}

TEST_CASE("partial_transpose identity and involution") {
  const ComplexMatrix i4 = ComplexMatrix::Identity(4, 4);
  CHECK((partial_transpose(i4, {2, 2}, {0}) - i4).norm() == doctest::Approx(0.0));

  Rng rng(7);
  const ComplexMatrix m = random_hermitian(16, rng);
  const DimVector dims{2, 2, 2, 2};
  const ComplexMatrix twice =
      partial_transpose(partial_transpose(m, dims, {1, 3}), dims, {1, 3});
  CHECK((twice - m).cwiseAbs().maxCoeff() == 0.0);  // bit-exact
}

TEST_CASE("partial_transpose of maximally entangled state spectrum") {
  const ComplexVector v = bell_phi_plus();
  const ComplexMatrix rho = v * v.adjoint();
  const auto sys = hermitian_eigen(partial_transpose(rho, {2, 2}, {0}));
  CHECK(sys.values(0) == doctest::Approx(-0.5).epsilon(1e-12));
  for (int i = 1; i < 4; ++i)
    CHECK(sys.values(i) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("partial_transpose linearity, trace and Hermiticity preservation") {
  Rng rng(99);
  const DimVector dims{2, 2, 2, 2};
  const std::vector<std::vector<int>> choices = {{0}, {1}, {2}, {3}, {0, 2},
                                                 {1, 3}, {0, 1}, {0, 1, 2, 3}};
  for (int t = 0; t < 5; ++t) {
    const ComplexMatrix a = random_hermitian(16, rng);
    const ComplexMatrix b = random_hermitian(16, rng);
    for (const auto& subs : choices) {
      const ComplexMatrix pa = partial_transpose(a, dims, subs);
      const ComplexMatrix pb = partial_transpose(b, dims, subs);
      const ComplexMatrix pab =
          partial_transpose(ComplexMatrix(2.0 * a - 0.5 * b), dims, subs);
      CHECK((pab - 2.0 * pa + 0.5 * pb).cwiseAbs().maxCoeff() < 1e-12);
      CHECK(std::abs(pa.trace() - a.trace()) < 1e-12);
      CHECK((pa - pa.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("partial_transpose rejects inconsistent dims") {
  const ComplexMatrix m = ComplexMatrix::Identity(6, 6);
  CHECK_THROWS_AS(partial_transpose(m, {2, 2}, {0}), DimensionError);
  CHECK_THROWS_AS(partial_transpose(ComplexMatrix::Identity(4, 4), {2, 2}, {2}),
                  DimensionError);
}

TEST_CASE("PT spectrum matches Schmidt oracle on random pure states") {
  Rng rng(2024);
  SUBCASE("two qubits") {
    for (int t = 0; t < 25; ++t) {
      const ComplexVector psi = haar_random_state(4, rng);
      const ComplexMatrix rho = psi * psi.adjoint();
      const auto sys = hermitian_eigen(partial_transpose(rho, {2, 2}, {0}));
      const auto oracle = schmidt_pt_spectrum(psi, 2, 2);
      for (int i = 0; i < 4; ++i)
        CHECK(std::abs(sys.values(i) - oracle[static_cast<std::size_t>(i)]) <
              1e-9);
    }
  }
  SUBCASE("4 x 4") {
    for (int t = 0; t < 10; ++t) {
      const ComplexVector psi = haar_random_state(16, rng);
      const ComplexMatrix rho = psi * psi.adjoint();
      const auto sys = hermitian_eigen(partial_transpose(rho, {4, 4}, {0}));
      const auto oracle = schmidt_pt_spectrum(psi, 4, 4);
      for (int i = 0; i < 16; ++i)
        CHECK(std::abs(sys.values(i) - oracle[static_cast<std::size_t>(i)]) <
              1e-9);
    }
  }
}

TEST_CASE("partial_trace examples") {
  const ComplexVector v = bell_phi_plus();
  const ComplexMatrix rho = v * v.adjoint();
  const ComplexMatrix marginal = partial_trace(rho, {2, 2}, {0});
  CHECK((marginal - 0.5 * ComplexMatrix::Identity(2, 2)).norm() < 1e-12);

  Rng rng(5);
  const ComplexMatrix a = random_hermitian(2, rng);
  const ComplexMatrix b = random_hermitian(3, rng);
  const ComplexMatrix kept = partial_trace(kron(a, b), {2, 3}, {0});
  CHECK((kept - b.trace() * a).norm() < 1e-10);

  const ComplexMatrix mixed = ComplexMatrix::Identity(16, 16) / 16.0;
  CHECK((partial_trace(mixed, {2, 2, 2, 2}, {0, 1}) -
         ComplexMatrix::Identity(4, 4) / 4.0)
            .norm() < 1e-12);
  CHECK(std::abs(partial_trace(mixed, {2, 2, 2, 2}, {2}).trace() -
                 Complex(1, 0)) < 1e-12);
}

TEST_CASE("hermitian_eigen diagonal case and contract") {
  ComplexMatrix d = ComplexMatrix::Zero(3, 3);
  d(0, 0) = 3;
  d(1, 1) = 1;
  d(2, 2) = 2;
  const auto sys = hermitian_eigen(d);
  CHECK(sys.values(0) == doctest::Approx(1));
  CHECK(sys.values(1) == doctest::Approx(2));
  CHECK(sys.values(2) == doctest::Approx(3));

  Rng rng(17);
  for (int t = 0; t < 10; ++t) {
    const ComplexMatrix m = random_hermitian(16, rng);
    const auto s = hermitian_eigen(m);
    // eigen-residual and orthonormality
    for (int i = 0; i < 16; ++i) {
      CHECK((m * s.vectors.col(i) - s.values(i) * s.vectors.col(i)).norm() <
            1e-9);
    }
    CHECK((s.vectors.adjoint() * s.vectors - ComplexMatrix::Identity(16, 16))
              .cwiseAbs()
              .maxCoeff() < 1e-10);
    // reconstruction
    ComplexMatrix rec = ComplexMatrix::Zero(16, 16);
    for (int i = 0; i < 16; ++i)
      rec += s.values(i) * (s.vectors.col(i) * s.vectors.col(i).adjoint());
    CHECK((rec - m).norm() < 1e-8 * m.norm());
  }
}

TEST_CASE("hermitian_eigen phase fixing is deterministic") {
  Rng rng(31);
  const ComplexMatrix m = random_hermitian(8, rng);
  const auto s1 = hermitian_eigen(m);
  const auto s2 = hermitian_eigen(m);
  CHECK((s1.vectors - s2.vectors).cwiseAbs().maxCoeff() == 0.0);
  for (int j = 0; j < 8; ++j) {
    Eigen::Index best = 0;
    s1.vectors.col(j).cwiseAbs().maxCoeff(&best);
    CHECK(s1.vectors(best, j).imag() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(s1.vectors(best, j).real() > 0.0);
  }
}

TEST_CASE("hermitian_eigen rejects non-Hermitian input with deviation") {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  CHECK_THROWS_WITH_AS(hermitian_eigen(m),
                       doctest::Contains("deviates from Hermiticity"), Error);
}

TEST_CASE("frobenius_distance, is_psd, dagger, mat_trace") {
  Rng rng(3);
  const ComplexMatrix m = random_hermitian(4, rng);
  CHECK(frobenius_distance(m, m) == 0.0);
  CHECK_FALSE(is_psd(-ComplexMatrix::Identity(2, 2), 1e-9));
  CHECK(is_psd(ComplexMatrix(m * m), 1e-9));
  CHECK((dagger(m) - m.adjoint()).norm() == 0.0);
  CHECK(std::abs(mat_trace(ComplexMatrix::Identity(16, 16) / 16.0) -
                 Complex(1, 0)) < 1e-15);
  CHECK_THROWS_AS(frobenius_distance(m, ComplexMatrix::Identity(2, 2)),
                  DimensionError);
}
