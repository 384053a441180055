// Copyright 2026 opwitness contributors
// SPDX-License-Identifier: Apache-2.0

#include "opwitness/random.hpp"

#include <cmath>

namespace opw {

Rng substream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

ComplexVector haar_random_state(int dim, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexVector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  v.normalize();
  return v;
}

ComplexMatrix random_unitary(int dim, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // fix the phase ambiguity of QR so the distribution is Haar
  for (int j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(j) *= d / mag;
  }
  return q;
}

ComplexMatrix random_hermitian(int dim, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  return 0.5 * (g + g.adjoint());
}

std::vector<ComplexMatrix> random_kraus_ops(int dim, int n_ops, Rng& rng) {
  // Columns of a Haar unitary on dim*n_ops, restricted to environment |0>,
  // give an exactly trace-preserving Kraus set.
  const ComplexMatrix u = random_unitary(dim * n_ops, rng);
  std::vector<ComplexMatrix> ops;
  ops.reserve(static_cast<std::size_t>(n_ops));
  for (int e = 0; e < n_ops; ++e) {
    ComplexMatrix k(dim, dim);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) k(r, c) = u(r * n_ops + e, c * n_ops + 0);
    ops.push_back(std::move(k));
  }
  return ops;
}

}  // namespace opw
