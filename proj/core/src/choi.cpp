// Copyright 2026 opwitness contributors
// SPDX-License-Identifier: Apache-2.0

#include "opwitness/choi.hpp"

#include <cmath>
#include <sstream>

namespace opw {

namespace {

// |a b a~ b~> index in A B A~ B~ ordering.
int basis_index(int a, int b, int at, int bt, int dA, int dB) {
  return ((a * dB + b) * dA + at) * dB + bt;
}

}  // namespace

ComplexMatrix resource_state(int dA, int dB) {
  if (dA < 2 || dB < 2) {
    throw DimensionError("resource_state: dA and dB must be >= 2");
  }
  const int side = dA * dB * dA * dB;
  ComplexVector psi = ComplexVector::Zero(side);
  const double amp = 1.0 / std::sqrt(static_cast<double>(dA * dB));
  for (int a = 0; a < dA; ++a)
    for (int b = 0; b < dB; ++b)
      psi(basis_index(a, b, a, b, dA, dB)) = amp;
  return psi * psi.adjoint();
}

ChoiState choi_state(const ChannelExpr& ch, int dA, int dB) {
  if (ch.dim() != dA * dB) {
    std::ostringstream os;
    os << "choi_state: channel dimension " << ch.dim()
       << " does not equal dA*dB = " << dA * dB;
    throw DimensionError(os.str());
  }

  if (ch.kind() == ChannelExpr::Kind::mixture) {
    // Linearity of the duality keeps mixtures exact in the weights.
    const auto& terms = ch.as_mixture().terms;
    ChoiState out;
    out.dims = DimVector{std::vector<int>{dA, dB, dA, dB}};
    out.source = ch.describe();
    out.matrix = ComplexMatrix::Zero(dA * dB * dA * dB, dA * dB * dA * dB);
    for (const auto& [w, sub] : terms) {
      if (w == 0.0) continue;
      out.matrix += w * choi_state(sub, dA, dB).matrix;
    }
    return out;
  }

  const ComplexMatrix resource = resource_state(dA, dB);
  const ComplexMatrix eye = ComplexMatrix::Identity(dA * dB, dA * dB);
  ComplexMatrix m = ComplexMatrix::Zero(resource.rows(), resource.cols());
  for (const ComplexMatrix& k : kraus_of(ch)) {
    const ComplexMatrix lifted = kron(k, eye);  // A B are the slow factors
    m += lifted * resource * lifted.adjoint();
  }

  ChoiState out;
  out.matrix = std::move(m);
  out.dims = DimVector{std::vector<int>{dA, dB, dA, dB}};
  out.source = ch.describe();
  return out;
}

ChoiState choi_state(const ChannelExpr& ch) { return choi_state(ch, 2, 2); }

bool cjks_linearity_check(const ChannelExpr& ch1, const ChannelExpr& ch2,
                          double weight, int trials) {
  if (ch1.dim() != ch2.dim()) {
    throw DimensionError("cjks_linearity_check: channel dimensions differ");
  }
  if (weight < 0.0 || weight > 1.0) {
    throw Error("cjks_linearity_check: weight outside [0, 1]");
  }
  const int d = ch1.dim();
  int dA = 2;
  while (dA * dA < d) ++dA;
  const int dB = d / dA;

  const ComplexMatrix c1 = choi_state(ch1, dA, dB).matrix;
  const ComplexMatrix c2 = choi_state(ch2, dA, dB).matrix;
  for (int t = 0; t < std::max(trials, 1); ++t) {
    // trial 0 uses the requested weight; later trials walk the interval
    const double w =
        (t == 0) ? weight : static_cast<double>(t) / (std::max(trials, 1) + 1.0);
    const ComplexMatrix mixed =
        choi_state(ChannelExpr::mixture({{w, ch1}, {1.0 - w, ch2}}), dA, dB)
            .matrix;
    if ((mixed - w * c1 - (1.0 - w) * c2).norm() > 1e-10) return false;
  }
  return true;
}

}  // namespace opw
