// Copyright 2026 opwitness contributors
// SPDX-License-Identifier: Apache-2.0

#include "opwitness/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace opw {

namespace {

// Row-major strides for a dims vector (subsystem 0 slowest).
std::vector<int> strides_of(const DimVector& dims) {
  std::vector<int> s(static_cast<std::size_t>(dims.size()), 1);
  for (int i = dims.size() - 2; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] =
        s[static_cast<std::size_t>(i + 1)] * dims[i + 1];
  }
  return s;
}

void check_subsystems(const DimVector& dims, const std::vector<int>& subs,
                      const std::string& context) {
  for (int s : subs) {
    if (s < 0 || s >= dims.size()) {
      std::ostringstream os;
      os << context << ": subsystem index " << s << " out of range for "
         << dims.size() << " factors";
      throw DimensionError(os.str());
    }
  }
}

}  // namespace

int DimVector::total() const {
  int t = 1;
  for (int d : dims) t *= d;
  return t;
}

void DimVector::check_side(int side, const std::string& context) const {
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] < 2) {
      std::ostringstream os;
      os << context << ": subsystem " << i << " has dimension " << dims[i]
         << " (must be >= 2)";
      throw DimensionError(os.str());
    }
  }
  if (total() != side) {
    std::ostringstream os;
    os << context << ": product of subsystem dimensions " << total()
       << " does not equal matrix side " << side;
    throw DimensionError(os.str());
  }
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, const DimVector& dims,
                                const std::vector<int>& subsystems) {
  if (m.rows() != m.cols()) {
    throw DimensionError("partial_transpose: matrix is not square");
  }
  dims.check_side(static_cast<int>(m.rows()), "partial_transpose");
  check_subsystems(dims, subsystems, "partial_transpose");

  const int n = dims.size();
  const auto strides = strides_of(dims);
  std::vector<bool> swapped(static_cast<std::size_t>(n), false);
  for (int s : subsystems) swapped[static_cast<std::size_t>(s)] = true;

  const int side = static_cast<int>(m.rows());
  ComplexMatrix out(side, side);
  std::vector<int> ri(static_cast<std::size_t>(n)), ci(static_cast<std::size_t>(n));
  for (int r = 0; r < side; ++r) {
    for (int c = 0; c < side; ++c) {
      int rr = r, cc = c;
      for (int k = 0; k < n; ++k) {
        ri[static_cast<std::size_t>(k)] = (rr / strides[static_cast<std::size_t>(k)]) % dims[k];
        ci[static_cast<std::size_t>(k)] = (cc / strides[static_cast<std::size_t>(k)]) % dims[k];
      }
      int nr = 0, nc = 0;
      for (int k = 0; k < n; ++k) {
        const int rk = swapped[static_cast<std::size_t>(k)] ? ci[static_cast<std::size_t>(k)]
                                                            : ri[static_cast<std::size_t>(k)];
        const int ck = swapped[static_cast<std::size_t>(k)] ? ri[static_cast<std::size_t>(k)]
                                                            : ci[static_cast<std::size_t>(k)];
        nr += rk * strides[static_cast<std::size_t>(k)];
        nc += ck * strides[static_cast<std::size_t>(k)];
      }
      out(nr, nc) = m(r, c);
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const DimVector& dims,
                            const std::vector<int>& keep) {
  if (m.rows() != m.cols()) {
    throw DimensionError("partial_trace: matrix is not square");
  }
  dims.check_side(static_cast<int>(m.rows()), "partial_trace");
  check_subsystems(dims, keep, "partial_trace");

  const int n = dims.size();
  const auto strides = strides_of(dims);
  std::vector<bool> kept(static_cast<std::size_t>(n), false);
  for (int k : keep) kept[static_cast<std::size_t>(k)] = true;

  int keep_dim = 1, trace_dim = 1;
  std::vector<int> keep_axes, trace_axes;
  for (int k = 0; k < n; ++k) {
    if (kept[static_cast<std::size_t>(k)]) {
      keep_dim *= dims[k];
      keep_axes.push_back(k);
    } else {
      trace_dim *= dims[k];
      trace_axes.push_back(k);
    }
  }

  // full index of (kept multi-index ki, traced multi-index ti)
  auto full_index = [&](int ki, int ti) {
    int idx = 0;
    for (int a = static_cast<int>(keep_axes.size()) - 1; a >= 0; --a) {
      const int ax = keep_axes[static_cast<std::size_t>(a)];
      idx += (ki % dims[ax]) * strides[static_cast<std::size_t>(ax)];
      ki /= dims[ax];
    }
    for (int a = static_cast<int>(trace_axes.size()) - 1; a >= 0; --a) {
      const int ax = trace_axes[static_cast<std::size_t>(a)];
      idx += (ti % dims[ax]) * strides[static_cast<std::size_t>(ax)];
      ti /= dims[ax];
    }
    return idx;
  };

  ComplexMatrix out = ComplexMatrix::Zero(keep_dim, keep_dim);
  for (int r = 0; r < keep_dim; ++r)
    for (int c = 0; c < keep_dim; ++c)
      for (int t = 0; t < trace_dim; ++t)
        out(r, c) += m(full_index(r, t), full_index(c, t));
  return out;
}

EigenSystem hermitian_eigen(const ComplexMatrix& m, double herm_tol) {
  if (m.rows() != m.cols()) {
    throw DimensionError("hermitian_eigen: matrix is not square");
  }
  const double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (dev > herm_tol) {
    std::ostringstream os;
    os << "hermitian_eigen: input deviates from Hermiticity by " << dev
       << " (tolerance " << herm_tol << ")";
    throw Error(os.str());
  }

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
      ComplexMatrix(0.5 * (m + m.adjoint())));
  if (solver.info() != Eigen::Success) {
    throw Error("hermitian_eigen: eigensolver did not converge");
  }

  EigenSystem sys{solver.eigenvalues(), solver.eigenvectors()};

  // Phase fixing: largest-magnitude component real positive, lowest index
  // breaking ties. Keeps witnesses deterministic across runs and platforms.
  for (Eigen::Index j = 0; j < sys.vectors.cols(); ++j) {
    Eigen::Index best = 0;
    double best_mag = -1.0;
    for (Eigen::Index i = 0; i < sys.vectors.rows(); ++i) {
      const double mag = std::abs(sys.vectors(i, j));
      if (mag > best_mag + 1e-14) {
        best_mag = mag;
        best = i;
      }
    }
    if (best_mag > 0.0) {
      const Complex phase = sys.vectors(best, j) / best_mag;
      sys.vectors.col(j) *= std::conj(phase);
    }
  }
  return sys;
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("frobenius_distance: shape mismatch");
  }
  return (a - b).norm();
}

bool is_psd(const ComplexMatrix& m, double tol) {
  const auto sys = hermitian_eigen(m, std::max(tol, kHermTol));
  return sys.values.size() == 0 || sys.values.minCoeff() >= -tol;
}

ComplexMatrix dagger(const ComplexMatrix& m) { return m.adjoint(); }

Complex mat_trace(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionError("mat_trace: matrix is not square");
  }
  return m.trace();
}

}  // namespace opw
