// Copyright 2026 opwitness contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef OPWITNESS_LINALG_HPP
#define OPWITNESS_LINALG_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace opw {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Default tolerances. Matrices here are tiny (<= 256x256), so these are
// comfortably achievable with double precision.
inline constexpr double kHermTol = 1e-10;
inline constexpr double kEigResid = 1e-9;
inline constexpr double kPsdTol = 1e-10;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// Ordered list of subsystem dimensions. Subsystem 0 is the slowest-varying
// (leftmost) tensor factor.
struct DimVector {
  std::vector<int> dims;

  DimVector() = default;
  DimVector(std::initializer_list<int> d) : dims(d) {}
  explicit DimVector(std::vector<int> d) : dims(std::move(d)) {}

  int total() const;
  int size() const { return static_cast<int>(dims.size()); }
  int operator[](int i) const { return dims[static_cast<std::size_t>(i)]; }

  // Throws DimensionError unless total() == side and every dim >= 2.
  void check_side(int side, const std::string& context) const;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Transposes the chosen subsystems only. Involutive, trace- and
// Hermiticity-preserving.
ComplexMatrix partial_transpose(const ComplexMatrix& m, const DimVector& dims,
                                const std::vector<int>& subsystems);

// Traces out every subsystem not listed in `keep` (kept subsystems stay in
// their original relative order).
ComplexMatrix partial_trace(const ComplexMatrix& m, const DimVector& dims,
                            const std::vector<int>& keep);

struct EigenSystem {
  RealVector values;       // ascending
  ComplexMatrix vectors;   // orthonormal columns, phase-fixed
};

// Eigendecomposition of a Hermitian matrix. Rejects inputs whose max-abs
// deviation from Hermiticity exceeds herm_tol. Each eigenvector is rotated
// so its largest-magnitude component is real positive (ties: lowest index).
EigenSystem hermitian_eigen(const ComplexMatrix& m, double herm_tol = kHermTol);

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);
bool is_psd(const ComplexMatrix& m, double tol = kPsdTol);
ComplexMatrix dagger(const ComplexMatrix& m);
Complex mat_trace(const ComplexMatrix& m);

}  // namespace opw

#endif  // OPWITNESS_LINALG_HPP
