// Copyright 2026 opwitness contributors
// SPDX-License-Identifier: Apache-2.0

#include "opwitness/channel.hpp"

#include <cmath>
#include <iostream>
#include <sstream>

namespace opw {

namespace {

constexpr double kUnitaryTol = 1e-10;
constexpr double kKrausCompletenessTol = 1e-10;
constexpr double kWeightSumTol = 1e-12;

ComplexMatrix cnot_matrix() {
  ComplexMatrix u = ComplexMatrix::Zero(4, 4);
  u(0, 0) = 1;
  u(1, 1) = 1;
  u(2, 3) = 1;
  u(3, 2) = 1;
  return u;
}

ComplexMatrix swap_matrix() {
  ComplexMatrix u = ComplexMatrix::Zero(4, 4);
  u(0, 0) = 1;
  u(1, 2) = 1;
  u(2, 1) = 1;
  u(3, 3) = 1;
  return u;
}

ComplexMatrix sqrt_swap_matrix() {
  const Complex a(0.5, 0.5), b(0.5, -0.5);
  ComplexMatrix u = ComplexMatrix::Zero(4, 4);
  u(0, 0) = 1;
  u(3, 3) = 1;
  u(1, 1) = a;
  u(1, 2) = b;
  u(2, 1) = b;
  u(2, 2) = a;
  return u;
}

ComplexMatrix bell_matrix() {
  const double s = 1.0 / std::sqrt(2.0);
  ComplexMatrix u = ComplexMatrix::Zero(4, 4);
  // columns: |00> -> Phi+, |01> -> Psi+, |10> -> Psi-, |11> -> Phi-
  u(0, 0) = s;
  u(3, 0) = s;
  u(1, 1) = s;
  u(2, 1) = s;
  u(1, 2) = s;
  u(2, 2) = -s;
  u(0, 3) = s;
  u(3, 3) = -s;
  return u;
}

}  // namespace

GateId parse_gate_id(const std::string& name) {
  if (name == "identity") return GateId::identity;
  if (name == "cnot") return GateId::cnot;
  if (name == "swap") return GateId::swap;
  if (name == "sqrt_swap") return GateId::sqrt_swap;
  if (name == "bell") return GateId::bell;
  throw Error("unknown gate name: " + name);
}

std::string gate_name(GateId id) {
  switch (id) {
    case GateId::identity: return "identity";
    case GateId::cnot: return "cnot";
    case GateId::swap: return "swap";
    case GateId::sqrt_swap: return "sqrt_swap";
    case GateId::bell: return "bell";
  }
  throw Error("invalid GateId");
}

ComplexMatrix gate_matrix(GateId id) {
  switch (id) {
    case GateId::identity: return ComplexMatrix::Identity(4, 4);
    case GateId::cnot: return cnot_matrix();
    case GateId::swap: return swap_matrix();
    case GateId::sqrt_swap: return sqrt_swap_matrix();
    case GateId::bell: return bell_matrix();
  }
  throw Error("invalid GateId");
}

ChannelExpr ChannelExpr::unitary(ComplexMatrix u) {
  if (u.rows() != u.cols() || u.rows() < 2) {
    throw DimensionError("ChannelExpr::unitary: matrix must be square, side >= 2");
  }
  const double dev =
      (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols()))
          .cwiseAbs()
          .maxCoeff();
  if (dev > kUnitaryTol) {
    std::ostringstream os;
    os << "ChannelExpr::unitary: U†U deviates from identity by " << dev;
    throw Error(os.str());
  }
  return ChannelExpr(std::make_shared<const Node>(UnitaryNode{std::move(u)}));
}

ChannelExpr ChannelExpr::kraus(std::vector<ComplexMatrix> ops) {
  if (ops.empty()) throw Error("ChannelExpr::kraus: empty operator list");
  const auto rows = ops.front().rows();
  const auto cols = ops.front().cols();
  if (rows != cols) {
    throw DimensionError("ChannelExpr::kraus: operators must be square");
  }
  ComplexMatrix sum = ComplexMatrix::Zero(rows, cols);
  for (const auto& k : ops) {
    if (k.rows() != rows || k.cols() != cols) {
      throw DimensionError("ChannelExpr::kraus: operators differ in shape");
    }
    sum += k.adjoint() * k;
  }
  const double dev =
      (sum - ComplexMatrix::Identity(rows, cols)).cwiseAbs().maxCoeff();
  if (dev > kKrausCompletenessTol) {
    std::ostringstream os;
    os << "ChannelExpr::kraus: completeness defect, sum K†K deviates from "
          "identity by "
       << dev;
    throw Error(os.str());
  }
  return ChannelExpr(std::make_shared<const Node>(KrausNode{std::move(ops)}));
}

ChannelExpr ChannelExpr::depolarizing(int dim) {
  if (dim < 2) throw DimensionError("ChannelExpr::depolarizing: dim must be >= 2");
  return ChannelExpr(std::make_shared<const Node>(DepolarizingNode{dim}));
}

ChannelExpr ChannelExpr::mixture(
    std::vector<std::pair<double, ChannelExpr>> terms) {
  if (terms.empty()) throw Error("ChannelExpr::mixture: empty mixture");
  double sum = 0.0;
  const int d = terms.front().second.dim();
  for (const auto& [w, sub] : terms) {
    if (w < 0.0) throw Error("ChannelExpr::mixture: negative weight");
    if (sub.dim() != d) {
      throw DimensionError("ChannelExpr::mixture: sub-channels differ in dimension");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > kWeightSumTol) {
    std::ostringstream os;
    os << "ChannelExpr::mixture: weights sum to " << sum << ", expected 1";
    throw Error(os.str());
  }
  return ChannelExpr(std::make_shared<const Node>(MixtureNode{std::move(terms)}));
}

ChannelExpr::Kind ChannelExpr::kind() const {
  return static_cast<Kind>(node_->index());
}

int ChannelExpr::dim() const {
  switch (kind()) {
    case Kind::unitary: return static_cast<int>(as_unitary().u.rows());
    case Kind::kraus: return static_cast<int>(as_kraus().ops.front().rows());
    case Kind::depolarizing: return as_depolarizing().dim;
    case Kind::mixture: return as_mixture().terms.front().second.dim();
  }
  throw Error("invalid ChannelExpr");
}

const UnitaryNode& ChannelExpr::as_unitary() const {
  return std::get<UnitaryNode>(*node_);
}
const KrausNode& ChannelExpr::as_kraus() const {
  return std::get<KrausNode>(*node_);
}
const DepolarizingNode& ChannelExpr::as_depolarizing() const {
  return std::get<DepolarizingNode>(*node_);
}
const MixtureNode& ChannelExpr::as_mixture() const {
  return std::get<MixtureNode>(*node_);
}

std::string ChannelExpr::describe() const {
  std::ostringstream os;
  switch (kind()) {
    case Kind::unitary:
      os << "unitary(" << dim() << ")";
      break;
    case Kind::kraus:
      os << "kraus(" << as_kraus().ops.size() << " ops, dim " << dim() << ")";
      break;
    case Kind::depolarizing:
      os << "depolarizing(" << dim() << ")";
      break;
    case Kind::mixture: {
      os << "mixture[";
      bool first = true;
      for (const auto& [w, sub] : as_mixture().terms) {
        if (!first) os << ", ";
        first = false;
        os << w << "*" << sub.describe();
      }
      os << "]";
      break;
    }
  }
  return os.str();
}

ComplexMatrix apply(const ChannelExpr& ch, const ComplexMatrix& rho) {
  if (rho.rows() != rho.cols() || rho.rows() != ch.dim()) {
    std::ostringstream os;
    os << "apply: state is " << rho.rows() << "x" << rho.cols()
       << " but channel expects dimension " << ch.dim();
    throw DimensionError(os.str());
  }
  const double trace_dev = std::abs(rho.trace() - Complex(1.0, 0.0));
  if (trace_dev > 1e-6) {
    std::ostringstream os;
    os << "apply: input trace deviates from 1 by " << trace_dev;
    throw Error(os.str());
  }
  if (trace_dev > 1e-9) {
    std::cerr << "opwitness: warning: input state trace deviates from 1 by "
              << trace_dev << "\n";
  }

  switch (ch.kind()) {
    case ChannelExpr::Kind::unitary: {
      const auto& u = ch.as_unitary().u;
      return u * rho * u.adjoint();
    }
    case ChannelExpr::Kind::kraus: {
      ComplexMatrix out = ComplexMatrix::Zero(rho.rows(), rho.cols());
      for (const auto& k : ch.as_kraus().ops) out += k * rho * k.adjoint();
      return out;
    }
    case ChannelExpr::Kind::depolarizing: {
      const int d = ch.dim();
      return (rho.trace() / static_cast<double>(d)) *
             ComplexMatrix::Identity(d, d);
    }
    case ChannelExpr::Kind::mixture: {
      ComplexMatrix out = ComplexMatrix::Zero(rho.rows(), rho.cols());
      for (const auto& [w, sub] : ch.as_mixture().terms) {
        out += w * apply(sub, rho);
      }
      return out;
    }
  }
  throw Error("invalid ChannelExpr");
}

ChannelExpr depolarize_mix(const ChannelExpr& ch, double p) {
  if (p < 0.0 || p > 1.0) {
    std::ostringstream os;
    os << "depolarize_mix: p = " << p << " outside [0, 1]";
    throw Error(os.str());
  }
  return ChannelExpr::mixture(
      {{p, ch}, {1.0 - p, ChannelExpr::depolarizing(ch.dim())}});
}

std::vector<ComplexMatrix> kraus_of(const ChannelExpr& ch) {
  switch (ch.kind()) {
    case ChannelExpr::Kind::unitary:
      return {ch.as_unitary().u};
    case ChannelExpr::Kind::kraus:
      return ch.as_kraus().ops;
    case ChannelExpr::Kind::depolarizing: {
      const int d = ch.dim();
      const double scale = 1.0 / std::sqrt(static_cast<double>(d));
      std::vector<ComplexMatrix> ops;
      ops.reserve(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
      for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
          ComplexMatrix k = ComplexMatrix::Zero(d, d);
          k(i, j) = scale;
          ops.push_back(std::move(k));
        }
      }
      return ops;
    }
    case ChannelExpr::Kind::mixture: {
      std::vector<ComplexMatrix> ops;
      for (const auto& [w, sub] : ch.as_mixture().terms) {
        if (w == 0.0) continue;
        const double s = std::sqrt(w);
        for (const auto& k : kraus_of(sub)) ops.push_back(s * k);
      }
      return ops;
    }
  }
  throw Error("invalid ChannelExpr");
}

}  // namespace opw
