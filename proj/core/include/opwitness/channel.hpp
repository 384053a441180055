// Copyright 2026 opwitness contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef OPWITNESS_CHANNEL_HPP
#define OPWITNESS_CHANNEL_HPP

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "opwitness/linalg.hpp"

namespace opw {

// Registry of the two-qubit gates used throughout.
enum class GateId { identity, cnot, swap, sqrt_swap, bell };

GateId parse_gate_id(const std::string& name);
std::string gate_name(GateId id);

// 4x4 unitary for a registry gate. Conventions:
//  - cnot: control = subsystem A (first factor), target = B.
//  - sqrt_swap: principal square root of SWAP (eigenvalue -1 -> +i).
//  - bell: |00> -> Phi+, |11> -> Phi-, |01> -> Psi+, |10> -> Psi-.
ComplexMatrix gate_matrix(GateId id);

class ChannelExpr;

struct UnitaryNode {
  ComplexMatrix u;
};
struct KrausNode {
  std::vector<ComplexMatrix> ops;
};
struct DepolarizingNode {
  int dim;
};
struct MixtureNode {
  std::vector<std::pair<double, ChannelExpr>> terms;
};

// Symbolic channel: unitary | Kraus set | completely depolarizing | convex
// mixture. Mixtures stay symbolic until application or Choi construction so
// the affine-in-p structure survives for the analytic threshold solver.
// Invariants are checked at construction.
class ChannelExpr {
 public:
  static ChannelExpr unitary(ComplexMatrix u);
  static ChannelExpr kraus(std::vector<ComplexMatrix> ops);
  static ChannelExpr depolarizing(int dim);
  static ChannelExpr mixture(std::vector<std::pair<double, ChannelExpr>> terms);

  enum class Kind { unitary, kraus, depolarizing, mixture };
  Kind kind() const;
  int dim() const;

  const UnitaryNode& as_unitary() const;
  const KrausNode& as_kraus() const;
  const DepolarizingNode& as_depolarizing() const;
  const MixtureNode& as_mixture() const;

  std::string describe() const;

 private:
  using Node = std::variant<UnitaryNode, KrausNode, DepolarizingNode, MixtureNode>;
  explicit ChannelExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Applies the channel to a density matrix. Input should be Hermitian PSD
// trace-1; trace deviations up to 1e-6 only produce a stderr warning.
ComplexMatrix apply(const ChannelExpr& ch, const ComplexMatrix& rho);

// p*ch + (1-p)*completely depolarizing, kept symbolic.
ChannelExpr depolarize_mix(const ChannelExpr& ch, double p);

// Canonical Kraus set: unitary -> [U]; depolarizing(d) -> {|i><j|/sqrt(d)};
// mixtures -> sqrt(weight)-scaled concatenation.
std::vector<ComplexMatrix> kraus_of(const ChannelExpr& ch);

}  // namespace opw

#endif  // OPWITNESS_CHANNEL_HPP
