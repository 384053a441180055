// Copyright 2026 opwitness contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef OPWITNESS_THRESHOLD_HPP
#define OPWITNESS_THRESHOLD_HPP

#include <optional>
#include <string>

#include "opwitness/channel.hpp"
#include "opwitness/witness.hpp"

namespace opw {

enum class Protocol { choi, resource_free };
enum class Method { analytic, bisection };

std::string protocol_name(Protocol p);
std::string method_name(Method m);

// Depolarizing-noise detection threshold: the witness value on the noisy
// channel p*ch + (1-p)*D is affine in p; p_star is its zero crossing, and
// the witness stays strictly negative for p > p_star.
struct ThresholdReport {
  Protocol protocol = Protocol::choi;
  std::string gate;
  double value_at_p1 = 0.0;  // Tr(W * rho_ideal)
  double value_at_p0 = 0.0;  // Tr(W * rho_white_noise)
  double p_star = 0.0;
  Method method = Method::analytic;
  std::optional<double> bisection_tolerance;
};

// Analytic solver for a fixed witness built from the ideal gate's Choi
// state: p_star = f(0) / (f(0) - f(1)), clamped to [0, 1]. Throws when the
// witness does not detect the ideal channel (f(1) >= 0).
ThresholdReport witness_threshold(const ChannelExpr& ch, const Witness& w);

// Bisection on the minimum PT eigenvalue of the noisy Choi state. Checks
// monotonicity on sample points and throws on violation; throws
// NotDetectableError when the ideal Choi state is not NPT.
ThresholdReport npt_threshold(const ChannelExpr& ch,
                              const std::vector<int>& partition, double tol);

// Resource-free protocol: apply the noisy channel to a fixed two-qubit
// product input and witness entanglement of the output across A:B. `input`
// is two characters from {0, 1, +, -}, e.g. "+0".
ThresholdReport resource_free_threshold(const ChannelExpr& ch,
                                        const std::string& input);

// |ab> density matrix for a two-character product descriptor.
ComplexMatrix product_input_state(const std::string& input);

}  // namespace opw

#endif  // OPWITNESS_THRESHOLD_HPP
