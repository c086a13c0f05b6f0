// Copyright 2026 The Hybrid Mechanisms Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HYBRID_PAYMENTS_H_
#define HYBRID_PAYMENTS_H_

// Myerson payments for the two bidders. Payments are unconditional charges:
// an agent pays p_i whether or not its option is drawn.

#include <cstdint>
#include <functional>

#include "hybrid/core.h"
#include "hybrid/mechanisms.h"

namespace hybrid {

struct PaymentVector {
  double a = 0.0;
  double b = 0.0;

  double of(Agent agent) const { return agent == Agent::kA ? a : b; }
};

struct Outcome {
  Option option;
  PaymentVector payments;
  Lottery lottery;
  std::uint64_t seed;
};

struct PaymentOptions {
  // Split the integral at the mechanism's declared breakpoints.
  bool use_hints = true;
  double abs_tol = 1e-9;
  double monotone_tol = 1e-9;
};

// Probability that `agent`'s option is selected when it bids `bid` against
// `other_bid`. Throws kDegenerateBids when both bids are zero.
double SelectionProbability(const MechanismDescriptor& m, Agent agent,
                            double bid, double other_bid,
                            const ExpertValues& expert);

// t -> SelectionProbability(m, agent, t, other_bid, expert). With a zero
// other bid the value at t = 0 is the limit from the right.
std::function<double(double)> SelectionCurveOf(const MechanismDescriptor& m,
                                               Agent agent, double other_bid,
                                               const ExpertValues& expert);

// Breakpoints to split the payment integral at, per `options`.
std::vector<double> PaymentBreakpoints(const MechanismDescriptor& m,
                                       Agent agent, double other_bid,
                                       const ExpertValues& expert,
                                       const PaymentOptions& options = {});

// p_i = w_i q_i(w_i) - int_0^{w_i} q_i(t) dt. Throws kNonMonotone when q_i
// decreases in the agent's own bid.
double MyersonPayment(const MechanismDescriptor& m, const Profile& p,
                      Agent agent, const PaymentOptions& options = {});
PaymentVector MyersonPayments(const MechanismDescriptor& m, const Profile& p,
                              const PaymentOptions& options = {});

// Draws an option from a lottery with a 64-bit Mersenne Twister seeded by
// `seed`.
Option SampleOption(const Lottery& lottery, std::uint64_t seed);

Outcome OutcomeWithPayments(const MechanismDescriptor& m, const Profile& p,
                            std::uint64_t seed);

}  // namespace hybrid

#endif  // HYBRID_PAYMENTS_H_
