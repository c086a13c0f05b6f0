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

#include "hybrid/payments.h"

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "hybrid/errors.h"
#include "hybrid/quadrature.h"

namespace hybrid {

double SelectionProbability(const MechanismDescriptor& m, Agent agent,
                            double bid, double other_bid,
                            const ExpertValues& expert) {
  if (bid == 0.0 && other_bid == 0.0) {
    throw Error(ErrorCode::kDegenerateBids, "both bids are zero", "bids");
  }
  Bids bids{};
  bids[Index(agent)] = bid;
  bids[Index(Other(agent))] = other_bid;
  const Profile p = Profile::Canonicalize(expert, bids);
  return m(p).of(agent);
}

std::function<double(double)> SelectionCurveOf(const MechanismDescriptor& m,
                                               Agent agent, double other_bid,
                                               const ExpertValues& expert) {
  return [&m, agent, other_bid, expert](double t) {
    // Against a zero bid every positive own bid normalizes to the same
    // profile, so any positive bid gives the right limit at zero.
    if (t == 0.0 && other_bid == 0.0) t = 1.0;
    return SelectionProbability(m, agent, t, other_bid, expert);
  };
}

std::vector<double> PaymentBreakpoints(const MechanismDescriptor& m,
                                       Agent agent, double other_bid,
                                       const ExpertValues& expert,
                                       const PaymentOptions& options) {
  if (!options.use_hints || !m.breakpoint_hints) return {};
  return m.breakpoint_hints(agent, other_bid, expert);
}

double MyersonPayment(const MechanismDescriptor& m, const Profile& p,
                      Agent agent, const PaymentOptions& options) {
  const double bid = p.bid(agent);
  if (bid == 0.0) return 0.0;
  const double other = p.bid(Other(agent));
  const auto q = SelectionCurveOf(m, agent, other, p.expert());
  const std::vector<double> hints =
      PaymentBreakpoints(m, agent, other, p.expert(), options);
  QuadratureOptions quad;
  quad.abs_tol = options.abs_tol;
  quad.monotone_tol = options.monotone_tol;
  const double area = IntegratePiecewise(q, 0.0, bid, hints, quad);
  const double payment = bid * q(bid) - area;
  // Cancellation residue of two equal terms.
  if (std::abs(payment) <= 64.0 * std::numeric_limits<double>::epsilon() * bid) {
    return 0.0;
  }
  return payment;
}

PaymentVector MyersonPayments(const MechanismDescriptor& m, const Profile& p,
                              const PaymentOptions& options) {
  return {MyersonPayment(m, p, Agent::kA, options),
          MyersonPayment(m, p, Agent::kB, options)};
}

Option SampleOption(const Lottery& lottery, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  // 53 random mantissa bits; uniform on [0, 1).
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  if (u < lottery.a) return Option::kSellToA;
  if (u < lottery.a + lottery.b) return Option::kSellToB;
  if (lottery.none > 0.0) return Option::kNoSale;
  // Rounding left no mass for none; fall back to the last positive option.
  return lottery.b > 0.0 ? Option::kSellToB : Option::kSellToA;
}

Outcome OutcomeWithPayments(const MechanismDescriptor& m, const Profile& p,
                            std::uint64_t seed) {
  const Lottery lottery = m(p);
  return Outcome{.option = SampleOption(lottery, seed),
                 .payments = MyersonPayments(m, p),
                 .lottery = lottery,
                 .seed = seed};
}

}  // namespace hybrid
