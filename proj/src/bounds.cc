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

#include "hybrid/bounds.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hybrid/errors.h"
#include "hybrid/ratio.h"

namespace hybrid {
namespace {

// Profile from the expert's view with the no-sale option first, followed by
// the low-bidder and the high-bidder.
Profile NoneLowHigh(double low_value, double low_bid, Agent high) {
  ExpertValues expert{};
  expert[Index(Option::kNoSale)] = 1.0;
  expert[Index(OptionOf(Other(high)))] = low_value;
  expert[Index(OptionOf(high))] = 0.0;
  Bids bids{};
  bids[Index(high)] = 1.0;
  bids[Index(Other(high))] = low_bid;
  return Profile::Canonicalize(expert, bids);
}

}  // namespace

double OrdinalLowerBoundCurve(double p) {
  if (!(p >= 0.0 && p < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "p must lie in [0,1)");
  }
  return std::max(1.0 / (1.0 - p), 2.0 / (1.0 + p));
}

double AlwaysSellLowerBoundCurve(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "p must lie in [0,1]");
  }
  return std::max(3.0 / (2.0 + p), 2.0 / (2.0 - p));
}

CurveMinimum MinimizeCurve(const std::function<double(double)>& fn, double lo,
                           double hi, int grid) {
  grid = std::max(grid, 3);
  const double step = (hi - lo) / (grid - 1);
  int best = 0;
  double best_value = fn(lo);
  for (int i = 1; i < grid; ++i) {
    const double v = fn(lo + step * i);
    if (v < best_value) {
      best_value = v;
      best = i;
    }
  }
  double a = lo + step * std::max(0, best - 1);
  double b = lo + step * std::min(grid - 1, best + 1);
  // Keep the search inside the caller's domain (half-open curves).
  b = std::min(b, hi);
  const double inv_golden = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_golden * (b - a);
  double d = a + inv_golden * (b - a);
  double fc = fn(c), fd = fn(d);
  for (int i = 0; i < 200 && b - a > 1e-15; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_golden * (b - a);
      fc = fn(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_golden * (b - a);
      fd = fn(d);
    }
  }
  const double mid = 0.5 * (a + b);
  const double v = fn(mid);
  if (v <= best_value) return {mid, v};
  return {lo + step * best, best_value};
}

double GeneralLowerBound() { return GetConstants().rho_general; }

double BidIndependentLowerBound() {
  const double w = LambertW0(-1.0 / (2.0 * std::exp(1.0)));
  return (1.0 - 3.0 * w) / (1.0 - w);
}

const std::vector<double>& AdversaryEpsilons() {
  static const std::vector<double> kEpsilons = {1e-2, 1e-4, 1e-6};
  return kEpsilons;
}

double DeterministicLowerBoundProbe(const MechanismDescriptor& m, double eps) {
  if (!(eps > 0.0 && eps < 0.1)) {
    throw Error(ErrorCode::kInvalidArgument, "epsilon must lie in (0, 0.1)");
  }
  const Constants& k = GetConstants();
  double worst = 0.0;
  for (Agent high : {Agent::kA, Agent::kB}) {
    for (double low_value : {1.0 - eps, eps / (k.phi * k.phi)}) {
      const Profile p = NoneLowHigh(low_value, k.inv_phi, high);
      const Lottery lot = m(p);
      if (!lot.IsPointMass()) {
        throw Error(ErrorCode::kNotDeterministic,
                    m.name + " randomizes on the deterministic probe");
      }
      worst = std::max(worst, PointwiseRatio(m, p));
    }
  }
  return worst;
}

AdversaryResult OrdinalAdversary(const MechanismDescriptor& m) {
  if (!m.tags.has(ClassTag::kOrdinal)) {
    throw Error(ErrorCode::kWrongClass, m.name + " is not tagged ordinal");
  }
  AdversaryResult best{0.0, 0.0};
  for (double eps : AdversaryEpsilons()) {
    for (Agent high : {Agent::kA, Agent::kB}) {
      for (double middle : {eps, 1.0 - eps}) {
        const double v = PointwiseRatio(m, NoneLowHigh(middle, middle, high));
        if (v > best.ratio) best = {v, eps};
      }
    }
  }
  return best;
}

AdversaryResult AlwaysSellAdversary(const MechanismDescriptor& m) {
  if (!m.tags.has(ClassTag::kAlwaysSell)) {
    throw Error(ErrorCode::kWrongClass, m.name + " is not tagged always-sell");
  }
  AdversaryResult best{0.0, 0.0};
  for (double eps : AdversaryEpsilons()) {
    for (Agent high : {Agent::kA, Agent::kB}) {
      // Rows (high, low, none) of expert values; bids (1, 1/2).
      for (const auto& [low_value, none_value] :
           {std::pair{1.0, 0.0}, std::pair{eps, 1.0}}) {
        ExpertValues expert{};
        expert[Index(OptionOf(high))] = 0.0;
        expert[Index(OptionOf(Other(high)))] = low_value;
        expert[Index(Option::kNoSale)] = none_value;
        Bids bids{};
        bids[Index(high)] = 1.0;
        bids[Index(Other(high))] = 0.5;
        const double v =
            PointwiseRatio(m, Profile::Canonicalize(expert, bids));
        if (v > best.ratio) best = {v, eps};
      }
    }
  }
  return best;
}

}  // namespace hybrid
