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

#ifndef HYBRID_BOUNDS_H_
#define HYBRID_BOUNDS_H_

// Lower-bound certificates: the adversarial instance families behind each
// class lower bound, evaluated against concrete mechanisms, and the
// closed-form optimal-response curves they induce.

#include <functional>
#include <vector>

#include "hybrid/constants.h"
#include "hybrid/mechanisms.h"

namespace hybrid {

// max{1/(1-p), 2/(1+p)}: an ordinal mechanism choosing the middle option with
// probability p. Requires p in [0,1).
double OrdinalLowerBoundCurve(double p);
// max{3/(2+p), 2/(2-p)}: an always-sell mechanism choosing the low-bidder
// with probability p.
double AlwaysSellLowerBoundCurve(double p);

struct CurveMinimum {
  double argmin;
  double value;
};
// Grid scan of [lo, hi] then golden-section refinement around the best cell.
// `fn` must be unimodal near its minimum.
CurveMinimum MinimizeCurve(const std::function<double(double)>& fn, double lo,
                           double hi, int grid = 1001);

// (beta + 2 beta gamma - gamma^2) / (beta (1 + gamma)).
double GeneralLowerBound();
// (1 - 3W(-1/(2e))) / (1 - W(-1/(2e))), through the Lambert function.
double BidIndependentLowerBound();

// The epsilon values the limit constructions are evaluated at.
const std::vector<double>& AdversaryEpsilons();

struct AdversaryResult {
  double ratio;
  double epsilon;  // epsilon at which the maximum was realized
  // The class bound is only approached as epsilon -> 0.
  bool limit = true;
};

// Larger realized ratio of the two profiles
//   expert (1, 1-eps, 0) / (1, eps/phi^2, 0) over (none, low, high),
//   bids (0, 1/phi, 1).
// Throws kNotDeterministic when m returns a non-point-mass lottery there.
double DeterministicLowerBoundProbe(const MechanismDescriptor& m, double eps);

// Expert views (1, eps, 0 / 0, eps, 1) and (1, 1-eps, 0 / 0, 1-eps, 1).
// Throws kWrongClass unless m is tagged ordinal.
AdversaryResult OrdinalAdversary(const MechanismDescriptor& m);
// Agents' views (0, 1, 0 / 1, 1/2, 0) and (0, eps, 1 / 1, 1/2, 0). Throws
// kWrongClass unless m is tagged always-sell.
AdversaryResult AlwaysSellAdversary(const MechanismDescriptor& m);

}  // namespace hybrid

#endif  // HYBRID_BOUNDS_H_
