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

#ifndef HYBRID_MECHANISMS_H_
#define HYBRID_MECHANISMS_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hybrid/core.h"

namespace hybrid {

enum class ClassTag : std::uint8_t {
  kOrdinal = 1 << 0,
  kBidIndependent = 1 << 1,
  kExpertIndependent = 1 << 2,
  kTemplate = 1 << 3,
  kAlwaysSell = 1 << 4,
  kDeterministic = 1 << 5,
};

class ClassTags {
 public:
  constexpr ClassTags() = default;
  constexpr ClassTags(std::initializer_list<ClassTag> tags) {
    for (ClassTag t : tags) bits_ |= static_cast<std::uint8_t>(t);
  }
  constexpr bool has(ClassTag t) const {
    return (bits_ & static_cast<std::uint8_t>(t)) != 0;
  }
  std::vector<std::string> names() const;

 private:
  std::uint8_t bits_ = 0;
};

using EvaluateFn = std::function<Lottery(const Profile&)>;
// Own bids of `agent` at which its selection probability may jump or kink,
// given the other agent's raw bid and the expert's values.
using BreakpointFn = std::function<std::vector<double>(
    Agent agent, double other_bid, const ExpertValues& expert)>;

struct MechanismDescriptor {
  std::string name;
  EvaluateFn evaluate;
  ClassTags tags;
  BreakpointFn breakpoint_hints;
  // Values of the expert's second-favourite value x where g, f, eta kink.
  std::vector<double> expert_breakpoints;

  Lottery operator()(const Profile& p) const { return evaluate(p); }
};

// A non-decreasing probability curve on [0,1] with optional kink locations.
class Curve {
 public:
  Curve() = default;
  Curve(std::function<double(double)> fn, std::vector<double> breakpoints)
      : fn_(std::move(fn)), breakpoints_(std::move(breakpoints)) {}

  double operator()(double y) const { return fn_(y); }
  const std::vector<double>& breakpoints() const { return breakpoints_; }

 private:
  std::function<double(double)> fn_;
  std::vector<double> breakpoints_;
};

struct CurvePoint {
  double y;
  double c;
};

// Linear interpolation through points with strictly increasing y in [0,1],
// held constant outside the first and last point. With `require_monotone`,
// rejects decreasing c values (kNonMonotone). Always rejects c outside [0,1]
// and unsorted y (kInvalidArgument).
Curve PiecewiseLinearCurve(const std::vector<CurvePoint>& points,
                           bool require_monotone = true);

// Low-bidder probability curves of the shipped mechanisms.
Curve EimCurve();
Curve RCurve();
Curve DCurve();

// Bid-independent probabilities of the expert's first, second and third
// favourite option as functions of x.
struct RankProbabilities {
  double g;
  double f;
  double eta;
};
RankProbabilities BimProbabilities(double x);
RankProbabilities QuadraticProbabilities(double x);

enum class Category { kT1, kT2 };
Category TemplateCategory(const Profile& p);
Lottery TemplateApply(const Curve& c, const Profile& p);

Lottery Eom(const Profile& p);
Lottery Bom(const Profile& p);
Lottery Bim(const Profile& p);
Lottery Eim(const Profile& p);
Lottery MechR(const Profile& p);
Lottery MechD(const Profile& p);
Lottery QuadraticLottery(const Profile& p);
Lottery SecondPrice(const Profile& p);

// Descriptor factories for user-defined members of the classes.
MechanismDescriptor MakeTemplateMechanism(std::string name, Curve c);
// Always sells; the low-bidder gets c(y) regardless of the expert.
MechanismDescriptor MakeExpertIndependentMechanism(std::string name,
                                                   Curve c);

// eom, bom, bim, eim, r, d, second-price, quadratic (in that order).
const std::vector<MechanismDescriptor>& Registry();
// Case-insensitive. Throws kUnknownMechanism.
const MechanismDescriptor& Lookup(std::string_view name);

}  // namespace hybrid

#endif  // HYBRID_MECHANISMS_H_
