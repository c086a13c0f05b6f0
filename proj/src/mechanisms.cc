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

#include "hybrid/mechanisms.h"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "hybrid/constants.h"
#include "hybrid/errors.h"

namespace hybrid {
namespace {

std::vector<double> NoBreakpoints(Agent, double, const ExpertValues&) {
  return {};
}

// A single jump where the agent overtakes the other bid.
std::vector<double> OvertakeBreakpoint(Agent, double other_bid,
                                       const ExpertValues&) {
  return {other_bid};
}

// Curve kinks at normalized bid b appear at own bid other*b while the agent
// is the low-bidder and at other/b once it is the high-bidder.
BreakpointFn CurveBreakpoints(std::vector<double> curve_breaks) {
  return [curve_breaks = std::move(curve_breaks)](
             Agent, double other_bid, const ExpertValues&) {
    std::vector<double> out = {other_bid};
    for (double b : curve_breaks) {
      if (b <= 0.0 || b >= 1.0) continue;
      out.push_back(other_bid * b);
      out.push_back(other_bid / b);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
}

}  // namespace

std::vector<std::string> ClassTags::names() const {
  static constexpr std::pair<ClassTag, const char*> kNames[] = {
      {ClassTag::kOrdinal, "ordinal"},
      {ClassTag::kBidIndependent, "bid-independent"},
      {ClassTag::kExpertIndependent, "expert-independent"},
      {ClassTag::kTemplate, "template"},
      {ClassTag::kAlwaysSell, "always-sell"},
      {ClassTag::kDeterministic, "deterministic"},
  };
  std::vector<std::string> out;
  for (const auto& [tag, name] : kNames) {
    if (has(tag)) out.emplace_back(name);
  }
  return out;
}

Curve PiecewiseLinearCurve(const std::vector<CurvePoint>& points,
                           bool require_monotone) {
  if (points.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "curve needs at least one point",
                "curve");
  }
  std::vector<double> breaks;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const CurvePoint& pt = points[i];
    const std::string field = "curve[" + std::to_string(i) + "]";
    if (!(pt.y >= 0.0 && pt.y <= 1.0)) {
      throw Error(ErrorCode::kInvalidArgument, "y must lie in [0,1]",
                  field + ".y");
    }
    if (!(pt.c >= 0.0 && pt.c <= 1.0)) {
      throw Error(ErrorCode::kInvalidArgument, "c must lie in [0,1]",
                  field + ".c");
    }
    if (i > 0 && !(pt.y > points[i - 1].y)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "y values must be strictly increasing", field + ".y");
    }
    if (require_monotone && i > 0 && pt.c < points[i - 1].c) {
      throw Error(ErrorCode::kNonMonotone, "c must be non-decreasing",
                  field + ".c");
    }
    breaks.push_back(pt.y);
  }
  auto fn = [points](double y) {
    if (y <= points.front().y) return points.front().c;
    if (y >= points.back().y) return points.back().c;
    const auto it = std::upper_bound(
        points.begin(), points.end(), y,
        [](double v, const CurvePoint& p) { return v < p.y; });
    const CurvePoint& hi = *it;
    const CurvePoint& lo = *(it - 1);
    const double t = (y - lo.y) / (hi.y - lo.y);
    return lo.c + t * (hi.c - lo.c);
  };
  return Curve(std::move(fn), std::move(breaks));
}

Curve EimCurve() {
  const Constants& k = GetConstants();
  const double inv_rho = 1.0 / k.rho_eim;
  const double split = k.eim_break;
  return Curve(
      [inv_rho, split](double y) {
        // Left branch at the split itself; both branches agree there.
        if (y <= split) return 2.0 * (1.0 - inv_rho) / (2.0 - y);
        return inv_rho - (1.0 - inv_rho) / y;
      },
      {split});
}

Curve RCurve() {
  return Curve(
      [](double y) {
        if (y < 0.8) return std::min(1.0, 1.0 / (5.0 * (1.0 - y)));
        return 1.0;
      },
      {0.8});
}

Curve DCurve() {
  const double threshold = GetConstants().inv_phi;
  return Curve([threshold](double y) { return y >= threshold ? 1.0 : 0.0; },
               {threshold});
}

RankProbabilities BimProbabilities(double x) {
  const double tau = GetConstants().tau;
  const double denom = 1.0 + 3.0 * tau;
  if (x <= tau) {
    return {(1.0 + tau) / denom, tau / denom, tau / denom};
  }
  const double e = std::exp(1.0 - x);
  return {2.0 * tau * (1.0 + x) * e / denom,
          (1.0 + tau - 2.0 * tau * e) / denom,
          2.0 * tau * (1.0 - x * e) / denom};
}

RankProbabilities QuadraticProbabilities(double x) {
  return {(4.0 - x * x) / 6.0, (1.0 + 2.0 * x) / 6.0,
          (1.0 - 2.0 * x + x * x) / 6.0};
}

Category TemplateCategory(const Profile& p) {
  const AgentsView v = MakeAgentsView(p);
  if (v.l > v.h) return Category::kT1;
  // Equal expert values: the tie goes to the low-bidder only when it comes
  // first in the priority A > B, i.e. when A is the low-bidder.
  if (v.l == v.h && v.low() == Agent::kA) return Category::kT1;
  return Category::kT2;
}

Lottery TemplateApply(const Curve& c, const Profile& p) {
  const AgentsView v = MakeAgentsView(p);
  if (TemplateCategory(p) == Category::kT2) {
    return Lottery::PointMass(OptionOf(v.high));
  }
  const double low = c(v.y);
  return Lottery::FromAgents(v.high, 1.0 - low, low);
}

Lottery Eom(const Profile& p) {
  return Lottery::FromRanks(ExpertRanking(p.expert()), 2.0 / 3.0, 1.0 / 3.0,
                            0.0);
}

Lottery Bom(const Profile& p) {
  return Lottery::FromAgents(p.high_bidder(), 2.0 / 3.0, 1.0 / 3.0);
}

Lottery Bim(const Profile& p) {
  const ExpertView v = MakeExpertView(p);
  const RankProbabilities r = BimProbabilities(v.x);
  return Lottery::FromRanks(v.order, r.g, r.f, r.eta);
}

Lottery Eim(const Profile& p) {
  static const Curve kCurve = EimCurve();
  const AgentsView v = MakeAgentsView(p);
  const double low = kCurve(v.y);
  return Lottery::FromAgents(v.high, 1.0 - low, low);
}

Lottery MechR(const Profile& p) {
  static const Curve kCurve = RCurve();
  return TemplateApply(kCurve, p);
}

Lottery MechD(const Profile& p) {
  static const Curve kCurve = DCurve();
  return TemplateApply(kCurve, p);
}

Lottery QuadraticLottery(const Profile& p) {
  const ExpertView v = MakeExpertView(p);
  const RankProbabilities r = QuadraticProbabilities(v.x);
  return Lottery::FromRanks(v.order, r.g, r.f, r.eta);
}

Lottery SecondPrice(const Profile& p) {
  return Lottery::PointMass(OptionOf(p.high_bidder()));
}

MechanismDescriptor MakeTemplateMechanism(std::string name, Curve c) {
  MechanismDescriptor m;
  m.name = std::move(name);
  m.breakpoint_hints = CurveBreakpoints(c.breakpoints());
  m.evaluate = [c = std::move(c)](const Profile& p) {
    return TemplateApply(c, p);
  };
  m.tags = {ClassTag::kTemplate, ClassTag::kAlwaysSell};
  return m;
}

MechanismDescriptor MakeExpertIndependentMechanism(std::string name,
                                                   Curve c) {
  MechanismDescriptor m;
  m.name = std::move(name);
  m.breakpoint_hints = CurveBreakpoints(c.breakpoints());
  m.evaluate = [c = std::move(c)](const Profile& p) {
    const AgentsView v = MakeAgentsView(p);
    const double low = c(v.y);
    return Lottery::FromAgents(v.high, 1.0 - low, low);
  };
  m.tags = {ClassTag::kExpertIndependent, ClassTag::kAlwaysSell};
  return m;
}

const std::vector<MechanismDescriptor>& Registry() {
  static const std::vector<MechanismDescriptor> kRegistry = [] {
    const Constants& k = GetConstants();
    std::vector<MechanismDescriptor> r;
    r.push_back({"eom", Eom, {ClassTag::kOrdinal, ClassTag::kBidIndependent},
                 NoBreakpoints, {}});
    r.push_back({"bom", Bom,
                 {ClassTag::kOrdinal, ClassTag::kExpertIndependent,
                  ClassTag::kAlwaysSell},
                 OvertakeBreakpoint, {}});
    r.push_back({"bim", Bim, {ClassTag::kBidIndependent}, NoBreakpoints,
                 {k.tau}});
    r.push_back({"eim", Eim,
                 {ClassTag::kExpertIndependent, ClassTag::kAlwaysSell},
                 CurveBreakpoints({k.eim_break}), {}});
    r.push_back({"r", MechR, {ClassTag::kTemplate, ClassTag::kAlwaysSell},
                 CurveBreakpoints({0.8}), {}});
    r.push_back({"d", MechD,
                 {ClassTag::kTemplate, ClassTag::kAlwaysSell,
                  ClassTag::kDeterministic},
                 CurveBreakpoints({k.inv_phi}), {}});
    r.push_back({"second-price", SecondPrice,
                 {ClassTag::kExpertIndependent, ClassTag::kAlwaysSell,
                  ClassTag::kDeterministic, ClassTag::kOrdinal},
                 OvertakeBreakpoint, {}});
    r.push_back({"quadratic", QuadraticLottery, {ClassTag::kBidIndependent},
                 NoBreakpoints, {}});
    return r;
  }();
  return kRegistry;
}

const MechanismDescriptor& Lookup(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return std::tolower(ch); });
  for (const MechanismDescriptor& m : Registry()) {
    if (m.name == lower) return m;
  }
  throw Error(ErrorCode::kUnknownMechanism,
              "unknown mechanism '" + std::string(name) + "'", "mechanism");
}

}  // namespace hybrid
