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

#ifndef HYBRID_VERIFY_H_
#define HYBRID_VERIFY_H_

// Incentive-compatibility audits. The analytic checks test the monotonicity
// and integral conditions that characterize truthfulness for each class; the
// black-box audit searches unilateral misreports of the expert and of each
// agent directly, charging Myerson payments.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hybrid/core.h"
#include "hybrid/mechanisms.h"

namespace hybrid {

struct AuditWitness {
  Profile profile;
  std::string deviation;
};

struct AuditReport {
  std::string mechanism;
  std::string check;  // bch-ic, ech-ic, esw-ic, bsw-ic, black-box
  double max_violation = 0.0;
  double tolerance = 0.0;
  bool passed = true;
  // Present iff max_violation > tolerance.
  std::optional<AuditWitness> witness;
};

struct AuditGrid {
  // Points of the scanned axis (x for ECh/ESw, y for BCh); default
  // breakpoints are always added.
  int scan_points = 201;
  // Points per axis of the fixed contexts the scans run in.
  int context_points = 11;
  // Profiles of the black-box audit: points per axis of x and y.
  int profile_points = 11;
  // Expert x' misreports and agent bid misreports.
  int deviation_points = 201;
  double analytic_tol = 1e-9;
  double ech_tol = 1e-8;
  double black_box_tol = 1e-6;
  int workers = 0;
};

// Low-bidder probability non-decreasing and high-bidder probability
// non-increasing in y, for every fixed expert context.
AuditReport CheckBchIc(const MechanismDescriptor& m, const AuditGrid& grid = {});
// Second-favourite probability f non-decreasing in x and
// |g(x) - g(0) + x f(x) - int_0^x f| small, for every fixed bid context and
// expert ranking.
AuditReport CheckEchIc(const MechanismDescriptor& m, const AuditGrid& grid = {});
// min g >= max f and min f >= max eta over x in (0,1). Throws kWrongClass
// unless m is tagged bid-independent.
AuditReport CheckEswIcBidIndependent(const MechanismDescriptor& m,
                                     const AuditGrid& grid = {});
// d(1) >= c(1). Throws kWrongClass unless m is tagged expert-independent.
AuditReport CheckBswIcExpertIndependent(const MechanismDescriptor& m,
                                        const AuditGrid& grid = {});
AuditReport BlackBoxIcAudit(const MechanismDescriptor& m,
                            const AuditGrid& grid = {});

// Largest expert gain from misreporting on one profile, over the given
// misreport x' values and all six rankings.
struct RegretResult {
  double regret = 0.0;
  std::string deviation;
};
RegretResult ExpertRegret(const MechanismDescriptor& m, const Profile& truth,
                          std::span<const double> misreport_x);
// Largest gain of `agent` from bidding any of `deviations` instead of its
// true bid, under Myerson payments.
RegretResult AgentRegret(const MechanismDescriptor& m, const Profile& truth,
                         Agent agent, std::span<const double> deviations);

// The analytic checks that apply to m's class tags, then the black-box audit.
std::vector<AuditReport> RunAudits(const MechanismDescriptor& m,
                                   const AuditGrid& grid = {});

}  // namespace hybrid

#endif  // HYBRID_VERIFY_H_
