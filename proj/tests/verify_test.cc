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

#include "hybrid/verify.h"

#include <vector>

#include <gtest/gtest.h>

#include "hybrid/errors.h"
#include "hybrid/grid.h"
#include "hybrid/mechanisms.h"

namespace hybrid {
namespace {

MechanismDescriptor WelfareMaximizer() {
  MechanismDescriptor m;
  m.name = "welfare-max";
  m.evaluate = [](const Profile& p) {
    return Lottery::PointMass(OptimalWelfare(p).option);
  };
  return m;
}

// Constant rank probabilities (g, f, eta) = (0.4, 0.6, 0).
MechanismDescriptor SecondHeavy() {
  MechanismDescriptor m;
  m.name = "second-heavy";
  m.tags = {ClassTag::kBidIndependent};
  m.evaluate = [](const Profile& p) {
    return Lottery::FromRanks(ExpertRanking(p.expert()), 0.4, 0.6, 0.0);
  };
  return m;
}

MechanismDescriptor DecreasingTemplate() {
  return MakeTemplateMechanism(
      "decreasing", PiecewiseLinearCurve({{0, 1}, {1, 0}}, false));
}

AuditGrid Coarse() {
  AuditGrid g;
  g.scan_points = 51;
  g.profile_points = 5;
  g.deviation_points = 51;
  return g;
}

TEST(BchTest, ShippedMonotone) {
  for (const char* name : {"eim", "second-price", "r", "d", "bom"}) {
    const AuditReport r = CheckBchIc(Lookup(name));
    EXPECT_TRUE(r.passed) << name;
    EXPECT_EQ(r.check, "bch-ic");
  }
}

TEST(BchTest, DecreasingCurveFails) {
  const AuditReport r = CheckBchIc(DecreasingTemplate());
  EXPECT_FALSE(r.passed);
  EXPECT_GT(r.max_violation, 1e-3);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_FALSE(r.witness->deviation.empty());
}

TEST(EchTest, Residuals) {
  for (const char* name : {"bim", "quadratic", "eom"}) {
    const AuditReport r = CheckEchIc(Lookup(name));
    EXPECT_TRUE(r.passed) << name;
    EXPECT_LE(r.max_violation, 1e-8) << name;
  }
}

TEST(EchTest, ViolationDetected) {
  // Shifting mass to the favourite as x grows breaks the integral identity.
  MechanismDescriptor m;
  m.name = "greedy";
  m.evaluate = [](const Profile& p) {
    const ExpertView v = MakeExpertView(p);
    return Lottery::FromRanks(v.order, 0.5 + 0.5 * v.x, 0.5 - 0.5 * v.x, 0);
  };
  EXPECT_FALSE(CheckEchIc(m, Coarse()).passed);
}

TEST(EswTest, Conditions) {
  EXPECT_TRUE(CheckEswIcBidIndependent(Lookup("bim")).passed);
  EXPECT_TRUE(CheckEswIcBidIndependent(Lookup("quadratic")).passed);
  const AuditReport bad = CheckEswIcBidIndependent(SecondHeavy());
  EXPECT_FALSE(bad.passed);
  EXPECT_NEAR(bad.max_violation, 0.2, 1e-12);
  try {
    CheckEswIcBidIndependent(Lookup("eim"));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kWrongClass);
  }
}

TEST(BswTest, Conditions) {
  EXPECT_TRUE(CheckBswIcExpertIndependent(Lookup("eim")).passed);
  EXPECT_TRUE(CheckBswIcExpertIndependent(Lookup("bom")).passed);
  const MechanismDescriptor bad = MakeExpertIndependentMechanism(
      "flat", Curve([](double) { return 0.6; }, {}));
  const AuditReport r = CheckBswIcExpertIndependent(bad);
  EXPECT_FALSE(r.passed);
  EXPECT_NEAR(r.max_violation, 0.2, 1e-12);
  EXPECT_THROW(CheckBswIcExpertIndependent(Lookup("bim")), Error);
}

TEST(RegretTest, WelfareMaximizerRewardsExaggeration) {
  // Truth: none > A > B with x = 0.3; B wins the SW tie with no sale. Claiming
  // A is worth 0.6 makes A optimal.
  const Profile truth = Profile::Canonicalize({0.3, 0.0, 1.0}, {0.5, 1.0});
  const std::vector<double> xs = UnitGrid(11);
  const RegretResult r = ExpertRegret(WelfareMaximizer(), truth, xs);
  EXPECT_NEAR(r.regret, 0.3, 1e-12);
  EXPECT_FALSE(r.deviation.empty());
  const AuditReport audit = BlackBoxIcAudit(WelfareMaximizer(), Coarse());
  EXPECT_FALSE(audit.passed);
  ASSERT_TRUE(audit.witness.has_value());
}

TEST(RegretTest, TruthIsAmongDeviations) {
  const Profile truth = Profile::Canonicalize({0.3, 0.0, 1.0}, {0.5, 1.0});
  const std::vector<double> xs = {0.3};
  for (const MechanismDescriptor& m : Registry()) {
    EXPECT_GE(ExpertRegret(m, truth, xs).regret, 0.0);
    EXPECT_GE(AgentRegret(m, truth, Agent::kA, xs).regret, 0.0);
  }
}

TEST(RegretTest, SecondPriceAgentsCannotGain) {
  const Profile truth = Profile::Canonicalize({0, 1, 0}, {1, 0.9});
  const std::vector<double> devs = UnitGrid(201);
  EXPECT_LE(AgentRegret(Lookup("second-price"), truth, Agent::kB, devs).regret,
            1e-9);
  EXPECT_LE(AgentRegret(Lookup("second-price"), truth, Agent::kA, devs).regret,
            1e-9);
}

TEST(BlackBoxTest, ShippedMechanismsPassCoarse) {
  for (const MechanismDescriptor& m : Registry()) {
    const AuditReport r = BlackBoxIcAudit(m, Coarse());
    EXPECT_TRUE(r.passed) << m.name << " " << r.max_violation;
  }
}

TEST(RunAuditsTest, ClassAppropriateChecks) {
  std::vector<std::string> checks;
  for (const AuditReport& r : RunAudits(Lookup("eim"), Coarse())) {
    checks.push_back(r.check);
  }
  EXPECT_EQ(checks, (std::vector<std::string>{"bch-ic", "ech-ic", "bsw-ic",
                                              "black-box"}));
  checks.clear();
  for (const AuditReport& r : RunAudits(Lookup("bim"), Coarse())) {
    checks.push_back(r.check);
  }
  EXPECT_EQ(checks, (std::vector<std::string>{"bch-ic", "ech-ic", "esw-ic",
                                              "black-box"}));
}

}  // namespace
}  // namespace hybrid
