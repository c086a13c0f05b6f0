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

#include <gtest/gtest.h>

#include "hybrid/constants.h"
#include "hybrid/errors.h"
#include "hybrid/grid.h"
#include "hybrid/mechanisms.h"

namespace hybrid {
namespace {

// Reference values from tests/oracles/frozen_values.py.
constexpr double kEimPayA = 0.18012377889238873;
constexpr double kEimPayB = 0.02332589172976813;

TEST(SelectionTest, Examples) {
  const ExpertValues e = {1, 0, 0};
  EXPECT_EQ(SelectionProbability(Lookup("second-price"), Agent::kA, 1.0, 0.9, e),
            1.0);
  for (double t : {0.1, 0.5, 0.89}) {
    EXPECT_DOUBLE_EQ(SelectionProbability(Lookup("bom"), Agent::kA, t, 0.9, e),
                     1.0 / 3);
  }
  const double q0 = SelectionProbability(Lookup("bim"), Agent::kB, 0.1, 1, e);
  for (double t : {0.5, 1.0, 7.0}) {
    EXPECT_EQ(SelectionProbability(Lookup("bim"), Agent::kB, t, 1, e), q0);
  }
}

TEST(PaymentTest, SecondPrice) {
  const Profile p = Profile::Canonicalize({1, 0, 0.5}, {1, 0.9});
  const PaymentVector pay = MyersonPayments(Lookup("second-price"), p);
  EXPECT_NEAR(pay.a, 0.9, 1e-12);
  EXPECT_EQ(pay.b, 0.0);
}

TEST(PaymentTest, Bom) {
  // 1 * 2/3 - (0.9/3 + 0.1 * 2/3) = 0.3; the low bidder's q is flat.
  const Profile p = Profile::Canonicalize({1, 0, 0.5}, {1, 0.9});
  const PaymentVector pay = MyersonPayments(Lookup("bom"), p);
  EXPECT_NEAR(pay.a, 0.3, 1e-9);
  EXPECT_NEAR(pay.b, 0.0, 1e-9);
}

TEST(PaymentTest, BidIndependentChargesNothing) {
  for (const char* name : {"bim", "eom", "quadratic"}) {
    for (double y : {0.0, 0.4, 1.0}) {
      const Profile p = Profile::Canonicalize({0.2, 1, 0}, {1, y});
      const PaymentVector pay = MyersonPayments(Lookup(name), p);
      EXPECT_NEAR(pay.a, 0.0, 1e-12) << name;
      EXPECT_NEAR(pay.b, 0.0, 1e-12) << name;
    }
  }
}

TEST(PaymentTest, EimMatchesOracle) {
  const Profile p = Profile::Canonicalize({1, 0, 0.5}, {1, 0.5});
  const PaymentVector pay = MyersonPayments(Lookup("eim"), p);
  EXPECT_NEAR(pay.a, kEimPayA, 1e-9);
  EXPECT_NEAR(pay.b, kEimPayB, 1e-9);
}

TEST(PaymentTest, EimMatchesRiemannSum) {
  const Curve c = EimCurve();
  const auto q = [&c](double t) {
    return t < 0.5 ? c(2.0 * t) : 1.0 - c(0.5 / t);
  };
  const int n = 1000000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += q((i + 0.5) / n);
  const double riemann = q(1.0) - sum / n;
  const Profile p = Profile::Canonicalize({1, 0, 0.5}, {1, 0.5});
  EXPECT_NEAR(MyersonPayment(Lookup("eim"), p, Agent::kA), riemann, 1e-9);
}

TEST(PaymentTest, HintsDoNotChangeValue) {
  PaymentOptions no_hints;
  no_hints.use_hints = false;
  for (const MechanismDescriptor& m : Registry()) {
    for (double y : {0.3, 0.61, 0.9}) {
      const Profile p = Profile::Canonicalize({0, 1, 0.4}, {1, y});
      const PaymentVector hinted = MyersonPayments(m, p);
      const PaymentVector blind = MyersonPayments(m, p, no_hints);
      EXPECT_NEAR(hinted.a, blind.a, 1e-7) << m.name << " y=" << y;
      EXPECT_NEAR(hinted.b, blind.b, 1e-7) << m.name << " y=" << y;
    }
  }
}

TEST(PaymentTest, IndividualRationality) {
  const std::vector<double> axis = UnitGrid(21, DefaultBreakpoints());
  for (const MechanismDescriptor& m : Registry()) {
    for (const Ranking& r : AllRankings()) {
      for (double x : {0.0, 0.5, 1.0}) {
        for (double y : axis) {
          const Profile p = MakeProfile({r, x, y, Agent::kB});
          const Lottery l = m(p);
          const PaymentVector pay = MyersonPayments(m, p);
          for (Agent a : {Agent::kA, Agent::kB}) {
            // Truthful utility w q(w) - p = integral of q over [0, w].
            EXPECT_GE(p.bid(a) * l.of(a) - pay.of(a), -1e-9) << m.name;
          }
        }
      }
    }
  }
}

TEST(OutcomeTest, DThresholdPayment) {
  // Low bidder B (bid 0.7 >= 1/phi) is the favourite and wins.
  const Profile p = Profile::Canonicalize({0, 1, 0}, {1, 0.7});
  const Outcome o = OutcomeWithPayments(Lookup("d"), p, 0);
  EXPECT_EQ(o.option, Option::kSellToB);
  EXPECT_NEAR(o.payments.b, GetConstants().inv_phi, 1e-6);
  EXPECT_EQ(o.payments.a, 0.0);
}

TEST(OutcomeTest, Deterministic) {
  const Profile p = Profile::Canonicalize({0, 1, 0.3}, {1, 0.5});
  for (std::uint64_t seed : {0ull, 1ull, 12345ull}) {
    const Outcome a = OutcomeWithPayments(Lookup("eim"), p, seed);
    const Outcome b = OutcomeWithPayments(Lookup("eim"), p, seed);
    EXPECT_EQ(a.option, b.option);
    EXPECT_EQ(a.payments.a, b.payments.a);
    EXPECT_EQ(a.payments.b, b.payments.b);
    EXPECT_EQ(a.seed, seed);
  }
}

TEST(OutcomeTest, SamplingFollowsLottery) {
  const Lottery l = {0.2, 0.5, 0.3};
  int counts[3] = {0, 0, 0};
  const int n = 20000;
  for (int s = 0; s < n; ++s) ++counts[Index(SampleOption(l, s))];
  EXPECT_NEAR(counts[0] / double(n), 0.2, 0.02);
  EXPECT_NEAR(counts[1] / double(n), 0.5, 0.02);
  EXPECT_NEAR(counts[2] / double(n), 0.3, 0.02);
  EXPECT_EQ(SampleOption(Lottery::PointMass(Option::kSellToB), 7),
            Option::kSellToB);
}

TEST(SelectionTest, BothBidsZero) {
  EXPECT_THROW(SelectionProbability(Lookup("bom"), Agent::kA, 0.0, 0.0,
                                    {1, 0, 0}),
               Error);
}

}  // namespace
}  // namespace hybrid
