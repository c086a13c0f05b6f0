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

#include <gtest/gtest.h>

#include "support/property_checks.h"

namespace hybrid::testing {
namespace {

// The acceptance suite runs the same sweeps on the full 201-point grid.
constexpr int kPoints = 41;

void Expect(const PropertyResult& r) {
  EXPECT_TRUE(r.passed()) << r.property << ": " << r.failures << " of "
                          << r.checked << ", first " << r.first_failure;
  EXPECT_EQ(r.checked, 6LL * 2 * kPoints * kPoints);
}

TEST(PropertyTest, LotteryValidity) { Expect(CheckLotteryValidity(kPoints)); }
TEST(PropertyTest, ViewRoundTrips) { Expect(CheckViewRoundTrips(kPoints)); }
TEST(PropertyTest, Ordinal) { Expect(CheckOrdinalInvariance(kPoints)); }
TEST(PropertyTest, BidIndependent) { Expect(CheckBidIndependence(kPoints)); }
TEST(PropertyTest, ExpertIndependent) {
  Expect(CheckExpertIndependence(kPoints));
}
TEST(PropertyTest, T2RatioIsOne) { Expect(CheckT2RatioIsOne(kPoints)); }

}  // namespace
}  // namespace hybrid::testing
