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

#ifndef HYBRID_TESTS_SUPPORT_PROPERTY_CHECKS_H_
#define HYBRID_TESTS_SUPPORT_PROPERTY_CHECKS_H_

// Property sweeps over the reduced enumeration grid: every ranking, x and y
// on a uniform grid of `points` per axis, and both high-bidder labels.

#include <string>

namespace hybrid::testing {

struct PropertyResult {
  std::string property;
  long long checked = 0;
  long long failures = 0;
  std::string first_failure;

  bool passed() const { return checked > 0 && failures == 0; }
};

PropertyResult CheckLotteryValidity(int points);
PropertyResult CheckViewRoundTrips(int points);
// Ordinal: the lottery depends only on the expert ranking and bid order.
PropertyResult CheckOrdinalInvariance(int points);
// Bid-independent: any change of bids leaves the lottery unchanged.
PropertyResult CheckBidIndependence(int points);
// Expert-independent: any change of expert values leaves it unchanged.
PropertyResult CheckExpertIndependence(int points);
// Template mechanisms are exactly optimal on T2 profiles.
PropertyResult CheckT2RatioIsOne(int points);

}  // namespace hybrid::testing

#endif  // HYBRID_TESTS_SUPPORT_PROPERTY_CHECKS_H_
