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

#include "hybrid/core.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "hybrid/errors.h"

namespace hybrid {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDegenerateExpert: return "DegenerateExpert";
    case ErrorCode::kDegenerateBids: return "DegenerateBids";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kNonMonotone: return "NonMonotone";
    case ErrorCode::kWrongClass: return "WrongClass";
    case ErrorCode::kNotDeterministic: return "NotDeterministic";
    case ErrorCode::kZeroWelfare: return "ZeroWelfare";
    case ErrorCode::kUnknownMechanism: return "UnknownMechanism";
  }
  return "Unknown";
}

std::string_view OptionName(Option o) {
  switch (o) {
    case Option::kSellToA: return "A";
    case Option::kSellToB: return "B";
    case Option::kNoSale: return "none";
  }
  return "?";
}

Profile Profile::Canonicalize(const ExpertValues& raw_expert,
                              const Bids& bids) {
  static constexpr std::array<const char*, 3> kExpertField = {
      "expert.A", "expert.B", "expert.none"};
  static constexpr std::array<const char*, 2> kBidField = {"bids.A", "bids.B"};
  for (std::size_t i = 0; i < 3; ++i) {
    if (!std::isfinite(raw_expert[i]) || raw_expert[i] < 0.0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "expert value must be finite and non-negative",
                  kExpertField[i]);
    }
  }
  for (std::size_t i = 0; i < 2; ++i) {
    if (!std::isfinite(bids[i]) || bids[i] < 0.0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "bid must be finite and non-negative", kBidField[i]);
    }
  }
  const auto [lo, hi] = std::minmax_element(raw_expert.begin(),
                                            raw_expert.end());
  if (*hi == *lo) {
    throw Error(ErrorCode::kDegenerateExpert,
                "expert values are all equal; normalization is undefined",
                "expert");
  }
  if (bids[0] == 0.0 && bids[1] == 0.0) {
    throw Error(ErrorCode::kDegenerateBids, "both bids are zero", "bids");
  }
  ExpertValues expert = raw_expert;
  const double min = *lo;
  const double span = *hi - *lo;
  if (min != 0.0 || span != 1.0) {
    for (double& v : expert) v = (v - min) / span;
  }
  return Profile(expert, bids);
}

double Profile::max_bid() const { return std::max(bids_[0], bids_[1]); }

double Profile::normalized_bid(Option o) const {
  if (o == Option::kNoSale) return 0.0;
  return bids_[Index(o)] / max_bid();
}

Agent Profile::high_bidder() const {
  return bids_[0] >= bids_[1] ? Agent::kA : Agent::kB;
}

Profile Profile::WithNormalizedBids() const {
  const double m = max_bid();
  return Profile(expert_, {bids_[0] / m, bids_[1] / m});
}

Ranking ExpertRanking(const ExpertValues& values) {
  Ranking order = kAllOptions;
  // Stable sort on the priority-ordered array keeps A > B > none on ties.
  std::stable_sort(order.begin(), order.end(), [&](Option a, Option b) {
    return values[Index(a)] > values[Index(b)];
  });
  return order;
}

ExpertView MakeExpertView(const Profile& p) {
  const Ranking order = ExpertRanking(p.expert());
  return ExpertView{.x = p.value(order[1]),
                    .h = p.normalized_bid(order[0]),
                    .l = p.normalized_bid(order[1]),
                    .z = p.normalized_bid(order[2]),
                    .order = order};
}

AgentsView MakeAgentsView(const Profile& p) {
  const Agent high = p.high_bidder();
  const Agent low = Other(high);
  return AgentsView{.y = p.bid(low) / p.bid(high),
                    .h = p.value(OptionOf(high)),
                    .l = p.value(OptionOf(low)),
                    .n = p.value(Option::kNoSale),
                    .high = high};
}

Profile FromExpertView(const ExpertView& v) {
  ExpertValues expert{};
  Bids bids{};
  const std::array<double, 3> values = {1.0, v.x, 0.0};
  const std::array<double, 3> normalized = {v.h, v.l, v.z};
  for (std::size_t rank = 0; rank < 3; ++rank) {
    const Option o = v.order[rank];
    expert[Index(o)] = values[rank];
    if (o != Option::kNoSale) bids[Index(o)] = normalized[rank];
  }
  return Profile::Canonicalize(expert, bids);
}

Profile FromAgentsView(const AgentsView& v) {
  ExpertValues expert{};
  expert[Index(OptionOf(v.high))] = v.h;
  expert[Index(OptionOf(v.low()))] = v.l;
  expert[Index(Option::kNoSale)] = v.n;
  Bids bids{};
  bids[Index(v.high)] = 1.0;
  bids[Index(v.low())] = v.y;
  return Profile::Canonicalize(expert, bids);
}

double Lottery::operator[](Option o) const {
  switch (o) {
    case Option::kSellToA: return a;
    case Option::kSellToB: return b;
    case Option::kNoSale: return none;
  }
  return 0.0;
}

double& Lottery::operator[](Option o) {
  switch (o) {
    case Option::kSellToA: return a;
    case Option::kSellToB: return b;
    case Option::kNoSale: break;
  }
  return none;
}

Lottery Lottery::PointMass(Option o) {
  Lottery l;
  l[o] = 1.0;
  return l;
}

Lottery Lottery::FromRanks(const Ranking& order, double first, double second,
                           double third) {
  Lottery l;
  l[order[0]] = first;
  l[order[1]] = second;
  l[order[2]] = third;
  return l;
}

Lottery Lottery::FromAgents(Agent high, double high_prob, double low_prob) {
  Lottery l;
  l[OptionOf(high)] = high_prob;
  l[OptionOf(Other(high))] = low_prob;
  l.none = 1.0 - high_prob - low_prob;
  if (std::abs(l.none) < 1e-15) l.none = 0.0;
  return l;
}

bool Lottery::IsValid(double tol) const {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(none)) {
    return false;
  }
  if (a < -1e-12 || b < -1e-12 || none < -1e-12) return false;
  return std::abs(a + b + none - 1.0) <= tol;
}

bool Lottery::IsPointMass(double tol) const {
  return std::abs(a - 1.0) <= tol || std::abs(b - 1.0) <= tol ||
         std::abs(none - 1.0) <= tol;
}

double SocialWelfare(Option o, const Profile& p) {
  if (o == Option::kNoSale) return p.value(o);
  return p.value(o) + p.normalized_bid(o);
}

OptimalChoice OptimalWelfare(const Profile& p) {
  OptimalChoice best{Option::kSellToA, SocialWelfare(Option::kSellToA, p)};
  for (Option o : {Option::kSellToB, Option::kNoSale}) {
    const double sw = SocialWelfare(o, p);
    if (sw > best.welfare) best = {o, sw};
  }
  return best;
}

double ExpectedWelfare(const Lottery& lottery, const Profile& p) {
  double total = 0.0;
  for (Option o : kAllOptions) total += lottery[o] * SocialWelfare(o, p);
  return total;
}

}  // namespace hybrid
