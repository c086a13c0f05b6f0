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

#ifndef HYBRID_CORE_H_
#define HYBRID_CORE_H_

// Profiles, the expert's and agents' views of a profile, and social welfare.
//
// A profile pairs a normalized expert valuation over the three options
// {A, B, none} with two raw bids. Ties are always broken by the fixed
// priority A > B > none, both when ranking the expert's values and when
// naming the high-bidder.

#include <array>
#include <string_view>
#include <utility>

namespace hybrid {

enum class Option { kSellToA = 0, kSellToB = 1, kNoSale = 2 };
enum class Agent { kA = 0, kB = 1 };

inline constexpr std::array<Option, 3> kAllOptions = {
    Option::kSellToA, Option::kSellToB, Option::kNoSale};

std::string_view OptionName(Option o);  // "A", "B", "none"
inline Option OptionOf(Agent a) {
  return a == Agent::kA ? Option::kSellToA : Option::kSellToB;
}
inline Agent Other(Agent a) { return a == Agent::kA ? Agent::kB : Agent::kA; }
inline std::size_t Index(Option o) { return static_cast<std::size_t>(o); }
inline std::size_t Index(Agent a) { return static_cast<std::size_t>(a); }

// Expert value per option, indexed by Option.
using ExpertValues = std::array<double, 3>;
// Bid per agent, indexed by Agent.
using Bids = std::array<double, 2>;

class Profile {
 public:
  // Affinely rescales `raw_expert` to [0,1] with max 1 and min 0; bids are
  // kept raw. Throws kDegenerateExpert when all expert values are equal and
  // kDegenerateBids when both bids are zero (or any input is negative or
  // non-finite, as kInvalidArgument).
  static Profile Canonicalize(const ExpertValues& raw_expert, const Bids& bids);

  double value(Option o) const { return expert_[Index(o)]; }
  double bid(Agent a) const { return bids_[Index(a)]; }
  const ExpertValues& expert() const { return expert_; }
  const Bids& bids() const { return bids_; }

  double max_bid() const;
  // Bid divided by the larger bid; 0 for the no-sale option.
  double normalized_bid(Option o) const;
  Agent high_bidder() const;  // A on equal bids.
  // Same expert values, bids divided by the larger bid.
  Profile WithNormalizedBids() const;

  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  Profile(const ExpertValues& e, const Bids& b) : expert_(e), bids_(b) {}
  ExpertValues expert_;
  Bids bids_;
};

// Options ordered by the expert, most preferred first.
using Ranking = std::array<Option, 3>;

// Columns ordered by expert value: values (1, x, 0) over normalized bids
// (high, low, zero).
struct ExpertView {
  double x;
  double h;  // normalized bid attached to the favourite option
  double l;  // ... second favourite
  double z;  // ... third favourite
  Ranking order;
};

// Columns ordered by bid: high-bidder, low-bidder, none; bids (1, y, 0).
struct AgentsView {
  double y;
  double h;  // expert value of the high-bidder
  double l;  // expert value of the low-bidder
  double n;  // expert value of no sale
  Agent high;

  Agent low() const { return Other(high); }
};

Ranking ExpertRanking(const ExpertValues& values);
ExpertView MakeExpertView(const Profile& p);
AgentsView MakeAgentsView(const Profile& p);

// Rebuilds the profile (with bids scaled so the high bid is 1) from a view.
Profile FromExpertView(const ExpertView& v);
Profile FromAgentsView(const AgentsView& v);

// Probability distribution over the three options.
struct Lottery {
  double a = 0.0;
  double b = 0.0;
  double none = 0.0;

  double operator[](Option o) const;
  double& operator[](Option o);
  double of(Agent agent) const { return (*this)[OptionOf(agent)]; }

  static Lottery PointMass(Option o);
  // Assigns probabilities to the expert's first, second and third options.
  static Lottery FromRanks(const Ranking& order, double first, double second,
                           double third);
  // Assigns probabilities to the high-bidder and low-bidder.
  static Lottery FromAgents(Agent high, double high_prob, double low_prob);

  bool IsValid(double tol = 1e-9) const;
  // True when one option carries all mass (within tol).
  bool IsPointMass(double tol = 1e-12) const;
};

double SocialWelfare(Option o, const Profile& p);

struct OptimalChoice {
  Option option;
  double welfare;
};
// Argmax of SocialWelfare; ties go to the earlier option in A > B > none.
OptimalChoice OptimalWelfare(const Profile& p);
double ExpectedWelfare(const Lottery& lottery, const Profile& p);

}  // namespace hybrid

#endif  // HYBRID_CORE_H_
