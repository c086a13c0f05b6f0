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

#ifndef HYBRID_GRID_H_
#define HYBRID_GRID_H_

// The reduced profile space every mechanism here depends on: the expert's
// values are {1, x, 0} over some ranking of the options, and the bids are
// {1, y} with one of the two agents as the high-bidder.

#include <array>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hybrid/core.h"

namespace hybrid {

// The six rankings, in lexicographic order of (A, B, none) permutations.
const std::array<Ranking, 6>& AllRankings();
std::string RankingLabel(const Ranking& r);  // e.g. "none>A>B"

struct ReducedPoint {
  Ranking ranking;
  double x;
  double y;
  Agent high;
};

Profile MakeProfile(const ReducedPoint& point);

// The breakpoints every default grid contains exactly: tau, 2sqrt(2)-2,
// 4/5 and 1/phi.
std::vector<double> DefaultBreakpoints();

// `points` equispaced values on [0,1] merged with `extra` (restricted to
// [0,1]), sorted and deduplicated.
std::vector<double> UnitGrid(int points, std::span<const double> extra = {});

// Worker count from an explicit request, else HYBRID_MECH_WORKERS, else the
// hardware concurrency (at least 1).
int ResolveWorkers(int requested);

// Calls task(i) for i in [0, count) on up to `workers` threads.
void ParallelFor(std::size_t count, int workers,
                 const std::function<void(std::size_t)>& task);

}  // namespace hybrid

#endif  // HYBRID_GRID_H_
