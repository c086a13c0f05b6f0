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

#include "hybrid/grid.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "hybrid/constants.h"

namespace hybrid {

const std::array<Ranking, 6>& AllRankings() {
  static const std::array<Ranking, 6> kRankings = [] {
    std::array<Ranking, 6> out{};
    Ranking r = kAllOptions;
    std::size_t i = 0;
    do {
      out[i++] = r;
    } while (std::next_permutation(r.begin(), r.end()));
    return out;
  }();
  return kRankings;
}

std::string RankingLabel(const Ranking& r) {
  std::string out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i > 0) out += '>';
    out += OptionName(r[i]);
  }
  return out;
}

Profile MakeProfile(const ReducedPoint& point) {
  ExpertValues expert{};
  expert[Index(point.ranking[0])] = 1.0;
  expert[Index(point.ranking[1])] = point.x;
  expert[Index(point.ranking[2])] = 0.0;
  Bids bids{};
  bids[Index(point.high)] = 1.0;
  bids[Index(Other(point.high))] = point.y;
  return Profile::Canonicalize(expert, bids);
}

std::vector<double> DefaultBreakpoints() {
  const Constants& k = GetConstants();
  return {k.tau, k.eim_break, 0.8, k.inv_phi};
}

std::vector<double> UnitGrid(int points, std::span<const double> extra) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(std::max(points, 2)) + extra.size());
  if (points >= 2) {
    for (int i = 0; i < points; ++i) {
      out.push_back(static_cast<double>(i) / (points - 1));
    }
  } else if (points == 1) {
    out.push_back(0.0);
  }
  for (double e : extra) {
    if (e >= 0.0 && e <= 1.0) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int ResolveWorkers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("HYBRID_MECH_WORKERS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void ParallelFor(std::size_t count, int workers,
                 const std::function<void(std::size_t)>& task) {
  const std::size_t threads =
      std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, workers)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          task(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mu);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (std::thread& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace hybrid
