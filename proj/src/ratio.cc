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

#include "hybrid/ratio.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "hybrid/errors.h"

namespace hybrid {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Candidate {
  double ratio = -kInf;
  ReducedPoint point{};
};

// Golden-section search for a maximum of fn on [lo, hi]. Returns the best
// point seen, not just the final bracket midpoint.
Candidate GoldenMax(const std::function<double(double)>& fn, double lo,
                    double hi, int iterations, long long& evals,
                    const ReducedPoint& base, bool along_x) {
  const double inv_golden = (std::sqrt(5.0) - 1.0) / 2.0;
  Candidate best;
  auto eval = [&](double t) {
    ++evals;
    const double v = fn(t);
    if (v > best.ratio) {
      best.ratio = v;
      best.point = base;
      (along_x ? best.point.x : best.point.y) = t;
    }
    return v;
  };
  double a = lo, b = hi;
  double c = b - inv_golden * (b - a);
  double d = a + inv_golden * (b - a);
  double fc = eval(c), fd = eval(d);
  for (int i = 0; i < iterations && b - a > 1e-15; ++i) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_golden * (b - a);
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_golden * (b - a);
      fd = eval(d);
    }
  }
  eval(lo);
  eval(hi);
  return best;
}

// Neighbouring grid values around `value`.
std::pair<double, double> Bracket(const std::vector<double>& axis,
                                  double value) {
  auto it = std::lower_bound(axis.begin(), axis.end(), value);
  const double lo = it == axis.begin() ? axis.front() : *(it - 1);
  if (it != axis.end() && *it == value) ++it;
  const double hi = it == axis.end() ? axis.back() : *it;
  return {std::min(lo, value), std::max(hi, value)};
}

double Lower(double y, double rho) {
  if (y == 0.0) return -kInf;
  return 1.0 / rho - (1.0 - 1.0 / rho) / y;
}

MarginReport Scan(std::string name, double rho, const std::vector<double>& grid,
                  const std::function<Slacks(double)>& slacks) {
  MarginReport r;
  r.condition = std::move(name);
  r.rho = rho;
  r.first_min_slack = kInf;
  r.second_min_slack = kInf;
  for (double t : grid) {
    const Slacks s = slacks(t);
    if (s.first < r.first_min_slack) {
      r.first_min_slack = s.first;
      r.first_witness = t;
    }
    if (s.second < r.second_min_slack) {
      r.second_min_slack = s.second;
      r.second_witness = t;
    }
  }
  return r;
}

std::vector<double> ConditionGrid(int points, const std::vector<double>& extra) {
  std::vector<double> all = DefaultBreakpoints();
  all.insert(all.end(), extra.begin(), extra.end());
  return UnitGrid(points, all);
}

}  // namespace

double PointwiseRatio(const MechanismDescriptor& m, const Profile& p) {
  const double expected = ExpectedWelfare(m(p), p);
  if (!(expected > 0.0)) {
    throw Error(ErrorCode::kZeroWelfare,
                m.name + " has zero expected welfare at a profile");
  }
  return OptimalWelfare(p).welfare / expected;
}

RatioReport WorstCaseRatio(const MechanismDescriptor& m,
                           const RatioConfig& config) {
  const std::vector<double> axis = UnitGrid(config.grid, DefaultBreakpoints());
  struct Task {
    Ranking ranking;
    Agent high;
  };
  std::vector<Task> tasks;
  for (const Ranking& r : AllRankings()) {
    for (Agent high : {Agent::kA, Agent::kB}) tasks.push_back({r, high});
  }
  std::vector<Candidate> best(tasks.size());
  std::vector<long long> evals(tasks.size(), 0);
  ParallelFor(tasks.size(), ResolveWorkers(config.workers),
              [&](std::size_t i) {
                Candidate local;
                for (double x : axis) {
                  for (double y : axis) {
                    const ReducedPoint pt{tasks[i].ranking, x, y, tasks[i].high};
                    const double v = PointwiseRatio(m, MakeProfile(pt));
                    if (v > local.ratio) local = {v, pt};
                  }
                }
                evals[i] = static_cast<long long>(axis.size() * axis.size());
                best[i] = local;
              });

  RatioReport report;
  report.mechanism = m.name;
  Candidate incumbent;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    report.iterations += evals[i];
    if (best[i].ratio > incumbent.ratio) incumbent = best[i];
  }

  const double grid_ratio = incumbent.ratio;
  for (int round = 0; round < config.refine_rounds; ++round) {
    bool improved = false;
    for (bool along_x : {true, false}) {
      const ReducedPoint base = incumbent.point;
      const auto [lo, hi] = Bracket(axis, along_x ? base.x : base.y);
      auto fn = [&](double t) {
        ReducedPoint pt = base;
        (along_x ? pt.x : pt.y) = t;
        return PointwiseRatio(m, MakeProfile(pt));
      };
      const Candidate c = GoldenMax(fn, lo, hi, config.golden_iterations,
                                    report.iterations, base, along_x);
      if (c.ratio > incumbent.ratio) {
        incumbent = c;
        improved = true;
      }
    }
    if (!improved) break;
  }

  report.ratio = incumbent.ratio;
  report.witness = incumbent.point;
  report.witness_profile = MakeProfile(incumbent.point);
  report.refined = incumbent.ratio > grid_ratio;
  const ReducedPoint& w = incumbent.point;
  report.limit = w.x == 0.0 || w.x == 1.0 || w.y == 0.0 || w.y == 1.0;
  return report;
}

void WriteRatioSweepCsv(const MechanismDescriptor& m, int grid,
                        std::ostream& out, bool header) {
  const std::vector<double> axis = UnitGrid(grid, DefaultBreakpoints());
  const auto precision = out.precision(12);
  if (header) out << "mechanism,ordering,x,y,highAgent,ratio\n";
  for (const Ranking& r : AllRankings()) {
    const std::string label = RankingLabel(r);
    for (Agent high : {Agent::kA, Agent::kB}) {
      for (double x : axis) {
        for (double y : axis) {
          const double v = PointwiseRatio(m, MakeProfile({r, x, y, high}));
          out << m.name << ',' << label << ',' << x << ',' << y << ','
              << OptionName(OptionOf(high)) << ',' << v << '\n';
        }
      }
    }
  }
  out.precision(precision);
}

double MarginReport::min_slack() const {
  return std::min(first_min_slack, second_min_slack);
}

Slacks BimSlacks(double g, double f, double x, double rho) {
  return {2.0 * g + x * f - 2.0 / rho,
          g + (1.0 + x) * f - (1.0 + x) / rho};
}

double LowerBand(double y, double rho) { return Lower(y, rho); }

double EimUpperBand(double y, double rho) {
  return 2.0 * (1.0 - 1.0 / rho) / (2.0 - y);
}

double TemplateUpperBand(double y, double rho) {
  if (y == 1.0) return kInf;
  return (1.0 - 1.0 / rho) / (1.0 - y);
}

Slacks EimSlacks(double c, double y, double rho) {
  return {c - Lower(y, rho), EimUpperBand(y, rho) - c};
}

Slacks TemplateSlacks(double c, double y, double rho) {
  return {c - Lower(y, rho), TemplateUpperBand(y, rho) - c};
}

MarginReport BimCondition(const std::function<double(double)>& g,
                          const std::function<double(double)>& f, double rho,
                          int grid) {
  return Scan("bim", rho, ConditionGrid(grid, {}), [&](double x) {
    return BimSlacks(g(x), f(x), x, rho);
  });
}

MarginReport EimCondition(const Curve& c, double rho, int grid) {
  return Scan("eim", rho, ConditionGrid(grid, c.breakpoints()),
              [&](double y) { return EimSlacks(c(y), y, rho); });
}

MarginReport TemplateCondition(const Curve& c, double rho, int grid) {
  return Scan("template", rho, ConditionGrid(grid, c.breakpoints()),
              [&](double y) { return TemplateSlacks(c(y), y, rho); });
}

}  // namespace hybrid
