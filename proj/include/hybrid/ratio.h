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

#ifndef HYBRID_RATIO_H_
#define HYBRID_RATIO_H_

// Worst-case approximation ratio by grid search plus golden-section
// refinement, and the per-class sufficient conditions that certify an upper
// bound on the ratio.

#include <functional>
#include <iosfwd>
#include <string>

#include "hybrid/core.h"
#include "hybrid/grid.h"
#include "hybrid/mechanisms.h"

namespace hybrid {

// Optimal over expected welfare at one profile. Throws kZeroWelfare when the
// mechanism's expected welfare is zero.
double PointwiseRatio(const MechanismDescriptor& m, const Profile& p);

struct RatioConfig {
  int grid = 2001;         // points per axis (x and y), per ranking
  int refine_rounds = 3;   // alternating x / y golden-section passes
  int golden_iterations = 80;
  int workers = 0;
};

struct RatioReport {
  std::string mechanism;
  double ratio = 1.0;
  ReducedPoint witness{};
  Profile witness_profile = MakeProfile({kAllOptions, 0.0, 0.0, Agent::kA});
  long long iterations = 0;
  // Golden-section refinement raised the grid incumbent.
  bool refined = false;
  // The witness sits on the boundary of [0,1]^2; the supremum may only be
  // approached in the limit there.
  bool limit = false;
};

RatioReport WorstCaseRatio(const MechanismDescriptor& m,
                           const RatioConfig& config = {});

// Writes "mechanism,ordering,x,y,highAgent,ratio" plus one row per grid
// point (grid points per axis, default breakpoints included).
void WriteRatioSweepCsv(const MechanismDescriptor& m, int grid,
                        std::ostream& out, bool header = true);

// Minimum slack of one or two inequalities over a grid, with where it occurs.
struct MarginReport {
  std::string condition;
  double rho = 0.0;
  double first_min_slack = 0.0;   // first / lower inequality
  double first_witness = 0.0;
  double second_min_slack = 0.0;  // second / upper inequality
  double second_witness = 0.0;
  double tolerance = 1e-9;

  double min_slack() const;
  bool passed() const { return min_slack() >= -tolerance; }
};

struct Slacks {
  double first;
  double second;
};

// 2g + x f - 2/rho and g + (1+x) f - (1+x)/rho.
Slacks BimSlacks(double g, double f, double x, double rho);
// c - (1/rho - (1-1/rho)/y) and 2(1-1/rho)/(2-y) - c. The lower bound is
// -inf at y = 0.
Slacks EimSlacks(double c, double y, double rho);
// c - (1/rho - (1-1/rho)/y) and (1-1/rho)/(1-y) - c. The upper bound is +inf
// at y = 1.
Slacks TemplateSlacks(double c, double y, double rho);

// Band edges of the two curve conditions, for plotting.
double LowerBand(double y, double rho);
double EimUpperBand(double y, double rho);
double TemplateUpperBand(double y, double rho);

MarginReport BimCondition(const std::function<double(double)>& g,
                          const std::function<double(double)>& f, double rho,
                          int grid = 2001);
MarginReport EimCondition(const Curve& c, double rho, int grid = 2001);
MarginReport TemplateCondition(const Curve& c, double rho, int grid = 2001);

}  // namespace hybrid

#endif  // HYBRID_RATIO_H_
