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

#include "hybrid/constants.h"

#include <cmath>
#include <functional>
#include <limits>

#include "hybrid/errors.h"

namespace hybrid {
namespace {

// Bisection on a sign-changing bracket, then Newton steps while they shrink
// the residual.
double BracketedRoot(const std::function<double(double)>& fn,
                     const std::function<double(double)>& derivative,
                     double lo, double hi) {
  double flo = fn(lo);
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = fn(mid);
    if ((fmid < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  double root = 0.5 * (lo + hi);
  for (int i = 0; i < 8; ++i) {
    const double step = fn(root) / derivative(root);
    const double next = root - step;
    if (std::abs(fn(next)) >= std::abs(fn(root))) break;
    root = next;
  }
  return root;
}

}  // namespace

double SolveTau() {
  return BracketedRoot([](double t) { return 2.0 * t - std::exp(t - 1.0); },
                       [](double t) { return 2.0 - std::exp(t - 1.0); }, 0.0,
                       1.0);
}

double SolveGamma() {
  return BracketedRoot(
      [](double g) { return 1.0 - 2.0 * g - 4.0 * g * g - 2.0 * g * g * g; },
      [](double g) { return -2.0 - 8.0 * g - 6.0 * g * g; }, 0.0, 1.0);
}

double LambertW0(double x) {
  const double kInvE = std::exp(-1.0);
  if (!(x >= -kInvE)) {
    throw Error(ErrorCode::kInvalidArgument, "LambertW0 needs x >= -1/e");
  }
  if (x == 0.0) return 0.0;
  double w;
  if (x < -0.25) {
    // Series around the branch point -1/e.
    const double p = std::sqrt(2.0 * (std::exp(1.0) * x + 1.0));
    w = -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
  } else if (x < 3.0) {
    w = std::log1p(x);
  } else {
    const double l = std::log(x);
    w = l - std::log(l);
  }
  for (int i = 0; i < 100; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double wp1 = w + 1.0;
    if (wp1 == 0.0) break;
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    const double step = f / denom;
    w -= step;
    if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() *
                              (1.0 + std::abs(w))) {
      break;
    }
  }
  return w;
}

double Constants::tau_residual() const {
  return std::abs(2.0 * tau - std::exp(tau - 1.0));
}

double Constants::gamma_residual() const {
  return std::abs(1.0 - 2.0 * gamma - 4.0 * gamma * gamma -
                  2.0 * gamma * gamma * gamma);
}

double Constants::phi_residual() const {
  return std::abs(phi * phi - phi - 1.0);
}

const Constants& GetConstants() {
  static const Constants kConstants = [] {
    Constants c{};
    c.tau = SolveTau();
    c.phi = (1.0 + std::sqrt(5.0)) / 2.0;
    c.inv_phi = c.phi - 1.0;
    c.rho_bim = (1.0 + 3.0 * c.tau) / (1.0 + c.tau);
    c.rho_eim = 7.0 - 4.0 * std::sqrt(2.0);
    c.eim_break = (3.0 - c.rho_eim) / 2.0;
    c.gamma = SolveGamma();
    c.beta = 1.0 / (1.0 + c.gamma);
    c.rho_general = (c.beta + 2.0 * c.beta * c.gamma - c.gamma * c.gamma) /
                    (c.beta * (1.0 + c.gamma));
    return c;
  }();
  return kConstants;
}

}  // namespace hybrid
