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

#include "hybrid/quadrature.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hybrid/errors.h"

namespace hybrid {
namespace {

class AdaptiveSimpson {
 public:
  AdaptiveSimpson(const std::function<double(double)>& f,
                  const QuadratureOptions& options)
      : f_(f), options_(options) {}

  double Piece(double a, double b) {
    if (!(b > a)) return 0.0;
    const double nudge = (b - a) * 1e-10;
    lo_ = a + nudge;
    hi_ = b - nudge;
    const double fa = Eval(a);
    const double fb = Eval(b);
    const double m = 0.5 * (a + b);
    const double fm = Eval(m);
    CheckOrder(a, fa, fm);
    CheckOrder(m, fm, fb);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return Recurse(a, b, fa, fm, fb, whole, options_.abs_tol, 0);
  }

 private:
  double Eval(double t) {
    return f_(std::clamp(t, lo_, hi_));
  }

  void CheckOrder(double where, double left, double right) const {
    if (!options_.monotone_tol) return;
    if (left > right + *options_.monotone_tol) {
      std::ostringstream msg;
      msg << "integrand decreases by " << (left - right) << " near " << where;
      throw Error(ErrorCode::kNonMonotone, msg.str());
    }
  }

  double Recurse(double a, double b, double fa, double fm, double fb,
                 double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = Eval(lm);
    const double frm = Eval(rm);
    CheckOrder(lm, fa, flm);
    CheckOrder(lm, flm, fm);
    CheckOrder(rm, fm, frm);
    CheckOrder(rm, frm, fb);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    const bool converged = depth >= 2 && std::abs(delta) <= 15.0 * tol;
    if (converged || depth >= options_.max_depth) {
      return left + right + delta / 15.0;
    }
    return Recurse(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           Recurse(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
  }

  const std::function<double(double)>& f_;
  const QuadratureOptions& options_;
  double lo_ = 0.0;
  double hi_ = 0.0;
};

}  // namespace

double IntegratePiecewise(const std::function<double(double)>& f, double a,
                          double b, std::span<const double> breakpoints,
                          const QuadratureOptions& options) {
  if (b < a) return -IntegratePiecewise(f, b, a, breakpoints, options);
  std::vector<double> cuts = {a};
  for (double t : breakpoints) {
    if (t > a && t < b) cuts.push_back(t);
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  AdaptiveSimpson simpson(f, options);
  double total = 0.0;
  double previous_end = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double nudge = (cuts[i + 1] - cuts[i]) * 1e-10;
    if (options.monotone_tol) {
      const double start = f(cuts[i] + nudge);
      if (i > 0 && previous_end > start + *options.monotone_tol) {
        std::ostringstream msg;
        msg << "integrand decreases by " << (previous_end - start) << " at "
            << cuts[i];
        throw Error(ErrorCode::kNonMonotone, msg.str());
      }
      previous_end = f(cuts[i + 1] - nudge);
    }
    total += simpson.Piece(cuts[i], cuts[i + 1]);
  }
  return total;
}

std::vector<double> CumulativeIntegrals(const std::function<double(double)>& f,
                                        std::span<const double> nodes,
                                        std::span<const double> breakpoints,
                                        const QuadratureOptions& options) {
  std::vector<double> out(nodes.size(), 0.0);
  for (std::size_t k = 1; k < nodes.size(); ++k) {
    out[k] = out[k - 1] +
             IntegratePiecewise(f, nodes[k - 1], nodes[k], breakpoints, options);
  }
  return out;
}

}  // namespace hybrid
