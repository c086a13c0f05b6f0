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

#ifndef HYBRID_QUADRATURE_H_
#define HYBRID_QUADRATURE_H_

// Adaptive Simpson quadrature for piecewise-smooth integrands with known
// (or suspected) jump locations.

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace hybrid {

struct QuadratureOptions {
  // Target absolute error per piece.
  double abs_tol = 1e-9;
  int max_depth = 50;
  // When set, every sampled triple must be non-decreasing up to this slack;
  // a larger decrease throws kNonMonotone.
  std::optional<double> monotone_tol;
};

// Integrates `f` over [a, b], splitting at every breakpoint strictly inside
// (a, b). Piece endpoints are sampled a hair inside the piece, so values
// exactly at a jump never leak into the neighbouring piece.
double IntegratePiecewise(const std::function<double(double)>& f, double a,
                          double b, std::span<const double> breakpoints,
                          const QuadratureOptions& options = {});

// Returns I[k] = integral of f over [nodes[0], nodes[k]] for ascending nodes.
std::vector<double> CumulativeIntegrals(const std::function<double(double)>& f,
                                        std::span<const double> nodes,
                                        std::span<const double> breakpoints,
                                        const QuadratureOptions& options = {});

}  // namespace hybrid

#endif  // HYBRID_QUADRATURE_H_
