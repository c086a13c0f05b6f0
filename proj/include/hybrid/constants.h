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

#ifndef HYBRID_CONSTANTS_H_
#define HYBRID_CONSTANTS_H_

// Constants of the mechanisms and their lower bounds, each obtained from its
// defining equation at startup. No decimal literal is treated as ground truth.

namespace hybrid {

// Root in (0,1) of 2t = e^{t-1}: bisection followed by a Newton polish.
double SolveTau();
// Root in (0,1) of 1 - 2g - 4g^2 - 2g^3.
double SolveGamma();
// Principal branch W_0 of the Lambert function on [-1/e, inf), by Halley
// iteration. Independent of SolveTau; used as a second route to tau.
double LambertW0(double x);

struct Constants {
  double tau;          // BIM breakpoint
  double phi;          // golden ratio
  double inv_phi;      // D's bid threshold 1/phi
  double rho_bim;      // (1+3tau)/(1+tau)
  double rho_eim;      // 7-4sqrt(2)
  double eim_break;    // (3-rho_eim)/2 = 2sqrt(2)-2
  double gamma;
  double beta;         // 1/(1+gamma)
  double rho_general;  // (beta+2beta*gamma-gamma^2)/(beta(1+gamma))

  // |2tau - e^{tau-1}|
  double tau_residual() const;
  // |1 - 2gamma - 4gamma^2 - 2gamma^3|
  double gamma_residual() const;
  // |phi^2 - phi - 1|
  double phi_residual() const;
};

// Computed once and shared; safe to call from any thread.
const Constants& GetConstants();

}  // namespace hybrid

#endif  // HYBRID_CONSTANTS_H_
