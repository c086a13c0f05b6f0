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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hybrid/bounds.h"
#include "hybrid/constants.h"
#include "hybrid/grid.h"
#include "hybrid/mechanisms.h"
#include "hybrid/payments.h"
#include "hybrid/ratio.h"
#include "hybrid/verify.h"
#include "support/property_checks.h"

namespace hybrid {
namespace {

// Collects failed sub-checks of one criterion.
class Criterion {
 public:
  explicit Criterion(std::string title) : title_(std::move(title)) {}

  void Require(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }

  void Note(const std::string& text) { notes_.push_back(text); }

  bool Report(int number) const {
    const bool ok = failures_.empty();
    std::printf("[%s] criterion %d: %s (%d checks)\n", ok ? "PASS" : "FAIL",
                number, title_.c_str(), checks_);
    for (const std::string& n : notes_) std::printf("       %s\n", n.c_str());
    for (const std::string& f : failures_) {
      std::printf("       failed: %s\n", f.c_str());
    }
    std::fflush(stdout);
    return ok;
  }

 private:
  std::string title_;
  int checks_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string Fmt(const char* format, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), format, a, b, c);
  return buf;
}

bool InRange(double v, double lo, double hi) { return v >= lo && v <= hi; }

bool Constants1() {
  Criterion c("constants from their defining equations");
  const Constants& k = GetConstants();
  c.Require(k.tau_residual() <= 1e-13, Fmt("tau residual %.3g", k.tau_residual()));
  c.Require(InRange(k.tau, 0.23195, 0.23197), Fmt("tau %.17g", k.tau));
  c.Require(InRange(k.rho_bim, 1.37656, 1.37658), Fmt("rhoBIM %.17g", k.rho_bim));
  c.Require(InRange(k.rho_eim, 1.34314, 1.34315), Fmt("rhoEIM %.17g", k.rho_eim));
  c.Require(InRange(k.gamma, 0.29715, 0.29717), Fmt("gamma %.17g", k.gamma));
  c.Require(InRange(GeneralLowerBound(), 1.14078, 1.14079),
            Fmt("general bound %.17g", GeneralLowerBound()));
  c.Note(Fmt("tau=%.15f rhoBIM=%.15f rhoEIM=%.15f", k.tau, k.rho_bim,
             k.rho_eim));
  c.Note(Fmt("gamma=%.15f beta=%.15f general=%.15f", k.gamma, k.beta,
             k.rho_general));
  return c.Report(1);
}

bool Table2() {
  Criterion c("worst-case ratios on the default grid");
  const Constants& k = GetConstants();
  struct Row {
    const char* name;
    double published;
    double upper;
  } rows[] = {{"eom", 1.5, 1.5},          {"bom", 1.5, 1.5},
              {"bim", 1.37657, k.rho_bim}, {"eim", 1.34315, k.rho_eim},
              {"r", 1.25, 1.25},          {"d", 1.61803, k.phi},
              {"second-price", 2.0, 2.0}};
  for (const Row& row : rows) {
    const RatioReport r = WorstCaseRatio(Lookup(row.name));
    c.Require(std::abs(r.ratio - row.published) <= 5e-3,
              std::string(row.name) + Fmt(" ratio %.12f vs %.5f", r.ratio,
                                          row.published));
    c.Require(r.ratio <= row.upper + 1e-9,
              std::string(row.name) +
                  Fmt(" ratio %.15f above bound %.15f", r.ratio, row.upper));
    c.Note(std::string(row.name) + Fmt(": %.12f (published %.5f)", r.ratio,
                                       row.published) +
           " at " + RankingLabel(r.witness.ranking) +
           Fmt(" x=%.6f y=%.6f", r.witness.x, r.witness.y));
  }
  return c.Report(2);
}

bool Conditions3() {
  Criterion c("condition certificates");
  const Constants& k = GetConstants();
  const auto g = [](double x) { return BimProbabilities(x).g; };
  const auto f = [](double x) { return BimProbabilities(x).f; };
  const MarginReport bim = BimCondition(g, f, k.rho_bim);
  c.Require(bim.min_slack() >= -1e-9, Fmt("BIM min slack %.3g", bim.min_slack()));
  double worst_second = 0.0;
  for (double x : UnitGrid(2001, std::vector<double>{k.tau})) {
    if (x < k.tau) continue;
    worst_second = std::max(
        worst_second, std::abs(BimSlacks(g(x), f(x), x, k.rho_bim).second));
  }
  c.Require(worst_second <= 1e-9,
            Fmt("BIM second inequality not tight: %.3g", worst_second));
  const MarginReport eim = EimCondition(EimCurve(), k.rho_eim);
  c.Require(eim.passed(), Fmt("EIM min slack %.3g", eim.min_slack()));
  const MarginReport r = TemplateCondition(RCurve(), 1.25);
  c.Require(r.passed(), Fmt("R min slack %.3g", r.min_slack()));
  const MarginReport d = TemplateCondition(DCurve(), k.phi);
  c.Require(d.passed(), Fmt("D min slack %.3g", d.min_slack()));
  c.Require(std::abs(RCurve()(0.5) - 0.4) <= 1e-12,
            Fmt("R curve at 1/2 is %.17g", RCurve()(0.5)));
  c.Note(Fmt("BIM slack %.3g, max |second| on [tau,1] %.3g", bim.min_slack(),
             worst_second));
  c.Note(Fmt("EIM slack %.3g, R slack %.3g, D slack %.3g", eim.min_slack(),
             r.min_slack(), d.min_slack()));
  return c.Report(3);
}

bool Audits4() {
  Criterion c("truthfulness audits");
  for (const MechanismDescriptor& m : Registry()) {
    std::ostringstream line;
    line << m.name << ":";
    for (const AuditReport& r : RunAudits(m)) {
      c.Require(r.passed, m.name + " " + r.check +
                              Fmt(" violation %.3g", r.max_violation) +
                              (r.witness ? " (" + r.witness->deviation + ")"
                                         : ""));
      line << ' ' << r.check << '=' << r.max_violation;
    }
    c.Note(line.str());
  }
  return c.Report(4);
}

bool Payments5() {
  Criterion c("payments");
  const Profile p = Profile::Canonicalize({1, 0, 0.5}, {1, 0.9});
  const PaymentVector sp = MyersonPayments(Lookup("second-price"), p);
  c.Require(std::abs(sp.a - 0.9) <= 1e-12 && sp.b == 0.0,
            Fmt("second-price payments (%.17g, %.17g)", sp.a, sp.b));
  const PaymentVector bom = MyersonPayments(Lookup("bom"), p);
  c.Require(std::abs(bom.a - 0.3) <= 1e-9 && std::abs(bom.b) <= 1e-9,
            Fmt("BOM payments (%.17g, %.17g)", bom.a, bom.b));
  c.Note(Fmt("second-price (%.15g, %.15g)", sp.a, sp.b) +
         Fmt(", BOM (%.15g, %.15g)", bom.a, bom.b));

  const std::vector<double> xs = UnitGrid(11, DefaultBreakpoints());
  const std::vector<double> ys = UnitGrid(51, DefaultBreakpoints());
  double worst_ir = 0.0;
  double worst_bid_independent = 0.0;
  long long profiles = 0;
  for (const MechanismDescriptor& m : Registry()) {
    const bool bid_independent = m.tags.has(ClassTag::kBidIndependent);
    for (const Ranking& r : AllRankings()) {
      for (Agent high : {Agent::kA, Agent::kB}) {
        for (double x : xs) {
          for (double y : ys) {
            const Profile q = MakeProfile({r, x, y, high});
            const Lottery l = m(q);
            const PaymentVector pay = MyersonPayments(m, q);
            ++profiles;
            for (Agent a : {Agent::kA, Agent::kB}) {
              worst_ir = std::min(worst_ir, q.bid(a) * l.of(a) - pay.of(a));
              if (bid_independent) {
                worst_bid_independent =
                    std::max(worst_bid_independent, std::abs(pay.of(a)));
              }
            }
          }
        }
      }
    }
  }
  c.Require(worst_bid_independent == 0.0,
            Fmt("bid-independent payment %.3g", worst_bid_independent));
  c.Require(worst_ir >= -1e-9, Fmt("truthful utility %.3g", worst_ir));
  c.Note(Fmt("%.0f profiles x 2 agents: min truthful utility %.3g, max "
             "bid-independent payment %.3g",
             static_cast<double>(profiles), worst_ir, worst_bid_independent));
  return c.Report(5);
}

bool LowerBounds6() {
  Criterion c("lower-bound curves and adversaries");
  const CurveMinimum o = MinimizeCurve(OrdinalLowerBoundCurve, 0.0, 0.99);
  c.Require(std::abs(o.value - 1.5) <= 1e-6 && std::abs(o.argmin - 1.0 / 3) <= 1e-6,
            Fmt("ordinal curve min %.12f at %.12f", o.value, o.argmin));
  const CurveMinimum a = MinimizeCurve(AlwaysSellLowerBoundCurve, 0.0, 1.0);
  c.Require(std::abs(a.value - 1.25) <= 1e-6 && std::abs(a.argmin - 0.4) <= 1e-6,
            Fmt("always-sell curve min %.12f at %.12f", a.value, a.argmin));
  const double phi = GetConstants().phi;
  const double probe = DeterministicLowerBoundProbe(Lookup("d"), 1e-3);
  c.Require(probe >= phi - 1e-3 - 1e-9, Fmt("D probe %.12f", probe));
  const AdversaryResult eom = OrdinalAdversary(Lookup("eom"));
  const AdversaryResult bom = OrdinalAdversary(Lookup("bom"));
  c.Require(eom.ratio >= 1.5 - 1e-6, Fmt("EOM adversary %.12f", eom.ratio));
  c.Require(bom.ratio >= 1.5 - 1e-6, Fmt("BOM adversary %.12f", bom.ratio));
  c.Note(Fmt("ordinal min %.12f at p=%.9f; always-sell min %.12f", o.value,
             o.argmin, a.value) + Fmt(" at p=%.9f", a.argmin));
  c.Note(Fmt("D probe %.12f; EOM %.12f; BOM %.12f", probe, eom.ratio,
             bom.ratio));
  return c.Report(6);
}

bool Properties7() {
  Criterion c("property suites on the full enumeration grid");
  using testing::PropertyResult;
  constexpr int kPoints = 201;
  const std::vector<std::function<PropertyResult(int)>> checks = {
      testing::CheckLotteryValidity,  testing::CheckViewRoundTrips,
      testing::CheckOrdinalInvariance, testing::CheckBidIndependence,
      testing::CheckExpertIndependence, testing::CheckT2RatioIsOne};
  for (const auto& check : checks) {
    const PropertyResult r = check(kPoints);
    c.Require(r.passed() && r.checked == 6LL * 2 * kPoints * kPoints,
              r.property + ": " + std::to_string(r.failures) + " failures, " +
                  r.first_failure);
    c.Note(r.property + ": " + std::to_string(r.checked) + " profiles, " +
           std::to_string(r.failures) + " failures");
  }
  return c.Report(7);
}

}  // namespace
}  // namespace hybrid

int main() {
  bool ok = true;
  ok &= hybrid::Constants1();
  ok &= hybrid::Table2();
  ok &= hybrid::Conditions3();
  ok &= hybrid::Audits4();
  ok &= hybrid::Payments5();
  ok &= hybrid::LowerBounds6();
  ok &= hybrid::Properties7();
  std::printf("%s\n", ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED");
  return ok ? 0 : 1;
}
