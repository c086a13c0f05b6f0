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

#include "hybrid/verify.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hybrid/errors.h"
#include "hybrid/grid.h"
#include "hybrid/payments.h"
#include "hybrid/quadrature.h"

namespace hybrid {
namespace {

// Running maximum of a violation with the profile that produced it.
struct Worst {
  double violation = 0.0;
  std::optional<AuditWitness> witness;

  void Offer(double v, const Profile& p, const std::string& what) {
    if (v > violation) {
      violation = v;
      witness = AuditWitness{p, what};
    }
  }
  void Merge(const Worst& other) {
    if (other.violation > violation) *this = other;
  }
};

AuditReport Finish(const MechanismDescriptor& m, std::string check,
                   const Worst& worst, double tol) {
  AuditReport r;
  r.mechanism = m.name;
  r.check = std::move(check);
  r.max_violation = std::max(0.0, worst.violation);
  r.tolerance = tol;
  r.passed = r.max_violation <= tol;
  if (!r.passed) r.witness = worst.witness;
  return r;
}

std::string Num(double v) {
  std::ostringstream s;
  s.precision(12);
  s << v;
  return s.str();
}

std::vector<double> WithBreakpoints(int points, std::vector<double> extra) {
  const std::vector<double> defaults = DefaultBreakpoints();
  extra.insert(extra.end(), defaults.begin(), defaults.end());
  return UnitGrid(points, extra);
}

}  // namespace

AuditReport CheckBchIc(const MechanismDescriptor& m, const AuditGrid& grid) {
  const std::vector<double> xs = UnitGrid(grid.context_points);
  const std::vector<double> ys = WithBreakpoints(grid.scan_points, {});
  Worst worst;
  for (const Ranking& r : AllRankings()) {
    for (double x : xs) {
      for (Agent high : {Agent::kA, Agent::kB}) {
        const Agent low = Other(high);
        double prev_low = 0.0;
        double prev_high = 0.0;
        for (std::size_t k = 0; k < ys.size(); ++k) {
          const Profile p = MakeProfile({r, x, ys[k], high});
          const Lottery lot = m(p);
          const double c = lot.of(low);
          const double d = lot.of(high);
          if (k > 0) {
            worst.Offer(prev_low - c, p,
                        "low-bidder probability drops from " + Num(prev_low) +
                            " to " + Num(c) + " as y rises to " + Num(ys[k]));
            worst.Offer(d - prev_high, p,
                        "high-bidder probability rises from " +
                            Num(prev_high) + " to " + Num(d) +
                            " as y rises to " + Num(ys[k]));
          }
          prev_low = c;
          prev_high = d;
        }
      }
    }
  }
  return Finish(m, "bch-ic", worst, grid.analytic_tol);
}

AuditReport CheckEchIc(const MechanismDescriptor& m, const AuditGrid& grid) {
  const std::vector<double> xs =
      WithBreakpoints(grid.scan_points, m.expert_breakpoints);
  std::vector<double> kinks = DefaultBreakpoints();
  kinks.insert(kinks.end(), m.expert_breakpoints.begin(),
               m.expert_breakpoints.end());
  const std::vector<double> ys = UnitGrid(grid.context_points);
  QuadratureOptions quad;
  quad.abs_tol = 1e-12;
  Worst worst;
  for (const Ranking& r : AllRankings()) {
    for (double y : ys) {
      for (Agent high : {Agent::kA, Agent::kB}) {
        auto f = [&](double x) { return m(MakeProfile({r, x, y, high}))[r[1]]; };
        const std::vector<double> area = CumulativeIntegrals(f, xs, kinks, quad);
        const double g0 = m(MakeProfile({r, 0.0, y, high}))[r[0]];
        double prev_f = 0.0;
        for (std::size_t k = 0; k < xs.size(); ++k) {
          const Profile p = MakeProfile({r, xs[k], y, high});
          const Lottery lot = m(p);
          const double fx = lot[r[1]];
          const double gx = lot[r[0]];
          const double residual = std::abs(gx - g0 + xs[k] * fx - area[k]);
          worst.Offer(residual, p,
                      "integral identity off by " + Num(residual) +
                          " at x=" + Num(xs[k]) + " (ranking " +
                          RankingLabel(r) + ")");
          if (k > 0) {
            worst.Offer(prev_f - fx, p,
                        "second-favourite probability drops from " +
                            Num(prev_f) + " to " + Num(fx) + " at x=" +
                            Num(xs[k]));
          }
          prev_f = fx;
        }
      }
    }
  }
  return Finish(m, "ech-ic", worst, grid.ech_tol);
}

AuditReport CheckEswIcBidIndependent(const MechanismDescriptor& m,
                                     const AuditGrid& grid) {
  if (!m.tags.has(ClassTag::kBidIndependent)) {
    throw Error(ErrorCode::kWrongClass,
                m.name + " is not tagged bid-independent");
  }
  std::vector<double> xs = WithBreakpoints(grid.scan_points,
                                           m.expert_breakpoints);
  std::erase_if(xs, [](double x) { return x <= 0.0 || x >= 1.0; });
  const Ranking r = kAllOptions;
  struct Extreme {
    double value;
    Profile profile;
  };
  std::optional<Extreme> min_g, max_f, min_f, max_eta;
  for (double x : xs) {
    const Profile p = MakeProfile({r, x, 0.5, Agent::kA});
    const Lottery lot = m(p);
    const double g = lot[r[0]], f = lot[r[1]], eta = lot[r[2]];
    if (!min_g || g < min_g->value) min_g = Extreme{g, p};
    if (!max_f || f > max_f->value) max_f = Extreme{f, p};
    if (!min_f || f < min_f->value) min_f = Extreme{f, p};
    if (!max_eta || eta > max_eta->value) max_eta = Extreme{eta, p};
  }
  Worst worst;
  if (min_g) {
    worst.Offer(max_f->value - min_g->value, max_f->profile,
                "swapping first and second option: f reaches " +
                    Num(max_f->value) + " above min g " + Num(min_g->value));
    worst.Offer(max_eta->value - min_f->value, max_eta->profile,
                "swapping second and third option: eta reaches " +
                    Num(max_eta->value) + " above min f " +
                    Num(min_f->value));
  }
  return Finish(m, "esw-ic", worst, grid.analytic_tol);
}

AuditReport CheckBswIcExpertIndependent(const MechanismDescriptor& m,
                                        const AuditGrid& grid) {
  if (!m.tags.has(ClassTag::kExpertIndependent)) {
    throw Error(ErrorCode::kWrongClass,
                m.name + " is not tagged expert-independent");
  }
  // Equal bids: A is the high-bidder by the tie rule.
  const Profile p = MakeProfile({kAllOptions, 0.5, 1.0, Agent::kA});
  const Lottery lot = m(p);
  const double d = lot.of(Agent::kA);
  const double c = lot.of(Agent::kB);
  Worst worst;
  worst.Offer(c - d, p,
              "at y=1 the low-bidder gets " + Num(c) + " > high-bidder " +
                  Num(d));
  return Finish(m, "bsw-ic", worst, grid.analytic_tol);
}

RegretResult ExpertRegret(const MechanismDescriptor& m, const Profile& truth,
                          std::span<const double> misreport_x) {
  auto value_of = [&](const Lottery& lot) {
    double u = 0.0;
    for (Option o : kAllOptions) u += lot[o] * truth.value(o);
    return u;
  };
  const double truthful = value_of(m(truth));
  RegretResult best;
  for (const Ranking& r : AllRankings()) {
    for (double x : misreport_x) {
      ExpertValues report{};
      report[Index(r[0])] = 1.0;
      report[Index(r[1])] = x;
      report[Index(r[2])] = 0.0;
      const Profile lie = Profile::Canonicalize(report, truth.bids());
      const double gain = value_of(m(lie)) - truthful;
      if (gain > best.regret) {
        best.regret = gain;
        best.deviation = "expert reports " + RankingLabel(r) +
                         " with x'=" + Num(x) + " gaining " + Num(gain);
      }
    }
  }
  return best;
}

RegretResult AgentRegret(const MechanismDescriptor& m, const Profile& truth,
                         Agent agent, std::span<const double> deviations) {
  const double own = truth.bid(agent);
  const double other = truth.bid(Other(agent));
  std::vector<double> nodes(deviations.begin(), deviations.end());
  nodes.push_back(0.0);
  nodes.push_back(own);
  std::erase_if(nodes, [](double t) { return !(t >= 0.0); });
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

  const auto q = SelectionCurveOf(m, agent, other, truth.expert());
  const std::vector<double> hints =
      m.breakpoint_hints ? m.breakpoint_hints(agent, other, truth.expert())
                         : std::vector<double>{};
  QuadratureOptions quad;
  quad.abs_tol = 1e-10;
  const std::vector<double> area = CumulativeIntegrals(q, nodes, hints, quad);

  // Utility of bidding t: own * q(t) - (t q(t) - int_0^t q).
  double truthful = 0.0;
  std::vector<double> utility(nodes.size(), 0.0);
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (nodes[k] == 0.0 && other == 0.0) continue;
    utility[k] = (own - nodes[k]) * q(nodes[k]) + area[k];
    if (nodes[k] == own) truthful = utility[k];
  }
  RegretResult best;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (nodes[k] == 0.0 && other == 0.0) continue;
    const double gain = utility[k] - truthful;
    if (gain > best.regret) {
      best.regret = gain;
      best.deviation = std::string("agent ") + std::string(OptionName(OptionOf(agent))) +
                       " bids " + Num(nodes[k]) + " instead of " + Num(own) +
                       " gaining " + Num(gain);
    }
  }
  return best;
}

AuditReport BlackBoxIcAudit(const MechanismDescriptor& m,
                            const AuditGrid& grid) {
  const std::vector<double> profile_axis =
      WithBreakpoints(grid.profile_points, m.expert_breakpoints);
  const std::vector<double> misreport_x =
      WithBreakpoints(grid.deviation_points, m.expert_breakpoints);

  std::vector<ReducedPoint> profiles;
  for (const Ranking& r : AllRankings()) {
    for (double x : profile_axis) {
      for (double y : profile_axis) {
        for (Agent high : {Agent::kA, Agent::kB}) {
          profiles.push_back({r, x, y, high});
        }
      }
    }
  }

  std::vector<Worst> per_profile(profiles.size());
  ParallelFor(profiles.size(), ResolveWorkers(grid.workers),
              [&](std::size_t i) {
                const Profile p = MakeProfile(profiles[i]);
                Worst& w = per_profile[i];
                const RegretResult e = ExpertRegret(m, p, misreport_x);
                w.Offer(e.regret, p, e.deviation);
                for (Agent agent : {Agent::kA, Agent::kB}) {
                  const double other = p.bid(Other(agent));
                  const double scale = other > 0.0 ? other : p.bid(agent);
                  std::vector<double> deviations;
                  deviations.reserve(grid.deviation_points + 8);
                  for (int k = 0; k < grid.deviation_points; ++k) {
                    deviations.push_back(2.0 * scale * k /
                                         std::max(1, grid.deviation_points - 1));
                  }
                  deviations.push_back(other);
                  deviations.push_back(2.0 * scale);
                  if (m.breakpoint_hints) {
                    for (double t : m.breakpoint_hints(agent, other, p.expert())) {
                      if (t >= 0.0 && t <= 2.0 * scale) deviations.push_back(t);
                    }
                  }
                  const RegretResult a = AgentRegret(m, p, agent, deviations);
                  w.Offer(a.regret, p, a.deviation);
                }
              });
  Worst worst;
  for (const Worst& w : per_profile) worst.Merge(w);
  return Finish(m, "black-box", worst, grid.black_box_tol);
}

std::vector<AuditReport> RunAudits(const MechanismDescriptor& m,
                                   const AuditGrid& grid) {
  std::vector<AuditReport> out;
  out.push_back(CheckBchIc(m, grid));
  out.push_back(CheckEchIc(m, grid));
  if (m.tags.has(ClassTag::kBidIndependent)) {
    out.push_back(CheckEswIcBidIndependent(m, grid));
  }
  if (m.tags.has(ClassTag::kExpertIndependent)) {
    out.push_back(CheckBswIcExpertIndependent(m, grid));
  }
  out.push_back(BlackBoxIcAudit(m, grid));
  return out;
}

}  // namespace hybrid
