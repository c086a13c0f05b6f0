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

#include "hybrid/cli.h"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "hybrid/bounds.h"
#include "hybrid/constants.h"
#include "hybrid/errors.h"
#include "hybrid/grid.h"
#include "hybrid/json_io.h"
#include "hybrid/mechanisms.h"
#include "hybrid/payments.h"
#include "hybrid/ratio.h"
#include "hybrid/verify.h"

namespace hybrid {
namespace {

struct RunConfig {
  std::vector<std::string> mechanisms;
  std::string profile;
  std::string curve;
  std::string curve_class = "template";
  std::string format = "json";
  std::string csv_out;
  int grid = 0;  // 0: command default
  double tol = 0.0;  // 0: command default
  double rho = 0.0;  // 0: mechanism default
  std::uint64_t seed = 0;
  int workers = 0;
};

// Mechanisms named on the command line; "all" or nothing means the registry.
// A --curve adds a mechanism "custom" built from the given points.
std::vector<MechanismDescriptor> SelectMechanisms(const RunConfig& config,
                                                  bool validate_curve) {
  std::vector<MechanismDescriptor> out;
  if (!config.curve.empty()) {
    const Curve c = PiecewiseLinearCurve(
        CurvePointsFromJson(LoadJsonArgument(config.curve)), validate_curve);
    if (config.curve_class == "expert-independent") {
      out.push_back(MakeExpertIndependentMechanism("custom", c));
    } else {
      out.push_back(MakeTemplateMechanism("custom", c));
    }
  }
  const bool all =
      (config.mechanisms.empty() && out.empty()) ||
      (config.mechanisms.size() == 1 && config.mechanisms[0] == "all");
  if (all) {
    for (const MechanismDescriptor& m : Registry()) out.push_back(m);
    return out;
  }
  for (const std::string& name : config.mechanisms) {
    if (name == "custom" && !out.empty()) continue;
    out.push_back(Lookup(name));
  }
  return out;
}

void PrintJson(const Json& j, std::ostream& out) {
  out << std::setprecision(17) << j.dump(2) << '\n';
}

int CmdEval(const RunConfig& config, std::ostream& out) {
  if (config.profile.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "eval needs --profile",
                "--profile");
  }
  const Profile p = ProfileFromJson(LoadJsonArgument(config.profile));
  const std::vector<MechanismDescriptor> ms = SelectMechanisms(config, true);
  Json all = Json::array();
  std::ostringstream csv;
  csv << std::setprecision(12);
  csv << "mechanism,option,paymentA,paymentB,lotteryA,lotteryB,lotteryNone,"
         "welfareA,welfareB,welfareNone,expectedWelfare,ratio\n";
  for (const MechanismDescriptor& m : ms) {
    const Outcome o = OutcomeWithPayments(m, p, config.seed);
    const double expected = ExpectedWelfare(o.lottery, p);
    const OptimalChoice best = OptimalWelfare(p);
    Json ratio = nullptr;
    if (expected > 0.0) ratio = best.welfare / expected;
    Json j = {{"mechanism", m.name}, {"profile", ToJson(p)}};
    const Json outcome = ToJson(o);
    for (auto& [key, value] : outcome.items()) j[key] = value;
    j["welfare"] = {{"A", SocialWelfare(Option::kSellToA, p)},
                    {"B", SocialWelfare(Option::kSellToB, p)},
                    {"none", SocialWelfare(Option::kNoSale, p)}};
    j["expectedWelfare"] = expected;
    j["optimal"] = {{"option", std::string(OptionName(best.option))},
                    {"welfare", best.welfare}};
    j["ratio"] = ratio;
    all.push_back(j);
    csv << m.name << ',' << OptionName(o.option) << ',' << o.payments.a << ','
        << o.payments.b << ',' << o.lottery.a << ',' << o.lottery.b << ','
        << o.lottery.none << ',' << SocialWelfare(Option::kSellToA, p) << ','
        << SocialWelfare(Option::kSellToB, p) << ','
        << SocialWelfare(Option::kNoSale, p) << ',' << expected << ','
        << (expected > 0.0 ? best.welfare / expected : NAN) << '\n';
  }
  if (config.format == "csv") {
    out << csv.str();
  } else {
    PrintJson(all.size() == 1 ? all[0] : all, out);
  }
  return kExitOk;
}

RatioConfig MakeRatioConfig(const RunConfig& config) {
  RatioConfig rc;
  if (config.grid > 0) rc.grid = config.grid;
  rc.workers = config.workers;
  return rc;
}

void WriteRatioCsvRow(const RatioReport& r, std::ostream& out) {
  out << r.mechanism << ',' << r.ratio << ','
      << RankingLabel(r.witness.ranking) << ',' << r.witness.x << ','
      << r.witness.y << ',' << OptionName(OptionOf(r.witness.high)) << ','
      << (r.refined ? "true" : "false") << ','
      << (r.limit ? "true" : "false") << '\n';
}

int CmdRatio(const RunConfig& config, std::ostream& out) {
  const std::vector<MechanismDescriptor> ms = SelectMechanisms(config, true);
  const RatioConfig rc = MakeRatioConfig(config);
  std::unique_ptr<std::ofstream> sweep;
  if (!config.csv_out.empty()) {
    sweep = std::make_unique<std::ofstream>(config.csv_out);
    if (!*sweep) {
      throw Error(ErrorCode::kInvalidArgument,
                  "cannot write " + config.csv_out, "--csv-out");
    }
  }
  Json all = Json::array();
  std::ostringstream csv;
  csv << std::setprecision(12)
      << "mechanism,ratio,ordering,x,y,highAgent,refined,limit\n";
  bool first = true;
  for (const MechanismDescriptor& m : ms) {
    const RatioReport r = WorstCaseRatio(m, rc);
    all.push_back(ToJson(r));
    WriteRatioCsvRow(r, csv);
    if (sweep) {
      WriteRatioSweepCsv(m, rc.grid, *sweep, first);
      first = false;
    }
  }
  if (config.format == "csv") {
    out << csv.str();
  } else {
    PrintJson(all.size() == 1 ? all[0] : all, out);
  }
  return kExitOk;
}

int CmdVerify(const RunConfig& config, std::ostream& out) {
  // User curves are loaded without the monotonicity check so that the audit,
  // not the loader, reports the violation.
  const std::vector<MechanismDescriptor> ms = SelectMechanisms(config, false);
  AuditGrid grid;
  if (config.grid > 0) grid.deviation_points = config.grid;
  if (config.tol > 0.0) grid.black_box_tol = config.tol;
  grid.workers = config.workers;
  Json all = Json::array();
  std::ostringstream csv;
  csv << std::setprecision(12)
      << "mechanism,check,maxViolation,tolerance,passed\n";
  bool ok = true;
  for (const MechanismDescriptor& m : ms) {
    for (const AuditReport& r : RunAudits(m, grid)) {
      ok = ok && r.passed;
      all.push_back(ToJson(r));
      csv << r.mechanism << ',' << r.check << ',' << r.max_violation << ','
          << r.tolerance << ',' << (r.passed ? "true" : "false") << '\n';
    }
  }
  if (config.format == "csv") {
    out << csv.str();
  } else {
    PrintJson(all, out);
  }
  return ok ? kExitOk : kExitCheckFailed;
}

struct TableRow {
  std::string row;
  std::string mechanism;  // empty for the lower-bound row
  double published;
};

int CmdTable1(const RunConfig& config, std::ostream& out) {
  // Values as printed in the overview table (three decimals).
  const std::vector<TableRow> rows = {
      {"ordinal", "eom", 1.5},          {"ordinal", "bom", 1.5},
      {"bid-independent", "bim", 1.377}, {"expert-independent", "eim", 1.343},
      {"template", "r", 1.25},          {"template-deterministic", "d", 1.618},
      {"second-price", "second-price", 2.0},
      {"all-mechanisms-lower-bound", "", 1.141},
  };
  const double tol = config.tol > 0.0 ? config.tol : 5e-3;
  const RatioConfig rc = MakeRatioConfig(config);
  Json all = Json::array();
  std::ostringstream csv;
  csv << std::setprecision(12)
      << "row,mechanism,measured,published,difference,passed\n";
  bool ok = true;
  for (const TableRow& row : rows) {
    const double measured = row.mechanism.empty()
                                ? GeneralLowerBound()
                                : WorstCaseRatio(Lookup(row.mechanism), rc).ratio;
    const double diff = std::abs(measured - row.published);
    const bool passed = diff <= tol;
    ok = ok && passed;
    all.push_back({{"row", row.row},
                   {"mechanism", row.mechanism.empty()
                                     ? Json(nullptr)
                                     : Json(row.mechanism)},
                   {"measured", measured},
                   {"published", row.published},
                   {"difference", diff},
                   {"tolerance", tol},
                   {"passed", passed}});
    csv << row.row << ',' << row.mechanism << ',' << measured << ','
        << row.published << ',' << diff << ',' << (passed ? "true" : "false")
        << '\n';
  }
  if (config.format == "csv") {
    out << csv.str();
  } else {
    PrintJson(all, out);
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int CmdCurves(const RunConfig& config, std::ostream& out) {
  const Constants& k = GetConstants();
  const std::string name =
      config.mechanisms.empty() ? "eim" : config.mechanisms.front();
  const int points = config.grid > 0 ? config.grid : 101;
  const std::vector<double> axis = UnitGrid(points);
  const bool json = config.format == "json";
  Json rows = Json::array();
  out << std::setprecision(12);
  if (name == "bim") {
    if (!json) out << "x,g,f,eta\n";
    for (double x : axis) {
      const RankProbabilities r = BimProbabilities(x);
      if (json) {
        rows.push_back({{"x", x}, {"g", r.g}, {"f", r.f}, {"eta", r.eta}});
      } else {
        out << x << ',' << r.g << ',' << r.f << ',' << r.eta << '\n';
      }
    }
  } else {
    Curve c;
    double rho = 0.0;
    bool expert_independent = false;
    if (name == "eim") {
      c = EimCurve();
      rho = k.rho_eim;
      expert_independent = true;
    } else if (name == "r") {
      c = RCurve();
      rho = 1.25;
    } else if (name == "d") {
      c = DCurve();
      rho = k.phi;
    } else {
      throw Error(ErrorCode::kUnknownMechanism,
                  "curves supports bim, eim, r, d; got " + name, "mechanism");
    }
    if (config.rho > 0.0) rho = config.rho;
    if (!json) out << "y,lower,upper,c\n";
    for (double y : axis) {
      const double lower = LowerBand(y, rho);
      const double upper = expert_independent ? EimUpperBand(y, rho)
                                              : TemplateUpperBand(y, rho);
      if (json) {
        rows.push_back({{"y", y},
                        {"lower", std::isfinite(lower) ? Json(lower)
                                                       : Json(nullptr)},
                        {"upper", std::isfinite(upper) ? Json(upper)
                                                       : Json(nullptr)},
                        {"c", c(y)}});
      } else {
        out << y << ',' << lower << ',' << upper << ',' << c(y) << '\n';
      }
    }
  }
  if (json) PrintJson(rows, out);
  return kExitOk;
}

int CmdConstants(std::ostream& out) {
  PrintJson(ConstantsJson(), out);
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Hybrid expert/bidder mechanisms: evaluation, audits, ratios",
               "hybrid_mech"};
  app.require_subcommand(1);
  RunConfig config;

  auto add_common = [&config](CLI::App* sub) {
    sub->add_option("--mechanism,-m", config.mechanisms,
                    "Mechanism name(s), or 'all'");
    sub->add_option("--format", config.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--workers", config.workers,
                    "Worker threads (default: HYBRID_MECH_WORKERS, then all "
                    "cores)")
        ->check(CLI::NonNegativeNumber);
  };
  auto add_grid = [&config](CLI::App* sub, const std::string& help) {
    sub->add_option("--grid", config.grid, help)
        ->check(CLI::Range(3, 1000000));
  };
  auto add_tol = [&config](CLI::App* sub, const std::string& help) {
    sub->add_option("--tol", config.tol, help)
        ->check(CLI::PositiveNumber);
  };
  auto add_curve = [&config](CLI::App* sub) {
    sub->add_option("--curve", config.curve,
                    "Curve points [{\"y\":..,\"c\":..},...] (file or inline); "
                    "adds mechanism 'custom'");
    sub->add_option("--curve-class", config.curve_class,
                    "Class of the custom mechanism")
        ->check(CLI::IsMember({"template", "expert-independent"}));
  };

  CLI::App* eval = app.add_subcommand("eval", "Evaluate a mechanism");
  add_common(eval);
  add_curve(eval);
  eval->add_option("--profile", config.profile, "Profile JSON (file or inline)")
      ->required();
  eval->add_option("--seed", config.seed, "Seed for outcome sampling");

  CLI::App* ratio = app.add_subcommand("ratio", "Worst-case ratio search");
  add_common(ratio);
  add_curve(ratio);
  add_grid(ratio, "Grid points per axis (default 2001)");
  ratio->add_option("--csv-out", config.csv_out,
                    "Write the full ratio sweep as CSV");

  CLI::App* verify = app.add_subcommand("verify", "Truthfulness audits");
  add_common(verify);
  add_curve(verify);
  add_grid(verify, "Deviation points per audited profile (default 201)");
  add_tol(verify, "Black-box regret tolerance (default 1e-6)");

  CLI::App* table1 = app.add_subcommand("table1", "Reproduce the results table");
  add_common(table1);
  add_grid(table1, "Grid points per axis (default 2001)");
  add_tol(table1, "Allowed |measured - published| (default 5e-3)");

  CLI::App* curves = app.add_subcommand("curves", "Export plot data");
  add_common(curves);
  add_grid(curves, "Samples on [0,1] (default 101)");
  curves->add_option("--rho", config.rho, "Band ratio override")
      ->check(CLI::PositiveNumber);
  config.format = "json";

  CLI::App* constants = app.add_subcommand("constants", "Print constants");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  bool format_given = false;
  try {
    app.parse(reversed);
    for (CLI::App* sub : app.get_subcommands()) {
      const CLI::Option* opt = sub->get_option_no_throw("--format");
      format_given = format_given || (opt != nullptr && opt->count() > 0);
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  // Curves default to CSV; everything else to JSON.
  if (curves->parsed() && !format_given) config.format = "csv";

  try {
    if (eval->parsed()) return CmdEval(config, out);
    if (ratio->parsed()) return CmdRatio(config, out);
    if (verify->parsed()) return CmdVerify(config, out);
    if (table1->parsed()) return CmdTable1(config, out);
    if (curves->parsed()) return CmdCurves(config, out);
    if (constants->parsed()) return CmdConstants(out);
  } catch (const Error& e) {
    err << "error [" << ErrorCodeName(e.code()) << "]";
    if (!e.field().empty()) err << " " << e.field();
    err << ": " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hybrid
