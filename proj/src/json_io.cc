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

#include "hybrid/json_io.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "hybrid/constants.h"
#include "hybrid/errors.h"
#include "hybrid/grid.h"

namespace hybrid {
namespace {

double NumberField(const Json& parent, const char* key,
                   const std::string& path) {
  const std::string field = path + "." + key;
  if (!parent.contains(key)) {
    throw Error(ErrorCode::kParse, "missing field", field);
  }
  const Json& v = parent.at(key);
  if (!v.is_number()) {
    throw Error(ErrorCode::kParse, "expected a number", field);
  }
  return v.get<double>();
}

const Json& ObjectField(const Json& parent, const char* key) {
  if (!parent.is_object() || !parent.contains(key)) {
    throw Error(ErrorCode::kParse, "missing field", key);
  }
  const Json& v = parent.at(key);
  if (!v.is_object()) {
    throw Error(ErrorCode::kParse, "expected an object", key);
  }
  return v;
}

// JSON has no infinities; unbounded band edges are written as null.
Json Finite(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

}  // namespace

Profile ProfileFromJson(const Json& j) {
  const Json& expert = ObjectField(j, "expert");
  const Json& bids = ObjectField(j, "bids");
  const ExpertValues values = {NumberField(expert, "A", "expert"),
                               NumberField(expert, "B", "expert"),
                               NumberField(expert, "none", "expert")};
  const Bids raw_bids = {NumberField(bids, "A", "bids"),
                         NumberField(bids, "B", "bids")};
  return Profile::Canonicalize(values, raw_bids);
}

Json ToJson(const Profile& p) {
  return {{"expert",
           {{"A", p.value(Option::kSellToA)},
            {"B", p.value(Option::kSellToB)},
            {"none", p.value(Option::kNoSale)}}},
          {"bids", {{"A", p.bid(Agent::kA)}, {"B", p.bid(Agent::kB)}}}};
}

Json ToJson(const Lottery& l) {
  return {{"A", l.a}, {"B", l.b}, {"none", l.none}};
}

std::vector<CurvePoint> CurvePointsFromJson(const Json& j) {
  if (!j.is_array()) {
    throw Error(ErrorCode::kParse, "curve must be an array of {y, c}",
                "curve");
  }
  std::vector<CurvePoint> points;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string path = "curve[" + std::to_string(i) + "]";
    if (!j[i].is_object()) {
      throw Error(ErrorCode::kParse, "expected an object", path);
    }
    points.push_back({NumberField(j[i], "y", path), NumberField(j[i], "c", path)});
  }
  return points;
}

Json LoadJsonArgument(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  const bool inline_json =
      first != std::string::npos && (text[first] == '{' || text[first] == '[');
  std::string content = text;
  if (!inline_json) {
    std::ifstream in(text);
    if (!in) throw Error(ErrorCode::kParse, "cannot open file " + text, text);
    std::ostringstream buf;
    buf << in.rdbuf();
    content = buf.str();
  }
  try {
    return Json::parse(content);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("invalid JSON: ") + e.what(),
                inline_json ? "<inline>" : text);
  }
}

Json ToJson(const Outcome& o) {
  return {{"option", std::string(OptionName(o.option))},
          {"payments", {{"A", o.payments.a}, {"B", o.payments.b}}},
          {"lottery", ToJson(o.lottery)},
          {"seed", o.seed}};
}

Json ToJson(const RatioReport& r) {
  return {{"mechanism", r.mechanism},
          {"ratio", r.ratio},
          {"witness",
           {{"ordering", RankingLabel(r.witness.ranking)},
            {"x", r.witness.x},
            {"y", r.witness.y},
            {"highAgent", std::string(OptionName(OptionOf(r.witness.high)))},
            {"profile", ToJson(r.witness_profile)}}},
          {"searchIterations", r.iterations},
          {"refined", r.refined},
          {"limit", r.limit}};
}

Json ToJson(const AuditReport& r) {
  Json witness = nullptr;
  if (r.witness) {
    witness = {{"profile", ToJson(r.witness->profile)},
               {"deviation", r.witness->deviation}};
  }
  return {{"mechanism", r.mechanism},
          {"check", r.check},
          {"maxViolation", r.max_violation},
          {"tolerance", r.tolerance},
          {"passed", r.passed},
          {"witness", witness}};
}

Json ToJson(const MarginReport& r) {
  return {{"condition", r.condition},
          {"rho", r.rho},
          {"firstMinSlack", Finite(r.first_min_slack)},
          {"firstWitness", r.first_witness},
          {"secondMinSlack", Finite(r.second_min_slack)},
          {"secondWitness", r.second_witness},
          {"passed", r.passed()}};
}

Json ConstantsJson() {
  const Constants& k = GetConstants();
  const double w = LambertW0(-1.0 / (2.0 * std::exp(1.0)));
  auto entry = [](double value, double residual, const char* equation) {
    return Json{{"value", value}, {"residual", residual},
                {"equation", equation}};
  };
  Json j;
  j["tau"] = entry(k.tau, k.tau_residual(), "2t = exp(t-1)");
  j["tauLambert"] =
      entry(-w, std::abs(-w - k.tau), "-W0(-1/(2e)); residual vs tau");
  j["phi"] = entry(k.phi, k.phi_residual(), "phi^2 = phi + 1");
  j["invPhi"] = entry(k.inv_phi, std::abs(k.inv_phi * k.phi - 1.0),
                      "invPhi * phi = 1");
  j["rhoBIM"] = entry(k.rho_bim,
                      std::abs(k.rho_bim - BidIndependentLowerBound()),
                      "(1+3tau)/(1+tau); residual vs Lambert-W form");
  j["rhoEIM"] = entry(k.rho_eim, std::abs(k.rho_eim * k.rho_eim -
                                          14.0 * k.rho_eim + 17.0),
                      "7-4sqrt(2), root of r^2 - 14r + 17");
  j["eimBreak"] = entry(k.eim_break,
                        std::abs(k.eim_break - (2.0 * std::sqrt(2.0) - 2.0)),
                        "(3-rhoEIM)/2 = 2sqrt(2)-2");
  j["gamma"] = entry(k.gamma, k.gamma_residual(),
                     "1 - 2g - 4g^2 - 2g^3 = 0");
  j["beta"] = entry(k.beta, std::abs(k.beta * (1.0 + k.gamma) - 1.0),
                    "beta (1+gamma) = 1");
  j["rhoGeneral"] =
      entry(k.rho_general,
            std::abs(k.rho_general -
                     (k.beta + 2.0 * k.beta * k.gamma - k.gamma * k.gamma)),
            "(beta+2beta*gamma-gamma^2)/(beta(1+gamma))");
  return j;
}

}  // namespace hybrid
