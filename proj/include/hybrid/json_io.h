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

#ifndef HYBRID_JSON_IO_H_
#define HYBRID_JSON_IO_H_

// JSON encodings of the library's inputs and reports. Load errors are
// hybrid::Error with code kParse (or the canonicalization error) and the
// offending field name.

#include <string>
#include <vector>

#include "hybrid/bounds.h"
#include "hybrid/core.h"
#include "hybrid/mechanisms.h"
#include "hybrid/payments.h"
#include "hybrid/ratio.h"
#include "hybrid/verify.h"
#include "json.hpp"

namespace hybrid {

using Json = nlohmann::ordered_json;

// {"expert": {"A": f, "B": f, "none": f}, "bids": {"A": f, "B": f}}
Profile ProfileFromJson(const Json& j);
Json ToJson(const Profile& p);
Json ToJson(const Lottery& l);

// [{"y": f, "c": f}, ...]
std::vector<CurvePoint> CurvePointsFromJson(const Json& j);

// Parses `text` as JSON, or as a path to a JSON file when it does not start
// with '{' or '['.
Json LoadJsonArgument(const std::string& text);

Json ToJson(const Outcome& o);
Json ToJson(const RatioReport& r);
Json ToJson(const AuditReport& r);
Json ToJson(const MarginReport& r);
Json ConstantsJson();

}  // namespace hybrid

#endif  // HYBRID_JSON_IO_H_
