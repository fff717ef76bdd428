// Copyright 2026 The mapenum Authors.
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


#pragma once

#include <vector>

#include "json.hpp"
#include "mapenum/asymptotics.hpp"
#include "mapenum/enumeration.hpp"
#include "mapenum/oracle.hpp"
#include "mapenum/series.hpp"

namespace mapenum {

// JSON views of library results. Big integers and rationals are written as
// decimal strings ("num/den" for rationals) so no precision is lost.

nlohmann::json to_json(const CountReport& report);
nlohmann::json to_json(const TruncatedSeries& series);
/// True coefficients; entries past double range come out as null.
nlohmann::json to_json(const FloatSeries& series);
nlohmann::json to_json(const SingularData& s, const std::vector<double>& tau_k);
nlohmann::json to_json(const OracleSummary& summary);

}  // namespace mapenum
