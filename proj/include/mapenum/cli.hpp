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

#include <ostream>

namespace mapenum {

/// Entry point behind the `mapenum` executable. Subcommands: count, series,
/// stat, asym, figures, verify. Returns 0 on success, 1 when verify finds
/// a mismatch, 2 on bad arguments or domain errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mapenum
