// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

namespace qwalk {

/**
 * Fixed-format real for CSV output: 12 significant digits, always carrying a
 * decimal point or exponent ("1.0", "0.25", "1.41503749928"). Negative zero
 * prints as "0.0".
 */
std::string format_real(double value);

}  // namespace qwalk
