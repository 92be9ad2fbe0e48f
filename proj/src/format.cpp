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

#include "qwalk/format.hpp"

#include <cmath>
#include <cstdio>

namespace qwalk {

std::string format_real(double value) {
  if (value == 0.0) return "0.0";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  std::string out(buf);
  if (out.find_first_of(".eni") == std::string::npos) out += ".0";
  return out;
}

}  // namespace qwalk
