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

#include "qwalk/symmetry.hpp"

namespace qwalk {

std::string_view to_string(SymmetryClass cls) {
  switch (cls) {
    case SymmetryClass::Symmetric:
      return "symmetric";
    case SymmetryClass::AntiSymmetric:
      return "antisymmetric";
    case SymmetryClass::None:
      return "none";
  }
  return "none";
}

PureState exchange(const PureState& state) { return exchanged(state); }

WalkerPureState exchange_walkers(const WalkerPureState& state) {
  return exchanged(state);
}

}  // namespace qwalk
