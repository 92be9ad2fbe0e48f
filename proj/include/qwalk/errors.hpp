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

#include <stdexcept>

namespace qwalk {

class QwalkError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Renormalization was requested for a state with vanishing norm. */
class ZeroNormError : public QwalkError {
 public:
  using QwalkError::QwalkError;
};

/**
 * A post-selection outcome that cannot occur: the projected state has
 * probability at or below the zero-probability threshold.
 */
class ZeroProbabilityError : public QwalkError {
 public:
  using QwalkError::QwalkError;
};

class InvalidConfigError : public QwalkError {
 public:
  using QwalkError::QwalkError;
};

class IoError : public QwalkError {
 public:
  using QwalkError::QwalkError;
};

}  // namespace qwalk
