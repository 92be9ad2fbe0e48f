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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace qwalk {

/** Reduced fraction num/den of pi, den > 0. */
struct PiFraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend bool operator==(const PiFraction&, const PiFraction&) = default;
};

/**
 * Coin angle theta in radians. Angles given as rational multiples of pi keep
 * the exact fraction so period arithmetic and output metadata can use it.
 */
class CoinAngle {
 public:
  /** Throws InvalidConfigError for non-finite input. */
  static CoinAngle from_radians(double radians);

  /** num*pi/den. Throws InvalidConfigError if den == 0. */
  static CoinAngle pi_fraction(std::int64_t num, std::int64_t den);

  /**
   * Accepts "pi/4", "2pi/9", "2*pi/9", "-pi/6", "3pi", "pi" (an optional
   * unicode "π" works in place of "pi"), or a plain decimal in radians.
   * Throws InvalidConfigError on anything else.
   */
  static CoinAngle parse(std::string_view text);

  double radians() const { return radians_; }
  const std::optional<PiFraction>& pi_multiple() const { return fraction_; }

  /** Canonical spelling: "pi/4", "2pi/9", "-pi", "0", or a decimal. */
  std::string to_string() const;

  friend bool operator==(const CoinAngle&, const CoinAngle&) = default;

 private:
  CoinAngle(double radians, std::optional<PiFraction> fraction)
      : radians_(radians), fraction_(fraction) {}

  double radians_ = 0.0;
  std::optional<PiFraction> fraction_;
};

}  // namespace qwalk
