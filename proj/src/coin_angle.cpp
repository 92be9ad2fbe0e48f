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

#include "qwalk/coin_angle.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>

#include "qwalk/errors.hpp"
#include "qwalk/format.hpp"

namespace qwalk {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::optional<std::int64_t> parse_int(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

[[noreturn]] void reject(std::string_view text) {
  throw InvalidConfigError("cannot parse coin angle '" + std::string(text) +
                           "' (expected e.g. pi/4, 2pi/9 or 0.785)");
}

}  // namespace

CoinAngle CoinAngle::from_radians(double radians) {
  if (!std::isfinite(radians)) {
    throw InvalidConfigError("coin angle must be finite");
  }
  return CoinAngle(radians, std::nullopt);
}

CoinAngle CoinAngle::pi_fraction(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidConfigError("coin angle denominator is zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  const double radians =
      static_cast<double>(num) * std::numbers::pi / static_cast<double>(den);
  return CoinAngle(radians, PiFraction{num, den});
}

CoinAngle CoinAngle::parse(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) reject(text);

  std::size_t pi_pos = s.find("pi");
  std::size_t pi_len = 2;
  if (pi_pos == std::string_view::npos) {
    pi_pos = s.find("π");
    pi_len = std::string_view("π").size();
  }

  if (pi_pos == std::string_view::npos) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) reject(text);
    if (value == 0.0) return pi_fraction(0, 1);
    return from_radians(value);
  }

  std::string_view coeff = trim(s.substr(0, pi_pos));
  std::string_view rest = trim(s.substr(pi_pos + pi_len));
  if (!coeff.empty() && coeff.back() == '*') coeff = trim(coeff.substr(0, coeff.size() - 1));

  std::int64_t num = 1;
  if (coeff == "-") {
    num = -1;
  } else if (coeff == "+" || coeff.empty()) {
    num = 1;
  } else {
    if (coeff.front() == '+') coeff.remove_prefix(1);
    auto parsed = parse_int(coeff);
    if (!parsed) reject(text);
    num = *parsed;
  }

  std::int64_t den = 1;
  if (!rest.empty()) {
    if (rest.front() != '/') reject(text);
    auto parsed = parse_int(trim(rest.substr(1)));
    if (!parsed || *parsed <= 0) reject(text);
    den = *parsed;
  }
  return pi_fraction(num, den);
}

std::string CoinAngle::to_string() const {
  if (!fraction_) return format_real(radians_);
  const auto [num, den] = *fraction_;
  if (num == 0) return "0";
  std::string out;
  if (num == -1) {
    out = "-pi";
  } else if (num == 1) {
    out = "pi";
  } else {
    out = std::to_string(num) + "pi";
  }
  if (den != 1) out += "/" + std::to_string(den);
  return out;
}

}  // namespace qwalk
