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

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <compare>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qwalk/errors.hpp"

namespace qwalk {

using Complex = std::complex<double>;

/** Norm below which a state is treated as the zero vector. */
inline constexpr double kZeroNorm = 1e-15;

/** Coin basis state. Up orders before Down in every canonical listing. */
enum class CoinFace : std::uint8_t { Up = 0, Down = 1 };

/** Joint basis element |c1, c2> (x) |x1, x2> of the two coin-walker pairs. */
struct BasisLabel {
  CoinFace c1;
  CoinFace c2;
  int x1;
  int x2;

  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;

  // Canonical order: positions (x1, x2) first, then coins (c1, c2).
  friend std::strong_ordering operator<=>(
      const BasisLabel& a, const BasisLabel& b) {
    if (auto c = a.x1 <=> b.x1; c != 0) return c;
    if (auto c = a.x2 <=> b.x2; c != 0) return c;
    if (auto c = a.c1 <=> b.c1; c != 0) return c;
    return a.c2 <=> b.c2;
  }
};

/** Walker-only basis element |x1, x2>. */
struct PositionPair {
  int x1;
  int x2;

  friend auto operator<=>(const PositionPair&, const PositionPair&) = default;
};

/** Image of a basis element under exchange of the two parties. */
constexpr BasisLabel swapped(const BasisLabel& k) {
  return {k.c2, k.c1, k.x2, k.x1};
}
constexpr PositionPair swapped(const PositionPair& k) { return {k.x2, k.x1}; }

/**
 * Sparse pure state: a list of (basis element, amplitude) entries kept sorted
 * by the canonical key order, with unique keys and no exactly-zero amplitude.
 *
 * Instances are immutable values. Construction from arbitrary entries sorts
 * them, sums repeated keys in input order and drops exact zeros, so two states
 * holding the same amplitudes compare equal with `==`.
 */
template <typename Key>
class SparseState {
 public:
  using key_type = Key;
  using Entry = std::pair<Key, Complex>;

  SparseState() = default;

  explicit SparseState(std::vector<Entry> entries, int step_count = 0)
      : entries_(std::move(entries)), step_count_(step_count) {
    std::stable_sort(
        entries_.begin(), entries_.end(),
        [](const Entry& a, const Entry& b) { return a.first < b.first; });
    std::vector<Entry> merged;
    merged.reserve(entries_.size());
    for (const Entry& e : entries_) {
      if (!merged.empty() && merged.back().first == e.first) {
        merged.back().second += e.second;
      } else {
        merged.push_back(e);
      }
    }
    std::erase_if(merged, [](const Entry& e) { return e.second == 0.0; });
    entries_ = std::move(merged);
  }

  const std::vector<Entry>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  int step_count() const { return step_count_; }

  /** Amplitude of `key`, zero when not stored. */
  Complex amplitude(const Key& key) const {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), key,
        [](const Entry& e, const Key& k) { return e.first < k; });
    if (it == entries_.end() || it->first != key) return {0.0, 0.0};
    return it->second;
  }

  double norm_squared() const {
    double total = 0.0;
    for (const auto& [key, amp] : entries_) total += std::norm(amp);
    return total;
  }

  double norm() const { return std::sqrt(norm_squared()); }

  /** Same amplitudes multiplied by `factor`; exact zeros are dropped. */
  SparseState scaled(Complex factor) const {
    std::vector<Entry> out;
    out.reserve(entries_.size());
    for (const auto& [key, amp] : entries_) out.emplace_back(key, amp * factor);
    return SparseState(std::move(out), step_count_);
  }

  friend bool operator==(const SparseState&, const SparseState&) = default;

 private:
  std::vector<Entry> entries_;
  int step_count_ = 0;
};

/** Full coin-walker state of both parties. */
using PureState = SparseState<BasisLabel>;
/** Post-selected state of the two walkers alone. */
using WalkerPureState = SparseState<PositionPair>;

enum class BellType { PsiPlus, PsiMinus, PhiPlus, PhiMinus };

inline constexpr BellType kAllBellTypes[] = {
    BellType::PsiPlus, BellType::PsiMinus, BellType::PhiPlus,
    BellType::PhiMinus};

/** Only |Psi-> is antisymmetric under exchange of the two coins. */
constexpr bool is_antisymmetric(BellType bell) {
  return bell == BellType::PsiMinus;
}

std::string_view to_string(BellType bell);
std::optional<BellType> parse_bell(std::string_view text);

/** |bell> (x) |0, 0> with step count zero. */
PureState build_initial(BellType bell);

/** <a|b>, summed over the keys the two states share. */
template <typename Key>
Complex inner_product(const SparseState<Key>& a, const SparseState<Key>& b) {
  Complex total{0.0, 0.0};
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      total += std::conj(ia->second) * ib->second;
      ++ia;
      ++ib;
    }
  }
  return total;
}

/**
 * Euclidean norm of `a + sign * b` computed by merging the two supports.
 */
template <typename Key>
double combination_norm(
    const SparseState<Key>& a, const SparseState<Key>& b, double sign) {
  double total = 0.0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      total += std::norm(ia->second);
      ++ia;
    } else if (ia == a.end() || ib->first < ia->first) {
      total += std::norm(ib->second);
      ++ib;
    } else {
      total += std::norm(ia->second + sign * ib->second);
      ++ia;
      ++ib;
    }
  }
  return std::sqrt(total);
}

/**
 * Rescales to unit norm, keeping relative phases.
 * Throws ZeroNormError if the norm is at or below kZeroNorm.
 */
template <typename Key>
SparseState<Key> normalize(const SparseState<Key>& state) {
  const double n = state.norm();
  if (!(n > kZeroNorm)) {
    throw ZeroNormError("cannot normalize a state with norm " +
                        std::to_string(n));
  }
  if (n == 1.0) return state;
  return state.scaled(1.0 / n);
}

// Dense layout over the square lattice [-radius, radius]^2, canonical order
// (x1, x2, c1, c2). Used for cross-checks against matrix implementations.
std::size_t dense_dimension(int radius);
std::size_t dense_index(const BasisLabel& label, int radius);
Eigen::VectorXcd to_dense(const PureState& state, int radius);
PureState from_dense(const Eigen::VectorXcd& vec, int radius, int step_count);

}  // namespace qwalk
