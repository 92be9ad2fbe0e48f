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

#include "qwalk/verification.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "qwalk/entanglement.hpp"
#include "qwalk/experiment.hpp"
#include "qwalk/operators.hpp"

namespace qwalk {

namespace {

CoinFace random_face(std::mt19937_64& rng) {
  return std::bernoulli_distribution(0.5)(rng) ? CoinFace::Down : CoinFace::Up;
}

Complex random_amplitude(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  return {normal(rng), normal(rng)};
}

std::string describe(const std::string& where, double value = std::nan("")) {
  std::ostringstream os;
  os << where;
  if (!std::isnan(value)) os << " (deviation " << value << ")";
  return os.str();
}

// Independent single coin-walker evolution used as the reference for the
// tensor-structure check.
using SingleState = std::map<std::pair<CoinFace, int>, Complex>;

SingleState single_step(const SingleState& in, const CoinMatrix& coin) {
  SingleState out;
  for (const auto& [key, amp] : in) {
    const auto [c, x] = key;
    for (auto d : {CoinFace::Up, CoinFace::Down}) {
      const double k = coin(static_cast<int>(d), static_cast<int>(c));
      out[{d, d == CoinFace::Up ? x + 1 : x - 1}] += k * amp;
    }
  }
  return out;
}

std::string angle_tag(const CoinAngle& theta) { return "theta=" + theta.to_string(); }

}  // namespace

std::vector<CoinAngle> verification_angles() {
  return {CoinAngle::pi_fraction(1, 6), CoinAngle::pi_fraction(1, 4),
          CoinAngle::pi_fraction(2, 9), CoinAngle::pi_fraction(1, 3)};
}

PureState random_pure_state(std::mt19937_64& rng, int max_support, int radius) {
  std::uniform_int_distribution<int> size_dist(1, max_support);
  std::uniform_int_distribution<int> pos(-radius, radius);
  const int n = size_dist(rng);
  std::vector<PureState::Entry> entries;
  for (int i = 0; i < n; ++i) {
    entries.push_back({{random_face(rng), random_face(rng), pos(rng), pos(rng)},
                       random_amplitude(rng)});
  }
  return normalize(PureState(std::move(entries), radius));
}

WalkerPureState random_walker_state(std::mt19937_64& rng, int max_support,
                                    int radius) {
  std::uniform_int_distribution<int> size_dist(1, max_support);
  std::uniform_int_distribution<int> pos(-radius, radius);
  const int n = size_dist(rng);
  std::vector<WalkerPureState::Entry> entries;
  for (int i = 0; i < n; ++i) {
    entries.push_back({{pos(rng), pos(rng)}, random_amplitude(rng)});
  }
  return normalize(WalkerPureState(std::move(entries), radius));
}

SymmetryClass expected_walker_symmetry(BellType bell, PostSelector selector) {
  const SymmetryClass initial = is_antisymmetric(bell) ? SymmetryClass::AntiSymmetric
                                                       : SymmetryClass::Symmetric;
  const SymmetryClass flipped = is_antisymmetric(bell) ? SymmetryClass::Symmetric
                                                       : SymmetryClass::AntiSymmetric;
  switch (selector) {
    case PostSelector::UpUp:
    case PostSelector::DownDown:
    case PostSelector::TripletPlus:
      return initial;
    case PostSelector::Singlet:
      return flipped;
    case PostSelector::UpDown:
    case PostSelector::DownUp:
      return SymmetryClass::None;
  }
  return SymmetryClass::None;
}

PropertyResult check_exchange_covariance(const VerificationOptions& options) {
  PropertyResult result{"exchange commutes with the walk step", true, ""};
  std::mt19937_64 rng(options.seed);
  int checked = 0;
  for (int i = 0; i < options.random_states; ++i) {
    const PureState s = random_pure_state(rng, options.max_support, 4);
    for (const CoinAngle& theta : verification_angles()) {
      ++checked;
      if (exchange(apply_step(s, theta)) != apply_step(exchange(s), theta)) {
        result.passed = false;
        result.detail = describe("random state #" + std::to_string(i) + ", " +
                                 angle_tag(theta));
        return result;
      }
    }
  }
  result.detail = std::to_string(checked) + " exact comparisons";
  return result;
}

PropertyResult check_symmetry_conservation(const VerificationOptions& options) {
  PropertyResult result{"exchange class is conserved by the walk", true, ""};
  for (BellType bell : kAllBellTypes) {
    const SymmetryClass expected = is_antisymmetric(bell)
                                       ? SymmetryClass::AntiSymmetric
                                       : SymmetryClass::Symmetric;
    for (const CoinAngle& theta : verification_angles()) {
      PureState state = build_initial(bell);
      for (int n = 0; n <= options.max_steps; ++n) {
        if (n > 0) state = apply_step(state, theta);
        if (classify(state) != expected) {
          result.passed = false;
          result.detail = describe(std::string(to_string(bell)) + ", " +
                                   angle_tag(theta) + ", step " + std::to_string(n));
          return result;
        }
      }
    }
  }
  result.detail = "all Bell states, steps 0.." + std::to_string(options.max_steps);
  return result;
}

PropertyResult check_local_tensor_structure(const VerificationOptions& options) {
  PropertyResult result{"two-walker step equals two independent walks", true, ""};
  std::mt19937_64 rng(options.seed + 1);
  std::uniform_int_distribution<int> pos(-2, 2);
  double worst = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    SingleState a;
    SingleState b;
    for (int i = 0; i < 3; ++i) {
      a[{random_face(rng), pos(rng)}] += random_amplitude(rng);
      b[{random_face(rng), pos(rng)}] += random_amplitude(rng);
    }
    for (const CoinAngle& theta : verification_angles()) {
      std::vector<PureState::Entry> joint;
      for (const auto& [ka, va] : a)
        for (const auto& [kb, vb] : b)
          joint.push_back({{ka.first, kb.first, ka.second, kb.second}, va * vb});
      PureState state(std::move(joint), 0);
      SingleState ea = a;
      SingleState eb = b;
      const CoinMatrix coin = coin_matrix(theta);
      for (int n = 1; n <= 6; ++n) {
        state = apply_step(state, coin);
        ea = single_step(ea, coin);
        eb = single_step(eb, coin);
        std::vector<PureState::Entry> product;
        for (const auto& [ka, va] : ea)
          for (const auto& [kb, vb] : eb)
            product.push_back({{ka.first, kb.first, ka.second, kb.second}, va * vb});
        const PureState reference(std::move(product), n);
        worst = std::max(worst, combination_norm(state, reference, -1.0));
      }
    }
  }
  result.passed = worst < 1e-12;
  result.detail = describe("10 random product states, 6 steps", worst);
  return result;
}

PropertyResult check_norm_preservation(const VerificationOptions& options) {
  PropertyResult result{"the walk preserves the norm", true, ""};
  std::mt19937_64 rng(options.seed + 2);
  double worst = 0.0;
  for (int i = 0; i < options.random_states; ++i) {
    PureState s = random_pure_state(rng, options.max_support, 3);
    for (int n = 0; n < options.max_steps; ++n) {
      s = apply_step(s, verification_angles()[static_cast<std::size_t>(n) % 4]);
    }
    worst = std::max(worst, std::abs(s.norm_squared() - 1.0));
  }
  result.passed = worst < 1e-10;
  result.detail = describe(std::to_string(options.random_states) + " random states", worst);
  return result;
}

PropertyResult check_local_rank_bound(const VerificationOptions& options) {
  PropertyResult result{"post-selected walker has reduced rank <= 2 (local outcomes)",
                        true, ""};
  int checked = 0;
  for (BellType bell : kAllBellTypes) {
    for (const CoinAngle& theta : verification_angles()) {
      PureState state = build_initial(bell);
      for (int n = 1; n <= options.max_steps; ++n) {
        state = apply_step(state, theta);
        for (PostSelector s : selectors_of(MeasurementBasis::Local)) {
          if (!(outcome_probability(state, s) > 1e-12)) continue;
          const auto selected = post_select(state, s);
          const DensityMatrix rho = density_from_walker_pure(selected.walker_state);
          for (Walker w : {Walker::First, Walker::Second}) {
            ++checked;
            const int rank = numerical_rank(reduced_single_walker(rho, w), 1e-10);
            if (rank > 2) {
              result.passed = false;
              result.detail = describe(std::string(to_string(bell)) + ", " +
                                       angle_tag(theta) + ", step " +
                                       std::to_string(n) + ", " +
                                       std::string(to_string(s)) + ": rank " +
                                       std::to_string(rank));
              return result;
            }
          }
        }
      }
    }
  }
  result.detail = std::to_string(checked) + " reduced states";
  return result;
}

PropertyResult check_postselection_symmetry(const VerificationOptions& options) {
  PropertyResult result{"post-selected walker symmetry follows the coin outcome",
                        true, ""};
  int checked = 0;
  for (BellType bell : kAllBellTypes) {
    for (const CoinAngle& theta : verification_angles()) {
      PureState state = build_initial(bell);
      for (int n = 1; n <= options.max_steps; ++n) {
        state = apply_step(state, theta);
        for (PostSelector s : kAllSelectors) {
          if (!(outcome_probability(state, s) > kZeroProbability)) continue;
          ++checked;
          const auto selected = post_select(state, s);
          if (classify(selected.walker_state) != expected_walker_symmetry(bell, s)) {
            result.passed = false;
            result.detail = describe(std::string(to_string(bell)) + ", " +
                                     angle_tag(theta) + ", step " +
                                     std::to_string(n) + ", " +
                                     std::string(to_string(s)));
            return result;
          }
        }
      }
    }
  }
  result.detail = std::to_string(checked) + " post-selected states";
  return result;
}

PropertyResult check_constant_entanglement(const VerificationOptions& options) {
  PropertyResult result{"antisymmetric walker outcomes keep log-negativity 1", true, ""};
  const std::pair<BellType, PostSelector> cases[] = {
      {BellType::PsiMinus, PostSelector::UpUp},
      {BellType::PsiMinus, PostSelector::DownDown},
      {BellType::PsiMinus, PostSelector::TripletPlus},
      {BellType::PsiPlus, PostSelector::Singlet},
      {BellType::PhiPlus, PostSelector::Singlet},
      {BellType::PhiMinus, PostSelector::Singlet},
  };
  double worst = 0.0;
  for (const auto& [bell, selector] : cases) {
    for (const CoinAngle& theta : verification_angles()) {
      RunConfig config;
      config.bell = bell;
      config.theta = theta;
      config.steps = options.max_steps;
      config.selector = selector;
      for (const TraceRecord& r : run(config).records) {
        if (r.log_negativity) worst = std::max(worst, std::abs(*r.log_negativity - 1.0));
      }
    }
  }
  result.passed = worst < 1e-9;
  result.detail = describe("6 cases x 4 angles", worst);
  return result;
}

PropertyResult check_down_spectrum(const VerificationOptions& options) {
  PropertyResult result{"down-down/down-up traces equal up-up/up-down", true, ""};
  double worst = 0.0;
  const std::pair<PostSelector, PostSelector> pairs[] = {
      {PostSelector::UpUp, PostSelector::DownDown},
      {PostSelector::UpDown, PostSelector::DownUp}};
  for (BellType bell : kAllBellTypes) {
    for (const CoinAngle& theta : verification_angles()) {
      for (const auto& [up, down] : pairs) {
        RunConfig config;
        config.bell = bell;
        config.theta = theta;
        config.steps = options.max_steps;
        config.selector = up;
        const auto a = run(config);
        config.selector = down;
        const auto b = run(config);
        for (std::size_t i = 0; i < a.records.size(); ++i) {
          const auto& ra = a.records[i];
          const auto& rb = b.records[i];
          if (ra.realized() != rb.realized()) {
            result.passed = false;
            result.detail = describe("outcome possible on one side only");
            return result;
          }
          worst = std::max(worst, std::abs(ra.probability - rb.probability));
          if (ra.realized()) {
            worst = std::max(worst, std::abs(*ra.log_negativity - *rb.log_negativity));
          }
        }
      }
    }
  }
  result.passed = worst < 1e-10;
  result.detail = describe("all Bell states x 4 angles", worst);
  return result;
}

std::vector<PropertyResult> run_verification_suite(const VerificationOptions& options) {
  return {
      check_exchange_covariance(options),  check_symmetry_conservation(options),
      check_local_tensor_structure(options), check_norm_preservation(options),
      check_local_rank_bound(options),     check_postselection_symmetry(options),
      check_constant_entanglement(options), check_down_spectrum(options),
  };
}

}  // namespace qwalk
