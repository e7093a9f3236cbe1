// Copyright 2026 The matroidkit Authors.
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

#ifndef MATROIDKIT_BUDGET_HPP_
#define MATROIDKIT_BUDGET_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace matroidkit {

/// Thrown when an exhaustive search would exceed its step allowance.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Step counter for exhaustive searches. Not thread-safe; give each worker
/// its own.
class Budget {
 public:
  explicit Budget(std::uint64_t limit) : limit_(limit) {}

  void spend(std::uint64_t steps = 1) {
    used_ += steps;
    if (used_ > limit_) {
      throw BudgetExceeded("search budget of " + std::to_string(limit_) + " steps exhausted");
    }
  }
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

inline constexpr std::uint64_t kDefaultBudget = 20'000'000;

/// kDefaultBudget, or the positive integer in MATROID_KIT_BUDGET when set.
/// Throws std::invalid_argument when the variable is set but malformed.
std::uint64_t default_budget();

}  // namespace matroidkit

#endif  // MATROIDKIT_BUDGET_HPP_
