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

#include "matroidkit/budget.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace matroidkit {

std::uint64_t default_budget() {
  const char* text = std::getenv("MATROID_KIT_BUDGET");
  if (text == nullptr || *text == '\0') return kDefaultBudget;
  std::uint64_t value = 0;
  const char* end = text + std::strlen(text);
  auto [ptr, ec] = std::from_chars(text, end, value);
  if (ec != std::errc() || ptr != end || value == 0) {
    throw std::invalid_argument(std::string("MATROID_KIT_BUDGET must be a positive integer, got '") +
                                text + "'");
  }
  return value;
}

}  // namespace matroidkit
