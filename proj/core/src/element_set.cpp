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

#include "matroidkit/element_set.hpp"

#include <sstream>
#include <stdexcept>

namespace matroidkit {
namespace {

void check_label(int label) {
  if (label < 0 || label > kMaxLabel) {
    throw std::out_of_range("element label " + std::to_string(label) +
                            " outside [0, 63]");
  }
}

}  // namespace

ElementSet::ElementSet(std::initializer_list<int> labels) {
  for (int l : labels) insert(l);
}

ElementSet::ElementSet(const std::vector<int>& labels) {
  for (int l : labels) insert(l);
}

ElementSet ElementSet::single(int label) {
  ElementSet s;
  s.insert(label);
  return s;
}

ElementSet& ElementSet::insert(int label) {
  check_label(label);
  bits_ |= std::uint64_t{1} << label;
  return *this;
}

ElementSet& ElementSet::erase(int label) {
  check_label(label);
  bits_ &= ~(std::uint64_t{1} << label);
  return *this;
}

std::vector<int> ElementSet::to_vector() const {
  std::vector<int> out;
  out.reserve(size());
  for (int l : *this) out.push_back(l);
  return out;
}

std::string ElementSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int l : *this) {
    if (!first) os << ',';
    os << l;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace matroidkit
