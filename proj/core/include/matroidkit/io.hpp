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
#ifndef MATROIDKIT_IO_HPP_
#define MATROIDKIT_IO_HPP_

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>

#include "matroidkit/fragility.hpp"
#include "matroidkit/matroid.hpp"
#include "matroidkit/pmatrix.hpp"
#include "matroidkit/verify.hpp"

namespace matroidkit {

/// Malformed or inconsistent input documents.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file.
Json load_json(const std::string& path);

/// {"field": "gf3", "rows": [..], "cols": [..], "entries": [["1", ..], ..]}.
/// Entries may also be given as integers.
PMatrix pmatrix_from_json(const Json& j);
Json to_json(const PMatrix& a);

/// One of {"ground": [..], "bases": [[..], ..]}, {"construct": name,
/// "args": [..]} or {"matrix": <P-matrix>}.
Matroid matroid_from_json(const Json& j);
/// Always the ground/bases form, bases in ascending label order.
Json to_json(const Matroid& m);

/// {"matroid": .., "N": .., "a": .., "b": .., "B": [..], "A": <P-matrix>,
/// "x": .., "y": ..}; "A" is optional.
Context context_from_json(const Json& j);
Json to_json(const Context& ctx);

Json to_json(ElementSet s);
/// One JSON-lines record. Timing is left out unless asked for, so that
/// reports for a fixed seed are byte-identical.
Json to_json(const VerifyReport& r, bool with_timing = false);

}  // namespace matroidkit

#endif  // MATROIDKIT_IO_HPP_
