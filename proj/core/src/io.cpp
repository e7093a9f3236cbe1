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
#include "matroidkit/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "matroidkit/catalog.hpp"

namespace matroidkit {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing key \"") + key + "\"");
  return *it;
}

int element(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer element label");
  const auto v = j.get<std::int64_t>();
  if (v < 0 || v > 63) throw ParseError(std::string(what) + " is outside the label range 0..63");
  return static_cast<int>(v);
}

std::vector<int> labels(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of element labels");
  std::vector<int> out;
  out.reserve(j.size());
  for (const Json& e : j) out.push_back(element(e, what));
  return out;
}

ElementSet label_set(const Json& j, const char* what) {
  const std::vector<int> v = labels(j, what);
  const ElementSet s(v);
  if (s.size() != static_cast<int>(v.size())) throw ParseError(std::string(what) + " repeats a label");
  return s;
}

}  // namespace

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

PMatrix pmatrix_from_json(const Json& j) {
  if (!field(j, "field").is_string()) throw ParseError("\"field\" must be a string");
  PartialField f = PartialField::regular();
  try {
    f = PartialField::parse(field(j, "field").get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  const std::vector<int> rows = labels(field(j, "rows"), "rows");
  const std::vector<int> cols = labels(field(j, "cols"), "cols");
  const Json& entries = field(j, "entries");
  if (!entries.is_array() || entries.size() != rows.size()) {
    throw ParseError("\"entries\" must have one array per row");
  }
  std::vector<std::vector<RingValue>> values;
  for (const Json& row : entries) {
    if (!row.is_array() || row.size() != cols.size()) throw ParseError("each row of \"entries\" needs one value per column");
    std::vector<RingValue> r;
    for (const Json& v : row) {
      std::string text;
      if (v.is_string()) {
        text = v.get<std::string>();
      } else if (v.is_number_integer()) {
        text = std::to_string(v.get<std::int64_t>());
      } else {
        throw ParseError("matrix entries must be strings or integers");
      }
      try {
        r.push_back(f.parse_value(text));
      } catch (const std::invalid_argument& e) {
        throw ParseError("entry \"" + text + "\": " + e.what());
      }
    }
    values.push_back(std::move(r));
  }
  try {
    return PMatrix(f, rows, cols, std::move(values));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const PMatrix& a) {
  Json j;
  j["field"] = a.field().name();
  j["rows"] = a.rows();
  j["cols"] = a.cols();
  Json entries = Json::array();
  for (int r : a.rows()) {
    Json row = Json::array();
    for (int c : a.cols()) row.push_back(a.field().format(a.at(r, c)));
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

Matroid matroid_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("a matroid must be a JSON object");
  try {
    if (j.contains("matrix")) return matroid_from(pmatrix_from_json(j["matrix"]));
    if (j.contains("construct")) {
      if (!j["construct"].is_string()) throw ParseError("\"construct\" must be a string");
      std::vector<int> args;
      if (j.contains("args")) {
        if (!j["args"].is_array()) throw ParseError("\"args\" must be an array of integers");
        for (const Json& a : j["args"]) {
          if (!a.is_number_integer()) throw ParseError("\"args\" must be an array of integers");
          args.push_back(a.get<int>());
        }
      }
      return construct(j["construct"].get<std::string>(), args);
    }
    const ElementSet ground = label_set(field(j, "ground"), "ground");
    const Json& bases = field(j, "bases");
    if (!bases.is_array()) throw ParseError("\"bases\" must be an array of arrays");
    std::vector<ElementSet> family;
    for (const Json& b : bases) family.push_back(label_set(b, "basis"));
    return Matroid::from_bases(ground, family);
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Json to_json(ElementSet s) { return s.to_vector(); }

Json to_json(const Matroid& m) {
  std::vector<ElementSet> bases = m.bases();
  std::sort(bases.begin(), bases.end(), [](ElementSet x, ElementSet y) { return x.to_vector() < y.to_vector(); });
  Json j;
  j["ground"] = m.ground().to_vector();
  Json list = Json::array();
  for (ElementSet b : bases) list.push_back(to_json(b));
  j["bases"] = std::move(list);
  return j;
}

Context context_from_json(const Json& j) {
  Context ctx{matroid_from_json(field(j, "matroid")),
              matroid_from_json(field(j, "N")),
              element(field(j, "a"), "a"),
              element(field(j, "b"), "b"),
              label_set(field(j, "B"), "B"),
              std::nullopt,
              element(field(j, "x"), "x"),
              element(field(j, "y"), "y")};
  if (j.contains("A") && !j["A"].is_null()) ctx.matrix = pmatrix_from_json(j["A"]);
  return ctx;
}

Json to_json(const Context& ctx) {
  Json j;
  j["matroid"] = to_json(ctx.m);
  j["N"] = to_json(ctx.n);
  j["a"] = ctx.a;
  j["b"] = ctx.b;
  j["B"] = to_json(ctx.basis);
  if (ctx.matrix) j["A"] = to_json(*ctx.matrix);
  j["x"] = ctx.x;
  j["y"] = ctx.y;
  return j;
}

Json to_json(const VerifyReport& r, bool with_timing) {
  Json j;
  j["statement"] = r.statement;
  j["instance"] = r.instance;
  j["outcome"] = to_string(r.outcome);
  j["detail"] = r.detail;
  Json sets = Json::array();
  for (ElementSet s : r.witness_sets) sets.push_back(to_json(s));
  j["witness_sets"] = std::move(sets);
  j["witness_elements"] = r.witness_elements;
  j["relaxed"] = r.relaxed;
  if (with_timing) j["elapsed_us"] = r.elapsed.count();
  return j;
}

}  // namespace matroidkit
