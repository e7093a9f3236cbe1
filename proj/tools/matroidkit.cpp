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
// Command-line front end: loads matroids, matrices and contexts from JSON,
// runs kernel queries and verification suites.
//
// Exit status: 0 for success or an affirmative answer, 1 for a negative
// answer (or any FAIL in a verification run), 2 for usage and input errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "matroidkit/budget.hpp"
#include "matroidkit/catalog.hpp"
#include "matroidkit/connectivity.hpp"
#include "matroidkit/fragility.hpp"
#include "matroidkit/io.hpp"
#include "matroidkit/minors.hpp"
#include "matroidkit/pmatrix.hpp"
#include "matroidkit/structure.hpp"
#include "matroidkit/verify.hpp"

namespace mk = matroidkit;
using mk::Json;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct Globals {
  std::string format = "human";
  std::string output;
  std::uint64_t seed = 1;
  int threads = 0;
  std::uint64_t budget = 0;

  bool json() const { return format == "json"; }
  std::uint64_t effective_budget() const { return budget > 0 ? budget : mk::default_budget(); }
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw mk::ParseError("cannot write " + path);
    }
  }
  std::ostream& operator()() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::string join(const std::vector<mk::ElementSet>& sets) {
  std::string s;
  for (std::size_t i = 0; i < sets.size(); ++i) s += (i ? " " : "") + sets[i].to_string();
  return s.empty() ? "(none)" : s;
}

Json set_list(const std::vector<mk::ElementSet>& sets) {
  Json j = Json::array();
  for (mk::ElementSet s : sets) j.push_back(mk::to_json(s));
  return j;
}

mk::ElementSet parse_set(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw mk::ParseError("bad element list '" + text + "'");
    }
  }
  return mk::ElementSet(out);
}

mk::Matroid load_matroid(const std::string& path) { return mk::matroid_from_json(mk::load_json(path)); }
mk::PMatrix load_pmatrix(const std::string& path) { return mk::pmatrix_from_json(mk::load_json(path)); }

// ---------------------------------------------------------------------------

int cmd_info(const Globals& g, const std::string& path) {
  const mk::Matroid m = load_matroid(path);
  const auto fans = mk::fans(m, g.effective_budget());
  Output out(g.output);
  if (g.json()) {
    Json j;
    j["rank"] = m.rank();
    j["size"] = m.size();
    j["ground"] = mk::to_json(m.ground());
    j["bases"] = m.basis_count();
    j["connected"] = mk::is_connected(m);
    j["three_connected"] = mk::is_3connected(m);
    j["triangles"] = set_list(m.triangles());
    j["triads"] = set_list(m.triads());
    Json fj = Json::array();
    for (const auto& f : fans) fj.push_back(f.elements);
    j["fans"] = std::move(fj);
    j["segments"] = set_list(mk::segments(m));
    j["cosegments"] = set_list(mk::cosegments(m));
    out() << j.dump() << "\n";
    return kOk;
  }
  out() << "ground       " << m.ground().to_string() << "\n"
        << "size         " << m.size() << "\n"
        << "rank         " << m.rank() << "\n"
        << "bases        " << m.basis_count() << "\n"
        << "connected    " << (mk::is_connected(m) ? "yes" : "no") << "\n"
        << "3-connected  " << (mk::is_3connected(m) ? "yes" : "no") << "\n"
        << "triangles    " << join(m.triangles()) << "\n"
        << "triads       " << join(m.triads()) << "\n"
        << "segments     " << join(mk::segments(m)) << "\n"
        << "cosegments   " << join(mk::cosegments(m)) << "\n"
        << "fans        ";
  if (fans.empty()) out() << " (none)";
  for (const auto& f : fans) {
    out() << " (";
    for (std::size_t i = 0; i < f.elements.size(); ++i) out() << (i ? "," : "") << f.elements[i];
    out() << ")";
  }
  out() << "\n";
  return kOk;
}

int cmd_pivot(const Globals& g, const std::string& path, int row, int col) {
  const mk::PMatrix a = load_pmatrix(path);
  const mk::PMatrix p = mk::pivot(a, row, col);
  Output out(g.output);
  if (g.json()) {
    out() << mk::to_json(p).dump() << "\n";
  } else {
    out() << p.to_string() << "\n";
  }
  return kOk;
}

int cmd_check_pmatrix(const Globals& g, const std::string& path) {
  const mk::PMatrix a = load_pmatrix(path);
  const auto bad = mk::find_non_p_subdeterminant(a);
  Output out(g.output);
  if (g.json()) {
    Json j;
    j["p_matrix"] = !bad.has_value();
    if (bad) j["witness"] = mk::to_json(*bad);
    out() << j.dump() << "\n";
  } else if (!bad) {
    out() << "P-matrix over " << a.field().name() << "\n";
  } else {
    out() << "not a P-matrix: the subdeterminant on " << bad->to_string() << " is outside "
          << a.field().name() << "\n";
  }
  return bad ? kNegative : kOk;
}

int cmd_matroid_from(const Globals& g, const std::string& path) {
  const mk::PMatrix a = load_pmatrix(path);
  Output out(g.output);
  try {
    const mk::Matroid m = mk::matroid_from(a);
    if (g.json()) {
      out() << mk::to_json(m).dump() << "\n";
    } else {
      out() << m.summary() << "\n";
      for (mk::ElementSet b : m.bases()) out() << "  " << b.to_string() << "\n";
    }
    return kOk;
  } catch (const mk::NotPMatrix& e) {
    if (g.json()) {
      Json j;
      j["error"] = "not a P-matrix";
      j["witness"] = mk::to_json(e.witness);
      out() << j.dump() << "\n";
    } else {
      out() << e.what() << "\n";
    }
    return kNegative;
  }
}

int cmd_incriminate(const Globals& g, const std::string& matroid_path, const std::string& matrix_path) {
  const mk::Matroid m = load_matroid(matroid_path);
  const mk::PMatrix a = load_pmatrix(matrix_path);
  const mk::IncriminationStatus status = mk::incrimination_status(m, a);
  Output out(g.output);
  if (std::holds_alternative<mk::Represents>(status)) {
    out() << (g.json() ? R"({"status":"REPRESENTS"})" : "REPRESENTS") << "\n";
    return kOk;
  }
  const auto& w = std::get<mk::IncriminationWitness>(status);
  if (g.json()) {
    Json j;
    j["status"] = "INCRIMINATED";
    j["z"] = mk::to_json(w.z);
    j["condition"] = mk::to_string(w.condition);
    out() << j.dump() << "\n";
  } else {
    out() << "INCRIMINATED by Z=" << w.z.to_string() << " (" << mk::to_string(w.condition)
          << ")\n";
  }
  return kNegative;
}

int cmd_minor(const Globals& g, const std::string& path, const std::string& target_path) {
  const mk::Matroid m = load_matroid(path);
  const mk::Matroid n = load_matroid(target_path);
  const auto w = mk::has_minor(m, n);
  Output out(g.output);
  if (g.json()) {
    Json j;
    j["has_minor"] = w.has_value();
    if (w) {
      j["contract"] = mk::to_json(w->contract);
      j["delete"] = mk::to_json(w->remove);
    }
    out() << j.dump() << "\n";
  } else if (w) {
    out() << "minor found: contract " << w->contract.to_string() << ", delete " << w->remove.to_string() << "\n";
  } else {
    out() << "no minor\n";
  }
  return w ? kOk : kNegative;
}

int cmd_fragility(const Globals& g, const std::string& path, const std::vector<std::string>& against) {
  const mk::Matroid m = load_matroid(path);
  std::vector<mk::Matroid> family;
  for (const std::string& p : against) family.push_back(load_matroid(p));
  Output out(g.output);
  if (!mk::MinorOracle(family).has(m)) {
    out() << (g.json() ? R"({"has_minor":false,"fragile":false})" : "no minor in the family; not fragile") << "\n";
    return kNegative;
  }
  const mk::ElementClassification c = mk::classify_elements(m, family);
  const bool fragile = c.flexible.empty();
  if (g.json()) {
    Json j;
    j["has_minor"] = true;
    j["fragile"] = fragile;
    j["deletable"] = mk::to_json(c.deletable);
    j["contractible"] = mk::to_json(c.contractible);
    j["flexible"] = mk::to_json(c.flexible);
    j["essential"] = mk::to_json(c.essential);
    out() << j.dump() << "\n";
  } else {
    out() << (fragile ? "fragile" : "not fragile") << "\n"
          << "  deletable    " << c.deletable.to_string() << "\n"
          << "  contractible " << c.contractible.to_string() << "\n"
          << "  flexible     " << c.flexible.to_string() << "\n"
          << "  essential    " << c.essential.to_string() << "\n";
  }
  return fragile ? kOk : kNegative;
}

int cmd_gadget(const Globals& g, const std::string& path, bool relaxed) {
  const mk::Context ctx = mk::context_from_json(mk::load_json(path));
  Output out(g.output);
  mk::GadgetResult r;
  const auto problems = mk::context_problems(ctx, !relaxed);
  if (!problems.empty()) {
    r.status = mk::GadgetResult::Status::kHypothesesUnmet;
    r.diagnostics = problems;
    r.relaxed = relaxed;
  } else {
    r = mk::gadget_classify(ctx, {relaxed});
  }
  if (g.json()) {
    Json j;
    j["status"] = mk::to_string(r.status);
    j["relaxed"] = r.relaxed;
    if (r.gadget) {
      const mk::Gadget& gd = *r.gadget;
      j["type"] = mk::to_string(gd.type);
      j["x"] = gd.x;
      j["y"] = gd.y;
      j["u"] = gd.u;
      if (gd.z) j["z"] = *gd.z;
      if (gd.w) j["w"] = *gd.w;
      j["blocker"] = gd.blocker;
      j["fully_blocks"] = gd.fully_blocks;
    }
    j["candidates"] = r.candidates;
    j["diagnostics"] = r.diagnostics;
    out() << j.dump() << "\n";
  } else {
    out() << mk::to_string(r.status) << (r.relaxed ? " (relaxed)" : "");
    if (r.gadget) {
      const mk::Gadget& gd = *r.gadget;
      out() << ": Type " << mk::to_string(gd.type) << " x=" << gd.x << " y=" << gd.y << " u=" << gd.u;
      if (gd.z) out() << " z=" << *gd.z;
      if (gd.w) out() << " w=" << *gd.w;
      out() << "; " << gd.blocker << (gd.fully_blocks ? " fully blocks" : " blocks");
    }
    out() << "\n";
    for (const std::string& d : r.diagnostics) out() << "  " << d << "\n";
  }
  return r.status == mk::GadgetResult::Status::kHypothesesUnmet ? kNegative : kOk;
}

int cmd_deltay(const Globals& g, const std::string& path, const std::string& triangle, bool wye, int orbit_steps) {
  const mk::Matroid m = load_matroid(path);
  Output out(g.output);
  if (orbit_steps >= 0) {
    const mk::DeltaOrbit orbit = mk::delta_star_orbit(m, orbit_steps);
    if (g.json()) {
      Json j;
      j["members"] = orbit.members.size();
      j["levels"] = orbit.levels;
      j["closed"] = orbit.fixpoint;
      Json list = Json::array();
      for (const mk::Matroid& x : orbit.members) list.push_back(mk::to_json(x));
      j["matroids"] = std::move(list);
      out() << j.dump() << "\n";
    } else {
      out() << orbit.members.size() << " isomorphism class(es) after " << orbit.levels << " level(s); "
            << (orbit.fixpoint ? "closed" : "not closed") << "\n";
      for (const mk::Matroid& x : orbit.members) out() << "  " << x.summary() << "\n";
    }
    return kOk;
  }
  const mk::ElementSet t = parse_set(triangle);
  const mk::Matroid r = wye ? mk::wye_delta(m, t) : mk::delta_y(m, t);
  if (g.json()) {
    out() << mk::to_json(r).dump() << "\n";
  } else {
    out() << r.summary() << "\n";
    out() << "3-connected  " << (mk::is_3connected(r) ? "yes" : "no") << "\n";
    out() << "triangles    " << join(r.triangles()) << "\n";
    out() << "triads       " << join(r.triads()) << "\n";
  }
  return kOk;
}

int cmd_verify(const Globals& g, mk::SuiteConfig config) {
  config.seed = g.seed;
  config.threads = g.threads;
  config.budget = g.effective_budget();
  const mk::SuiteReport report = mk::run_suite(config);
  Output out(g.output);
  if (g.json()) {
    Json header;
    header["suites"] = config.suites;
    header["seed"] = config.seed;
    header["max_n"] = config.max_n;
    header["random"] = config.random_instances;
    header["budget"] = config.budget;
    header["relaxed_runs"] = config.relax_size_bounds;
    out() << Json{{"header", header}}.dump() << "\n";
    for (const mk::VerifyReport& r : report.reports) out() << mk::to_json(r).dump() << "\n";
  } else {
    out() << "suites";
    for (const std::string& s : config.suites) out() << " " << s;
    out() << "; seed " << config.seed << "; max-n " << config.max_n << "; budget " << config.budget << "\n";
    for (const mk::VerifyReport& r : report.reports) {
      if (r.outcome == mk::Outcome::kPass || r.outcome == mk::Outcome::kHypothesesUnmet) continue;
      out() << mk::to_string(r.outcome) << (r.relaxed ? " [relaxed] " : " ") << r.statement << " | " << r.instance
            << " | " << r.detail << "\n";
    }
    const int relaxed_fails = report.count(mk::Outcome::kFail) - report.failures();
    out() << report.reports.size() << " reports: " << report.count(mk::Outcome::kPass) << " PASS, "
          << report.failures() << " FAIL";
    if (relaxed_fails > 0) out() << " (+" << relaxed_fails << " relaxed, non-normative)";
    out() << ", " << report.count(mk::Outcome::kHypothesesUnmet)
          << " HYPOTHESES_UNMET, " << report.count(mk::Outcome::kUndecided) << " UNDECIDED\n";
  }
  return report.failures() > 0 ? kNegative : kOk;
}

int cmd_connectivity_check(const Globals& g, const std::string& path) {
  const mk::Matroid m = load_matroid(path);
  const std::vector<std::pair<std::string, bool>> facts = {
      {"connected", mk::is_connected(m)},
      {"3-connected", mk::is_3connected(m)},
      {"3-connected up to series pairs", mk::is_3connected_up_to_series_pairs(m)},
      {"3-connected up to parallel pairs", mk::is_3connected_up_to_parallel_pairs(m)},
      {"3-connected up to series classes", mk::is_3connected_up_to_series_classes(m)},
      {"3-connected up to parallel classes", mk::is_3connected_up_to_parallel_classes(m)},
      {"3-connected up to series and parallel classes", mk::is_3connected_up_to_series_and_parallel_classes(m)}};
  Output out(g.output);
  if (g.json()) {
    Json j;
    for (const auto& [k, v] : facts) j[k] = v;
    out() << j.dump() << "\n";
  } else {
    for (const auto& [k, v] : facts) out() << (v ? "yes  " : "no   ") << k << "\n";
  }
  return facts[1].second ? kOk : kNegative;
}

int cmd_connectivity_lambda(const Globals& g, const std::string& path, const std::string& set) {
  const mk::Matroid m = load_matroid(path);
  const mk::ElementSet x = parse_set(set);
  if (!m.ground().contains(x)) throw mk::ParseError("the set is not inside E(M)");
  const int l = mk::lambda(m, x);
  Output out(g.output);
  if (g.json()) {
    out() << Json{{"set", mk::to_json(x)}, {"lambda", l}}.dump() << "\n";
  } else {
    out() << "lambda(" << x.to_string() << ") = " << l << "\n";
  }
  return kOk;
}

int cmd_connectivity_separations(const Globals& g, const std::string& path, int k, bool exact) {
  const mk::Matroid m = load_matroid(path);
  const auto seps = mk::separations(m, k, exact);
  Output out(g.output);
  if (g.json()) {
    Json list = Json::array();
    for (const auto& s : seps) {
      Json j{{"side", mk::to_json(s.side)}, {"other", mk::to_json(s.other)}, {"exact", s.exact}};
      if (k == 3) {
        j["vertical"] = s.vertical;
        j["cyclic"] = s.cyclic;
      }
      list.push_back(std::move(j));
    }
    out() << Json{{"k", k}, {"separations", list}}.dump() << "\n";
  } else {
    out() << seps.size() << " " << k << "-separation(s)\n";
    for (const auto& s : seps) {
      out() << "  " << s.side.to_string() << " | " << s.other.to_string() << (s.exact ? " exact" : "");
      if (k == 3 && s.vertical) out() << " vertical";
      if (k == 3 && s.cyclic) out() << " cyclic";
      out() << "\n";
    }
  }
  return seps.empty() ? kNegative : kOk;
}

int cmd_connectivity_vertical(const Globals& g, const std::string& path, bool cyclic) {
  const mk::Matroid m = load_matroid(path);
  const auto seps = cyclic ? mk::cyclic_3seps(m) : mk::vertical_3seps(m);
  Output out(g.output);
  if (g.json()) {
    Json list = Json::array();
    for (const auto& v : seps) list.push_back({{"x", mk::to_json(v.x)}, {"z", v.z}, {"y", mk::to_json(v.y)}});
    out() << list.dump() << "\n";
  } else {
    out() << seps.size() << (cyclic ? " cyclic" : " vertical") << " 3-separation(s) (X,z,Y)\n";
    for (const auto& v : seps) out() << "  " << v.x.to_string() << " " << v.z << " " << v.y.to_string() << "\n";
  }
  return seps.empty() ? kNegative : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matroidkit: exact computations on small matroids and partial-field matrices"};
  app.require_subcommand(1);
  Globals g;
  g.threads = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"human", "json"}));
  app.add_option("-o,--output", g.output, "Write output to a file instead of stdout");
  app.add_option("--seed", g.seed, "Seed for random instances")->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads (default: available parallelism)")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget", g.budget, "Search step budget (overrides MATROID_KIT_BUDGET)")
      ->check(CLI::PositiveNumber);

  std::function<int()> action;

  std::string matroid_path, matrix_path, target_path, triangle, set_text;
  std::vector<std::string> against;
  int row = 0, col = 0, k = 2, orbit = -1;
  bool relaxed = false, wye = false, exact = false, cyclic = false;

  auto* info = app.add_subcommand("info", "Summarise a matroid");
  info->add_option("matroid", matroid_path, "Matroid JSON file")->required();
  info->callback([&] { action = [&] { return cmd_info(g, matroid_path); }; });

  auto* piv = app.add_subcommand("pivot", "Pivot a P-matrix on a nonzero entry");
  piv->add_option("matrix", matrix_path, "P-matrix JSON file")->required();
  piv->add_option("--row", row, "Row label")->required();
  piv->add_option("--col", col, "Column label")->required();
  piv->callback([&] { action = [&] { return cmd_pivot(g, matrix_path, row, col); }; });

  auto* chk = app.add_subcommand("check-pmatrix", "Test whether every subdeterminant lies in the partial field");
  chk->add_option("matrix", matrix_path, "P-matrix JSON file")->required();
  chk->callback([&] { action = [&] { return cmd_check_pmatrix(g, matrix_path); }; });

  auto* from = app.add_subcommand("matroid-from", "The matroid represented by a P-matrix");
  from->add_option("matrix", matrix_path, "P-matrix JSON file")->required();
  from->callback([&] { action = [&] { return cmd_matroid_from(g, matrix_path); }; });

  auto* inc = app.add_subcommand("incriminate", "Find a set incriminating (M, A), or report REPRESENTS");
  inc->add_option("matroid", matroid_path, "Matroid JSON file")->required();
  inc->add_option("matrix", matrix_path, "P-matrix JSON file")->required();
  inc->callback([&] { action = [&] { return cmd_incriminate(g, matroid_path, matrix_path); }; });

  auto* minor = app.add_subcommand("minor", "Test for a minor isomorphic to N");
  minor->add_option("matroid", matroid_path, "Matroid JSON file")->required();
  minor->add_option("--of", target_path, "Matroid JSON file for N")->required();
  minor->callback([&] { action = [&] { return cmd_minor(g, matroid_path, target_path); }; });

  auto* frag = app.add_subcommand("fragility", "Classify elements against a family of minors");
  frag->add_option("matroid", matroid_path, "Matroid JSON file")->required();
  frag->add_option("--against", against, "Matroid JSON file for a family member (repeatable)")->required();
  frag->callback([&] { action = [&] { return cmd_fragility(g, matroid_path, against); }; });

  auto* gad = app.add_subcommand("gadget", "Classify the gadget of a delete-pair context");
  gad->add_option("context", matroid_path, "Context JSON file")->required();
  gad->add_flag("--relaxed", relaxed, "Skip the companion-matrix hypotheses (non-normative)");
  gad->callback([&] { action = [&] { return cmd_gadget(g, matroid_path, relaxed); }; });

  auto* dy = app.add_subcommand("deltay", "Delta-Y or Y-Delta exchange, or the Delta-Y class");
  dy->add_option("matroid", matroid_path, "Matroid JSON file")->required();
  auto* tri = dy->add_option("--triangle", triangle, "Comma-separated triangle (or triad with --wye)");
  dy->add_flag("--wye", wye, "Perform Y-Delta on a triad instead");
  auto* orb = dy->add_option("--orbit", orbit, "Enumerate the Delta-Y class to this many levels");
  tri->excludes(orb);
  dy->callback([&] {
    if (orbit < 0 && triangle.empty()) throw CLI::ValidationError("deltay", "give --triangle or --orbit");
    action = [&] { return cmd_deltay(g, matroid_path, triangle, wye, orbit); };
  });

  mk::SuiteConfig suite;
  auto* ver = app.add_subcommand("verify", "Run verification suites; JSON lines with --format json");
  ver->add_option("--suite", suite.suites, "core, lemmas or representation (repeatable)")
      ->required()
      ->check(CLI::IsMember({"core", "lemmas", "representation"}));
  ver->add_option("--max-n", suite.max_n, "Largest catalog instance")->check(CLI::Range(4, 12))->capture_default_str();
  ver->add_option("--random", suite.random_instances, "Random instances per suite")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  ver->add_flag("--relaxed-bounds", suite.relax_size_bounds, "Add size-bound-relaxed diagnostic runs");
  ver->callback([&] { action = [&] { return cmd_verify(g, suite); }; });

  auto* conn = app.add_subcommand("connectivity", "Connectivity queries");
  conn->require_subcommand(1);
  auto* cc = conn->add_subcommand("check", "Connectivity predicates; exit 0 iff 3-connected");
  cc->add_option("matroid", matroid_path, "Matroid JSON file")->required();
  cc->callback([&] { action = [&] { return cmd_connectivity_check(g, matroid_path); }; });
  auto* cl = conn->add_subcommand("lambda", "Connectivity function of a set");
  cl->add_option("matroid", matroid_path, "Matroid JSON file")->required();
  cl->add_option("--set", set_text, "Comma-separated element labels")->required();
  cl->callback([&] { action = [&] { return cmd_connectivity_lambda(g, matroid_path, set_text); }; });
  auto* cs = conn->add_subcommand("separations", "All k-separations; exit 1 when there are none");
  cs->add_option("matroid", matroid_path, "Matroid JSON file")->required();
  cs->add_option("-k", k, "Order")->check(CLI::Range(1, 8))->capture_default_str();
  cs->add_flag("--exact", exact, "Exact separations only");
  cs->callback([&] { action = [&] { return cmd_connectivity_separations(g, matroid_path, k, exact); }; });
  auto* cv = conn->add_subcommand("vertical", "Vertical (or cyclic) 3-separations (X,z,Y)");
  cv->add_option("matroid", matroid_path, "Matroid JSON file")->required();
  cv->add_flag("--cyclic", cyclic, "Cyclic instead of vertical");
  cv->callback([&] { action = [&] { return cmd_connectivity_vertical(g, matroid_path, cyclic); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  try {
    return action();
  } catch (const mk::BudgetExceeded& e) {
    std::cerr << "UNDECIDED: " << e.what() << "\n";
    return kNegative;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
