// Copyright 2026 The enum2aug Authors
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

// Command-line front end: enumerate, oracle, check-child, stats.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "enum2aug/enum2aug.hpp"

namespace {

using namespace enum2aug;

constexpr int kExitUsage = 1;
constexpr int kExitInvalid = 2;
constexpr int kDefaultMaxMult = 3;

// Usage errors found after CLI11 parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ClosureMode parse_mode(const std::string& s) {
  if (s == "a" || s == "A") return ClosureMode::kA;
  if (s == "p" || s == "P") return ClosureMode::kP;
  throw UsageError("--mode must be a or p");
}

struct EnumerateArgs {
  std::string monocyclic;
  std::string bounds;
  std::string target;
  std::string mode;
  std::string out;
  std::string id;
  std::optional<int> K;
  std::optional<int> L;
  std::optional<int> s;
  std::optional<int> d;
  bool feed_oracle = false;
  bool count_only = false;
  bool timing = false;
  int jobs = 1;
};

int run_enumerate(const EnumerateArgs& a) {
  if (a.bounds.empty() == a.target.empty()) {
    throw UsageError("give exactly one of --bounds and --target");
  }
  if (a.mode.empty() || !a.L) throw UsageError("--mode and --L are required");
  if (a.jobs < 1) throw UsageError("--jobs must be positive");
  InstanceSpec spec;
  std::string id = a.id;
  if (!a.bounds.empty()) {
    if (a.K || a.s) throw UsageError("--K and --s only apply with --target");
    spec = parse_bounds_file(a.bounds);
    spec.L = *a.L;
    spec.mode = parse_mode(a.mode);
    if (a.d) spec.bounds.max_mult = *a.d;
    if (id.empty()) id = std::filesystem::path(a.bounds).stem().string();
  } else {
    if (!a.K || !a.s) throw UsageError("--target needs --K and --s");
    std::vector<ChemicalGraph> targets =
        parse_graph_file(a.target, Alphabet::Chemical(), kDefaultMaxMult);
    if (targets.size() != 1) throw Error("target file must hold one graph");
    spec = make_instance_from_target(targets[0], *a.K, *a.L, *a.s,
                                     parse_mode(a.mode), a.d.value_or(0));
    if (id.empty()) id = std::filesystem::path(a.target).stem().string();
  }
  spec.validate();

  std::vector<ChemicalGraph> seeds;
  if (a.feed_oracle == !a.monocyclic.empty()) {
    throw UsageError("give exactly one of --monocyclic and --feed-oracle");
  }
  if (a.feed_oracle) {
    FeedOptions fo;
    fo.use_closure = true;
    fo.mode = spec.mode;
    fo.L = spec.L;
    seeds = feed_monocyclic(spec.bounds, fo);
  } else {
    seeds = parse_graph_file(a.monocyclic, spec.bounds.alphabet,
                             spec.bounds.max_mult);
  }

  EnumerationTask task;
  task.seeds = std::move(seeds);
  task.bounds = spec.bounds;
  task.mode = spec.mode;
  task.L = spec.L;
  task.d = spec.bounds.max_mult;
  task.jobs = a.jobs;

  std::ofstream file;
  if (!a.out.empty()) {
    file.open(a.out, std::ios::binary);
    if (!file) throw Error("cannot write " + a.out);
  }
  std::ostream& out = a.out.empty() ? std::cout : file;
  const bool records = !a.count_only;
  if (records) {
    write_results_header(out, {id, spec.bounds.max_len, spec.L, spec.slack,
                               spec.mode});
  }
  RunSummary summary = run_task(task, [&](const ChildRecord& r) {
    if (records) write_record(out, r);
  });
  if (records) {
    write_results_footer(out, static_cast<int>(task.seeds.size()),
                         summary.count);
    if (a.timing) out << "# millis " << summary.millis << '\n';
  } else {
    std::cout << summary.count << '\n';
  }
  return 0;
}

int run_oracle(int n, int d, const std::string& cls_name,
               const std::string& bounds_path) {
  GraphClass cls;
  if (cls_name == "monocyclic") {
    cls = GraphClass::kMonocyclic;
  } else if (cls_name == "monoblock2") {
    cls = GraphClass::kMonoBlock2;
  } else {
    throw UsageError("--class must be monocyclic or monoblock2");
  }
  std::shared_ptr<const Alphabet> alphabet = Alphabet::Chemical();
  std::optional<InstanceSpec> spec;
  if (!bounds_path.empty()) {
    spec = parse_bounds_file(bounds_path);
    alphabet = spec->bounds.alphabet;
  }
  long count = 0;
  for (const ChemicalGraph& g : brute_force_enumerate(alphabet, n, d, cls)) {
    if (spec) {
      // The monocyclic level is filtered with the relaxed lower bound.
      if (!is_feasible(g, spec->bounds, cls == GraphClass::kMonocyclic)) {
        continue;
      }
    }
    write_graph(std::cout, g);
    ++count;
  }
  std::cout << "# count " << count << '\n';
  return 0;
}

int run_check_child(const std::string& path, int x, int y, int p, int d) {
  std::vector<ChemicalGraph> graphs =
      parse_graph_file(path, Alphabet::Chemical(), d);
  if (graphs.size() != 1) throw Error("graph file must hold one graph");
  ChildVerdict v = child_check(graphs[0], x, y, p);
  std::cout << describe(v);
  return 0;
}

int run_stats(const std::vector<std::string>& results,
              const std::string& csv) {
  std::vector<StatsRow> rows;
  for (const auto& path : results) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    rows.push_back(read_results_summary(in));
  }
  std::ofstream out(csv, std::ios::binary);
  if (!out) throw Error("cannot write " + csv);
  write_stats_csv(out, rows);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate colored mono-block 2-augmented trees"};
  app.require_subcommand(1);

  EnumerateArgs ea;
  CLI::App* en = app.add_subcommand("enumerate", "Generate children of seeds");
  en->add_option("--monocyclic", ea.monocyclic, "Seed graph file");
  en->add_option("--bounds", ea.bounds, "Bounds file");
  en->add_option("--target", ea.target, "Target graph file");
  en->add_option("--mode", ea.mode, "Path-closure mode: a or p");
  en->add_option("--K", ea.K, "Max sequence length (with --target)");
  en->add_option("--L", ea.L, "Closure length parameter");
  en->add_option("--s", ea.s, "Slack (with --target)");
  en->add_option("--d", ea.d, "Override the multiplicity cap");
  en->add_option("--out", ea.out, "Output file (default stdout)");
  en->add_option("--id", ea.id, "Instance id for the results header");
  en->add_option("--jobs", ea.jobs, "Worker threads");
  en->add_flag("--feed-oracle", ea.feed_oracle, "Generate seeds internally");
  en->add_flag("--count-only", ea.count_only, "Print only the count");
  en->add_flag("--timing", ea.timing, "Append wall time to the results");

  int on = 0;
  int od = 1;
  std::string ocls;
  std::string obounds;
  CLI::App* orc = app.add_subcommand("oracle", "Brute-force class listing");
  orc->add_option("--n", on, "Vertices")->required();
  orc->add_option("--d", od, "Multiplicity cap")->required();
  orc->add_option("--class", ocls, "monocyclic or monoblock2")->required();
  orc->add_option("--bounds", obounds, "Optional bounds filter");

  std::string cgraph;
  int cx = 0;
  int cy = 0;
  int cp = 0;
  int cd = kDefaultMaxMult;
  CLI::App* cc = app.add_subcommand("check-child", "Explain the child test");
  cc->add_option("--graph", cgraph, "Monocyclic graph file")->required();
  cc->add_option("--x", cx, "Cycle-side vertex")->required();
  cc->add_option("--y", cy, "Tree-side vertex")->required();
  cc->add_option("--p", cp, "Multiplicity to add")->required();
  cc->add_option("--d", cd, "Multiplicity cap");

  std::vector<std::string> sresults;
  std::string scsv;
  CLI::App* st = app.add_subcommand("stats", "Summarise results as CSV");
  st->add_option("--results", sresults, "Results files")->required();
  st->add_option("--csv", scsv, "CSV output")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (*en) return run_enumerate(ea);
    if (*orc) return run_oracle(on, od, ocls, obounds);
    if (*cc) return run_check_child(cgraph, cx, cy, cp, cd);
    if (*st) return run_stats(sresults, scsv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const enum2aug::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitUsage;
}
