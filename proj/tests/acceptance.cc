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

// Acceptance checks. Prints one PASS or FAIL line per criterion and exits
// non-zero if any criterion fails. Every tolerance is exact; the only limits
// are the wall-time budgets pinned below.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "test_util.hpp"

namespace enum2aug {
namespace {

using testing::all_pair_choices;
using testing::chem;
using testing::exhaustive_max_signature;
using testing::fixture_path;
using testing::is_child_pair;
using testing::random_rooted_tree;

// Budgets in seconds.
constexpr double kInstanceBudget = 60;
constexpr double kSuiteBudget = 30 * 60;
constexpr double kFixtureRunBudget = 10 * 60;

// Oracle corpus.
constexpr int kCorpusMinN = 4;
constexpr int kCorpusMaxN = 7;
constexpr int kTargetsPerSize = 4;
constexpr int kCorpusK = 2;

// Round trip and properness corpus.
constexpr int kRoundTripMaxN = 7;

constexpr int kDeletionSamples = 200;
constexpr int kMaximalityTrees = 500;
constexpr int kMaximalityMaxN = 8;
constexpr int kMaximalityMaxMult = 3;

// Trend sweep on the 13-vertex fixtures: L over [kTrendMinL, K] at slack
// kTrendSlackForL, s over [0, kTrendMaxSlack] at L = kTrendLForSlack.
constexpr int kTrendK = 5;
constexpr int kTrendMinL = 3;
constexpr int kTrendSlackForL = 1;
constexpr int kTrendLForSlack = 4;
constexpr int kTrendMaxSlack = 2;

const char* const kFixtures[] = {
    "c9n1o3_aminohydroxycoumarin.graph",
    "c9n2o2_methylquinazolinone.graph",
    "c9n3o1_benzimidazolecarboxamide.graph",
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(const std::string& name, const std::function<Outcome()>& body) {
  auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.1f", seconds_since(start));
  std::cout << (o.pass ? "PASS " : "FAIL ") << name << " (" << o.detail
            << ", " << secs << " s)" << std::endl;
  if (!o.pass) ++failures;
}

// Oracle instances ------------------------------------------------------------

struct Instance {
  ChemicalGraph target;
  int d;
  int L;
  int s;
  ClosureMode mode;
};

std::vector<Instance> oracle_corpus() {
  std::vector<Instance> out;
  for (int n = kCorpusMinN; n <= kCorpusMaxN; ++n) {
    for (int d = 1; d <= 2; ++d) {
      std::vector<ChemicalGraph> all =
          brute_force_enumerate(chem(), n, d, GraphClass::kMonoBlock2);
      const size_t step = std::max<size_t>(1, all.size() / kTargetsPerSize);
      int taken = 0;
      for (size_t i = step / 2; i < all.size() && taken < kTargetsPerSize;
           i += step, ++taken) {
        for (int s = 0; s <= 1; ++s) {
          out.push_back({all[i], d, 1, s, ClosureMode::kA});
          out.push_back({all[i], d, 2, s, ClosureMode::kA});
          out.push_back({all[i], d, 1, s, ClosureMode::kP});
        }
      }
    }
  }
  return out;
}

struct InstanceResult {
  std::vector<CanonicalCode> emitted;
  std::set<CanonicalCode> expected;
  double seconds = 0;
};

InstanceResult solve(const Instance& in) {
  auto start = Clock::now();
  InstanceSpec spec =
      make_instance_from_target(in.target, kCorpusK, in.L, in.s, in.mode, in.d);
  EnumerationTask task;
  task.seeds = feed_monocyclic(spec.bounds, FeedOptions{true, in.mode, in.L});
  task.bounds = spec.bounds;
  task.mode = in.mode;
  task.L = in.L;
  task.d = in.d;
  InstanceResult r;
  run_task(task, [&](const ChildRecord& c) {
    r.emitted.push_back(canonical_code(c.graph, 16));
  });
  r.seconds = seconds_since(start);

  BruteForceOptions bo;
  bo.composition = pinned_composition(spec.bounds);
  for (const ChemicalGraph& g :
       brute_force_enumerate(spec.bounds.alphabet, in.target.n(), in.d,
                             GraphClass::kMonoBlock2, bo)) {
    FeatureVector f = frequency_vector(g, spec.bounds.max_len);
    if (is_feasible(f, spec.bounds, false) &&
        check_path_closure(f, spec.bounds, in.L, in.mode)) {
      r.expected.insert(canonical_code(g, 16));
    }
  }
  return r;
}

// Round trip and properness ---------------------------------------------------

struct SeedAudit {
  long seeds = 0;
  long pairs = 0;
  long round_trip_mismatches = 0;
  long proper_failures = 0;
  long collisions = 0;
};

SeedAudit audit_seeds() {
  SeedAudit a;
  for (int n = 3; n <= kRoundTripMaxN; ++n) {
    for (int d = 1; d <= 2; ++d) {
      for (const ChemicalGraph& g :
           brute_force_enumerate(chem(), n, d, GraphClass::kMonocyclic)) {
        ++a.seeds;
        const CanonicalCode own = canonical_code(g, 16);
        std::set<CanonicalCode> all_children;
        for (const auto& c : all_pair_choices(g, d)) {
          ++a.pairs;
          ChemicalGraph h = add_edges(g, c.x, c.y, c.p);
          const bool child = is_child_pair(g, c.x, c.y, c.p);
          // Spiro closures are outside the class and have no parent.
          const bool back =
              is_mono_block(h) &&
              canonical_code(parent_of(h).parent, 16) == own;
          if (child != back) ++a.round_trip_mismatches;
          if (child) all_children.insert(canonical_code(h, 16));
        }
        std::set<CanonicalCode> from_s;
        for (const ChildRecord& r : enumerate_children(g, d)) {
          if (!from_s.insert(canonical_code(r.graph, 16)).second) {
            ++a.collisions;
          }
        }
        if (from_s != all_children) ++a.proper_failures;
      }
    }
  }
  return a;
}

// CLI and fixtures -------------------------------------------------------------

int run_cli(const std::string& args) {
  std::string cmd = std::string(ENUM2AUG_CLI_PATH) + " " + args;
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct FixtureRun {
  long count = 0;
  double seconds = 0;
};

FixtureRun fixture_count(const ChemicalGraph& target, int L, int s) {
  auto start = Clock::now();
  InstanceSpec spec =
      make_instance_from_target(target, kTrendK, L, s, ClosureMode::kA);
  EnumerationTask task;
  task.seeds =
      feed_monocyclic(spec.bounds, FeedOptions{true, ClosureMode::kA, L});
  task.bounds = spec.bounds;
  task.mode = ClosureMode::kA;
  task.L = L;
  task.d = spec.bounds.max_mult;
  FixtureRun r;
  r.count = run_task(task, [](const ChildRecord&) {}).count;
  r.seconds = seconds_since(start);
  return r;
}

std::string join(const std::vector<long>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

int run_all() {
  auto suite_start = Clock::now();

  std::vector<Instance> corpus = oracle_corpus();
  std::vector<InstanceResult> results;
  report("oracle completeness and soundness", [&] {
    Outcome o;
    long mismatched = 0;
    long emitted = 0;
    double slowest = 0;
    for (const Instance& in : corpus) {
      results.push_back(solve(in));
      const InstanceResult& r = results.back();
      std::set<CanonicalCode> got(r.emitted.begin(), r.emitted.end());
      if (got != r.expected) ++mismatched;
      emitted += static_cast<long>(r.emitted.size());
      slowest = std::max(slowest, r.seconds);
    }
    o.pass = mismatched == 0 && slowest < kInstanceBudget;
    o.detail = std::to_string(corpus.size()) + " instances, " +
               std::to_string(emitted) + " graphs, " +
               std::to_string(mismatched) + " mismatched, slowest " +
               std::to_string(slowest) + " s";
    return o;
  });

  report("duplicate-freeness", [&] {
    long dup = 0;
    for (const InstanceResult& r : results) {
      std::set<CanonicalCode> seen(r.emitted.begin(), r.emitted.end());
      dup += static_cast<long>(r.emitted.size() - seen.size());
    }
    return Outcome{dup == 0 && results.size() == corpus.size(),
                   std::to_string(dup) + " duplicates over " +
                       std::to_string(results.size()) + " runs"};
  });

  SeedAudit audit;
  report("parent-child round trip", [&] {
    audit = audit_seeds();
    return Outcome{audit.round_trip_mismatches == 0 && audit.pairs > 0,
                   std::to_string(audit.seeds) + " seeds up to n = " +
                       std::to_string(kRoundTripMaxN) + ", " +
                       std::to_string(audit.pairs) + " (pair, p), " +
                       std::to_string(audit.round_trip_mismatches) +
                       " mismatches"};
  });

  report("properness of the potential edge set", [&] {
    return Outcome{audit.seeds > 0 && audit.proper_failures == 0 &&
                       audit.collisions == 0,
                   std::to_string(audit.proper_failures) +
                       " seeds with missing children, " +
                       std::to_string(audit.collisions) + " collisions"};
  });

  report("junction-pair deletions stay feasible", [&] {
    std::mt19937 rng(2026);
    std::map<std::pair<int, int>, std::vector<ChemicalGraph>> pool;
    int samples = 0;
    int violations = 0;
    while (samples < kDeletionSamples) {
      const int n = std::uniform_int_distribution<int>(5, 7)(rng);
      const int d = std::uniform_int_distribution<int>(1, 2)(rng);
      auto& targets = pool[{n, d}];
      if (targets.empty()) {
        targets = brute_force_enumerate(chem(), n, d, GraphClass::kMonoBlock2);
      }
      const ChemicalGraph& target = targets[rng() % targets.size()];
      const int K = std::uniform_int_distribution<int>(1, 3)(rng);
      const int s = std::uniform_int_distribution<int>(0, 2)(rng);
      InstanceSpec spec =
          make_instance_from_target(target, K, 0, s, ClosureMode::kA, d);
      BruteForceOptions bo;
      bo.composition = pinned_composition(spec.bounds);
      std::vector<ChemicalGraph> feasible;
      for (ChemicalGraph& g :
           brute_force_enumerate(spec.bounds.alphabet, n, d,
                                 GraphClass::kMonoBlock2, bo)) {
        if (is_feasible(g, spec.bounds, false)) feasible.push_back(std::move(g));
      }
      if (feasible.empty()) continue;
      const ChemicalGraph& g = feasible[rng() % feasible.size()];
      for (auto [u, v] : mono_block_view(g).junction_pairs) {
        if (!is_feasible(remove_edge_bundle(g, u, v), spec.bounds, true)) {
          ++violations;
        }
      }
      ++samples;
    }
    return Outcome{violations == 0, std::to_string(samples) + " graphs, " +
                                        std::to_string(violations) +
                                        " infeasible deletions"};
  });

  report("canonical-form maximality", [&] {
    std::mt19937 rng(8);
    int wrong = 0;
    for (int i = 0; i < kMaximalityTrees; ++i) {
      int n = std::uniform_int_distribution<int>(1, kMaximalityMaxN)(rng);
      int d = std::uniform_int_distribution<int>(1, kMaximalityMaxMult)(rng);
      RootedTree t = random_rooted_tree(n, 3, d, rng);
      if (tree_signature(t) != exhaustive_max_signature(t)) ++wrong;
    }
    return Outcome{wrong == 0, std::to_string(kMaximalityTrees) + " trees, " +
                                   std::to_string(wrong) + " not maximal"};
  });

  report("trend on 13-vertex fixtures", [&] {
    Outcome o;
    std::string detail;
    double slowest = 0;
    for (const char* name : kFixtures) {
      ChemicalGraph target =
          parse_graph_file(fixture_path(name), chem(), 3).at(0);
      std::vector<long> by_l;
      for (int L = kTrendMinL; L <= kTrendK; ++L) {
        FixtureRun r = fixture_count(target, L, kTrendSlackForL);
        by_l.push_back(r.count);
        slowest = std::max(slowest, r.seconds);
      }
      std::vector<long> by_s;
      for (int s = 0; s <= kTrendMaxSlack; ++s) {
        FixtureRun r = fixture_count(target, kTrendLForSlack, s);
        by_s.push_back(r.count);
        slowest = std::max(slowest, r.seconds);
      }
      o.pass = o.pass && std::is_sorted(by_l.rbegin(), by_l.rend()) &&
               std::is_sorted(by_s.begin(), by_s.end()) && by_s.front() >= 1;
      if (!detail.empty()) detail += "; ";
      detail += std::string(name).substr(0, 6) + " L: " + join(by_l) +
                " s: " + join(by_s);
    }
    o.pass = o.pass && slowest < kFixtureRunBudget;
    o.detail = detail + "; slowest run " + std::to_string(slowest) + " s";
    return o;
  });

  report("determinism", [&] {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "enum2aug_acceptance";
    fs::create_directories(dir);
    const std::string args =
        "enumerate --target " + fixture_path(kFixtures[0]) +
        " --K 5 --L 4 --s 1 --mode a --feed-oracle --out ";
    std::vector<std::string> outs;
    for (const char* extra : {"", "", " --jobs 2"}) {
      std::string out = (dir / ("run" + std::to_string(outs.size()))).string();
      if (run_cli(args + out + extra) != 0) {
        return Outcome{false, "CLI run failed"};
      }
      outs.push_back(slurp(out));
    }
    fs::remove_all(dir);
    const bool same = outs[0] == outs[1] && outs[1] == outs[2];
    return Outcome{same && !outs[0].empty(),
                   "3 runs, " + std::to_string(outs[0].size()) + " bytes each, " +
                       (same ? "identical" : "different")};
  });

  const double total = seconds_since(suite_start);
  const bool in_budget = total < kSuiteBudget;
  std::cout << (in_budget ? "PASS " : "FAIL ") << "suite wall time ("
            << static_cast<long>(total) << " s)" << std::endl;
  if (!in_budget) ++failures;
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace enum2aug

int main() { return enum2aug::run_all(); }
