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

#ifndef ENUM2AUG_ENUMERATOR_HPP_
#define ENUM2AUG_ENUMERATOR_HPP_

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

#include "enum2aug/codes.hpp"
#include "enum2aug/feature.hpp"
#include "enum2aug/graph.hpp"
#include "enum2aug/parent_child.hpp"
#include "enum2aug/symmetry.hpp"

namespace enum2aug {

struct Provenance {
  int seed = 0;
  Vertex x = 0;
  Vertex y = 0;
  int p = 0;
};

struct ChildRecord {
  ChemicalGraph graph;
  Provenance provenance;
};

// Calls emit(H, x, y, p) for every child of g reachable from the potential
// edge set, in construction order with p ascending.
template <typename Emit>
void for_each_child(const ChemicalGraph& seed, int d, Emit&& emit) {
  ChemicalGraph g = seed.max_mult() == d ? seed : with_max_mult(seed, d);
  if (!is_monocyclic(g)) throw NotMonocyclic("seed is not monocyclic");
  // Case (i) fast exit before any ranking work.
  {
    MonocyclicView view = find_unique_cycle(g);
    std::optional<int> best = unique_largest_pendent(view);
    if (!best || 3 * view.pendent_size(*best) < g.n()) return;
  }
  AnchoredGraph a = anchor_graph(g);
  PotentialEdgeSet s = potential_edge_set(a);
  for (const PotentialEdge& e : s.edges) {
    const int top = std::min({d, g.res(e.x), g.res(e.y)});
    for (int p = 1; p <= top; ++p) {
      if (!child_check(a, e.x, e.y, p)) continue;
      if (e.twin_x >= 0 && p == e.twin_mult &&
          p <= std::min(g.res(e.twin_x), g.res(e.y)) &&
          child_check(a, e.twin_x, e.y, p)) {
        continue;
      }
      emit(add_edges(g, e.x, e.y, p), e.x, e.y, p);
    }
  }
}

inline std::vector<ChildRecord> enumerate_children(const ChemicalGraph& g,
                                                   int d, int seed_index = 0) {
  std::vector<ChildRecord> out;
  for_each_child(g, d, [&](ChemicalGraph h, Vertex x, Vertex y, int p) {
    out.push_back({std::move(h), {seed_index, x, y, p}});
  });
  return out;
}

struct EnumerationTask {
  std::vector<ChemicalGraph> seeds;
  FeatureBounds bounds;
  ClosureMode mode = ClosureMode::kA;
  int L = 1;
  int d = 1;
  int jobs = 1;
};

struct SeedStats {
  long children = 0;  // children before the feasibility filter
  long emitted = 0;
};

struct RunSummary {
  long count = 0;
  std::vector<SeedStats> per_seed;
  double millis = 0;
};

namespace internal {

inline std::vector<ChildRecord> run_seed(const EnumerationTask& task, int i,
                                         SeedStats* stats) {
  std::vector<ChildRecord> out;
  for_each_child(task.seeds[i], task.d,
                 [&](ChemicalGraph h, Vertex x, Vertex y, int p) {
                   ++stats->children;
                   FeatureVector f = frequency_vector(h, task.bounds.max_len);
                   if (!h.valences_respected() ||
                       !is_feasible(f, task.bounds, false) ||
                       !check_path_closure(f, task.bounds, task.L, task.mode)) {
                     return;
                   }
                   ++stats->emitted;
                   out.push_back({std::move(h), {i, x, y, p}});
                 });
  return out;
}

}  // namespace internal

// Runs every seed and passes feasible children to `sink` in seed order. With
// jobs > 1, seeds are processed in parallel blocks and re-sequenced, so the
// stream is the same as a serial run.
inline RunSummary run_task(
    const EnumerationTask& task,
    const std::function<void(const ChildRecord&)>& sink) {
  auto start = std::chrono::steady_clock::now();
  const int count = static_cast<int>(task.seeds.size());
  const int jobs = std::max(1, task.jobs);
  RunSummary summary;
  summary.per_seed.assign(count, SeedStats{});
  const int block = jobs == 1 ? 1 : jobs * 8;
  for (int base = 0; base < count; base += block) {
    const int end = std::min(count, base + block);
    std::vector<std::vector<ChildRecord>> results(end - base);
    if (jobs == 1) {
      for (int i = base; i < end; ++i) {
        results[i - base] = internal::run_seed(task, i, &summary.per_seed[i]);
      }
    } else {
      std::atomic<int> next{base};
      std::vector<std::exception_ptr> errors(jobs);
      std::vector<std::thread> pool;
      for (int w = 0; w < jobs; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (int i = next++; i < end; i = next++) {
              results[i - base] =
                  internal::run_seed(task, i, &summary.per_seed[i]);
            }
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
      for (auto& t : pool) t.join();
      for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
      }
    }
    for (auto& r : results) {
      for (const ChildRecord& c : r) {
        ++summary.count;
        sink(c);
      }
    }
  }
  summary.millis = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return summary;
}

}  // namespace enum2aug

#endif  // ENUM2AUG_ENUMERATOR_HPP_
