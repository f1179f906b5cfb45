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

#ifndef ENUM2AUG_FEATURE_HPP_
#define ENUM2AUG_FEATURE_HPP_

#include <algorithm>
#include <compare>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "enum2aug/graph.hpp"

namespace enum2aug {

// Alternating color / multiplicity sequence c0 m1 c1 ... mK cK.
struct ColoredSequence {
  std::vector<int> items;

  ColoredSequence() = default;
  explicit ColoredSequence(std::vector<int> v) : items(std::move(v)) {}

  int length() const { return static_cast<int>(items.size()) / 2; }
  int color(int i) const { return items[2 * i]; }
  int mult(int i) const { return items[2 * i - 1]; }  // i in [1, length]
  ColoredSequence reversed() const {
    return ColoredSequence(std::vector<int>(items.rbegin(), items.rend()));
  }
  auto operator<=>(const ColoredSequence&) const = default;
  bool operator==(const ColoredSequence&) const = default;
};

inline std::string to_string(const ColoredSequence& t, const Alphabet& a) {
  std::string s;
  for (size_t i = 0; i < t.items.size(); ++i) {
    if (i) s += ' ';
    s += i % 2 == 0 ? a.symbol(t.items[i]) : std::to_string(t.items[i]);
  }
  return s;
}

// Sparse frequency vector; absent entries are zero.
class FeatureVector {
 public:
  long get(const ColoredSequence& t) const {
    auto it = counts_.find(t);
    return it == counts_.end() ? 0 : it->second;
  }
  void add(const ColoredSequence& t, long k) { counts_[t] += k; }
  void set(const ColoredSequence& t, long k) { counts_[t] = k; }
  const std::map<ColoredSequence, long>& entries() const { return counts_; }
  bool operator==(const FeatureVector&) const = default;

 private:
  std::map<ColoredSequence, long> counts_;
};

// gamma of a path given as a vertex sequence.
inline ColoredSequence gamma(const ChemicalGraph& g,
                             const std::vector<Vertex>& path) {
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    if (g.mul(path[i], path[i + 1]) == 0) {
      throw NotAdjacent("path uses a non-adjacent pair");
    }
  }
  ColoredSequence t;
  for (size_t i = 0; i < path.size(); ++i) {
    if (i) t.items.push_back(g.mul(path[i - 1], path[i]));
    t.items.push_back(g.color(path[i]));
  }
  return t;
}

// Calls visit(sequence, path) for every rooted simple path with at most
// max_len edges. Each undirected path of positive length is seen once per
// end.
template <typename Visit>
void for_each_rooted_path(const ChemicalGraph& g, int max_len, Visit&& visit) {
  std::vector<char> on_path(g.n(), 0);
  std::vector<Vertex> path;
  ColoredSequence seq;
  std::vector<std::vector<Vertex>> adj(g.n());
  for (Vertex v = 0; v < g.n(); ++v) adj[v] = g.neighbors(v);
  auto dfs = [&](auto&& self, Vertex v) -> void {
    visit(static_cast<const ColoredSequence&>(seq),
          static_cast<const std::vector<Vertex>&>(path));
    if (static_cast<int>(path.size()) - 1 >= max_len) return;
    for (Vertex w : adj[v]) {
      if (on_path[w]) continue;
      on_path[w] = 1;
      path.push_back(w);
      seq.items.push_back(g.mul(v, w));
      seq.items.push_back(g.color(w));
      self(self, w);
      seq.items.pop_back();
      seq.items.pop_back();
      path.pop_back();
      on_path[w] = 0;
    }
  };
  for (Vertex v = 0; v < g.n(); ++v) {
    on_path[v] = 1;
    path.assign(1, v);
    seq.items.assign(1, g.color(v));
    dfs(dfs, v);
    on_path[v] = 0;
  }
}

inline FeatureVector frequency_vector(const ChemicalGraph& g, int max_len) {
  FeatureVector f;
  for_each_rooted_path(g, max_len,
                       [&](const ColoredSequence& t, const std::vector<Vertex>&) {
                         f.add(t, 1);
                       });
  return f;
}

struct FeatureRange {
  long lower = 0;
  long upper = 0;
  bool operator==(const FeatureRange&) const = default;
};

enum class ClosureMode { kA, kP };

// Lower and upper bounds on the sequences of a support set. The relaxed lower
// bound is what a graph with one fewer adjacent pair can still reach.
struct FeatureBounds {
  std::shared_ptr<const Alphabet> alphabet = Alphabet::Chemical();
  int max_len = 0;   // K
  int max_mult = 1;  // d
  std::map<ColoredSequence, FeatureRange> ranges;

  bool in_support(const ColoredSequence& t) const {
    return ranges.count(t) != 0;
  }

  void validate() const {
    for (const auto& [t, r] : ranges) {
      if (t.items.size() % 2 != 1 || t.length() > max_len) {
        throw BoundsViolation("sequence length outside [0, K]");
      }
      if (r.lower < 0 || r.lower > r.upper) {
        throw BoundsViolation("lower bound exceeds upper bound");
      }
      if (t.length() == 0 && r.lower != r.upper) {
        throw BoundsViolation("length-0 entry must be pinned");
      }
      if (t.length() > 0 && t.reversed() != t && in_support(t.reversed()) &&
          ranges.at(t.reversed()) != r) {
        throw BoundsViolation("bounds differ for a sequence and its reverse");
      }
    }
  }
};

inline long relaxed_lower(const ColoredSequence& t, long lower) {
  if (t.length() == 0) return lower;
  if (t.length() >= 2) return 0;
  long drop = t.color(0) == t.color(1) ? 2 : 1;
  return std::max(0L, lower - drop);
}

inline FeatureVector derive_relaxed_lower(const FeatureBounds& b) {
  FeatureVector out;
  for (const auto& [t, r] : b.ranges) out.set(t, relaxed_lower(t, r.lower));
  return out;
}

inline bool is_feasible(const FeatureVector& f, const FeatureBounds& b,
                        bool relaxed) {
  for (const auto& [t, r] : b.ranges) {
    long lo = relaxed ? relaxed_lower(t, r.lower) : r.lower;
    long k = f.get(t);
    if (k < lo || k > r.upper) return false;
  }
  return true;
}

inline bool is_feasible(const ChemicalGraph& g, const FeatureBounds& b,
                        bool relaxed) {
  if (!g.valences_respected()) return false;
  return is_feasible(frequency_vector(g, b.max_len), b, relaxed);
}

// Lengths a closure check constrains.
inline bool closure_applies(int length, ClosureMode mode, int L, int K) {
  return mode == ClosureMode::kA ? length <= L : (length > L && length <= K);
}

// Every path of a constrained length has its sequence in the support.
inline bool check_path_closure(const FeatureVector& f, const FeatureBounds& b,
                               int L, ClosureMode mode) {
  for (const auto& [t, k] : f.entries()) {
    if (k > 0 && closure_applies(t.length(), mode, L, b.max_len) &&
        !b.in_support(t)) {
      return false;
    }
  }
  return true;
}

inline bool check_path_closure(const ChemicalGraph& g, const FeatureBounds& b,
                               int L, ClosureMode mode) {
  int reach = mode == ClosureMode::kA ? std::min(L, b.max_len) : b.max_len;
  return check_path_closure(frequency_vector(g, reach), b, L, mode);
}

}  // namespace enum2aug

#endif  // ENUM2AUG_FEATURE_HPP_
