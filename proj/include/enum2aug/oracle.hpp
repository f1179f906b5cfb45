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

#ifndef ENUM2AUG_ORACLE_HPP_
#define ENUM2AUG_ORACLE_HPP_

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "enum2aug/canonical.hpp"
#include "enum2aug/feature.hpp"
#include "enum2aug/graph.hpp"

namespace enum2aug {

// Canonical codes ------------------------------------------------------------

using CanonicalCode = std::string;

inline constexpr int kDefaultCanonicalCap = 10;

namespace internal {

using Cells = std::vector<std::vector<Vertex>>;

// Splits cells by the multiset of (neighbour cell, multiplicity) until
// stable. Sub-cells are ordered by their key, so the result does not depend
// on vertex labels.
inline void refine(const ChemicalGraph& g, Cells& cells) {
  const int n = g.n();
  std::vector<int> cell_of(n);
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t c = 0; c < cells.size(); ++c) {
      for (Vertex v : cells[c]) cell_of[v] = static_cast<int>(c);
    }
    Cells next;
    next.reserve(n);
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::vector<int>, Vertex>> keyed;
      keyed.reserve(cell.size());
      for (Vertex v : cell) {
        std::vector<int> key;
        for (Vertex w = 0; w < n; ++w) {
          if (g.mul(v, w) > 0) key.push_back(cell_of[w] * 256 + g.mul(v, w));
        }
        std::sort(key.begin(), key.end());
        keyed.emplace_back(std::move(key), v);
      }
      std::stable_sort(keyed.begin(), keyed.end(),
                       [](const auto& a, const auto& b) {
                         return a.first < b.first;
                       });
      size_t start = next.size();
      for (size_t i = 0; i < keyed.size(); ++i) {
        if (i == 0 || keyed[i].first != keyed[i - 1].first) next.emplace_back();
        next.back().push_back(keyed[i].second);
      }
      if (next.size() - start > 1) changed = true;
    }
    cells = std::move(next);
  }
}

inline CanonicalCode encode(const ChemicalGraph& g, const Cells& cells) {
  std::vector<Vertex> order;
  for (const auto& c : cells) order.push_back(c[0]);
  CanonicalCode code;
  code.push_back(static_cast<char>(g.n()));
  for (Vertex v : order) code.push_back(static_cast<char>(g.color(v)));
  for (size_t i = 0; i < order.size(); ++i) {
    for (size_t j = i + 1; j < order.size(); ++j) {
      code.push_back(static_cast<char>(g.mul(order[i], order[j])));
    }
  }
  return code;
}

// Swapping v and w fixes every other vertex and preserves all labels.
inline bool interchangeable(const ChemicalGraph& g, Vertex v, Vertex w) {
  if (g.color(v) != g.color(w)) return false;
  for (Vertex u = 0; u < g.n(); ++u) {
    if (u != v && u != w && g.mul(v, u) != g.mul(w, u)) return false;
  }
  return true;
}

inline void search(const ChemicalGraph& g, Cells cells,
                   std::optional<CanonicalCode>& best) {
  refine(g, cells);
  size_t target = cells.size();
  for (size_t c = 0; c < cells.size(); ++c) {
    if (cells[c].size() > 1) {
      target = c;
      break;
    }
  }
  if (target == cells.size()) {
    CanonicalCode code = encode(g, cells);
    if (!best || code < *best) best = std::move(code);
    return;
  }
  std::vector<Vertex> tried;
  for (Vertex v : cells[target]) {
    bool redundant = false;
    for (Vertex w : tried) {
      if (interchangeable(g, v, w)) {
        redundant = true;
        break;
      }
    }
    if (redundant) continue;
    tried.push_back(v);
    Cells next;
    next.reserve(cells.size() + 1);
    for (size_t c = 0; c < cells.size(); ++c) {
      if (c != target) {
        next.push_back(cells[c]);
        continue;
      }
      next.push_back({v});
      std::vector<Vertex> rest;
      for (Vertex w : cells[c]) {
        if (w != v) rest.push_back(w);
      }
      next.push_back(std::move(rest));
    }
    search(g, std::move(next), best);
  }
}

}  // namespace internal

// Label-independent code: equal codes iff the graphs are isomorphic. The
// search runs over vertex orders that respect an invariant ordered partition
// (colors, then neighbourhood refinement) and keeps the least encoding.
inline CanonicalCode canonical_code(const ChemicalGraph& g,
                                    int cap = kDefaultCanonicalCap) {
  if (g.n() > cap) throw TooLarge("graph exceeds the canonical-code cap");
  if (g.n() == 0) return CanonicalCode(1, '\0');
  internal::Cells cells;
  for (int c = 0; c < g.alphabet()->size(); ++c) {
    std::vector<Vertex> cell;
    for (Vertex v = 0; v < g.n(); ++v) {
      if (g.color(v) == c) cell.push_back(v);
    }
    if (!cell.empty()) cells.push_back(std::move(cell));
  }
  std::optional<CanonicalCode> best;
  internal::search(g, std::move(cells), best);
  return *best;
}

// Explicit bijection search. Returns image[v] for an isomorphism a -> b.
inline std::optional<std::vector<Vertex>> find_isomorphism(
    const ChemicalGraph& a, const ChemicalGraph& b) {
  if (a.n() != b.n()) return std::nullopt;
  const int n = a.n();
  std::vector<Vertex> image(n, -1);
  std::vector<char> used(n, 0);
  auto extend = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (Vertex w = 0; w < n; ++w) {
      if (used[w] || a.color(v) != b.color(w) || a.deg(v) != b.deg(w)) {
        continue;
      }
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = a.mul(u, v) == b.mul(image[u], w);
      if (!ok) continue;
      used[w] = 1;
      image[v] = w;
      if (self(self, v + 1)) return true;
      used[w] = 0;
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  return image;
}

// Tree keys ------------------------------------------------------------------

// Label-independent key of a tree: the least signature over its centres.
inline std::string tree_key(const ChemicalGraph& t) {
  const int n = t.n();
  std::vector<int> degree(n);
  std::vector<char> alive(n, 1);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = t.simple_degree(v);
    if (degree[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      alive[v] = 0;
      --remaining;
    }
    for (Vertex v : layer) {
      for (Vertex w = 0; w < n; ++w) {
        if (alive[w] && t.mul(v, w) > 0 && --degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::vector<char> all(n, 1);
  std::optional<Signature> best;
  for (Vertex c = 0; c < n; ++c) {
    if (!alive[c]) continue;
    Signature s = tree_signature(rooted_tree(t, c, all));
    if (!best || s < *best) best = std::move(s);
  }
  std::string key;
  for (int v : best->delta) key.push_back(static_cast<char>(v));
  key.push_back('\xff');
  for (int v : best->mult) key.push_back(static_cast<char>(v));
  return key;
}

// Brute-force class enumeration -------------------------------------------------

enum class GraphClass { kMonocyclic, kMonoBlock2 };

inline constexpr int kDefaultBruteForceCap = 8;

struct BruteForceOptions {
  // Vertices per color (indexed by order); unrestricted when empty.
  std::vector<int> composition;
  int cap = kDefaultBruteForceCap;
};

namespace internal {

inline bool in_class(const ChemicalGraph& g, GraphClass cls) {
  return cls == GraphClass::kMonocyclic ? is_monocyclic(g) : is_mono_block(g);
}

// One simple labeled graph per isomorphism class of uncolored skeletons.
inline std::vector<std::vector<std::pair<Vertex, Vertex>>> skeletons(
    int n, GraphClass cls) {
  static std::map<std::pair<int, int>,
                  std::vector<std::vector<std::pair<Vertex, Vertex>>>>
      cache;
  auto key = std::make_pair(n, static_cast<int>(cls));
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  auto mono = std::make_shared<const Alphabet>(std::vector<std::string>{"X"},
                                               std::vector<int>{n});
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  const int m = cls == GraphClass::kMonocyclic ? n : n + 1;
  std::vector<std::vector<std::pair<Vertex, Vertex>>> out;
  std::set<CanonicalCode> seen;
  std::vector<int> chosen;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(chosen.size()) == m) {
      std::vector<Edge> edges;
      for (int i : chosen) edges.push_back({pairs[i].first, pairs[i].second, 1});
      ChemicalGraph g = ChemicalGraph::FromEdges(mono, std::vector<int>(n, 0),
                                                 edges, 1);
      if (!in_class(g, cls)) return;
      if (!seen.insert(canonical_code(g, n)).second) return;
      std::vector<std::pair<Vertex, Vertex>> sk;
      for (int i : chosen) sk.push_back(pairs[i]);
      out.push_back(std::move(sk));
      return;
    }
    const int left = m - static_cast<int>(chosen.size());
    for (int i = start; i + left <= static_cast<int>(pairs.size()); ++i) {
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  if (m <= static_cast<int>(pairs.size())) rec(rec, 0);
  cache[key] = out;
  return out;
}

}  // namespace internal

// All classes of connected colored multigraphs of a class with every
// multiplicity in [1, d] and res >= 0, one representative each, sorted by
// canonical code.
inline std::vector<ChemicalGraph> brute_force_enumerate(
    std::shared_ptr<const Alphabet> alphabet, int n, int d, GraphClass cls,
    const BruteForceOptions& opt = {}) {
  if (n > opt.cap) throw TooLarge("brute-force size cap exceeded");
  if (n < 3) return {};
  const int sigma = alphabet->size();
  if (!opt.composition.empty()) {
    int total = 0;
    for (int k : opt.composition) total += k;
    if (static_cast<int>(opt.composition.size()) != sigma || total != n) {
      throw Error("composition does not match the alphabet and n");
    }
  }
  std::map<CanonicalCode, ChemicalGraph> found;
  for (const auto& sk : internal::skeletons(n, cls)) {
    std::vector<int> simple_degree(n, 0);
    for (auto [u, v] : sk) {
      ++simple_degree[u];
      ++simple_degree[v];
    }
    // Colored skeletons up to isomorphism.
    std::set<CanonicalCode> colored_seen;
    std::vector<int> colors(n, 0);
    std::vector<int> used(sigma, 0);
    auto color_rec = [&](auto&& self, int v) -> void {
      if (v == n) {
        std::vector<Edge> edges;
        for (auto [a, b] : sk) edges.push_back({a, b, 1});
        ChemicalGraph base =
            ChemicalGraph::FromEdges(alphabet, colors, edges, std::max(d, 1));
        if (!colored_seen.insert(canonical_code(base, opt.cap)).second) return;
        // Multiplicities with valence pruning.
        std::vector<int> load = simple_degree;
        std::vector<Edge> multi = edges;
        auto mult_rec = [&](auto&& mself, size_t i) -> void {
          if (i == multi.size()) {
            ChemicalGraph g =
                ChemicalGraph::FromEdges(alphabet, colors, multi, d);
            found.emplace(canonical_code(g, opt.cap), std::move(g));
            return;
          }
          Edge& e = multi[i];
          for (int m = 1; m <= d; ++m) {
            load[e.u] += m - 1;
            load[e.v] += m - 1;
            if (load[e.u] <= alphabet->valence(colors[e.u]) &&
                load[e.v] <= alphabet->valence(colors[e.v])) {
              e.mult = m;
              mself(mself, i + 1);
            }
            load[e.u] -= m - 1;
            load[e.v] -= m - 1;
          }
          e.mult = 1;
        };
        mult_rec(mult_rec, 0);
        return;
      }
      for (int c = 0; c < sigma; ++c) {
        if (simple_degree[v] > alphabet->valence(c)) continue;
        if (!opt.composition.empty() && used[c] >= opt.composition[c]) continue;
        colors[v] = c;
        ++used[c];
        self(self, v + 1);
        --used[c];
      }
    };
    color_rec(color_rec, 0);
  }
  std::vector<ChemicalGraph> out;
  out.reserve(found.size());
  for (auto& [code, g] : found) out.push_back(std::move(g));
  return out;
}

// Vertices per color pinned by the length-0 entries of the bounds.
inline std::vector<int> pinned_composition(const FeatureBounds& b) {
  std::vector<int> comp(b.alphabet->size(), -1);
  for (const auto& [t, r] : b.ranges) {
    if (t.length() == 0) comp[t.color(0)] = static_cast<int>(r.upper);
  }
  for (int k : comp) {
    if (k < 0) throw BoundsViolation("every color needs a pinned count");
  }
  return comp;
}

struct FeedOptions {
  // Apply the path-closure side condition while growing (it is inherited by
  // subgraphs, so no feasible seed is lost).
  bool use_closure = false;
  ClosureMode mode = ClosureMode::kA;
  int L = 0;
  int canonical_cap = 16;
};

// Feasible monocyclic graphs under the relaxed lower bound, by exhaustive
// class enumeration. Desk scale only.
inline std::vector<ChemicalGraph> feed_monocyclic_exhaustive(
    const FeatureBounds& b, const FeedOptions& opt = {}) {
  std::vector<int> comp = pinned_composition(b);
  int n = 0;
  for (int k : comp) n += k;
  std::vector<ChemicalGraph> out;
  BruteForceOptions bo;
  bo.composition = comp;
  for (auto& g : brute_force_enumerate(b.alphabet, n, b.max_mult,
                                       GraphClass::kMonocyclic, bo)) {
    FeatureVector f = frequency_vector(g, b.max_len);
    if (!is_feasible(f, b, true)) continue;
    if (opt.use_closure && !check_path_closure(f, b, opt.L, opt.mode)) continue;
    out.push_back(std::move(g));
  }
  return out;
}

namespace internal {

// Adds the rooted paths that start at `w` (and their reverses) to f.
inline void add_paths_from(const ChemicalGraph& g, Vertex w, int max_len,
                           FeatureVector& f, std::vector<ColoredSequence>& touched) {
  std::vector<char> on(g.n(), 0);
  ColoredSequence seq;
  seq.items.push_back(g.color(w));
  on[w] = 1;
  auto dfs = [&](auto&& self, Vertex v, int len) -> void {
    f.add(seq, 1);
    touched.push_back(seq);
    if (len > 0) {
      ColoredSequence r = seq.reversed();
      f.add(r, 1);
      touched.push_back(std::move(r));
    }
    if (len == max_len) return;
    for (Vertex u = 0; u < g.n(); ++u) {
      if (on[u] || g.mul(v, u) == 0) continue;
      on[u] = 1;
      seq.items.push_back(g.mul(v, u));
      seq.items.push_back(g.color(u));
      self(self, u, len + 1);
      seq.items.pop_back();
      seq.items.pop_back();
      on[u] = 0;
    }
  };
  dfs(dfs, w, 0);
}

inline bool within_upper(const FeatureVector& f, const FeatureBounds& b,
                         const FeedOptions& opt,
                         const std::vector<ColoredSequence>& touched) {
  for (const auto& t : touched) {
    auto it = b.ranges.find(t);
    if (it == b.ranges.end()) {
      if (opt.use_closure &&
          closure_applies(t.length(), opt.mode, opt.L, b.max_len)) {
        return false;
      }
      continue;
    }
    if (f.get(t) > it->second.upper) return false;
  }
  return true;
}

inline ChemicalGraph add_leaf(const ChemicalGraph& t, Vertex at, int color,
                              int mult) {
  std::vector<int> colors = t.colors();
  colors.push_back(color);
  std::vector<Edge> edges = t.edges();
  edges.push_back({at, t.n(), mult});
  return ChemicalGraph::FromEdges(t.alphabet(), colors, edges, t.max_mult());
}

}  // namespace internal

// Feasible monocyclic graphs under the relaxed lower bound, grown one leaf at
// a time as trees and closed by one extra bundle. Every bound used for pruning
// holds for all subgraphs of a feasible graph, so the output is exact.
// Sorted by canonical code.
inline std::vector<ChemicalGraph> feed_monocyclic(const FeatureBounds& b,
                                                  const FeedOptions& opt = {}) {
  std::vector<int> comp = pinned_composition(b);
  int n = 0;
  for (int k : comp) n += k;
  if (n < 3) return {};
  if (n > opt.canonical_cap) throw TooLarge("feeder size cap exceeded");
  const int sigma = b.alphabet->size();
  const int d = b.max_mult;

  std::vector<ChemicalGraph> level;
  for (int c = 0; c < sigma; ++c) {
    if (comp[c] == 0) continue;
    ChemicalGraph g(b.alphabet, {c}, d);
    FeatureVector f = frequency_vector(g, b.max_len);
    std::vector<ColoredSequence> touched = {ColoredSequence({c})};
    if (internal::within_upper(f, b, opt, touched)) level.push_back(g);
  }
  for (int size = 1; size < n; ++size) {
    std::vector<ChemicalGraph> next;
    std::unordered_set<std::string> seen;
    for (const ChemicalGraph& t : level) {
      FeatureVector base = frequency_vector(t, b.max_len);
      std::vector<int> count(sigma, 0);
      for (int c : t.colors()) ++count[c];
      for (Vertex at = 0; at < t.n(); ++at) {
        for (int c = 0; c < sigma; ++c) {
          if (count[c] >= comp[c]) continue;
          const int top = std::min({d, t.res(at), b.alphabet->valence(c)});
          for (int m = 1; m <= top; ++m) {
            ChemicalGraph grown = internal::add_leaf(t, at, c, m);
            FeatureVector f = base;
            std::vector<ColoredSequence> touched;
            internal::add_paths_from(grown, t.n(), b.max_len, f, touched);
            if (!internal::within_upper(f, b, opt, touched)) continue;
            if (seen.insert(tree_key(grown)).second) {
              next.push_back(std::move(grown));
            }
          }
        }
      }
    }
    level = std::move(next);
  }

  std::map<CanonicalCode, ChemicalGraph> found;
  for (const ChemicalGraph& t : level) {
    FeatureVector base = frequency_vector(t, b.max_len);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (t.adjacent(u, v)) continue;
        const int top = std::min({d, t.res(u), t.res(v)});
        for (int p = 1; p <= top; ++p) {
          // Cheap length-one screen before the full path count.
          if (b.max_len >= 1) {
            ColoredSequence bond({t.color(u), p, t.color(v)});
            long add = t.color(u) == t.color(v) ? 2 : 1;
            auto it = b.ranges.find(bond);
            if (it == b.ranges.end()) {
              if (opt.use_closure &&
                  closure_applies(1, opt.mode, opt.L, b.max_len)) {
                continue;
              }
            } else if (base.get(bond) + add > it->second.upper) {
              continue;
            }
          }
          ChemicalGraph g = add_edges(t, u, v, p);
          FeatureVector f = frequency_vector(g, b.max_len);
          if (!is_feasible(f, b, true)) continue;
          if (opt.use_closure && !check_path_closure(f, b, opt.L, opt.mode)) {
            continue;
          }
          found.emplace(canonical_code(g, opt.canonical_cap), std::move(g));
        }
      }
    }
  }
  std::vector<ChemicalGraph> out;
  out.reserve(found.size());
  for (auto& [code, g] : found) out.push_back(std::move(g));
  return out;
}

}  // namespace enum2aug

#endif  // ENUM2AUG_ORACLE_HPP_
