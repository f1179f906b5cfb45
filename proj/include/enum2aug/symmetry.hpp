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

#ifndef ENUM2AUG_SYMMETRY_HPP_
#define ENUM2AUG_SYMMETRY_HPP_

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "enum2aug/canonical.hpp"
#include "enum2aug/codes.hpp"
#include "enum2aug/graph.hpp"

namespace enum2aug {

// copy(v) = 1 iff v has a left sibling in the left-heavy order whose subtree
// and parent multiplicity are the same as v's. Indexed by anchor-tree node.
inline std::vector<int> compute_copy_labels(const RootedTree& tree,
                                            const SubtreeSignatures& sigs) {
  std::vector<int> copy(tree.size(), 0);
  for (int u = 0; u < tree.size(); ++u) {
    const auto& ch = sigs.ordered_children[u];
    for (size_t i = 1; i < ch.size(); ++i) {
      int a = ch[i - 1];
      int b = ch[i];
      copy[b] = sigs.sig[a] == sigs.sig[b] &&
                tree.parent_mult[a] == tree.parent_mult[b];
    }
  }
  return copy;
}

inline std::vector<int> compute_copy_labels(const AnchoredGraph& a) {
  return compute_copy_labels(a.anchor_tree(), a.universe.anchor);
}

// Non-root anchor-tree nodes whose whole root path has copy label 0. One
// per orbit of the rooted tree's automorphism group.
inline std::vector<int> orbit_representatives(const RootedTree& tree,
                                              const std::vector<int>& copy) {
  std::vector<char> clean(tree.size(), 0);
  std::vector<int> out;
  for (int u = 0; u < tree.size(); ++u) {
    int par = tree.parent[u];
    clean[u] = copy[u] == 0 && (par < 0 || clean[par]);
    if (u > 0 && clean[u]) out.push_back(u);
  }
  return out;
}

// Reflection fixing the anchor: v_i <-> v_{k-i}.
struct AxialWitness {
  std::vector<Vertex> image;  // per cycle position
};

inline std::optional<AxialWitness> detect_axial_symmetry(
    const AnchoredGraph& a) {
  if (!a.has_anchor) return std::nullopt;
  const MonocyclicView& view = a.view;
  const int k = view.cycle_length();
  const auto& rank = a.universe.pendent_rank;
  auto edge = [&](int i) { return a.graph.mul(view.at(i), view.at(i + 1)); };
  for (int i = 1; i < k; ++i) {
    if (rank[i] != rank[k - i]) return std::nullopt;
  }
  for (int i = 0; i < k; ++i) {
    if (edge(i) != edge(k - 1 - i)) return std::nullopt;
  }
  AxialWitness w;
  for (int i = 0; i < k; ++i) w.image.push_back(view.at(k - i));
  return w;
}

// Canonical signature of a tree spanned by `vertices` and rooted at `root`.
inline Signature rooted_signature(const ChemicalGraph& g,
                                  const std::vector<Vertex>& vertices,
                                  Vertex root) {
  std::vector<char> allowed(g.n(), 0);
  for (Vertex v : vertices) allowed[v] = 1;
  return tree_signature(rooted_tree(g, root, allowed));
}

// Rotation data for the anchor child q and a vertex y below it. Rotating the
// cycle of G - G<q> by `shift` positions is an automorphism, and re-rooting
// G<q> at y gives the same rooted tree as rooting it at q.
struct RotationalWitness {
  std::vector<int> shifts;       // every valid shift in [1, k-1]
  int shift = 0;                 // least valid shift
  std::vector<Vertex> cycle_map; // v_i -> v_{i+shift}
  std::vector<std::pair<Vertex, Vertex>> tree_map;  // G<q> at q -> at y
};

inline std::optional<RotationalWitness> detect_rotational_symmetry(
    const AnchoredGraph& a, int q_node, int y_node) {
  if (!a.has_anchor) return std::nullopt;
  const RootedTree& tree = a.anchor_tree();
  const MonocyclicView& view = a.view;
  const TreeUniverse& u = a.universe;
  const int k = view.cycle_length();
  if (q_node <= 0 || tree.parent[q_node] != 0) {
    throw InvalidPair("q must be a child of the anchor");
  }
  std::vector<int> token(k);
  token[0] = u.difference_rank[q_node];
  for (int i = 1; i < k; ++i) token[i] = u.pendent_rank[i];
  auto edge = [&](int i) { return a.graph.mul(view.at(i), view.at(i + 1)); };

  RotationalWitness w;
  for (int s = 1; s < k; ++s) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      ok = token[i] == token[(i + s) % k] && edge(i) == edge(i + s);
    }
    if (ok) w.shifts.push_back(s);
  }
  if (w.shifts.empty()) return std::nullopt;

  std::vector<int> nodes = tree.subtree_nodes(q_node);
  std::vector<Vertex> vertices;
  for (int i : nodes) vertices.push_back(tree.vertex[i]);
  const Vertex q = tree.vertex[q_node];
  const Vertex y = tree.vertex[y_node];
  std::vector<char> allowed(a.graph.n(), 0);
  for (Vertex v : vertices) allowed[v] = 1;
  RootedTree at_q = rooted_tree(a.graph, q, allowed);
  RootedTree at_y = rooted_tree(a.graph, y, allowed);
  SubtreeSignatures sq = subtree_signatures(at_q);
  SubtreeSignatures sy = subtree_signatures(at_y);
  if (sq.sig[0] != sy.sig[0]) return std::nullopt;

  w.shift = w.shifts.front();
  for (int i = 0; i < k; ++i) w.cycle_map.push_back(view.at(i + w.shift));
  std::vector<int> pq = sq.canonical_preorder();
  std::vector<int> py = sy.canonical_preorder();
  for (size_t i = 0; i < pq.size(); ++i) {
    w.tree_map.emplace_back(at_q.vertex[pq[i]], at_y.vertex[py[i]]);
  }
  return w;
}

// A candidate pair. When `twin_x` is set, G + m.{twin_x, y} and
// G + m.{x, y} are isomorphic for m = twin_mult; the enumerator then emits
// the pair with the smaller cycle position only.
struct PotentialEdge {
  Vertex x = 0;
  Vertex y = 0;
  Vertex twin_x = -1;
  int twin_mult = 0;
};

enum class SymmetryCase { kNoChildren, kAxial, kNonAxial };

struct PotentialEdgeSet {
  SymmetryCase kind = SymmetryCase::kNoChildren;
  std::vector<PotentialEdge> edges;
};

inline PotentialEdgeSet potential_edge_set(const AnchoredGraph& a) {
  PotentialEdgeSet out;
  if (!a.has_anchor || !a.exceeding()) return out;
  const ChemicalGraph& g = a.graph;
  const MonocyclicView& view = a.view;
  const RootedTree& tree = a.anchor_tree();
  const int k = view.cycle_length();
  std::vector<int> reps = orbit_representatives(tree, compute_copy_labels(a));
  const bool axial = detect_axial_symmetry(a).has_value();
  out.kind = axial ? SymmetryCase::kAxial : SymmetryCase::kNonAxial;
  const int last = axial ? k / 2 : k - 1;
  for (int node : reps) {
    const Vertex y = tree.vertex[node];
    int q_node = node;
    while (tree.parent[q_node] != 0) q_node = tree.parent[q_node];
    std::optional<RotationalWitness> rot;
    if (!axial && k > 2) rot = detect_rotational_symmetry(a, q_node, node);
    for (int i = 1; i <= last; ++i) {
      const Vertex x = view.cycle[i];
      if (g.adjacent(x, y)) continue;
      PotentialEdge e{x, y};
      const int j = k - i;
      if (rot && i > k / 2 &&
          std::find(rot->shifts.begin(), rot->shifts.end(), j) !=
              rot->shifts.end()) {
        e.twin_x = view.cycle[j];
        e.twin_mult = g.mul(a.anchor(), tree.vertex[q_node]);
      }
      out.edges.push_back(e);
    }
  }
  return out;
}

}  // namespace enum2aug

#endif  // ENUM2AUG_SYMMETRY_HPP_
