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

#ifndef ENUM2AUG_CODES_HPP_
#define ENUM2AUG_CODES_HPP_

#include <algorithm>
#include <array>
#include <compare>
#include <functional>
#include <optional>
#include <vector>

#include "enum2aug/canonical.hpp"
#include "enum2aug/graph.hpp"

namespace enum2aug {

// Block layout -----------------------------------------------------------------

// A block vertex with the size and rank of its pendent tree.
struct BlockNode {
  Vertex vertex = 0;
  int size = 1;
  int rank = 0;
};

// One of the three internally disjoint paths between the junctions, listed
// from junction 0 to junction 1. mults[i] joins nodes[i] and nodes[i + 1].
struct BlockPath {
  std::vector<BlockNode> nodes;
  std::vector<int> mults;
};

// Everything the junction and path codes read from a mono-block graph.
struct BlockLayout {
  int n = 0;
  std::array<Vertex, 2> junction{};
  std::array<int, 2> color{};
  std::array<int, 2> degree{};
  std::array<BlockPath, 3> paths;

  const BlockNode& junction_node(int side) const {
    const auto& nodes = paths[0].nodes;
    return side == 0 ? nodes.front() : nodes.back();
  }
};

// (pendent size, color, degree, rank) of a junction.
struct JunctionCode {
  int size = 0;
  int color = 0;
  int degree = 0;
  int rank = 0;
  auto operator<=>(const JunctionCode&) const = default;
  bool operator==(const JunctionCode&) const = default;
};

// (n - n(P), |P|, rank(v1), mul(v1 v2), rank(v2), ..., rank(vp)), endpoints
// included.
struct PathCode {
  std::vector<int> items;
  auto operator<=>(const PathCode&) const = default;
  bool operator==(const PathCode&) const = default;
};

// The three path codes seen from one junction, sorted non-ascending.
struct JunctionCodeStar {
  std::array<PathCode, 3> paths;
  auto operator<=>(const JunctionCodeStar&) const = default;
  bool operator==(const JunctionCodeStar&) const = default;
};

struct JunctionKey {
  JunctionCode code;
  JunctionCodeStar star;
  auto operator<=>(const JunctionKey&) const = default;
  bool operator==(const JunctionKey&) const = default;
};

inline JunctionCode junction_code(const BlockLayout& b, int side) {
  const BlockNode& j = b.junction_node(side);
  return {j.size, b.color[side], b.degree[side], j.rank};
}

inline PathCode path_code(const BlockLayout& b, int path, int side) {
  const BlockPath& p = b.paths[path];
  const int len = static_cast<int>(p.mults.size());
  int inner = 0;
  for (int i = 1; i < len; ++i) inner += p.nodes[i].size;
  PathCode code;
  code.items.reserve(2 * len + 3);
  code.items.push_back(b.n - inner);
  code.items.push_back(len);
  for (int k = 0; k <= len; ++k) {
    int i = side == 0 ? k : len - k;
    if (k > 0) code.items.push_back(p.mults[side == 0 ? i - 1 : i]);
    code.items.push_back(p.nodes[i].rank);
  }
  return code;
}

inline JunctionCodeStar junction_code_star(const BlockLayout& b, int side) {
  JunctionCodeStar s;
  for (int i = 0; i < 3; ++i) s.paths[i] = path_code(b, i, side);
  std::sort(s.paths.begin(), s.paths.end(), std::greater<>());
  return s;
}

inline JunctionKey junction_key(const BlockLayout& b, int side) {
  return {junction_code(b, side), junction_code_star(b, side)};
}

// Layout of a mono-block graph with ranks over its own pendent trees.
inline BlockLayout block_layout(const ChemicalGraph& h,
                                const MonoBlockView& view) {
  std::vector<Vertex> block;
  std::vector<RootedTree> trees;
  for (Vertex v = 0; v < h.n(); ++v) {
    if (view.in_block[v]) {
      block.push_back(v);
      trees.push_back(view.pendent[v]);
    }
  }
  TreeRanking ranking = tree_ranking(trees);
  std::vector<int> size(h.n(), 0);
  std::vector<int> rank(h.n(), 0);
  for (size_t i = 0; i < block.size(); ++i) {
    size[block[i]] = trees[i].size();
    rank[block[i]] = ranking.node_rank[i][0];
  }
  BlockLayout b;
  b.n = h.n();
  b.junction = view.junctions;
  for (int s = 0; s < 2; ++s) {
    b.color[s] = h.color(view.junctions[s]);
    b.degree[s] = h.deg(view.junctions[s]);
  }
  for (int i = 0; i < 3; ++i) {
    const auto& p = view.paths[i];
    for (size_t k = 0; k < p.size(); ++k) {
      b.paths[i].nodes.push_back({p[k], size[p[k]], rank[p[k]]});
      if (k > 0) b.paths[i].mults.push_back(h.mul(p[k - 1], p[k]));
    }
  }
  return b;
}

// Tree universe ----------------------------------------------------------------

// Ranked rooted trees from which every pendent tree of G + p.xy is drawn when
// y lies in the anchor's pendent tree: the pendent trees of G, the subtrees
// of the anchor tree and the anchor-tree differences G<p(u)> - G<u>.
struct TreeUniverse {
  std::vector<int> pendent_rank;       // per cycle position
  SubtreeSignatures anchor;            // of the anchor's pendent tree
  std::vector<int> subtree_rank;       // per anchor-tree node
  std::vector<int> difference_rank;    // per anchor-tree node, 0 at root
  std::vector<int> difference_size;    // per anchor-tree node, 0 at root
  RankTable table;
};

// Cycle position 0 of `view` is the anchor.
inline TreeUniverse build_tree_universe(const MonocyclicView& view) {
  TreeUniverse u;
  const RootedTree& anchor = view.pendent[0];
  u.anchor = subtree_signatures(anchor);
  std::vector<Signature> pendent_sigs;
  std::vector<Signature> all = u.anchor.sig;
  for (int i = 1; i < view.cycle_length(); ++i) {
    pendent_sigs.push_back(tree_signature(view.pendent[i]));
    all.push_back(pendent_sigs.back());
  }
  std::vector<Signature> diffs(anchor.size());
  for (int node = 1; node < anchor.size(); ++node) {
    diffs[node] = u.anchor.without_child(anchor, anchor.parent[node], node);
    all.push_back(diffs[node]);
  }
  u.table = RankTable(std::move(all));
  u.pendent_rank.push_back(u.table.rank(u.anchor.sig[0]));
  for (const auto& s : pendent_sigs) u.pendent_rank.push_back(u.table.rank(s));
  u.subtree_rank.resize(anchor.size());
  u.difference_rank.assign(anchor.size(), 0);
  u.difference_size.assign(anchor.size(), 0);
  for (int node = 0; node < anchor.size(); ++node) {
    u.subtree_rank[node] = u.table.rank(u.anchor.sig[node]);
    if (node > 0) {
      u.difference_rank[node] = u.table.rank(diffs[node]);
      u.difference_size[node] =
          u.anchor.size[anchor.parent[node]] - u.anchor.size[node];
    }
  }
  return u;
}

// Anchored monocyclic graph ----------------------------------------------------

// A monocyclic graph with its cycle listed from the vertex carrying the unique
// largest pendent tree, when there is one.
struct AnchoredGraph {
  ChemicalGraph graph;
  MonocyclicView view;
  bool has_anchor = false;
  TreeUniverse universe;  // valid only with an anchor

  Vertex anchor() const { return view.cycle[0]; }
  const RootedTree& anchor_tree() const { return view.pendent[0]; }
  bool exceeding() const { return 3 * view.pendent_size(0) >= view.n; }
};

inline std::optional<int> unique_largest_pendent(const MonocyclicView& view) {
  int best = -1;
  bool unique = false;
  for (int i = 0; i < view.cycle_length(); ++i) {
    if (best < 0 || view.pendent_size(i) > view.pendent_size(best)) {
      best = i;
      unique = true;
    } else if (view.pendent_size(i) == view.pendent_size(best)) {
      unique = false;
    }
  }
  if (!unique) return std::nullopt;
  return best;
}

inline AnchoredGraph anchor_graph(const ChemicalGraph& g) {
  AnchoredGraph a;
  a.graph = g;
  MonocyclicView view = find_unique_cycle(g);
  std::optional<int> best = unique_largest_pendent(view);
  if (!best) {
    a.view = std::move(view);
    return a;
  }
  a.view = reanchor(view, *best);
  a.has_anchor = true;
  a.universe = build_tree_universe(a.view);
  return a;
}

// Layout of G + p.xy for x = v_i on the cycle (i > 0) and y a non-root node of
// the anchor tree, with ranks from the universe. Junction 0 is x, junction 1
// is the anchor. Path 0 runs through the new edge.
inline BlockLayout child_layout(const AnchoredGraph& a, int cycle_pos,
                                int y_node, int p) {
  const ChemicalGraph& g = a.graph;
  const MonocyclicView& view = a.view;
  const RootedTree& tree = a.anchor_tree();
  const TreeUniverse& u = a.universe;
  const int k = view.cycle_length();
  const Vertex x = view.cycle[cycle_pos];
  auto cycle_node = [&](int pos) {
    return BlockNode{view.cycle[pos], view.pendent_size(pos),
                     u.pendent_rank[pos]};
  };

  BlockLayout b;
  b.n = g.n();
  b.junction = {x, a.anchor()};
  b.color = {g.color(x), g.color(a.anchor())};
  b.degree = {g.deg(x) + p, g.deg(a.anchor())};

  // Tree path from y up to the anchor.
  std::vector<int> up;
  for (int node = y_node; node >= 0; node = tree.parent[node]) {
    up.push_back(node);
  }
  BlockPath& via = b.paths[0];
  via.nodes.push_back(cycle_node(cycle_pos));
  via.mults.push_back(p);
  for (size_t i = 0; i < up.size(); ++i) {
    int node = up[i];
    BlockNode bn{tree.vertex[node], 0, 0};
    if (i == 0) {
      bn.size = u.anchor.size[node];
      bn.rank = u.subtree_rank[node];
    } else {
      bn.size = u.difference_size[up[i - 1]];
      bn.rank = u.difference_rank[up[i - 1]];
    }
    via.nodes.push_back(bn);
    if (i + 1 < up.size()) via.mults.push_back(tree.parent_mult[node]);
  }

  // Cycle paths from x back to the anchor in both directions.
  for (int dir = 0; dir < 2; ++dir) {
    BlockPath& cp = b.paths[1 + dir];
    int pos = cycle_pos;
    int step = dir == 0 ? -1 : 1;
    cp.nodes.push_back(cycle_node(pos));
    while (true) {
      int next = ((pos + step) % k + k) % k;
      cp.mults.push_back(g.mul(view.cycle[pos], view.cycle[next]));
      pos = next;
      if (pos == 0) break;
      cp.nodes.push_back(cycle_node(pos));
    }
    cp.nodes.push_back(via.nodes.back());
  }
  return b;
}

}  // namespace enum2aug

#endif  // ENUM2AUG_CODES_HPP_
