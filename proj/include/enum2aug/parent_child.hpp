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

#ifndef ENUM2AUG_PARENT_CHILD_HPP_
#define ENUM2AUG_PARENT_CHILD_HPP_

#include <algorithm>
#include <array>
#include <string>

#include "enum2aug/codes.hpp"
#include "enum2aug/graph.hpp"

namespace enum2aug {

struct ParentResult {
  ChemicalGraph parent;
  Vertex junction = 0;   // u, the smaller junction
  Vertex neighbor = 0;   // other end of the removed bundle
  int removed_mult = 0;
  int path = 0;          // index of the removed path in the mono-block view
};

// Junction side with the smaller (code, code*). Ties go to junction 0, which
// has the smaller vertex index.
inline int parent_side(const BlockLayout& b) {
  return junction_key(b, 1) < junction_key(b, 0) ? 1 : 0;
}

// Path with the least code seen from `side`. Ties go to the path whose first
// step from the junction has the smaller vertex index.
inline int parent_path(const BlockLayout& b, int side) {
  auto first_step = [&](int i) {
    const auto& nodes = b.paths[i].nodes;
    return side == 0 ? nodes[1].vertex : nodes[nodes.size() - 2].vertex;
  };
  int best = 0;
  PathCode best_code = path_code(b, 0, side);
  for (int i = 1; i < 3; ++i) {
    PathCode c = path_code(b, i, side);
    if (c < best_code || (c == best_code && first_step(i) < first_step(best))) {
      best = i;
      best_code = std::move(c);
    }
  }
  return best;
}

inline ParentResult parent_of(const ChemicalGraph& h) {
  MonoBlockView view = mono_block_view(h);
  BlockLayout b = block_layout(h, view);
  int side = parent_side(b);
  int path = parent_path(b, side);
  const auto& nodes = b.paths[path].nodes;
  ParentResult r;
  r.junction = b.junction[side];
  r.neighbor = side == 0 ? nodes[1].vertex : nodes[nodes.size() - 2].vertex;
  r.removed_mult = h.mul(r.junction, r.neighbor);
  r.path = path;
  r.parent = remove_edge_bundle(h, r.junction, r.neighbor);
  return r;
}

// Outcome of the five child conditions, evaluated in order. Later conditions
// are left unevaluated once one fails.
struct ChildVerdict {
  std::array<bool, 5> holds{};
  int evaluated = 0;
  bool is_child() const { return evaluated == 5 && holds[4]; }
};

inline const char* child_condition_name(int i) {
  static const char* kNames[5] = {
      "anchor tree has at least n/3 vertices",
      "anchor tree is strictly the largest pendent tree",
      "x on the cycle and y off the cycle",
      "junction x has the least (code, code*)",
      "path through xy has the least path code",
  };
  return kNames[i];
}

namespace internal {

inline void check_pair(const ChemicalGraph& g, Vertex x, Vertex y, int p) {
  if (!g.valid_vertex(x) || !g.valid_vertex(y)) {
    throw IndexOutOfRange("vertex index out of range");
  }
  if (x == y) throw InvalidPair("x and y coincide");
  if (g.adjacent(x, y)) throw InvalidPair("x and y are adjacent");
  int top = std::min({g.max_mult(), g.res(x), g.res(y)});
  if (p < 1 || p > top) {
    throw InvalidPair("p outside [1, min(d, res(x), res(y))]");
  }
}

// Conditions (iv) and (v) given a layout whose junction 0 is rho(x) and whose
// path 0 runs through the new edge.
inline bool code_conditions(const BlockLayout& b, ChildVerdict* v) {
  JunctionKey kx = junction_key(b, 0);
  JunctionKey ky = junction_key(b, 1);
  v->evaluated = 4;
  v->holds[3] = kx.code < ky.code || (kx.code == ky.code && kx.star <= ky.star);
  if (!v->holds[3]) return false;
  PathCode own = path_code(b, 0, 0);
  v->evaluated = 5;
  v->holds[4] = own <= path_code(b, 1, 0) && own <= path_code(b, 2, 0);
  return v->holds[4];
}

}  // namespace internal

// Reference check: builds G + p.xy and ranks its own pendent trees.
inline ChildVerdict child_check(const ChemicalGraph& g, Vertex x, Vertex y,
                                int p) {
  internal::check_pair(g, x, y, p);
  MonocyclicView view = find_unique_cycle(g);
  ChildVerdict v;
  const Vertex rx = view.rho[x];
  const Vertex ry = view.rho[y];
  const int ry_pos = view.cycle_pos[ry];
  const int ry_size = view.pendent_size(ry_pos);
  v.evaluated = 1;
  v.holds[0] = 3 * ry_size >= g.n();
  if (!v.holds[0]) return v;
  v.evaluated = 2;
  v.holds[1] = true;
  for (int i = 0; i < view.cycle_length(); ++i) {
    if (i != ry_pos && view.pendent_size(i) >= ry_size) v.holds[1] = false;
  }
  if (!v.holds[1]) return v;
  v.evaluated = 3;
  v.holds[2] = x == rx && y != ry && rx != ry;
  if (!v.holds[2]) return v;

  ChemicalGraph h = add_edges(g, x, y, p);
  MonoBlockView hv = mono_block_view(h);
  BlockLayout b = block_layout(h, hv);
  // Orient the layout so that junction 0 is x and path 0 holds the edge xy.
  if (b.junction[0] != x) {
    std::swap(b.junction[0], b.junction[1]);
    std::swap(b.color[0], b.color[1]);
    std::swap(b.degree[0], b.degree[1]);
    for (auto& path : b.paths) {
      std::reverse(path.nodes.begin(), path.nodes.end());
      std::reverse(path.mults.begin(), path.mults.end());
    }
  }
  for (int i = 0; i < 3; ++i) {
    if (b.paths[i].nodes[1].vertex == y) {
      std::swap(b.paths[0], b.paths[i]);
      break;
    }
  }
  internal::code_conditions(b, &v);
  return v;
}

// Fast check against a precomputed tree universe. Same answer as the
// reference check.
inline bool child_check(const AnchoredGraph& a, Vertex x, Vertex y, int p) {
  const ChemicalGraph& g = a.graph;
  internal::check_pair(g, x, y, p);
  if (!a.has_anchor || !a.exceeding()) return false;
  const MonocyclicView& view = a.view;
  if (view.rho[y] != a.anchor() || y == a.anchor()) return false;
  const int pos = view.cycle_pos[x];
  if (pos <= 0) return false;
  const int y_node = a.anchor_tree().node_of(y);
  // Cheap necessary size test: H<anchor> must not be smaller than H<x>.
  const RootedTree& tree = a.anchor_tree();
  int top = y_node;
  while (tree.parent[top] != 0) top = tree.parent[top];
  if (a.universe.difference_size[top] < view.pendent_size(pos)) return false;
  ChildVerdict v;
  return internal::code_conditions(child_layout(a, pos, y_node, p), &v);
}

inline std::string describe(const ChildVerdict& v) {
  std::string out;
  for (int i = 0; i < 5; ++i) {
    out += "condition ";
    out += std::to_string(i + 1);
    out += " (";
    out += child_condition_name(i);
    out += "): ";
    out += i < v.evaluated ? (v.holds[i] ? "holds" : "fails") : "not evaluated";
    out += '\n';
  }
  out += v.is_child() ? "child\n" : "not a child\n";
  return out;
}

}  // namespace enum2aug

#endif  // ENUM2AUG_PARENT_CHILD_HPP_
