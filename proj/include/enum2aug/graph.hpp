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

#ifndef ENUM2AUG_GRAPH_HPP_
#define ENUM2AUG_GRAPH_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace enum2aug {

using Vertex = int;

// Errors ---------------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ENUM2AUG_DEFINE_ERROR(Name)      \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  }

ENUM2AUG_DEFINE_ERROR(NotMonocyclic);
ENUM2AUG_DEFINE_ERROR(NotMonoBlock2Aug);
ENUM2AUG_DEFINE_ERROR(MultiplicityOverflow);
ENUM2AUG_DEFINE_ERROR(SelfLoop);
ENUM2AUG_DEFINE_ERROR(NotAdjacent);
ENUM2AUG_DEFINE_ERROR(TypeMismatch);
ENUM2AUG_DEFINE_ERROR(NotAJunction);
ENUM2AUG_DEFINE_ERROR(InvalidPair);
ENUM2AUG_DEFINE_ERROR(TooLarge);
ENUM2AUG_DEFINE_ERROR(DuplicateEdge);
ENUM2AUG_DEFINE_ERROR(IndexOutOfRange);
ENUM2AUG_DEFINE_ERROR(BoundsViolation);

#undef ENUM2AUG_DEFINE_ERROR

// Raised by the text readers. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Colors ---------------------------------------------------------------------

struct Color {
  std::string symbol;
  int order_index = 0;
};

// Ordered color set with valences. Index i is the order index of a color.
class Alphabet {
 public:
  Alphabet() = default;
  Alphabet(std::vector<std::string> symbols, std::vector<int> valences)
      : symbols_(std::move(symbols)), valences_(std::move(valences)) {
    if (symbols_.size() != valences_.size()) {
      throw Error("alphabet: symbol and valence counts differ");
    }
    for (size_t i = 0; i < symbols_.size(); ++i) {
      if (valences_[i] < 1) throw Error("alphabet: valence must be positive");
      for (size_t j = 0; j < i; ++j) {
        if (symbols_[i] == symbols_[j]) {
          throw Error("alphabet: duplicate symbol " + symbols_[i]);
        }
      }
    }
  }

  // O < N < C with valences 2, 3, 4.
  static std::shared_ptr<const Alphabet> Chemical() {
    static const auto kChemical = std::make_shared<const Alphabet>(
        std::vector<std::string>{"O", "N", "C"}, std::vector<int>{2, 3, 4});
    return kChemical;
  }

  int size() const { return static_cast<int>(symbols_.size()); }
  const std::string& symbol(int c) const { return symbols_.at(c); }
  int valence(int c) const { return valences_.at(c); }
  Color color(int c) const { return Color{symbols_.at(c), c}; }

  std::optional<int> find(std::string_view symbol) const {
    for (int i = 0; i < size(); ++i) {
      if (symbols_[i] == symbol) return i;
    }
    return std::nullopt;
  }

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> symbols_;
  std::vector<int> valences_;
};

// Graph ----------------------------------------------------------------------

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  int mult = 1;
  bool operator==(const Edge&) const = default;
};

// Vertex-colored multigraph without self-loops. Immutable through the public
// interface; new graphs come from the free functions below.
class ChemicalGraph {
 public:
  ChemicalGraph() : alphabet_(Alphabet::Chemical()) {}

  ChemicalGraph(std::shared_ptr<const Alphabet> alphabet,
                std::vector<int> colors, int max_mult)
      : alphabet_(std::move(alphabet)),
        n_(static_cast<int>(colors.size())),
        max_mult_(max_mult),
        colors_(std::move(colors)),
        mul_(static_cast<size_t>(n_) * n_, 0),
        deg_(n_, 0) {
    if (max_mult_ < 1 || max_mult_ > 255) {
      throw Error("max multiplicity must lie in [1, 255]");
    }
    for (int c : colors_) {
      if (c < 0 || c >= alphabet_->size()) {
        throw IndexOutOfRange("color index out of range");
      }
    }
  }

  // Builds and validates a graph from an edge list.
  static ChemicalGraph FromEdges(std::shared_ptr<const Alphabet> alphabet,
                                 std::vector<int> colors,
                                 std::span<const Edge> edges, int max_mult) {
    ChemicalGraph g(std::move(alphabet), std::move(colors), max_mult);
    for (const Edge& e : edges) {
      g.CheckPair(e.u, e.v);
      if (g.mul(e.u, e.v) != 0) throw DuplicateEdge("duplicate edge");
      if (e.mult < 1 || e.mult > max_mult) {
        throw MultiplicityOverflow("edge multiplicity outside [1, d]");
      }
      g.Set(e.u, e.v, e.mult);
    }
    return g;
  }

  int n() const { return n_; }
  int max_mult() const { return max_mult_; }
  const std::shared_ptr<const Alphabet>& alphabet() const { return alphabet_; }
  int color(Vertex v) const { return colors_[v]; }
  const std::vector<int>& colors() const { return colors_; }
  int mul(Vertex u, Vertex v) const { return mul_[Index(u, v)]; }
  int deg(Vertex v) const { return deg_[v]; }
  int valence(Vertex v) const { return alphabet_->valence(colors_[v]); }
  int res(Vertex v) const { return valence(v) - deg_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return mul(u, v) > 0; }
  bool valid_vertex(Vertex v) const { return v >= 0 && v < n_; }

  std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex w = 0; w < n_; ++w) {
      if (mul(v, w) > 0) out.push_back(w);
    }
    return out;
  }

  int simple_degree(Vertex v) const {
    int k = 0;
    for (Vertex w = 0; w < n_; ++w) k += mul(v, w) > 0;
    return k;
  }

  int adjacent_pair_count() const {
    int k = 0;
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = u + 1; v < n_; ++v) k += mul(u, v) > 0;
    }
    return k;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = u + 1; v < n_; ++v) {
        if (mul(u, v) > 0) out.push_back({u, v, mul(u, v)});
      }
    }
    return out;
  }

  bool connected() const {
    if (n_ == 0) return true;
    std::vector<char> seen(n_, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w = 0; w < n_; ++w) {
        if (!seen[w] && mul(v, w) > 0) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == n_;
  }

  bool valences_respected() const {
    for (Vertex v = 0; v < n_; ++v) {
      if (res(v) < 0) return false;
    }
    return true;
  }

  // Labeled equality: same colors and multiplicities.
  bool operator==(const ChemicalGraph& o) const {
    return colors_ == o.colors_ && mul_ == o.mul_ &&
           *alphabet_ == *o.alphabet_;
  }

 private:
  friend ChemicalGraph add_edges(const ChemicalGraph&, Vertex, Vertex, int);
  friend ChemicalGraph remove_edge_bundle(const ChemicalGraph&, Vertex,
                                          Vertex);
  friend ChemicalGraph with_max_mult(const ChemicalGraph&, int);

  size_t Index(Vertex u, Vertex v) const {
    return static_cast<size_t>(u) * n_ + v;
  }

  void CheckPair(Vertex u, Vertex v) const {
    if (!valid_vertex(u) || !valid_vertex(v)) {
      throw IndexOutOfRange("vertex index out of range");
    }
    if (u == v) throw SelfLoop("self-loop");
  }

  void Set(Vertex u, Vertex v, int m) {
    int old = mul_[Index(u, v)];
    mul_[Index(u, v)] = static_cast<uint8_t>(m);
    mul_[Index(v, u)] = static_cast<uint8_t>(m);
    deg_[u] += m - old;
    deg_[v] += m - old;
  }

  std::shared_ptr<const Alphabet> alphabet_;
  int n_ = 0;
  int max_mult_ = 1;
  std::vector<int> colors_;
  std::vector<uint8_t> mul_;
  std::vector<int> deg_;
};

// Returns g with p parallel edges added between u and v.
inline ChemicalGraph add_edges(const ChemicalGraph& g, Vertex u, Vertex v,
                               int p) {
  g.CheckPair(u, v);
  if (p < 1 || g.mul(u, v) + p > g.max_mult()) {
    throw MultiplicityOverflow("multiplicity would leave [1, d]");
  }
  ChemicalGraph h = g;
  h.Set(u, v, g.mul(u, v) + p);
  return h;
}

// Returns g with every edge between u and v removed.
inline ChemicalGraph remove_edge_bundle(const ChemicalGraph& g, Vertex u,
                                        Vertex v) {
  g.CheckPair(u, v);
  if (g.mul(u, v) == 0) throw NotAdjacent("vertices are not adjacent");
  ChemicalGraph h = g;
  h.Set(u, v, 0);
  return h;
}

// Same graph with a different multiplicity cap.
inline ChemicalGraph with_max_mult(const ChemicalGraph& g, int d) {
  for (const Edge& e : g.edges()) {
    if (e.mult > d) throw MultiplicityOverflow("edge exceeds new cap");
  }
  ChemicalGraph h = g;
  h.max_mult_ = d;
  return h;
}

// Rooted trees ---------------------------------------------------------------

// Ordered rooted tree. Node 0 is the root; nodes are in preorder.
struct RootedTree {
  std::vector<Vertex> vertex;  // node -> graph vertex
  std::vector<int> color;
  std::vector<int> parent;       // -1 at the root
  std::vector<int> parent_mult;  // 0 at the root
  std::vector<int> depth;
  std::vector<std::vector<int>> children;

  int size() const { return static_cast<int>(vertex.size()); }

  // Node index of a graph vertex, or -1.
  int node_of(Vertex v) const {
    for (int i = 0; i < size(); ++i) {
      if (vertex[i] == v) return i;
    }
    return -1;
  }

  // Nodes of the subtree rooted at node i, in preorder.
  std::vector<int> subtree_nodes(int i) const {
    std::vector<int> out;
    std::vector<int> stack{i};
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      out.push_back(a);
      for (auto it = children[a].rbegin(); it != children[a].rend(); ++it) {
        stack.push_back(*it);
      }
    }
    return out;
  }
};

// Tree spanned by `root` and the vertices reachable from it through vertices
// with allowed[w] set. Children are visited in increasing vertex order.
inline RootedTree rooted_tree(const ChemicalGraph& g, Vertex root,
                              const std::vector<char>& allowed) {
  RootedTree t;
  std::vector<char> seen(g.n(), 0);
  struct Frame {
    Vertex v;
    int parent;
    int mult;
    int depth;
  };
  std::vector<Frame> stack{{root, -1, 0, 0}};
  seen[root] = 1;
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    int id = t.size();
    t.vertex.push_back(f.v);
    t.color.push_back(g.color(f.v));
    t.parent.push_back(f.parent);
    t.parent_mult.push_back(f.mult);
    t.depth.push_back(f.depth);
    t.children.emplace_back();
    if (f.parent >= 0) t.children[f.parent].push_back(id);
    for (Vertex w = g.n() - 1; w >= 0; --w) {
      if (!seen[w] && allowed[w] && g.mul(f.v, w) > 0) {
        seen[w] = 1;
        stack.push_back({w, id, g.mul(f.v, w), f.depth + 1});
      }
    }
  }
  return t;
}

// Leaf-stripping core: vertices that survive repeated removal of vertices of
// simple degree at most one.
inline std::vector<char> two_core(const ChemicalGraph& g) {
  std::vector<char> alive(g.n(), 1);
  std::vector<int> degree(g.n());
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < g.n(); ++v) {
    degree[v] = g.simple_degree(v);
    if (degree[v] <= 1) queue.push_back(v);
  }
  while (!queue.empty()) {
    Vertex v = queue.back();
    queue.pop_back();
    if (!alive[v]) continue;
    alive[v] = 0;
    for (Vertex w = 0; w < g.n(); ++w) {
      if (alive[w] && g.mul(v, w) > 0 && --degree[w] <= 1) queue.push_back(w);
    }
  }
  return alive;
}

// Pendent trees hanging off a set of core vertices.
inline std::vector<RootedTree> pendent_trees(const ChemicalGraph& g,
                                             const std::vector<Vertex>& roots,
                                             const std::vector<char>& core) {
  std::vector<RootedTree> out;
  out.reserve(roots.size());
  std::vector<char> allowed(g.n());
  for (Vertex v = 0; v < g.n(); ++v) allowed[v] = !core[v];
  for (Vertex r : roots) out.push_back(rooted_tree(g, r, allowed));
  return out;
}

// Monocyclic view --------------------------------------------------------------

struct MonocyclicView {
  int n = 0;
  std::vector<Vertex> cycle;         // v_0 .. v_{k-1} in cyclic order
  std::vector<int> cycle_pos;        // vertex -> position on the cycle or -1
  std::vector<RootedTree> pendent;   // pendent tree per cycle position
  std::vector<Vertex> rho;           // vertex -> root of its pendent tree

  int cycle_length() const { return static_cast<int>(cycle.size()); }
  int pendent_size(int pos) const { return pendent[pos].size(); }
  Vertex at(int pos) const {
    int k = cycle_length();
    return cycle[((pos % k) + k) % k];
  }
};

namespace internal {

inline void fill_rho(MonocyclicView& view) {
  view.rho.assign(view.n, -1);
  for (const RootedTree& t : view.pendent) {
    for (Vertex w : t.vertex) view.rho[w] = t.vertex[0];
  }
}

}  // namespace internal

// Rebuilds a view with the cycle listed from `anchor_pos`, stepping first
// towards the anchor's lower-index cycle neighbour.
inline MonocyclicView reanchor(const MonocyclicView& view, int anchor_pos) {
  int k = view.cycle_length();
  Vertex prev = view.at(anchor_pos - 1);
  Vertex next = view.at(anchor_pos + 1);
  int step = next <= prev ? 1 : -1;
  MonocyclicView out;
  out.n = view.n;
  out.cycle_pos.assign(view.n, -1);
  for (int i = 0; i < k; ++i) {
    int src = ((anchor_pos + step * i) % k + k) % k;
    out.cycle.push_back(view.cycle[src]);
    out.pendent.push_back(view.pendent[src]);
    out.cycle_pos[view.cycle[src]] = i;
  }
  out.rho = view.rho;
  return out;
}

// Cycle and pendent trees of a monocyclic graph. The cycle starts at its
// lowest-index vertex and continues to that vertex's lower-index neighbour.
inline MonocyclicView find_unique_cycle(const ChemicalGraph& g) {
  if (g.n() < 3 || g.adjacent_pair_count() != g.n() || !g.connected()) {
    throw NotMonocyclic("graph is not monocyclic");
  }
  std::vector<char> core = two_core(g);
  std::vector<Vertex> members;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (core[v]) members.push_back(v);
  }
  MonocyclicView view;
  view.n = g.n();
  view.cycle_pos.assign(g.n(), -1);
  Vertex start = members.front();
  Vertex prev = -1;
  Vertex cur = start;
  do {
    view.cycle_pos[cur] = static_cast<int>(view.cycle.size());
    view.cycle.push_back(cur);
    Vertex next = -1;
    for (Vertex w = 0; w < g.n(); ++w) {
      if (core[w] && w != prev && g.mul(cur, w) > 0) {
        next = w;
        break;
      }
    }
    prev = cur;
    cur = next;
  } while (cur != start);
  // Walk started towards the lower-index neighbour because of the ascending
  // scan above.
  view.pendent = pendent_trees(g, view.cycle, core);
  internal::fill_rho(view);
  return view;
}

inline bool is_exceeding(const MonocyclicView& view, Vertex v) {
  int pos = view.cycle_pos.at(v);
  if (pos < 0) throw InvalidPair("vertex is not on the cycle");
  return 3 * view.pendent_size(pos) >= view.n;
}

// Mono-block view ------------------------------------------------------------

struct MonoBlockView {
  int n = 0;
  std::array<Vertex, 2> junctions{};             // ascending
  std::array<std::vector<Vertex>, 3> paths;      // junction[0] -> junction[1]
  std::vector<std::pair<Vertex, Vertex>> junction_pairs;
  std::vector<char> in_block;
  std::vector<RootedTree> pendent;               // per vertex, empty if none
  std::vector<Vertex> rho;

  // Cycle C_i avoids path i: vertices of the other two paths.
  std::vector<Vertex> cycle(int i) const {
    const auto& a = paths[(i + 1) % 3];
    const auto& b = paths[(i + 2) % 3];
    std::vector<Vertex> out(a.begin(), a.end());
    for (auto it = b.rbegin() + 1; it + 1 != b.rend(); ++it) out.push_back(*it);
    return out;
  }
  bool is_junction(Vertex v) const {
    return v == junctions[0] || v == junctions[1];
  }
};

inline MonoBlockView mono_block_view(const ChemicalGraph& g) {
  if (g.adjacent_pair_count() != g.n() + 1 || !g.connected()) {
    throw NotMonoBlock2Aug("graph is not a mono-block 2-augmented tree");
  }
  std::vector<char> core = two_core(g);
  auto core_degree = [&](Vertex v) {
    int k = 0;
    for (Vertex w = 0; w < g.n(); ++w) k += core[w] && g.mul(v, w) > 0;
    return k;
  };
  std::vector<Vertex> junctions;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!core[v]) continue;
    int k = core_degree(v);
    if (k == 3) {
      junctions.push_back(v);
    } else if (k != 2) {
      throw NotMonoBlock2Aug("block has a vertex of degree above three");
    }
  }
  if (junctions.size() != 2) {
    throw NotMonoBlock2Aug("block does not have exactly two junctions");
  }
  MonoBlockView view;
  view.n = g.n();
  view.junctions = {junctions[0], junctions[1]};
  int idx = 0;
  for (Vertex first = 0; first < g.n(); ++first) {
    if (!core[first] || g.mul(junctions[0], first) == 0) continue;
    std::vector<Vertex> path{junctions[0]};
    Vertex prev = junctions[0];
    Vertex cur = first;
    while (cur != junctions[0] && cur != junctions[1]) {
      path.push_back(cur);
      Vertex next = -1;
      for (Vertex w = 0; w < g.n(); ++w) {
        if (core[w] && w != prev && g.mul(cur, w) > 0) {
          next = w;
          break;
        }
      }
      prev = cur;
      cur = next;
    }
    if (cur != junctions[1]) {
      throw NotMonoBlock2Aug("junction paths do not meet");
    }
    path.push_back(cur);
    view.paths[idx++] = std::move(path);
  }
  std::vector<Vertex> block;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (core[v]) block.push_back(v);
  }
  view.in_block = core;
  std::vector<RootedTree> trees = pendent_trees(g, block, core);
  view.pendent.assign(g.n(), RootedTree{});
  view.rho.assign(g.n(), -1);
  for (size_t i = 0; i < block.size(); ++i) {
    for (Vertex w : trees[i].vertex) view.rho[w] = block[i];
    view.pendent[block[i]] = std::move(trees[i]);
  }
  for (int j = 0; j < 2; ++j) {
    Vertex u = view.junctions[j];
    for (int i = 0; i < 3; ++i) {
      const auto& p = view.paths[i];
      Vertex w = j == 0 ? p[1] : p[p.size() - 2];
      std::pair<Vertex, Vertex> pr{std::min(u, w), std::max(u, w)};
      if (std::find(view.junction_pairs.begin(), view.junction_pairs.end(),
                    pr) == view.junction_pairs.end()) {
        view.junction_pairs.push_back(pr);
      }
    }
  }
  std::sort(view.junction_pairs.begin(), view.junction_pairs.end());
  return view;
}

inline bool is_monocyclic(const ChemicalGraph& g) {
  return g.n() >= 3 && g.adjacent_pair_count() == g.n() && g.connected();
}

inline bool is_mono_block(const ChemicalGraph& g) {
  try {
    mono_block_view(g);
    return true;
  } catch (const NotMonoBlock2Aug&) {
    return false;
  }
}

}  // namespace enum2aug

#endif  // ENUM2AUG_GRAPH_HPP_
