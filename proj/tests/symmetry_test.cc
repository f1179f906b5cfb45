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

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace enum2aug {
namespace {

using testing::chem;
using testing::chiral_ring_with_chain;
using testing::children_over_all_pairs;
using testing::isomorphic;
using testing::make_graph;

// Every child of g from S(G) is distinct, and together they cover every
// child class reachable from any non-adjacent pair.
void expect_proper(const ChemicalGraph& g, int d) {
  std::vector<ChildRecord> kids = enumerate_children(g, d);
  std::set<CanonicalCode> from_s;
  for (const ChildRecord& c : kids) {
    ASSERT_TRUE(from_s.insert(canonical_code(c.graph, 16)).second)
        << "collision at " << c.provenance.x << ',' << c.provenance.y
        << " p=" << c.provenance.p;
  }
  ASSERT_EQ(from_s, children_over_all_pairs(g, d));
}

RootedTree star_with_equal_leaves() {
  RootedTree t;
  t.vertex = {0, 1, 2, 3};
  t.color = {2, 2, 2, 2};
  t.parent = {-1, 0, 0, 0};
  t.parent_mult = {0, 1, 1, 1};
  t.depth = {0, 1, 1, 1};
  t.children = {{1, 2, 3}, {}, {}, {}};
  return t;
}

TEST(CopyLabels, EqualSiblingsAfterTheFirst) {
  RootedTree t = star_with_equal_leaves();
  std::vector<int> copy = compute_copy_labels(t, subtree_signatures(t));
  // Any one of the equal leaves may carry label 0.
  EXPECT_EQ(copy[0], 0);
  EXPECT_EQ(copy[1] + copy[2] + copy[3], 2);
  EXPECT_EQ(orbit_representatives(t, copy).size(), 1u);
  t.parent_mult[3] = 2;
  copy = compute_copy_labels(t, subtree_signatures(t));
  EXPECT_EQ(orbit_representatives(t, copy).size(), 2u);
}

// Orbit of a node under rooted automorphisms, as the signature of the tree
// with that node recolored.
Signature marked_signature(RootedTree t, int node) {
  t.color[node] = 99;
  return tree_signature(t);
}

TEST(OrbitRepresentatives, OnePerOrbit) {
  for (int d = 1; d <= 2; ++d) {
    for (const ChemicalGraph& g :
         brute_force_enumerate(chem(), 7, d, GraphClass::kMonocyclic)) {
      AnchoredGraph a = anchor_graph(g);
      if (!a.has_anchor) continue;
      const RootedTree& t = a.anchor_tree();
      std::set<Signature> orbits;
      for (int u = 1; u < t.size(); ++u) orbits.insert(marked_signature(t, u));
      std::set<Signature> covered;
      for (int u : orbit_representatives(t, compute_copy_labels(a))) {
        ASSERT_TRUE(covered.insert(marked_signature(t, u)).second);
      }
      ASSERT_EQ(covered, orbits);
    }
  }
}

TEST(AxialSymmetry, TriangleWithChain) {
  ChemicalGraph g = make_graph(
      "CCCCC", {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {0, 3, 1}, {3, 4, 1}}, 1);
  AnchoredGraph a = anchor_graph(g);
  auto w = detect_axial_symmetry(a);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->image[0], 0);
  EXPECT_EQ(w->image[1], 2);
  EXPECT_EQ(potential_edge_set(a).kind, SymmetryCase::kAxial);
}

TEST(AxialSymmetry, AlternatingBondsBreakIt) {
  AnchoredGraph a = anchor_graph(chiral_ring_with_chain());
  EXPECT_FALSE(detect_axial_symmetry(a).has_value());
  EXPECT_EQ(potential_edge_set(a).kind, SymmetryCase::kNonAxial);
}

TEST(RotationalSymmetry, ShiftsOfTheAlternatingRing) {
  ChemicalGraph g = chiral_ring_with_chain();
  AnchoredGraph a = anchor_graph(g);
  const RootedTree& t = a.anchor_tree();
  const int q = t.node_of(6);
  auto w = detect_rotational_symmetry(a, q, q);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->shifts, (std::vector<int>{2, 4}));
  EXPECT_EQ(w->shift, 2);
  const int k = a.view.cycle_length();
  for (int i = 0; i < k; ++i) {
    EXPECT_EQ(g.mul(a.view.at(i), a.view.at(i + 1)),
              g.mul(w->cycle_map[i], w->cycle_map[(i + 1) % k]));
  }
  // G<q> is the edge 6-7, so rooting it at 7 gives the same rooted tree.
  auto at_leaf = detect_rotational_symmetry(a, q, t.node_of(7));
  ASSERT_TRUE(at_leaf.has_value());
  EXPECT_EQ(at_leaf->tree_map.size(), 2u);
  EXPECT_THROW(detect_rotational_symmetry(a, t.node_of(7), q), InvalidPair);
}

TEST(PotentialEdgeSet, EmptyWithoutExceedingAnchor) {
  ChemicalGraph ring = make_graph("CCCCCCC", {{0, 1, 1},
                                              {1, 2, 1},
                                              {2, 3, 1},
                                              {3, 4, 1},
                                              {4, 5, 1},
                                              {0, 5, 1},
                                              {0, 6, 1}});
  EXPECT_EQ(potential_edge_set(anchor_graph(ring)).kind,
            SymmetryCase::kNoChildren);
  ChemicalGraph bare = make_graph("CCC", {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  EXPECT_TRUE(potential_edge_set(anchor_graph(bare)).edges.empty());
}

TEST(PotentialEdgeSet, TwinAnnotationsOnRotations) {
  AnchoredGraph a = anchor_graph(chiral_ring_with_chain());
  PotentialEdgeSet s = potential_edge_set(a);
  int twins = 0;
  for (const PotentialEdge& e : s.edges) {
    if (e.twin_x < 0) continue;
    ++twins;
    EXPECT_EQ(e.twin_mult, 1);
    int i = a.view.cycle_pos[e.x];
    EXPECT_EQ(a.view.cycle_pos[e.twin_x], a.view.cycle_length() - i);
  }
  EXPECT_GT(twins, 0);
  expect_proper(chiral_ring_with_chain(), 2);
}

// Regression seed from the eight-carbon corpus: the twin test must use the
// shift k - i itself, not the least valid shift.
TEST(PotentialEdgeSet, RotationWithSeveralShifts) {
  ChemicalGraph g = make_graph("CCCCCCCC", {{0, 1, 1},
                                            {0, 2, 2},
                                            {0, 3, 1},
                                            {1, 4, 2},
                                            {2, 4, 1},
                                            {3, 5, 1},
                                            {5, 6, 2},
                                            {6, 7, 1}},
                               2);
  expect_proper(g, 2);
}

TEST(Properness, AllSeedsUpToSixVertices) {
  for (int n = 3; n <= 6; ++n) {
    for (int d = 1; d <= 2; ++d) {
      for (const ChemicalGraph& g :
           brute_force_enumerate(chem(), n, d, GraphClass::kMonocyclic)) {
        expect_proper(g, d);
      }
    }
  }
}

TEST(Properness, CarbonSeedsWithEightVertices) {
  auto carbon = std::make_shared<const Alphabet>(
      std::vector<std::string>{"C"}, std::vector<int>{4});
  int seeds = 0;
  for (const ChemicalGraph& g :
       brute_force_enumerate(carbon, 8, 2, GraphClass::kMonocyclic)) {
    expect_proper(g, 2);
    ++seeds;
  }
  EXPECT_GT(seeds, 1000);
}

}  // namespace
}  // namespace enum2aug
