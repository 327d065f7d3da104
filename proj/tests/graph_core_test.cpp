// Copyright 2026 The Orthograph Authors
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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "orthograph/error.hpp"
#include "orthograph/graph.hpp"
#include "orthograph/sweep.hpp"

namespace orthograph {
namespace {

TEST(GraphBuild, PathFromEdgeList) {
  const Graph g = Graph::build(4, {{0, 1}, {1, 2}, {2, 3}}, {"a", "b", "c", "d"});
  EXPECT_EQ(g.size(), 4);
  EXPECT_EQ(g.edge_count(), 3);
  EXPECT_TRUE(g.same_structure(Graph::path(4)));
  EXPECT_EQ(g.name(2), "c");
  EXPECT_EQ(g.find("d"), 3);
  EXPECT_FALSE(g.find("e").has_value());
}

TEST(GraphBuild, NullAndComplete) {
  EXPECT_EQ(Graph::build(3, {}).edge_count(), 0);
  EXPECT_TRUE(Graph::build(3, {{0, 1}, {0, 2}, {1, 2}}).same_structure(Graph::complete(3)));
  EXPECT_TRUE(Graph::build(2, {{0, 1}, {1, 0}}).same_structure(Graph::complete(2)));
}

TEST(GraphBuild, RejectsBadInput) {
  EXPECT_THROW(Graph::build(2, {{0, 0}}), Error);
  EXPECT_THROW(Graph::build(2, {{0, 2}}), Error);
  EXPECT_THROW(Graph::build(65, {}), Error);
  EXPECT_THROW(Graph::build(2, {}, {"a"}), Error);
}

TEST(Distance, MatchesBreadthFirstSearch) {
  const Graph g = oracle::p4();
  EXPECT_EQ(distance(g, 0, 3), 3);
  EXPECT_EQ(distance(g, 1, 1), 0);
  EXPECT_EQ(distance(Graph::null(2), 0, 1), kInfiniteDistance);
  for (std::uint64_t mask = 0; mask < labelled_graph_count(5); mask += 7) {
    const Graph h = graph_from_edge_mask(5, mask);
    for (int x = 0; x < 5; ++x) {
      for (int y = 0; y < 5; ++y) EXPECT_EQ(distance(h, x, y), oracle::distance(h, x, y));
    }
  }
}

TEST(InducedSubgraph, PathPieces) {
  const Graph g = oracle::p4();
  const InducedSubgraph abc = induced_subgraph(g, oracle::set(g, "a,b,c"));
  EXPECT_TRUE(abc.graph.same_structure(Graph::path(3)));
  EXPECT_EQ(abc.graph.name(2), "c");
  const InducedSubgraph ad = induced_subgraph(g, oracle::set(g, "a,d"));
  EXPECT_TRUE(ad.graph.same_structure(Graph::null(2)));
  EXPECT_EQ(ad.lift(VertexSet{1}), oracle::set(g, "d"));
  EXPECT_EQ(ad.restrict(oracle::set(g, "c,d")), VertexSet{1});
  EXPECT_EQ(induced_subgraph(g, VertexSet{}).graph.size(), 0);
}

TEST(GraphOps, UnionAndJoin) {
  EXPECT_TRUE(disjoint_union(Graph::null(1), Graph::null(1)).same_structure(Graph::null(2)));
  const Graph kk = disjoint_union(Graph::complete(2), Graph::complete(2));
  EXPECT_EQ(kk.edge_count(), 2);
  EXPECT_TRUE(kk.has_edge(0, 1) && kk.has_edge(2, 3));
  const Graph pn = disjoint_union(Graph::path(4), Graph::null(1));
  EXPECT_EQ(pn.size(), 5);
  EXPECT_EQ(pn.degree(4), 0);
  EXPECT_TRUE(join_graphs(Graph::null(1), Graph::null(1)).same_structure(Graph::complete(2)));
  EXPECT_TRUE(join_graphs(Graph::complete(2), Graph::complete(2)).same_structure(Graph::complete(4)));
  EXPECT_TRUE(join_graphs(Graph::null(2), Graph::null(2)).same_structure(
      Graph::build(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}})));
  EXPECT_TRUE(Graph::build(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}})
                  .same_structure(relabel(Graph::cycle(4), {0, 2, 1, 3})));
}

TEST(GraphOps, AdjoinVertex) {
  const Graph s3 = oracle::s3();
  const Graph p = adjoin_vertex(s3, oracle::set(s3, "b,d"));
  // a-b, b-t, t-d: a path with t where c was.
  EXPECT_TRUE(p.same_structure(relabel(Graph::path(4), {0, 1, 3, 2})));
  EXPECT_EQ(p.name(3), "t");
  const Graph k2 = Graph::complete(2);
  EXPECT_TRUE(adjoin_vertex(k2, k2.vertices()).same_structure(Graph::complete(3)));
  const Graph g = Graph::path(3);
  EXPECT_TRUE(adjoin_vertex(g, VertexSet{}).same_structure(disjoint_union(g, Graph::null(1))));
  const Graph named = adjoin_vertex(oracle::named("vertices t\nedges"), VertexSet{});
  EXPECT_EQ(named.name(1), "t'");
}

TEST(GraphOps, DeleteVertexShiftsIndices) {
  const Graph g = delete_vertex(oracle::p4(), 1);
  EXPECT_EQ(g.size(), 3);
  EXPECT_EQ(g.name(1), "c");
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_EQ(g.edge_count(), 1);
}

TEST(SubsetKind, ExamplesOnPath) {
  const Graph g = oracle::p4();
  const SubsetKind bc = classify_subset(g, oracle::set(g, "b,c"));
  EXPECT_TRUE(bc.is_simplex);
  EXPECT_TRUE(bc.is_clique);
  const SubsetKind ac = classify_subset(g, oracle::set(g, "a,c"));
  EXPECT_FALSE(ac.is_simplex);
  EXPECT_TRUE(ac.is_co_simplex);
  EXPECT_TRUE(ac.is_free_co_simplex);
  for (int v = 0; v < 4; ++v) EXPECT_FALSE(is_co_simplex(g, VertexSet::singleton(v)));
}

TEST(SubsetKind, AgreesWithOraclesOnAllSmallGraphs) {
  for (int n = 0; n <= 4; ++n) {
    for (std::uint64_t mask = 0; mask < labelled_graph_count(n); ++mask) {
      const Graph g = graph_from_edge_mask(n, mask);
      for_each_subset(g.vertices(), [&](VertexSet s) {
        const SubsetKind k = classify_subset(g, s);
        const bool co = (s.bits() & oracle::perp(g, s.bits())) == 0;
        EXPECT_EQ(k.is_simplex, oracle::is_simplex(g, s.bits()));
        EXPECT_EQ(k.is_clique, oracle::is_clique(g, s.bits()));
        EXPECT_EQ(k.is_co_simplex, co);
        EXPECT_EQ(k.is_free_co_simplex, co && oracle::is_independent(g, s.bits()));
        if (k.is_clique) {
          EXPECT_TRUE(k.is_simplex);
        }
      });
    }
  }
}

}  // namespace
}  // namespace orthograph
