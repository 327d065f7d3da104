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

#include <random>

#include "oracles.hpp"
#include "orthograph/error.hpp"
#include "orthograph/inflation.hpp"
#include "orthograph/lattice.hpp"
#include "orthograph/ortho.hpp"
#include "orthograph/properties.hpp"
#include "orthograph/sweep.hpp"

namespace orthograph {
namespace {

using oracle::set;

TEST(PerpEquivalence, Examples) {
  const Graph g = oracle::p4();
  EXPECT_FALSE(perp_equivalent(g, set(g, "b"), set(g, "a,b")));
  const Graph k3 = Graph::complete(3);
  EXPECT_TRUE(perp_equivalent(k3, VertexSet{0}, VertexSet{1}));
  for_each_subset(g.vertices(), [&](VertexSet s) {
    EXPECT_TRUE(perp_equivalent(g, s, closure(g, s)));
  });
}

TEST(OEquivalence, Examples) {
  EXPECT_TRUE(o_equivalent(Graph::null(3), VertexSet{0}, VertexSet{1}));
  const Graph star = oracle::star3();
  EXPECT_TRUE(o_equivalent(star, set(star, "x"), set(star, "y")));
  const Graph g = oracle::p4();
  EXPECT_FALSE(o_equivalent(g, set(g, "a"), set(g, "b")));
}

TEST(AbelianClosure, Examples) {
  const Graph k3 = Graph::complete(3);
  EXPECT_EQ(abelian_closure(k3, VertexSet{0}), k3.vertices());
  const Graph g = oracle::p4();
  EXPECT_EQ(abelian_closure(g, set(g, "b")), set(g, "b"));
  EXPECT_EQ(abelian_closure(g, set(g, "b,c")), set(g, "b,c"));
  EXPECT_THROW(abelian_closure(g, set(g, "a,c")), Error);
}

TEST(AbelianClosure, MatchesOracle) {
  for (int n = 0; n <= 5; ++n) {
    for (std::uint64_t mask = 0; mask < labelled_graph_count(n); ++mask) {
      const Graph g = graph_from_edge_mask(n, mask);
      for_each_subset(g.vertices(), [&](VertexSet s) {
        if (!oracle::is_simplex(g, s.bits())) return;
        EXPECT_EQ(abelian_closure(g, s).bits(), oracle::abelian_closure(g, s.bits()));
      });
    }
  }
}

TEST(FreeClosure, Examples) {
  const Graph n3 = Graph::null(3);
  EXPECT_EQ(free_closure(n3, VertexSet{0, 1}), n3.vertices());
  const Graph g = oracle::p4();
  EXPECT_EQ(free_closure(g, set(g, "a,c")).bits(), oracle::free_closure(g, set(g, "a,c").bits()));
  EXPECT_THROW(free_closure(g, set(g, "a,b")), Error);
}

TEST(FreeClosure, UnionNeedNotBeFree) {
  // K2 plus an isolated vertex: {0,2} and {1,2} share the empty punctured
  // complement but 0-1 is an edge.
  const Graph g = Graph::build(3, {{0, 1}});
  const VertexSet fcl = free_closure(g, VertexSet{0, 2});
  EXPECT_EQ(fcl, g.vertices());
  EXPECT_FALSE(is_free_co_simplex(g, fcl));
  EXPECT_TRUE(is_free_co_simplex(g, VertexSet{1, 2}));
  EXPECT_TRUE(o_equivalent(g, VertexSet{0, 2}, VertexSet{1, 2}));
}

TEST(FreeClosure, MatchesOracle) {
  for (int n = 0; n <= 5; ++n) {
    for (std::uint64_t mask = 0; mask < labelled_graph_count(n); ++mask) {
      const Graph g = graph_from_edge_mask(n, mask);
      for_each_subset(g.vertices(), [&](VertexSet a) {
        if (a.empty() || !is_free_co_simplex(g, a)) return;
        const VertexSet fcl = free_closure(g, a);
        EXPECT_EQ(fcl.bits(), oracle::free_closure(g, a.bits()));
        EXPECT_TRUE(a.is_subset_of(fcl));
        if (is_free_co_simplex(g, fcl)) EXPECT_EQ(free_closure(g, fcl), fcl);
      });
    }
  }
}

TEST(Inflate, Examples) {
  const Graph k2 = Graph::complete(2);
  EXPECT_TRUE(elementary_inflate(k2, InflationKind::kAbelian, k2.vertices())
                  .same_structure(Graph::complete(3)));
  const Graph g = oracle::p4();
  const Graph h = elementary_inflate(g, InflationKind::kAbelian, set(g, "b"));
  EXPECT_EQ(perp(h, VertexSet::singleton(4)), perp(h, set(g, "b")));
  EXPECT_TRUE(poset_isomorphic(enumerate_closed_sets(g), enumerate_closed_sets(h)));
  const Graph n2 = Graph::null(2);
  EXPECT_TRUE(elementary_inflate(n2, InflationKind::kFree, n2.vertices())
                  .same_structure(Graph::null(3)));
  EXPECT_THROW(elementary_inflate(g, InflationKind::kAbelian, set(g, "a,c")), Error);
  EXPECT_THROW(elementary_inflate(g, InflationKind::kFree, set(g, "a,b")), Error);
}

TEST(Inflate, ParseKind) {
  EXPECT_EQ(parse_inflation_kind("abelian"), InflationKind::kAbelian);
  EXPECT_EQ(parse_inflation_kind("free"), InflationKind::kFree);
  EXPECT_THROW(parse_inflation_kind("other"), Error);
}

TEST(Deflate, Examples) {
  const auto k3 = elementary_deflate(Graph::complete(3), InflationKind::kAbelian, 0);
  ASSERT_TRUE(k3.has_value());
  EXPECT_TRUE(k3->graph.same_structure(Graph::complete(2)));
  EXPECT_EQ(k3->witness, (VertexSet{1, 2}));

  const auto n3 = elementary_deflate(Graph::null(3), InflationKind::kFree, 0);
  ASSERT_TRUE(n3.has_value());
  EXPECT_TRUE(n3->graph.same_structure(Graph::null(2)));
  EXPECT_EQ(n3->witness, (VertexSet{1, 2}));

  const Graph g = oracle::p4();
  EXPECT_FALSE(elementary_deflate(g, InflationKind::kAbelian, 0).has_value());
}

TEST(Deflate, UndoesInflation) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(1 + trial % 5, 0.5, rng);
    for_each_subset(g.vertices(), [&](VertexSet s) {
      if (s.empty() || !is_simplex(g, s)) return;
      const Graph h = elementary_inflate(g, InflationKind::kAbelian, s);
      const auto d = elementary_deflate(h, InflationKind::kAbelian, g.size());
      ASSERT_TRUE(d.has_value());
      EXPECT_TRUE(d->graph.same_structure(g));
      EXPECT_EQ(perp(h, d->witness), perp(h, VertexSet::singleton(g.size())));
    });
  }
}

TEST(InflationInvariance, Sequences) {
  EXPECT_TRUE(verify_inflation_invariance(oracle::p4(), {}));
  EXPECT_TRUE(verify_inflation_invariance(Graph::complete(2),
                                          {VertexSet{0, 1}, VertexSet{0, 1, 2}}));
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = random_graph(1 + trial % 5, 0.5, rng);
    const oracle::Family before = oracle::closed_sets(g);
    Graph h = g;
    std::vector<VertexSet> steps;
    for (int step = 0; step < 3; ++step) {
      std::vector<VertexSet> simplices;
      for_each_subset(h.vertices(), [&](VertexSet s) {
        if (!s.empty() && is_simplex(h, s)) simplices.push_back(s);
      });
      const VertexSet s = simplices[rng() % simplices.size()];
      steps.push_back(s);
      h = elementary_inflate(h, InflationKind::kAbelian, s);
    }
    EXPECT_TRUE(verify_inflation_invariance(g, steps));
    EXPECT_TRUE(oracle::poset_isomorphic(before, oracle::closed_sets(h)));
  }
}

}  // namespace
}  // namespace orthograph
