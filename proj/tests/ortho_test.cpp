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
#include "orthograph/ortho.hpp"
#include "orthograph/sweep.hpp"

namespace orthograph {
namespace {

using oracle::set;

TEST(Complement, PathValues) {
  const Graph g = oracle::p4();
  EXPECT_EQ(perp(g, set(g, "a,c")), set(g, "b"));
  EXPECT_EQ(perp(g, set(g, "b,c,d")), set(g, "c"));
  EXPECT_EQ(ortho_complement(g, VertexSet{}, set(g, "a,d")), set(g, "a,d"));
}

TEST(Closure, PathValues) {
  const Graph g = oracle::p4();
  EXPECT_EQ(closure(g, set(g, "a,c")), set(g, "a,b,c"));
  EXPECT_EQ(closure(g, set(g, "a")), set(g, "a,b"));
  EXPECT_EQ(closure(g, g.vertices()), g.vertices());
  EXPECT_TRUE(is_closed(g, set(g, "b")));
  EXPECT_FALSE(is_closed(g, set(g, "a,c")));
  EXPECT_TRUE(is_closed(g, g.vertices()));
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel(Graph::complete(3)), VertexSet::range(3));
  EXPECT_EQ(kernel(oracle::p4()), VertexSet{});
  EXPECT_EQ(kernel(oracle::star3()), VertexSet{0});
}

TEST(Commutes, Examples) {
  const Graph g = oracle::p4();
  EXPECT_TRUE(commutes(g, set(g, "a"), set(g, "b")));
  EXPECT_FALSE(commutes(g, set(g, "a"), set(g, "c")));
  EXPECT_TRUE(commutes(g, set(g, "a,c"), VertexSet{}));
}

TEST(Complement, MatchesOracleOnAllGraphsUpToFive) {
  for (int n = 0; n <= 5; ++n) {
    for (std::uint64_t mask = 0; mask < labelled_graph_count(n); mask += (n == 5 ? 5 : 1)) {
      const Graph g = graph_from_edge_mask(n, mask);
      for_each_subset(g.vertices(), [&](VertexSet y) {
        EXPECT_EQ(perp(g, y).bits(), oracle::perp(g, y.bits()));
        EXPECT_EQ(closure(g, y).bits(), oracle::closure(g, y.bits()));
        const VertexSet z = VertexSet(mask & g.vertices().bits());
        EXPECT_EQ(ortho_complement(g, y, z).bits(), oracle::perp(g, y.bits(), z.bits()));
      });
    }
  }
}

}  // namespace
}  // namespace orthograph
