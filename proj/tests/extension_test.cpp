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
#include "orthograph/extension.hpp"
#include "orthograph/ortho.hpp"
#include "orthograph/sweep.hpp"

namespace orthograph {
namespace {

using oracle::set;

std::vector<VertexSet> sets_of(const Graph& g, std::initializer_list<const char*> names) {
  std::vector<VertexSet> out;
  for (const char* n : names) out.push_back(set(g, n));
  return out;
}

TEST(Extension, PathWithLinkAC) {
  const Graph g = oracle::p4();
  const ExtensionAnalysis a = analyze_extension(g, set(g, "a,c"));
  EXPECT_EQ(a.height_base(), 4);
  EXPECT_EQ(a.height_tilde(), 4);
  EXPECT_EQ(a.height_extended(), 4);
  EXPECT_EQ(oracle::family(a.tilde().new_sets), oracle::family(sets_of(g, {"a,c", "a"})));
  EXPECT_EQ(a.tilde().family.size(), 11u);
  EXPECT_EQ(a.extended_lattice().size(), 17u);
  EXPECT_FALSE(a.link_closed());
  EXPECT_FALSE(a.simplex_witness().has_value());
  const GammaVerdict v = gamma_isomorphism_verdict(a);
  EXPECT_FALSE(v.criterion);
  EXPECT_FALSE(v.poset_oracle);
}

TEST(Extension, DroppedVertexReturnsAsNewVertex) {
  const Graph g = oracle::s3();
  const ExtensionAnalysis a = analyze_extension(g, set(g, "b,d"));
  const Graph& gx = a.extended();
  EXPECT_EQ(a.height_base(), 2);
  EXPECT_EQ(a.height_tilde(), 3);
  EXPECT_EQ(a.height_extended(), 4);
  EXPECT_TRUE(poset_isomorphic(a.extended_lattice(), enumerate_closed_sets(oracle::p4())));
  EXPECT_EQ(oracle::family(a.tilde().family.sets()),
            oracle::family(sets_of(g, {"a,b,d", "a,b", "d", "", "b,d", "b"})));

  const DoublingData& d = a.doubling();
  EXPECT_EQ(d.s1, sets_of(g, {"a,b"}));
  EXPECT_EQ(oracle::family(d.s2), oracle::family(sets_of(g, {"", "b"})));
  EXPECT_EQ(oracle::family(d.t), oracle::family(sets_of(gx, {"t", "b,t", "a,b,t"})));
  EXPECT_EQ(a.extended_lattice().size(), 9u);

  EXPECT_EQ(a.apply(MapKind::kBeta, set(g, "d")), set(gx, "d,t"));
  EXPECT_EQ(a.apply(MapKind::kBeta, set(g, "a,b")), set(gx, "a,b"));
  EXPECT_FALSE(gamma_isomorphism_verdict(a).criterion);
  EXPECT_FALSE(is_simplex_complement(g, set(g, "b,d")).has_value());
}

TEST(Extension, CompleteGraphs) {
  const Graph k2 = Graph::complete(2);
  const ExtensionAnalysis a = analyze_extension(k2, k2.vertices());
  EXPECT_EQ(a.height_base(), 0);
  EXPECT_EQ(a.height_extended(), 0);
  EXPECT_TRUE(a.extended().same_structure(Graph::complete(3)));
}

TEST(Extension, InteriorClosure) {
  const Graph g = oracle::p4();
  const VertexSet j = set(g, "a,c");
  EXPECT_EQ(icl(g, j, set(g, "a")), set(g, "a"));
  EXPECT_EQ(icl(g, j, set(g, "a,c")), set(g, "a,c"));
  EXPECT_EQ(icl(g, j, set(g, "b,d")), VertexSet(oracle::closure(g, set(g, "b,d").bits())));
}

TEST(Extension, ClosedLinkLeavesTildeUnchanged) {
  for (std::uint64_t mask = 0; mask < labelled_graph_count(4); ++mask) {
    const Graph g = graph_from_edge_mask(4, mask);
    const ClosedSetLattice l = enumerate_closed_sets(g);
    for (VertexSet j : l.sets()) {
      const ExtensionAnalysis a = analyze_extension(g, j);
      EXPECT_EQ(a.tilde().family, a.lattice());
      EXPECT_TRUE(a.doubling().s1.empty());
    }
  }
}

TEST(Extension, MapsAndFormulas) {
  const Graph g = oracle::p4();
  const ExtensionAnalysis a = analyze_extension(g, set(g, "a,c"));
  const int t = a.new_vertex();
  for (VertexSet z : a.extended_lattice().sets()) {
    EXPECT_EQ(a.apply(MapKind::kGammaBar, z), z.without(t));
    if (!z.contains(t)) EXPECT_EQ(a.apply(MapKind::kGammaBar, z), z);
    EXPECT_EQ(a.apply(MapKind::kGamma, z),
              VertexSet(oracle::closure(g, (z.without(t)).bits())));
  }
  for (VertexSet y : a.tilde().family.sets()) {
    EXPECT_EQ(a.apply(MapKind::kBetaBar, y), a.beta_bar_formula(y));
    EXPECT_EQ(a.apply(MapKind::kGammaBar, a.apply(MapKind::kBetaBar, y)), y);
  }
  for (VertexSet y : a.lattice().sets()) {
    EXPECT_EQ(a.apply(MapKind::kGamma, a.apply(MapKind::kBeta, y)), y);
    EXPECT_EQ(a.apply(MapKind::kGammaTilde, a.apply(MapKind::kBetaTilde, y)), y);
  }
  EXPECT_THROW(a.apply(MapKind::kGamma, set(g, "a,d")), Error);
}

TEST(Extension, LatticesMatchOracles) {
  for (int n = 0; n <= 4; ++n) {
    for (std::uint64_t mask = 0; mask < labelled_graph_count(n); ++mask) {
      const Graph g = graph_from_edge_mask(n, mask);
      for_each_subset(g.vertices(), [&](VertexSet j) {
        const ExtensionAnalysis a = analyze_extension(g, j);
        const oracle::Family bar = oracle::closed_sets(a.extended());
        EXPECT_EQ(oracle::family(a.extended_lattice().sets()), bar);
        oracle::Family tilde = oracle::closed_sets(g);
        for (auto c : oracle::closed_sets(g)) tilde.insert(c & j.bits());
        EXPECT_EQ(oracle::family(a.tilde().family.sets()), tilde);
        EXPECT_EQ(a.height_tilde(), oracle::height(tilde));
        EXPECT_EQ(a.height_extended(), oracle::height(bar));
        EXPECT_EQ(a.extended_lattice().size(), tilde.size() + a.doubling().s.size());
      });
    }
  }
}

TEST(SimplexComplement, Examples) {
  const Graph g = oracle::p4();
  EXPECT_EQ(is_simplex_complement(g, set(g, "a,b,c")), set(g, "b"));
  EXPECT_EQ(is_simplex_complement(g, g.vertices()), VertexSet{});
  const ExtensionAnalysis a = analyze_extension(g, set(g, "a,b,c"));
  const GammaVerdict v = gamma_isomorphism_verdict(a);
  EXPECT_TRUE(v.criterion);
  EXPECT_TRUE(v.poset_oracle);
  EXPECT_TRUE(a.doubling().s.empty());
}

TEST(SimplexComplement, AgreesWithOracleSearch) {
  for (int n = 0; n <= 4; ++n) {
    for (std::uint64_t mask = 0; mask < labelled_graph_count(n); ++mask) {
      const Graph g = graph_from_edge_mask(n, mask);
      for_each_subset(g.vertices(), [&](VertexSet j) {
        bool found = false;
        for_each_subset(g.vertices(), [&](VertexSet s) {
          found = found || (oracle::is_simplex(g, s.bits()) && oracle::perp(g, s.bits()) == j.bits());
        });
        EXPECT_EQ(is_simplex_complement(g, j).has_value(), found);
        const ExtensionAnalysis a = analyze_extension(g, j);
        EXPECT_EQ(found, oracle::poset_isomorphic(oracle::closed_sets(g),
                                                  oracle::closed_sets(a.extended())));
      });
    }
  }
}

TEST(Alpha, ThreeIsolatedVertices) {
  const Graph g = Graph::null(3);
  const VertexSet a_set{0, 1};
  const VertexSet j = perp(g, a_set);
  ASSERT_EQ(j, VertexSet{});
  const ExtensionAnalysis a = analyze_extension(g, j);
  ASSERT_TRUE(a.link_closed());
  const AlphaTransform alpha(a);
  const auto& lb = a.extended_lattice();
  for (const auto& idx : maximal_chains(lb)) {
    std::vector<VertexSet> chain;
    for (int i : idx) chain.push_back(lb[i]);
    const auto image = alpha.apply(chain);
    EXPECT_EQ(image.size(), chain.size());
    EXPECT_TRUE(is_strictly_ascending(image));
    std::vector<VertexSet> projected;
    for (VertexSet z : image) {
      EXPECT_TRUE(alpha.satisfies_split_property(z));
      projected.push_back(a.apply(MapKind::kGamma, z));
    }
    EXPECT_TRUE(is_strictly_ascending(projected));
  }
  EXPECT_TRUE(closed_link_height_check(a));
}

TEST(Alpha, ChainsWithoutNewVertexAreFixed) {
  const Graph g = Graph::null(3);
  const ExtensionAnalysis a = analyze_extension(g, VertexSet{});
  const AlphaTransform alpha(a);
  const std::vector<VertexSet> chain{VertexSet{}, VertexSet{0}};
  EXPECT_EQ(alpha.apply(chain), chain);
}

TEST(Alpha, RejectsSimplexWitness) {
  const Graph g = oracle::p4();
  const ExtensionAnalysis a = analyze_extension(g, set(g, "a,b,c"));
  EXPECT_THROW(AlphaTransform{a}, Error);
  const ExtensionAnalysis open = analyze_extension(g, set(g, "a,c"));
  EXPECT_THROW(AlphaTransform{open}, Error);
}

TEST(ClosedLink, PathAndComplete) {
  const Graph g = oracle::p4();
  EXPECT_TRUE(closed_link_height_check(analyze_extension(g, set(g, "b,c"))));
  const Graph k3 = Graph::complete(3);
  EXPECT_TRUE(closed_link_height_check(analyze_extension(k3, k3.vertices())));
  EXPECT_THROW(closed_link_height_check(analyze_extension(g, set(g, "a,c"))), Error);
}

TEST(CoSimplexDoubling, Examples) {
  const Graph n2 = Graph::null(2);
  const ExtensionAnalysis a = analyze_extension(n2, VertexSet{});
  EXPECT_TRUE(cosimplex_doubling_check(a, n2.vertices()));
  EXPECT_EQ(a.doubling().s2, std::vector<VertexSet>{VertexSet{}});

  const Graph g = oracle::p4();
  const VertexSet j = set(g, "b");
  ASSERT_EQ(perp(g, set(g, "a,c")), j);
  if (is_realisable(g, j)) {
    const ExtensionAnalysis b = analyze_extension(g, j);
    EXPECT_TRUE(cosimplex_doubling_check(b, set(g, "a,c")));
    EXPECT_EQ(oracle::family(b.doubling().s2), oracle::family(sets_of(g, {"", "b"})));
  }
  EXPECT_THROW(cosimplex_doubling_check(a, VertexSet{}), Error);
}

TEST(CoSimplexDoubling, HoldsWheneverRealisable) {
  for (int n = 0; n <= 5; ++n) {
    for (std::uint64_t mask = 0; mask < labelled_graph_count(n); ++mask) {
      const Graph g = graph_from_edge_mask(n, mask);
      for_each_subset(g.vertices(), [&](VertexSet a_set) {
        if (a_set.empty() || a_set.intersects(perp(g, a_set))) return;
        const VertexSet j = perp(g, a_set);
        if (!is_realisable(g, j)) return;
        EXPECT_TRUE(cosimplex_doubling_check(analyze_extension(g, j), a_set));
      });
    }
  }
}

TEST(TildeJoin, MatchesDefinition) {
  const Graph g = oracle::p4();
  const VertexSet j = set(g, "a,c");
  EXPECT_EQ(tilde_join(g, j, set(g, "a"), set(g, "c")), set(g, "a,c"));
  EXPECT_EQ(tilde_join(g, j, set(g, "a"), set(g, "d")), g.vertices());
  EXPECT_EQ(tilde_meet(set(g, "a,b"), set(g, "a,c")), set(g, "a"));
}

}  // namespace
}  // namespace orthograph
