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

#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "orthograph/graph.hpp"
#include "orthograph/vertex_set.hpp"

namespace orthograph {

/// A finite family of vertex sets ordered by inclusion.
///
/// Elements are kept in canonical order (cardinality, then bitmask), which is
/// also a linear extension of inclusion. Covers, ranks and height are computed
/// once at construction. The closed-set lattice of a graph, its relative
/// lattices and the intermediate lattice of an extension all use this type.
class SetLattice {
 public:
  SetLattice() = default;

  /// Deduplicates and sorts `sets`. Every member must lie in `universe`.
  static SetLattice from_family(VertexSet universe, std::vector<VertexSet> sets);

  VertexSet universe() const { return universe_; }
  std::size_t size() const { return sets_.size(); }
  const std::vector<VertexSet>& sets() const { return sets_; }
  VertexSet operator[](int i) const { return sets_.at(i); }

  std::optional<int> index_of(VertexSet s) const;
  bool contains(VertexSet s) const { return index_of(s).has_value(); }

  /// Cover pairs (lower, upper) as indices, sorted.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<int>& upper_covers(int i) const { return up_.at(i); }
  const std::vector<int>& lower_covers(int i) const { return down_.at(i); }

  /// Length of the longest chain ending at element i.
  int rank(int i) const { return rank_.at(i); }
  /// Length of the longest strictly ascending chain.
  int height() const { return height_; }

  /// Index of the unique least / greatest element, or -1 if there is none.
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  /// Greatest member below both arguments. Both must be members.
  VertexSet meet(VertexSet a, VertexSet b) const;
  /// Least member above both arguments. Both must be members.
  VertexSet join(VertexSet a, VertexSet b) const;

  bool operator==(const SetLattice& other) const {
    return universe_ == other.universe_ && sets_ == other.sets_;
  }

 private:
  VertexSet universe_;
  std::vector<VertexSet> sets_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> up_;
  std::vector<std::vector<int>> down_;
  std::vector<int> rank_;
  int height_ = 0;
  int bottom_ = -1;
  int top_ = -1;
};

using ClosedSetLattice = SetLattice;

/// Closes `generators` together with `universe` under pairwise intersection.
SetLattice intersection_closure(VertexSet universe,
                                const std::vector<VertexSet>& generators);

/// All closed subsets of the graph, built as the intersection-closure of the
/// vertex complements together with the full vertex set.
ClosedSetLattice enumerate_closed_sets(const Graph& g);

inline int height(const SetLattice& lattice) { return lattice.height(); }

/// Lattice meet and join on closed sets. Throws Error for non-members.
VertexSet meet(const SetLattice& lattice, VertexSet a, VertexSet b);
VertexSet join(const SetLattice& lattice, VertexSet a, VertexSet b);

/// The complement map restricted to closed sets. Throws Error for non-members.
VertexSet ortho_dual(const Graph& g, const ClosedSetLattice& lattice, VertexSet y);

/// The graph with its kernel removed and the lattice bijection Y -> Y \ kernel.
struct KernelStrip {
  VertexSet kernel;
  InducedSubgraph core;
  ClosedSetLattice original;
  ClosedSetLattice reduced;  // in the core's own indexing
  /// Pairs (Y, image of Y) in the canonical order of `original`; images are
  /// expressed in the core's indexing.
  std::vector<std::pair<VertexSet, VertexSet>> correspondence;
};

KernelStrip strip_kernel(const Graph& g);

/// Closed sets of the full subgraph on `z`, expressed as subsets of `z` in the
/// parent's indexing.
ClosedSetLattice relative_lattice(const Graph& g, VertexSet z);

/// A closed set J is realisable when its relative lattice consists exactly of
/// the closed sets of the whole graph lying inside J. Decided by testing, for
/// every vertex s outside J, whether s's complement cut down to J is itself a
/// closed set of the subgraph on J. Throws Error if J is not closed.
bool is_realisable(const Graph& g, VertexSet j);

/// The defining comparison of the two lattices, without the vertex-wise test.
bool realisable_by_definition(const Graph& g, VertexSet j);

/// An order isomorphism from `a` onto `b` as an index map, if one exists.
std::optional<std::vector<int>> find_poset_isomorphism(const SetLattice& a,
                                                       const SetLattice& b);

inline bool poset_isomorphic(const SetLattice& a, const SetLattice& b) {
  return find_poset_isomorphism(a, b).has_value();
}

/// Every maximal chain, as index lists from bottom to top. Throws CapExceeded
/// past `limit` chains.
std::vector<std::vector<int>> maximal_chains(const SetLattice& lattice,
                                             std::size_t limit = 1'000'000);

}  // namespace orthograph
