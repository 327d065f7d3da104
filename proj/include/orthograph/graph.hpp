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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orthograph/vertex_set.hpp"

namespace orthograph {

using Edge = std::pair<int, int>;

/// Finite simple undirected graph on vertices 0..n-1 (n <= 64).
///
/// Immutable once built. Names are presentation only; every algorithm works
/// on dense indices.
class Graph {
 public:
  Graph() = default;

  /// Throws Error on an out-of-range endpoint, a self-loop, or n > 64.
  /// Duplicate edges collapse. `names`, when non-empty, must have n entries.
  static Graph build(int n, const std::vector<Edge>& edges,
                     std::vector<std::string> names = {});
  /// Builds from adjacency rows directly; rows must be symmetric and loop-free.
  static Graph from_adjacency(std::vector<VertexSet> adjacency,
                              std::vector<std::string> names = {});

  static Graph complete(int n);
  static Graph null(int n);
  static Graph path(int n);
  static Graph cycle(int n);
  static Graph star(int leaves);

  int size() const { return static_cast<int>(adj_.size()); }
  VertexSet vertices() const { return VertexSet::range(size()); }
  VertexSet neighbours(int v) const { return adj_.at(v); }
  /// v together with its neighbours: the vertices at distance <= 1 from v.
  VertexSet closed_neighbourhood(int v) const { return adj_.at(v).with(v); }
  bool has_edge(int u, int v) const { return adj_.at(u).contains(v); }
  int degree(int v) const { return adj_.at(v).size(); }
  std::vector<Edge> edges() const;
  int edge_count() const;

  bool has_names() const { return !names_.empty(); }
  /// The stored name, or the decimal index when the graph is unnamed.
  std::string name(int v) const;
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> find(const std::string& name) const;

  /// Same adjacency (names ignored).
  bool same_structure(const Graph& other) const { return adj_ == other.adj_; }
  bool operator==(const Graph& other) const = default;

 private:
  std::vector<VertexSet> adj_;
  std::vector<std::string> names_;
};

/// Which of the special subset shapes a vertex set has.
struct SubsetKind {
  bool is_simplex = false;
  bool is_clique = false;
  bool is_co_simplex = false;
  bool is_free_co_simplex = false;
};

/// Graph on a subset of vertices together with the relabelling both ways.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_parent;    // child index -> parent index
  std::vector<int> from_parent;  // parent index -> child index, or -1

  VertexSet lift(VertexSet child_set) const;
  VertexSet restrict(VertexSet parent_set) const;
};

inline constexpr int kInfiniteDistance = -1;

/// BFS distance; kInfiniteDistance across components.
int distance(const Graph& g, int x, int y);

InducedSubgraph induced_subgraph(const Graph& g, VertexSet subset);
/// g without vertex v; later vertices shift down by one.
Graph delete_vertex(const Graph& g, int v);

Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph join_graphs(const Graph& g1, const Graph& g2);
/// Appends a vertex t (index n) adjacent exactly to `link`.
Graph adjoin_vertex(const Graph& g, VertexSet link, const std::string& name = "t");
/// Applies a vertex permutation: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, const std::vector<int>& perm);

SubsetKind classify_subset(const Graph& g, VertexSet subset);
bool is_simplex(const Graph& g, VertexSet subset);
bool is_free_co_simplex(const Graph& g, VertexSet subset);
bool is_co_simplex(const Graph& g, VertexSet subset);

/// Throws Error unless `subset` lies in 0..n-1.
void require_within(const Graph& g, VertexSet subset, const char* what);

}  // namespace orthograph
