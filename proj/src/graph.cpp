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

#include "orthograph/graph.hpp"

#include <deque>
#include <string>

#include "orthograph/error.hpp"
#include "orthograph/ortho.hpp"

namespace orthograph {

namespace {

void check_width(int n) {
  if (n < 0) throw Error("negative vertex count");
  if (n > kMaxVertices) {
    throw CapExceeded("graph has " + std::to_string(n) +
                      " vertices; the limit is " + std::to_string(kMaxVertices));
  }
}

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.size()) {
    throw Error("vertex " + std::to_string(v) + " out of range for a graph on " +
                std::to_string(g.size()) + " vertices");
  }
}

std::vector<std::string> concat_names(const Graph& g1, const Graph& g2) {
  if (!g1.has_names() && !g2.has_names()) return {};
  std::vector<std::string> names;
  for (int v = 0; v < g1.size(); ++v) names.push_back(g1.name(v));
  for (int v = 0; v < g2.size(); ++v) names.push_back(g2.name(v));
  return names;
}

}  // namespace

Graph Graph::build(int n, const std::vector<Edge>& edges,
                   std::vector<std::string> names) {
  check_width(n);
  if (!names.empty() && static_cast<int>(names.size()) != n) {
    throw Error("expected " + std::to_string(n) + " vertex names, got " +
                std::to_string(names.size()));
  }
  std::vector<VertexSet> adj(n);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw Error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                  ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
    adj[u] = adj[u].with(v);
    adj[v] = adj[v].with(u);
  }
  Graph g;
  g.adj_ = std::move(adj);
  g.names_ = std::move(names);
  return g;
}

Graph Graph::from_adjacency(std::vector<VertexSet> adjacency,
                            std::vector<std::string> names) {
  const int n = static_cast<int>(adjacency.size());
  check_width(n);
  const VertexSet all = VertexSet::range(n);
  for (int u = 0; u < n; ++u) {
    require(adjacency[u].is_subset_of(all), "adjacency row out of range");
    require(!adjacency[u].contains(u), "self-loop at vertex " + std::to_string(u));
    for (int v : adjacency[u]) {
      require(adjacency[v].contains(u), "adjacency is not symmetric");
    }
  }
  require(names.empty() || static_cast<int>(names.size()) == n,
          "name count does not match vertex count");
  Graph g;
  g.adj_ = std::move(adjacency);
  g.names_ = std::move(names);
  return g;
}

Graph Graph::complete(int n) {
  check_width(n);
  std::vector<VertexSet> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = VertexSet::range(n).without(v);
  return from_adjacency(std::move(adj));
}

Graph Graph::null(int n) {
  check_width(n);
  return from_adjacency(std::vector<VertexSet>(n));
}

Graph Graph::path(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return build(n, edges);
}

Graph Graph::cycle(int n) {
  require(n >= 3, "a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return build(n, edges);
}

Graph Graph::star(int leaves) {
  std::vector<Edge> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return build(leaves + 1, edges);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < size(); ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

int Graph::edge_count() const {
  int twice = 0;
  for (VertexSet row : adj_) twice += row.size();
  return twice / 2;
}

std::string Graph::name(int v) const {
  if (v < 0 || v >= size()) throw Error("vertex " + std::to_string(v) + " out of range");
  return names_.empty() ? std::to_string(v) : names_[v];
}

std::optional<int> Graph::find(const std::string& name) const {
  for (int v = 0; v < size(); ++v) {
    if (this->name(v) == name) return v;
  }
  return std::nullopt;
}

VertexSet InducedSubgraph::lift(VertexSet child_set) const {
  VertexSet out;
  for (int v : child_set) out = out.with(to_parent.at(v));
  return out;
}

VertexSet InducedSubgraph::restrict(VertexSet parent_set) const {
  VertexSet out;
  for (int v : parent_set) {
    const int c = from_parent.at(v);
    if (c >= 0) out = out.with(c);
  }
  return out;
}

int distance(const Graph& g, int x, int y) {
  check_vertex(g, x);
  check_vertex(g, y);
  if (x == y) return 0;
  VertexSet seen = VertexSet::singleton(x);
  VertexSet frontier = seen;
  for (int d = 1; !frontier.empty(); ++d) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbours(v);
    next -= seen;
    if (next.contains(y)) return d;
    seen |= next;
    frontier = next;
  }
  return kInfiniteDistance;
}

void require_within(const Graph& g, VertexSet subset, const char* what) {
  if (!subset.is_subset_of(g.vertices())) {
    throw Error(std::string(what) + " contains a vertex outside the graph");
  }
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet subset) {
  require_within(g, subset, "induced subgraph vertex set");
  InducedSubgraph out;
  out.from_parent.assign(g.size(), -1);
  for (int v : subset) {
    out.from_parent[v] = static_cast<int>(out.to_parent.size());
    out.to_parent.push_back(v);
  }
  std::vector<VertexSet> adj(out.to_parent.size());
  std::vector<std::string> names;
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    const int p = out.to_parent[i];
    for (int q : g.neighbours(p) & subset) adj[i] = adj[i].with(out.from_parent[q]);
    if (g.has_names()) names.push_back(g.name(p));
  }
  out.graph = Graph::from_adjacency(std::move(adj), std::move(names));
  return out;
}

Graph delete_vertex(const Graph& g, int v) {
  check_vertex(g, v);
  return induced_subgraph(g, g.vertices().without(v)).graph;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int n1 = g1.size();
  check_width(n1 + g2.size());
  std::vector<VertexSet> adj;
  for (int v = 0; v < n1; ++v) adj.push_back(g1.neighbours(v));
  for (int v = 0; v < g2.size(); ++v) {
    adj.push_back(VertexSet(g2.neighbours(v).bits() << n1));
  }
  return Graph::from_adjacency(std::move(adj), concat_names(g1, g2));
}

Graph join_graphs(const Graph& g1, const Graph& g2) {
  const int n1 = g1.size();
  const int n2 = g2.size();
  check_width(n1 + n2);
  const VertexSet first = VertexSet::range(n1);
  const VertexSet second = VertexSet::range(n1 + n2) - first;
  std::vector<VertexSet> adj;
  for (int v = 0; v < n1; ++v) adj.push_back(g1.neighbours(v) | second);
  for (int v = 0; v < n2; ++v) {
    adj.push_back(VertexSet(g2.neighbours(v).bits() << n1) | first);
  }
  return Graph::from_adjacency(std::move(adj), concat_names(g1, g2));
}

Graph adjoin_vertex(const Graph& g, VertexSet link, const std::string& name) {
  require_within(g, link, "link");
  const int n = g.size();
  check_width(n + 1);
  std::vector<VertexSet> adj;
  for (int v = 0; v < n; ++v) {
    adj.push_back(link.contains(v) ? g.neighbours(v).with(n) : g.neighbours(v));
  }
  adj.push_back(link);
  std::vector<std::string> names;
  if (g.has_names()) {
    names = g.names();
    std::string fresh = name;
    while (g.find(fresh)) fresh += "'";
    names.push_back(fresh);
  }
  return Graph::from_adjacency(std::move(adj), std::move(names));
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  require(static_cast<int>(perm.size()) == g.size(), "permutation has wrong degree");
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  std::vector<std::string> names;
  if (g.has_names()) {
    names.resize(g.size());
    for (int v = 0; v < g.size(); ++v) names[perm[v]] = g.name(v);
  }
  return Graph::build(g.size(), edges, std::move(names));
}

bool is_simplex(const Graph& g, VertexSet subset) {
  for (int v : subset) {
    if (!(subset - g.closed_neighbourhood(v)).empty()) return false;
  }
  return true;
}

bool is_co_simplex(const Graph& g, VertexSet subset) {
  return !subset.intersects(perp(g, subset));
}

bool is_free_co_simplex(const Graph& g, VertexSet subset) {
  if (!is_co_simplex(g, subset)) return false;
  for (int v : subset) {
    if (g.neighbours(v).intersects(subset)) return false;
  }
  return true;
}

SubsetKind classify_subset(const Graph& g, VertexSet subset) {
  require_within(g, subset, "subset");
  SubsetKind kind;
  kind.is_simplex = is_simplex(g, subset);
  // A maximal simplex is one equal to its own complement.
  kind.is_clique = kind.is_simplex && perp(g, subset) == subset;
  kind.is_co_simplex = is_co_simplex(g, subset);
  kind.is_free_co_simplex = is_free_co_simplex(g, subset);
  return kind;
}

}  // namespace orthograph
