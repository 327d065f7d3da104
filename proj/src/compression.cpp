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

#include "orthograph/compression.hpp"

#include "orthograph/error.hpp"
#include "orthograph/ortho.hpp"

namespace orthograph {

const char* to_string(ClassKind kind) {
  switch (kind) {
    case ClassKind::kSingle: return "1";
    case ClassKind::kPerp: return "perp";
    case ClassKind::kOrtho: return "o";
  }
  return "?";
}

std::vector<VertexClassInfo> vertex_classes(const Graph& g) {
  const int n = g.size();
  std::vector<VertexClassInfo> out(n);
  for (int x = 0; x < n; ++x) {
    const VertexSet xp = g.closed_neighbourhood(x);
    const VertexSet xo = g.neighbours(x);
    for (int y = 0; y < n; ++y) {
      if (g.closed_neighbourhood(y) == xp) out[x].perp_class = out[x].perp_class.with(y);
      if (g.neighbours(y) == xo) out[x].ortho_class = out[x].ortho_class.with(y);
    }
  }
  for (int x = 0; x < n; ++x) {
    VertexClassInfo& info = out[x];
    const int np = info.perp_class.size();
    const int no = info.ortho_class.size();
    ensure(is_simplex(g, info.perp_class), "perp class is not a simplex");
    ensure((info.perp_class & info.ortho_class) == VertexSet::singleton(x),
           "perp and o classes meet outside x");
    ensure(np < 2 || no == 1, "both classes of a vertex are non-trivial");
    ensure(no < 2 || is_free_co_simplex(g, info.ortho_class),
           "o class is not a free co-simplex");
    info.combined = info.perp_class | info.ortho_class;
    info.kind = np >= 2 ? ClassKind::kPerp : no >= 2 ? ClassKind::kOrtho : ClassKind::kSingle;
  }
  return out;
}

VertexSet CompressedGraph::image(VertexSet vertices) const {
  VertexSet out;
  for (int v : vertices) out = out.with(class_of.at(v));
  return out;
}

VertexSet CompressedGraph::preimage(VertexSet class_set) const {
  VertexSet out;
  for (int c : class_set) out |= classes.at(c);
  return out;
}

CompressedGraph compress(const Graph& g) {
  const auto info = vertex_classes(g);
  CompressedGraph gc;
  gc.class_of.assign(g.size(), -1);
  for (int x = 0; x < g.size(); ++x) {
    if (gc.class_of[x] >= 0) continue;
    const int c = gc.size();
    gc.classes.push_back(info[x].combined);
    gc.labels.push_back({info[x].combined.size(), info[x].kind});
    for (int y : info[x].combined) {
      ensure(gc.class_of[y] < 0 && info[y].combined == info[x].combined,
             "vertex equivalence is not transitive");
      gc.class_of[y] = c;
    }
  }

  // Classes are joined when every pair of distinct members across them is an
  // edge; for a class against itself that makes a loop exactly on a simplex
  // class of two or more vertices.
  const int m = gc.size();
  gc.adjacency.assign(m, {});
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      bool all = true;
      bool any_pair = false;
      for (int u : gc.classes[a]) {
        for (int v : gc.classes[b]) {
          if (u == v) continue;
          any_pair = true;
          if (!g.has_edge(u, v)) all = false;
        }
      }
      if (all && any_pair) gc.adjacency[a] = gc.adjacency[a].with(b);
    }
  }
  for (auto [u, v] : g.edges()) {
    ensure(gc.adjacent(gc.class_of[u], gc.class_of[v]),
           "compression map sends an edge to a non-edge");
  }
  return gc;
}

VertexSet quotient_complement(const CompressedGraph& gc, VertexSet class_set) {
  VertexSet result = gc.all();
  for (int c : class_set) result &= gc.adjacency.at(c).with(c);
  return result;
}

ClosedSetLattice quotient_lattice(const CompressedGraph& gc) {
  std::vector<VertexSet> generators;
  for (int c = 0; c < gc.size(); ++c) generators.push_back(gc.adjacency[c].with(c));
  return intersection_closure(gc.all(), generators);
}

LatticeQuotientMap lattice_quotient_map(const Graph& g) {
  const CompressedGraph gc = compress(g);
  LatticeQuotientMap out;
  out.source = enumerate_closed_sets(g);
  out.target = quotient_lattice(gc);
  std::vector<bool> hit(out.target.size(), false);
  for (VertexSet y : out.source.sets()) {
    const auto idx = out.target.index_of(gc.image(y));
    ensure(idx.has_value(), "image of a closed set is not closed in the compression");
    out.image.push_back(*idx);
    hit[*idx] = true;
  }
  for (bool h : hit) ensure(h, "lattice quotient map is not surjective");
  return out;
}

}  // namespace orthograph
