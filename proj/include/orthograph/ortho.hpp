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

#include "orthograph/graph.hpp"
#include "orthograph/vertex_set.hpp"

namespace orthograph {

/// Orthogonal complement of `y` inside `z`: the members of `z` at distance at
/// most one from every member of `y`. The empty set has complement `z`.
///
/// `y` need not lie inside `z`.
inline VertexSet ortho_complement(const Graph& g, VertexSet y, VertexSet z) {
  VertexSet result = z;
  for (int v : y) result &= g.closed_neighbourhood(v);
  return result;
}

/// Complement in the whole vertex set.
inline VertexSet perp(const Graph& g, VertexSet y) {
  return ortho_complement(g, y, g.vertices());
}

/// Closure of `y` inside `z`: the complement taken twice, both times in `z`.
inline VertexSet closure(const Graph& g, VertexSet y, VertexSet z) {
  return ortho_complement(g, ortho_complement(g, y, z), z);
}

inline VertexSet closure(const Graph& g, VertexSet y) {
  return closure(g, y, g.vertices());
}

inline bool is_closed(const Graph& g, VertexSet y) { return closure(g, y) == y; }

/// Vertices adjacent to every other vertex.
inline VertexSet kernel(const Graph& g) { return perp(g, g.vertices()); }

/// Every vertex of `z` is in `y` or adjacent to all of `y`.
inline bool commutes(const Graph& g, VertexSet y, VertexSet z) {
  return z.is_subset_of(perp(g, y));
}

}  // namespace orthograph
