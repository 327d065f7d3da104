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
#include <vector>

#include "orthograph/graph.hpp"
#include "orthograph/vertex_set.hpp"

namespace orthograph {

/// Equal complements.
bool perp_equivalent(const Graph& g, VertexSet s, VertexSet t);

/// Equal punctured complements: complement(Y) \ Y == complement(Z) \ Z.
bool o_equivalent(const Graph& g, VertexSet y, VertexSet z);

/// The largest simplex with the same complement as `s`; equals cl(s).
/// Throws Error if `s` is not a simplex.
VertexSet abelian_closure(const Graph& g, VertexSet s);

/// Union of every free co-simplex o-equivalent to `a`. Throws Error if `a` is
/// not a free co-simplex. The union can fail to be a free co-simplex: in K2
/// plus an isolated vertex, {0,2} and {1,2} are o-equivalent and 0-1 is an
/// edge.
VertexSet free_closure(const Graph& g, VertexSet a);

enum class InflationKind { kAbelian, kFree };

const char* to_string(InflationKind kind);
InflationKind parse_inflation_kind(const std::string& text);

/// Adjoins a vertex joined to complement(witness). The witness must be a
/// simplex (abelian) or a free co-simplex (free).
Graph elementary_inflate(const Graph& g, InflationKind kind, VertexSet witness);

struct Deflation {
  Graph graph;        // g with vertex y removed
  VertexSet witness;  // in g's indexing
};

/// Removes `y` when some witness avoiding y is equivalent to {y}: a simplex
/// with y's complement (abelian), or a free co-simplex with y's punctured
/// complement (free). Picks the largest witness, lowest bitmask on ties.
std::optional<Deflation> elementary_deflate(const Graph& g, InflationKind kind, int y);

/// Applies abelian inflations along the given simplices in turn, each step
/// indexing into the graph produced by the previous one, and compares the
/// closed-set lattices of the first and last graph. Throws Error on a
/// witness that is not a simplex.
bool verify_inflation_invariance(const Graph& g, const std::vector<VertexSet>& simplices);

}  // namespace orthograph
