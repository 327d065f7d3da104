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

#include <string>
#include <vector>

#include "orthograph/graph.hpp"
#include "orthograph/lattice.hpp"
#include "orthograph/vertex_set.hpp"

namespace orthograph {

/// Kind of a compression class: a lone vertex, a class of vertices with equal
/// complements (a simplex), or a class with equal punctured complements (a
/// free co-simplex).
enum class ClassKind { kSingle, kPerp, kOrtho };

const char* to_string(ClassKind kind);

struct VertexClassInfo {
  VertexSet perp_class;   // vertices with the same complement
  VertexSet ortho_class;  // vertices with the same punctured complement
  VertexSet combined;     // union of the two
  ClassKind kind = ClassKind::kSingle;
};

/// Per-vertex equivalence classes. Throws InvariantViolation if the structural
/// facts about them (simplex, free co-simplex, exclusive sizes) fail.
std::vector<VertexClassInfo> vertex_classes(const Graph& g);

struct ClassLabel {
  int size = 1;
  ClassKind kind = ClassKind::kSingle;
  bool operator==(const ClassLabel&) const = default;
};

/// Quotient of a graph by its vertex equivalence. Loops are allowed: a class
/// of two or more vertices with equal complements carries a loop.
struct CompressedGraph {
  std::vector<VertexSet> classes;  // ordered by least member
  std::vector<int> class_of;       // vertex -> class index
  std::vector<VertexSet> adjacency;  // over class indices, loops included
  std::vector<ClassLabel> labels;

  int size() const { return static_cast<int>(classes.size()); }
  VertexSet all() const { return VertexSet::range(size()); }
  bool has_loop(int c) const { return adjacency.at(c).contains(c); }
  bool adjacent(int a, int b) const { return adjacency.at(a).contains(b); }

  /// Image of a vertex set as a set of class indices.
  VertexSet image(VertexSet vertices) const;
  /// Union of the given classes as a vertex set.
  VertexSet preimage(VertexSet class_set) const;
};

CompressedGraph compress(const Graph& g);

/// Complement inside the compressed graph. A class is always at distance zero
/// from itself, so it belongs to its own complement whether or not it carries
/// a loop.
VertexSet quotient_complement(const CompressedGraph& gc, VertexSet class_set);

/// Closed sets of the compressed graph.
ClosedSetLattice quotient_lattice(const CompressedGraph& gc);

/// The induced map from closed sets of the graph onto closed sets of its
/// compression.
struct LatticeQuotientMap {
  ClosedSetLattice source;
  ClosedSetLattice target;
  std::vector<int> image;  // source index -> target index
};

LatticeQuotientMap lattice_quotient_map(const Graph& g);

}  // namespace orthograph
