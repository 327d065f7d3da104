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
#include <string_view>

#include <nlohmann/json.hpp>

#include "orthograph/automorphism.hpp"
#include "orthograph/compression.hpp"
#include "orthograph/error.hpp"
#include "orthograph/extension.hpp"
#include "orthograph/graph.hpp"
#include "orthograph/lattice.hpp"

namespace orthograph {

/// Input error; `line()` is 1-based, or 0 when no single line is at fault.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

/// Edge-list text:
///
///   # comment
///   vertices a b c d
///   edges a-b b-c
///   c-d
///
/// Every token after `edges` (on its line or later ones) is an edge.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// graph6, one graph, n <= 62. An optional ">>graph6<<" header is accepted.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Edge-list when the first meaningful token is `vertices`, graph6 otherwise.
Graph parse_graph(std::string_view text);

/// Comma- or space-separated vertex names; an empty string is the empty set.
VertexSet parse_vertex_names(const Graph& g, std::string_view text);
/// "{a,b}" in index order.
std::string format_set(const Graph& g, VertexSet s);

nlohmann::json set_to_json(const Graph& g, VertexSet s);
nlohmann::json lattice_report(const Graph& g, const ClosedSetLattice& lattice);
nlohmann::json extension_report(const ExtensionAnalysis& analysis);
nlohmann::json compression_report(const Graph& g, const CompressedGraph& gc);
nlohmann::json automorphism_report(const SplitSequenceReport& report);

/// Hasse diagram, bottom to top, cover edges only.
std::string hasse_dot(const Graph& g, const ClosedSetLattice& lattice);
/// Compressed graph: o-classes as double circles, other classes as circles,
/// each labelled with the class size; loops drawn.
std::string compressed_dot(const CompressedGraph& gc);

}  // namespace orthograph
