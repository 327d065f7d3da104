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
#include <cstdint>
#include <vector>

#include "orthograph/compression.hpp"
#include "orthograph/graph.hpp"

namespace orthograph {

/// Image table: vertex v goes to perm[v].
using Permutation = std::vector<int>;

/// Vertex count above which automorphism search refuses to run.
inline constexpr int kMaxAutomorphismDegree = 12;
/// Default limit on explicitly stored group elements.
inline constexpr std::size_t kMaxGroupOrder = 10'000'000;

Permutation identity_permutation(int degree);
/// (a . b)(v) = a(b(v)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);

/// An explicitly enumerated permutation group of degree <= 12.
///
/// Elements are packed four bits per point into a 64-bit code and kept
/// sorted, so membership is a binary search.
class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(int degree, std::vector<std::uint64_t> codes);

  int degree() const { return degree_; }
  std::size_t order() const { return codes_.size(); }
  Permutation element(std::size_t i) const { return decode(codes_.at(i), degree_); }
  bool contains(const Permutation& p) const;
  const std::vector<std::uint64_t>& codes() const { return codes_; }

  static std::uint64_t encode(const Permutation& p);
  static Permutation decode(std::uint64_t code, int degree);

 private:
  int degree_ = 0;
  std::vector<std::uint64_t> codes_;
};

/// All adjacency-preserving vertex bijections, found by backtracking over a
/// colour-refined vertex partition. Throws CapExceeded above 12 vertices or
/// past `max_order` elements.
PermGroup automorphism_group(const Graph& g, std::size_t max_order = kMaxGroupOrder);

/// Automorphisms of the compressed graph that keep loops and class labels.
PermGroup labelled_automorphism_group(const CompressedGraph& gc,
                                      std::size_t max_order = kMaxGroupOrder);

bool is_automorphism(const Graph& g, const Permutation& p);
bool is_labelled_automorphism(const CompressedGraph& gc, const Permutation& p);

/// The permutation of classes induced by an automorphism of the graph.
/// Throws Error if `phi` is not an automorphism.
Permutation induced_aut(const Graph& g, const CompressedGraph& gc, const Permutation& phi);
Permutation induced_aut(const Graph& g, const Permutation& phi);

/// Lifts a labelled automorphism of the compression back to the graph. Each
/// class is ordered by vertex index and the j-th member of a class goes to the
/// j-th member of its image class. Throws Error if `psi` is not a labelled
/// automorphism.
Permutation section_iota(const Graph& g, const CompressedGraph& gc, const Permutation& psi);
Permutation section_iota(const Graph& g, const Permutation& psi);

/// Outcome of checking the split exact sequence
///   1 -> product of symmetric groups -> Aut(graph) -> Aut(compression) -> 1.
struct SplitSequenceReport {
  std::size_t aut_order = 0;
  std::size_t quotient_order = 0;
  std::size_t kernel_order = 0;
  /// Product over classes of (class size)!.
  std::size_t class_factorial_product = 0;

  bool induced_maps_labelled = false;  // every induced map is in Aut(compression)
  bool homomorphism = false;
  bool onto = false;
  bool kernel_is_class_preserving = false;
  bool kernel_order_matches = false;
  bool order_identity = false;
  bool section_in_aut = false;
  bool section_right_inverse = false;
  bool section_homomorphism = false;

  bool ok() const {
    return induced_maps_labelled && homomorphism && onto && kernel_is_class_preserving &&
           kernel_order_matches && order_identity && section_in_aut &&
           section_right_inverse && section_homomorphism;
  }
};

SplitSequenceReport verify_split_sequence(const Graph& g);

}  // namespace orthograph
