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
#include <vector>

#include "orthograph/graph.hpp"
#include "orthograph/lattice.hpp"
#include "orthograph/vertex_set.hpp"

namespace orthograph {

// Adjoining a vertex t to a graph with vertex set X, t joined exactly to a
// link J ⊆ X. Three set families are in play:
//
//   base      L  = closed sets of the original graph,
//   tilde     L~ = L together with every C ∩ J for C in L,
//   extended  L- = closed sets of the graph with t added.
//
// and six order-preserving maps between them (see MapKind). t always takes
// the index n = |X|, so subsets of X keep their bitmasks inside the extended
// graph.

/// Closure relative to the link: plain closure when `u` leaves the link,
/// closure cut down to the link when `u` lies inside it.
VertexSet icl(const Graph& g, VertexSet link, VertexSet u);

/// The intermediate lattice L~ with its own join.
struct TildeLattice {
  SetLattice family;
  /// The sets C ∩ J for C in L (L_t), canonical order.
  std::vector<VertexSet> link_traces;
  /// L~ \ L, computed from the traces.
  std::vector<VertexSet> new_sets;
};

TildeLattice tilde_lattice(const Graph& g, VertexSet link);

/// Members Z of L with Z ⊄ J and Z = cl(Z ∩ J), cut down to J. An
/// independent description of L~ \ L.
std::vector<VertexSet> new_tilde_sets_by_closure(const Graph& g, VertexSet link);

/// Join in L~: closure of the union, cut down to the link when the union
/// lies inside it. Meet is plain intersection.
VertexSet tilde_join(const Graph& g, VertexSet link, VertexSet u, VertexSet v);
inline VertexSet tilde_meet(VertexSet u, VertexSet v) { return u & v; }

/// Decides whether `j` is the complement of some simplex; returns the
/// simplex complement(j) as witness when it is.
std::optional<VertexSet> is_simplex_complement(const Graph& g, VertexSet j);

enum class MapKind {
  kBetaTilde,   // L  -> L~, inclusion
  kGammaTilde,  // L~ -> L,  closure in X
  kBetaBar,     // L~ -> L-, closure in X ∪ {t}
  kGammaBar,    // L- -> L~, icl of Z \ {t}
  kBeta,        // L  -> L-, closure in X ∪ {t}
  kGamma,       // L- -> L,  closure in X of Z ∩ X
};

const char* to_string(MapKind kind);

struct DoublingData {
  /// Members Z of L~ leaving the link with cl(Z ∩ J) = Z, and their images
  /// Z ∩ J (same order).
  std::vector<VertexSet> r;
  std::vector<VertexSet> rho_image;
  /// Y ⊆ X with Y ⊄ J, complement(Y) ⊄ J and Y = complement(complement(Y) ∩ J).
  std::vector<VertexSet> s1;
  /// Y ⊆ J with complement(Y) ⊄ J and Y = complement(complement(Y) ∩ J) ∩ J.
  std::vector<VertexSet> s2;
  /// s1 ∪ s2, canonical order.
  std::vector<VertexSet> s;
  /// Y ∪ {t} for Y in s (same order).
  std::vector<VertexSet> t;
};

/// Everything about one vertex adjunction. Built by analyze_extension, which
/// cross-checks every structural identity it computes and throws
/// InvariantViolation on any mismatch.
class ExtensionAnalysis {
 public:
  const Graph& base() const { return base_; }
  const Graph& extended() const { return extended_; }
  VertexSet link() const { return link_; }
  int new_vertex() const { return base_.size(); }
  VertexSet base_vertices() const { return base_.vertices(); }

  const ClosedSetLattice& lattice() const { return lattice_; }
  const TildeLattice& tilde() const { return tilde_; }
  const ClosedSetLattice& extended_lattice() const { return extended_lattice_; }
  const DoublingData& doubling() const { return doubling_; }

  int height_base() const { return lattice_.height(); }
  int height_tilde() const { return tilde_.family.height(); }
  int height_extended() const { return extended_lattice_.height(); }
  int tilde_increment() const { return height_tilde() - height_base(); }
  int bar_increment() const { return height_extended() - height_tilde(); }

  bool link_closed() const { return link_closed_; }
  const std::optional<VertexSet>& simplex_witness() const { return simplex_witness_; }

  /// Applies one of the six maps. Throws Error when `element` is outside the
  /// map's domain.
  VertexSet apply(MapKind kind, VertexSet element) const;

  /// Closed forms of beta-bar / beta: Y, or Y ∪ {t} when complement(Y) ⊆ J.
  VertexSet beta_bar_formula(VertexSet y) const;

 private:
  friend ExtensionAnalysis analyze_extension(const Graph& g, VertexSet link);

  void compute_doubling();
  void verify() const;

  Graph base_;
  Graph extended_;
  VertexSet link_;
  ClosedSetLattice lattice_;
  TildeLattice tilde_;
  ClosedSetLattice extended_lattice_;
  DoublingData doubling_;
  bool link_closed_ = false;
  std::optional<VertexSet> simplex_witness_;
};

ExtensionAnalysis analyze_extension(const Graph& g, VertexSet link);

inline VertexSet eval_map(MapKind kind, const ExtensionAnalysis& analysis,
                          VertexSet element) {
  return analysis.apply(kind, element);
}

/// The simplex-complement criterion for the base and extended lattices being
/// isomorphic, cross-checked against a generic order-isomorphism search.
struct GammaVerdict {
  bool criterion = false;
  bool poset_oracle = false;
};

/// Throws InvariantViolation if the criterion and the search disagree.
GammaVerdict gamma_isomorphism_verdict(const ExtensionAnalysis& analysis);

/// Chain rewriting for a closed link J = complement(A) with A not a simplex.
/// Fixes a as the lowest vertex of A \ J. Elements containing t but not a are
/// replaced by complement(W ∪ {a}) in the extended graph, where W ∪ {t} is the
/// extended complement of the element; everything else is kept.
class AlphaTransform {
 public:
  /// Throws Error unless the link is closed and its complement is not a
  /// simplex.
  explicit AlphaTransform(const ExtensionAnalysis& analysis);

  VertexSet witness() const { return witness_; }
  int pivot() const { return pivot_; }

  /// Image of one element of the extended lattice.
  VertexSet operator()(VertexSet y) const;

  /// Either t ∉ y or A ∪ {t} ⊆ y.
  bool satisfies_split_property(VertexSet y) const;

  /// Throws Error unless `chain` is strictly ascending inside the extended
  /// lattice.
  std::vector<VertexSet> apply(const std::vector<VertexSet>& chain) const;

 private:
  const ExtensionAnalysis* analysis_;
  VertexSet witness_;
  int pivot_ = -1;
};

inline std::vector<VertexSet> alpha_transform(const ExtensionAnalysis& analysis,
                                              const std::vector<VertexSet>& chain) {
  return AlphaTransform(analysis).apply(chain);
}

bool is_strictly_ascending(const std::vector<VertexSet>& chain);

/// For a closed link the base and extended heights agree. Throws Error when
/// the link is not closed.
bool closed_link_height_check(const ExtensionAnalysis& analysis);

/// For a link J = complement(A), A a non-empty co-simplex, J realisable: the
/// first doubling family is empty and the second equals both
/// {Y ∈ L : Y ⊆ J} and the relative lattice of J. Throws Error when the
/// preconditions fail.
bool cosimplex_doubling_check(const ExtensionAnalysis& analysis, VertexSet co_simplex);

}  // namespace orthograph
