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
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "orthograph/graph.hpp"
#include "orthograph/lattice.hpp"
#include "orthograph/vertex_set.hpp"

namespace orthograph {

struct FamilyTally {
  std::size_t checks = 0;
  std::size_t failures = 0;
};

/// Pass/fail counts of structural laws, grouped into named families.
class PropertyReport {
 public:
  /// Records one check. Failure messages beyond the first few are counted
  /// but not kept.
  void expect(bool holds, const char* family, const char* what);
  void expect(bool holds, const char* family, const std::string& what) {
    expect(holds, family, what.c_str());
  }
  void merge(const PropertyReport& other);

  bool ok() const { return failure_count_ == 0; }
  std::size_t check_count() const { return check_count_; }
  std::size_t failure_count() const { return failure_count_; }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::map<std::string, FamilyTally, std::less<>>& families() const { return families_; }

 private:
  static constexpr std::size_t kKeptFailures = 20;

  std::size_t check_count_ = 0;
  std::size_t failure_count_ = 0;
  std::vector<std::string> failures_;
  std::map<std::string, FamilyTally, std::less<>> families_;
};

// Family names, shared by reports and tests.
inline constexpr const char* kComplementLaws = "complement laws";
inline constexpr const char* kClosureLaws = "closure laws";
inline constexpr const char* kLatticeLaws = "closed-set lattice laws";
inline constexpr const char* kComponentLaws = "disconnected and join decompositions";
inline constexpr const char* kExtensionMaps = "extension maps";
inline constexpr const char* kDoublingLaws = "doubling and heights";
inline constexpr const char* kPairBiconditional = "vertex-pair membership biconditional";
inline constexpr const char* kEquivalenceLaws = "perp and o equivalence";
inline constexpr const char* kVertexClassLaws = "vertex classes";
inline constexpr const char* kCompressionLaws = "compression homomorphism";
inline constexpr const char* kQuotientLatticeLaws = "quotient lattice epimorphism";
inline constexpr const char* kAutomorphismLaws = "automorphism decomposition";
inline constexpr const char* kQuotientMapAsStated = "quotient map laws on every graph";

/// Complement identities for one (Y1, Y2, Z) triple, including relativity
/// O^Z(Y) = O(Y) ∩ Z and the component restriction on disconnected graphs.
void check_complement_laws(const Graph& g, VertexSet y1, VertexSet y2, VertexSet z,
                           PropertyReport& report);

/// Closure identities for one (Y1, Y2) pair.
void check_closure_laws(const Graph& g, VertexSet y1, VertexSet y2, PropertyReport& report);

/// Structure of the closed-set lattice: top, bottom, intersections, the
/// complement as an involutive anti-automorphism. Also that cl(Y) is a member
/// and Y is a member exactly when it is closed, for every Y in `samples`.
void check_lattice_laws(const Graph& g, const ClosedSetLattice& lattice,
                        const std::vector<VertexSet>& samples, PropertyReport& report);

/// When the graph is disconnected or a join, the lattice decomposes over the
/// two parts.
void check_decomposition_laws(const Graph& g, const ClosedSetLattice& lattice,
                              PropertyReport& report);

/// All extension-map, doubling, height and pair-membership laws for one link.
void check_extension_laws(const Graph& g, VertexSet link, PropertyReport& report);

/// perp-equivalence, o-equivalence and the two closures for one pair (S, T),
/// with `y` supplying a closed set cl(y).
void check_equivalence_laws(const Graph& g, VertexSet s, VertexSet t, VertexSet y,
                            PropertyReport& report);

/// Vertex classes, the compression homomorphism and the lattice epimorphism.
/// `samples` are extra subsets Z for the identity c(Z)⊥ = c(Z⊥). That identity
/// and the epimorphism are only checked when every o-class is a singleton:
/// two isolated vertices already break both.
void check_compression_laws(const Graph& g, const ClosedSetLattice& lattice,
                            const std::vector<VertexSet>& samples, PropertyReport& report);

/// c(Z)⊥ = c(Z⊥) for Z in `samples` and the lattice epimorphism, on any graph,
/// under family kQuotientMapAsStated. Fails on graphs with an o-class of size
/// two or more.
void check_quotient_map_as_stated(const Graph& g, const ClosedSetLattice& lattice,
                                  const std::vector<VertexSet>& samples, PropertyReport& report);

/// Automorphisms commute with complements and the split sequence holds.
/// Skipped above `max_vertices`.
void check_automorphism_laws(const Graph& g, PropertyReport& report, int max_vertices = 8);

/// Every family over every subset tuple. Throws CapExceeded above 6 vertices.
PropertyReport check_all_exhaustive(const Graph& g);

/// Every family over `samples` random subset tuples drawn from `rng`.
PropertyReport check_all_sampled(const Graph& g, std::mt19937_64& rng, int samples);

/// Uniform random labelled graph with edge probability `p`.
Graph random_graph(int n, double p, std::mt19937_64& rng);
VertexSet random_subset(int n, std::mt19937_64& rng);

}  // namespace orthograph
