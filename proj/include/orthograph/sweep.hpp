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

// Exhaustive sweeps over every labelled graph on n vertices.
//
// Graph number `mask` on n vertices has edge {i, j} (i < j) exactly when bit k
// of `mask` is set, where pairs are numbered (0,1), (0,2), ..., (1,2), ...
// Every sweep has a serial reference and an OpenMP kernel; both return
// identical results because merging only sums counts and keeps the least
// instance.

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "orthograph/graph.hpp"
#include "orthograph/properties.hpp"
#include "orthograph/vertex_set.hpp"

namespace orthograph {

enum class Execution { kSerial, kParallel };

/// Largest n for which every labelled graph can be enumerated.
inline constexpr int kMaxSweepVertices = 7;

std::uint64_t labelled_graph_count(int n);
Graph graph_from_edge_mask(int n, std::uint64_t mask);

/// A graph (by size and edge mask) together with an optional link.
struct Instance {
  int n = 0;
  std::uint64_t mask = 0;
  VertexSet link;

  auto operator<=>(const Instance&) const = default;
};

std::string describe(const Instance& instance);

/// Counts shared by every sweep.
struct SweepTally {
  std::uint64_t graphs = 0;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  std::optional<Instance> first_failure;
  std::string first_failure_reason;

  void fail(const Instance& at, const std::string& reason);
  void merge(const SweepTally& other);
  bool operator==(const SweepTally&) const = default;
};

/// Height increments m1 = h(L~) - h(L), m2 = h(L-) - h(L~) over every link.
struct HeightSweep {
  SweepTally tally;
  /// counts[m1][m2] for m1, m2 in {0, 1}.
  std::array<std::array<std::uint64_t, 2>, 2> counts{};
  std::array<std::array<std::optional<Instance>, 2>, 2> witnesses{};

  void merge(const HeightSweep& other);
  bool operator==(const HeightSweep&) const = default;
  /// Least instance with m1 + m2 == m.
  std::optional<Instance> total_witness(int m) const;
};

/// The simplex-complement criterion against the poset-isomorphism oracle.
struct GammaSweep {
  SweepTally tally;
  std::uint64_t isomorphic = 0;
  std::uint64_t non_isomorphic = 0;

  void merge(const GammaSweep& other);
  bool operator==(const GammaSweep&) const = default;
};

/// Cardinality identities and bijectivity of rho and sigma.
struct DoublingSweep {
  SweepTally tally;
  std::uint64_t nonempty_r = 0;
  std::uint64_t nonempty_s = 0;

  void merge(const DoublingSweep& other);
  bool operator==(const DoublingSweep&) const = default;
};

/// Closed links: equal heights, and alpha on every maximal chain.
struct ClosedLinkSweep {
  SweepTally tally;
  std::uint64_t closed_links = 0;
  std::uint64_t alpha_links = 0;
  std::uint64_t chains = 0;

  void merge(const ClosedLinkSweep& other);
  bool operator==(const ClosedLinkSweep&) const = default;
};

/// |Aut| = |Aut(compression)| * product of class-size factorials.
struct AutomorphismSweep {
  SweepTally tally;
  std::uint64_t nontrivial_classes = 0;  // graphs with some class of size >= 2

  void merge(const AutomorphismSweep& other);
  bool operator==(const AutomorphismSweep&) const = default;
};

/// All sweeps cover every n from 0 to `max_n` inclusive.
HeightSweep sweep_heights(int max_n, Execution exec);
GammaSweep sweep_gamma_criterion(int max_n, Execution exec);
DoublingSweep sweep_doubling(int max_n, Execution exec);
ClosedLinkSweep sweep_closed_links(int max_n, Execution exec);
AutomorphismSweep sweep_automorphisms(int max_n, Execution exec);

/// Every property family over every subset tuple of every graph (n <= 6).
PropertyReport sweep_properties(int max_n, Execution exec);

/// `count` random graphs with 1 <= n <= `max_n`, each checked on `samples`
/// random subset tuples. Instance i draws from its own generator seeded with
/// seed + i.
PropertyReport sample_properties(int count, int max_n, int samples, std::uint64_t seed,
                                 Execution exec);

/// Instances where the inclusion of L into L~ fails to preserve a join, and
/// where closure from L~ to L fails to preserve a meet. Least instances first.
struct PreservationFailures {
  std::optional<Instance> join_failure;
  VertexSet join_b, join_c;
  std::optional<Instance> meet_failure;
  VertexSet meet_u, meet_v;
};

PreservationFailures search_preservation_failures(int max_n);

}  // namespace orthograph
