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

#include "orthograph/sweep.hpp"

#include <omp.h>

#include <exception>
#include <random>
#include <set>
#include <vector>

#include "orthograph/automorphism.hpp"
#include "orthograph/error.hpp"
#include "orthograph/extension.hpp"
#include "orthograph/lattice.hpp"
#include "orthograph/ortho.hpp"

namespace orthograph {

namespace {

void keep_least(std::optional<Instance>& slot, const std::optional<Instance>& other) {
  if (other && (!slot || *other < *slot)) slot = other;
}

// Runs `body(graph, instance, acc)` for every labelled graph on 0..max_n
// vertices. The parallel kernel gives each thread its own accumulator and
// merges them at the end; merging is order-independent, so the result equals
// the serial one.
template <typename Acc, typename Body>
Acc for_each_graph(int max_n, Execution exec, Body&& body) {
  require(max_n >= 0 && max_n <= kMaxSweepVertices,
          "sweeps cover at most " + std::to_string(kMaxSweepVertices) + " vertices");
  Acc result;
  for (int n = 0; n <= max_n; ++n) {
    const auto total = static_cast<std::int64_t>(labelled_graph_count(n));
    const auto visit = [&](std::int64_t i, Acc& acc) {
      const Instance at{n, static_cast<std::uint64_t>(i), {}};
      ++acc.tally.graphs;
      try {
        body(graph_from_edge_mask(n, at.mask), at, acc);
      } catch (const std::exception& e) {
        acc.tally.fail(at, e.what());
      }
    };
    if (exec == Execution::kSerial) {
      for (std::int64_t i = 0; i < total; ++i) visit(i, result);
      continue;
    }
#pragma omp parallel
    {
      Acc local;
#pragma omp for schedule(dynamic, 8) nowait
      for (std::int64_t i = 0; i < total; ++i) visit(i, local);
#pragma omp critical(orthograph_sweep_merge)
      result.merge(local);
    }
  }
  return result;
}

std::set<VertexSet> as_set(const std::vector<VertexSet>& v) { return {v.begin(), v.end()}; }

}  // namespace

std::uint64_t labelled_graph_count(int n) {
  require(n >= 0 && n <= 11, "labelled graph count overflows above 11 vertices");
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      if ((mask >> k) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph::build(n, edges);
}

std::string describe(const Instance& at) {
  std::string out = "n=" + std::to_string(at.n) + " mask=" + std::to_string(at.mask);
  out += " link={";
  bool first = true;
  for (int v : at.link) {
    out += (first ? "" : ",") + std::to_string(v);
    first = false;
  }
  return out + "}";
}

void SweepTally::fail(const Instance& at, const std::string& reason) {
  ++failures;
  if (!first_failure || at < *first_failure) {
    first_failure = at;
    first_failure_reason = reason;
  }
}

void SweepTally::merge(const SweepTally& other) {
  graphs += other.graphs;
  instances += other.instances;
  failures += other.failures;
  if (other.first_failure && (!first_failure || *other.first_failure < *first_failure)) {
    first_failure = other.first_failure;
    first_failure_reason = other.first_failure_reason;
  }
}

void HeightSweep::merge(const HeightSweep& other) {
  tally.merge(other.tally);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      counts[a][b] += other.counts[a][b];
      keep_least(witnesses[a][b], other.witnesses[a][b]);
    }
  }
}

std::optional<Instance> HeightSweep::total_witness(int m) const {
  std::optional<Instance> best;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      if (a + b == m) keep_least(best, witnesses[a][b]);
    }
  }
  return best;
}

void GammaSweep::merge(const GammaSweep& other) {
  tally.merge(other.tally);
  isomorphic += other.isomorphic;
  non_isomorphic += other.non_isomorphic;
}

void DoublingSweep::merge(const DoublingSweep& other) {
  tally.merge(other.tally);
  nonempty_r += other.nonempty_r;
  nonempty_s += other.nonempty_s;
}

void ClosedLinkSweep::merge(const ClosedLinkSweep& other) {
  tally.merge(other.tally);
  closed_links += other.closed_links;
  alpha_links += other.alpha_links;
  chains += other.chains;
}

void AutomorphismSweep::merge(const AutomorphismSweep& other) {
  tally.merge(other.tally);
  nontrivial_classes += other.nontrivial_classes;
}

HeightSweep sweep_heights(int max_n, Execution exec) {
  return for_each_graph<HeightSweep>(
      max_n, exec, [](const Graph& g, const Instance& base, HeightSweep& acc) {
        for_each_subset(g.vertices(), [&](VertexSet link) {
          Instance at = base;
          at.link = link;
          ++acc.tally.instances;
          try {
            const ExtensionAnalysis a = analyze_extension(g, link);
            const int m1 = a.tilde_increment();
            const int m2 = a.bar_increment();
            if (m1 < 0 || m1 > 1 || m2 < 0 || m2 > 1) {
              acc.tally.fail(at, "height increment outside {0,1}");
              return;
            }
            ++acc.counts[m1][m2];
            keep_least(acc.witnesses[m1][m2], at);
          } catch (const std::exception& e) {
            acc.tally.fail(at, e.what());
          }
        });
      });
}

GammaSweep sweep_gamma_criterion(int max_n, Execution exec) {
  return for_each_graph<GammaSweep>(
      max_n, exec, [](const Graph& g, const Instance& base, GammaSweep& acc) {
        for_each_subset(g.vertices(), [&](VertexSet link) {
          Instance at = base;
          at.link = link;
          ++acc.tally.instances;
          try {
            const ExtensionAnalysis a = analyze_extension(g, link);
            const bool criterion = is_simplex_complement(g, link).has_value();
            const bool oracle = poset_isomorphic(a.lattice(), a.extended_lattice());
            if (criterion != oracle) {
              acc.tally.fail(at, "criterion and isomorphism oracle disagree");
              return;
            }
            ++(oracle ? acc.isomorphic : acc.non_isomorphic);
          } catch (const std::exception& e) {
            acc.tally.fail(at, e.what());
          }
        });
      });
}

DoublingSweep sweep_doubling(int max_n, Execution exec) {
  return for_each_graph<DoublingSweep>(
      max_n, exec, [](const Graph& g, const Instance& base, DoublingSweep& acc) {
        for_each_subset(g.vertices(), [&](VertexSet link) {
          Instance at = base;
          at.link = link;
          ++acc.tally.instances;
          try {
            const ExtensionAnalysis a = analyze_extension(g, link);
            const auto& l = a.lattice();
            const auto& lt = a.tilde().family;
            const auto& lb = a.extended_lattice();
            const DoublingData& d = a.doubling();
            const int t = a.new_vertex();

            std::set<VertexSet> fresh;
            for (VertexSet s : lt.sets()) {
              if (!l.contains(s)) fresh.insert(s);
            }
            std::set<VertexSet> rho;
            for (VertexSet z : d.r) rho.insert(z & link);
            std::set<VertexSet> beta_image;
            for (VertexSet u : lt.sets()) beta_image.insert(closure(a.extended(), u));
            std::set<VertexSet> rest;
            for (VertexSet z : lb.sets()) {
              if (!beta_image.contains(z)) rest.insert(z);
            }
            std::set<VertexSet> sigma;
            for (VertexSet y : d.s) sigma.insert(y.with(t));

            if (lt.size() != l.size() + d.r.size()) {
              acc.tally.fail(at, "|L~| != |L| + |R|");
            } else if (lb.size() != lt.size() + d.s.size()) {
              acc.tally.fail(at, "|L-| != |L~| + |S|");
            } else if (rho != fresh || rho.size() != d.r.size()) {
              acc.tally.fail(at, "rho is not a bijection onto L~ \\ L");
            } else if (sigma != rest || sigma.size() != d.s.size()) {
              acc.tally.fail(at, "sigma is not a bijection onto L- \\ beta(L~)");
            } else if (as_set(d.s) != [&] {
                         auto u = as_set(d.s1);
                         u.insert(d.s2.begin(), d.s2.end());
                         return u;
                       }()) {
              acc.tally.fail(at, "S is not S1 ∪ S2");
            }
            if (!d.r.empty()) ++acc.nonempty_r;
            if (!d.s.empty()) ++acc.nonempty_s;
          } catch (const std::exception& e) {
            acc.tally.fail(at, e.what());
          }
        });
      });
}

ClosedLinkSweep sweep_closed_links(int max_n, Execution exec) {
  return for_each_graph<ClosedLinkSweep>(
      max_n, exec, [](const Graph& g, const Instance& base, ClosedLinkSweep& acc) {
        const ClosedSetLattice closed = enumerate_closed_sets(g);
        for (VertexSet link : closed.sets()) {
          Instance at = base;
          at.link = link;
          ++acc.tally.instances;
          ++acc.closed_links;
          try {
            const ExtensionAnalysis a = analyze_extension(g, link);
            if (!closed_link_height_check(a)) {
              acc.tally.fail(at, "closed link changes the height");
              continue;
            }
            if (is_simplex(g, perp(g, link))) continue;
            ++acc.alpha_links;
            const AlphaTransform alpha(a);
            const auto& lb = a.extended_lattice();
            for (const auto& idx : maximal_chains(lb)) {
              std::vector<VertexSet> chain;
              for (int i : idx) chain.push_back(lb[i]);
              const auto image = alpha.apply(chain);
              ++acc.chains;
              std::vector<VertexSet> projected;
              bool split = true;
              for (VertexSet z : image) {
                split = split && alpha.satisfies_split_property(z) && lb.contains(z);
                projected.push_back(a.apply(MapKind::kGamma, z));
              }
              if (image.size() != chain.size() || !split || !is_strictly_ascending(projected)) {
                acc.tally.fail(at, "alpha fails on a maximal chain");
                break;
              }
            }
          } catch (const std::exception& e) {
            acc.tally.fail(at, e.what());
          }
        }
      });
}

AutomorphismSweep sweep_automorphisms(int max_n, Execution exec) {
  return for_each_graph<AutomorphismSweep>(
      max_n, exec, [](const Graph& g, const Instance& at, AutomorphismSweep& acc) {
        ++acc.tally.instances;
        const SplitSequenceReport r = verify_split_sequence(g);
        if (r.class_factorial_product > 1) ++acc.nontrivial_classes;
        if (!r.order_identity) {
          acc.tally.fail(at, "|Aut| != |Aut(compression)| * prod(class size)!");
        } else if (!r.ok()) {
          acc.tally.fail(at, "split sequence check failed");
        }
      });
}

PropertyReport sweep_properties(int max_n, Execution exec) {
  // Reports keep their first few failure messages, so per-graph reports are
  // merged in graph order to stay deterministic.
  PropertyReport out;
  for (int n = 0; n <= max_n; ++n) {
    const auto total = static_cast<std::int64_t>(labelled_graph_count(n));
    std::vector<PropertyReport> per_graph(total);
    const auto visit = [&](std::int64_t i) {
      const Graph g = graph_from_edge_mask(n, static_cast<std::uint64_t>(i));
      try {
        per_graph[i] = check_all_exhaustive(g);
      } catch (const std::exception& e) {
        per_graph[i].expect(false, "sweep", describe({n, static_cast<std::uint64_t>(i), {}}) +
                                                " threw: " + e.what());
      }
    };
    if (exec == Execution::kSerial) {
      for (std::int64_t i = 0; i < total; ++i) visit(i);
    } else {
#pragma omp parallel for schedule(dynamic, 1)
      for (std::int64_t i = 0; i < total; ++i) visit(i);
    }
    for (const auto& r : per_graph) out.merge(r);
  }
  return out;
}

PropertyReport sample_properties(int count, int max_n, int samples, std::uint64_t seed,
                                 Execution exec) {
  std::vector<PropertyReport> per_instance(count);
  const auto visit = [&](int i) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(i));
    const int n = std::uniform_int_distribution<int>(1, max_n)(rng);
    const double p = std::uniform_real_distribution<double>(0.2, 0.8)(rng);
    try {
      const Graph g = random_graph(n, p, rng);
      per_instance[i] = check_all_sampled(g, rng, samples);
    } catch (const std::exception& e) {
      per_instance[i].expect(false, "sample", "instance " + std::to_string(i) + " threw: " +
                                                  e.what());
    }
  };
  if (exec == Execution::kSerial) {
    for (int i = 0; i < count; ++i) visit(i);
  } else {
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < count; ++i) visit(i);
  }
  PropertyReport out;
  for (const auto& r : per_instance) out.merge(r);
  return out;
}

PreservationFailures search_preservation_failures(int max_n) {
  PreservationFailures out;
  for (int n = 0; n <= max_n && !(out.join_failure && out.meet_failure); ++n) {
    for (std::uint64_t mask = 0; mask < labelled_graph_count(n); ++mask) {
      if (out.join_failure && out.meet_failure) break;
      const Graph g = graph_from_edge_mask(n, mask);
      const ClosedSetLattice l = enumerate_closed_sets(g);
      for_each_subset(g.vertices(), [&](VertexSet link) {
        const Instance at{n, mask, link};
        if (!out.join_failure) {
          for (VertexSet b : l.sets()) {
            for (VertexSet c : l.sets()) {
              if (out.join_failure) break;
              if (closure(g, b | c) != tilde_join(g, link, b, c)) {
                out.join_failure = at;
                out.join_b = b;
                out.join_c = c;
              }
            }
          }
        }
        if (!out.meet_failure) {
          const TildeLattice lt = tilde_lattice(g, link);
          for (VertexSet u : lt.family.sets()) {
            for (VertexSet v : lt.family.sets()) {
              if (out.meet_failure) break;
              if (closure(g, u & v) != (closure(g, u) & closure(g, v))) {
                out.meet_failure = at;
                out.meet_u = u;
                out.meet_v = v;
              }
            }
          }
        }
      });
    }
  }
  return out;
}

}  // namespace orthograph
