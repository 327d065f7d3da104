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

#include "orthograph/properties.hpp"

#include <algorithm>
#include <set>
#include <string_view>

#include "orthograph/automorphism.hpp"
#include "orthograph/compression.hpp"
#include "orthograph/error.hpp"
#include "orthograph/extension.hpp"
#include "orthograph/inflation.hpp"
#include "orthograph/ortho.hpp"

namespace orthograph {

namespace {

constexpr int kMaxExhaustiveVertices = 6;
constexpr int kMaxPairScanVertices = 12;
constexpr std::size_t kMaxAutomorphismsChecked = 5000;

// Stated directly from adjacency so the laws are not checked against
// themselves.
bool pairwise_adjacent(const Graph& g, VertexSet s) {
  for (int u : s) {
    for (int v : s) {
      if (u < v && !g.has_edge(u, v)) return false;
    }
  }
  return true;
}

bool pairwise_non_adjacent(const Graph& g, VertexSet s) {
  for (int u : s) {
    if (g.neighbours(u).intersects(s)) return false;
  }
  return true;
}

bool is_maximal_clique(const Graph& g, VertexSet s) {
  if (!pairwise_adjacent(g, s)) return false;
  for (int x : g.vertices() - s) {
    if (s.is_subset_of(g.neighbours(x))) return false;
  }
  return true;
}

VertexSet component_of(const Graph& g, int v) {
  VertexSet seen = VertexSet::singleton(v);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int u : frontier) next |= g.neighbours(u);
    frontier = next - seen;
    seen |= next;
  }
  return seen;
}

Graph complement_graph(const Graph& g) {
  std::vector<VertexSet> adj;
  for (int v = 0; v < g.size(); ++v) adj.push_back((g.vertices() - g.neighbours(v)).without(v));
  return Graph::from_adjacency(std::move(adj));
}

template <typename Fn>
void guarded(PropertyReport& report, const char* family, const std::string& what, Fn&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    report.expect(false, family, what + " threw: " + e.what());
  }
}

}  // namespace

void PropertyReport::expect(bool holds, const char* family, const char* what) {
  ++check_count_;
  auto it = families_.find(std::string_view(family));
  if (it == families_.end()) it = families_.emplace(family, FamilyTally{}).first;
  ++it->second.checks;
  if (holds) return;
  ++failure_count_;
  ++it->second.failures;
  if (failures_.size() < kKeptFailures) failures_.push_back(std::string(family) + ": " + what);
}

void PropertyReport::merge(const PropertyReport& other) {
  check_count_ += other.check_count_;
  failure_count_ += other.failure_count_;
  for (const auto& f : other.failures_) {
    if (failures_.size() < kKeptFailures) failures_.push_back(f);
  }
  for (const auto& [name, tally] : other.families_) {
    families_[name].checks += tally.checks;
    families_[name].failures += tally.failures;
  }
}

void check_complement_laws(const Graph& g, VertexSet y1, VertexSet y2, VertexSet z,
                           PropertyReport& r) {
  const auto oz = [&](VertexSet y) { return ortho_complement(g, y, z); };
  const char* f = kComplementLaws;
  if (y1.is_subset_of(z)) {
    r.expect(y1.is_subset_of(oz(oz(y1))), f, "Y inside its double complement");
    r.expect(oz(y1) == oz(oz(oz(y1))), f, "triple complement equals complement");
  }
  if (y1.is_subset_of(y2)) {
    r.expect(oz(y2).is_subset_of(oz(y1)), f, "complement reverses inclusion");
  }
  r.expect((oz(y1) | oz(y2)).is_subset_of(oz(y1 & y2)), f,
           "complement of intersection contains union of complements");
  r.expect(oz(y1 | y2) == (oz(y1) & oz(y2)), f,
           "complement of union is intersection of complements");
  r.expect(pairwise_adjacent(g, y1) == y1.is_subset_of(perp(g, y1)), f,
           "simplex exactly when inside its complement");
  r.expect(is_maximal_clique(g, y1) == (y1 == perp(g, y1)), f,
           "clique exactly when equal to its complement");
  r.expect(oz(y1) == (perp(g, y1) & z), f, "relative complement is a restriction");

  if (!y1.empty()) {
    const VertexSet part = component_of(g, y1.first());
    if (part != g.vertices() && y1.is_subset_of(part)) {
      r.expect(ortho_complement(g, y1, part) == perp(g, y1), f,
               "complement stays inside a component");
    }
  }
}

void check_closure_laws(const Graph& g, VertexSet y1, VertexSet y2, PropertyReport& r) {
  const auto cl = [&](VertexSet y) { return closure(g, y); };
  const auto p = [&](VertexSet y) { return perp(g, y); };
  const char* f = kClosureLaws;
  const VertexSet y = y1;
  r.expect(y.is_subset_of(cl(y)), f, "Y inside cl(Y)");
  r.expect(cl(p(y)) == p(y), f, "complements are closed");
  r.expect(cl(cl(y)) == cl(y), f, "closure is idempotent");
  if (y1.is_subset_of(y2)) r.expect(cl(y1).is_subset_of(cl(y2)), f, "closure is monotone");
  r.expect(cl(y1 & y2).is_subset_of(cl(y1) & cl(y2)), f, "closure of intersection");
  r.expect((cl(y1) | cl(y2)).is_subset_of(cl(y1 | y2)), f, "closure of union");
  {
    const VertexSet z = cl(y);
    const VertexSet u = p(y);
    r.expect(z == p(u) && cl(u) == p(z) && p(z) == p(y), f,
             "closed set is a complement whose source closes to its complement");
  }
  if (cl(y1) == cl(y2)) r.expect(p(y1) == p(y2), f, "equal closures give equal complements");
  {
    const bool a = pairwise_adjacent(g, y);
    const bool b = pairwise_adjacent(g, cl(y));
    const bool c = cl(y).is_subset_of(p(y));
    r.expect(a == b && b == c, f, "simplex, closed simplex and cl(Y) inside Y⊥ agree");
  }
  if (y1.is_subset_of(y2)) {
    r.expect(cl(cl(y1) & y2) == cl(y1), f, "closure of a trimmed closure");
  }
  r.expect(cl(cl(y1) | cl(y2)) == cl(y1 | y2), f, "join through closures");
  r.expect((cl(cl(y1) & y2) & y2) == (cl(y1) & y2), f, "trimmed closure is stable");
}

void check_lattice_laws(const Graph& g, const ClosedSetLattice& lattice,
                        const std::vector<VertexSet>& samples, PropertyReport& r) {
  const char* f = kLatticeLaws;
  const VertexSet x = g.vertices();
  const VertexSet ker = kernel(g);
  r.expect(lattice.contains(x), f, "X is a member");
  r.expect(lattice.contains(ker), f, "kernel is a member");
  for (VertexSet y : lattice.sets()) {
    r.expect(is_closed(g, y), f, "every member is closed");
    r.expect(y.is_subset_of(x) && ker.is_subset_of(y), f, "members lie between kernel and X");
    r.expect(lattice.contains(perp(g, y)), f, "complement of a member is a member");
    r.expect(perp(g, perp(g, y)) == y, f, "complement is an involution on members");
  }
  for (VertexSet a : lattice.sets()) {
    for (VertexSet b : lattice.sets()) {
      r.expect(lattice.contains(a & b), f, "members are closed under intersection");
      r.expect(a.is_subset_of(b) == perp(g, b).is_subset_of(perp(g, a)), f,
               "complement reverses the order exactly");
    }
  }
  for (VertexSet y : samples) {
    r.expect(lattice.contains(closure(g, y)), f, "cl(Y) is a member");
    r.expect(lattice.contains(y) == is_closed(g, y), f, "members are exactly the closed sets");
  }
}

void check_decomposition_laws(const Graph& g, const ClosedSetLattice& lattice,
                              PropertyReport& r) {
  const char* f = kComponentLaws;
  const VertexSet x = g.vertices();
  if (g.size() == 0) return;

  guarded(r, f, "kernel strip", [&] {
    const KernelStrip ks = strip_kernel(g);
    r.expect(poset_isomorphic(ks.original, ks.reduced), f,
             "removing the kernel keeps the lattice");
  });

  const VertexSet x1 = component_of(g, 0);
  const VertexSet x2 = x - x1;
  if (!x2.empty()) {
    const ClosedSetLattice l1 = relative_lattice(g, x1);
    const ClosedSetLattice l2 = relative_lattice(g, x2);
    r.expect(lattice.contains(VertexSet{}), f, "empty set is closed in a disconnected graph");
    std::set<VertexSet> candidates(lattice.sets().begin(), lattice.sets().end());
    candidates.insert(l1.sets().begin(), l1.sets().end());
    candidates.insert(l2.sets().begin(), l2.sets().end());
    for (VertexSet y : candidates) {
      if (y.empty()) continue;
      const bool in_whole = lattice.contains(y) && y != x && y != x1 && y != x2;
      const int parts = static_cast<int>(l1.contains(y) && y != x1) +
                        static_cast<int>(l2.contains(y) && y != x2);
      r.expect(in_whole == (parts == 1), f, "closed sets split across components");
    }
    for (const auto& [xi, li] : {std::pair{x1, &l1}, std::pair{x2, &l2}}) {
      const bool trivial_kernel = ortho_complement(g, xi, xi).empty();
      r.expect(li->contains(VertexSet{}) == trivial_kernel, f,
               "component lattice holds the empty set exactly without kernel");
      r.expect(lattice.contains(xi) == !trivial_kernel, f,
               "component is closed exactly when it has a kernel");
    }
  }

  const Graph gc = complement_graph(g);
  const VertexSet j1 = component_of(gc, 0);
  const VertexSet j2 = x - j1;
  if (!j2.empty()) {
    const ClosedSetLattice l1 = relative_lattice(g, j1);
    const ClosedSetLattice l2 = relative_lattice(g, j2);
    bool all_split = true;
    for (VertexSet y : lattice.sets()) {
      if (!l1.contains(y & j1) || !l2.contains(y & j2)) all_split = false;
    }
    r.expect(all_split && lattice.size() == l1.size() * l2.size(), f,
             "lattice of a join is the product lattice");
  }
}

void check_extension_laws(const Graph& g, VertexSet link, PropertyReport& r) {
  guarded(r, kExtensionMaps, "extension analysis", [&] {
    const ExtensionAnalysis a = analyze_extension(g, link);
    const Graph& gx = a.extended();
    const int t = a.new_vertex();
    const VertexSet tset = VertexSet::singleton(t);
    const ClosedSetLattice& l = a.lattice();
    const SetLattice& lt = a.tilde().family;
    const ClosedSetLattice& lb = a.extended_lattice();
    const auto cl = [&](VertexSet y) { return closure(g, y); };
    const auto bbar = [&](VertexSet y) {
      return perp(g, y).is_subset_of(link) ? y | tset : y;
    };
    const char* f = kExtensionMaps;

    // Tilde lattice from its definition.
    std::set<VertexSet> traces;
    for (VertexSet c : l.sets()) traces.insert(c & link);
    std::set<VertexSet> expected(l.sets().begin(), l.sets().end());
    expected.insert(traces.begin(), traces.end());
    r.expect(std::vector<VertexSet>(expected.begin(), expected.end()).size() == lt.size() &&
                 std::all_of(expected.begin(), expected.end(),
                             [&](VertexSet s) { return lt.contains(s); }),
             f, "tilde lattice is L together with the link traces");

    for (VertexSet y : l.sets()) {
      r.expect(a.apply(MapKind::kGammaTilde, a.apply(MapKind::kBetaTilde, y)) == y, f,
               "gamma-tilde undoes beta-tilde");
      r.expect(a.apply(MapKind::kBeta, y) == closure(gx, y) && closure(gx, y) == bbar(y), f,
               "beta is closure in the extended graph with the closed form");
      r.expect(a.apply(MapKind::kGamma, a.apply(MapKind::kBeta, y)) == y, f,
               "gamma undoes beta");
    }
    for (VertexSet u : lt.sets()) {
      r.expect(a.apply(MapKind::kBetaBar, u) == closure(gx, u) && closure(gx, u) == bbar(u), f,
               "beta-bar is closure in the extended graph with the closed form");
      r.expect(a.apply(MapKind::kGammaBar, a.apply(MapKind::kBetaBar, u)) == u, f,
               "gamma-bar undoes beta-bar");
      for (VertexSet v : lt.sets()) {
        if (u.is_subset_of(v)) {
          r.expect(cl(u).is_subset_of(cl(v)), f, "gamma-tilde is monotone");
        }
        r.expect(cl(tilde_join(g, link, u, v)) == cl(cl(u) | cl(v)), f,
                 "gamma-tilde preserves joins");
        if (u != v && cl(u) == cl(v)) {
          const bool u_old = l.contains(u) && !traces.contains(u);
          const bool v_old = l.contains(v) && !traces.contains(v);
          const bool u_new = traces.contains(u) && !l.contains(u);
          const bool v_new = traces.contains(v) && !l.contains(v);
          r.expect((u_old && v_new && u == cl(v)) || (v_old && u_new && v == cl(u)), f,
                   "gamma-tilde fibres pair an old set with its new trace");
        }
      }
    }
    for (VertexSet z : lb.sets()) {
      r.expect(a.apply(MapKind::kGammaBar, z) == z.without(t), f, "gamma-bar removes t");
      r.expect(icl(g, link, z.without(t)) == z.without(t), f, "Z \\ {t} is icl-closed");
    }
    for (VertexSet z1 : lb.sets()) {
      for (VertexSet z2 : lb.sets()) {
        if (z1 == z2) continue;
        const bool same_image = z1.without(t) == z2.without(t);
        const bool doubled = (z1 == z2.with(t) && !z2.contains(t)) ||
                             (z2 == z1.with(t) && !z1.contains(t));
        r.expect(same_image == doubled, f, "gamma-bar fibres are pairs Z, Z ∪ {t}");
      }
    }

    const char* d = kDoublingLaws;
    r.expect(a.tilde_increment() == 0 || a.tilde_increment() == 1, d, "m1 is 0 or 1");
    r.expect(a.bar_increment() == 0 || a.bar_increment() == 1, d, "m2 is 0 or 1");
    r.expect(a.height_base() <= a.height_tilde() && a.height_tilde() <= a.height_extended(), d,
             "heights ascend");
    const DoublingData& dd = a.doubling();
    r.expect(lt.size() == l.size() + dd.r.size(), d, "|L~| = |L| + |R|");
    r.expect(lb.size() == lt.size() + dd.s.size(), d, "|L-| = |L~| + |S|");
    {
      std::set<VertexSet> images(dd.rho_image.begin(), dd.rho_image.end());
      std::set<VertexSet> fresh;
      for (VertexSet s : lt.sets()) {
        if (!l.contains(s)) fresh.insert(s);
      }
      r.expect(images == fresh && images.size() == dd.r.size(), d,
               "rho is a bijection from R onto the new tilde sets");
      for (std::size_t i = 0; i < dd.r.size(); ++i) {
        r.expect(dd.rho_image[i] == (dd.r[i] & link) && cl(dd.rho_image[i]) == dd.r[i], d,
                 "rho intersects with the link");
      }
    }
    {
      std::set<VertexSet> beta_image;
      for (VertexSet u : lt.sets()) beta_image.insert(bbar(u));
      std::set<VertexSet> rest;
      for (VertexSet z : lb.sets()) {
        if (!beta_image.contains(z)) rest.insert(z);
      }
      std::set<VertexSet> tee(dd.t.begin(), dd.t.end());
      r.expect(tee == rest && tee.size() == dd.s.size(), d,
               "sigma is a bijection from S onto the sets missing from beta-bar's image");
    }

    if (g.size() <= kMaxPairScanVertices) {
      const char* b = kPairBiconditional;
      for_each_subset(g.vertices(), [&](VertexSet y) {
        const bool lhs = lb.contains(y) && lb.contains(y.with(t));
        const VertexSet py = perp(g, y);
        const VertexSet rhs_set = y.is_subset_of(link) ? perp(g, py & link) & link
                                                       : perp(g, py & link);
        const bool rhs = !py.is_subset_of(link) && y == rhs_set;
        r.expect(lhs == rhs, b, "Y and Y ∪ {t} closed exactly under the link condition");
      });
    }
  });
}

void check_equivalence_laws(const Graph& g, VertexSet s, VertexSet t, VertexSet y,
                            PropertyReport& r) {
  const char* f = kEquivalenceLaws;
  const auto cl = [&](VertexSet v) { return closure(g, v); };
  const bool equiv = perp(g, s) == perp(g, t);
  r.expect(equiv == perp_equivalent(g, s, t), f, "perp equivalence matches its definition");
  r.expect(equiv == (t.is_subset_of(cl(s)) && s.is_subset_of(cl(t))), f,
           "perp equivalence by mutual closure containment");
  const VertexSet closed = cl(y);
  if (equiv && s.is_subset_of(closed)) {
    r.expect(t.is_subset_of(closed), f, "closed sets respect perp equivalence");
  }
  if (equiv && pairwise_adjacent(g, s)) {
    r.expect(pairwise_adjacent(g, t) && pairwise_adjacent(g, s | t), f,
             "perp equivalence preserves simplices");
  }
  if (pairwise_adjacent(g, s)) {
    const VertexSet acl = abelian_closure(g, s);
    r.expect(acl == cl(s) && s.is_subset_of(acl) && pairwise_adjacent(g, acl) &&
                 perp(g, acl) == perp(g, s),
             f, "abelian closure is the closed simplex");
  }
  const bool o_equiv = (perp(g, s) - s) == (perp(g, t) - t);
  r.expect(o_equiv == o_equivalent(g, s, t), f, "o equivalence matches its definition");
  if (o_equiv && !s.intersects(perp(g, s))) {
    r.expect(perp(g, s | t) == perp(g, s), f, "o-equivalent co-simplices share complements");
  }
  if (s.size() >= 1 && !s.intersects(perp(g, s)) && pairwise_non_adjacent(g, s)) {
    guarded(r, f, "free closure", [&] {
      const VertexSet fcl = free_closure(g, s);
      r.expect(s.is_subset_of(fcl), f, "free closure contains its argument");
      if (g.size() <= 8) {
        VertexSet brute;
        for_each_subset(g.vertices(), [&](VertexSet b) {
          if (!b.empty() && !b.intersects(perp(g, b)) && pairwise_non_adjacent(g, b) &&
              (perp(g, b) - b) == (perp(g, s) - s)) {
            brute |= b;
          }
        });
        r.expect(fcl == brute, f, "free closure is the union of o-equivalent free co-simplices");
      }
      // The union need not be a free co-simplex itself; when it is, it is the
      // largest one o-equivalent to s.
      if (!fcl.intersects(perp(g, fcl)) && pairwise_non_adjacent(g, fcl)) {
        r.expect(o_equivalent(g, fcl, s) && free_closure(g, fcl) == fcl, f,
                 "a free-co-simplex free closure is o-equivalent and fixed");
      }
    });
  }
}

namespace {

// c(Z)⊥ = c(Z⊥) and the lattice epimorphism L -> L^c, asserted as stated.
void quotient_laws(const Graph& g, const CompressedGraph& gc, const ClosedSetLattice& lattice,
                   const std::vector<VertexSet>& samples, const char* c, const char* q,
                   PropertyReport& r) {
  for (VertexSet z : samples) {
    r.expect(quotient_complement(gc, gc.image(z)) == gc.image(perp(g, z)), c,
             "complement commutes with the quotient map");
  }

  const ClosedSetLattice lc = quotient_lattice(gc);
  std::set<VertexSet> hit;
  for (VertexSet y : lattice.sets()) {
    const VertexSet cy = gc.image(y);
    hit.insert(cy);
    r.expect(lc.contains(cy), q, "closed sets map to closed sets");
    r.expect(gc.image(perp(g, y)) == quotient_complement(gc, cy), q,
             "quotient map preserves complements");
  }
  r.expect(hit.size() == lc.size(), q, "quotient map is onto");
  const auto qcl = [&](VertexSet w) {
    return quotient_complement(gc, quotient_complement(gc, w));
  };
  for (VertexSet s : lattice.sets()) {
    for (VertexSet t : lattice.sets()) {
      r.expect(gc.image(s & t) == (gc.image(s) & gc.image(t)), q,
               "quotient map preserves meets");
      r.expect(gc.image(closure(g, s | t)) == qcl(gc.image(s) | gc.image(t)), q,
               "quotient map preserves joins");
    }
  }
}

}  // namespace

void check_compression_laws(const Graph& g, const ClosedSetLattice& lattice,
                            const std::vector<VertexSet>& samples, PropertyReport& r) {
  const int n = g.size();
  const char* f = kVertexClassLaws;
  std::vector<VertexSet> pc(n), oc(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (g.closed_neighbourhood(x) == g.closed_neighbourhood(y)) pc[x] = pc[x].with(y);
      if (g.neighbours(x) == g.neighbours(y)) oc[x] = oc[x].with(y);
    }
    r.expect(pairwise_adjacent(g, pc[x]), f, "perp class is a simplex");
    r.expect((pc[x] & oc[x]) == VertexSet::singleton(x), f, "the two classes meet in x");
    if (pc[x].size() >= 2) r.expect(oc[x].size() == 1, f, "big perp class forces trivial o class");
    if (oc[x].size() >= 2) {
      r.expect(pairwise_non_adjacent(g, oc[x]) && !oc[x].intersects(perp(g, oc[x])) &&
                   pc[x].size() == 1,
               f, "big o class is a free co-simplex with trivial perp class");
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y : pc[x] | oc[x]) {
      for (int z : pc[y] | oc[y]) {
        r.expect((pc[x] | oc[x]).contains(z), f, "vertex equivalence is transitive");
      }
    }
  }

  bool has_big_o_class = false;
  for (int x = 0; x < n; ++x) has_big_o_class = has_big_o_class || oc[x].size() >= 2;

  guarded(r, kCompressionLaws, "compression", [&] {
    const CompressedGraph gc = compress(g);
    const char* c = kCompressionLaws;
    for (int x = 0; x < n; ++x) {
      r.expect(gc.classes[gc.class_of[x]] == (pc[x] | oc[x]), c, "classes are the equivalence");
    }
    for (int k = 0; k < gc.size(); ++k) {
      const ClassLabel& lab = gc.labels[k];
      r.expect(gc.has_loop(k) == (lab.kind == ClassKind::kPerp && lab.size >= 2), c,
               "loops sit exactly on perp classes of size two or more");
      r.expect((lab.size >= 2) == (lab.kind != ClassKind::kSingle), c,
               "class kind agrees with class size");
    }
    for (auto [u, v] : g.edges()) {
      r.expect(gc.adjacent(gc.class_of[u], gc.class_of[v]), c, "edges map to edges or loops");
    }
    if (!has_big_o_class) quotient_laws(g, gc, lattice, samples, c, kQuotientLatticeLaws, r);
  });
}

void check_quotient_map_as_stated(const Graph& g, const ClosedSetLattice& lattice,
                                  const std::vector<VertexSet>& samples, PropertyReport& r) {
  guarded(r, kQuotientMapAsStated, "compression", [&] {
    quotient_laws(g, compress(g), lattice, samples, kQuotientMapAsStated, kQuotientMapAsStated,
                  r);
  });
}

void check_automorphism_laws(const Graph& g, PropertyReport& r, int max_vertices) {
  if (g.size() > max_vertices) return;
  const char* f = kAutomorphismLaws;
  guarded(r, f, "automorphism group", [&] {
    const PermGroup aut = automorphism_group(g);
    const std::size_t limit = std::min(aut.order(), kMaxAutomorphismsChecked);
    for (std::size_t i = 0; i < limit; ++i) {
      const Permutation phi = aut.element(i);
      bool ok = true;
      for (int u = 0; u < g.size(); ++u) {
        VertexSet image;
        for (int v : g.closed_neighbourhood(u)) image = image.with(phi[v]);
        if (image != g.closed_neighbourhood(phi[u])) ok = false;
      }
      r.expect(ok, f, "automorphisms carry complements to complements");
    }
    const SplitSequenceReport split = verify_split_sequence(g);
    r.expect(split.ok(), f, "split exact sequence holds");
  });
}

PropertyReport check_all_exhaustive(const Graph& g) {
  if (g.size() > kMaxExhaustiveVertices) {
    throw CapExceeded("exhaustive property check is limited to " +
                      std::to_string(kMaxExhaustiveVertices) + " vertices");
  }
  PropertyReport r;
  const VertexSet x = g.vertices();
  std::vector<VertexSet> all;
  for_each_subset(x, [&](VertexSet y) { all.push_back(y); });
  const ClosedSetLattice lattice = enumerate_closed_sets(g);

  for (VertexSet y1 : all) {
    for (VertexSet y2 : all) {
      for (VertexSet z : all) check_complement_laws(g, y1, y2, z, r);
      check_closure_laws(g, y1, y2, r);
      if (perp(g, y1) == perp(g, y2)) {
        for (VertexSet c : lattice.sets()) check_equivalence_laws(g, y1, y2, c, r);
      } else {
        check_equivalence_laws(g, y1, y2, x, r);
      }
    }
    check_extension_laws(g, y1, r);
  }
  check_lattice_laws(g, lattice, all, r);
  check_decomposition_laws(g, lattice, r);
  check_compression_laws(g, lattice, all, r);
  check_automorphism_laws(g, r);
  return r;
}

PropertyReport check_all_sampled(const Graph& g, std::mt19937_64& rng, int samples) {
  PropertyReport r;
  const int n = g.size();
  const ClosedSetLattice lattice = enumerate_closed_sets(g);
  std::vector<VertexSet> drawn;
  for (int i = 0; i < samples; ++i) {
    const VertexSet y1 = random_subset(n, rng);
    VertexSet y2 = random_subset(n, rng);
    const VertexSet z = random_subset(n, rng);
    check_complement_laws(g, y1, y2, z, r);
    check_closure_laws(g, y1, y2, r);
    // Half the pairs are drawn inside cl(y1) so that equivalent pairs occur.
    if (i % 2 == 1) y2 = y2 & closure(g, y1);
    check_equivalence_laws(g, y1, y2, z, r);
    check_extension_laws(g, z, r);
    drawn.push_back(y1);
  }
  check_lattice_laws(g, lattice, drawn, r);
  check_decomposition_laws(g, lattice, r);
  check_compression_laws(g, lattice, drawn, r);
  check_automorphism_laws(g, r);
  return r;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::build(n, edges);
}

VertexSet random_subset(int n, std::mt19937_64& rng) {
  return VertexSet(rng()) & VertexSet::range(n);
}

}  // namespace orthograph
