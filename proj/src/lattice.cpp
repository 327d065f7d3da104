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

#include "orthograph/lattice.hpp"

#include <algorithm>
#include <array>
#include <tuple>
#include <unordered_set>

#include "orthograph/error.hpp"
#include "orthograph/ortho.hpp"

namespace orthograph {

SetLattice SetLattice::from_family(VertexSet universe, std::vector<VertexSet> sets) {
  for (VertexSet s : sets) {
    require(s.is_subset_of(universe), "lattice member outside its universe");
  }
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

  SetLattice out;
  out.universe_ = universe;
  out.sets_ = std::move(sets);
  const int n = static_cast<int>(out.sets_.size());
  out.up_.assign(n, {});
  out.down_.assign(n, {});
  out.rank_.assign(n, 0);

  // Canonical order is a linear extension, so strict subsets of element j
  // all sit before j. Scanning them largest-first, a candidate is a cover
  // exactly when no previously found cover contains it.
  for (int j = 0; j < n; ++j) {
    const VertexSet upper = out.sets_[j];
    std::vector<int>& below = out.down_[j];
    for (int i = j - 1; i >= 0; --i) {
      const VertexSet lower = out.sets_[i];
      if (!lower.is_strict_subset_of(upper)) continue;
      bool dominated = false;
      for (int k : below) {
        if (lower.is_subset_of(out.sets_[k])) {
          dominated = true;
          break;
        }
      }
      if (!dominated) below.push_back(i);
    }
    std::sort(below.begin(), below.end());
    for (int i : below) {
      out.up_[i].push_back(j);
      out.covers_.emplace_back(i, j);
      out.rank_[j] = std::max(out.rank_[j], out.rank_[i] + 1);
    }
    out.height_ = std::max(out.height_, out.rank_[j]);
  }
  std::sort(out.covers_.begin(), out.covers_.end());

  if (n > 0) {
    VertexSet all_meet = out.sets_.back();
    VertexSet all_join;
    for (VertexSet s : out.sets_) {
      all_meet &= s;
      all_join |= s;
    }
    if (auto b = out.index_of(all_meet)) out.bottom_ = *b;
    if (auto t = out.index_of(all_join)) out.top_ = *t;
  }
  return out;
}

std::optional<int> SetLattice::index_of(VertexSet s) const {
  auto it = std::lower_bound(sets_.begin(), sets_.end(), s);
  if (it == sets_.end() || *it != s) return std::nullopt;
  return static_cast<int>(it - sets_.begin());
}

VertexSet SetLattice::meet(VertexSet a, VertexSet b) const {
  require(contains(a) && contains(b), "meet argument is not a lattice member");
  const VertexSet both = a & b;
  VertexSet best;
  for (VertexSet s : sets_) {
    if (s.is_subset_of(both)) best |= s;
  }
  ensure(contains(best), "family has no greatest lower bound");
  return best;
}

VertexSet SetLattice::join(VertexSet a, VertexSet b) const {
  require(contains(a) && contains(b), "join argument is not a lattice member");
  const VertexSet either = a | b;
  VertexSet best = universe_;
  bool found = false;
  for (VertexSet s : sets_) {
    if (either.is_subset_of(s)) {
      best &= s;
      found = true;
    }
  }
  ensure(found && contains(best), "family has no least upper bound");
  return best;
}

SetLattice intersection_closure(VertexSet universe,
                                const std::vector<VertexSet>& generators) {
  std::unordered_set<VertexSet> seen{universe};
  std::vector<VertexSet> members{universe};
  for (VertexSet g : generators) {
    const std::size_t count = members.size();
    for (std::size_t i = 0; i < count; ++i) {
      const VertexSet s = members[i] & g;
      if (seen.insert(s).second) members.push_back(s);
    }
  }
  return SetLattice::from_family(universe, std::move(members));
}

ClosedSetLattice enumerate_closed_sets(const Graph& g) {
  std::vector<VertexSet> generators;
  generators.reserve(g.size());
  for (int v = 0; v < g.size(); ++v) generators.push_back(g.closed_neighbourhood(v));
  return intersection_closure(g.vertices(), generators);
}

VertexSet meet(const SetLattice& lattice, VertexSet a, VertexSet b) {
  return lattice.meet(a, b);
}

VertexSet join(const SetLattice& lattice, VertexSet a, VertexSet b) {
  return lattice.join(a, b);
}

VertexSet ortho_dual(const Graph& g, const ClosedSetLattice& lattice, VertexSet y) {
  require(lattice.contains(y), "ortho_dual argument is not a closed set");
  return perp(g, y);
}

KernelStrip strip_kernel(const Graph& g) {
  KernelStrip out;
  out.kernel = kernel(g);
  out.core = induced_subgraph(g, g.vertices() - out.kernel);
  out.original = enumerate_closed_sets(g);
  out.reduced = enumerate_closed_sets(out.core.graph);
  ensure(kernel(out.core.graph).empty(), "stripped graph still has a kernel");

  std::unordered_set<VertexSet> images;
  for (VertexSet y : out.original.sets()) {
    const VertexSet image = out.core.restrict(y - out.kernel);
    ensure(out.reduced.contains(image), "kernel strip image is not closed");
    images.insert(image);
    out.correspondence.emplace_back(y, image);
  }
  ensure(images.size() == out.original.size() &&
             out.original.size() == out.reduced.size(),
         "kernel strip is not a bijection");
  return out;
}

ClosedSetLattice relative_lattice(const Graph& g, VertexSet z) {
  require_within(g, z, "relative lattice base");
  std::vector<VertexSet> generators;
  for (int v : z) generators.push_back(g.closed_neighbourhood(v) & z);
  return intersection_closure(z, generators);
}

bool is_realisable(const Graph& g, VertexSet j) {
  require_within(g, j, "realisability candidate");
  require(is_closed(g, j), "realisability is only defined for closed sets");
  const ClosedSetLattice inside = relative_lattice(g, j);
  for (int s : g.vertices() - j) {
    if (!inside.contains(g.closed_neighbourhood(s) & j)) return false;
  }
  return true;
}

bool realisable_by_definition(const Graph& g, VertexSet j) {
  require(is_closed(g, j), "realisability is only defined for closed sets");
  std::vector<VertexSet> below;
  const ClosedSetLattice closed = enumerate_closed_sets(g);
  for (VertexSet y : closed.sets()) {
    if (y.is_subset_of(j)) below.push_back(y);
  }
  return relative_lattice(g, j).sets() == SetLattice::from_family(j, below).sets();
}

namespace {

// Per-element data every order isomorphism has to preserve.
using Signature = std::array<int, 6>;

std::vector<Signature> signatures(const SetLattice& l) {
  const int n = static_cast<int>(l.size());
  std::vector<int> corank(n, 0);
  for (int i = n - 1; i >= 0; --i) {
    for (int j : l.upper_covers(i)) corank[i] = std::max(corank[i], corank[j] + 1);
  }
  std::vector<Signature> out(n);
  for (int i = 0; i < n; ++i) {
    int below = 0;
    int above = 0;
    for (int k = 0; k < n; ++k) {
      if (k == i) continue;
      if (l[k].is_subset_of(l[i])) ++below;
      if (l[i].is_subset_of(l[k])) ++above;
    }
    out[i] = {l.rank(i), corank[i], static_cast<int>(l.lower_covers(i).size()),
              static_cast<int>(l.upper_covers(i).size()), below, above};
  }
  return out;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const SetLattice& a, const SetLattice& b)
      : a_(a), b_(b), sig_a_(signatures(a)), sig_b_(signatures(b)),
        map_(a.size(), -1), used_(b.size(), false) {}

  bool profiles_match() const {
    auto x = sig_a_;
    auto y = sig_b_;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
  }

  bool extend(int i) {
    if (i == static_cast<int>(a_.size())) return true;
    for (int c = 0; c < static_cast<int>(b_.size()); ++c) {
      if (used_[c] || sig_b_[c] != sig_a_[i] || !consistent(i, c)) continue;
      map_[i] = c;
      used_[c] = true;
      if (extend(i + 1)) return true;
      used_[c] = false;
      map_[i] = -1;
    }
    return false;
  }

  const std::vector<int>& mapping() const { return map_; }

 private:
  bool consistent(int i, int c) const {
    for (int k = 0; k < i; ++k) {
      const int m = map_[k];
      if (a_[k].is_subset_of(a_[i]) != b_[m].is_subset_of(b_[c])) return false;
      if (a_[i].is_subset_of(a_[k]) != b_[c].is_subset_of(b_[m])) return false;
    }
    return true;
  }

  const SetLattice& a_;
  const SetLattice& b_;
  std::vector<Signature> sig_a_;
  std::vector<Signature> sig_b_;
  std::vector<int> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<int>> find_poset_isomorphism(const SetLattice& a,
                                                       const SetLattice& b) {
  if (a.size() != b.size() || a.height() != b.height() ||
      a.covers().size() != b.covers().size()) {
    return std::nullopt;
  }
  IsomorphismSearch search(a, b);
  if (!search.profiles_match()) return std::nullopt;
  if (!search.extend(0)) return std::nullopt;
  return search.mapping();
}

std::vector<std::vector<int>> maximal_chains(const SetLattice& lattice,
                                             std::size_t limit) {
  std::vector<std::vector<int>> chains;
  if (lattice.size() == 0) return chains;
  std::vector<int> current;
  auto walk = [&](auto&& self, int i) -> void {
    current.push_back(i);
    const auto& ups = lattice.upper_covers(i);
    if (ups.empty()) {
      if (chains.size() >= limit) throw CapExceeded("too many maximal chains");
      chains.push_back(current);
    }
    for (int j : ups) self(self, j);
    current.pop_back();
  };
  for (int i = 0; i < static_cast<int>(lattice.size()); ++i) {
    if (lattice.lower_covers(i).empty()) walk(walk, i);
  }
  return chains;
}

}  // namespace orthograph
