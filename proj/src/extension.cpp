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

#include "orthograph/extension.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "orthograph/error.hpp"
#include "orthograph/ortho.hpp"

namespace orthograph {

namespace {

// Above this many base vertices the doubling families are evaluated over the
// members of L~ instead of over every subset of X; both give the same sets
// because every solution of the defining equations lies in L~.
constexpr int kSubsetScanLimit = 16;

std::vector<VertexSet> canonical(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return sets;
}

}  // namespace

VertexSet icl(const Graph& g, VertexSet link, VertexSet u) {
  const VertexSet c = closure(g, u);
  return u.is_subset_of(link) ? (c & link) : c;
}

TildeLattice tilde_lattice(const Graph& g, VertexSet link) {
  require_within(g, link, "link");
  const ClosedSetLattice base = enumerate_closed_sets(g);
  TildeLattice out;
  std::vector<VertexSet> members = base.sets();
  for (VertexSet c : base.sets()) out.link_traces.push_back(c & link);
  out.link_traces = canonical(std::move(out.link_traces));
  members.insert(members.end(), out.link_traces.begin(), out.link_traces.end());
  out.family = SetLattice::from_family(g.vertices(), std::move(members));
  for (VertexSet y : out.family.sets()) {
    if (!base.contains(y)) out.new_sets.push_back(y);
  }
  return out;
}

std::vector<VertexSet> new_tilde_sets_by_closure(const Graph& g, VertexSet link) {
  std::vector<VertexSet> out;
  const ClosedSetLattice closed = enumerate_closed_sets(g);
  for (VertexSet z : closed.sets()) {
    if (!z.is_subset_of(link) && closure(g, z & link) == z) out.push_back(z & link);
  }
  return canonical(std::move(out));
}

VertexSet tilde_join(const Graph& g, VertexSet link, VertexSet u, VertexSet v) {
  const VertexSet c = closure(g, u | v);
  return (u | v).is_subset_of(link) ? (c & link) : c;
}

std::optional<VertexSet> is_simplex_complement(const Graph& g, VertexSet j) {
  require_within(g, j, "candidate link");
  if (!is_closed(g, j)) return std::nullopt;
  const VertexSet s = perp(g, j);
  if (!is_simplex(g, s)) return std::nullopt;
  return s;
}

const char* to_string(MapKind kind) {
  switch (kind) {
    case MapKind::kBetaTilde: return "beta_tilde";
    case MapKind::kGammaTilde: return "gamma_tilde";
    case MapKind::kBetaBar: return "beta_bar";
    case MapKind::kGammaBar: return "gamma_bar";
    case MapKind::kBeta: return "beta";
    case MapKind::kGamma: return "gamma";
  }
  return "?";
}

VertexSet ExtensionAnalysis::beta_bar_formula(VertexSet y) const {
  return perp(base_, y).is_subset_of(link_) ? y.with(new_vertex()) : y;
}

VertexSet ExtensionAnalysis::apply(MapKind kind, VertexSet element) const {
  auto need = [&](const SetLattice& domain, const char* name) {
    if (!domain.contains(element)) {
      throw Error(std::string(to_string(kind)) + ": argument is not in " + name);
    }
  };
  const int t = new_vertex();
  switch (kind) {
    case MapKind::kBetaTilde:
      need(lattice_, "the base lattice");
      return element;
    case MapKind::kGammaTilde:
      need(tilde_.family, "the intermediate lattice");
      return closure(base_, element);
    case MapKind::kBetaBar:
      need(tilde_.family, "the intermediate lattice");
      return closure(extended_, element);
    case MapKind::kGammaBar:
      need(extended_lattice_, "the extended lattice");
      return icl(base_, link_, element.without(t));
    case MapKind::kBeta:
      need(lattice_, "the base lattice");
      return closure(extended_, element);
    case MapKind::kGamma:
      need(extended_lattice_, "the extended lattice");
      return closure(base_, element & base_vertices());
  }
  throw Error("unknown map");
}

void ExtensionAnalysis::compute_doubling() {
  const VertexSet x = base_vertices();
  for (VertexSet z : tilde_.family.sets()) {
    if (!z.is_subset_of(link_) && closure(base_, z & link_) == z) {
      doubling_.r.push_back(z);
      doubling_.rho_image.push_back(z & link_);
    }
  }

  auto classify = [&](VertexSet y) {
    const VertexSet comp = perp(base_, y);
    if (comp.is_subset_of(link_)) return;
    const VertexSet back = perp(base_, comp & link_);
    if (!y.is_subset_of(link_)) {
      if (y == back) doubling_.s1.push_back(y);
    } else if (y == (back & link_)) {
      doubling_.s2.push_back(y);
    }
  };
  if (base_.size() <= kSubsetScanLimit) {
    for_each_subset(x, classify);
  } else {
    for (VertexSet y : tilde_.family.sets()) classify(y);
  }
  doubling_.s1 = canonical(std::move(doubling_.s1));
  doubling_.s2 = canonical(std::move(doubling_.s2));
  doubling_.s = doubling_.s1;
  doubling_.s.insert(doubling_.s.end(), doubling_.s2.begin(), doubling_.s2.end());
  doubling_.s = canonical(std::move(doubling_.s));
  for (VertexSet y : doubling_.s) doubling_.t.push_back(y.with(new_vertex()));
}

void ExtensionAnalysis::verify() const {
  const int t = new_vertex();
  const SetLattice& tl = tilde_.family;

  ensure(tilde_.new_sets == new_tilde_sets_by_closure(base_, link_),
         "new intermediate sets disagree with their closure description");
  ensure(height_base() <= height_tilde() && height_tilde() <= height_extended(),
         "heights are not monotone along the extension");
  ensure(tilde_increment() <= 1 && bar_increment() <= 1,
         "a height increment exceeds one");

  // L~ doubles L along rho.
  ensure(tl.size() == lattice_.size() + doubling_.r.size(),
         "|L~| != |L| + |R|");
  ensure(canonical(doubling_.rho_image) == tilde_.new_sets &&
             doubling_.rho_image.size() == doubling_.r.size(),
         "rho is not a bijection onto L~ \\ L");
  for (VertexSet z : doubling_.r) ensure(lattice_.contains(z), "R is not inside L");

  // Maps between the three families.
  std::unordered_set<VertexSet> beta_bar_image;
  for (VertexSet y : tl.sets()) {
    const VertexSet image = apply(MapKind::kBetaBar, y);
    ensure(image == beta_bar_formula(y), "beta_bar differs from its closed form");
    ensure(extended_lattice_.contains(image), "beta_bar leaves the extended lattice");
    ensure(apply(MapKind::kGammaBar, image) == y, "gamma_bar . beta_bar != id");
    ensure(closure(base_, y) == apply(MapKind::kGammaTilde, y), "gamma_tilde mismatch");
    beta_bar_image.insert(image);
  }
  for (VertexSet y : lattice_.sets()) {
    ensure(apply(MapKind::kGammaTilde, apply(MapKind::kBetaTilde, y)) == y,
           "gamma_tilde . beta_tilde != id");
    const VertexSet b = apply(MapKind::kBeta, y);
    ensure(b == beta_bar_formula(y), "beta differs from its closed form");
    ensure(apply(MapKind::kGamma, b) == y, "gamma . beta != id");
  }
  for (VertexSet z : extended_lattice_.sets()) {
    const VertexSet down = apply(MapKind::kGammaBar, z);
    ensure(down == z.without(t), "gamma_bar(Z) != Z \\ {t}");
    ensure(tl.contains(down), "gamma_bar leaves L~");
    ensure(apply(MapKind::kGamma, z) == closure(base_, apply(MapKind::kGammaBar, z)),
           "gamma != gamma_tilde . gamma_bar");
  }

  // L- doubles beta_bar(L~) along sigma.
  std::vector<VertexSet> outside;
  for (VertexSet z : extended_lattice_.sets()) {
    if (!beta_bar_image.contains(z)) outside.push_back(z);
  }
  ensure(canonical(outside) == canonical(doubling_.t), "T != L- \\ beta_bar(L~)");
  ensure(extended_lattice_.size() == tl.size() + doubling_.s.size(),
         "|L-| != |L~| + |S|");
  for (VertexSet y : doubling_.s) {
    ensure(tl.contains(y) && extended_lattice_.contains(y) &&
               extended_lattice_.contains(y.with(t)),
           "S member is not doubled inside L-");
  }

  if (link_closed_) {
    ensure(tl.size() == lattice_.size(), "closed link but L~ != L");
    ensure(doubling_.s1.empty(), "closed link but S1 is non-empty");
  }
  if (simplex_witness_) {
    ensure(doubling_.s.empty(), "simplex-complement link but S is non-empty");
  }
}

ExtensionAnalysis analyze_extension(const Graph& g, VertexSet link) {
  require_within(g, link, "link");
  ExtensionAnalysis a;
  a.base_ = g;
  a.link_ = link;
  a.extended_ = adjoin_vertex(g, link);
  a.lattice_ = enumerate_closed_sets(g);
  a.tilde_ = tilde_lattice(g, link);
  a.extended_lattice_ = enumerate_closed_sets(a.extended_);
  a.link_closed_ = is_closed(g, link);
  a.simplex_witness_ = is_simplex_complement(g, link);
  a.compute_doubling();
  a.verify();
  return a;
}

GammaVerdict gamma_isomorphism_verdict(const ExtensionAnalysis& analysis) {
  GammaVerdict verdict;
  verdict.criterion = analysis.simplex_witness().has_value();
  verdict.poset_oracle =
      poset_isomorphic(analysis.lattice(), analysis.extended_lattice());
  ensure(verdict.criterion == verdict.poset_oracle,
         "simplex-complement criterion disagrees with the isomorphism search");
  if (verdict.criterion) {
    std::unordered_set<VertexSet> images;
    for (VertexSet z : analysis.extended_lattice().sets()) {
      images.insert(analysis.apply(MapKind::kGamma, z));
    }
    ensure(images.size() == analysis.extended_lattice().size(),
           "gamma is not injective although the criterion holds");
  }
  return verdict;
}

AlphaTransform::AlphaTransform(const ExtensionAnalysis& analysis)
    : analysis_(&analysis) {
  require(analysis.link_closed(), "alpha needs a closed link");
  witness_ = perp(analysis.base(), analysis.link());
  require(!is_simplex(analysis.base(), witness_),
          "alpha needs the link's complement to be a non-simplex");
  const VertexSet outside = witness_ - analysis.link();
  ensure(!outside.empty(), "non-simplex complement lies inside the link");
  pivot_ = outside.first();
}

VertexSet AlphaTransform::operator()(VertexSet y) const {
  const ExtensionAnalysis& a = *analysis_;
  require(a.extended_lattice().contains(y), "alpha argument is not in the extended lattice");
  const int t = a.new_vertex();
  if (!y.contains(t) || y.contains(pivot_)) return y;
  const VertexSet z = perp(a.extended(), y);
  ensure(z.contains(t), "element with t and without a has a link-bound complement");
  return perp(a.extended(), z.without(t).with(pivot_));
}

bool AlphaTransform::satisfies_split_property(VertexSet y) const {
  const int t = analysis_->new_vertex();
  return !y.contains(t) || witness_.with(t).is_subset_of(y);
}

bool is_strictly_ascending(const std::vector<VertexSet>& chain) {
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (!chain[i - 1].is_strict_subset_of(chain[i])) return false;
  }
  return true;
}

std::vector<VertexSet> AlphaTransform::apply(const std::vector<VertexSet>& chain) const {
  require(is_strictly_ascending(chain), "alpha input chain is not strictly ascending");
  std::vector<VertexSet> out;
  out.reserve(chain.size());
  for (VertexSet y : chain) out.push_back((*this)(y));
  ensure(is_strictly_ascending(out), "alpha image is not strictly ascending");
  return out;
}

bool closed_link_height_check(const ExtensionAnalysis& analysis) {
  require(analysis.link_closed(), "height check needs a closed link");
  return analysis.height_base() == analysis.height_extended();
}

bool cosimplex_doubling_check(const ExtensionAnalysis& analysis, VertexSet co_simplex) {
  const Graph& g = analysis.base();
  require_within(g, co_simplex, "co-simplex");
  require(!co_simplex.empty(), "co-simplex must be non-empty");
  require(is_co_simplex(g, co_simplex), "witness is not a co-simplex");
  require(perp(g, co_simplex) == analysis.link(), "link is not the co-simplex complement");
  require(is_realisable(g, analysis.link()), "link is not realisable");

  std::vector<VertexSet> inside;
  for (VertexSet y : analysis.lattice().sets()) {
    if (y.is_subset_of(analysis.link())) inside.push_back(y);
  }
  const auto& d = analysis.doubling();
  return d.s1.empty() && d.s2 == canonical(inside) &&
         d.s2 == relative_lattice(g, analysis.link()).sets();
}

}  // namespace orthograph
