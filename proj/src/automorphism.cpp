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

#include "orthograph/automorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "orthograph/error.hpp"

namespace orthograph {

namespace {

// Largest sample of group elements whose pairwise products are checked.
constexpr std::size_t kPairSample = 400;

// Rows may include the vertex itself (a loop).
struct ColouredGraph {
  std::vector<VertexSet> rows;
  std::vector<int> colour;
};

std::vector<int> relabel_colours(const std::vector<std::vector<int>>& keys) {
  std::map<std::vector<int>, int> index;
  for (const auto& k : keys) index.emplace(k, 0);
  int next = 0;
  for (auto& [k, v] : index) v = next++;
  std::vector<int> out;
  out.reserve(keys.size());
  for (const auto& k : keys) out.push_back(index[k]);
  return out;
}

// Iterated colour refinement: a vertex's new colour is its old colour with the
// sorted colours of its neighbours. Automorphisms preserve every round.
void refine(ColouredGraph& cg) {
  const int n = static_cast<int>(cg.rows.size());
  int classes = -1;
  while (true) {
    std::vector<std::vector<int>> keys(n);
    for (int v = 0; v < n; ++v) {
      keys[v].push_back(cg.colour[v]);
      std::vector<int> around;
      for (int u : cg.rows[v]) around.push_back(cg.colour[u]);
      std::sort(around.begin(), around.end());
      keys[v].insert(keys[v].end(), around.begin(), around.end());
    }
    cg.colour = relabel_colours(keys);
    const int now = cg.colour.empty()
                        ? 0
                        : *std::max_element(cg.colour.begin(), cg.colour.end()) + 1;
    if (now == classes) break;
    classes = now;
  }
}

class AutomorphismSearch {
 public:
  AutomorphismSearch(const ColouredGraph& cg, std::size_t max_order)
      : cg_(cg), n_(static_cast<int>(cg.rows.size())), max_order_(max_order),
        image_(n_, -1), used_(n_, false) {}

  std::vector<std::uint64_t> run() {
    extend(0);
    return std::move(found_);
  }

 private:
  void extend(int v) {
    if (v == n_) {
      if (found_.size() >= max_order_) {
        throw CapExceeded("automorphism group exceeds " + std::to_string(max_order_) +
                          " elements");
      }
      found_.push_back(PermGroup::encode(image_));
      return;
    }
    for (int w = 0; w < n_; ++w) {
      if (used_[w] || cg_.colour[w] != cg_.colour[v]) continue;
      if (cg_.rows[v].contains(v) != cg_.rows[w].contains(w)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        ok = cg_.rows[u].contains(v) == cg_.rows[image_[u]].contains(w);
      }
      if (!ok) continue;
      image_[v] = w;
      used_[w] = true;
      extend(v + 1);
      used_[w] = false;
      image_[v] = -1;
    }
  }

  const ColouredGraph& cg_;
  int n_;
  std::size_t max_order_;
  Permutation image_;
  std::vector<bool> used_;
  std::vector<std::uint64_t> found_;
};

PermGroup search_group(ColouredGraph cg, std::size_t max_order) {
  const int n = static_cast<int>(cg.rows.size());
  if (n > kMaxAutomorphismDegree) {
    throw CapExceeded("automorphism search is limited to " +
                      std::to_string(kMaxAutomorphismDegree) + " vertices, got " +
                      std::to_string(n));
  }
  refine(cg);
  return PermGroup(n, AutomorphismSearch(cg, max_order).run());
}

bool is_bijection(const Permutation& p, int degree) {
  if (static_cast<int>(p.size()) != degree) return false;
  std::vector<bool> seen(degree, false);
  for (int v : p) {
    if (v < 0 || v >= degree || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::vector<std::size_t> sample_indices(std::size_t order) {
  std::vector<std::size_t> out;
  if (order <= kPairSample) {
    out.resize(order);
    std::iota(out.begin(), out.end(), 0);
    return out;
  }
  for (std::size_t k = 0; k < kPairSample; ++k) out.push_back(k * order / kPairSample);
  return out;
}

std::size_t factorial(int k) {
  std::size_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

}  // namespace

Permutation identity_permutation(int degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  require(a.size() == b.size(), "composing permutations of different degree");
  Permutation out(b.size());
  for (std::size_t v = 0; v < b.size(); ++v) out[v] = a[b[v]];
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t v = 0; v < p.size(); ++v) out[p[v]] = static_cast<int>(v);
  return out;
}

PermGroup::PermGroup(int degree, std::vector<std::uint64_t> codes)
    : degree_(degree), codes_(std::move(codes)) {
  require(degree <= kMaxAutomorphismDegree, "permutation degree too large to pack");
  std::sort(codes_.begin(), codes_.end());
  codes_.erase(std::unique(codes_.begin(), codes_.end()), codes_.end());
}

std::uint64_t PermGroup::encode(const Permutation& p) {
  std::uint64_t code = 0;
  for (std::size_t v = 0; v < p.size(); ++v) {
    code |= static_cast<std::uint64_t>(p[v]) << (4 * v);
  }
  return code;
}

Permutation PermGroup::decode(std::uint64_t code, int degree) {
  Permutation p(degree);
  for (int v = 0; v < degree; ++v) p[v] = static_cast<int>((code >> (4 * v)) & 0xF);
  return p;
}

bool PermGroup::contains(const Permutation& p) const {
  if (static_cast<int>(p.size()) != degree_) return false;
  return std::binary_search(codes_.begin(), codes_.end(), encode(p));
}

PermGroup automorphism_group(const Graph& g, std::size_t max_order) {
  ColouredGraph cg;
  for (int v = 0; v < g.size(); ++v) {
    cg.rows.push_back(g.neighbours(v));
    cg.colour.push_back(0);
  }
  return search_group(std::move(cg), max_order);
}

PermGroup labelled_automorphism_group(const CompressedGraph& gc, std::size_t max_order) {
  ColouredGraph cg;
  std::vector<std::vector<int>> keys;
  for (int c = 0; c < gc.size(); ++c) {
    cg.rows.push_back(gc.adjacency[c]);
    keys.push_back({gc.labels[c].size, static_cast<int>(gc.labels[c].kind),
                    gc.has_loop(c) ? 1 : 0});
  }
  cg.colour = relabel_colours(keys);
  return search_group(std::move(cg), max_order);
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (!is_bijection(p, g.size())) return false;
  for (int u = 0; u < g.size(); ++u) {
    for (int v = u + 1; v < g.size(); ++v) {
      if (g.has_edge(u, v) != g.has_edge(p[u], p[v])) return false;
    }
  }
  return true;
}

bool is_labelled_automorphism(const CompressedGraph& gc, const Permutation& p) {
  if (!is_bijection(p, gc.size())) return false;
  for (int a = 0; a < gc.size(); ++a) {
    if (!(gc.labels[a] == gc.labels[p[a]])) return false;
    for (int b = 0; b < gc.size(); ++b) {
      if (gc.adjacent(a, b) != gc.adjacent(p[a], p[b])) return false;
    }
  }
  return true;
}

Permutation induced_aut(const Graph& g, const CompressedGraph& gc, const Permutation& phi) {
  require(is_automorphism(g, phi), "induced_aut needs an automorphism of the graph");
  Permutation out(gc.size(), -1);
  for (int v = 0; v < g.size(); ++v) {
    const int from = gc.class_of[v];
    const int to = gc.class_of[phi[v]];
    ensure(out[from] < 0 || out[from] == to, "automorphism splits a class");
    out[from] = to;
  }
  return out;
}

Permutation induced_aut(const Graph& g, const Permutation& phi) {
  return induced_aut(g, compress(g), phi);
}

Permutation section_iota(const Graph& g, const CompressedGraph& gc, const Permutation& psi) {
  require(is_labelled_automorphism(gc, psi),
          "section_iota needs a labelled automorphism of the compression");
  Permutation out(g.size(), -1);
  for (int c = 0; c < gc.size(); ++c) {
    const VertexSet from = gc.classes[c];
    const VertexSet to = gc.classes[psi[c]];
    auto it = to.begin();
    for (int v : from) out[v] = *it++;
  }
  return out;
}

Permutation section_iota(const Graph& g, const Permutation& psi) {
  return section_iota(g, compress(g), psi);
}

SplitSequenceReport verify_split_sequence(const Graph& g) {
  SplitSequenceReport r;
  const CompressedGraph gc = compress(g);
  const PermGroup aut = automorphism_group(g);
  const PermGroup quotient = labelled_automorphism_group(gc);
  r.aut_order = aut.order();
  r.quotient_order = quotient.order();
  r.class_factorial_product = 1;
  for (const ClassLabel& l : gc.labels) r.class_factorial_product *= factorial(l.size);

  const Permutation quotient_id = identity_permutation(gc.size());
  std::vector<std::uint64_t> images;
  r.induced_maps_labelled = true;
  r.kernel_is_class_preserving = true;
  for (std::size_t i = 0; i < aut.order(); ++i) {
    const Permutation phi = aut.element(i);
    const Permutation phic = induced_aut(g, gc, phi);
    if (!quotient.contains(phic)) r.induced_maps_labelled = false;
    images.push_back(PermGroup::encode(phic));
    bool preserves_classes = true;
    for (int v = 0; v < g.size(); ++v) {
      if (!gc.classes[gc.class_of[v]].contains(phi[v])) preserves_classes = false;
    }
    const bool in_kernel = phic == quotient_id;
    if (in_kernel) ++r.kernel_order;
    if (in_kernel != preserves_classes) r.kernel_is_class_preserving = false;
  }
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  r.onto = images == quotient.codes();

  r.homomorphism = true;
  const auto sample = sample_indices(aut.order());
  for (std::size_t i : sample) {
    const Permutation a = aut.element(i);
    const Permutation ac = induced_aut(g, gc, a);
    for (std::size_t j : sample) {
      const Permutation b = aut.element(j);
      if (induced_aut(g, gc, compose(a, b)) != compose(ac, induced_aut(g, gc, b))) {
        r.homomorphism = false;
      }
    }
  }

  r.kernel_order_matches = r.kernel_order == r.class_factorial_product;
  r.order_identity = r.aut_order == r.quotient_order * r.class_factorial_product;

  r.section_in_aut = true;
  r.section_right_inverse = true;
  for (std::size_t i = 0; i < quotient.order(); ++i) {
    const Permutation psi = quotient.element(i);
    const Permutation lifted = section_iota(g, gc, psi);
    if (!aut.contains(lifted)) {
      r.section_in_aut = false;
      continue;
    }
    if (induced_aut(g, gc, lifted) != psi) r.section_right_inverse = false;
  }
  r.section_homomorphism = r.section_in_aut;
  if (r.section_in_aut) {
    const auto qsample = sample_indices(quotient.order());
    for (std::size_t i : qsample) {
      const Permutation a = quotient.element(i);
      for (std::size_t j : qsample) {
        const Permutation b = quotient.element(j);
        if (section_iota(g, gc, compose(a, b)) !=
            compose(section_iota(g, gc, a), section_iota(g, gc, b))) {
          r.section_homomorphism = false;
        }
      }
    }
  }
  return r;
}

}  // namespace orthograph
