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

#include "orthograph/inflation.hpp"

#include "orthograph/error.hpp"
#include "orthograph/lattice.hpp"
#include "orthograph/ortho.hpp"

namespace orthograph {

namespace {

constexpr int kMaxWitnessPool = 26;

void check_pool(VertexSet pool) {
  if (pool.size() > kMaxWitnessPool) {
    throw CapExceeded("witness search over " + std::to_string(pool.size()) +
                      " candidate vertices exceeds the limit of " +
                      std::to_string(kMaxWitnessPool));
  }
}

// Largest member first, then lowest bitmask.
bool better_witness(VertexSet candidate, const std::optional<VertexSet>& best) {
  if (!best) return true;
  if (candidate.size() != best->size()) return candidate.size() > best->size();
  return candidate.bits() < best->bits();
}

}  // namespace

bool perp_equivalent(const Graph& g, VertexSet s, VertexSet t) {
  return perp(g, s) == perp(g, t);
}

bool o_equivalent(const Graph& g, VertexSet y, VertexSet z) {
  return (perp(g, y) - y) == (perp(g, z) - z);
}

VertexSet abelian_closure(const Graph& g, VertexSet s) {
  require_within(g, s, "simplex");
  require(is_simplex(g, s), "abelian closure needs a simplex");
  return closure(g, s);
}

VertexSet free_closure(const Graph& g, VertexSet a) {
  require_within(g, a, "free co-simplex");
  require(is_free_co_simplex(g, a), "free closure needs a free co-simplex");
  // Any B o-equivalent to a co-simplex A, B itself a co-simplex, has
  // complement(B) == complement(A) =: P, so B lies in complement(P) \ P.
  const VertexSet target = perp(g, a) - a;
  const VertexSet pool = perp(g, target) - target;
  check_pool(pool);
  VertexSet result = a;
  for_each_subset(pool, [&](VertexSet b) {
    if ((perp(g, b) - b) == target && is_free_co_simplex(g, b)) result |= b;
  });
  return result;
}

const char* to_string(InflationKind kind) {
  return kind == InflationKind::kAbelian ? "abelian" : "free";
}

InflationKind parse_inflation_kind(const std::string& text) {
  if (text == "abelian") return InflationKind::kAbelian;
  if (text == "free") return InflationKind::kFree;
  throw Error("unknown inflation kind '" + text + "' (expected abelian or free)");
}

Graph elementary_inflate(const Graph& g, InflationKind kind, VertexSet witness) {
  require_within(g, witness, "inflation witness");
  if (kind == InflationKind::kAbelian) {
    require(is_simplex(g, witness), "abelian inflation needs a simplex witness");
  } else {
    require(is_free_co_simplex(g, witness),
            "free inflation needs a free co-simplex witness");
  }
  Graph out = adjoin_vertex(g, perp(g, witness));
  if (kind == InflationKind::kAbelian) {
    const int t = g.size();
    ensure(perp(out, VertexSet::singleton(t)) == perp(out, witness),
           "new vertex is not perp-equivalent to the simplex");
  }
  return out;
}

std::optional<Deflation> elementary_deflate(const Graph& g, InflationKind kind, int y) {
  require(y >= 0 && y < g.size(), "deflation vertex out of range");
  const VertexSet single = VertexSet::singleton(y);
  std::optional<VertexSet> best;

  if (kind == InflationKind::kAbelian) {
    // perp-equivalent sets lie in each other's closures.
    const VertexSet target = perp(g, single);
    const VertexSet pool = closure(g, single).without(y);
    check_pool(pool);
    for_each_subset(pool, [&](VertexSet s) {
      if (perp(g, s) == target && is_simplex(g, s) && better_witness(s, best)) best = s;
    });
  } else {
    const VertexSet target = perp(g, single).without(y);
    const VertexSet pool = (perp(g, target) - target).without(y);
    check_pool(pool);
    for_each_subset(pool, [&](VertexSet a) {
      if ((perp(g, a) - a) == target && is_free_co_simplex(g, a) &&
          better_witness(a, best)) {
        best = a;
      }
    });
  }
  if (!best) return std::nullopt;
  return Deflation{delete_vertex(g, y), *best};
}

bool verify_inflation_invariance(const Graph& g, const std::vector<VertexSet>& simplices) {
  Graph current = g;
  for (VertexSet s : simplices) {
    current = elementary_inflate(current, InflationKind::kAbelian, s);
  }
  return poset_isomorphic(enumerate_closed_sets(g), enumerate_closed_sets(current));
}

}  // namespace orthograph
