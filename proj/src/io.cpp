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

#include "orthograph/io.hpp"

#include <map>
#include <sstream>
#include <vector>

namespace orthograph {

namespace {

constexpr int kGraph6MaxVertices = 62;
constexpr std::string_view kGraph6Header = ">>graph6<<";

struct Line {
  int number;
  std::vector<std::string> tokens;
};

// Splits into lines, drops comments, tokenizes on whitespace.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;) line.tokens.push_back(w);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

bool valid_name(const std::string& name) {
  return !name.empty() && name.find_first_of("-,#{}") == std::string::npos;
}

}  // namespace

ParseError::ParseError(int line, const std::string& message)
    : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

Graph parse_edge_list(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty() || lines.front().tokens.front() != "vertices") {
    throw ParseError(lines.empty() ? 0 : lines.front().number,
                     "expected a 'vertices' line first");
  }
  std::vector<std::string> names;
  std::map<std::string, int> index;
  const Line& header = lines.front();
  for (std::size_t i = 1; i < header.tokens.size(); ++i) {
    const std::string& name = header.tokens[i];
    if (!valid_name(name)) throw ParseError(header.number, "invalid vertex name '" + name + "'");
    if (!index.emplace(name, static_cast<int>(names.size())).second) {
      throw ParseError(header.number, "duplicate vertex name '" + name + "'");
    }
    names.push_back(name);
  }
  if (static_cast<int>(names.size()) > kMaxVertices) {
    throw ParseError(header.number, "more than " + std::to_string(kMaxVertices) + " vertices");
  }

  std::vector<Edge> edges;
  bool in_edges = false;
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const Line& line = lines[l];
    std::size_t start = 0;
    if (!in_edges) {
      if (line.tokens.front() == "vertices") {
        throw ParseError(line.number, "repeated 'vertices' line");
      }
      if (line.tokens.front() != "edges") {
        throw ParseError(line.number, "expected 'edges', got '" + line.tokens.front() + "'");
      }
      in_edges = true;
      start = 1;
    }
    for (std::size_t i = start; i < line.tokens.size(); ++i) {
      const std::string& tok = line.tokens[i];
      const auto dash = tok.find('-');
      if (dash == std::string::npos) {
        throw ParseError(line.number, "edge '" + tok + "' is not of the form u-v");
      }
      const std::string u = tok.substr(0, dash);
      const std::string v = tok.substr(dash + 1);
      const auto iu = index.find(u);
      const auto iv = index.find(v);
      if (iu == index.end() || iv == index.end()) {
        throw ParseError(line.number, "edge '" + tok + "' names an unknown vertex");
      }
      if (iu->second == iv->second) {
        throw ParseError(line.number, "self-loop '" + tok + "'");
      }
      edges.emplace_back(iu->second, iv->second);
    }
  }
  const int n = static_cast<int>(names.size());
  return Graph::build(n, edges, std::move(names));
}

std::string to_edge_list(const Graph& g) {
  std::string out = "vertices";
  for (int v = 0; v < g.size(); ++v) out += " " + g.name(v);
  out += "\nedges";
  for (auto [u, v] : g.edges()) out += " " + g.name(u) + "-" + g.name(v);
  out += "\n";
  return out;
}

Graph parse_graph6(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '\n' && c != '\r' && c != '\t') s += c;
  }
  if (s.starts_with(kGraph6Header)) s.erase(0, kGraph6Header.size());
  if (s.empty()) throw ParseError(1, "empty graph6 string");
  for (char c : s) {
    if (c < 63 || c > 126) throw ParseError(1, "invalid graph6 character");
  }
  if (s[0] == 126) throw ParseError(1, "graph6 input limited to 62 vertices");
  const int n = s[0] - 63;
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = 1 + (bits + 5) / 6;
  if (s.size() != expected) {
    throw ParseError(1, "graph6 length " + std::to_string(s.size()) + " does not match " +
                            std::to_string(n) + " vertices");
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = s[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph::build(n, edges);
}

std::string to_graph6(const Graph& g) {
  const int n = g.size();
  require(n <= kGraph6MaxVertices, "graph6 output limited to 62 vertices");
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(63 + acc);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>(63 + (acc << (6 - filled)));
  return out;
}

Graph parse_graph(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "no graph in input");
  if (lines.front().tokens.front() == "vertices") return parse_edge_list(text);
  if (lines.size() != 1 || lines.front().tokens.size() != 1) {
    throw ParseError(lines.front().number,
                     "expected a 'vertices' line or a single graph6 string");
  }
  return parse_graph6(lines.front().tokens.front());
}

VertexSet parse_vertex_names(const Graph& g, std::string_view text) {
  VertexSet out;
  std::string word;
  auto flush = [&] {
    if (word.empty()) return;
    const auto v = g.find(word);
    if (!v) throw Error("unknown vertex '" + word + "'");
    out = out.with(*v);
    word.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t') {
      flush();
    } else {
      word += c;
    }
  }
  flush();
  return out;
}

std::string format_set(const Graph& g, VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    if (!first) out += ",";
    out += g.name(v);
    first = false;
  }
  return out + "}";
}

nlohmann::json set_to_json(const Graph& g, VertexSet s) {
  nlohmann::json out = nlohmann::json::array();
  for (int v : s) out.push_back(g.name(v));
  return out;
}

namespace {

nlohmann::json family_to_json(const Graph& g, const std::vector<VertexSet>& family) {
  nlohmann::json out = nlohmann::json::array();
  for (VertexSet s : family) out.push_back(set_to_json(g, s));
  return out;
}

}  // namespace

nlohmann::json lattice_report(const Graph& g, const ClosedSetLattice& lattice) {
  nlohmann::json covers = nlohmann::json::array();
  for (auto [lo, hi] : lattice.covers()) covers.push_back({lo, hi});
  return {
      {"vertices", set_to_json(g, g.vertices())},
      {"size", lattice.size()},
      {"height", lattice.height()},
      {"cdim", lattice.height()},
      {"sets", family_to_json(g, lattice.sets())},
      {"covers", covers},
  };
}

nlohmann::json extension_report(const ExtensionAnalysis& a) {
  const Graph& gx = a.extended();
  const DoublingData& d = a.doubling();
  const GammaVerdict verdict = gamma_isomorphism_verdict(a);
  nlohmann::json witness = nullptr;
  if (a.simplex_witness()) witness = set_to_json(gx, *a.simplex_witness());
  return {
      {"link", set_to_json(gx, a.link())},
      {"new_vertex", gx.name(a.new_vertex())},
      {"h_L", a.height_base()},
      {"h_Ltilde", a.height_tilde()},
      {"h_Lbar", a.height_extended()},
      {"m1", a.tilde_increment()},
      {"m2", a.bar_increment()},
      {"cdim", a.height_extended()},
      {"link_closed", a.link_closed()},
      {"simplex_witness", witness},
      {"gamma_iso", verdict.criterion},
      {"sizes",
       {{"L", a.lattice().size()},
        {"Ltilde", a.tilde().family.size()},
        {"Lbar", a.extended_lattice().size()}}},
      {"Ltilde_new", family_to_json(gx, a.tilde().new_sets)},
      {"R", family_to_json(gx, d.r)},
      {"S1", family_to_json(gx, d.s1)},
      {"S2", family_to_json(gx, d.s2)},
      {"T", family_to_json(gx, d.t)},
  };
}

nlohmann::json compression_report(const Graph& g, const CompressedGraph& gc) {
  nlohmann::json classes = nlohmann::json::array();
  for (int c = 0; c < gc.size(); ++c) {
    classes.push_back({
        {"members", set_to_json(g, gc.classes[c])},
        {"size", gc.labels[c].size},
        {"kind", to_string(gc.labels[c].kind)},
        {"loop", gc.has_loop(c)},
    });
  }
  nlohmann::json edges = nlohmann::json::array();
  for (int a = 0; a < gc.size(); ++a) {
    for (int b = a + 1; b < gc.size(); ++b) {
      if (gc.adjacent(a, b)) edges.push_back({a, b});
    }
  }
  const ClosedSetLattice lc = quotient_lattice(gc);
  return {
      {"classes", classes},
      {"edges", edges},
      {"quotient_lattice", {{"size", lc.size()}, {"height", lc.height()}}},
  };
}

nlohmann::json automorphism_report(const SplitSequenceReport& r) {
  return {
      {"aut_order", r.aut_order},
      {"quotient_order", r.quotient_order},
      {"kernel_order", r.kernel_order},
      {"class_factorial_product", r.class_factorial_product},
      {"checks",
       {{"induced_maps_labelled", r.induced_maps_labelled},
        {"homomorphism", r.homomorphism},
        {"onto", r.onto},
        {"kernel_is_class_preserving", r.kernel_is_class_preserving},
        {"kernel_order_matches", r.kernel_order_matches},
        {"order_identity", r.order_identity},
        {"section_in_aut", r.section_in_aut},
        {"section_right_inverse", r.section_right_inverse},
        {"section_homomorphism", r.section_homomorphism}}},
      {"ok", r.ok()},
  };
}

std::string hasse_dot(const Graph& g, const ClosedSetLattice& lattice) {
  std::string out = "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" + format_set(g, lattice[i]) + "\"];\n";
  }
  for (auto [lo, hi] : lattice.covers()) {
    out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  }
  return out + "}\n";
}

std::string compressed_dot(const CompressedGraph& gc) {
  std::string out = "graph compression {\n";
  for (int c = 0; c < gc.size(); ++c) {
    const bool ortho = gc.labels[c].kind == ClassKind::kOrtho;
    out += "  c" + std::to_string(c) + " [shape=" + (ortho ? "doublecircle" : "circle") +
           ", label=\"" + std::to_string(gc.labels[c].size) + "\"];\n";
  }
  for (int a = 0; a < gc.size(); ++a) {
    for (int b = a; b < gc.size(); ++b) {
      if (gc.adjacent(a, b)) out += "  c" + std::to_string(a) + " -- c" + std::to_string(b) + ";\n";
    }
  }
  return out + "}\n";
}

}  // namespace orthograph
