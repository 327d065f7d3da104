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

#include "orthograph/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "orthograph/automorphism.hpp"
#include "orthograph/compression.hpp"
#include "orthograph/error.hpp"
#include "orthograph/extension.hpp"
#include "orthograph/inflation.hpp"
#include "orthograph/io.hpp"
#include "orthograph/lattice.hpp"
#include "orthograph/properties.hpp"
#include "orthograph/sweep.hpp"

namespace orthograph {

namespace {

using nlohmann::json;

struct Options {
  std::string in = "-";
  std::string format = "text";
  bool dot = false;

  std::string link;
  std::string kind = "abelian";
  std::string witness;
  std::string vertex;
  int exhaustive_n = -1;
  int samples = 200;
  std::uint64_t seed = 1;

  std::optional<int> assert_height;
  std::optional<std::size_t> assert_size;
  std::optional<std::string> assert_gamma_iso;
  std::optional<std::uint64_t> assert_order;
};

// Thrown when an --assert flag does not hold.
class AssertionFailed : public Error {
 public:
  using Error::Error;
};

void check_assert(bool holds, const std::string& what) {
  if (!holds) throw AssertionFailed("assertion failed: " + what);
}

Graph read_graph(const Options& opt, std::istream& in) {
  std::stringstream buffer;
  if (opt.in == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(opt.in);
    if (!file) throw ParseError(0, "cannot open " + opt.in);
    buffer << file.rdbuf();
  }
  return parse_graph(buffer.str());
}

// One "key: value" line per top-level key, values in compact JSON.
std::string render_text(const json& report) {
  std::string out;
  for (const auto& [key, value] : report.items()) {
    out += key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
  }
  return out;
}

std::string graph_dot(const Graph& g) {
  std::string out = "graph G {\n";
  for (int v = 0; v < g.size(); ++v) out += "  \"" + g.name(v) + "\";\n";
  for (const auto& [u, v] : g.edges()) {
    out += "  \"" + g.name(u) + "\" -- \"" + g.name(v) + "\";\n";
  }
  return out + "}\n";
}

json graph_json(const Graph& g) {
  return {{"vertices", g.size()},
          {"edges", g.edge_count()},
          {"edge_list", to_edge_list(g)},
          {"graph6", to_graph6(g)}};
}

void emit(const Options& opt, const json& report, const std::string& dot, std::ostream& out) {
  if (opt.format == "json") {
    out << report.dump() << "\n";
  } else if (opt.format == "dot") {
    out << dot;
  } else {
    out << render_text(report);
  }
}

void run_lattice(const Options& opt, const Graph& g, std::ostream& out) {
  const ClosedSetLattice l = enumerate_closed_sets(g);
  emit(opt, lattice_report(g, l), hasse_dot(g, l), out);
  if (opt.assert_height) check_assert(l.height() == *opt.assert_height, "height");
  if (opt.assert_size) check_assert(l.size() == *opt.assert_size, "size");
}

void run_extend(const Options& opt, const Graph& g, std::ostream& out) {
  const ExtensionAnalysis a = analyze_extension(g, parse_vertex_names(g, opt.link));
  const json report = extension_report(a);
  emit(opt, report, hasse_dot(a.extended(), a.extended_lattice()), out);
  if (opt.assert_height) check_assert(a.height_extended() == *opt.assert_height, "height");
  if (opt.assert_size) check_assert(a.extended_lattice().size() == *opt.assert_size, "size");
  if (opt.assert_gamma_iso) {
    check_assert(report["gamma_iso"].get<bool>() == (*opt.assert_gamma_iso == "true"),
                 "gamma_iso");
  }
}

void run_compress(const Options& opt, const Graph& g, std::ostream& out) {
  const CompressedGraph gc = compress(g);
  emit(opt, compression_report(g, gc), compressed_dot(gc), out);
  if (opt.assert_size) check_assert(gc.size() == static_cast<int>(*opt.assert_size), "size");
}

void run_inflate(const Options& opt, const Graph& g, std::ostream& out) {
  const InflationKind kind = parse_inflation_kind(opt.kind);
  const VertexSet witness = parse_vertex_names(g, opt.witness);
  const Graph h = elementary_inflate(g, kind, witness);
  json report = graph_json(h);
  report["kind"] = to_string(kind);
  report["witness"] = set_to_json(g, witness);
  report["lattice_isomorphic"] =
      poset_isomorphic(enumerate_closed_sets(g), enumerate_closed_sets(h));
  if (opt.format == "text") {
    out << to_edge_list(h);
  } else {
    emit(opt, report, graph_dot(h), out);
  }
}

void run_deflate(const Options& opt, const Graph& g, std::ostream& out) {
  const InflationKind kind = parse_inflation_kind(opt.kind);
  const auto v = g.find(opt.vertex);
  if (!v) throw ParseError(0, "unknown vertex " + opt.vertex);
  const auto d = elementary_deflate(g, kind, *v);
  json report = {{"kind", to_string(kind)}, {"vertex", opt.vertex}, {"deflatable", d.has_value()}};
  if (d) {
    report["witness"] = set_to_json(g, d->witness);
    report["graph"] = graph_json(d->graph);
  }
  if (opt.format == "text") {
    out << (d ? to_edge_list(d->graph) : "not deflatable\n");
  } else {
    emit(opt, report, d ? graph_dot(d->graph) : graph_dot(g), out);
  }
}

void run_aut(const Options& opt, const Graph& g, std::ostream& out) {
  const SplitSequenceReport r = verify_split_sequence(g);
  emit(opt, automorphism_report(r), compressed_dot(compress(g)), out);
  check_assert(r.ok(), "split sequence");
  if (opt.assert_order) check_assert(r.aut_order == *opt.assert_order, "automorphism order");
}

json tally_json(const SweepTally& t) {
  json j = {{"graphs", t.graphs}, {"instances", t.instances}, {"failures", t.failures}};
  if (t.first_failure) {
    j["first_failure"] = describe(*t.first_failure) + ": " + t.first_failure_reason;
  }
  return j;
}

json property_json(const PropertyReport& r) {
  json families = json::object();
  for (const auto& [name, tally] : r.families()) {
    families[name] = {{"checks", tally.checks}, {"failures", tally.failures}};
  }
  return {{"checks", r.check_count()},
          {"failures", r.failure_count()},
          {"families", families},
          {"messages", r.failures()}};
}

void run_check(const Options& opt, const Graph& g, std::ostream& out) {
  PropertyReport local;
  bool exhaustive = g.size() <= 6;
  if (exhaustive) {
    local = check_all_exhaustive(g);
  } else {
    std::mt19937_64 rng(opt.seed);
    local = check_all_sampled(g, rng, opt.samples);
  }
  json report = {{"graph", property_json(local)}, {"exhaustive", exhaustive}};
  bool ok = local.ok();
  if (opt.exhaustive_n >= 0) {
    const int k = opt.exhaustive_n;
    require(k <= 6, "--exhaustive-n is capped at 6");
    const auto exec = Execution::kParallel;
    json sweeps;
    const auto heights = sweep_heights(std::min(k, 5), exec);
    const auto gamma = sweep_gamma_criterion(std::min(k, 5), exec);
    const auto doubling = sweep_doubling(std::min(k, 5), exec);
    const auto closed = sweep_closed_links(std::min(k, 5), exec);
    const auto aut = sweep_automorphisms(k, exec);
    const auto props = sweep_properties(std::min(k, 4), exec);
    sweeps["heights"] = tally_json(heights.tally);
    sweeps["gamma_criterion"] = tally_json(gamma.tally);
    sweeps["doubling"] = tally_json(doubling.tally);
    sweeps["closed_links"] = tally_json(closed.tally);
    sweeps["automorphisms"] = tally_json(aut.tally);
    sweeps["properties"] = property_json(props);
    ok = ok && heights.tally.failures == 0 && gamma.tally.failures == 0 &&
         doubling.tally.failures == 0 && closed.tally.failures == 0 &&
         aut.tally.failures == 0 && props.ok();
    report["sweeps"] = sweeps;
  }
  report["ok"] = ok;
  emit(opt, report, "", out);
  check_assert(ok, "invariant suite");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err) {
  Options opt;
  CLI::App app{"Closed-set lattices, extensions, compression and automorphisms of graphs",
               "orthograph"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--in", opt.in, "Graph file (edge-list or graph6); '-' for stdin");
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_flag("--dot", opt.dot, "Same as --format dot");

  const auto add_height = [&](CLI::App* sub) {
    sub->add_option("--assert-height", opt.assert_height, "Fail unless the lattice height is H");
    sub->add_option("--assert-size", opt.assert_size, "Fail unless the size is N");
  };

  auto* lattice = app.add_subcommand("lattice", "Closed-set lattice");
  add_height(lattice);

  auto* extend = app.add_subcommand("extend", "Adjoin a vertex joined to a link");
  extend->add_option("--link", opt.link, "Link vertices, comma separated")->required();
  add_height(extend);
  extend->add_option("--assert-gamma-iso", opt.assert_gamma_iso,
                     "Fail unless the isomorphism verdict matches")
      ->check(CLI::IsMember({"true", "false"}));

  auto* compress_cmd = app.add_subcommand("compress", "Compressed graph");
  compress_cmd->add_option("--assert-size", opt.assert_size, "Fail unless there are N classes");

  auto* inflate = app.add_subcommand("inflate", "Elementary inflation");
  inflate->add_option("--kind", opt.kind)->check(CLI::IsMember({"abelian", "free"}));
  inflate->add_option("--witness", opt.witness, "Witness vertices")->required();

  auto* deflate = app.add_subcommand("deflate", "Elementary deflation");
  deflate->add_option("--kind", opt.kind)->check(CLI::IsMember({"abelian", "free"}));
  deflate->add_option("--vertex", opt.vertex, "Vertex to remove")->required();

  auto* aut = app.add_subcommand("aut", "Automorphism group and its split sequence");
  aut->add_option("--assert-order", opt.assert_order, "Fail unless |Aut| is N");

  auto* check = app.add_subcommand("check", "Invariant suite");
  check->add_option("--exhaustive-n", opt.exhaustive_n, "Also sweep every graph up to k vertices");
  check->add_option("--samples", opt.samples, "Random tuples when the graph is large");
  check->add_option("--seed", opt.seed);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (opt.dot) opt.format = "dot";

  try {
    const Graph g = read_graph(opt, in);
    if (lattice->parsed()) run_lattice(opt, g, out);
    if (extend->parsed()) run_extend(opt, g, out);
    if (compress_cmd->parsed()) run_compress(opt, g, out);
    if (inflate->parsed()) run_inflate(opt, g, out);
    if (deflate->parsed()) run_deflate(opt, g, out);
    if (aut->parsed()) run_aut(opt, g, out);
    if (check->parsed()) run_check(opt, g, out);
  } catch (const AssertionFailed& e) {
    err << e.what() << "\n";
    return kExitAssertion;
  } catch (const ParseError& e) {
    err << "parse error";
    if (e.line() > 0) err << " (line " << e.line() << ")";
    err << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace orthograph
