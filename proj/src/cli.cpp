// Copyright 2026 The tfgraph Authors
//
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

#include "tfgraph/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tfgraph/atrails.hpp"
#include "tfgraph/covers.hpp"
#include "tfgraph/graph.hpp"
#include "tfgraph/iso.hpp"
#include "tfgraph/orbitals.hpp"
#include "tfgraph/recon.hpp"
#include "tfgraph/tf.hpp"

namespace tfgraph {

namespace {

MixedGraph load_graph(const std::string& path, std::istream& in) {
  if (path == "-") return parse_mixed_graph(in);
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open " + path);
  return parse_mixed_graph(file);
}

void maybe_write_dot(const std::string& path, const MixedGraph& g) {
  if (path.empty()) return;
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open " + path);
  write_dot(file, g);
}

// Generator files: an "n <degree>" line, then one "alpha, beta" line per
// generator in 1-indexed cycle notation, e.g. "(1 2 3), id".
TFGroupGens parse_gens_file(std::istream& in) {
  TFGroupGens gens;
  std::string line;
  int line_no = 0;
  bool have_n = false;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream probe(line);
    std::string first;
    if (!(probe >> first)) continue;
    if (!have_n) {
      int n;
      if (first != "n" || !(probe >> n) || n < 1)
        throw std::runtime_error("generator file must start with 'n <degree>'");
      gens.degree = n;
      have_n = true;
      continue;
    }
    auto comma = line.find(',');
    if (comma == std::string::npos)
      throw std::runtime_error("generator line " + std::to_string(line_no) +
                               " needs 'alpha, beta'");
    Permutation alpha = parse_cycle_string(line.substr(0, comma), gens.degree);
    Permutation beta = parse_cycle_string(line.substr(comma + 1), gens.degree);
    gens.generators.emplace_back(std::move(alpha), std::move(beta));
  }
  if (!have_n) throw std::runtime_error("empty generator file");
  return gens;
}

void print_neighbourhoods(std::ostream& out,
                          const std::vector<std::vector<VertexId>>& family) {
  for (const auto& set : family) {
    out << "{";
    for (size_t i = 0; i < set.size(); ++i) {
      if (i) out << ",";
      out << set[i] + 1;  // printed 1-indexed
    }
    out << "}\n";
  }
}

void print_preimages(std::ostream& out, const PreimageSet& set) {
  out << "preimages " << set.entries.size() << "\n";
  for (size_t i = 0; i < set.entries.size(); ++i) {
    const Preimage& p = set.entries[i];
    out << "preimage " << i << " loopless=" << (p.loopless ? "true" : "false")
        << " kind=" << to_string(p.kind)
        << " witness=" << to_cycle_string(p.witness) << "\n";
    print_mg(out, p.graph);
    if (i + 1 < set.entries.size()) out << "\n";
  }
}

int dispatch(const std::vector<std::string>& args, std::istream& in,
             std::ostream& out, std::ostream& err) {
  CLI::App app{"two-fold isomorphism toolkit"};
  app.require_subcommand(1);

  std::string path_a, path_b, dot_path, gens_path, name;
  int arg_m = 0, arg_k = 0, arg_n = -1;
  std::vector<int> seed;

  auto* cmd_idc = app.add_subcommand("idc", "incidence double cover");
  cmd_idc->add_option("graph", path_a)->required();
  cmd_idc->add_option("--dot", dot_path);

  auto* cmd_adc = app.add_subcommand("adc", "alternating double cover");
  cmd_adc->add_option("graph", path_a)->required();
  cmd_adc->add_option("--dot", dot_path);

  auto* cmd_cdc = app.add_subcommand("cdc", "canonical double cover");
  cmd_cdc->add_option("graph", path_a)->required();
  cmd_cdc->add_option("--dot", dot_path);

  auto* cmd_iso = app.add_subcommand("iso", "find an isomorphism");
  cmd_iso->add_option("G", path_a)->required();
  cmd_iso->add_option("H", path_b)->required();

  auto* cmd_aut = app.add_subcommand("aut", "automorphism group");
  cmd_aut->add_option("graph", path_a)->required();

  auto* cmd_tfiso = app.add_subcommand("tfiso", "find a two-fold isomorphism");
  cmd_tfiso->add_option("G", path_a)->required();
  cmd_tfiso->add_option("H", path_b)->required();

  auto* cmd_tfaut = app.add_subcommand("tfaut", "two-fold automorphism group");
  cmd_tfaut->add_option("graph", path_a)->required();

  auto* cmd_stable = app.add_subcommand("stable", "stability report");
  cmd_stable->add_option("graph", path_a)->required();

  auto* cmd_nbhd = app.add_subcommand("nbhd", "neighbourhood family");
  cmd_nbhd->add_option("graph", path_a)->required();

  auto* cmd_classes = app.add_subcommand("classes", "arc classes and frontier");
  cmd_classes->add_option("graph", path_a)->required();

  auto* cmd_frontier = app.add_subcommand("frontier", "frontier vertices");
  cmd_frontier->add_option("graph", path_a)->required();

  auto* cmd_construct =
      app.add_subcommand("construct", "graph with m classes and k frontier");
  cmd_construct->add_option("m", arg_m)->required();
  cmd_construct->add_option("k", arg_k)->required();
  cmd_construct->add_option("--dot", dot_path);

  auto* cmd_recon = app.add_subcommand("recon", "double cover preimages");
  cmd_recon->add_option("cover", path_a)->required();

  auto* cmd_symm =
      app.add_subcommand("symmetrize", "two-fold isomorphic loopless graph");
  cmd_symm->add_option("graph", path_a)->required();
  cmd_symm->add_option("--dot", dot_path);

  auto* cmd_orbital = app.add_subcommand("orbital", "two-fold orbital digraph");
  cmd_orbital->add_option("--gens", gens_path)->required();
  cmd_orbital->add_option("--seed", seed, "seed arc, 1-indexed")
      ->required()
      ->expected(2);
  cmd_orbital->add_option("--dot", dot_path);

  auto* cmd_isorb = app.add_subcommand("is-orbital", "orbital recognition");
  cmd_isorb->add_option("graph", path_a)->required();

  auto* cmd_istforb =
      app.add_subcommand("is-tf-orbital", "two-fold orbital recognition");
  cmd_istforb->add_option("graph", path_a)->required();

  auto* cmd_fixture = app.add_subcommand("fixture", "named example graph");
  cmd_fixture->add_option("name", name)->required();
  cmd_fixture->add_option("n", arg_n);
  cmd_fixture->add_option("--dot", dot_path);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  if (cmd_idc->parsed()) {
    BipartiteCover cover = idc(load_graph(path_a, in));
    MixedGraph m = cover.as_mixed_graph();
    print_mg(out, m, cover.side_colouring());
    maybe_write_dot(dot_path, m);
  } else if (cmd_adc->parsed()) {
    StrongBipartiteDigraph cover = adc(load_graph(path_a, in));
    MixedGraph m = cover.as_mixed_graph();
    out << "# components " << cover.component_count << "\n";
    for (size_t v = 0; v < cover.vertices.size(); ++v)
      out << "# vertex " << v << " = (" << cover.vertices[v].base << ","
          << cover.vertices[v].side << ") component "
          << cover.component_of[v] << "\n";
    print_mg(out, m, cover.side_colouring());
    maybe_write_dot(dot_path, m);
  } else if (cmd_cdc->parsed()) {
    MixedGraph c = cdc(load_graph(path_a, in));
    print_mg(out, c);
    maybe_write_dot(dot_path, c);
  } else if (cmd_iso->parsed()) {
    MixedGraph g = load_graph(path_a, in), h = load_graph(path_b, in);
    auto found = find_isomorphism(g, h);
    if (!found) {
      out << "none\n";
    } else {
      for (const Arc& a : g.arcs())
        if (!h.has_arc((*found)(a.tail), (*found)(a.head)))
          throw std::logic_error("isomorphism witness failed validation");
      out << to_cycle_string(*found) << "\n";
    }
  } else if (cmd_aut->parsed()) {
    PermGroup group = automorphism_group(load_graph(path_a, in));
    out << "order " << group.order() << "\n";
    for (const Permutation& p : generating_set(group))
      out << "gen " << to_cycle_string(p) << "\n";
  } else if (cmd_tfiso->parsed()) {
    MixedGraph g = load_graph(path_a, in), h = load_graph(path_b, in);
    auto found = find_tf_isomorphism(g, h);
    if (!found) {
      out << "none\n";
    } else {
      if (!is_tf_map(g, h, found->alpha, found->beta))
        throw std::logic_error("two-fold witness failed validation");
      out << "alpha = " << to_cycle_string(found->alpha) << "\n";
      out << "beta = " << to_cycle_string(found->beta) << "\n";
    }
  } else if (cmd_tfaut->parsed()) {
    TFGroup group = tf_automorphism_group(load_graph(path_a, in));
    out << "order " << group.order() << "\n";
    out << "non_trivial " << group.non_trivial_count() << "\n";
  } else if (cmd_stable->parsed()) {
    StabilityReport report = is_stable(load_graph(path_a, in));
    out << "stable " << (report.stable ? "true" : "false") << "\n";
    out << "aut_order " << report.aut_order << "\n";
    out << "tf_aut_order " << report.tf_aut_order << "\n";
    out << "cdc_aut_order " << report.cdc_aut_order << "\n";
    out << "index " << report.index << "\n";
  } else if (cmd_nbhd->parsed()) {
    print_neighbourhoods(out, neighbourhood_family(load_graph(path_a, in)));
  } else if (cmd_classes->parsed()) {
    ArcPartition partition = arc_classes(load_graph(path_a, in));
    out << "classes = " << partition.class_count()
        << ", frontier = " << partition.frontier_count() << "\n";
    for (size_t c = 0; c < partition.classes.size(); ++c) {
      out << "class " << c << ":";
      for (const Arc& a : partition.classes[c])
        out << " " << a.tail << "->" << a.head;
      out << "\n";
    }
  } else if (cmd_frontier->parsed()) {
    std::vector<VertexId> frontier = frontier_vertices(load_graph(path_a, in));
    for (size_t i = 0; i < frontier.size(); ++i)
      out << (i ? " " : "") << frontier[i];
    out << "\n";
  } else if (cmd_construct->parsed()) {
    MixedGraph g = construct_with_classes(arg_m, arg_k);
    print_mg(out, g);
    maybe_write_dot(dot_path, g);
  } else if (cmd_recon->parsed()) {
    print_preimages(out, enumerate_cdc_preimages(load_graph(path_a, in)));
  } else if (cmd_symm->parsed()) {
    SymmetrizeResult result = symmetrize(load_graph(path_a, in));
    if (result.status == SymmetrizeResult::Status::found) {
      print_mg(out, *result.graph);
      maybe_write_dot(dot_path, *result.graph);
    } else if (result.status == SymmetrizeResult::Status::none) {
      out << "none\n";
    } else {
      out << "unknown\n";
    }
  } else if (cmd_orbital->parsed()) {
    std::ifstream gens_file(gens_path);
    if (!gens_file) throw std::runtime_error("cannot open " + gens_path);
    TFGroupGens gens = parse_gens_file(gens_file);
    if (seed[0] < 1 || seed[0] > gens.degree || seed[1] < 1 ||
        seed[1] > gens.degree)
      throw std::runtime_error("seed out of range");
    OrbitalDigraph orbital =
        tf_orbital(gens, Arc{seed[0] - 1, seed[1] - 1});
    print_mg(out, orbital.graph);
    maybe_write_dot(dot_path, orbital.graph);
  } else if (cmd_isorb->parsed()) {
    out << (is_orbital(load_graph(path_a, in)) ? "true" : "false") << "\n";
  } else if (cmd_istforb->parsed()) {
    out << (is_tf_orbital(load_graph(path_a, in)) ? "true" : "false") << "\n";
  } else if (cmd_fixture->parsed()) {
    MixedGraph g = arg_n >= 0 ? fixture(name, arg_n) : fixture(name);
    print_mg(out, g);
    maybe_write_dot(dot_path, g);
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, in, out, err);
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace tfgraph
