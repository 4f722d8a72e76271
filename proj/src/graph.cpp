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

#include "tfgraph/graph.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tfgraph {

std::string to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::graph:
      return "graph";
    case GraphKind::digraph:
      return "digraph";
    case GraphKind::properly_mixed:
      return "properly-mixed";
  }
  return "?";
}

MixedGraph::MixedGraph(int vertex_count) : vertex_count_(vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
}

MixedGraph::MixedGraph(int vertex_count, std::vector<Arc> arcs)
    : MixedGraph(vertex_count) {
  for (const Arc& a : arcs) {
    check_vertex(a.tail);
    check_vertex(a.head);
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  arcs_ = std::move(arcs);
}

void MixedGraph::check_vertex(VertexId v) const {
  if (v < 0 || v >= vertex_count_)
    throw std::invalid_argument("vertex id out of range");
}

bool MixedGraph::has_arc(VertexId u, VertexId v) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), Arc{u, v});
}

void MixedGraph::add_arc(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  Arc a{u, v};
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), a);
  if (it == arcs_.end() || *it != a) arcs_.insert(it, a);
}

void MixedGraph::add_edge(VertexId u, VertexId v) {
  if (u == v) throw std::invalid_argument("an edge needs distinct endpoints");
  add_arc(u, v);
  add_arc(v, u);
}

std::vector<VertexId> MixedGraph::out_neighbours(VertexId v) const {
  check_vertex(v);
  std::vector<VertexId> out;
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), Arc{v, 0});
  for (; it != arcs_.end() && it->tail == v; ++it) out.push_back(it->head);
  return out;
}

std::vector<VertexId> MixedGraph::in_neighbours(VertexId v) const {
  check_vertex(v);
  std::vector<VertexId> in;
  for (const Arc& a : arcs_)
    if (a.head == v) in.push_back(a.tail);
  return in;
}

GraphKind classify(const MixedGraph& g) {
  bool loopless = true;
  bool self_paired = true;
  bool any_self_paired = false;
  for (const Arc& a : g.arcs()) {
    if (a.is_loop()) {
      loopless = false;
      continue;
    }
    if (g.has_arc(a.head, a.tail))
      any_self_paired = true;
    else
      self_paired = false;
  }
  if (loopless && self_paired) return GraphKind::graph;
  if (loopless && !any_self_paired) return GraphKind::digraph;
  return GraphKind::properly_mixed;
}

MixedGraph underlying_graph(const MixedGraph& g) {
  MixedGraph u(g.vertex_count());
  for (const Arc& a : g.arcs())
    if (!a.is_loop()) u.add_edge(a.tail, a.head);
  return u;
}

MixedGraph inverse(const MixedGraph& g) {
  std::vector<Arc> rev;
  rev.reserve(g.arcs().size());
  for (const Arc& a : g.arcs()) rev.push_back(Arc{a.head, a.tail});
  return MixedGraph(g.vertex_count(), std::move(rev));
}

DegreePair degrees(const MixedGraph& g, VertexId v) {
  if (v < 0 || v >= g.vertex_count())
    throw std::invalid_argument("vertex id out of range");
  DegreePair d;
  for (const Arc& a : g.arcs()) {
    if (a.head == v) ++d.in;
    if (a.tail == v) ++d.out;
  }
  return d;
}

std::vector<int> underlying_components(const MixedGraph& g) {
  int n = g.vertex_count();
  std::vector<std::vector<int>> adj(n);
  for (const Arc& a : g.arcs()) {
    if (a.is_loop()) continue;
    adj[a.tail].push_back(a.head);
    adj[a.head].push_back(a.tail);
  }
  std::vector<int> comp(n, -1);
  int c = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = c;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : adj[v])
        if (comp[w] == -1) {
          comp[w] = c;
          queue.push_back(w);
        }
    }
    ++c;
  }
  return comp;
}

bool is_connected(const MixedGraph& g) {
  if (g.vertex_count() == 0) return true;
  auto comp = underlying_components(g);
  return *std::max_element(comp.begin(), comp.end()) == 0;
}

std::optional<std::vector<int>> bipartition(const MixedGraph& g) {
  int n = g.vertex_count();
  std::vector<std::vector<int>> adj(n);
  for (const Arc& a : g.arcs()) {
    if (a.is_loop()) return std::nullopt;
    adj[a.tail].push_back(a.head);
    adj[a.head].push_back(a.tail);
  }
  std::vector<int> colour(n, -1);
  for (int s = 0; s < n; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : adj[v]) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[v];
          queue.push_back(w);
        } else if (colour[w] == colour[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

bool is_bipartite(const MixedGraph& g) { return bipartition(g).has_value(); }

namespace {

// Neighbourhood tables for the two cubic graphs with a common
// neighbourhood family, 1-indexed.
constexpr std::array<std::array<int, 3>, 10> kPetersenNbhd = {{
    {2, 5, 6},
    {1, 3, 7},
    {2, 4, 8},
    {3, 5, 9},
    {1, 4, 10},
    {1, 8, 9},
    {2, 9, 10},
    {3, 6, 10},
    {4, 6, 7},
    {5, 7, 8},
}};

constexpr std::array<std::array<int, 3>, 10> kLambdaNbhd = {{
    {4, 6, 7},
    {3, 5, 9},
    {2, 4, 8},
    {1, 3, 7},
    {2, 9, 10},
    {1, 8, 9},
    {1, 4, 10},
    {3, 6, 10},
    {2, 5, 6},
    {5, 7, 8},
}};

MixedGraph from_neighbourhoods(const std::array<std::array<int, 3>, 10>& nbhd) {
  MixedGraph g(10);
  for (int v = 0; v < 10; ++v)
    for (int w : nbhd[v]) g.add_arc(v, w - 1);
  return g;
}

MixedGraph desargues() {
  // Generalized Petersen graph GP(10,3): outer 10-cycle, inner vertices
  // joined at step 3, spokes between the rings.
  MixedGraph g(20);
  for (int i = 0; i < 10; ++i) {
    g.add_edge(i, (i + 1) % 10);
    g.add_edge(10 + i, 10 + (i + 3) % 10);
    g.add_edge(i, 10 + i);
  }
  return g;
}

}  // namespace

MixedGraph fixture(const std::string& name) {
  if (name == "petersen") return from_neighbourhoods(kPetersenNbhd);
  if (name == "lambda_cousin") return from_neighbourhoods(kLambdaNbhd);
  if (name == "desargues") return desargues();
  throw std::invalid_argument("unknown fixture: " + name);
}

MixedGraph fixture(const std::string& name, int n) {
  if (n < 1) throw std::invalid_argument("fixture size must be positive");
  if (name == "directed_path") {
    MixedGraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_arc(i, i + 1);
    return g;
  }
  if (name == "directed_cycle") {
    MixedGraph g(n);
    for (int i = 0; i < n; ++i) g.add_arc(i, (i + 1) % n);
    return g;
  }
  if (name == "complete") {
    MixedGraph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
  }
  if (name == "cycle") {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    MixedGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
  }
  throw std::invalid_argument("unknown fixture: " + name);
}

ParsedGraph parse_mg(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<Arc> arcs;
  std::vector<std::pair<int, int>> sides;
  auto fail = [&](const std::string& why) {
    throw std::runtime_error("mg parse error at line " +
                             std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "n") {
      if (n != -1) fail("duplicate n line");
      if (!(ls >> n) || n < 0) fail("bad vertex count");
    } else if (tag == "a" || tag == "e") {
      if (n < 0) fail("arc before n line");
      int u, v;
      if (!(ls >> u >> v)) fail("bad arc line");
      if (u < 0 || u >= n || v < 0 || v >= n) fail("vertex out of range");
      if (tag == "e") {
        if (u == v) fail("edge endpoints must differ");
        arcs.push_back(Arc{u, v});
        arcs.push_back(Arc{v, u});
      } else {
        arcs.push_back(Arc{u, v});
      }
    } else if (tag == "side") {
      if (n < 0) fail("side before n line");
      int v, s;
      if (!(ls >> v >> s)) fail("bad side line");
      if (v < 0 || v >= n || (s != 0 && s != 1)) fail("bad side line");
      sides.emplace_back(v, s);
    } else {
      fail("unknown directive '" + tag + "'");
    }
    std::string rest;
    if (ls >> rest) fail("trailing tokens");
  }
  if (n < 0) fail("missing n line");
  ParsedGraph result{MixedGraph(n, std::move(arcs)), std::nullopt};
  if (!sides.empty()) {
    std::vector<int> side_vec(n, -1);
    for (auto [v, s] : sides) side_vec[v] = s;
    for (int v = 0; v < n; ++v)
      if (side_vec[v] == -1)
        throw std::runtime_error("mg parse error: incomplete side annotation");
    result.sides = std::move(side_vec);
  }
  return result;
}

MixedGraph parse_mixed_graph(std::istream& in) { return parse_mg(in).graph; }

void print_mg(std::ostream& out, const MixedGraph& g) {
  out << "n " << g.vertex_count() << "\n";
  // loops, then edges once, then lone arcs, each group sorted
  for (const Arc& a : g.arcs())
    if (a.is_loop()) out << "a " << a.tail << " " << a.head << "\n";
  for (const Arc& a : g.arcs())
    if (!a.is_loop() && a.tail < a.head && g.has_arc(a.head, a.tail))
      out << "e " << a.tail << " " << a.head << "\n";
  for (const Arc& a : g.arcs())
    if (!a.is_loop() && !g.has_arc(a.head, a.tail))
      out << "a " << a.tail << " " << a.head << "\n";
}

void print_mg(std::ostream& out, const MixedGraph& g,
              const std::vector<int>& sides) {
  print_mg(out, g);
  for (int v = 0; v < g.vertex_count(); ++v)
    out << "side " << v << " " << sides[v] << "\n";
}

std::string to_mg_string(const MixedGraph& g) {
  std::ostringstream out;
  print_mg(out, g);
  return out.str();
}

void write_dot(std::ostream& out, const MixedGraph& g) {
  out << "digraph G {\n";
  for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (const Arc& a : g.arcs()) {
    if (a.is_loop()) {
      out << "  " << a.tail << " -> " << a.head << ";\n";
    } else if (g.has_arc(a.head, a.tail)) {
      if (a.tail < a.head)
        out << "  " << a.tail << " -> " << a.head << " [dir=none];\n";
    } else {
      out << "  " << a.tail << " -> " << a.head << ";\n";
    }
  }
  out << "}\n";
}

}  // namespace tfgraph
