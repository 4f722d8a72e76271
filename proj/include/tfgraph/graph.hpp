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

#ifndef TFGRAPH_GRAPH_HPP
#define TFGRAPH_GRAPH_HPP

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tfgraph {

// Vertices are dense integers 0..n-1.
using VertexId = int;

// Ordered pair of vertices. tail == head encodes a loop.
struct Arc {
  VertexId tail = 0;
  VertexId head = 0;

  bool is_loop() const { return tail == head; }
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

enum class GraphKind { graph, digraph, properly_mixed };

std::string to_string(GraphKind kind);

// A mixed graph: a vertex count plus a set of ordered arcs. Loops are
// allowed, multiple arcs are not. A self-paired pair {(u,v),(v,u)} is an
// edge. Value type; arcs are kept sorted and unique.
class MixedGraph {
 public:
  MixedGraph() = default;
  explicit MixedGraph(int vertex_count);
  MixedGraph(int vertex_count, std::vector<Arc> arcs);

  int vertex_count() const { return vertex_count_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }

  bool has_arc(VertexId u, VertexId v) const;
  void add_arc(VertexId u, VertexId v);
  // Inserts both (u,v) and (v,u). Requires u != v.
  void add_edge(VertexId u, VertexId v);

  std::vector<VertexId> out_neighbours(VertexId v) const;
  std::vector<VertexId> in_neighbours(VertexId v) const;

  friend bool operator==(const MixedGraph&, const MixedGraph&) = default;

 private:
  void check_vertex(VertexId v) const;

  int vertex_count_ = 0;
  std::vector<Arc> arcs_;  // sorted, no duplicates
};

// graph: loopless with a self-paired arc set; digraph: loopless with no
// self-paired pair. The empty arc set satisfies both and classifies as graph.
GraphKind classify(const MixedGraph& g);

// Loopless graph with an edge {x,y} wherever (x,y) or (y,x) is an arc.
MixedGraph underlying_graph(const MixedGraph& g);

// Reverses every arc. Involutive; fixes graphs.
MixedGraph inverse(const MixedGraph& g);

struct DegreePair {
  int in = 0;
  int out = 0;
  friend bool operator==(const DegreePair&, const DegreePair&) = default;
};

DegreePair degrees(const MixedGraph& g, VertexId v);

// Connectivity and bipartiteness of the underlying graph. A bipartition is
// a 0/1 colouring with every arc joining the two colours; for connected
// inputs it is unique up to flip and vertex 0 gets colour 0.
bool is_connected(const MixedGraph& g);
std::vector<int> underlying_components(const MixedGraph& g);
bool is_bipartite(const MixedGraph& g);
std::optional<std::vector<int>> bipartition(const MixedGraph& g);

// Named fixtures. petersen and lambda_cousin are 10-vertex cubic graphs
// with identical neighbourhood families; desargues is the bipartite cubic
// graph on 20 vertices (generalized Petersen GP(10,3)).
MixedGraph fixture(const std::string& name);
// Parametrized families: directed_path(n), directed_cycle(n), complete(n),
// cycle(n). n >= 1 except cycle, which needs n >= 3.
MixedGraph fixture(const std::string& name, int n);

// Text format "mg v1":
//   n <vertex_count>
//   a <tail> <head>     one arc
//   e <u> <v>           both arcs of an edge, u != v
//   side <v> <0|1>      optional cover-side annotation
//   # comment
struct ParsedGraph {
  MixedGraph graph;
  std::optional<std::vector<int>> sides;
};

ParsedGraph parse_mg(std::istream& in);
MixedGraph parse_mixed_graph(std::istream& in);
void print_mg(std::ostream& out, const MixedGraph& g);
void print_mg(std::ostream& out, const MixedGraph& g,
              const std::vector<int>& sides);
std::string to_mg_string(const MixedGraph& g);

// DOT export; self-paired pairs collapse to undirected edges.
void write_dot(std::ostream& out, const MixedGraph& g);

}  // namespace tfgraph

#endif  // TFGRAPH_GRAPH_HPP
