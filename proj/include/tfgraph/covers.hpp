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

#ifndef TFGRAPH_COVERS_HPP
#define TFGRAPH_COVERS_HPP

#include <utility>
#include <vector>

#include "tfgraph/graph.hpp"
#include "tfgraph/perm.hpp"

namespace tfgraph {

// Vertex (base, side) of a double cover. Cover vertices are indexed
// base + side * n, so side 0 occupies 0..n-1 and side 1 occupies n..2n-1.
struct CoverVertex {
  VertexId base = 0;
  int side = 0;
  friend auto operator<=>(const CoverVertex&, const CoverVertex&) = default;
};

// Incidence double cover: bipartite graph on all 2n cover vertices with an
// edge {(u,0),(v,1)} per arc (u,v). Isolated cover vertices are kept so
// that cover automorphisms restrict to total bijections per side.
class BipartiteCover {
 public:
  BipartiteCover(int base_vertex_count, std::vector<std::pair<int, int>> edges);

  int base_vertex_count() const { return base_n_; }
  int cover_vertex_count() const { return 2 * base_n_; }
  // Each edge as (side-0 index, side-1 index), sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  int side_of(int cover_vertex) const { return cover_vertex >= base_n_; }
  VertexId base_of(int cover_vertex) const {
    return cover_vertex >= base_n_ ? cover_vertex - base_n_ : cover_vertex;
  }
  static int cover_index(VertexId base, int side, int base_n) {
    return base + side * base_n;
  }

  MixedGraph as_mixed_graph() const;       // 2n vertices, self-paired arcs
  std::vector<int> side_colouring() const; // 0/1 per cover vertex

 private:
  int base_n_ = 0;
  std::vector<std::pair<int, int>> edges_;
};

// Alternating double cover: the IDC with isolated cover vertices removed
// and each edge directed from side 0 to side 1, plus its component
// partition. Vertices are listed side 0 first, bases ascending.
struct StrongBipartiteDigraph {
  std::vector<CoverVertex> vertices;
  std::vector<std::pair<int, int>> arcs;  // indices into `vertices`
  std::vector<int> component_of;          // per vertex
  int component_count = 0;

  MixedGraph as_mixed_graph() const;
  std::vector<int> side_colouring() const;
};

BipartiteCover idc(const MixedGraph& g);
StrongBipartiteDigraph adc(const MixedGraph& g);

// Canonical double cover (duplex): arcs (u,i) -> (v,1-i) per arc (u,v).
// For graphs this is the IDC viewed as a graph.
MixedGraph cdc(const MixedGraph& g);

// True when no vertex has both an in-arc and an out-arc: the non-isolated
// vertices split into sources and sinks with all arcs source -> sink.
bool is_strongly_bipartite(const MixedGraph& d);

// Inverts a double cover: given a connected bipartite h and a
// class-swapping involutive automorphism sigma, returns the mixed graph
// whose canonical double cover is h. Orbit representatives are taken in
// the colour class of vertex 0 and orbits are relabelled by their minimum
// element. Throws std::invalid_argument when sigma is not an automorphism,
// not an involution, or does not swap the classes.
MixedGraph quotient_by_involution(const MixedGraph& h,
                                  const Permutation& sigma);

// Same quotient against an explicitly given two-colouring; h need not be
// connected. Used to invert covers whose sides are known.
MixedGraph quotient_by_involution(const MixedGraph& h,
                                  const Permutation& sigma,
                                  const std::vector<int>& two_colouring);

}  // namespace tfgraph

#endif  // TFGRAPH_COVERS_HPP
