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

#ifndef TFGRAPH_ATRAILS_HPP
#define TFGRAPH_ATRAILS_HPP

#include <utility>
#include <vector>

#include "tfgraph/graph.hpp"
#include "tfgraph/tf.hpp"

namespace tfgraph {

// An alternating trail is a repeat-free arc sequence in which consecutive
// arcs share a tail or share a head. Equivalently, a trail in the incidence
// double cover. open: endpoints differ; closed: equal endpoint, even arc
// count; semi_closed: equal endpoint, odd arc count.
enum class TrailClass { not_a_trail, open, closed, semi_closed };

struct TrailInfo {
  TrailClass kind = TrailClass::not_a_trail;
  VertexId first = -1;  // joined vertices; meaningless for not_a_trail
  VertexId last = -1;
};

TrailInfo classify_trail(const MixedGraph& g, const std::vector<Arc>& seq);

// Image of an alternating trail under a TF-isomorphism: (x,y) maps to
// (alpha(x), beta(y)). Throws std::invalid_argument when m is not a
// TF-isomorphism from g to h or seq is not a trail of g.
std::vector<Arc> apply_tf_to_trail(const MixedGraph& g, const MixedGraph& h,
                                   const TFMap& m, const std::vector<Arc>& seq);

// Every pair of distinct vertices is joined by some alternating trail.
// Decided by reachability on the cover, not by trail enumeration.
bool is_a_connected(const MixedGraph& g);

// Classes of the relation "x and y are the first and last arcs of a common
// alternating trail". They coincide with the components of the alternating
// double cover. A frontier vertex meets arcs of exactly two classes.
struct ArcPartition {
  std::vector<std::vector<Arc>> classes;  // sorted by least arc
  std::vector<VertexId> frontier;         // sorted
  int class_count() const { return static_cast<int>(classes.size()); }
  int frontier_count() const { return static_cast<int>(frontier.size()); }
};

ArcPartition arc_classes(const MixedGraph& g);
std::vector<VertexId> frontier_vertices(const MixedGraph& g);

// Builds a mixed graph with exactly m arc classes and k frontier vertices.
// k == m-1 yields a directed path with m arcs; k >= m (m >= 2) a connected
// bipartite star joined through a chain of triangle gadgets. Throws
// std::invalid_argument when k < m-1, and for m == 1 with k >= 1, which no
// mixed graph realises (a single class admits no frontier vertex).
MixedGraph construct_with_classes(int m, int k);

struct ParitySet {
  bool even = false;
  bool odd = false;
  friend bool operator==(const ParitySet&, const ParitySet&) = default;
};

// Parities of the edge counts of all trails in a connected graph whose
// first edge is e1 and last edge is e2 (both counted). e1 != e2.
ParitySet trail_parities(const MixedGraph& g, std::pair<VertexId, VertexId> e1,
                         std::pair<VertexId, VertexId> e2);

}  // namespace tfgraph

#endif  // TFGRAPH_ATRAILS_HPP
