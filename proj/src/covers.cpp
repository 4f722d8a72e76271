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

#include "tfgraph/covers.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "tfgraph/iso.hpp"

namespace tfgraph {

BipartiteCover::BipartiteCover(int base_vertex_count,
                               std::vector<std::pair<int, int>> edges)
    : base_n_(base_vertex_count), edges_(std::move(edges)) {
  for (auto [u0, v1] : edges_)
    if (u0 < 0 || u0 >= base_n_ || v1 < base_n_ || v1 >= 2 * base_n_)
      throw std::invalid_argument("cover edge endpoints out of range");
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

MixedGraph BipartiteCover::as_mixed_graph() const {
  MixedGraph g(2 * base_n_);
  for (auto [u0, v1] : edges_) g.add_edge(u0, v1);
  return g;
}

std::vector<int> BipartiteCover::side_colouring() const {
  std::vector<int> sides(2 * base_n_, 0);
  for (int v = base_n_; v < 2 * base_n_; ++v) sides[v] = 1;
  return sides;
}

BipartiteCover idc(const MixedGraph& g) {
  int n = g.vertex_count();
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.arcs().size());
  for (const Arc& a : g.arcs())
    edges.emplace_back(BipartiteCover::cover_index(a.tail, 0, n),
                       BipartiteCover::cover_index(a.head, 1, n));
  return BipartiteCover(n, std::move(edges));
}

StrongBipartiteDigraph adc(const MixedGraph& g) {
  int n = g.vertex_count();
  std::vector<char> present(2 * n, 0);
  for (const Arc& a : g.arcs()) {
    present[a.tail] = 1;
    present[n + a.head] = 1;
  }
  StrongBipartiteDigraph d;
  std::vector<int> index_of(2 * n, -1);
  for (int side = 0; side < 2; ++side)
    for (int base = 0; base < n; ++base) {
      int cv = base + side * n;
      if (!present[cv]) continue;
      index_of[cv] = static_cast<int>(d.vertices.size());
      d.vertices.push_back(CoverVertex{base, side});
    }
  for (const Arc& a : g.arcs())
    d.arcs.emplace_back(index_of[a.tail], index_of[n + a.head]);
  std::sort(d.arcs.begin(), d.arcs.end());

  // component partition by union-find over arcs sharing an endpoint
  std::vector<int> parent(d.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [u, v] : d.arcs) parent[find(u)] = find(v);
  d.component_of.assign(d.vertices.size(), -1);
  int next = 0;
  std::vector<int> label(d.vertices.size(), -1);
  for (size_t v = 0; v < d.vertices.size(); ++v) {
    int root = find(static_cast<int>(v));
    if (label[root] == -1) label[root] = next++;
    d.component_of[v] = label[root];
  }
  d.component_count = next;
  return d;
}

MixedGraph StrongBipartiteDigraph::as_mixed_graph() const {
  MixedGraph g(static_cast<int>(vertices.size()));
  for (auto [u, v] : arcs) g.add_arc(u, v);
  return g;
}

std::vector<int> StrongBipartiteDigraph::side_colouring() const {
  std::vector<int> sides(vertices.size());
  for (size_t v = 0; v < vertices.size(); ++v) sides[v] = vertices[v].side;
  return sides;
}

MixedGraph cdc(const MixedGraph& g) {
  int n = g.vertex_count();
  MixedGraph c(2 * n);
  for (const Arc& a : g.arcs()) {
    c.add_arc(a.tail, n + a.head);
    c.add_arc(n + a.tail, a.head);
  }
  return c;
}

bool is_strongly_bipartite(const MixedGraph& d) {
  for (int v = 0; v < d.vertex_count(); ++v) {
    DegreePair deg = degrees(d, v);
    if (deg.in > 0 && deg.out > 0) return false;
  }
  return true;
}

MixedGraph quotient_by_involution(const MixedGraph& h,
                                  const Permutation& sigma,
                                  const std::vector<int>& two_colouring) {
  int n = h.vertex_count();
  if (sigma.degree() != n)
    throw std::invalid_argument("involution degree mismatch");
  if (static_cast<int>(two_colouring.size()) != n)
    throw std::invalid_argument("colouring size mismatch");
  if (n == 0 || n % 2 != 0)
    throw std::invalid_argument("quotient needs an even, positive order");
  if (!sigma.is_involution())
    throw std::invalid_argument("sigma is not an involution");
  for (const Arc& a : h.arcs())
    if (!h.has_arc(sigma(a.tail), sigma(a.head)))
      throw std::invalid_argument("sigma is not an automorphism");
  for (int v = 0; v < n; ++v)
    if (two_colouring[sigma(v)] == two_colouring[v])
      throw std::invalid_argument("sigma does not swap the colour classes");

  int reference = two_colouring[0];
  std::vector<int> reps;
  for (int v = 0; v < n; ++v)
    if (two_colouring[v] == reference) reps.push_back(v);
  // quotient labels follow the orbit minima
  std::stable_sort(reps.begin(), reps.end(), [&](int u, int v) {
    return std::min(u, sigma(u)) < std::min(v, sigma(v));
  });
  std::vector<int> label(n, -1);
  for (size_t i = 0; i < reps.size(); ++i) label[reps[i]] = static_cast<int>(i);

  MixedGraph q(static_cast<int>(reps.size()));
  for (int u : reps)
    for (int v : reps)
      if (h.has_arc(u, sigma(v))) q.add_arc(label[u], label[v]);

  // contract: the canonical double cover of the quotient is h again
  if (!find_isomorphism(cdc(q), h))
    throw std::logic_error("quotient contract violated");
  return q;
}

MixedGraph quotient_by_involution(const MixedGraph& h,
                                  const Permutation& sigma) {
  if (!is_connected(h))
    throw std::invalid_argument("quotient needs a connected cover");
  auto classes = bipartition(h);
  if (!classes)
    throw std::invalid_argument("quotient needs a bipartite cover");
  return quotient_by_involution(h, sigma, *classes);
}

}  // namespace tfgraph
