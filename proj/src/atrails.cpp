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

#include "tfgraph/atrails.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "tfgraph/covers.hpp"

namespace tfgraph {

namespace {

// Cover vertex of an arc endpoint: (tail, 0) or (head, 1), encoded
// base + side * n.
int tail_cv(const Arc& a, int) { return a.tail; }
int head_cv(const Arc& a, int n) { return n + a.head; }

// Union-find over the 2n cover vertices along the cover edges.
struct CoverComponents {
  std::vector<int> parent;
  std::vector<char> present;

  explicit CoverComponents(const MixedGraph& g)
      : parent(2 * g.vertex_count()), present(2 * g.vertex_count(), 0) {
    std::iota(parent.begin(), parent.end(), 0);
    int n = g.vertex_count();
    for (const Arc& a : g.arcs()) {
      present[tail_cv(a, n)] = 1;
      present[head_cv(a, n)] = 1;
      unite(tail_cv(a, n), head_cv(a, n));
    }
  }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(int u, int v) { parent[find(u)] = find(v); }
};

}  // namespace

TrailInfo classify_trail(const MixedGraph& g, const std::vector<Arc>& seq) {
  TrailInfo bad;
  if (seq.empty()) return bad;
  for (const Arc& a : seq)
    if (!g.has_arc(a.tail, a.head)) return bad;
  {
    std::vector<Arc> sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      return bad;
  }

  int n = g.vertex_count();
  int k = static_cast<int>(seq.size());
  int w0, w;  // walk endpoints in the cover
  if (k == 1) {
    w0 = tail_cv(seq[0], n);
    w = head_cv(seq[0], n);
  } else {
    // junction between the first two arcs fixes the walk direction
    if (seq[0].tail == seq[1].tail) {
      w0 = head_cv(seq[0], n);
    } else if (seq[0].head == seq[1].head) {
      w0 = tail_cv(seq[0], n);
    } else {
      return bad;
    }
    w = (w0 == tail_cv(seq[0], n)) ? head_cv(seq[0], n) : tail_cv(seq[0], n);
    for (int i = 1; i < k; ++i) {
      if (w == tail_cv(seq[i], n)) {
        w = head_cv(seq[i], n);
      } else if (w == head_cv(seq[i], n)) {
        w = tail_cv(seq[i], n);
      } else {
        return bad;
      }
    }
  }

  TrailInfo info;
  info.first = w0 % n;
  info.last = w % n;
  if (w0 == w)
    info.kind = TrailClass::closed;
  else if (info.first == info.last)
    info.kind = TrailClass::semi_closed;
  else
    info.kind = TrailClass::open;
  return info;
}

std::vector<Arc> apply_tf_to_trail(const MixedGraph& g, const MixedGraph& h,
                                   const TFMap& m,
                                   const std::vector<Arc>& seq) {
  if (!is_tf_map(g, h, m.alpha, m.beta))
    throw std::invalid_argument("not a two-fold isomorphism");
  if (classify_trail(g, seq).kind == TrailClass::not_a_trail)
    throw std::invalid_argument("not an alternating trail");
  std::vector<Arc> image;
  image.reserve(seq.size());
  for (const Arc& a : seq) image.push_back(Arc{m.alpha(a.tail), m.beta(a.head)});
  return image;
}

bool is_a_connected(const MixedGraph& g) {
  int n = g.vertex_count();
  CoverComponents cc(g);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      bool joined = false;
      for (int i = 0; i < 2 && !joined; ++i)
        for (int j = 0; j < 2 && !joined; ++j) {
          int cu = u + i * n, cv = v + j * n;
          if (cc.present[cu] && cc.present[cv] && cc.find(cu) == cc.find(cv))
            joined = true;
        }
      if (!joined) return false;
    }
  return true;
}

ArcPartition arc_classes(const MixedGraph& g) {
  int n = g.vertex_count();
  CoverComponents cc(g);

  std::map<int, std::vector<Arc>> by_root;
  for (const Arc& a : g.arcs()) by_root[cc.find(tail_cv(a, n))].push_back(a);

  ArcPartition partition;
  std::map<int, int> class_of_root;
  for (auto& [root, arcs] : by_root) {
    class_of_root[root] = static_cast<int>(partition.classes.size());
    partition.classes.push_back(std::move(arcs));  // arcs arrive sorted
  }
  std::sort(partition.classes.begin(), partition.classes.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });

  // rebuild root -> class index after the sort
  std::map<Arc, int> class_of_arc;
  for (size_t c = 0; c < partition.classes.size(); ++c)
    for (const Arc& a : partition.classes[c])
      class_of_arc[a] = static_cast<int>(c);

  for (int v = 0; v < n; ++v) {
    std::set<int> seen;
    for (const Arc& a : g.arcs())
      if (a.tail == v || a.head == v) seen.insert(class_of_arc[a]);
    if (seen.size() == 2) partition.frontier.push_back(v);
  }
  return partition;
}

std::vector<VertexId> frontier_vertices(const MixedGraph& g) {
  return arc_classes(g).frontier;
}

MixedGraph construct_with_classes(int m, int k) {
  if (m < 1 || k < 0) throw std::invalid_argument("m >= 1 and k >= 0 required");
  if (k < m - 1)
    throw std::invalid_argument("no mixed graph has m classes and k < m-1 "
                                "frontier vertices");
  if (m == 1 && k >= 1)
    throw std::invalid_argument(
        "unrealisable: a single arc class admits no frontier vertex");

  MixedGraph g(0);
  if (k == m - 1) {
    // directed path with m arcs; every internal vertex is a frontier
    g = fixture("directed_path", m + 1);
  } else {
    // connected bipartite star on k-m+2 vertices, a bridge arc, and a
    // chain of m-2 triangle gadgets
    int star_order = k - m + 2;
    int total = star_order + 1 + 4 * (m - 2);
    g = MixedGraph(total);
    for (int leaf = 1; leaf < star_order; ++leaf) g.add_edge(0, leaf);
    int a = star_order;  // chain entry vertex
    g.add_arc(0, a);
    for (int i = 0; i < m - 2; ++i) {
      int b = a + 1, c = a + 2, d = a + 3, next = a + 4;
      g.add_edge(b, c);
      g.add_edge(c, d);
      g.add_edge(b, d);
      g.add_arc(a, b);
      g.add_arc(d, next);
      a = next;
    }
  }

  ArcPartition check = arc_classes(g);
  if (check.class_count() != m || check.frontier_count() != k)
    throw std::logic_error("construction failed its class/frontier contract");
  return g;
}

namespace {

struct EdgeIndex {
  std::vector<std::pair<int, int>> edges;            // u < v
  std::vector<std::vector<std::pair<int, int>>> at;  // vertex -> (other, edge)

  explicit EdgeIndex(const MixedGraph& g) : at(g.vertex_count()) {
    for (const Arc& a : g.arcs()) {
      if (a.tail < a.head) {
        int id = static_cast<int>(edges.size());
        edges.emplace_back(a.tail, a.head);
        at[a.tail].emplace_back(a.head, id);
        at[a.head].emplace_back(a.tail, id);
      }
    }
  }
  int id_of(std::pair<int, int> e) const {
    if (e.first > e.second) std::swap(e.first, e.second);
    auto it = std::find(edges.begin(), edges.end(), e);
    return it == edges.end() ? -1 : static_cast<int>(it - edges.begin());
  }
};

}  // namespace

ParitySet trail_parities(const MixedGraph& g, std::pair<VertexId, VertexId> e1,
                         std::pair<VertexId, VertexId> e2) {
  if (classify(g) != GraphKind::graph)
    throw std::invalid_argument("trail parities are defined for graphs");
  if (!is_connected(g))
    throw std::invalid_argument("trail parities need a connected graph");
  EdgeIndex index(g);
  int id1 = index.id_of(e1), id2 = index.id_of(e2);
  if (id1 < 0 || id2 < 0) throw std::invalid_argument("edge not in graph");
  if (id1 == id2) throw std::invalid_argument("edges must be distinct");
  if (index.edges.size() > 24)
    throw std::invalid_argument("graph too large for trail enumeration");

  ParitySet result;
  std::set<std::tuple<int, uint32_t, int>> visited;
  // walk states: (current endpoint, used edges, edges so far mod 2)
  auto dfs = [&](auto&& self, int at_vertex, uint32_t used, int parity) -> void {
    if (result.even && result.odd) return;
    if (!visited.insert({at_vertex, used, parity}).second) return;
    for (auto [other, id] : index.at[at_vertex]) {
      if (used & (1u << id)) continue;
      if (id == id2) {
        if ((parity + 1) % 2 == 0)
          result.even = true;
        else
          result.odd = true;
        continue;
      }
      self(self, other, used | (1u << id), (parity + 1) % 2);
    }
  };
  auto [a, b] = index.edges[id1];
  dfs(dfs, b, 1u << id1, 1);
  dfs(dfs, a, 1u << id1, 1);
  return result;
}

}  // namespace tfgraph
