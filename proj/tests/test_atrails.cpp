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

#include <doctest.h>

#include <map>
#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "tfgraph/atrails.hpp"
#include "tfgraph/covers.hpp"
#include "tfgraph/iso.hpp"

using namespace tfgraph;

namespace {

// the closed alternating 6-cycle: sources 0,2,4 and sinks 1,3,5
MixedGraph alternating_hexagon() {
  return MixedGraph(6, {{0, 1}, {2, 1}, {2, 3}, {4, 3}, {4, 5}, {0, 5}});
}

MixedGraph k3_plus_isolated() {
  MixedGraph h(6);
  h.add_edge(0, 1);
  h.add_edge(0, 2);
  h.add_edge(1, 2);
  return h;
}

}  // namespace

TEST_CASE("trail classification basics") {
  MixedGraph g = alternating_hexagon();
  CHECK(classify_trail(g, {{0, 1}}).kind == TrailClass::open);
  CHECK(classify_trail(g, {{0, 1}}).first == 0);
  CHECK(classify_trail(g, {{0, 1}}).last == 1);

  TrailInfo hexagon = classify_trail(
      g, {{0, 1}, {2, 1}, {2, 3}, {4, 3}, {4, 5}, {0, 5}});
  CHECK(hexagon.kind == TrailClass::closed);

  MixedGraph path = fixture("directed_path", 3);
  CHECK(classify_trail(path, {{0, 1}, {1, 2}}).kind == TrailClass::not_a_trail);

  // repeats and foreign arcs are rejected
  CHECK(classify_trail(g, {{0, 1}, {0, 1}}).kind == TrailClass::not_a_trail);
  CHECK(classify_trail(g, {{1, 0}}).kind == TrailClass::not_a_trail);
  CHECK(classify_trail(g, {}).kind == TrailClass::not_a_trail);
}

TEST_CASE("a loop is a semi-closed trail of one arc") {
  MixedGraph g(2, {{0, 0}, {0, 1}});
  TrailInfo loop = classify_trail(g, {{0, 0}});
  CHECK(loop.kind == TrailClass::semi_closed);
  CHECK(loop.first == 0);
  CHECK(loop.last == 0);
  TrailInfo two = classify_trail(g, {{0, 0}, {0, 1}});
  CHECK(two.kind == TrailClass::open);
  CHECK(two.first == 0);
  CHECK(two.last == 1);
}

TEST_CASE("semi-closed trails exist in a triangle") {
  MixedGraph k3 = fixture("complete", 3);
  TrailInfo info = classify_trail(k3, {{0, 1}, {2, 1}, {2, 0}});
  CHECK(info.kind == TrailClass::semi_closed);
  CHECK(info.first == 0);
  CHECK(info.last == 0);
}

TEST_CASE("trail kinds match their parity across small graphs") {
  oracle::Rng rng(73);
  for (int trial = 0; trial < 12; ++trial) {
    MixedGraph g = oracle::random_mixed_graph(rng, 2 + rng.below(3), 40);
    if (g.arc_count() > 8) continue;
    oracle::for_each_atrail(g, [&](const std::vector<Arc>& trail) {
      TrailInfo info = classify_trail(g, trail);
      REQUIRE(info.kind != TrailClass::not_a_trail);
      if (info.kind == TrailClass::closed) CHECK(trail.size() % 2 == 0);
      if (info.kind == TrailClass::semi_closed) CHECK(trail.size() % 2 == 1);
      if (info.kind == TrailClass::open) CHECK(info.first != info.last);
    });
  }
}

TEST_CASE("open and semi-closed endpoints do not depend on the ordering") {
  oracle::Rng rng(79);
  for (int trial = 0; trial < 10; ++trial) {
    MixedGraph g = oracle::random_mixed_graph(rng, 2 + rng.below(3), 40);
    if (g.arc_count() > 7) continue;
    std::map<std::set<Arc>, std::set<std::pair<int, int>>> endpoints;
    oracle::for_each_atrail(g, [&](const std::vector<Arc>& trail) {
      TrailInfo info = classify_trail(g, trail);
      if (info.kind == TrailClass::closed) return;
      std::set<Arc> key(trail.begin(), trail.end());
      int a = std::min(info.first, info.last);
      int b = std::max(info.first, info.last);
      endpoints[key].insert({a, b});
    });
    for (const auto& [key, pairs] : endpoints) CHECK(pairs.size() == 1);
  }
}

TEST_CASE("tf images of trails are trails, closed ones stay closed") {
  oracle::Rng rng(83);
  int exercised = 0;
  for (int trial = 0; trial < 60 && exercised < 12; ++trial) {
    int n = 2 + rng.below(3);
    MixedGraph g = oracle::random_mixed_graph(rng, n, 40);
    if (g.arc_count() == 0 || g.arc_count() > 7) continue;
    auto pairs = oracle::brute_tf_isomorphisms(g, g);
    if (pairs.size() < 2) continue;
    ++exercised;
    for (const auto& [alpha, beta] : pairs) {
      TFMap m{Permutation(alpha), Permutation(beta)};
      oracle::for_each_atrail(g, [&](const std::vector<Arc>& trail) {
        std::vector<Arc> image = apply_tf_to_trail(g, g, m, trail);
        TrailInfo before = classify_trail(g, trail);
        TrailInfo after = classify_trail(g, image);
        REQUIRE(after.kind != TrailClass::not_a_trail);
        if (before.kind == TrailClass::closed)
          CHECK(after.kind == TrailClass::closed);
      });
    }
  }
  CHECK(exercised >= 5);
}

TEST_CASE("identity maps every trail to itself") {
  MixedGraph g = alternating_hexagon();
  TFMap id{Permutation::identity(6), Permutation::identity(6)};
  std::vector<Arc> trail{{0, 1}, {2, 1}, {2, 3}};
  CHECK(apply_tf_to_trail(g, g, id, trail) == trail);
  TFMap broken{Permutation({1, 0, 2, 3, 4, 5}), Permutation::identity(6)};
  CHECK_THROWS_AS(apply_tf_to_trail(g, g, broken, trail),
                  std::invalid_argument);
}

TEST_CASE("alternating connectivity") {
  CHECK(is_a_connected(alternating_hexagon()));
  CHECK_FALSE(is_a_connected(fixture("directed_path", 3)));
  CHECK_FALSE(is_a_connected(k3_plus_isolated()));
  // connected graphs with at least two edges are alternating-connected
  oracle::Rng rng(89);
  for (int trial = 0; trial < 40; ++trial) {
    MixedGraph g = oracle::random_connected_graph(rng, 2 + rng.below(6));
    if (g.arc_count() >= 4) CHECK(is_a_connected(g));
  }
}

TEST_CASE("alternating connectivity matches exhaustive trail search") {
  oracle::Rng rng(97);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + rng.below(3);
    MixedGraph g = oracle::random_mixed_graph(rng, n, 35);
    if (g.arc_count() > 7) continue;
    std::set<std::pair<int, int>> joined;
    oracle::for_each_atrail(g, [&](const std::vector<Arc>& trail) {
      TrailInfo info = classify_trail(g, trail);
      joined.insert({std::min(info.first, info.last),
                     std::max(info.first, info.last)});
    });
    bool all = true;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!joined.count({u, v})) all = false;
    CHECK(is_a_connected(g) == all);
  }
}

TEST_CASE("arc classes of the basic shapes") {
  CHECK(arc_classes(fixture("complete", 3)).class_count() == 1);
  ArcPartition c4 = arc_classes(fixture("cycle", 4));
  CHECK(c4.class_count() == 2);
  CHECK(c4.frontier == std::vector<VertexId>{0, 1, 2, 3});
  CHECK(arc_classes(fixture("directed_path", 4)).class_count() == 3);
  for (const auto& cls : arc_classes(fixture("directed_path", 4)).classes)
    CHECK(cls.size() == 1);
}

TEST_CASE("frontier of the basic shapes") {
  CHECK(frontier_vertices(fixture("complete", 3)).empty());
  CHECK(frontier_vertices(fixture("cycle", 4)) ==
        std::vector<VertexId>{0, 1, 2, 3});
  CHECK(frontier_vertices(construct_with_classes(4, 6)).size() == 6);
}

TEST_CASE("class count equals the cover component count") {
  oracle::Rng rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    MixedGraph g = oracle::random_mixed_graph(rng, 1 + rng.below(7));
    CHECK(arc_classes(g).class_count() == adc(g).component_count);
  }
}

TEST_CASE("classes and frontier follow bipartiteness on connected graphs") {
  oracle::Rng rng(103);
  for (int trial = 0; trial < 60; ++trial) {
    MixedGraph g = oracle::random_connected_graph(rng, 2 + rng.below(6));
    ArcPartition p = arc_classes(g);
    if (is_bipartite(g)) {
      CHECK(p.class_count() == 2);
      CHECK(p.frontier_count() == g.vertex_count());
    } else {
      CHECK(p.class_count() == 1);
      CHECK(p.frontier_count() == 0);
    }
  }
}

TEST_CASE("one class exactly when the frontier is empty, connected case") {
  oracle::Rng rng(107);
  for (int trial = 0; trial < 80; ++trial) {
    MixedGraph g = oracle::random_mixed_graph(rng, 2 + rng.below(5), 30);
    if (!is_connected(g) || g.arc_count() == 0) continue;
    ArcPartition p = arc_classes(g);
    CHECK((p.class_count() == 1) == (p.frontier_count() == 0));
  }
}

TEST_CASE("singleton classes, tiny degrees and single-arc trails coincide") {
  oracle::Rng rng(109);
  for (int trial = 0; trial < 80; ++trial) {
    int n = 1 + rng.below(5);
    MixedGraph g = oracle::random_mixed_graph(rng, n, 25);
    if (g.arc_count() == 0) continue;
    ArcPartition p = arc_classes(g);
    bool singletons = true;
    for (const auto& cls : p.classes) singletons &= cls.size() == 1;
    bool degree_bounded = true;
    for (int v = 0; v < n; ++v) {
      DegreePair d = degrees(g, v);
      degree_bounded &= d.in <= 1 && d.out <= 1;
    }
    // no two distinct arcs share a tail or share a head
    bool single_arc_trails = true;
    for (const Arc& a : g.arcs())
      for (const Arc& b : g.arcs())
        if (a != b && (a.tail == b.tail || a.head == b.head))
          single_arc_trails = false;
    CHECK(singletons == degree_bounded);
    CHECK(singletons == single_arc_trails);
    if (singletons && is_connected(g)) {
      // connected with all degrees <= 1: a directed path or directed cycle
      int sources = 0, sinks = 0;
      for (int v = 0; v < n; ++v) {
        DegreePair d = degrees(g, v);
        if (d.in == 0) ++sources;
        if (d.out == 0) ++sinks;
      }
      bool path_like = sources == 1 && sinks == 1 && g.arc_count() == n - 1;
      bool cycle_like = sources == 0 && sinks == 0 && g.arc_count() == n;
      CHECK((path_like || cycle_like));
    }
  }
}

TEST_CASE("arcs of different classes separate when the frontier is removed") {
  oracle::Rng rng(113);
  int exercised = 0;
  for (int trial = 0; trial < 300 && exercised < 30; ++trial) {
    int n = 3 + rng.below(4);
    MixedGraph g = oracle::random_mixed_graph(rng, n, 30);
    if (!is_connected(g)) continue;
    ArcPartition p = arc_classes(g);
    if (p.frontier_count() == 0 || p.frontier_count() == n) continue;
    ++exercised;

    std::set<int> frontier(p.frontier.begin(), p.frontier.end());
    // components of the underlying graph with frontier vertices removed
    MixedGraph u = underlying_graph(g);
    std::vector<int> comp(n, -1);
    int c = 0;
    for (int s = 0; s < n; ++s) {
      if (comp[s] != -1 || frontier.count(s)) continue;
      comp[s] = c;
      std::vector<int> queue{s};
      for (size_t head = 0; head < queue.size(); ++head)
        for (int w : u.out_neighbours(queue[head]))
          if (comp[w] == -1 && !frontier.count(w)) {
            comp[w] = c;
            queue.push_back(w);
          }
      ++c;
    }
    auto survivor_components = [&](const Arc& a) {
      std::set<int> comps;
      if (!frontier.count(a.tail)) comps.insert(comp[a.tail]);
      if (!frontier.count(a.head)) comps.insert(comp[a.head]);
      return comps;
    };
    for (size_t i = 0; i < p.classes.size(); ++i)
      for (size_t j = i + 1; j < p.classes.size(); ++j)
        for (const Arc& x : p.classes[i])
          for (const Arc& y : p.classes[j]) {
            std::set<int> cx = survivor_components(x);
            std::set<int> cy = survivor_components(y);
            for (int a : cx) CHECK(cy.count(a) == 0);
          }
  }
  CHECK(exercised >= 10);
}

TEST_CASE("class and frontier construction across the grid") {
  CHECK(construct_with_classes(1, 0) == fixture("directed_path", 2));
  CHECK(construct_with_classes(3, 2) == fixture("directed_path", 4));
  for (int m = 2; m <= 6; ++m)
    for (int k = m - 1; k <= 8; ++k) {
      MixedGraph g = construct_with_classes(m, k);
      ArcPartition p = arc_classes(g);
      CHECK(p.class_count() == m);
      CHECK(p.frontier_count() == k);
    }
  CHECK_THROWS_AS(construct_with_classes(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(construct_with_classes(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(construct_with_classes(2, -1), std::invalid_argument);
  // one class forces an empty frontier, so these are impossible
  CHECK_THROWS_AS(construct_with_classes(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(construct_with_classes(1, 8), std::invalid_argument);
}

TEST_CASE("trail parities on the textbook examples") {
  MixedGraph k3 = fixture("complete", 3);
  CHECK(trail_parities(k3, {0, 1}, {1, 2}) == ParitySet{true, true});

  MixedGraph p3(3);
  p3.add_edge(0, 1);
  p3.add_edge(1, 2);
  CHECK(trail_parities(p3, {0, 1}, {1, 2}) == ParitySet{true, false});

  MixedGraph c4 = fixture("cycle", 4);
  ParitySet opposite = trail_parities(c4, {0, 1}, {2, 3});
  CHECK(opposite.odd);
  CHECK_FALSE(opposite.even);

  CHECK_THROWS_AS(trail_parities(p3, {0, 1}, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(trail_parities(p3, {0, 1}, {0, 2}), std::invalid_argument);
  MixedGraph split(4);
  split.add_edge(0, 1);
  split.add_edge(2, 3);
  CHECK_THROWS_AS(trail_parities(split, {0, 1}, {2, 3}),
                  std::invalid_argument);
}

TEST_CASE("trail parities match a plain enumeration oracle") {
  for (int n = 3; n <= 4; ++n) {
    for (const MixedGraph& g : oracle::all_connected_graphs(n)) {
      if (g.arc_count() < 4) continue;  // need two distinct edges
      std::vector<std::pair<int, int>> edges;
      for (const Arc& a : g.arcs())
        if (a.tail < a.head) edges.emplace_back(a.tail, a.head);
      for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = i + 1; j < edges.size(); ++j) {
          ParitySet p = trail_parities(g, edges[i], edges[j]);
          auto [even, odd] = oracle::brute_trail_parities(g, edges[i], edges[j]);
          CHECK(p.even == even);
          CHECK(p.odd == odd);
        }
    }
  }
  oracle::Rng rng(233);
  for (int trial = 0; trial < 25; ++trial) {
    MixedGraph g = oracle::random_connected_graph(rng, 5, 45);
    std::vector<std::pair<int, int>> edges;
    for (const Arc& a : g.arcs())
      if (a.tail < a.head) edges.emplace_back(a.tail, a.head);
    if (edges.size() < 2) continue;
    int i = rng.below(static_cast<int>(edges.size()));
    int j = rng.below(static_cast<int>(edges.size()));
    if (i == j) continue;
    ParitySet p = trail_parities(g, edges[i], edges[j]);
    auto [even, odd] = oracle::brute_trail_parities(g, edges[i], edges[j]);
    CHECK(p.even == even);
    CHECK(p.odd == odd);
  }
}

TEST_CASE("parity sets are not pinned down by bipartiteness alone") {
  // an odd cycle guarantees both parities only when the joining trails can
  // reach it disjointly: a triangle with a pendant edge has single-parity
  // pairs, while the bipartite K_{2,3} has a both-parity pair
  MixedGraph paw(4);
  paw.add_edge(0, 1);
  paw.add_edge(0, 2);
  paw.add_edge(1, 2);
  paw.add_edge(0, 3);
  CHECK_FALSE(is_bipartite(paw));
  CHECK(trail_parities(paw, {0, 1}, {0, 3}) == ParitySet{true, false});

  MixedGraph k23(5);
  for (int a = 0; a < 2; ++a)
    for (int b = 2; b < 5; ++b) k23.add_edge(a, b);
  CHECK(is_bipartite(k23));
  CHECK(trail_parities(k23, {0, 2}, {1, 3}) == ParitySet{true, true});
}

TEST_CASE("nontrivial maps send an open trail to a semi-closed one") {
  // connected non-bipartite hosts; the witness trail is read off the cover
  auto check_pair = [](const MixedGraph& g, const MixedGraph& h,
                       const TFMap& m) {
    if (!m.non_trivial()) return;
    int n = g.vertex_count();
    int u = -1;
    for (int v = 0; v < n; ++v)
      if (m.alpha(v) != m.beta(v)) u = v;
    REQUIRE(u >= 0);
    int v = m.beta.inverse()(m.alpha(u));
    // breadth-first path u0 -> v1 in the cover of g
    MixedGraph cover = idc(g).as_mixed_graph();
    std::vector<int> parent(2 * n, -2);
    std::vector<int> queue{u};
    parent[u] = -1;
    for (size_t head = 0; head < queue.size(); ++head) {
      int x = queue[head];
      for (int y : cover.out_neighbours(x))
        if (parent[y] == -2) {
          parent[y] = x;
          queue.push_back(y);
        }
    }
    REQUIRE(parent[v + n] != -2);
    std::vector<Arc> trail;
    for (int x = v + n; parent[x] != -1; x = parent[x]) {
      int y = parent[x];
      int side0 = std::min(x, y), side1 = std::max(x, y);
      trail.push_back(Arc{side0, side1 - n});
    }
    std::reverse(trail.begin(), trail.end());
    TrailInfo before = classify_trail(g, trail);
    REQUIRE(before.kind == TrailClass::open);
    CHECK(before.first == u);
    CHECK(before.last == v);
    TrailInfo after = classify_trail(h, apply_tf_to_trail(g, h, m, trail));
    CHECK(after.kind == TrailClass::semi_closed);
  };

  MixedGraph lambda = fixture("lambda_cousin");
  TFGroup group = tf_automorphism_group(lambda);
  CHECK(group.non_trivial_count() == 108);
  for (const TFMap& m : group.elements) check_pair(lambda, lambda, m);

  // and across small non-bipartite hosts found by brute force
  oracle::Rng rng(127);
  int exercised = 0;
  for (int trial = 0; trial < 200 && exercised < 8; ++trial) {
    MixedGraph g = oracle::random_connected_graph(rng, 3 + rng.below(3));
    if (is_bipartite(g)) continue;
    for (const auto& [alpha, beta] : oracle::brute_tf_isomorphisms(g, g)) {
      TFMap m{Permutation(alpha), Permutation(beta)};
      if (!m.non_trivial()) continue;
      ++exercised;
      check_pair(g, g, m);
    }
  }
}
