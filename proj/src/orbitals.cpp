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

#include "tfgraph/orbitals.hpp"

#include <set>
#include <stdexcept>

#include "tfgraph/covers.hpp"
#include "tfgraph/iso.hpp"

namespace tfgraph {

OrbitalDigraph tf_orbital(const TFGroupGens& gens, Arc seed) {
  int n = gens.degree;
  if (seed.tail < 0 || seed.tail >= n || seed.head < 0 || seed.head >= n)
    throw std::invalid_argument("seed endpoints out of range");
  for (const auto& [alpha, beta] : gens.generators)
    if (alpha.degree() != n || beta.degree() != n)
      throw std::invalid_argument("generator degree mismatch");

  // closure over generators and their inverses, smallest arc first
  std::set<Arc> orbit{seed};
  std::set<Arc> frontier{seed};
  while (!frontier.empty()) {
    Arc a = *frontier.begin();
    frontier.erase(frontier.begin());
    for (const auto& [alpha, beta] : gens.generators) {
      Arc images[2] = {Arc{alpha(a.tail), beta(a.head)},
                       Arc{alpha.inverse()(a.tail), beta.inverse()(a.head)}};
      for (const Arc& img : images)
        if (orbit.insert(img).second) frontier.insert(img);
    }
  }

  MixedGraph g(n, std::vector<Arc>(orbit.begin(), orbit.end()));
  return OrbitalDigraph{std::move(g), seed};
}

Permutation psi_project(const MixedGraph& d, const TFMap& m) {
  if (!is_strongly_bipartite(d))
    throw std::invalid_argument("projection needs a strongly bipartite digraph");
  if (!is_tf_map(d, d, m.alpha, m.beta))
    throw std::invalid_argument("not a two-fold automorphism");

  int n = d.vertex_count();
  std::vector<int> images(n);
  for (int v = 0; v < n; ++v) {
    DegreePair deg = degrees(d, v);
    if (deg.out > 0)
      images[v] = m.alpha(v);  // source
    else if (deg.in > 0)
      images[v] = m.beta(v);  // sink
    else
      images[v] = m.alpha(v);  // isolated vertices follow alpha
  }
  std::vector<char> seen(n, 0);
  for (int v : images) {
    if (seen[v])
      throw std::runtime_error("projection is not a bijection");
    seen[v] = 1;
  }
  Permutation f{std::move(images)};
  for (const Arc& a : d.arcs())
    if (!d.has_arc(f(a.tail), f(a.head)))
      throw std::runtime_error("projection is not an automorphism");
  return f;
}

bool is_orbital(const MixedGraph& d) {
  if (d.arc_count() == 0)
    throw std::invalid_argument("orbital recognition needs at least one arc");
  PermGroup aut = automorphism_group(d);
  std::set<Arc> orbit;
  Arc seed = d.arcs().front();
  for (const Permutation& p : aut.elements)
    orbit.insert(Arc{p(seed.tail), p(seed.head)});
  return static_cast<int>(orbit.size()) == d.arc_count();
}

bool is_tf_orbital(const MixedGraph& d) {
  if (d.arc_count() == 0)
    throw std::invalid_argument("orbital recognition needs at least one arc");
  // Isolated cover vertices cannot move arcs, so transitivity is decided
  // on the side-coloured core of the cover.
  StrongBipartiteDigraph core = adc(d);
  MixedGraph core_graph = core.as_mixed_graph();
  PermGroup aut = automorphism_group(core_graph, core.side_colouring());

  // arcs of d correspond to arcs of the core
  std::set<Arc> orbit;
  Arc seed = core_graph.arcs().front();
  for (const Permutation& p : aut.elements)
    orbit.insert(Arc{p(seed.tail), p(seed.head)});
  return static_cast<int>(orbit.size()) == core_graph.arc_count();
}

}  // namespace tfgraph
