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

#include "tfgraph/tf.hpp"

#include <algorithm>
#include <stdexcept>

namespace tfgraph {

namespace {

TFMap split_cover_map(const Permutation& phi, int n) {
  std::vector<int> alpha(n), beta(n);
  for (int v = 0; v < n; ++v) {
    alpha[v] = phi(v);
    beta[v] = phi(v + n) - n;
  }
  return TFMap{Permutation(std::move(alpha)), Permutation(std::move(beta))};
}

void validate_tf_witness(const MixedGraph& g, const MixedGraph& h,
                         const TFMap& m) {
  if (!is_tf_map(g, h, m.alpha, m.beta))
    throw std::logic_error("cover witness failed the two-fold arc condition");
}

}  // namespace

long long TFGroup::non_trivial_count() const {
  long long count = 0;
  for (const TFMap& m : elements)
    if (m.non_trivial()) ++count;
  return count;
}

bool is_tf_map(const MixedGraph& g, const MixedGraph& h,
               const Permutation& alpha, const Permutation& beta) {
  int n = g.vertex_count();
  if (h.vertex_count() != n || alpha.degree() != n || beta.degree() != n)
    throw std::invalid_argument("size mismatch in two-fold map check");
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (g.has_arc(u, v) != h.has_arc(alpha(u), beta(v))) return false;
  return true;
}

std::optional<TFMap> find_tf_isomorphism(const MixedGraph& g,
                                         const MixedGraph& h) {
  if (g.vertex_count() != h.vertex_count()) return std::nullopt;
  BipartiteCover cg = idc(g), ch = idc(h);
  auto phi = find_isomorphism(cg.as_mixed_graph(), ch.as_mixed_graph(),
                              cg.side_colouring(), ch.side_colouring());
  if (!phi) return std::nullopt;
  TFMap m = split_cover_map(*phi, g.vertex_count());
  validate_tf_witness(g, h, m);
  return m;
}

std::vector<TFMap> all_tf_isomorphisms(const MixedGraph& g,
                                       const MixedGraph& h) {
  if (g.vertex_count() != h.vertex_count()) return {};
  BipartiteCover cg = idc(g), ch = idc(h);
  auto phis = all_isomorphisms(cg.as_mixed_graph(), ch.as_mixed_graph(),
                               cg.side_colouring(), ch.side_colouring());
  std::vector<TFMap> maps;
  maps.reserve(phis.size());
  for (const Permutation& phi : phis) {
    TFMap m = split_cover_map(phi, g.vertex_count());
    validate_tf_witness(g, h, m);
    maps.push_back(std::move(m));
  }
  std::sort(maps.begin(), maps.end());
  return maps;
}

TFGroup tf_automorphism_group(const MixedGraph& g) {
  return TFGroup{g.vertex_count(), all_tf_isomorphisms(g, g)};
}

bool tf_isomorphic_to_inverse(const MixedGraph& g, const MixedGraph& h) {
  if (g.vertex_count() != h.vertex_count()) return false;
  BipartiteCover cg = idc(g), ch = idc(h);
  std::vector<int> flipped = ch.side_colouring();
  for (int& s : flipped) s = 1 - s;
  return find_isomorphism(cg.as_mixed_graph(), ch.as_mixed_graph(),
                          cg.side_colouring(), flipped)
      .has_value();
}

std::vector<std::vector<VertexId>> neighbourhood_family(const MixedGraph& g) {
  if (classify(g) != GraphKind::graph)
    throw std::invalid_argument("neighbourhood family is defined for graphs");
  std::vector<std::vector<VertexId>> family;
  family.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    family.push_back(g.out_neighbours(v));  // sorted already
  std::sort(family.begin(), family.end());
  return family;
}

StabilityReport is_stable(const MixedGraph& g) {
  if (classify(g) != GraphKind::graph)
    throw std::invalid_argument("stability is defined for graphs");
  StabilityReport report;
  report.aut_order = automorphism_group(g).order();
  report.tf_aut_order = tf_automorphism_group(g).order();
  report.cdc_aut_order = automorphism_group(cdc(g)).order();
  report.stable = report.tf_aut_order == report.aut_order;
  report.index = report.cdc_aut_order / report.aut_order;
  return report;
}

}  // namespace tfgraph
