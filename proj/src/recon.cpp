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

#include "tfgraph/recon.hpp"

#include <algorithm>
#include <stdexcept>

#include "tfgraph/covers.hpp"
#include "tfgraph/iso.hpp"
#include "tfgraph/tf.hpp"

namespace tfgraph {

int PreimageSet::loopless_count() const {
  int count = 0;
  for (const Preimage& p : entries)
    if (p.loopless) ++count;
  return count;
}

std::vector<const Preimage*> PreimageSet::loopless_graphs() const {
  std::vector<const Preimage*> result;
  for (const Preimage& p : entries)
    if (p.loopless && p.kind == GraphKind::graph) result.push_back(&p);
  return result;
}

PreimageSet enumerate_cdc_preimages(const MixedGraph& h) {
  if (!is_connected(h))
    throw std::invalid_argument("preimage enumeration needs a connected cover");
  auto classes = bipartition(h);
  if (!classes)
    throw std::invalid_argument("preimage enumeration needs a bipartite cover");

  PermGroup aut = automorphism_group(h);
  std::vector<Permutation> swaps = class_swapping_involutions(aut, *classes);
  std::vector<std::vector<Permutation>> ccs = conjugacy_classes(aut, swaps);

  PreimageSet set;
  for (const auto& cls : ccs) {
    const Permutation& witness = cls.front();  // least member
    Preimage entry;
    entry.graph = quotient_by_involution(h, witness, *classes);
    entry.witness = witness;
    entry.loopless = std::none_of(entry.graph.arcs().begin(),
                                  entry.graph.arcs().end(),
                                  [](const Arc& a) { return a.is_loop(); });
    entry.kind = classify(entry.graph);
    set.entries.push_back(std::move(entry));
  }

  for (size_t i = 0; i < set.entries.size(); ++i)
    for (size_t j = i + 1; j < set.entries.size(); ++j)
      if (find_isomorphism(set.entries[i].graph, set.entries[j].graph))
        throw std::logic_error("preimages of distinct classes are isomorphic");
  return set;
}

ReconstructionCount count_reconstructions(const MixedGraph& g) {
  if (classify(g) != GraphKind::graph)
    throw std::invalid_argument("reconstruction counting needs a graph");
  if (!is_connected(g) || is_bipartite(g))
    throw std::invalid_argument(
        "reconstruction counting needs a connected cover: "
        "g must be connected and non-bipartite");

  PreimageSet set = enumerate_cdc_preimages(cdc(g));
  ReconstructionCount count;
  for (const Preimage* p : set.loopless_graphs()) {
    ++count.total;
    if (find_isomorphism(p->graph, g)) count.including_self = true;
  }
  return count;
}

SymmetrizeResult symmetrize(const MixedGraph& d) {
  BipartiteCover cover = idc(d);
  MixedGraph m = cover.as_mixed_graph();
  std::vector<int> sides = cover.side_colouring();
  std::vector<int> flipped = sides;
  for (int& s : flipped) s = 1 - s;

  try {
    // Any side-swapping automorphism yields the full swap coset from the
    // side-preserving group.
    auto tau = find_isomorphism(m, m, sides, flipped);
    if (!tau) return {SymmetrizeResult::Status::none, std::nullopt};
    std::vector<Permutation> preserving =
        all_isomorphisms(m, m, sides, sides);
    std::vector<Permutation> coset;
    coset.reserve(preserving.size());
    for (const Permutation& p : preserving) coset.push_back(p.compose(*tau));
    std::sort(coset.begin(), coset.end());

    for (const Permutation& sigma : coset) {
      if (!sigma.is_involution()) continue;
      bool admissible = true;
      for (int v = 0; v < m.vertex_count() && admissible; ++v)
        if (m.has_arc(v, sigma(v))) admissible = false;
      if (!admissible) continue;  // quotient would carry a loop
      MixedGraph candidate = quotient_by_involution(m, sigma, sides);
      if (classify(candidate) != GraphKind::graph)
        throw std::logic_error("side quotient is not a graph");
      if (!find_tf_isomorphism(d, candidate))
        throw std::logic_error("symmetrize candidate failed validation");
      return {SymmetrizeResult::Status::found, std::move(candidate)};
    }
    return {SymmetrizeResult::Status::none, std::nullopt};
  } catch (const CapExceededError&) {
    return {SymmetrizeResult::Status::unknown, std::nullopt};
  }
}

}  // namespace tfgraph
