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

#ifndef TFGRAPH_RECON_HPP
#define TFGRAPH_RECON_HPP

#include <optional>
#include <vector>

#include "tfgraph/graph.hpp"
#include "tfgraph/perm.hpp"

namespace tfgraph {

// One double-cover preimage per conjugacy class of class-swapping
// involutions of Aut(h).
struct Preimage {
  MixedGraph graph;
  Permutation witness;   // least involution of its conjugacy class
  bool loopless = false;
  GraphKind kind = GraphKind::properly_mixed;
};

struct PreimageSet {
  std::vector<Preimage> entries;  // pairwise non-isomorphic

  int loopless_count() const;
  // Entries that are loopless graphs (self-paired arc sets).
  std::vector<const Preimage*> loopless_graphs() const;
};

// Enumerates the mixed graphs whose canonical double cover is h, one per
// conjugacy class of class-swapping involutions. h must be connected
// bipartite and within the group enumeration cap.
PreimageSet enumerate_cdc_preimages(const MixedGraph& h);

struct ReconstructionCount {
  int total = 0;           // loopless graph-kind preimages of cdc(g)
  bool including_self = false;
};

// Number of graphs with the same neighbourhood family as g, including g.
// Requires g to be a connected non-bipartite graph (connected cover).
ReconstructionCount count_reconstructions(const MixedGraph& g);

// Search for a loopless graph TF-isomorphic to d, over the side-swapping
// involutions of the cover of d. `none` is definitive: the cover group was
// fully enumerated. `unknown` reports a cap overrun.
struct SymmetrizeResult {
  enum class Status { found, none, unknown };
  Status status = Status::none;
  std::optional<MixedGraph> graph;
};

SymmetrizeResult symmetrize(const MixedGraph& d);

}  // namespace tfgraph

#endif  // TFGRAPH_RECON_HPP
