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

#ifndef TFGRAPH_ORBITALS_HPP
#define TFGRAPH_ORBITALS_HPP

#include <utility>
#include <vector>

#include "tfgraph/graph.hpp"
#include "tfgraph/perm.hpp"
#include "tfgraph/tf.hpp"

namespace tfgraph {

// Generators of a subgroup of S_n x S_n acting componentwise on arcs.
struct TFGroupGens {
  int degree = 0;
  std::vector<std::pair<Permutation, Permutation>> generators;
};

struct OrbitalDigraph {
  MixedGraph graph;
  Arc seed;
};

// Orbit of the seed arc under the generated group, computed by closure
// over the generators; no group enumeration.
OrbitalDigraph tf_orbital(const TFGroupGens& gens, Arc seed);

// Projects a TF-automorphism of a strongly bipartite digraph to an
// ordinary automorphism: alpha on sources, beta on sinks, alpha on
// isolated vertices. Throws std::invalid_argument when d is not strongly
// bipartite or m is not a TF-automorphism, and std::runtime_error when the
// projection fails to be an automorphism (possible only with isolated
// vertices).
Permutation psi_project(const MixedGraph& d, const TFMap& m);

// Aut(d) acts transitively on the arc set. Requires at least one arc.
bool is_orbital(const MixedGraph& d);

// The two-fold automorphism group acts transitively on the arc set under
// (alpha,beta)(u,v) = (alpha(u), beta(v)). Computed on the side-coloured
// cover core, where isolated cover vertices cannot move arcs.
bool is_tf_orbital(const MixedGraph& d);

}  // namespace tfgraph

#endif  // TFGRAPH_ORBITALS_HPP
