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

#ifndef TFGRAPH_TF_HPP
#define TFGRAPH_TF_HPP

#include <optional>
#include <vector>

#include "tfgraph/covers.hpp"
#include "tfgraph/graph.hpp"
#include "tfgraph/iso.hpp"
#include "tfgraph/perm.hpp"

namespace tfgraph {

// Two-fold map: a pair of vertex bijections (alpha, beta). It is a
// TF-isomorphism from g to h when (u,v) is an arc of g iff
// (alpha(u), beta(v)) is an arc of h; non-trivial when alpha != beta.
struct TFMap {
  Permutation alpha;
  Permutation beta;

  bool non_trivial() const { return !(alpha == beta); }
  TFMap compose(const TFMap& rhs) const {
    return {alpha.compose(rhs.alpha), beta.compose(rhs.beta)};
  }
  TFMap inverse() const { return {alpha.inverse(), beta.inverse()}; }
  friend auto operator<=>(const TFMap&, const TFMap&) = default;
};

struct TFGroup {
  int degree = 0;
  std::vector<TFMap> elements;  // sorted by (alpha images, beta images)

  long long order() const { return static_cast<long long>(elements.size()); }
  long long non_trivial_count() const;
};

bool is_tf_map(const MixedGraph& g, const MixedGraph& h,
               const Permutation& alpha, const Permutation& beta);

// Decides TF-isomorphism by matching the incidence double covers with the
// side colouring respected, then splitting the witness into (alpha, beta).
std::optional<TFMap> find_tf_isomorphism(const MixedGraph& g,
                                         const MixedGraph& h);

// All TF-isomorphisms g -> h (cap-bounded), sorted.
std::vector<TFMap> all_tf_isomorphisms(const MixedGraph& g,
                                       const MixedGraph& h);

TFGroup tf_automorphism_group(const MixedGraph& g);

// True when the covers match under a side-swapping isomorphism, i.e. g is
// TF-isomorphic to the inverse of h.
bool tf_isomorphic_to_inverse(const MixedGraph& g, const MixedGraph& h);

// Multiset {N(v)} of open neighbourhoods, each sorted, family sorted.
// Graphs only.
std::vector<std::vector<VertexId>> neighbourhood_family(const MixedGraph& g);

struct StabilityReport {
  bool stable = false;
  long long aut_order = 0;
  long long tf_aut_order = 0;
  long long cdc_aut_order = 0;
  long long index = 0;  // cdc_aut_order / aut_order
};

// A graph is stable when its two-fold automorphism group is the diagonal
// copy of its automorphism group.
StabilityReport is_stable(const MixedGraph& g);

}  // namespace tfgraph

#endif  // TFGRAPH_TF_HPP
