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

#ifndef TFGRAPH_ISO_HPP
#define TFGRAPH_ISO_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tfgraph/graph.hpp"
#include "tfgraph/perm.hpp"

namespace tfgraph {

// Hard bound on materialized group element lists.
inline constexpr long long kGroupEnumerationCap = 1'000'000;

struct CapExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Fully enumerated permutation group, elements sorted lexicographically.
struct PermGroup {
  int degree = 0;
  std::vector<Permutation> elements;

  long long order() const { return static_cast<long long>(elements.size()); }
  bool contains(const Permutation& p) const;
};

// Deterministic backtracking search for an arc-preserving bijection. When a
// colouring pair is given, images keep their preimage's colour. Vertices are
// branched in (refinement cell, index) order with candidates in ascending
// index, so the returned witness is the least one in branching order.
std::optional<Permutation> find_isomorphism(const MixedGraph& g,
                                            const MixedGraph& h);
std::optional<Permutation> find_isomorphism(const MixedGraph& g,
                                            const MixedGraph& h,
                                            const std::vector<int>& colours_g,
                                            const std::vector<int>& colours_h);

// All isomorphisms g -> h, sorted. Throws CapExceededError past the cap.
std::vector<Permutation> all_isomorphisms(const MixedGraph& g,
                                          const MixedGraph& h);
std::vector<Permutation> all_isomorphisms(const MixedGraph& g,
                                          const MixedGraph& h,
                                          const std::vector<int>& colours_g,
                                          const std::vector<int>& colours_h);

PermGroup automorphism_group(const MixedGraph& g);
PermGroup automorphism_group(const MixedGraph& g,
                             const std::vector<int>& colours);

// Involutions of the group that exchange the two colour classes. The
// colouring must use exactly two colours, each element of the group must
// preserve or swap the classes, or std::invalid_argument is thrown.
std::vector<Permutation> class_swapping_involutions(
    const PermGroup& group, const std::vector<int>& two_colouring);

// Partition of `subset` into conjugacy classes of `group`. The subset must
// be closed under conjugation. Classes are sorted by least member.
std::vector<std::vector<Permutation>> conjugacy_classes(
    const PermGroup& group, const std::vector<Permutation>& subset);

// Small greedy generating set of an enumerated group.
std::vector<Permutation> generating_set(const PermGroup& group);

}  // namespace tfgraph

#endif  // TFGRAPH_ISO_HPP
