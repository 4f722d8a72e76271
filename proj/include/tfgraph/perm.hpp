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

#ifndef TFGRAPH_PERM_HPP
#define TFGRAPH_PERM_HPP

#include <compare>
#include <string>
#include <vector>

namespace tfgraph {

// A permutation of {0..n-1}, stored as its image vector. Comparison is
// lexicographic on images.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int v) const { return images_[v]; }
  const std::vector<int>& images() const { return images_; }

  // (a.compose(b))(v) == a(b(v)); b acts first.
  Permutation compose(const Permutation& rhs) const;
  Permutation inverse() const;

  bool is_identity() const;
  bool is_involution() const;  // order exactly 2

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// Disjoint-cycle notation with 1-indexed labels, e.g. "(1 9)(2 4)(5 7)".
// The identity prints as "id".
std::string to_cycle_string(const Permutation& p);
Permutation parse_cycle_string(const std::string& text, int degree);

}  // namespace tfgraph

#endif  // TFGRAPH_PERM_HPP
