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

#include "tfgraph/perm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tfgraph {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[v])
      throw std::invalid_argument("not a permutation");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::compose(const Permutation& rhs) const {
  if (degree() != rhs.degree())
    throw std::invalid_argument("degree mismatch in composition");
  std::vector<int> images(degree());
  for (int i = 0; i < degree(); ++i) images[i] = images_[rhs.images_[i]];
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> images(degree());
  for (int i = 0; i < degree(); ++i) images[images_[i]] = i;
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

bool Permutation::is_involution() const {
  if (is_identity()) return false;
  for (int i = 0; i < degree(); ++i)
    if (images_[images_[i]] != i) return false;
  return true;
}

std::string to_cycle_string(const Permutation& p) {
  if (p.is_identity()) return "id";
  std::ostringstream out;
  std::vector<char> done(p.degree(), 0);
  for (int start = 0; start < p.degree(); ++start) {
    if (done[start] || p(start) == start) continue;
    out << "(";
    int v = start;
    bool first = true;
    do {
      if (!first) out << " ";
      out << v + 1;  // cycles print 1-indexed
      done[v] = 1;
      v = p(v);
      first = false;
    } while (v != start);
    out << ")";
  }
  return out.str();
}

Permutation parse_cycle_string(const std::string& text, int degree) {
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = i;
  std::string trimmed;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c)) || !trimmed.empty())
      trimmed.push_back(c);
  while (!trimmed.empty() && isspace(static_cast<unsigned char>(trimmed.back())))
    trimmed.pop_back();
  if (trimmed == "id" || trimmed == "()") return Permutation(std::move(images));

  size_t pos = 0;
  auto skip_space = [&] {
    while (pos < trimmed.size() &&
           isspace(static_cast<unsigned char>(trimmed[pos])))
      ++pos;
  };
  skip_space();
  bool any_cycle = false;
  while (pos < trimmed.size()) {
    if (trimmed[pos] != '(')
      throw std::invalid_argument("bad cycle notation: " + text);
    ++pos;
    std::vector<int> cycle;
    while (true) {
      skip_space();
      if (pos < trimmed.size() && trimmed[pos] == ')') {
        ++pos;
        break;
      }
      int value = 0;
      bool got = false;
      while (pos < trimmed.size() &&
             isdigit(static_cast<unsigned char>(trimmed[pos]))) {
        value = value * 10 + (trimmed[pos] - '0');
        ++pos;
        got = true;
      }
      if (!got) throw std::invalid_argument("bad cycle notation: " + text);
      if (value < 1 || value > degree)
        throw std::invalid_argument("cycle entry out of range: " + text);
      cycle.push_back(value - 1);
    }
    if (cycle.size() < 2)
      throw std::invalid_argument("cycles need at least two entries: " + text);
    for (size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i];
      int to = cycle[(i + 1) % cycle.size()];
      if (images[from] != from)
        throw std::invalid_argument("repeated entry in cycles: " + text);
      images[from] = to;
    }
    any_cycle = true;
    skip_space();
  }
  if (!any_cycle) throw std::invalid_argument("bad cycle notation: " + text);
  return Permutation(std::move(images));
}

}  // namespace tfgraph
