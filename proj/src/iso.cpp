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

#include "tfgraph/iso.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace tfgraph {

namespace {

struct AdjMatrix {
  int n = 0;
  std::vector<uint8_t> cells;
  std::vector<std::vector<int>> out, in;

  explicit AdjMatrix(const MixedGraph& g)
      : n(g.vertex_count()), cells(size_t(n) * n, 0), out(n), in(n) {
    for (const Arc& a : g.arcs()) {
      cells[size_t(a.tail) * n + a.head] = 1;
      out[a.tail].push_back(a.head);
      in[a.head].push_back(a.tail);
    }
  }
  bool at(int u, int v) const { return cells[size_t(u) * n + v] != 0; }
};

using Signature = std::tuple<int, int, std::vector<int>, std::vector<int>>;

Signature signature_of(const AdjMatrix& m, const std::vector<int>& colour,
                       int v) {
  std::vector<int> outc, inc;
  outc.reserve(m.out[v].size());
  inc.reserve(m.in[v].size());
  for (int w : m.out[v]) outc.push_back(colour[w]);
  for (int w : m.in[v]) inc.push_back(colour[w]);
  std::sort(outc.begin(), outc.end());
  std::sort(inc.begin(), inc.end());
  return {colour[v], m.at(v, v) ? 1 : 0, std::move(outc), std::move(inc)};
}

// Iterated joint colour refinement. Signatures are renumbered over both
// graphs at once so equal cells keep equal ids. Returns false when the
// colour histograms diverge (no isomorphism).
bool refine_colours(const AdjMatrix& a, const AdjMatrix& b,
                    std::vector<int>& ca, std::vector<int>& cb) {
  for (;;) {
    std::map<Signature, int> ids;
    std::vector<Signature> sa(a.n), sb(b.n);
    for (int v = 0; v < a.n; ++v) sa[v] = signature_of(a, ca, v);
    for (int v = 0; v < b.n; ++v) sb[v] = signature_of(b, cb, v);
    for (const auto& s : sa) ids.emplace(s, 0);
    for (const auto& s : sb) ids.emplace(s, 0);
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;

    std::vector<int> na(a.n), nb(b.n);
    std::vector<int> hist_a(next, 0), hist_b(next, 0);
    for (int v = 0; v < a.n; ++v) ++hist_a[na[v] = ids[sa[v]]];
    for (int v = 0; v < b.n; ++v) ++hist_b[nb[v] = ids[sb[v]]];
    if (hist_a != hist_b) return false;

    bool changed = (na != ca) || (nb != cb);
    ca = std::move(na);
    cb = std::move(nb);
    if (!changed) return true;
  }
}

// Backtracking over colour-compatible assignments. The callback receives
// each complete mapping; returning false stops the search.
void search(const AdjMatrix& a, const AdjMatrix& b, const std::vector<int>& ca,
            const std::vector<int>& cb,
            const std::function<bool(const std::vector<int>&)>& callback) {
  int n = a.n;
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int u, int v) { return ca[u] < ca[v]; });

  int max_colour = 0;
  for (int c : ca) max_colour = std::max(max_colour, c);
  for (int c : cb) max_colour = std::max(max_colour, c);
  std::vector<std::vector<int>> candidates(max_colour + 1);
  for (int v = 0; v < n; ++v) candidates[cb[v]].push_back(v);

  std::vector<int> mapping(n, -1);
  std::vector<char> used(n, 0);
  std::vector<int> assigned;
  assigned.reserve(n);

  bool stop = false;
  auto consistent = [&](int v, int w) {
    if (a.at(v, v) != b.at(w, w)) return false;
    for (int u : assigned) {
      if (a.at(u, v) != b.at(mapping[u], w)) return false;
      if (a.at(v, u) != b.at(w, mapping[u])) return false;
    }
    return true;
  };

  auto recurse = [&](auto&& self, int depth) -> void {
    if (stop) return;
    if (depth == n) {
      if (!callback(mapping)) stop = true;
      return;
    }
    int v = order[depth];
    for (int w : candidates[ca[v]]) {
      if (used[w] || !consistent(v, w)) continue;
      mapping[v] = w;
      used[w] = 1;
      assigned.push_back(v);
      self(self, depth + 1);
      assigned.pop_back();
      used[w] = 0;
      mapping[v] = -1;
      if (stop) return;
    }
  };
  recurse(recurse, 0);
}

void for_each_isomorphism(
    const MixedGraph& g, const MixedGraph& h, const std::vector<int>* colours_g,
    const std::vector<int>* colours_h,
    const std::function<bool(const std::vector<int>&)>& callback) {
  if (colours_g && static_cast<int>(colours_g->size()) != g.vertex_count())
    throw std::invalid_argument("colouring size mismatch");
  if (colours_h && static_cast<int>(colours_h->size()) != h.vertex_count())
    throw std::invalid_argument("colouring size mismatch");
  if (g.vertex_count() != h.vertex_count()) return;
  if (g.arc_count() != h.arc_count()) return;
  if (g.vertex_count() == 0) {
    callback({});
    return;
  }

  AdjMatrix a(g), b(h);
  // Externally supplied colours must correspond by value, so fold them
  // into a shared id space before refining.
  std::vector<int> ca(a.n, 0), cb(b.n, 0);
  if (colours_g || colours_h) {
    std::map<int, int> ids;
    if (colours_g)
      for (int c : *colours_g) ids.emplace(c, 0);
    if (colours_h)
      for (int c : *colours_h) ids.emplace(c, 0);
    int next = 0;
    for (auto& [c, id] : ids) id = next++;
    if (colours_g)
      for (int v = 0; v < a.n; ++v) ca[v] = ids[(*colours_g)[v]];
    if (colours_h)
      for (int v = 0; v < b.n; ++v) cb[v] = ids[(*colours_h)[v]];
  }
  if (!refine_colours(a, b, ca, cb)) return;
  search(a, b, ca, cb, callback);
}

}  // namespace

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

std::optional<Permutation> find_isomorphism(const MixedGraph& g,
                                            const MixedGraph& h) {
  std::optional<Permutation> found;
  for_each_isomorphism(g, h, nullptr, nullptr,
                       [&](const std::vector<int>& mapping) {
                         found = Permutation(mapping);
                         return false;
                       });
  return found;
}

std::optional<Permutation> find_isomorphism(const MixedGraph& g,
                                            const MixedGraph& h,
                                            const std::vector<int>& colours_g,
                                            const std::vector<int>& colours_h) {
  std::optional<Permutation> found;
  for_each_isomorphism(g, h, &colours_g, &colours_h,
                       [&](const std::vector<int>& mapping) {
                         found = Permutation(mapping);
                         return false;
                       });
  return found;
}

namespace {

std::vector<Permutation> collect_all(const MixedGraph& g, const MixedGraph& h,
                                     const std::vector<int>* cg,
                                     const std::vector<int>* ch) {
  std::vector<Permutation> result;
  for_each_isomorphism(g, h, cg, ch, [&](const std::vector<int>& mapping) {
    if (static_cast<long long>(result.size()) >= kGroupEnumerationCap)
      throw CapExceededError("isomorphism enumeration cap exceeded");
    result.emplace_back(mapping);
    return true;
  });
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace

std::vector<Permutation> all_isomorphisms(const MixedGraph& g,
                                          const MixedGraph& h) {
  return collect_all(g, h, nullptr, nullptr);
}

std::vector<Permutation> all_isomorphisms(const MixedGraph& g,
                                          const MixedGraph& h,
                                          const std::vector<int>& colours_g,
                                          const std::vector<int>& colours_h) {
  return collect_all(g, h, &colours_g, &colours_h);
}

PermGroup automorphism_group(const MixedGraph& g) {
  return PermGroup{g.vertex_count(), all_isomorphisms(g, g)};
}

PermGroup automorphism_group(const MixedGraph& g,
                             const std::vector<int>& colours) {
  return PermGroup{g.vertex_count(), all_isomorphisms(g, g, colours, colours)};
}

std::vector<Permutation> class_swapping_involutions(
    const PermGroup& group, const std::vector<int>& two_colouring) {
  if (static_cast<int>(two_colouring.size()) != group.degree)
    throw std::invalid_argument("colouring size mismatch");
  std::set<int> values(two_colouring.begin(), two_colouring.end());
  if (group.degree > 0 && values.size() != 2)
    throw std::invalid_argument("colouring must use exactly two colours");
  int c0 = values.empty() ? 0 : *values.begin();

  std::vector<Permutation> swaps;
  for (const Permutation& p : group.elements) {
    bool preserves = true, swapped = true;
    for (int v = 0; v < group.degree; ++v) {
      bool v0 = two_colouring[v] == c0;
      bool p0 = two_colouring[p(v)] == c0;
      if (v0 != p0) preserves = false;
      if (v0 == p0) swapped = false;
    }
    if (!preserves && !swapped)
      throw std::invalid_argument(
          "group element neither preserves nor swaps the bipartition");
    if (swapped && p.is_involution()) swaps.push_back(p);
  }
  return swaps;
}

std::vector<std::vector<Permutation>> conjugacy_classes(
    const PermGroup& group, const std::vector<Permutation>& subset) {
  std::set<Permutation> pool(subset.begin(), subset.end());
  for (const Permutation& s : subset)
    for (const Permutation& g : group.elements)
      if (!pool.count(g.compose(s).compose(g.inverse())))
        throw std::invalid_argument("subset not closed under conjugation");

  std::vector<std::vector<Permutation>> classes;
  std::set<Permutation> seen;
  for (const Permutation& s : pool) {
    if (seen.count(s)) continue;
    std::set<Permutation> orbit;
    for (const Permutation& g : group.elements)
      orbit.insert(g.compose(s).compose(g.inverse()));
    classes.emplace_back(orbit.begin(), orbit.end());
    seen.insert(orbit.begin(), orbit.end());
  }
  std::sort(classes.begin(), classes.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return classes;
}

std::vector<Permutation> generating_set(const PermGroup& group) {
  std::vector<Permutation> gens;
  std::set<Permutation> closure;
  if (group.elements.empty()) return gens;
  closure.insert(Permutation::identity(group.degree));
  for (const Permutation& p : group.elements) {
    if (closure.count(p)) continue;
    gens.push_back(p);
    // close under products with the new generator
    std::vector<Permutation> frontier(closure.begin(), closure.end());
    frontier.push_back(p);
    closure.insert(p);
    while (!frontier.empty()) {
      Permutation q = frontier.back();
      frontier.pop_back();
      for (const Permutation& r : gens) {
        for (const Permutation& s : {q.compose(r), r.compose(q)}) {
          if (closure.insert(s).second) frontier.push_back(s);
        }
      }
    }
    if (closure.size() == group.elements.size()) break;
  }
  return gens;
}

}  // namespace tfgraph
