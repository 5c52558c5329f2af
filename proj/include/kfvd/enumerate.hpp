/*
 * Copyright 2026 The kfvd Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef KFVD_ENUMERATE_HPP
#define KFVD_ENUMERATE_HPP

#include "kfvd/digraph.hpp"
#include "kfvd/knots.hpp"
#include "kfvd/solver.hpp"

#include <algorithm>
#include <vector>

namespace kfvd {

struct MinimalFamily {
  /// Sorted by size, then lexicographically.
  std::vector<VertexSet> sets;
  std::size_t leaf_count = 0;
};

namespace detail {

inline bool shorter_then_lex(const VertexSet &a, const VertexSet &b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

/// Canonical order, duplicates dropped, then every set that strictly contains
/// another member removed.
inline std::vector<VertexSet> keep_inclusion_minimal(std::vector<VertexSet> family) {
  std::sort(family.begin(), family.end(), shorter_then_lex);
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::vector<VertexSet> kept;
  for (auto &s : family) {
    bool has_subset = false;
    for (const auto &t : kept) {
      if (t.size() >= s.size())
        break;
      if (is_subset(t, s)) {
        has_subset = true;
        break;
      }
    }
    if (!has_subset)
      kept.push_back(std::move(s));
  }
  return kept;
}

} // namespace detail

/// Every inclusion-minimal knot-free deletion set, read off the leaves of the
/// solver's complete decision tree.
inline MinimalFamily enumerate_minimal(const Digraph &d, SearchStats *stats_out = nullptr,
                                       SearchOptions options = {}) {
  std::vector<VertexSet> leaves;
  auto collect = [&](const Leaf &leaf) {
    if (!is_knot_free(remove_vertices(d, leaf.deletion_set)))
      throw InvariantError("decision-tree leaf {" + format_set(leaf.deletion_set) + "} leaves a knot");
    leaves.push_back(leaf.deletion_set);
  };
  SearchStats stats;
  BranchSearch<decltype(collect)> search(collect, stats, std::move(options));
  search.run(Instance(d));

  MinimalFamily family;
  family.leaf_count = stats.leaves;
  family.sets = detail::keep_inclusion_minimal(std::move(leaves));
  if (stats_out)
    *stats_out = std::move(stats);
  return family;
}

} // namespace kfvd

#endif // KFVD_ENUMERATE_HPP
