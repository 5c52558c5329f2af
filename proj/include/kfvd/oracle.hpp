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

// Exhaustive ground truth. Deliberately naive: try subsets, check knots.

#ifndef KFVD_ORACLE_HPP
#define KFVD_ORACLE_HPP

#include "kfvd/digraph.hpp"
#include "kfvd/enumerate.hpp"
#include "kfvd/knots.hpp"
#include "kfvd/solver.hpp"

#include <cstdint>
#include <vector>

namespace kfvd {

inline constexpr std::size_t default_min_cap = 20;
inline constexpr std::size_t default_enumerate_cap = 16;

namespace detail {

inline void check_cap(const Digraph &d, std::size_t cap) {
  if (d.order() > cap)
    throw InputError("instance has " + std::to_string(d.order()) + " vertices, oracle cap is " +
                     std::to_string(cap));
}

} // namespace detail

/// Smallest deletion set; among equal sizes the lexicographically smallest
/// sorted id sequence.
inline Solution oracle_min(const Digraph &d, std::size_t cap = default_min_cap) {
  detail::check_cap(d, cap);
  const VertexSet vs = d.vertices();
  const std::size_t n = vs.size();
  std::vector<std::size_t> pick;
  for (std::size_t k = 0; k <= n; ++k) {
    // Index combinations of size k in lexicographic order.
    pick.resize(k);
    for (std::size_t i = 0; i < k; ++i)
      pick[i] = i;
    for (;;) {
      VertexSet s;
      for (std::size_t i : pick)
        s.push_back(vs[i]);
      if (is_knot_free(remove_vertices(d, s)))
        return Solution{k, s, {}, Provenance::oracle, {}};
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1)
        --i;
      if (i == 0)
        break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j)
        pick[j] = pick[j - 1] + 1;
    }
  }
  throw InvariantError("deleting every vertex must leave a knot-free graph");
}

/// All inclusion-minimal deletion sets by checking every subset of V(D).
inline MinimalFamily oracle_enumerate_minimal(const Digraph &d, std::size_t cap = default_enumerate_cap) {
  detail::check_cap(d, cap);
  const VertexSet vs = d.vertices();
  const std::size_t n = vs.size();
  const std::uint64_t full = std::uint64_t{1} << n;

  std::vector<std::uint8_t> good(full, 0);
  for (std::uint64_t mask = 0; mask < full; ++mask) {
    VertexSet s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1)
        s.push_back(vs[i]);
    good[mask] = is_knot_free(remove_vertices(d, s));
  }

  // below[mask]: some subset of mask (mask included) is good.
  std::vector<std::uint8_t> below = good;
  for (std::size_t i = 0; i < n; ++i)
    for (std::uint64_t mask = 0; mask < full; ++mask)
      if (mask >> i & 1)
        below[mask] |= below[mask ^ (std::uint64_t{1} << i)];

  MinimalFamily family;
  for (std::uint64_t mask = 0; mask < full; ++mask) {
    if (!good[mask])
      continue;
    bool proper = false;
    for (std::size_t i = 0; i < n && !proper; ++i)
      if (mask >> i & 1)
        proper = below[mask ^ (std::uint64_t{1} << i)];
    if (proper)
      continue;
    VertexSet s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1)
        s.push_back(vs[i]);
    family.sets.push_back(std::move(s));
  }
  std::sort(family.sets.begin(), family.sets.end(), detail::shorter_then_lex);
  return family;
}

} // namespace kfvd

#endif // KFVD_ORACLE_HPP
