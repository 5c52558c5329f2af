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

#ifndef KFVD_GENERATE_HPP
#define KFVD_GENERATE_HPP

#include "kfvd/digraph.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace kfvd {

/// k disjoint directed triangles: block i is 3i-2 -> 3i-1 -> 3i -> 3i-2.
inline Digraph gen_triangles(std::int64_t k) {
  if (k < 1)
    throw InputError("triangle count must be >= 1, got " + std::to_string(k));
  Digraph d(static_cast<std::size_t>(3 * k));
  for (Vertex i = 1; i <= static_cast<Vertex>(k); ++i) {
    const Vertex a = 3 * i - 2, b = 3 * i - 1, c = 3 * i;
    d.add_arc(a, b);
    d.add_arc(b, c);
    d.add_arc(c, a);
  }
  return d;
}

/// G(n, p) on ordered pairs, reproducible everywhere.
///
/// Pairs (u, v), u != v, are visited row-major (u = 1..n, then v = 1..n).
/// Each pair consumes exactly one 64-bit draw x from std::mt19937_64 seeded
/// with `seed`; the arc is kept iff (x >> 11) * 2^-53 < p. Both the engine
/// output and the conversion are exactly specified, so the arc set depends on
/// (n, p, seed) only.
inline Digraph gen_random(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0))
    throw InputError("arc probability must lie in [0, 1]");
  std::mt19937_64 engine(seed);
  Digraph d(n);
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = 1; v <= n; ++v) {
      if (u == v)
        continue;
      const double r = static_cast<double>(engine() >> 11) * 0x1.0p-53;
      if (r < p)
        d.add_arc(u, v);
    }
  return d;
}

} // namespace kfvd

#endif // KFVD_GENERATE_HPP
