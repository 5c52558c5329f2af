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

// Instance corpora shared by the unit and acceptance suites.

#ifndef KFVD_TESTS_CORPUS_HPP
#define KFVD_TESTS_CORPUS_HPP

#include "kfvd/digraph.hpp"
#include "kfvd/generate.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace kfvd::testing {

/// Every digraph on 0..max_n vertices (all arc subsets; 4096 graphs at n = 4).
inline std::vector<Digraph> all_small_digraphs(std::size_t max_n) {
  std::vector<Digraph> out;
  for (std::size_t n = 0; n <= max_n; ++n) {
    std::vector<Arc> pairs;
    for (Vertex u = 1; u <= n; ++u)
      for (Vertex v = 1; v <= n; ++v)
        if (u != v)
          pairs.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      Digraph d(n);
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1)
          d.add_arc(pairs[i].first, pairs[i].second);
      out.push_back(std::move(d));
    }
  }
  return out;
}

inline constexpr std::array<double, 3> corpus_densities{0.15, 0.3, 0.5};

/// `count` seeded random digraphs cycling through n in [n_lo, n_hi] and the
/// corpus densities. Seeds are offset by `salt` so corpora stay disjoint.
inline std::vector<Digraph> random_corpus(std::size_t count, std::size_t n_lo, std::size_t n_hi,
                                          std::uint64_t salt = 0) {
  std::vector<Digraph> out;
  const std::size_t span = n_hi - n_lo + 1;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = n_lo + i % span;
    const double p = corpus_densities[(i / span) % corpus_densities.size()];
    out.push_back(gen_random(n, p, salt + i));
  }
  return out;
}

} // namespace kfvd::testing

#endif // KFVD_TESTS_CORPUS_HPP
