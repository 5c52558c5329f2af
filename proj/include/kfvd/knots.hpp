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

#ifndef KFVD_KNOTS_HPP
#define KFVD_KNOTS_HPP

#include "kfvd/digraph.hpp"

#include <optional>
#include <vector>

namespace kfvd {

/// Strongly connected components of the live vertices. Each class is sorted;
/// classes are ordered by their smallest member.
inline std::vector<VertexSet> scc_partition(const Digraph &d) {
  const std::size_t bound = d.id_bound();
  constexpr std::uint32_t unvisited = 0;
  std::vector<std::uint32_t> index(bound + 1, unvisited), low(bound + 1, 0);
  std::vector<std::uint8_t> on_stack(bound + 1, 0);
  std::vector<Vertex> stack;
  std::vector<VertexSet> classes;
  std::uint32_t next = 1;

  // Iterative Tarjan; frame = (vertex, position in its out-list).
  std::vector<std::pair<Vertex, std::size_t>> frames;
  for (Vertex root : d.vertices()) {
    if (index[root] != unvisited)
      continue;
    frames.emplace_back(root, 0);
    index[root] = low[root] = next++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      auto &[v, pos] = frames.back();
      const auto &succ = d.out(v);
      if (pos < succ.size()) {
        Vertex w = succ[pos++];
        if (index[w] == unvisited) {
          index[w] = low[w] = next++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const Vertex done = v;
      frames.pop_back();
      if (!frames.empty())
        low[frames.back().first] = std::min(low[frames.back().first], low[done]);
      if (low[done] == index[done]) {
        VertexSet cls;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          cls.push_back(w);
        } while (w != done);
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
      }
    }
  }
  std::sort(classes.begin(), classes.end(),
            [](const VertexSet &a, const VertexSet &b) { return a.front() < b.front(); });
  return classes;
}

struct KnotReport {
  std::vector<VertexSet> knots;

  bool empty() const { return knots.empty(); }
};

/// Knots: SCCs with at least two vertices and no arc leaving them.
inline KnotReport find_knots(const Digraph &d) {
  KnotReport report;
  for (auto &cls : scc_partition(d)) {
    if (cls.size() < 2)
      continue;
    bool closed = true;
    for (Vertex u : cls) {
      for (Vertex w : d.out(u))
        if (!contains(cls, w)) {
          closed = false;
          break;
        }
      if (!closed)
        break;
    }
    if (closed)
      report.knots.push_back(std::move(cls));
  }
  return report;
}

/// True iff every live vertex has a directed path to a sink. Reverse search
/// from all sinks at once.
inline bool every_vertex_reaches_sink(const Digraph &d) {
  std::vector<std::uint8_t> seen(d.id_bound() + 1, 0);
  std::vector<Vertex> todo;
  for (Vertex v : d.vertices())
    if (d.out(v).empty()) {
      seen[v] = 1;
      todo.push_back(v);
    }
  std::size_t reached = todo.size();
  while (!todo.empty()) {
    Vertex v = todo.back();
    todo.pop_back();
    for (Vertex u : d.in(v))
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        todo.push_back(u);
      }
  }
  return reached == d.order();
}

/// Knot-freeness by two independent criteria; they must agree.
inline bool is_knot_free(const Digraph &d) {
  const bool by_scc = find_knots(d).empty();
  const bool by_sinks = every_vertex_reaches_sink(d);
  if (by_scc != by_sinks)
    throw InvariantError("knot detection disagrees with the path-to-sink criterion");
  return by_scc;
}

struct VerificationReport {
  bool knot_free = false;
  std::optional<bool> minimal;
  std::optional<VertexSet> witness_knot;
  std::optional<Vertex> redundant_vertex;
};

/// Checks that `solution` leaves `d` knot-free. With `check_minimal`, also
/// tries putting each vertex back: the set is reported minimal when every
/// such restoration re-creates a knot; otherwise the lowest restorable vertex
/// is reported.
inline VerificationReport verify_solution(const Digraph &d, const VertexSet &solution, bool check_minimal) {
  for (Vertex v : solution)
    if (!d.has_vertex(v))
      throw InputError("solution contains unknown vertex " + std::to_string(v));
  const VertexSet s = make_set(solution);

  VerificationReport report;
  const Digraph rest = remove_vertices(d, s);
  auto knots = find_knots(rest);
  report.knot_free = knots.empty();
  if (report.knot_free != every_vertex_reaches_sink(rest))
    throw InvariantError("knot detection disagrees with the path-to-sink criterion");
  if (!report.knot_free)
    report.witness_knot = knots.knots.front();

  if (check_minimal) {
    report.minimal = true;
    for (Vertex v : s) {
      VertexSet smaller = s;
      smaller.erase(std::lower_bound(smaller.begin(), smaller.end(), v));
      if (is_knot_free(remove_vertices(d, smaller))) {
        report.minimal = false;
        report.redundant_vertex = v;
        break;
      }
    }
  }
  return report;
}

} // namespace kfvd

#endif // KFVD_KNOTS_HPP
