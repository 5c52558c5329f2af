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

// Potential bookkeeping for the branching search.
//
// Every live vertex is either undecided (potential 1, may still become a sink)
// or semi-decided (potential 1/4, known not to be a sink). All potentials are
// kept in integer quarter-units so threshold tests are exact.
//
// Reachability sets used throughout:
//   in_reach(v)     R-(v): vertices reaching v in D - N+(v); contains v.
//   out_reach(v)    R+(v): undecided u with v in R-(u).
//   closed_reach(v) R(v) = N+(v) ∪ R-(v); what disappears when v is a sink.

#ifndef KFVD_POTENTIAL_HPP
#define KFVD_POTENTIAL_HPP

#include "kfvd/digraph.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kfvd {

/// Measure in quarter-units: Quarters{15} is 3.75.
struct Quarters {
  std::int64_t value = 0;

  constexpr Quarters() = default;
  constexpr explicit Quarters(std::int64_t v) : value(v) {}

  constexpr double as_units() const { return static_cast<double>(value) / 4.0; }

  friend constexpr Quarters operator+(Quarters a, Quarters b) { return Quarters{a.value + b.value}; }
  friend constexpr Quarters operator-(Quarters a, Quarters b) { return Quarters{a.value - b.value}; }
  friend constexpr Quarters operator*(std::int64_t k, Quarters a) { return Quarters{k * a.value}; }
  constexpr Quarters &operator+=(Quarters o) {
    value += o.value;
    return *this;
  }
  friend constexpr auto operator<=>(Quarters, Quarters) = default;
};

inline constexpr Quarters undecided_potential{4};
inline constexpr Quarters semi_decided_potential{1};
inline constexpr Quarters demotion_drop = undecided_potential - semi_decided_potential;

class Instance {
public:
  Instance() = default;

  /// Top-level instance: every vertex undecided.
  explicit Instance(Digraph graph) : graph_(std::move(graph)), undecided_(graph_.id_bound() + 1, 0) {
    for (Vertex v : graph_.vertices())
      undecided_[v] = 1;
  }

  const Digraph &graph() const { return graph_; }

  bool is_undecided(Vertex v) const { return graph_.has_vertex(v) && undecided_[v]; }

  Quarters potential(Vertex v) const {
    if (!graph_.has_vertex(v))
      throw InputError("no potential for vertex " + std::to_string(v));
    return undecided_[v] ? undecided_potential : semi_decided_potential;
  }

  Quarters potential(const VertexSet &vs) const {
    Quarters sum;
    for (Vertex v : vs)
      sum += potential(v);
    return sum;
  }

  Quarters measure() const {
    std::int64_t und = 0;
    for (Vertex v : graph_.vertices())
      und += undecided_[v];
    const auto live = static_cast<std::int64_t>(graph_.order());
    return und * undecided_potential + (live - und) * semi_decided_potential;
  }

  VertexSet undecided() const {
    VertexSet out;
    for (Vertex v : graph_.vertices())
      if (undecided_[v])
        out.push_back(v);
    return out;
  }

  bool all_semi_decided() const {
    for (Vertex v : graph_.vertices())
      if (undecided_[v])
        return false;
    return true;
  }

  /// Returns true if the potential actually changed.
  bool demote(Vertex v) {
    if (!graph_.has_vertex(v))
      throw InputError("cannot demote unknown vertex " + std::to_string(v));
    const bool changed = undecided_[v] != 0;
    undecided_[v] = 0;
    return changed;
  }

  void remove_vertex(Vertex v) {
    graph_.remove_vertex(v);
    undecided_[v] = 0;
  }

  void remove_vertices(const VertexSet &vs) {
    graph_.remove_vertices(vs);
    for (Vertex v : vs)
      undecided_[v] = 0;
  }

  friend bool operator==(const Instance &, const Instance &) = default;

private:
  Digraph graph_;
  std::vector<std::uint8_t> undecided_;
};

inline Quarters measure(const Instance &inst) { return inst.measure(); }

namespace detail {

inline void require_live(const Digraph &d, Vertex v) {
  if (!d.has_vertex(v))
    throw InputError("unknown vertex " + std::to_string(v));
}

inline void require_undecided(const Instance &inst, Vertex v) {
  require_live(inst.graph(), v);
  if (!inst.is_undecided(v))
    throw InputError("vertex " + std::to_string(v) + " is semi-decided");
}

/// Reverse search from v that never enters N+(v). Result as a membership mask.
inline void mark_in_reach(const Digraph &d, Vertex v, std::vector<std::uint8_t> &mark,
                          std::vector<Vertex> &todo) {
  std::fill(mark.begin(), mark.end(), 0);
  for (Vertex w : d.out(v))
    mark[w] = 2; // blocked
  mark[v] = 1;
  todo.assign(1, v);
  while (!todo.empty()) {
    Vertex u = todo.back();
    todo.pop_back();
    for (Vertex w : d.in(u))
      if (mark[w] == 0) {
        mark[w] = 1;
        todo.push_back(w);
      }
  }
}

inline VertexSet collect(const std::vector<std::uint8_t> &mark, std::uint8_t value) {
  VertexSet out;
  for (Vertex v = 1; v < mark.size(); ++v)
    if (mark[v] == value)
      out.push_back(v);
  return out;
}

} // namespace detail

/// R-(v).
inline VertexSet in_reach(const Digraph &d, Vertex v) {
  detail::require_live(d, v);
  std::vector<std::uint8_t> mark(d.id_bound() + 1);
  std::vector<Vertex> todo;
  detail::mark_in_reach(d, v, mark, todo);
  return detail::collect(mark, 1);
}

/// R+(v), straight from the membership law: u in R+(v) iff v in R-(u).
inline VertexSet out_reach(const Instance &inst, Vertex v) {
  const Digraph &d = inst.graph();
  detail::require_live(d, v);
  std::vector<std::uint8_t> mark(d.id_bound() + 1);
  std::vector<Vertex> todo;
  VertexSet out;
  for (Vertex u : d.vertices()) {
    if (!inst.is_undecided(u))
      continue;
    detail::mark_in_reach(d, u, mark, todo);
    if (mark[v] == 1)
      out.push_back(u);
  }
  return out;
}

/// R(v) = N+(v) ∪ R-(v).
inline VertexSet closed_reach(const Digraph &d, Vertex v) { return set_union(d.out(v), in_reach(d, v)); }

/// psi(x) = phi(R(x)) + 3/4 |R+(x) \ R(x)|: the measure lost if x becomes a sink.
inline Quarters drop_value(const Instance &inst, Vertex x) {
  detail::require_undecided(inst, x);
  const VertexSet r = closed_reach(inst.graph(), x);
  const auto extra = static_cast<std::int64_t>(set_difference(out_reach(inst, x), r).size());
  return inst.potential(r) + extra * demotion_drop;
}

/// Out-neighbours of x whose only undecided in-neighbour is x.
inline VertexSet surviving_set(const Instance &inst, Vertex x) {
  detail::require_undecided(inst, x);
  const Digraph &d = inst.graph();
  VertexSet out;
  for (Vertex u : d.out(x)) {
    bool only_x = true;
    for (Vertex w : d.in(u))
      if (w != x && inst.is_undecided(w)) {
        only_x = false;
        break;
      }
    if (only_x)
      out.push_back(u);
  }
  return out;
}

/// Union of R+(y) over the out-neighbours y of x: one of these must be a sink
/// whenever x is not.
inline VertexSet candidate_sinks(const Instance &inst, Vertex x) {
  detail::require_undecided(inst, x);
  VertexSet out;
  for (Vertex y : inst.graph().out(x))
    out = set_union(out, out_reach(inst, y));
  return out;
}

/// Cached R- for every live vertex of one instance. The search evaluates psi
/// and friends for many vertices per node; this avoids a fresh search per
/// membership query. Must agree with the free functions above.
class ReachTable {
public:
  explicit ReachTable(const Instance &inst) : inst_(&inst), bound_(inst.graph().id_bound()) {
    const Digraph &d = inst.graph();
    in_.assign((bound_ + 1) * (bound_ + 1), 0);
    std::vector<std::uint8_t> mark(bound_ + 1);
    std::vector<Vertex> todo;
    for (Vertex v : d.vertices()) {
      detail::mark_in_reach(d, v, mark, todo);
      for (Vertex u = 1; u <= bound_; ++u)
        in_[v * (bound_ + 1) + u] = mark[u] == 1;
    }
  }

  /// u in R-(v)
  bool reaches(Vertex u, Vertex v) const { return in_[v * (bound_ + 1) + u] != 0; }

  VertexSet in_reach(Vertex v) const {
    detail::require_live(inst_->graph(), v);
    VertexSet out;
    for (Vertex u = 1; u <= bound_; ++u)
      if (reaches(u, v))
        out.push_back(u);
    return out;
  }

  VertexSet out_reach(Vertex v) const {
    detail::require_live(inst_->graph(), v);
    VertexSet out;
    for (Vertex u = 1; u <= bound_; ++u)
      if (inst_->is_undecided(u) && reaches(v, u))
        out.push_back(u);
    return out;
  }

  VertexSet closed_reach(Vertex v) const { return set_union(inst_->graph().out(v), in_reach(v)); }

  Quarters drop_value(Vertex x) const {
    detail::require_undecided(*inst_, x);
    const VertexSet r = closed_reach(x);
    const auto extra = static_cast<std::int64_t>(set_difference(out_reach(x), r).size());
    return inst_->potential(r) + extra * demotion_drop;
  }

  VertexSet candidate_sinks(Vertex x) const {
    detail::require_undecided(*inst_, x);
    VertexSet out;
    for (Vertex y : inst_->graph().out(x))
      out = set_union(out, out_reach(y));
    return out;
  }

private:
  const Instance *inst_;
  std::size_t bound_;
  std::vector<std::uint8_t> in_;
};

struct UpdateResult {
  Instance instance;
  VertexSet deleted;
  VertexSet demoted;
  Quarters measure_drop;
};

/// Makes `sink` a sink (drop R(sink), demote the survivors of R+(sink)) and
/// then demotes the survivors of `non_sinks`.
inline UpdateResult apply_update(const Instance &inst, std::optional<Vertex> sink, const VertexSet &non_sinks = {}) {
  for (Vertex v : non_sinks)
    detail::require_live(inst.graph(), v);

  UpdateResult result;
  result.instance = inst;
  VertexSet to_demote = make_set(non_sinks);
  if (sink) {
    detail::require_live(inst.graph(), *sink);
    if (!inst.is_undecided(*sink))
      throw InputError("sink " + std::to_string(*sink) + " is semi-decided");
    result.deleted = closed_reach(inst.graph(), *sink);
    to_demote = set_union(to_demote, out_reach(inst, *sink));
    result.instance.remove_vertices(result.deleted);
  }
  for (Vertex v : to_demote)
    if (result.instance.graph().has_vertex(v) && result.instance.demote(v))
      result.demoted.push_back(v);
  result.measure_drop = inst.measure() - result.instance.measure();
  return result;
}

} // namespace kfvd

#endif // KFVD_POTENTIAL_HPP
