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

// Branch-and-reduce search for minimum knot-free vertex deletion.
//
// The search looks for the sink set Z of the final graph rather than the
// deletion set: once Z is fixed the deletion set is N+(Z). Each node
//
//   0. removes sources, then sinks together with R(sink), to a fixpoint;
//      stops when the graph is empty or every vertex is semi-decided (then
//      all remaining vertices are deleted);
//   1. branches sink / non-sink on the lowest undecided x with psi(x) >= 3.75;
//   2. otherwise picks the undecided x with most undecided neighbours and
//      branches on "x is a sink" against the candidates that must contain a
//      sink when x is not one (subroutines 2-4 below).
//
// Every branch taken is audited against the minimum measure drop it is
// supposed to guarantee. The full tree is always traversed (no bounding), so
// the solver and the enumerator see identical decision trees.

#ifndef KFVD_SOLVER_HPP
#define KFVD_SOLVER_HPP

#include "kfvd/digraph.hpp"
#include "kfvd/knots.hpp"
#include "kfvd/potential.hpp"

#include <cstdio>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kfvd {

enum class Provenance { solver, oracle, enumerator };

inline std::string_view to_string(Provenance p) {
  switch (p) {
  case Provenance::solver:
    return "solver";
  case Provenance::oracle:
    return "oracle";
  case Provenance::enumerator:
    return "enumerator";
  }
  return "?";
}

struct Solution {
  std::size_t size = 0;
  VertexSet deletion_set;
  /// Sinks chosen by the search (branches and forced steps).
  VertexSet sink_set;
  Provenance provenance = Provenance::solver;
  /// Part of deletion_set removed wholesale once every vertex was semi-decided.
  VertexSet residue;
};

/// A decision-tree leaf: everything the path to it committed to.
struct Leaf {
  VertexSet deletion_set;
  VertexSet sink_set;
  VertexSet residue;
};

struct DropViolation {
  std::string subroutine;
  std::string branch;
  Quarters expected_min;
  Quarters observed;
  std::string fingerprint;
  /// |N(v)| of the vertex made a sink on this branch, 0 for non-sink branches.
  std::size_t sink_degree = 0;
};

struct SearchStats {
  std::size_t nodes = 0;
  std::size_t leaves = 0;
  std::size_t sub1_sink = 0;
  std::size_t sub1_nonsink = 0;
  std::size_t sub2 = 0;
  std::size_t sub3 = 0;
  std::size_t sub4 = 0;
  std::size_t rr1 = 0;
  std::size_t rr2 = 0;
  std::size_t rr3 = 0;
  std::size_t forced_sink = 0;
  std::size_t max_depth = 0;
  std::vector<DropViolation> drop_violations;
  /// Branch nodes reached after subroutine 1 where some undecided x broke
  /// |C_x| <= 2, |N(x) ∩ U| <= 2 or |R+(x) \ R(x)| <= 2.
  std::vector<std::string> neighbourhood_violations;
  /// Smallest measure drop seen across any parent/child call pair.
  std::optional<Quarters> min_call_drop;
};

/// Order-sensitive FNV-1a hash of the live vertices, potentials and arcs.
inline std::string fingerprint(const Instance &inst) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xFF;
      h *= 1099511628211ull;
    }
  };
  const Digraph &d = inst.graph();
  mix(d.id_bound());
  for (Vertex v : d.vertices())
    mix((std::uint64_t{v} << 8) | static_cast<std::uint64_t>(inst.potential(v).value));
  for (auto [u, v] : d.arcs())
    mix((std::uint64_t{u} << 32) | v);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return "n=" + std::to_string(d.order()) + ",m=" + std::to_string(d.arc_count()) + ",h=" + buf;
}

/// Records a violation when `observed` falls short of `expected_min` (or, for
/// exact-drop branches, differs from it). Never throws.
inline bool audit_drop(SearchStats &stats, std::string_view subroutine, std::string_view branch,
                       Quarters expected_min, Quarters observed, std::string_view instance_fingerprint = {},
                       bool exact = false, std::size_t sink_degree = 0) {
  const bool bad = exact ? observed != expected_min : observed < expected_min;
  if (bad)
    stats.drop_violations.push_back(DropViolation{std::string(subroutine), std::string(branch), expected_min,
                                                  observed, std::string(instance_fingerprint), sink_degree});
  return !bad;
}

/// Per-branch minimum drops, in quarter-units.
namespace drop_table {
inline constexpr Quarters sub1_sink{15};
inline constexpr Quarters sub1_nonsink{3}; // exact
inline constexpr Quarters sub2_x{9};
inline constexpr Quarters sub2_candidate{12};
inline constexpr Quarters sub3_single{9};
inline constexpr Quarters sub3_double{10};
inline constexpr Quarters sub4_x{9};
inline constexpr Quarters sub4_s{10};
} // namespace drop_table

/// Sources (lowest id first), then sinks with their R(sink), until neither
/// exists. Removed vertices never join the deletion set.
inline void reduce(Instance &inst, SearchStats *stats = nullptr) {
  for (;;) {
    const Digraph &d = inst.graph();
    std::optional<Vertex> source, sink;
    for (Vertex v : d.vertices()) {
      if (!source && d.in(v).empty())
        source = v;
      if (!sink && d.out(v).empty())
        sink = v;
      if (source)
        break;
    }
    if (source) {
      inst.remove_vertex(*source);
      if (stats)
        ++stats->rr2;
    } else if (sink) {
      inst.remove_vertices(in_reach(d, *sink));
      if (stats)
        ++stats->rr3;
    } else {
      return;
    }
  }
}

/// One line per branch: depth, subroutine, vertex, branch kind, measure before
/// and after the update, cost added.
struct TraceEvent {
  std::size_t depth;
  std::string_view subroutine;
  Vertex vertex;
  std::string branch;
  Quarters measure_before;
  Quarters measure_after;
  std::size_t cost_added;
};

struct SearchOptions {
  /// Evaluate the post-subroutine-1 neighbourhood bounds at every branch node.
  bool check_neighbourhood_bounds = true;
  std::function<void(const TraceEvent &)> trace;
};

/// Walks the complete decision tree and hands every leaf to `on_leaf`. The
/// deletion set is the union of N+(chosen sink) at each sink step plus
/// whatever the all-semi-decided rule deleted.
template <class LeafVisitor> class BranchSearch {
public:
  BranchSearch(LeafVisitor &on_leaf, SearchStats &stats, SearchOptions options = {})
      : on_leaf_(on_leaf), stats_(stats), options_(std::move(options)) {}

  void run(Instance inst) { node(std::move(inst), 0); }

private:
  struct Step {
    std::optional<Vertex> sink;
    VertexSet non_sinks;
    std::string branch;
    Quarters expected_min;
    bool exact = false;
  };

  void node(Instance inst, std::size_t depth) {
    ++stats_.nodes;
    stats_.max_depth = std::max(stats_.max_depth, depth);

    reduce(inst, &stats_);
    const Digraph &d = inst.graph();
    if (d.empty()) {
      leaf({});
      return;
    }
    if (inst.all_semi_decided()) {
      ++stats_.rr1;
      leaf(d.vertices());
      return;
    }

    const ReachTable reach(inst);
    const VertexSet undecided = inst.undecided();

    for (Vertex x : undecided) {
      if (reach.drop_value(x) >= drop_table::sub1_sink) {
        stats_.sub1_sink++;
        stats_.sub1_nonsink++;
        branch(inst, depth, "sub1", x,
               {Step{x, {}, "sink", drop_table::sub1_sink},
                Step{std::nullopt, {x}, "nonsink", drop_table::sub1_nonsink, true}});
        return;
      }
    }

    auto undecided_neighbours = [&](Vertex v) {
      return set_intersection(d.neighbours(v), undecided).size();
    };
    if (options_.check_neighbourhood_bounds)
      check_bounds(inst, reach, undecided, undecided_neighbours);

    Vertex x = undecided.front();
    std::size_t best = undecided_neighbours(x);
    for (Vertex v : undecided) {
      const std::size_t k = undecided_neighbours(v);
      if (k > best) {
        best = k;
        x = v;
      }
    }

    const VertexSet survivors = surviving_set(inst, x);
    if (survivors.empty()) {
      const VertexSet candidates = reach.candidate_sinks(x);
      if (candidates.empty()) {
        forced(inst, depth, "sub2", x);
        return;
      }
      std::vector<Step> steps{Step{x, {}, "sink", drop_table::sub2_x}};
      for (Vertex s : candidates)
        steps.push_back(Step{s, {}, "candidate-" + std::to_string(s), drop_table::sub2_candidate});
      stats_.sub2 += steps.size();
      branch(inst, depth, "sub2", x, steps);
      return;
    }

    const Vertex y = survivors.front();
    const VertexSet targets = reach.out_reach(y);
    if (best >= 1) {
      if (targets.empty()) {
        forced(inst, depth, "sub3", x);
        return;
      }
      const VertexSet kept = prune_dominated(d, targets);
      const Quarters expected = kept.size() == 1 ? drop_table::sub3_single : drop_table::sub3_double;
      const std::string_view name = kept.size() == 1 ? "sub3-single" : "sub3-double";
      std::vector<Step> steps{Step{x, {}, "sink", expected}};
      for (std::size_t i = 0; i < kept.size(); ++i)
        steps.push_back(Step{kept[i], VertexSet(kept.begin(), kept.begin() + static_cast<std::ptrdiff_t>(i)),
                             "candidate-" + std::to_string(kept[i]), expected});
      stats_.sub3 += steps.size();
      branch(inst, depth, name, x, steps);
      return;
    }

    if (targets.empty()) {
      forced(inst, depth, "sub4", x);
      return;
    }
    const Vertex s = targets.front();
    stats_.sub4 += 2;
    branch(inst, depth, "sub4", x,
           {Step{x, {}, "sink", drop_table::sub4_x},
            Step{s, {}, "candidate-" + std::to_string(s), drop_table::sub4_s}});
  }

  void leaf(VertexSet residue) {
    ++stats_.leaves;
    Leaf l{make_set(deleted_), make_set(sinks_), std::move(residue)};
    l.deletion_set = set_union(l.deletion_set, l.residue);
    on_leaf_(static_cast<const Leaf &>(l));
  }

  void forced(const Instance &inst, std::size_t depth, std::string_view subroutine, Vertex x) {
    ++stats_.forced_sink;
    descend(inst, depth, subroutine, x, Step{x, {}, "forced-sink", Quarters{}}, /*audit=*/false);
  }

  void branch(const Instance &inst, std::size_t depth, std::string_view subroutine, Vertex x,
              const std::vector<Step> &steps) {
    for (const Step &step : steps)
      descend(inst, depth, subroutine, x, step, /*audit=*/true);
  }

  void descend(const Instance &inst, std::size_t depth, std::string_view subroutine, Vertex x, const Step &step,
               bool audit) {
    const Quarters before = inst.measure();
    VertexSet cost;
    if (step.sink)
      cost = inst.graph().out(*step.sink);
    UpdateResult next = apply_update(inst, step.sink, step.non_sinks);
    const Quarters drop = next.measure_drop;

    if (drop <= Quarters{0})
      throw InvariantError("measure did not decrease at " + std::string(subroutine) + " branch " + step.branch +
                           " on " + fingerprint(inst));
    if (!stats_.min_call_drop || drop < *stats_.min_call_drop)
      stats_.min_call_drop = drop;
    if (audit)
      audit_drop(stats_, subroutine, step.branch, step.expected_min, drop, fingerprint(inst), step.exact,
                 step.sink ? inst.graph().neighbours(*step.sink).size() : 0);
    if (options_.trace)
      options_.trace(TraceEvent{depth, subroutine, step.sink.value_or(x), step.branch, before, before - drop,
                                cost.size()});

    deleted_.insert(deleted_.end(), cost.begin(), cost.end());
    if (step.sink)
      sinks_.push_back(*step.sink);
    node(std::move(next.instance), depth + 1);
    if (step.sink)
      sinks_.pop_back();
    deleted_.resize(deleted_.size() - cost.size());
  }

  template <class Count>
  void check_bounds(const Instance &inst, const ReachTable &reach, const VertexSet &undecided, Count &&count) {
    for (Vertex v : undecided) {
      const std::size_t candidates = reach.candidate_sinks(v).size();
      const std::size_t nbrs = count(v);
      const std::size_t beyond = set_difference(reach.out_reach(v), reach.closed_reach(v)).size();
      if (candidates > 2 || nbrs > 2 || beyond > 2)
        stats_.neighbourhood_violations.push_back(fingerprint(inst) + " x=" + std::to_string(v) +
                                                  " |C|=" + std::to_string(candidates) +
                                                  " |N∩U|=" + std::to_string(nbrs) +
                                                  " |R+\\R|=" + std::to_string(beyond));
    }
  }

  LeafVisitor &on_leaf_;
  SearchStats &stats_;
  SearchOptions options_;
  std::vector<Vertex> deleted_;
  std::vector<Vertex> sinks_;

public:
  /// Drops every candidate whose out-neighbourhood contains another
  /// candidate's; of two candidates with equal out-neighbourhoods the lower id
  /// survives.
  static VertexSet prune_dominated(const Digraph &d, const VertexSet &candidates) {
    VertexSet kept;
    for (Vertex v : candidates) {
      bool dominated = false;
      for (Vertex u : candidates) {
        if (u == v || !is_subset(d.out(u), d.out(v)))
          continue;
        if (d.out(u) != d.out(v) || u < v) {
          dominated = true;
          break;
        }
      }
      if (!dominated)
        kept.push_back(v);
    }
    return kept;
  }
};

/// Minimum-size deletion set with its witness, plus search statistics.
struct SolveResult {
  Solution solution;
  SearchStats stats;
};

inline SolveResult solve(const Instance &inst, SearchOptions options = {}) {
  SolveResult result;
  std::optional<Solution> best;
  auto keep_best = [&best](const Leaf &leaf) {
    if (!best || leaf.deletion_set.size() < best->size)
      best = Solution{leaf.deletion_set.size(), leaf.deletion_set, leaf.sink_set, Provenance::solver, leaf.residue};
  };
  BranchSearch<decltype(keep_best)> search(keep_best, result.stats, std::move(options));
  search.run(inst);
  if (!best)
    throw InvariantError("search finished without reaching a leaf");
  result.solution = std::move(*best);
  return result;
}

inline SolveResult solve(const Digraph &d, SearchOptions options = {}) { return solve(Instance(d), std::move(options)); }

/// Sink-set consistency of a witness against the original graph: every chosen
/// sink survives as a sink of D - S, and S = N+(Z) ∪ residue exactly.
inline bool sink_set_consistent(const Digraph &d, const Solution &sol) {
  VertexSet covered;
  for (Vertex z : sol.sink_set) {
    if (!d.has_vertex(z) || contains(sol.deletion_set, z))
      return false;
    covered = set_union(covered, d.out(z));
  }
  return set_union(covered, sol.residue) == sol.deletion_set;
}

} // namespace kfvd

#endif // KFVD_SOLVER_HPP
