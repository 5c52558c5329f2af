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

#ifndef KFVD_DIGRAPH_HPP
#define KFVD_DIGRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kfvd {

using Vertex = std::uint32_t;

/// Sorted, duplicate-free list of vertex ids. All set helpers below rely on
/// the ordering; use make_set() to normalize arbitrary input.
using VertexSet = std::vector<Vertex>;

using Arc = std::pair<Vertex, Vertex>;

/// Caller supplied something invalid: malformed file, unknown vertex id, bad
/// parameter. Maps to exit code 1 in the command line tool.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Maps to exit code 2.
class InvariantError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

inline VertexSet make_set(std::vector<Vertex> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

inline bool contains(const VertexSet &s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

inline VertexSet set_union(const VertexSet &a, const VertexSet &b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_difference(const VertexSet &a, const VertexSet &b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_intersection(const VertexSet &a, const VertexSet &b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool is_subset(const VertexSet &a, const VertexSet &b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline std::string format_set(const VertexSet &s, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i != 0)
      out += sep;
    out += std::to_string(s[i]);
  }
  return out;
}

/// Directed graph over the stable id range [1, id_bound()].
///
/// Deleting a vertex drops it and its incident arcs but never renumbers the
/// survivors, so sets computed deep inside a search map straight back to the
/// input file. Self-loops and parallel arcs are rejected.
class Digraph {
public:
  Digraph() = default;

  explicit Digraph(std::size_t n)
      : live_(n + 1, 1), out_(n + 1), in_(n + 1), live_count_(n) {
    live_[0] = 0;
  }

  std::size_t id_bound() const { return live_.empty() ? 0 : live_.size() - 1; }
  std::size_t order() const { return live_count_; }
  std::size_t arc_count() const { return arc_count_; }
  bool empty() const { return live_count_ == 0; }

  bool has_vertex(Vertex v) const { return v >= 1 && v < live_.size() && live_[v]; }

  bool has_arc(Vertex u, Vertex v) const {
    return has_vertex(u) && has_vertex(v) && contains(out_[u], v);
  }

  const VertexSet &out(Vertex v) const {
    require(v);
    return out_[v];
  }

  const VertexSet &in(Vertex v) const {
    require(v);
    return in_[v];
  }

  /// N(v) = N+(v) ∪ N-(v).
  VertexSet neighbours(Vertex v) const { return set_union(out(v), in(v)); }

  VertexSet vertices() const {
    VertexSet vs;
    vs.reserve(live_count_);
    for (Vertex v = 1; v < live_.size(); ++v)
      if (live_[v])
        vs.push_back(v);
    return vs;
  }

  /// Arcs in (u, v) lexicographic order.
  std::vector<Arc> arcs() const {
    std::vector<Arc> as;
    as.reserve(arc_count_);
    for (Vertex u = 1; u < live_.size(); ++u)
      if (live_[u])
        for (Vertex v : out_[u])
          as.emplace_back(u, v);
    return as;
  }

  void add_arc(Vertex u, Vertex v) {
    require(u);
    require(v);
    if (u == v)
      throw InputError("self-loop at vertex " + std::to_string(u));
    auto &os = out_[u];
    auto it = std::lower_bound(os.begin(), os.end(), v);
    if (it != os.end() && *it == v)
      throw InputError("duplicate arc " + std::to_string(u) + " -> " + std::to_string(v));
    os.insert(it, v);
    auto &is = in_[v];
    is.insert(std::lower_bound(is.begin(), is.end(), u), u);
    ++arc_count_;
  }

  void remove_vertex(Vertex v) {
    require(v);
    for (Vertex w : out_[v])
      erase_from(in_[w], v);
    for (Vertex w : in_[v])
      erase_from(out_[w], v);
    arc_count_ -= out_[v].size() + in_[v].size();
    out_[v].clear();
    in_[v].clear();
    live_[v] = 0;
    --live_count_;
  }

  void remove_vertices(std::span<const Vertex> vs) {
    for (Vertex v : vs)
      require(v);
    for (Vertex v : vs)
      if (live_[v])
        remove_vertex(v);
  }

  friend bool operator==(const Digraph &, const Digraph &) = default;

private:
  void require(Vertex v) const {
    if (!has_vertex(v))
      throw InputError("unknown vertex " + std::to_string(v));
  }

  static void erase_from(VertexSet &s, Vertex v) {
    auto it = std::lower_bound(s.begin(), s.end(), v);
    if (it != s.end() && *it == v)
      s.erase(it);
  }

  std::vector<std::uint8_t> live_;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
  std::size_t live_count_ = 0;
  std::size_t arc_count_ = 0;
};

/// Induced subgraph on V(d) \ removed. `d` is left untouched.
inline Digraph remove_vertices(const Digraph &d, std::span<const Vertex> removed) {
  Digraph out = d;
  out.remove_vertices(removed);
  return out;
}

inline Digraph remove_vertices(const Digraph &d, const VertexSet &removed) {
  return remove_vertices(d, std::span<const Vertex>(removed));
}

inline Digraph make_digraph(std::size_t n, std::span<const Arc> arcs) {
  Digraph d(n);
  for (auto [u, v] : arcs)
    d.add_arc(u, v);
  return d;
}

inline Digraph make_digraph(std::size_t n, std::initializer_list<Arc> arcs) {
  return make_digraph(n, std::span<const Arc>(arcs.begin(), arcs.size()));
}

} // namespace kfvd

#endif // KFVD_DIGRAPH_HPP
