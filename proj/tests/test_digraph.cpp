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

#include "corpus.hpp"
#include "kfvd/digraph.hpp"
#include "kfvd/generate.hpp"
#include "kfvd/io.hpp"
#include "kfvd/knots.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace kfvd;

namespace {

const Digraph two_cycle = make_digraph(2, {{1, 2}, {2, 1}});
const Digraph triangle = make_digraph(3, {{1, 2}, {2, 3}, {3, 1}});
const Digraph path12 = make_digraph(2, {{1, 2}});

std::size_t parse_error_line(std::string_view text) {
  try {
    parse_digraph(text);
  } catch (const ParseError &e) {
    return e.line();
  }
  return 0;
}

} // namespace

TEST_CASE("parse instance files", "[io]") {
  CHECK(parse_digraph("p kfvd 2 2\ne 1 2\ne 2 1\n") == two_cycle);
  CHECK(parse_digraph("c triangle\np kfvd 3 3\ne 1 2\ne 2 3\ne 3 1\n") == triangle);
  CHECK(parse_digraph("p kfvd 0 0\n").empty());

  const Digraph isolated = parse_digraph("p kfvd 3 1\ne 1 2");
  CHECK(isolated.order() == 3);
  CHECK(isolated.out(3).empty());
}

TEST_CASE("parse errors carry line numbers", "[io]") {
  CHECK(parse_error_line("p kfvd 2 1\ne 1 1\n") == 2);
  CHECK(parse_error_line("p kfvd 2 1\ne 1 3\n") == 2);
  CHECK(parse_error_line("p kfvd 2 2\ne 1 2\ne 1 2\n") == 3);
  CHECK(parse_error_line("e 1 2\np kfvd 2 1\n") == 1);
  CHECK(parse_error_line("p kfvd x 1\n") == 1);
  CHECK(parse_error_line("p graph 2 1\ne 1 2\n") == 1);
  CHECK(parse_error_line("c only\np kfvd 2 2\ne 1 2\n") == 3);
  CHECK(parse_error_line("p kfvd 2 0\np kfvd 2 0\n") == 2);
  CHECK(parse_error_line("p kfvd 2 1\nx 1 2\n") == 2);

  CHECK_THROWS_AS(parse_digraph(""), ParseError);
  CHECK_THROWS_WITH(parse_digraph("p kfvd 2 1\ne 1 1\n"), Catch::Matchers::ContainsSubstring("self-loop"));
}

TEST_CASE("serialize sorts arcs and round-trips", "[io]") {
  Digraph d(3);
  d.add_arc(3, 1);
  d.add_arc(1, 3);
  d.add_arc(1, 2);
  CHECK(serialize(d) == "p kfvd 3 3\ne 1 2\ne 1 3\ne 3 1\n");

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Digraph g = gen_random(seed % 12, 0.3, seed);
    CHECK(parse_digraph(serialize(g)) == g);
  }
  for (std::int64_t k = 1; k <= 4; ++k)
    CHECK(parse_digraph(serialize(gen_triangles(k))) == gen_triangles(k));
}

TEST_CASE("adjacency stays consistent under deletion", "[digraph]") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Digraph d = gen_random(9, 0.35, seed);
    d.remove_vertex(static_cast<Vertex>(1 + seed % 9));
    std::size_t arcs = 0;
    for (Vertex u : d.vertices()) {
      for (Vertex v : d.out(u)) {
        CHECK(contains(d.in(v), u));
        CHECK(d.has_vertex(v));
        ++arcs;
      }
      for (Vertex v : d.in(u))
        CHECK(contains(d.out(v), u));
    }
    CHECK(arcs == d.arc_count());
  }
}

TEST_CASE("remove_vertices is a pure induced-subgraph operation", "[digraph]") {
  const Digraph rest = remove_vertices(triangle, VertexSet{2});
  CHECK(rest.vertices() == VertexSet{1, 3});
  CHECK(rest.arcs() == std::vector<Arc>{{3, 1}});
  CHECK(triangle.arc_count() == 3);

  CHECK(remove_vertices(triangle, VertexSet{}) == triangle);
  CHECK(remove_vertices(two_cycle, VertexSet{1, 2}).empty());
  CHECK_THROWS_AS(remove_vertices(triangle, VertexSet{4}), InputError);
}

TEST_CASE("strongly connected components", "[knots]") {
  CHECK(scc_partition(two_cycle) == std::vector<VertexSet>{{1, 2}});
  CHECK(scc_partition(path12) == std::vector<VertexSet>{{1}, {2}});
  CHECK(scc_partition(gen_triangles(2)) == std::vector<VertexSet>{{1, 2, 3}, {4, 5, 6}});
  CHECK(scc_partition(Digraph{}).empty());
}

TEST_CASE("knots", "[knots]") {
  CHECK(find_knots(two_cycle).knots == std::vector<VertexSet>{{1, 2}});
  CHECK(find_knots(path12).empty());
  // The triangle's SCC has an arc out to 4; {4} is too small to be a knot.
  CHECK(find_knots(make_digraph(4, {{1, 2}, {2, 3}, {3, 1}, {3, 4}})).empty());
  CHECK(find_knots(gen_triangles(3)).knots.size() == 3);
}

TEST_CASE("knot-freeness", "[knots]") {
  CHECK(is_knot_free(Digraph{}));
  CHECK(is_knot_free(Digraph(4)));
  CHECK_FALSE(is_knot_free(two_cycle));
  CHECK_FALSE(is_knot_free(remove_vertices(gen_triangles(2), VertexSet{3})));
  CHECK(is_knot_free(remove_vertices(gen_triangles(2), VertexSet{3, 6})));
}

TEST_CASE("knots vanish exactly when every vertex reaches a sink", "[knots][property]") {
  auto corpus = testing::random_corpus(1000, 0, 12, 7000);
  std::size_t with_knots = 0;
  for (const auto &d : corpus) {
    const bool none = find_knots(d).empty();
    REQUIRE(none == every_vertex_reaches_sink(d));
    with_knots += !none;
  }
  // Both outcomes must be exercised for the duality check to mean anything.
  CHECK(with_knots > 100);
  CHECK(with_knots < 900);
}

TEST_CASE("every reported knot is a closed SCC that one deletion destroys", "[knots][property]") {
  for (const auto &d : testing::random_corpus(300, 2, 10, 9100)) {
    auto report = find_knots(d);
    for (std::size_t i = 0; i < report.knots.size(); ++i) {
      const VertexSet &k = report.knots[i];
      for (std::size_t j = i + 1; j < report.knots.size(); ++j)
        CHECK(set_intersection(k, report.knots[j]).empty());
      for (Vertex u : k)
        for (Vertex w : d.out(u))
          CHECK(contains(k, w));
      for (Vertex v : k) {
        const auto after = find_knots(remove_vertices(d, VertexSet{v}));
        CHECK(std::find(after.knots.begin(), after.knots.end(), k) == after.knots.end());
      }
    }
  }
}

TEST_CASE("verify_solution", "[knots]") {
  auto r = verify_solution(two_cycle, {1}, true);
  CHECK(r.knot_free);
  CHECK(r.minimal == true);
  CHECK_FALSE(r.redundant_vertex);

  r = verify_solution(two_cycle, {1, 2}, true);
  CHECK(r.knot_free);
  CHECK(r.minimal == false);
  REQUIRE(r.redundant_vertex);
  CHECK(*r.redundant_vertex == 1);
  CHECK(is_knot_free(remove_vertices(two_cycle, VertexSet{2})));

  r = verify_solution(gen_triangles(2), {3, 6}, true);
  CHECK(r.knot_free);
  CHECK(r.minimal == true);

  r = verify_solution(triangle, {1, 2}, true);
  CHECK(r.knot_free);
  CHECK(r.minimal == false);

  r = verify_solution(two_cycle, {}, false);
  CHECK_FALSE(r.knot_free);
  CHECK(r.witness_knot == VertexSet{1, 2});
  CHECK_FALSE(r.minimal);

  CHECK_THROWS_AS(verify_solution(two_cycle, {3}, false), InputError);
}
