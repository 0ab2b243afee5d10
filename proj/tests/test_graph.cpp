#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cw/graph.hpp"

using namespace cw;

TEST_CASE("parse K2") {
  Graph g = parse_graph("p edge 2 1\ne 1 2\n");
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.adjacent(0, 1));
}

TEST_CASE("parse C6 with comments") {
  Graph g = parse_graph(
      "c a hexagon\np edge 6 6\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 6 1\n");
  CHECK(g.vertex_count() == 6);
  CHECK(g.edge_count() == 6);
  for (int v = 0; v < 6; ++v) CHECK(g.degree(v) == 2);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_AS(parse_graph("p edge 3 1\ne 1 4\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p edge 3 1\ne 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p foo 3 1\ne 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p edge 3 2\ne 1 2\ne 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("p edge 3 2\ne 1 2\n"), ParseError);
  try {
    parse_graph("p edge 3 1\ne 1 4\n");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("write round trips") {
  Graph g = parse_graph("p edge 4 3\ne 2 1\ne 3 2\ne 4 3\n");
  Graph h = parse_graph(write_graph(g));
  CHECK(g == h);
}

TEST_CASE("induced subgraph") {
  Graph c6 = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  // three consecutive cycle vertices give a path
  Graph p = c6.induced(VertexSet::of(6, {0, 1, 2}));
  CHECK(p.vertex_count() == 3);
  CHECK(p.edge_count() == 2);
  CHECK(p.adjacent(0, 1));
  CHECK(p.adjacent(1, 2));
  CHECK(!p.adjacent(0, 2));

  Graph empty = c6.induced(VertexSet(6));
  CHECK(empty.vertex_count() == 0);

  Graph k4 = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  Graph k2 = k4.induced(VertexSet::of(4, {0, 1}));
  CHECK(k2.vertex_count() == 2);
  CHECK(k2.adjacent(0, 1));

  CHECK_THROWS(c6.induced(std::vector<int>{0, 9}));
}

TEST_CASE("vertex set basics") {
  VertexSet s(100);
  s.add(3);
  s.add(97);
  CHECK(s.size() == 2);
  CHECK(s.contains(97));
  CHECK(s.first() == 3);
  CHECK(s.next(3) == 97);
  CHECK(s.next(97) == -1);
  VertexSet t = VertexSet::of(100, {3});
  CHECK(t.is_subset_of(s));
  CHECK(!s.is_subset_of(t));
  CHECK((s - t).first() == 97);
  CHECK(VertexSet::full(100).size() == 100);
}
