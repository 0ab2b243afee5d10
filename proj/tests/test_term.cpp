#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cw/patterns.hpp"
#include "cw/term.hpp"

using namespace cw;

namespace {

Graph cycle(int k) { return PatternId::cycle(k).graph(); }
Graph complete(int k) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
  return Graph::from_edges(k, e);
}

}  // namespace

TEST_CASE("eval textbook K2") {
  CwTerm t;
  t.label_budget = 3;
  t.ops = {CwTerm::Create{0, 1}, CwTerm::Create{1, 2}, CwTerm::Union{},
           CwTerm::Join{1, 2}};
  LabelledGraph lg = eval_term(t);
  CHECK(lg.graph.adjacent(0, 1));
  CHECK(lg.present.size() == 2);
  CHECK(lg.distinct_labels() == 2);
}

TEST_CASE("eval single vertex") {
  CwTerm t;
  t.label_budget = 2;
  t.ops = {CwTerm::Create{0, 1}};
  LabelledGraph lg = eval_term(t);
  CHECK(lg.present.size() == 1);
  CHECK(lg.graph.edge_count() == 0);
}

TEST_CASE("two labels suffice for P3") {
  // reuse the label of the isolated end for the new vertex: the re-join of
  // the existing edge is idempotent
  CwTerm t;
  t.label_budget = 3;
  t.ops = {CwTerm::Create{0, 1}, CwTerm::Create{1, 2}, CwTerm::Union{},
           CwTerm::Join{1, 2}, CwTerm::Create{2, 1},  CwTerm::Union{},
           CwTerm::Join{1, 2}};
  LabelledGraph lg = eval_term(t);
  Graph p3 = PatternId::path(3).graph();
  CHECK(lg.graph.adjacent(0, 1));
  CHECK(lg.graph.adjacent(1, 2));
  CHECK(!lg.graph.adjacent(0, 2));
  CHECK(lg.distinct_labels() == 2);
  auto vr = verify_term(t, Graph::from_edges(3, {{0, 1}, {1, 2}}));
  CHECK(vr.ok);
  CHECK(vr.width_used == 2);
}

TEST_CASE("relabelling both ends before the last join yields a triangle") {
  CwTerm t;
  t.label_budget = 3;
  t.ops = {CwTerm::Create{0, 1}, CwTerm::Create{1, 2},  CwTerm::Union{},
           CwTerm::Join{1, 2},   CwTerm::Relabel{1, 2}, CwTerm::Create{2, 1},
           CwTerm::Union{},      CwTerm::Join{1, 2}};
  LabelledGraph lg = eval_term(t);
  CHECK(lg.graph.edge_count() == 3);
}

TEST_CASE("eval errors") {
  CwTerm t;
  t.label_budget = 2;
  t.ops = {CwTerm::Union{}};
  CHECK_THROWS_AS(eval_term(t), TermError);
  t.ops = {CwTerm::Create{0, 1}, CwTerm::Create{1, 1}, CwTerm::Union{},
           CwTerm::Join{1, 1}};
  CHECK_THROWS_AS(eval_term(t), TermError);
  t.ops = {CwTerm::Create{0, 5}};
  CHECK_THROWS_AS(eval_term(t), TermError);
  t.ops = {CwTerm::Create{0, 1}, CwTerm::Create{1, 1}};  // two graphs left
  CHECK_THROWS_AS(eval_term(t), TermError);
  t.ops = {CwTerm::Create{0, 1}, CwTerm::Create{0, 1}, CwTerm::Union{}};
  CHECK_THROWS_AS(eval_term(t), TermError);
}

TEST_CASE("empty term vs empty graph") {
  CwTerm t;
  auto vr = verify_term(t, Graph(0));
  CHECK(vr.ok);
  CHECK(vr.width_used == 0);
}

TEST_CASE("verify_term reports mismatches") {
  CwTerm t;
  t.label_budget = 3;
  t.ops = {CwTerm::Create{0, 1}, CwTerm::Create{1, 2}, CwTerm::Union{},
           CwTerm::Join{1, 2}};
  auto vr = verify_term(t, Graph(2));  // 2K1
  CHECK(!vr.ok);
  REQUIRE(vr.extra_edges.size() == 1);
  CHECK(vr.extra_edges[0] == std::pair<int, int>{0, 1});
}

TEST_CASE("peel K2 and C6 singletons") {
  Graph k2 = complete(2);
  auto pr = peel(k2, VertexPartition::singletons(k2));
  CHECK(pr.success);
  CHECK(pr.order.size() == 2);

  Graph c6 = cycle(6);
  pr = peel(c6, VertexPartition::singletons(c6));
  CHECK(pr.success);
  CHECK(pr.order.size() == 6);
}

TEST_CASE("build_term round trips") {
  Graph k2 = complete(2);
  CwTerm t = build_term(k2, VertexPartition::singletons(k2));
  CHECK(t.label_budget == 3);
  auto vr = verify_term(t, k2);
  CHECK(vr.ok);
  CHECK(vr.width_used <= 3);

  Graph c6 = cycle(6);
  t = build_term(c6, VertexPartition::singletons(c6));
  vr = verify_term(t, c6);
  CHECK(vr.ok);
  CHECK(vr.width_used <= 7);

  // single vertex, one part
  Graph one(1);
  t = build_term(one, VertexPartition::singletons(one));
  CHECK(t.ops.size() == 1);
  CHECK(verify_term(t, one).ok);
}

TEST_CASE("width bound counts non-empty parts only") {
  Graph k3 = complete(3);
  VertexPartition P;
  P.add("a", VertexSet::of(3, {0, 1, 2}));
  P.add("empty1", VertexSet(3));
  P.add("empty2", VertexSet(3));
  CwTerm t = build_term(k3, P);
  auto vr = verify_term(t, k3);
  CHECK(vr.ok);
  CHECK(vr.width_used <= 2);  // non-empty parts + 1
}

TEST_CASE("term json round trip") {
  Graph c6 = cycle(6);
  CwTerm t = build_term(c6, VertexPartition::singletons(c6));
  CwTerm u = CwTerm::from_json(t.to_json());
  CHECK(u.label_budget == t.label_budget);
  CHECK(u.ops.size() == t.ops.size());
  CHECK(verify_term(u, c6).ok);
}

TEST_CASE("labels track part membership after every vertex insertion") {
  Graph c6 = cycle(6);
  VertexPartition P = VertexPartition::singletons(c6);
  CwTerm t = build_term(c6, P);
  // evaluate every prefix that ends at a completed insertion (after a
  // relabel or the initial create) and check the invariant
  for (std::size_t cut = 1; cut <= t.ops.size(); ++cut) {
    bool boundary = cut == t.ops.size() ||
                    std::holds_alternative<CwTerm::Relabel>(t.ops[cut - 1]) ||
                    (cut == 1 && std::holds_alternative<CwTerm::Create>(t.ops[0]));
    if (!boundary) continue;
    CwTerm prefix;
    prefix.label_budget = t.label_budget;
    prefix.ops.assign(t.ops.begin(), t.ops.begin() + cut);
    LabelledGraph lg = eval_term(prefix, c6.vertex_count());
    for (int v = lg.present.first(); v >= 0; v = lg.present.next(v)) {
      int part = -1;
      for (int i = 0; i < P.part_count(); ++i)
        if (P.parts[i].contains(v)) part = i;
      CHECK(lg.labels[v] == part + 1);
    }
  }
}
