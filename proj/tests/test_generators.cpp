#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "cw/decompose.hpp"
#include "cw/generators.hpp"
#include "cw/oracles.hpp"
#include "cw/term.hpp"

using namespace cw;
using TK = InstanceParams::TripleKind;

namespace {

// the generated instance must classify back to exactly the classes it was
// laid out with (the X4 side split may legitimately differ)
void check_round_trip(const GeneratedInstance& i) {
  const Graph& g = i.graph;
  CHECK(!is_in_class(g).has_value());
  DecompositionReport r = build_partition(g);
  CHECK(r.monotone);
  CHECK(r.all_pass());
  REQUIRE(i.intended.part_count() == 26);
  for (int v = 0; v < 6; ++v) CHECK(i.intended.parts[v].to_vector() ==
                                    std::vector<int>{v});
  CHECK(r.classes.x6 == i.intended.parts[6]);
  CHECK(r.classes.x2 == i.intended.parts[7]);
  for (int j = 0; j < 6; ++j) {
    CHECK(r.classes.x4[j] ==
          (i.intended.parts[8 + 2 * j] | i.intended.parts[9 + 2 * j]));
    CHECK(r.classes.x3[j] == i.intended.parts[20 + j]);
  }
  CwTerm t = build_term(g, r.partition);
  CHECK(t.label_budget == 27);
  CHECK(verify_term(t, g).ok);
}

}  // namespace

TEST_CASE("empty parameters give the bare six-cycle") {
  auto i = gen_instance(InstanceParams{});
  CHECK(i.graph.vertex_count() == 6);
  CHECK(i.graph.edge_count() == 6);
  CHECK(i.attempts == 1);
  CHECK(i.intended.is_valid_for(i.graph));
  check_round_trip(i);
}

TEST_CASE("single-class instances round trip") {
  {
    InstanceParams p;
    p.x6_size = 2;
    auto i = gen_instance(p);
    CHECK(i.graph.vertex_count() == 8);
    check_round_trip(i);
  }
  {
    InstanceParams p;
    p.x2_size = 2;
    p.x2_pair = 1;
    auto i = gen_instance(p);
    check_round_trip(i);
    CHECK(build_partition(i.graph).classes.x2_index == 1);
  }
  {
    InstanceParams p;
    p.x4_sizes = {0, 0, 3, 0, 0, 0};
    p.x4_side0 = {0, 0, 1, 0, 0, 0};
    p.x3_sizes = {0, 0, 2, 2, 0, 0};
    check_round_trip(gen_instance(p));
  }
}

TEST_CASE("mixed presets round trip over several seeds") {
  std::vector<InstanceParams> presets;
  {
    InstanceParams p;  // X2 with rigid X4 partners
    p.x6_size = 2;
    p.x2_size = 2;
    p.x3_sizes = {2, 2, 2, 1, 2, 1};
    p.x4_sizes = {2, 0, 0, 2, 0, 0};
    p.x4_side0 = {1, 0, 0, 1, 0, 0};
    presets.push_back(p);
  }
  {
    InstanceParams p;  // a run of three X4 classes
    p.x6_size = 3;
    p.x4_sizes = {3, 2, 2, 0, 0, 0};
    p.x4_side0 = {2, 1, 1, 0, 0, 0};
    p.x3_sizes = {2, 2, 1, 1, 2, 2};
    presets.push_back(p);
  }
  {
    InstanceParams p;  // alternating X4 support
    p.x4_sizes = {2, 0, 2, 0, 2, 0};
    p.x4_side0 = {1, 0, 1, 0, 1, 0};
    p.x3_sizes = {1, 2, 1, 2, 1, 2};
    presets.push_back(p);
  }
  for (const auto& base : presets)
    for (std::uint64_t s = 1; s <= 5; ++s) {
      InstanceParams p = base;
      p.seed = s;
      check_round_trip(gen_instance(p));
    }
}

TEST_CASE("triangle preset produces a triangle configuration") {
  InstanceParams p;
  p.x6_size = 1;
  p.x3_sizes = {3, 2, 3, 2, 3, 2};
  p.configs = {TK::Triangle, TK::Sparse};
  p.inner_sizes = {{{2, 1, 2}, {1, 1, 1}}};
  for (std::uint64_t s = 1; s <= 5; ++s) {
    p.seed = s;
    auto i = gen_instance(p);
    check_round_trip(i);
    DecompositionReport r = build_partition(i.graph);
    CHECK(r.configs[0].kind == TripleConfig::Triangle);
    CHECK(r.configs[1].kind == TripleConfig::Sparse);
    CHECK(r.configs[0].inner[0].size() == 2);
    CHECK(r.configs[0].outer[0].size() == 1);
  }
}

TEST_CASE("parameter conflicts are rejected up front") {
  InstanceParams p;
  p.x3_sizes = {-1, 0, 0, 0, 0, 0};
  CHECK_THROWS_AS(gen_instance(p), GenerateError);

  InstanceParams pair;
  pair.x2_pair = 3;
  CHECK_THROWS_AS(gen_instance(pair), GenerateError);

  InstanceParams both;
  both.x3_sizes = {1, 1, 1, 1, 1, 1};
  both.configs = {TK::Triangle, TK::Triangle};
  CHECK_THROWS_AS(gen_instance(both), GenerateError);

  InstanceParams x2tri;
  x2tri.x2_size = 1;
  x2tri.x3_sizes = {1, 1, 1, 1, 1, 1};
  x2tri.configs = {TK::Triangle, TK::Sparse};
  CHECK_THROWS_AS(gen_instance(x2tri), GenerateError);

  InstanceParams x4tri;  // any X4 class blocks a pair in each triple
  x4tri.x4_sizes = {0, 1, 0, 0, 0, 0};
  x4tri.x3_sizes = {1, 1, 1, 1, 1, 1};
  x4tri.configs = {TK::Triangle, TK::Sparse};
  CHECK_THROWS_AS(gen_instance(x4tri), GenerateError);
}

TEST_CASE("three-ring basics") {
  {
    std::vector<int> one{1};
    ThreeRing r = gen_3ring(1, {one, one, one});
    CHECK(r.graph.vertex_count() == 3);
    CHECK(r.graph.edge_count() == 3);
    // all pairs complete: the box graph has no edges
    CHECK(box_graph(r.graph, r.partition).edge_count() == 0);
  }
  {
    std::array<std::vector<int>, 3> prof{
        std::vector<int>{2, 0}, std::vector<int>{1, 1}, std::vector<int>{2, 1}};
    ThreeRing r = gen_3ring(2, prof);
    CHECK(is_monotone_partition(r.graph, r.partition).ok);
    CHECK(box_graph(r.graph, r.partition).edge_count() == 3);
    CHECK(peel(r.graph, r.partition).success);
    CwTerm t = build_term(r.graph, r.partition);
    CHECK(verify_term(t, r.graph).ok);
  }
}

TEST_CASE("three-ring profile validation") {
  std::vector<int> ok{1, 1};
  std::vector<int> wrong_len{1};
  std::vector<int> too_big{3, 1};
  std::vector<int> increasing{0, 1};
  CHECK_THROWS_AS(gen_3ring(0, {ok, ok, ok}), GenerateError);
  CHECK_THROWS_AS(gen_3ring(2, {wrong_len, ok, ok}), GenerateError);
  CHECK_THROWS_AS(gen_3ring(2, {too_big, ok, ok}), GenerateError);
  CHECK_THROWS_AS(gen_3ring(2, {increasing, ok, ok}), GenerateError);
}

TEST_CASE("the stuck ring defeats the greedy peel") {
  ThreeRing r = gen_3ring_stuck();
  CHECK(r.graph.vertex_count() == 9);
  CHECK(is_monotone_partition(r.graph, r.partition).ok);
  CHECK(box_graph(r.graph, r.partition).edge_count() == 3);
  PeelResult pr = peel(r.graph, r.partition);
  CHECK(!pr.success);
  REQUIRE(pr.residual.has_value());
  CHECK(pr.residual->size() == 9);
  HevVerdict hv = hev_holds_brute(r.graph, r.partition);
  CHECK(!hv.ok);
  CHECK(hv.violating_subset.has_value());
  CHECK_THROWS_AS(build_term(r.graph, r.partition), TermError);
}

TEST_CASE("random graphs are reproducible") {
  Graph a = gen_random(12, 0.3, 99);
  Graph b = gen_random(12, 0.3, 99);
  CHECK(a == b);
  CHECK(gen_random(12, 0.3, 100).edges() != a.edges());
  CHECK(gen_random(10, 0.0, 1).edge_count() == 0);
  CHECK(gen_random(10, 1.0, 1).edge_count() == 45);
  CHECK(gen_random(0, 0.5, 1).vertex_count() == 0);
  CHECK_THROWS_AS(gen_random(-1, 0.5, 1), GenerateError);
  CHECK_THROWS_AS(gen_random(5, 1.5, 1), GenerateError);
}

TEST_CASE("pinned random fixture") {
  Graph g = gen_random(30, 0.5, 42);
  CHECK(g.edge_count() == 232);
  CHECK(!g.adjacent(0, 1));
  CHECK(!g.adjacent(0, 2));
  CHECK(g.adjacent(28, 29));
}
