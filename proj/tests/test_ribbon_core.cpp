#include <doctest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "topotutte/expansions.hpp"
#include "topotutte/ribbon_graph.hpp"

using namespace topotutte;
using topotutte::testing::load;

namespace {

RibbonGraph single_vertex() { return RibbonGraph({{"v", {}}}, {}); }

RibbonGraph one_loop(bool twist) { return RibbonGraph::from_words({{"l", "l"}}, twist ? std::set<std::string>{"l"} : std::set<std::string>{}); }

}  // namespace

TEST_CASE("metrics of the torus theta graph") {
  const RibbonGraph g = load("ex3.rg");
  CHECK(metrics(g) == SubgraphMetrics{2, 3, 1, 1, 2, 1, 2, true});
  CHECK(metrics(g, EdgeSet()) == SubgraphMetrics{2, 0, 2, 0, 0, 2, 0, true});
  CHECK(metrics(single_vertex()) == SubgraphMetrics{1, 0, 1, 0, 0, 1, 0, true});
}

TEST_CASE("boundary trace") {
  const RibbonGraph g = load("ex3.rg");
  const auto comps = trace_boundary(g, g.all_edges());
  REQUIRE(comps.size() == 1);
  int sides = 0;
  for (const auto& step : comps[0]) sides += step.kind == BoundaryStep::Kind::side;
  CHECK(sides == 6);  // each ribbon is passed on both sides
  CHECK(count_boundary_components(single_vertex(), EdgeSet()) == 1);
  CHECK(trace_boundary(single_vertex(), EdgeSet())[0][0].kind == BoundaryStep::Kind::free_circle);
}

TEST_CASE("edge classes") {
  CHECK(classify_edge(one_loop(false), 0) == EdgeClass::trivial_orientable_loop);
  CHECK(classify_edge(one_loop(true), 0) == EdgeClass::nonorientable_loop);
  const RibbonGraph torus = load("ex14.rg");
  CHECK(classify_edge(torus, 0) == EdgeClass::nontrivial_orientable_loop);
  CHECK(classify_edge(torus, 1) == EdgeClass::nontrivial_orientable_loop);
  const RibbonGraph bridge = RibbonGraph::from_words({{"e"}, {"e"}});
  CHECK(classify_edge(bridge, 0) == EdgeClass::bridge);
  CHECK(classify_edge(load("ex3.rg"), 0) == EdgeClass::ordinary);
  // A loop nested between the two ends of another is still trivial.
  const RibbonGraph nested = RibbonGraph::from_words({{"a", "b", "b", "a"}});
  CHECK(classify_edge(nested, 0) == EdgeClass::trivial_orientable_loop);
  CHECK(classify_edge(nested, 1) == EdgeClass::trivial_orientable_loop);
}

TEST_CASE("geometric duals") {
  const RibbonGraph g = load("ex3.rg");
  const RibbonGraph d = geometric_dual(g);
  CHECK(d.num_vertices() == 1);
  CHECK(d.num_edges() == 3);
  for (int e = 0; e < 3; ++e) CHECK(d.is_loop(e));
  CHECK(isomorphic(geometric_dual(load("ex14.rg")), load("ex14.rg")));

  const RibbonGraph loop = one_loop(false);
  const auto m = metrics(loop), md = metrics(geometric_dual(loop));
  CHECK(md.v == m.bc);
  CHECK(md.bc == m.v);
  CHECK(md.s == m.s);

  auto attrs = g.attributes(0);
  attrs.phantom = true;
  CHECK_THROWS_AS(geometric_dual(g.with_attributes(0, attrs)), GraphError);
}

TEST_CASE("partial duals") {
  const RibbonGraph g = load("ex3.rg");
  CHECK(isomorphic(partial_dual(g, EdgeSet()), g, true));
  CHECK(isomorphic(partial_dual(g, g.all_edges()), geometric_dual(g), true));
  const RibbonGraph ga = partial_dual(g, g.edge_set({"a"}));
  CHECK(ga.num_vertices() == 1);
  CHECK(ga.edge(0).name == "a");
  CHECK(g.edge_set({"a", "c"}) == EdgeSet(0b101));
  CHECK_THROWS_AS(g.edge_set({"nope"}), GraphError);
}

TEST_CASE("deletion and contraction") {
  const RibbonGraph g = load("ex3.rg");
  const int c = g.find_edge("c");
  const RibbonGraph gc = contract_edge(g, c);
  CHECK(gc.num_edges() == 2);
  CHECK(gc.num_vertices() == 1);
  CHECK(metrics(gc).s == 2);
  CHECK(metrics(delete_edge(g, c)).s == 0);

  const RibbonGraph bridge = RibbonGraph::from_words({{"e"}, {"e"}});
  const RibbonGraph point = contract_edge(bridge, 0);
  CHECK(point.num_vertices() == 1);
  CHECK(point.num_edges() == 0);

  // An untwisted loop splits its vertex in two when contracted.
  CHECK(contract_edge(one_loop(true), 0).num_vertices() == 1);
  CHECK(contract_edge(one_loop(false), 0).num_vertices() == 2);
  CHECK_THROWS_AS(delete_edge(g, 7), GraphError);
}

TEST_CASE("construction errors") {
  using V = RibbonGraph::Vertex;
  using E = RibbonGraph::Edge;
  E e{"e", false, {}, {"h0", "h1"}};
  CHECK_THROWS_AS(RibbonGraph({}, {}), GraphError);
  CHECK_THROWS_AS(RibbonGraph({V{"v", {0, 0}}}, {e}), GraphError);
  CHECK_THROWS_AS(RibbonGraph({V{"v", {0}}}, {e}), GraphError);
  CHECK_THROWS_AS(RibbonGraph({V{"v", {0, 1}}, V{"v", {}}}, {e}), GraphError);
  CHECK_THROWS_AS(RibbonGraph({V{"v", {0, 1}}}, {e}, {{Arc{Arc::Kind::edge_side, 0, 2}, {1}}}), GraphError);
  CHECK_NOTHROW(RibbonGraph({V{"v", {0, 1}}}, {e}));
}

TEST_CASE("flips, canonical forms and components") {
  const RibbonGraph g = load("ex8.rg");
  const RibbonGraph f = flip_vertex(g, 0);
  CHECK(metrics(f) == metrics(g));
  CHECK(canonical_form(f) == canonical_form(g));
  CHECK(bollobas_riordan(f) == bollobas_riordan(g));
  CHECK_FALSE(isomorphic(g, load("ex3.rg")));

  const RibbonGraph u = disjoint_union(g, load("ex3.rg"));
  CHECK(metrics(u).k == 2);
  const auto split = split_components(u);
  REQUIRE(split.parts.size() == 2);
  CHECK(isomorphic(split.parts[0], g));
  CHECK(isomorphic(split.parts[1], load("ex3.rg")));

  const RibbonGraph n = normalized_orientation(flip_vertex(load("ex3.rg"), 1));
  for (int e = 0; e < n.num_edges(); ++e) CHECK_FALSE(n.twisted(e));
}

TEST_CASE("metric identities against face tracing on random graphs") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 60; ++i) {
    testing::RibbonParams p;
    p.max_edges = 7;
    p.connected = i % 3 != 0;
    const RibbonGraph g = testing::random_ribbon_graph(rng, p);
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << g.num_edges()); ++b) {
      const EdgeSet f(b);
      const auto m = metrics(g, f);
      CHECK(m.bc == oracle::faces(g, f));
      CHECK(m.k == oracle::components(g, f));
      CHECK(m.s == m.k + m.n - m.bc);
      CHECK(m.s >= 0);
      if (m.orientable) CHECK(m.s % 2 == 0);
    }
    const auto m = metrics(g);
    CHECK(m.v - m.e + m.bc == 2 * m.k - m.s);
    CHECK(metrics(geometric_dual(geometric_dual(g))) == m);
    CHECK(isomorphic(geometric_dual(geometric_dual(g)), g, true));
  }
}

TEST_CASE("partial dual group law on small graphs") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 4; ++i) {
    testing::RibbonParams p;
    p.min_edges = 3;
    p.max_edges = 4;
    const RibbonGraph g = testing::random_ribbon_graph(rng, p);
    const int m = g.num_edges();
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << m); ++a) {
      const RibbonGraph ga = partial_dual(g, EdgeSet(a));
      CHECK(ga.num_vertices() == count_boundary_components(g, EdgeSet(a)));
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << m); ++b) {
        const RibbonGraph lhs = partial_dual(ga, EdgeSet(b));
        const RibbonGraph rhs = partial_dual(g, EdgeSet(a ^ b));
        CHECK(metrics(lhs) == metrics(rhs));
        CHECK(isomorphic(lhs, rhs, true));
      }
    }
  }
}
