#include <doctest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "topotutte/relative.hpp"

using namespace topotutte;
using topotutte::testing::load;
using topotutte::testing::P;

namespace {

RibbonGraph mark_zero(RibbonGraph g, const std::vector<std::string>& names) {
  for (const auto& n : names) {
    const int e = g.find_edge(n);
    auto a = g.attributes(e);
    a.zero = true;
    g = g.with_attributes(e, a);
  }
  return g;
}

RibbonGraph triangle() { return RibbonGraph::from_words({{"a", "c"}, {"b", "a"}, {"c", "b"}}); }

}  // namespace

TEST_CASE("psi") {
  CHECK(psi(RibbonGraph({{"v", {}}}, {})) == Poly(1));
  CHECK(psi(RibbonGraph::from_words({{"e"}, {"e"}})) == P("w"));
  CHECK(psi(triangle()) == P("w^2"));
  CHECK(psi(RibbonGraph::from_words({{"a", "b"}, {"b", "a"}})) == P("d*w"));
  CHECK(psi(RibbonGraph({{"u", {}}, {"v", {}}}, {})) == Poly(1));
}

TEST_CASE("medial circles") {
  CHECK(medial_circle_count(triangle(), triangle().all_edges()) == 1);
  const RibbonGraph digon = RibbonGraph::from_words({{"a", "b"}, {"b", "a"}});
  CHECK(medial_circle_count(digon, digon.all_edges()) == 2);
  CHECK(medial_circle_count(digon, EdgeSet()) == 2);
  const auto circles = medial_circles(digon, EdgeSet());
  CHECK(circles[0].free_vertex >= 0);
  CHECK(circles[0].gaps.empty());
}

TEST_CASE("medial circles match the Tutte evaluation on random plane graphs") {
  std::mt19937_64 rng(59);
  for (int i = 0; i < 60; ++i) {
    testing::PlaneParams p;
    p.isolated_vertices = i % 3;
    const RibbonGraph g = testing::random_plane_graph(rng, p);
    CHECK(metrics(g).s == 0);
    CHECK(medial_circle_count(g, g.all_edges()) == delta(underlying_graph(g)));
  }
}

TEST_CASE("H_F on the K4 instance") {
  const RelativeGraph r(load("relative_k4.rg"));
  const RibbonGraph& c = r.graph();
  CHECK(r.zero_edges() == c.edge_set({"ab", "bc", "ca"}));

  const AbstractGraph none = h_sub_f(r, EdgeSet());
  CHECK(none.num_vertices == 4);
  CHECK(none.num_edges() == 3);
  const AbstractGraph one = h_sub_f(r, c.edge_set({"ad"}));
  CHECK(one.num_vertices == 3);
  CHECK(one.num_edges() == 3);
  const AbstractGraph all = h_sub_f(r, r.regular_edges());
  CHECK(all.num_vertices == 1);
  CHECK(all.num_edges() == 3);
  CHECK(psi(h_sub_f_embedded(r, EdgeSet())) == P("w^2"));
}

TEST_CASE("relative Tutte polynomial of the K4 instance") {
  const RelativeGraph r(load("relative_k4.rg"));
  CHECK(relative_tutte(r).to_string() == "X*w^2 + 3*d*w + 3*w^2 + 1");
  CHECK(isomorphic(to_ribbon(r), load("ex3.rg")));
  CHECK(verify_buch(r).ok);
  CHECK(verify_relative_duality(r).ok);
}

TEST_CASE("extreme choices of H") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 30; ++i) {
    const RibbonGraph g = testing::random_plane_graph(rng);
    const Poly t = relative_tutte(RelativeGraph(g));
    CHECK(substitute(t, {{Var("X"), P("x - 1")}, {Var("Y"), P("y - 1")}, {Var("d"), Poly(1)}, {Var("w"), Poly(1)}}) ==
          tutte(underlying_graph(g)));

    RibbonGraph all_zero = g;
    for (int e = 0; e < g.num_edges(); ++e) all_zero = mark_zero(all_zero, {g.edge(e).name});
    CHECK(relative_tutte(RelativeGraph(all_zero)) == psi(g));
  }
}

TEST_CASE("relative graphs must be plane") {
  CHECK_THROWS_AS(RelativeGraph(load("ex3.rg")), GraphError);
  auto g = triangle();
  auto a = g.attributes(0);
  a.phantom = true;
  CHECK_THROWS_AS(RelativeGraph(g.with_attributes(0, a)), GraphError);
}

TEST_CASE("to_ribbon on trivial inputs") {
  // Without 0-edges every vertex is its own medial circle.
  const RibbonGraph g = triangle();
  CHECK(isomorphic(to_ribbon(RelativeGraph(g)), g));
  // With only 0-edges no ribbons are left.
  const RibbonGraph z = to_ribbon(RelativeGraph(mark_zero(triangle(), {"a", "b", "c"})));
  CHECK(z.num_edges() == 0);
  CHECK(z.num_vertices() == 1);
}

TEST_CASE("relative duality, involution and the conversion identity on random instances") {
  std::mt19937_64 rng(67);
  for (int i = 0; i < 40; ++i) {
    testing::RelativeParams p;
    p.plane.max_edges = 7;
    p.plane.isolated_vertices = i % 4 == 0 ? 1 : 0;
    p.symbolic_weights = i % 2 == 1;
    const RelativeGraph r = testing::random_relative_graph(rng, p);
    const RelativeGraph dd = relative_dual(relative_dual(r));
    CHECK(isomorphic(dd.graph(), r.graph(), true));
    CHECK(relative_dual(r).zero_edges() == r.zero_edges());
    const PointSampler sampler{static_cast<std::uint64_t>(i + 1), 5};
    CHECK(verify_relative_duality(r, sampler).ok);
    CHECK(verify_buch(r, sampler).ok);
  }
}
