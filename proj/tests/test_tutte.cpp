#include <doctest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "topotutte/expansions.hpp"
#include "topotutte/sampling.hpp"
#include "topotutte/tutte.hpp"

using namespace topotutte;
using topotutte::testing::load;
using topotutte::testing::P;

namespace {

AbstractGraph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return AbstractGraph(n, e);
}

AbstractGraph random_graph(std::mt19937_64& rng, int max_v, int max_e) {
  std::uniform_int_distribution<int> nv(1, max_v), ne(0, max_e);
  const int n = nv(rng), m = ne(rng);
  std::uniform_int_distribution<int> end(0, n - 1);
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < m; ++i) e.emplace_back(end(rng), end(rng));
  return AbstractGraph(n, e);
}

}  // namespace

TEST_CASE("small Tutte polynomials") {
  CHECK(tutte(cycle(3)) == P("x^2 + x + y"));
  CHECK(tutte(AbstractGraph(1, {{0, 0}})) == P("y"));
  CHECK(tutte(AbstractGraph(2, {{0, 1}})) == P("x"));
  CHECK(tutte(AbstractGraph(2, {{0, 1}, {0, 1}})) == P("x + y"));
  CHECK(tutte(AbstractGraph(3, {})) == Poly(1));
  CHECK(tutte(cycle(3), Var("s"), Var("t")) == P("s^2 + s + t"));
  CHECK_THROWS_AS(AbstractGraph(2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("underlying graphs of the examples") {
  CHECK(tutte(underlying_graph(load("ex3.rg"))) == P("x + y + y^2"));
  CHECK(tutte(underlying_graph(load("ex14.rg"))) == P("y^2"));
  const RibbonGraph g = load("ex3.rg");
  const AbstractGraph sub = underlying_graph(g, g.edge_set({"a"}));
  CHECK(sub.num_vertices == 2);
  CHECK(sub.num_edges() == 1);
}

TEST_CASE("dichromatic polynomials") {
  CHECK(dichromatic(AbstractGraph(2, {{0, 1}, {0, 1}})) == P("a^2 + 2*a*b + a*b^2"));
  const std::vector<Poly> b{P("b_1"), P("b_2")};
  CHECK(dichromatic(AbstractGraph(2, {{0, 1}, {0, 1}}), b) == P("a^2 + a*b_1 + a*b_2 + a*b_1*b_2"));

  // Z(a, b) = a^k b^r T(1 + a/b, 1 + b) on random graphs.
  std::mt19937_64 rng(5);
  RationalSampler points(9);
  for (int i = 0; i < 40; ++i) {
    const AbstractGraph g = random_graph(rng, 5, 7);
    const Rational a = points.next(), bb = points.next();
    const int k = count_components(g);
    const int r = g.num_vertices - k;
    Rational lhs = evaluate(dichromatic(g), {{Var("a"), a}, {Var("b"), bb}});
    Rational rhs = evaluate(tutte(g), {{Var("x"), Rational(1 + a / bb)}, {Var("y"), Rational(1 + bb)}});
    for (int j = 0; j < k; ++j) rhs *= a;
    for (int j = 0; j < r; ++j) rhs *= bb;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("deletion-contraction agrees with the rank expansion") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 80; ++i) {
    const AbstractGraph g = random_graph(rng, 6, 9);
    CHECK(tutte(g) == oracle::tutte(g));
    CHECK(count_components(g) == oracle::components(g, EdgeSet::all(g.num_edges())));
  }
}

TEST_CASE("medial circle counts") {
  CHECK(delta(AbstractGraph(1, {})) == 1);
  CHECK(delta(AbstractGraph(2, {})) == 2);
  CHECK(delta(AbstractGraph(2, {{0, 1}})) == 1);
  CHECK(delta(cycle(3)) == 1);                           // trefoil
  CHECK(delta(AbstractGraph(2, {{0, 1}, {0, 1}})) == 2);  // Hopf link
  CHECK(delta(cycle(4)) == 2);
  CHECK(delta(AbstractGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})) == 3);  // Borromean rings
}

TEST_CASE("rank functions") {
  const AbstractGraph g = cycle(3);
  CHECK(cycle_rank(g, EdgeSet::all(3)) == 2);
  const RankOracle dual = dual_rank(cycle_rank(g));
  CHECK(dual(EdgeSet::all(3)) == 1);
  CHECK(dual(EdgeSet(1)) == 1);
  CHECK(dual(EdgeSet()) == 0);
}

TEST_CASE("matroid perspectives") {
  std::mt19937_64 rng(17);
  RationalSampler points(4);
  for (int i = 0; i < 40; ++i) {
    const AbstractGraph g = random_graph(rng, 5, 7);
    const RankOracle m = cycle_rank(g);
    CHECK(substitute(perspective_tutte(m, m), {{Var("z"), Poly(1)}}) == tutte(g));

    // Quotient by contracting a fixed set S: r'(F) = r(F u S) - r(S).
    const EdgeSet s(rng() & EdgeSet::all(g.num_edges()).bits());
    const RankOracle q{m.size, [m, s](EdgeSet f) { return m(f | s) - m(s); }};
    const Poly t = perspective_tutte(m, q);
    CHECK(substitute(t, {{Var("z"), P("x - 1")}}) == tutte(g));
    const int gap = m(m.ground()) - q(q.ground());
    // T(M') = (y-1)^gap T(x, y, 1/(y-1)), checked at a few points.
    for (int j = 0; j < 3; ++j) {
      const Rational x = points.next(), y = points.next() + 1;
      Rational lhs = evaluate(t, {{Var("x"), x}, {Var("y"), y}, {Var("z"), Rational(1 / (y - 1))}});
      for (int k = 0; k < gap; ++k) lhs *= y - 1;
      CHECK(lhs == evaluate(perspective_tutte(q, q), {{Var("x"), x}, {Var("y"), y}, {Var("z"), 1}}));
    }
  }
  const AbstractGraph g = cycle(3);
  const RankOracle m = cycle_rank(g);
  const RankOracle bigger{3, [](EdgeSet f) { return f.size(); }};
  CHECK_THROWS_AS(perspective_tutte(m, bigger), std::invalid_argument);
}

TEST_CASE("Las Vergnas polynomial of a plane graph is the Tutte polynomial") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 30; ++i) {
    const RibbonGraph g = testing::random_plane_graph(rng);
    CHECK(las_vergnas(g) == tutte(underlying_graph(g)));
  }
}
