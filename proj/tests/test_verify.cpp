#include <doctest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "topotutte/verify.hpp"

using namespace topotutte;
using topotutte::testing::load;

TEST_CASE("every suite passes on the examples") {
  for (const char* name : {"ex3.rg", "ex14.rg", "ex8.rg", "br_example.rg", "arrow_example.rg", "relative_k4.rg"}) {
    CAPTURE(name);
    const auto results = run_suites("all", load(name));
    CHECK(results.size() == suite_names().size());
    for (const auto& r : results) {
      CAPTURE(r.suite);
      CHECK(r.ok());
      CHECK(r.checks + r.skipped > 0);
    }
  }
}

TEST_CASE("suites that do not apply are skipped") {
  const auto buch = verify_buch_suite(load("ex3.rg"));
  CHECK(buch.checks == 0);
  CHECK(buch.skipped == 1);
  const auto br = verify_br_recurrence(load("ex14.rg"));
  CHECK(br.skipped == 2);  // both loops are nontrivial orientable loops

  const auto plane = verify_buch_suite(load("relative_k4.rg"), {7, 1, {}});
  CHECK(plane.ok());
  CHECK(plane.checks == 7);
  CHECK(plane.details.size() == 7);
}

TEST_CASE("unknown suite names are rejected") {
  CHECK_THROWS_AS(run_suites("nope", load("ex3.rg")), std::invalid_argument);
  CHECK(run_suites("butler", load("ex3.rg")).size() == 1);
}

TEST_CASE("results depend only on the seed") {
  const RibbonGraph g = load("relative_k4.rg");
  const VerifyOptions a{5, 3, {}}, b{5, 4, {}};
  CHECK(verify_buch_suite(g, a).details == verify_buch_suite(g, a).details);
  CHECK(verify_buch_suite(g, a).details != verify_buch_suite(g, b).details);
}

TEST_CASE("suites on random graphs") {
  std::mt19937_64 rng(73);
  for (int i = 0; i < 25; ++i) {
    testing::RibbonParams p;
    p.max_edges = 6;
    p.connected = i % 4 != 0;
    const RibbonGraph g = testing::random_ribbon_graph(rng, p);
    for (const auto& r : run_suites("all", g, {5, static_cast<std::uint64_t>(i), {}})) {
      CAPTURE(r.suite);
      CHECK(r.ok());
    }
  }
}
