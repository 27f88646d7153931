#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "gos/boundary.hpp"
#include "gos/builder.hpp"
#include "gos/families.hpp"
#include "gos/orientability.hpp"
#include "test_helpers.hpp"

using namespace gos;

TEST_CASE("first edge of a multi-vertex GOS is Case I-1(a)") {
  Gos g = make_theta("crossed");
  BuildState s(g);
  s.attach(g, 0);  // edge (1,4), sign +
  CHECK(s.last_label() == "I-1(a)");
  CHECK(s.boundary_count() == g.vertex_count() - 1);
  // rho_1 = sigma * (p q)
  auto expect = g.sigma();
  auto before = expect;
  for (Stub x = 1; x <= g.stub_count(); ++x) {
    Stub y = before(x);
    expect.set_image(x, y == 1 ? 4 : y == 4 ? 1 : y);
  }
  CHECK(s.rho() == expect);
}

TEST_CASE("crossed theta, tree-first trace") {
  Gos g = make_theta("crossed");
  BuildState s = build(g, std::nullopt, true);
  REQUIRE(s.trace().size() == 3);
  CHECK(s.trace()[0].label == "I-1(a)");
  CHECK(s.trace()[0].b_after == 1);
  CHECK(s.trace()[1].label == "II-2(a)");
  CHECK(s.trace()[1].b_after == 2);
  CHECK(s.trace()[2].label == "I-1(a)");
  CHECK(s.trace()[2].b_after == 1);
  CHECK(s.orientable());
  // rho_E equals sigma tau for an all-plus GOS
  CHECK(s.rho() == g.sigma().then(g.tau()));
}

TEST_CASE("one-vertex bouquets, by hand") {
  // sigma = (1 2 3 4); the two loops interleave.
  auto bouquet = [](int sign_b) {
    return Gos::create({4}, {Edge(2, 4, +1), Edge(1, 3, sign_b)});
  };
  SECTION("all plus: torus with one hole") {
    Gos g = bouquet(+1);
    BuildState s = build(g);
    CHECK(s.boundary_count() == 1);
    CHECK(s.orientable());
    CHECK(s.rho() == g.sigma().then(g.tau()));
  }
  SECTION("one minus loop: Klein bottle with one hole") {
    Gos g = bouquet(-1);
    BuildState s = build(g);
    CHECK(s.boundary_count() == 1);
    CHECK_FALSE(s.orientable());
  }
  SECTION("degenerate adjacent-stub loop gets the primed label") {
    Gos g = Gos::create({4}, {Edge(1, 2, +1), Edge(3, 4, +1)});
    BuildState s = build(g, std::nullopt, true);
    CHECK(s.trace()[0].label == "II-2(a)'");
    CHECK(s.boundary_count() == 3);  // planar two-petal bouquet
    CHECK(s.orientable());
  }
}

TEST_CASE("builder agrees with game and tree on random trivalent GOS") {
  std::mt19937 rng(4242);
  for (int i = 0; i < 500; ++i) {
    Gos g = testing::random_gos(rng, 12, 3);
    BuildState s = build(g);
    CHECK(s.boundary_count() == boundary_count(g));
    CHECK(s.orientable() == is_orientable(g));
  }
}

TEST_CASE("results do not depend on the edge ordering") {
  std::mt19937 rng(31337);
  for (int i = 0; i < 60; ++i) {
    Gos g = testing::random_gos(rng, 12, 3);
    BuildState ref = build(g);
    std::vector<std::uint32_t> order(g.edge_count());
    for (std::uint32_t k = 0; k < order.size(); ++k) order[k] = k;
    for (int rep = 0; rep < 20; ++rep) {
      std::shuffle(order.begin(), order.end(), rng);
      BuildState s = build(g, order);
      CHECK(s.boundary_count() == ref.boundary_count());
      CHECK(s.orientable() == ref.orientable());
    }
  }
}

TEST_CASE("petersen under random orderings") {
  Gos g = make_petersen();
  BuildState ref = build(g);
  CHECK(ref.boundary_count() == boundary_count(g));
  CHECK(ref.orientable());
  std::mt19937 rng(5);
  std::vector<std::uint32_t> order(g.edge_count());
  for (std::uint32_t k = 0; k < order.size(); ++k) order[k] = k;
  for (int rep = 0; rep < 20; ++rep) {
    std::shuffle(order.begin(), order.end(), rng);
    BuildState s = build(g, order);
    CHECK(s.boundary_count() == ref.boundary_count());
    CHECK(s.orientable() == ref.orientable());
  }
}

TEST_CASE("case bookkeeping per step") {
  std::mt19937 rng(612);
  for (int i = 0; i < 100; ++i) {
    Gos g = testing::random_gos(rng, 12, 3);
    BuildState s = build(g, std::nullopt, true);
    std::uint32_t b = g.vertex_count();
    for (const auto& step : s.trace()) {
      if (step.label[1] == '-')
        b -= 1;  // Case I
      else if (step.label.find("(a)") != std::string::npos)
        b += 1;  // Case II split
      CHECK(step.b_after == b);
    }
    CHECK(b == s.boundary_count());
  }
}

TEST_CASE("valency floor") {
  Gos g = make_loop(+1);  // valency 2
  CHECK_THROWS_AS(build(g), GosError);
  BuildState s(g);
  CHECK_THROWS_AS(s.attach(g, 0), GosError);
}

TEST_CASE("tree-first prefix builds a disc") {
  std::mt19937 rng(2718);
  for (int i = 0; i < 50; ++i) {
    Gos g = testing::random_gos(rng, 12, 3);
    BuildState s(g);
    SpanningTree t = spanning_tree(g);
    for (auto e : t.tree_edges) {
      s.attach(g, e);
      CHECK(s.last_label()[1] == '-');  // Case I throughout
    }
    CHECK(s.boundary_count() == 1);
    CHECK(s.component_count() == 1);
    CHECK(s.orientable());
  }
}
