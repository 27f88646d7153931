#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "gos/core.hpp"
#include "gos/families.hpp"
#include "test_helpers.hpp"

using namespace gos;

TEST_CASE("smallest legal GOS: one vertex, one plus loop") {
  REQUIRE(Gos::check({2}, {Edge(1, 2, +1)}).empty());
  Gos g = make_loop(+1);
  CHECK(g.vertex_count() == 1);
  CHECK(g.edge_count() == 1);
  CHECK(g.rank() == 1);
}

TEST_CASE("validation taxonomy") {
  SECTION("valency 1 endpoints") {
    auto errs = Gos::check({1, 1}, {Edge(1, 2, +1)});
    REQUIRE_FALSE(errs.empty());
    CHECK(errs.front().kind == ErrorKind::BadValency);
  }
  SECTION("tau fixed point") {
    Edge e;
    e.a = e.b = 3;
    e.sign = +1;
    auto errs = Gos::check({2, 2}, {Edge(1, 2, +1), e});
    bool found = false;
    for (auto& err : errs) found |= err.kind == ErrorKind::TauFixedPoint;
    CHECK(found);
  }
  SECTION("stub reused") {
    auto errs = Gos::check({2, 2}, {Edge(1, 2, +1), Edge(2, 3, +1)});
    bool found = false;
    for (auto& err : errs) found |= err.kind == ErrorKind::StubReused;
    CHECK(found);
  }
  SECTION("disconnected") {
    auto errs = Gos::check({2, 2}, {Edge(1, 2, +1), Edge(3, 4, +1)});
    REQUIRE(errs.size() == 1);
    CHECK(errs.front().kind == ErrorKind::DisconnectedGraph);
  }
}

TEST_CASE("sigma and tau coding") {
  SECTION("one plus loop") {
    Gos g = make_loop(+1);
    CHECK(g.sigma().to_string() == "(1 2)");
    CHECK(g.tau().to_string() == "(1 2)");
  }
  SECTION("theta graph") {
    Gos g = make_theta("crossed");
    CHECK(g.sigma().to_string() == "(1 2 3)(4 5 6)");
    CHECK(g.tau().to_string() == "(1 4)(2 5)(3 6)");
  }
  SECTION("two-rung ladder has blocks of two") {
    Gos g = make_ladder(1 + 1);
    CHECK(g.sigma().to_string() == "(1 2)(3 4)(5 6)(7 8)");
    CHECK(g.tau().cycles().size() == 4);
  }
}

TEST_CASE("from_triple") {
  SECTION("round trip through the coding") {
    std::mt19937 rng(20240901);
    for (int i = 0; i < 200; ++i) {
      Gos g = testing::random_gos(rng, 12, 2);
      CHECK(from_triple(g.to_triple(), g.min_valency()) == g);
    }
  }
  SECTION("theta by hand") {
    PermutationTriple t;
    t.sigma = Permutation::from_images({2, 3, 1, 5, 6, 4});
    t.tau = Permutation::from_images({4, 5, 6, 1, 2, 3});
    t.eps = {+1, +1, +1};
    Gos g = from_triple(t);
    CHECK(g == make_theta("crossed"));
  }
  SECTION("non-contiguous sigma cycle is rejected") {
    PermutationTriple t;
    t.sigma = Permutation::from_images({3, 4, 1, 2});  // (1 3)(2 4)
    t.tau = Permutation::from_images({2, 1, 4, 3});
    t.eps = {+1, +1};
    REQUIRE_THROWS_AS(from_triple(t), ValidationFailure);
  }
}

TEST_CASE("rank") {
  CHECK(make_loop(+1).rank() == 1);
  CHECK(make_theta().rank() == 2);
  CHECK(make_petersen().rank() == 6);  // trivalent on 10 vertices
}

TEST_CASE("flip_vertex") {
  SECTION("flipping negates incident non-loop edges") {
    Gos g = make_theta("planar");
    Gos f = flip_vertex(g, 1);
    for (const Edge& e : f.edges()) CHECK(e.sign == -1);
  }
  SECTION("loops keep their signature") {
    Gos g = make_loop(+1);
    Gos f = flip_vertex(g, 1);
    CHECK(f.edges().front().sign == +1);
  }
  SECTION("involution") {
    std::mt19937 rng(7);
    for (int i = 0; i < 100; ++i) {
      Gos g = testing::random_gos(rng, 12, 2);
      std::uniform_int_distribution<VertexIndex> pick(1, g.vertex_count());
      VertexIndex v = pick(rng);
      Gos ff = flip_vertex(flip_vertex(g, v), v);
      CHECK(ff == g);
      CHECK(flip_vertex(g, v).rank() == g.rank());
    }
  }
}

TEST_CASE("stub bookkeeping stays consistent") {
  std::mt19937 rng(99);
  for (int i = 0; i < 100; ++i) {
    Gos g = testing::random_gos(rng, 12, 2);
    std::uint64_t total = 0;
    for (VertexIndex v = 1; v <= g.vertex_count(); ++v) total += g.valency(v);
    CHECK(total == 2 * g.edge_count());
    // sigma tau is a permutation: composing stays within {1..2E}
    auto st = g.sigma().then(g.tau());
    CHECK(st.size() == g.stub_count());
  }
}

TEST_CASE("ladder family counts") {
  Gos l2 = make_ladder(2);
  CHECK(l2.vertex_count() == 4);
  CHECK(l2.edge_count() == 4);
  CHECK(l2.rank() == 1);

  Gos l5 = make_ladder(5);
  CHECK(l5.vertex_count() == 10);
  CHECK(l5.edge_count() == 13);
  CHECK(l5.rank() == 4);

  Gos p = make_petersen();
  CHECK(p.vertex_count() == 10);
  CHECK(p.edge_count() == 15);
}
