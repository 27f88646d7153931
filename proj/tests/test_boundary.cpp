#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "gos/boundary.hpp"
#include "gos/families.hpp"
#include "test_helpers.hpp"

using namespace gos;

TEST_CASE("vertex move") {
  Gos g = make_theta();  // trivalent
  CHECK(vertex_move(g, {1, 0, +1}) == Counter{1, 1, -1});
  CHECK(vertex_move(g, {1, 1, -1}) == Counter{1, 0, +1});  // involution of the previous
  CHECK(vertex_move(g, {2, 0, -1}) == Counter{2, 2, +1});  // k-1 mod 3
}

TEST_CASE("edge move") {
  SECTION("plus edge") {
    // crossed theta: edge (2,5) joins vertex 1 slot 1 to vertex 2 slot 1
    Gos g = make_theta("crossed");
    CHECK(edge_move(g, {1, 1, +1}) == Counter{2, 1, -1});
  }
  SECTION("minus edge flips the side") {
    Gos g = make_theta("crossed", {+1, -1, +1});
    CHECK(edge_move(g, {1, 1, +1}) == Counter{2, 1, +1});
  }
  SECTION("involution") {
    std::mt19937 rng(31);
    for (int i = 0; i < 50; ++i) {
      Gos g = testing::random_gos(rng, 12, 2);
      for (Stub s = 1; s <= g.stub_count(); ++s) {
        Counter c{g.vertex_of(s), g.slot_of(s), (rng() & 1) ? +1 : -1};
        CHECK(edge_move(g, edge_move(g, c)) == c);
        CHECK(vertex_move(g, vertex_move(g, c)) == c);
      }
    }
  }
}

TEST_CASE("boundary components of the bands") {
  SECTION("plus loop: annulus, two piles of two") {
    auto piles = boundary_components(make_loop(+1));
    REQUIRE(piles.size() == 2);
    CHECK(piles[0].size() == 2);
    CHECK(piles[1].size() == 2);
  }
  SECTION("minus loop: Moebius band, one pile of four") {
    auto piles = boundary_components(make_loop(-1));
    REQUIRE(piles.size() == 1);
    CHECK(piles[0].size() == 4);
  }
}

TEST_CASE("theta boundary counts") {
  CHECK(boundary_count(make_theta("planar")) == 3);
  CHECK(boundary_count(make_theta("crossed")) == 1);
}

TEST_CASE("ladder boundary counts from the figure-family table") {
  CHECK(boundary_count(make_ladder(4)) == 2);
  CHECK(boundary_count(make_ladder(5)) == 1);
}

TEST_CASE("pile bookkeeping") {
  std::mt19937 rng(808);
  for (int i = 0; i < 200; ++i) {
    Gos g = testing::random_gos(rng, 12, 2);
    auto piles = boundary_components(g);
    std::size_t total = 0;
    for (const auto& pile : piles) {
      CHECK(pile.size() % 2 == 0);  // every pile is even
      total += pile.size();
    }
    CHECK(total == 4u * g.edge_count());
    CHECK(piles.size() == boundary_count(g));
  }
}

TEST_CASE("all-plus oracle: piles match cycles of sigma tau") {
  std::mt19937 rng(909);
  for (int i = 0; i < 300; ++i) {
    Gos g = testing::random_gos(rng, 12, 2, false);
    CHECK(boundary_count(g) == g.sigma().then(g.tau()).cycle_count());
  }
}

TEST_CASE("boundary count is flip-invariant") {
  std::mt19937 rng(1001);
  for (int i = 0; i < 150; ++i) {
    Gos g = testing::random_gos(rng, 12, 2);
    std::uniform_int_distribution<VertexIndex> pick(1, g.vertex_count());
    CHECK(boundary_count(flip_vertex(g, pick(rng))) == boundary_count(g));
  }
}
