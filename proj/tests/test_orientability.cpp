#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "gos/families.hpp"
#include "gos/orientability.hpp"
#include "test_helpers.hpp"

using namespace gos;

namespace {

// Any maximal tree built from a shuffled edge order; for the tree-choice
// invariance property.
SpanningTree random_tree(const Gos& g, std::mt19937& rng) {
  std::vector<std::uint32_t> order(g.edge_count());
  for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  SpanningTree t;
  std::vector<std::uint32_t> parent(g.vertex_count());
  for (std::uint32_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto i : order) {
    auto u = find(g.vertex_of(g.edge(i).a) - 1), v = find(g.vertex_of(g.edge(i).b) - 1);
    if (u != v) {
      parent[u] = v;
      t.tree_edges.push_back(i);
    } else {
      t.complement_edges.push_back(i);
    }
  }
  return t;
}

}  // namespace

TEST_CASE("spanning tree shapes") {
  SECTION("loop: empty tree, loop in complement") {
    auto t = spanning_tree(make_loop(+1));
    CHECK(t.tree_edges.empty());
    CHECK(t.complement_edges.size() == 1);
  }
  SECTION("theta: one tree edge, two complement edges") {
    auto t = spanning_tree(make_theta());
    CHECK(t.tree_edges.size() == 1);
    CHECK(t.complement_edges.size() == 2);
  }
  SECTION("ladder(3): complement size equals rank") {
    Gos g = make_ladder(3);
    auto t = spanning_tree(g);
    CHECK(t.tree_edges.size() == 5);
    CHECK(t.complement_edges.size() == static_cast<std::size_t>(g.rank()));
  }
}

TEST_CASE("cycle parity") {
  SECTION("plus loop is even, minus loop odd") {
    Gos plus = make_loop(+1), minus = make_loop(-1);
    CHECK(cycle_parity(plus, spanning_tree(plus), spanning_tree(plus).complement_edges[0]) == 0);
    CHECK(cycle_parity(minus, spanning_tree(minus), spanning_tree(minus).complement_edges[0]) == 1);
  }
  SECTION("theta with one minus edge: circuit through it is odd") {
    Gos g = make_theta("planar", {+1, +1, -1});
    auto t = spanning_tree(g);
    int odd_count = 0;
    for (auto e : t.complement_edges) odd_count += cycle_parity(g, t, e);
    CHECK(odd_count >= 1);
  }
}

TEST_CASE("is_orientable") {
  CHECK_FALSE(is_orientable(make_loop(-1)));  // Moebius band
  CHECK(is_orientable(make_loop(+1)));
  for (std::uint32_t k = 1; k <= 8; ++k) CHECK(is_orientable(make_ladder(k)));
  CHECK(is_orientable(make_petersen()));  // all-plus, all parities even
}

TEST_CASE("orientability is independent of the spanning tree") {
  std::mt19937 rng(1234);
  for (int i = 0; i < 60; ++i) {
    Gos g = testing::random_gos(rng, 12, 2);
    bool expected = is_orientable(g);
    for (int rep = 0; rep < 10; ++rep)
      CHECK(is_orientable(g, random_tree(g, rng)) == expected);
  }
}

TEST_CASE("orientability is invariant under vertex flips") {
  std::mt19937 rng(555);
  for (int i = 0; i < 100; ++i) {
    Gos g = testing::random_gos(rng, 12, 2);
    std::uniform_int_distribution<VertexIndex> pick(1, g.vertex_count());
    CHECK(is_orientable(flip_vertex(g, pick(rng))) == is_orientable(g));
  }
}

TEST_CASE("all-plus is always orientable") {
  std::mt19937 rng(42);
  for (int i = 0; i < 60; ++i) CHECK(is_orientable(testing::random_gos(rng, 12, 2, false)));
}

TEST_CASE("normalize_all_plus") {
  SECTION("already all-plus: identity flip set") {
    Gos g = make_theta("crossed");
    auto n = normalize_all_plus(g);
    CHECK(n.flips.empty());
    CHECK(n.gos == g);
  }
  SECTION("ladder(2) normalizes to an all-plus GOS") {
    auto n = normalize_all_plus(make_ladder(2));
    CHECK_FALSE(n.flips.empty());
    CHECK(n.gos.all_plus());
    CHECK(is_orientable(n.gos));
  }
  SECTION("non-orientable input refused") {
    REQUIRE_THROWS_AS(normalize_all_plus(make_loop(-1)), GosError);
  }
  SECTION("returned flips reproduce the output exactly") {
    std::mt19937 rng(77);
    int done = 0;
    while (done < 40) {
      Gos g = testing::random_gos(rng, 12, 2);
      if (!is_orientable(g)) continue;
      ++done;
      auto n = normalize_all_plus(g);
      Gos replay = g;
      for (auto v : n.flips) replay = flip_vertex(replay, v);
      CHECK(replay == n.gos);
      CHECK(n.gos.all_plus());
    }
  }
}
