#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "gos/classify.hpp"
#include "gos/families.hpp"
#include "test_helpers.hpp"

using namespace gos;

TEST_CASE("bands") {
  CHECK(classify(make_loop(+1)) == SurfaceClass{true, 0, 2});   // annulus
  CHECK(classify(make_loop(-1)) == SurfaceClass{false, 1, 1});  // Moebius band
}

TEST_CASE("ladder family table") {
  for (std::uint32_t k = 1; k <= 8; ++k) {
    SurfaceClass s = classify(make_ladder(k));
    CHECK(s.orientable);
    if (k % 2 == 0) {
      CHECK(s.genus == k / 2 - 1);
      CHECK(s.boundary == 2);
    } else {
      CHECK(s.genus == k / 2);
      CHECK(s.boundary == 1);
    }
  }
}

TEST_CASE("parity_check") {
  Gos moebius = make_loop(-1);
  CHECK(parity_check(classify(moebius), moebius));  // E-V-b = -1 odd, non-orientable
  Gos annulus = make_loop(+1);
  CHECK(parity_check(classify(annulus), annulus));  // E-V-b = -2 even, vacuous
}

TEST_CASE("homology profiles") {
  HomologyProfile orientable2 = homology({true, 2, 1});
  CHECK(orientable2.h0 == 1);
  CHECK(orientable2.h1_rank == 4);
  CHECK_FALSE(orientable2.h1_torsion);
  CHECK(orientable2.h2 == 1);

  HomologyProfile non3 = homology({false, 3, 1});
  CHECK(non3.h1_rank == 2);
  CHECK(non3.h1_torsion);
  CHECK(non3.h2 == 0);

  HomologyProfile sphere = homology({true, 0, 1});
  CHECK(sphere.h1_rank == 0);
  CHECK(sphere.h2 == 1);
}

TEST_CASE("cross validation") {
  SECTION("petersen") {
    auto report = cross_validate(make_petersen());
    for (const auto& check : report) {
      INFO(check.name << ": " << check.detail);
      CHECK(check.pass);
    }
  }
  SECTION("random suite") {
    std::mt19937 rng(161803);
    for (int i = 0; i < 400; ++i) {
      Gos g = testing::random_gos(rng, 12, 2);
      for (const auto& check : cross_validate(g)) {
        INFO(check.name << ": " << check.detail);
        CHECK(check.pass);
      }
    }
  }
  SECTION("ladder(6)") {
    CHECK(classify(make_ladder(6)) == SurfaceClass{true, 2, 2});
    for (const auto& check : cross_validate(make_ladder(6))) CHECK(check.pass);
  }
}

TEST_CASE("classification invariants") {
  std::mt19937 rng(271828);
  for (int i = 0; i < 300; ++i) {
    Gos g = testing::random_gos(rng, 12, 2);
    SurfaceClass s = classify(g);

    // Euler relation, algebraically equivalent to the genus formula
    long lhs = static_cast<long>(g.vertex_count()) - g.edge_count() + s.boundary;
    long rhs = s.orientable ? 2 - 2L * s.genus : 2 - static_cast<long>(s.genus);
    CHECK(lhs == rhs);
    CHECK(parity_check(s, g));

    // never the closed disc
    CHECK_FALSE((s.orientable && s.genus == 0 && s.boundary == 1));

    // flip invariance
    std::uniform_int_distribution<VertexIndex> pick(1, g.vertex_count());
    CHECK(classify(flip_vertex(g, pick(rng))) == s);
  }
}

TEST_CASE("classify is invariant under all-plus normalization") {
  std::mt19937 rng(314159);
  int done = 0;
  while (done < 120) {
    Gos g = testing::random_gos(rng, 12, 2);
    if (!is_orientable(g)) continue;
    ++done;
    CHECK(classify(normalize_all_plus(g).gos) == classify(g));
  }
}
