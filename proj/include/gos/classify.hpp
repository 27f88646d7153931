#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "gos/boundary.hpp"
#include "gos/builder.hpp"
#include "gos/core.hpp"
#include "gos/errors.hpp"
#include "gos/orientability.hpp"

namespace gos {

// Full homeomorphism type of the surface: orientability, genus (g if
// orientable, crosscap number h if not) and boundary circle count.
struct SurfaceClass {
  bool orientable;
  std::uint32_t genus;
  std::uint32_t boundary;

  bool operator==(const SurfaceClass& o) const {
    return orientable == o.orientable && genus == o.genus && boundary == o.boundary;
  }
  bool operator!=(const SurfaceClass& o) const { return !(*this == o); }
  bool operator<(const SurfaceClass& o) const {
    return std::tuple(!orientable, genus, boundary) <
           std::tuple(!o.orientable, o.genus, o.boundary);
  }
};

inline std::string to_string(const SurfaceClass& s) {
  std::string out = s.orientable ? "orientable genus " : "non-orientable genus ";
  out += std::to_string(s.genus);
  out += ", ";
  out += std::to_string(s.boundary);
  out += s.boundary == 1 ? " boundary component" : " boundary components";
  return out;
}

// Homology of the closed surface obtained by capping every boundary circle
// with a disc.
struct HomologyProfile {
  std::uint32_t h0;
  std::uint32_t h1_rank;
  bool h1_torsion;  // one Z/2 summand in the non-orientable case
  std::uint32_t h2;
};

inline HomologyProfile homology(const SurfaceClass& s) {
  if (s.orientable) return {1, 2 * s.genus, false, 1};
  return {1, s.genus - 1, true, 0};
}

// b from the boundary game (valid down to valency 1), orientability from the
// spanning-tree parity test, genus from r, b and orientability:
//   orientable:      g = (r - b + 1) / 2
//   non-orientable:  h =  r - b + 1
// When every vertex is at least trivalent the incremental builder runs too
// and must agree; disagreement is an internal error, never a property of the
// input.
inline SurfaceClass classify(const Gos& g) {
  const int r = g.rank();
  const std::uint32_t b = boundary_count(g);
  const bool orientable = is_orientable(g);

  const int reduced = r - static_cast<int>(b) + 1;
  SurfaceClass s{};
  s.orientable = orientable;
  s.boundary = b;
  if (orientable) {
    if (reduced < 0 || reduced % 2 != 0)
      throw InternalInconsistency("orientable surface with r - b + 1 = " +
                                  std::to_string(reduced));
    s.genus = static_cast<std::uint32_t>(reduced / 2);
  } else {
    if (reduced < 1)
      throw InternalInconsistency("non-orientable surface with r - b + 1 = " +
                                  std::to_string(reduced));
    s.genus = static_cast<std::uint32_t>(reduced);
  }

  if (g.min_valency() >= 3) {
    BuildState built = build(g);
    if (built.boundary_count() != b || built.orientable() != orientable)
      throw InternalInconsistency("builder found (b=" + std::to_string(built.boundary_count()) +
                                  ", orientable=" + std::to_string(built.orientable()) +
                                  ") against (b=" + std::to_string(b) +
                                  ", orientable=" + std::to_string(orientable) + ")");
  }
  return s;
}

// Consistency with the parity criterion: (E - V - b) odd forces the
// non-orientable verdict. Always true of a correct classification; exposed
// as a self-test.
inline bool parity_check(const SurfaceClass& s, const Gos& g) {
  long diff = static_cast<long>(g.edge_count()) - g.vertex_count() - s.boundary;
  bool odd = ((diff % 2) + 2) % 2 == 1;
  return !odd || !s.orientable;
}

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

// Runs every applicable algorithm and records agreement:
//  - boundary game vs incremental builder (valency >= 3 only)
//  - spanning-tree orientability vs builder orientability
//  - parity criterion
//  - Euler relation V - E + b = 2 - 2g (orientable) or 2 - h (non-orientable)
//  - all-plus oracle: b equals the cycle count of sigma*tau
inline std::vector<CheckResult> cross_validate(const Gos& g) {
  std::vector<CheckResult> out;
  const std::uint32_t b = boundary_count(g);
  const bool orientable = is_orientable(g);
  const int r = g.rank();
  const int reduced = r - static_cast<int>(b) + 1;
  SurfaceClass s{orientable, static_cast<std::uint32_t>(orientable ? reduced / 2 : reduced), b};

  if (g.min_valency() >= 3) {
    BuildState built = build(g);
    out.push_back({"builder-boundary-count", built.boundary_count() == b,
                   "builder b=" + std::to_string(built.boundary_count()) +
                       " game b=" + std::to_string(b)});
    out.push_back({"builder-orientability", built.orientable() == orientable,
                   std::string("builder=") + (built.orientable() ? "orientable" : "non-orientable") +
                       " tree=" + (orientable ? "orientable" : "non-orientable")});
  } else {
    out.push_back({"builder-skipped", true, "some vertex has valency < 3"});
  }

  out.push_back({"parity", parity_check(s, g),
                 "E-V-b = " + std::to_string(static_cast<long>(g.edge_count()) - g.vertex_count() - b)});

  long euler_lhs = static_cast<long>(g.vertex_count()) - g.edge_count() + b;
  long euler_rhs = s.orientable ? 2 - 2L * s.genus : 2 - static_cast<long>(s.genus);
  out.push_back({"euler", euler_lhs == euler_rhs,
                 "V-E+b = " + std::to_string(euler_lhs) + " expected " + std::to_string(euler_rhs)});

  if (g.all_plus()) {
    std::size_t faces = g.sigma().then(g.tau()).cycle_count();
    out.push_back({"sigma-tau-oracle", faces == b,
                   "cycles(sigma tau) = " + std::to_string(faces) + ", b = " + std::to_string(b)});
  }
  return out;
}

}  // namespace gos
