#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gos/core.hpp"
#include "gos/errors.hpp"

namespace gos {

// Built-in graph families. Each generator fixes a deterministic canonical
// labelling so runs are reproducible.

// Single vertex with one loop: the annulus (+) or the Moebius band (-).
inline Gos make_loop(int sign) {
  return Gos::create({2}, {Edge(1, 2, sign)});
}

// Two trivalent vertices joined by three parallel edges. The pairing picks
// the embedding: "planar" nests the strips (three boundary circles, genus 0),
// "crossed" is the nonplanar pairing (one boundary circle, genus 1 when all
// signatures are +).
inline Gos make_theta(const std::string& pairing = "planar",
                      std::vector<int> signs = {+1, +1, +1}) {
  if (signs.size() != 3)
    throw GosError(ErrorKind::BadParameter, "theta takes exactly 3 edge signs");
  std::vector<Edge> edges;
  if (pairing == "planar")
    edges = {Edge(1, 4, signs[0]), Edge(2, 6, signs[1]), Edge(3, 5, signs[2])};
  else if (pairing == "crossed")
    edges = {Edge(1, 4, signs[0]), Edge(2, 5, signs[1]), Edge(3, 6, signs[2])};
  else
    throw GosError(ErrorKind::BadParameter, "theta pairing must be planar or crossed");
  return Gos::create({3, 3}, std::move(edges));
}

// The k-rung ladder: two horizontal rows of k vertices (top t1..tk, bottom
// b1..bk), k-1 plus edges along each row, and k vertical rungs tj-bj all with
// minus signature. Vertex orientations are the anticlockwise ones induced by
// the planar drawing; row ends have valency 2, interior vertices valency 3.
// k = 1 degenerates to a single strip between two 1-valent vertices, which is
// the one place the valency-2 floor is deliberately relaxed.
inline Gos make_ladder(std::uint32_t k) {
  if (k < 1) throw GosError(ErrorKind::BadParameter, "ladder needs k >= 1");
  const std::uint32_t V = 2 * k;
  // Vertex order: t1..tk, b1..bk.
  // Anticlockwise stub order: interior top (E, W, S), top ends (E,S)/(W,S);
  // interior bottom (E, N, W), bottom ends (E,N)/(N,W).
  std::vector<std::uint32_t> valencies(V);
  auto val_of = [&](std::uint32_t col) { return (k == 1) ? 1u : (col == 0 || col == k - 1) ? 2u : 3u; };
  for (std::uint32_t j = 0; j < k; ++j) valencies[j] = valencies[k + j] = val_of(j);

  std::vector<Stub> offset(V + 1);
  offset[0] = 1;
  for (std::uint32_t v = 0; v < V; ++v) offset[v + 1] = offset[v] + valencies[v];

  // Stub positions by compass direction within each block.
  auto top_east = [&](std::uint32_t j) { return offset[j]; };                       // j < k-1
  auto top_west = [&](std::uint32_t j) { return j == 0 ? offset[j] : (j == k - 1 ? offset[j] : offset[j] + 1); };
  auto top_south = [&](std::uint32_t j) { return offset[j + 1] - 1; };              // always last
  auto bot_east = [&](std::uint32_t j) { return offset[k + j]; };                   // j < k-1
  auto bot_north = [&](std::uint32_t j) { return (j == k - 1 || k == 1) ? offset[k + j] : offset[k + j] + 1; };
  auto bot_west = [&](std::uint32_t j) { return offset[k + j + 1] - 1; };           // j > 0: last

  std::vector<Edge> edges;
  for (std::uint32_t j = 0; j + 1 < k; ++j) edges.emplace_back(top_east(j), top_west(j + 1), +1);
  for (std::uint32_t j = 0; j + 1 < k; ++j) edges.emplace_back(bot_east(j), bot_west(j + 1), +1);
  for (std::uint32_t j = 0; j < k; ++j) edges.emplace_back(top_south(j), bot_north(j), -1);
  return Gos::create(std::move(valencies), std::move(edges), k == 1 ? 1u : 2u);
}

// Petersen graph: outer pentagon O1..O5 (vertices 1..5), inner pentagram
// I1..I5 (vertices 6..10), connectors Oj-Ij. Trivalent, V=10, E=15, r=6.
// Edge order: outer 0..4, inner 5..9, connectors 10..14.
// orientation_bits[v]: reverse the cyclic stub order at vertex v+1.
// signature_bits follow the edge order above.
inline Gos make_petersen(const std::vector<bool>& orientation_bits = {},
                         const std::vector<int>& signature_bits = {}) {
  if (!orientation_bits.empty() && orientation_bits.size() != 10)
    throw GosError(ErrorKind::BadParameter, "petersen takes 10 orientation bits");
  if (!signature_bits.empty() && signature_bits.size() != 15)
    throw GosError(ErrorKind::BadParameter, "petersen takes 15 edge signs");

  // Stub slots: outer Oj: [0]=to O(j+1), [1]=to O(j-1), [2]=to Ij.
  //             inner Ij: [0]=to Oj, [1]=to I(j+2), [2]=to I(j-2).
  auto slot = [&](std::uint32_t vertex0, std::uint32_t k) -> Stub {
    std::uint32_t kk = k;
    if (!orientation_bits.empty() && orientation_bits[vertex0]) kk = (3 - k) % 3;
    return static_cast<Stub>(3 * vertex0 + kk + 1);
  };
  auto sign_of = [&](std::size_t e) { return signature_bits.empty() ? +1 : signature_bits[e]; };

  std::vector<Edge> edges;
  for (std::uint32_t j = 0; j < 5; ++j)  // outer cycle
    edges.emplace_back(slot(j, 0), slot((j + 1) % 5, 1), sign_of(j));
  for (std::uint32_t j = 0; j < 5; ++j)  // inner pentagram
    edges.emplace_back(slot(5 + j, 1), slot(5 + (j + 2) % 5, 2), sign_of(5 + j));
  for (std::uint32_t j = 0; j < 5; ++j)  // connectors
    edges.emplace_back(slot(j, 2), slot(5 + j, 0), sign_of(10 + j));
  return Gos::create(std::vector<std::uint32_t>(10, 3), std::move(edges));
}

// Complete graph K_n, all plus, stub order at each vertex by increasing
// neighbour index.
inline Gos make_complete(std::uint32_t n) {
  if (n < 3) throw GosError(ErrorKind::BadParameter, "complete needs n >= 3");
  std::vector<std::uint32_t> valencies(n, n - 1);
  auto stub_toward = [&](std::uint32_t u, std::uint32_t v) -> Stub {
    // 0-based vertices; slot of u's stub toward v among u's n-1 neighbours.
    std::uint32_t k = v < u ? v : v - 1;
    return static_cast<Stub>(u * (n - 1) + k + 1);
  };
  std::vector<Edge> edges;
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v)
      edges.emplace_back(stub_toward(u, v), stub_toward(v, u), +1);
  return Gos::create(std::move(valencies), std::move(edges));
}

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(s.substr(start));
      break;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return parts;
}

inline std::vector<int> parse_signs(const std::string& s, std::size_t expect,
                                    const std::string& what) {
  if (s.size() != expect)
    throw GosError(ErrorKind::BadParameter, what + " wants " + std::to_string(expect) + " signs");
  std::vector<int> out;
  for (char c : s) {
    if (c == '+')
      out.push_back(+1);
    else if (c == '-')
      out.push_back(-1);
    else
      throw GosError(ErrorKind::BadParameter, "sign string may contain only + and -");
  }
  return out;
}

}  // namespace detail

// Family specs in `name:params` shorthand:
//   loop[:+|-]                    theta[:planar|crossed[:+-+]]
//   ladder:K                      petersen[:orient10bits[:signs15]]
//   complete:N
inline Gos generate_family(const std::string& spec) {
  auto parts = detail::split(spec, ':');
  const std::string& name = parts[0];
  auto argc = parts.size() - 1;
  try {
    if (name == "loop") {
      int sign = +1;
      if (argc >= 1) sign = detail::parse_signs(parts[1], 1, "loop")[0];
      return make_loop(sign);
    }
    if (name == "theta") {
      std::string pairing = argc >= 1 ? parts[1] : "planar";
      std::vector<int> signs = {+1, +1, +1};
      if (argc >= 2) signs = detail::parse_signs(parts[2], 3, "theta");
      return make_theta(pairing, signs);
    }
    if (name == "ladder") {
      if (argc < 1) throw GosError(ErrorKind::BadParameter, "ladder wants a rung count, e.g. ladder:4");
      long k = std::stol(parts[1]);
      if (k < 1) throw GosError(ErrorKind::BadParameter, "ladder needs k >= 1");
      return make_ladder(static_cast<std::uint32_t>(k));
    }
    if (name == "petersen") {
      std::vector<bool> orient;
      std::vector<int> signs;
      if (argc >= 1 && !parts[1].empty()) {
        if (parts[1].size() != 10)
          throw GosError(ErrorKind::BadParameter, "petersen wants 10 orientation bits");
        for (char c : parts[1]) {
          if (c != '0' && c != '1')
            throw GosError(ErrorKind::BadParameter, "orientation bits are 0 or 1");
          orient.push_back(c == '1');
        }
      }
      if (argc >= 2) signs = detail::parse_signs(parts[2], 15, "petersen");
      return make_petersen(orient, signs);
    }
    if (name == "complete") {
      if (argc < 1) throw GosError(ErrorKind::BadParameter, "complete wants a vertex count, e.g. complete:4");
      long n = std::stol(parts[1]);
      if (n < 3) throw GosError(ErrorKind::BadParameter, "complete needs n >= 3");
      return make_complete(static_cast<std::uint32_t>(n));
    }
  } catch (const std::invalid_argument&) {
    throw GosError(ErrorKind::BadParameter, "malformed number in family spec '" + spec + "'");
  } catch (const std::out_of_range&) {
    throw GosError(ErrorKind::BadParameter, "number out of range in family spec '" + spec + "'");
  }
  throw GosError(ErrorKind::UnknownFamily, "no family named '" + name + "'");
}

}  // namespace gos
