#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gos/core.hpp"
#include "gos/errors.hpp"

namespace gos {

// One counter of the follow-the-boundary game: the side of a stub.
// side +1 = left, -1 = right. There are 4E counters in total.
struct Counter {
  VertexIndex vertex;
  std::uint32_t slot;  // position in Z/w within the vertex's cyclic order
  int side;

  bool operator==(const Counter& o) const {
    return vertex == o.vertex && slot == o.slot && side == o.side;
  }
};

inline std::string to_string(const Counter& c) {
  return "(" + std::to_string(c.vertex) + "," + std::to_string(c.slot) + "," +
         (c.side > 0 ? "+" : "-") + ")";
}

// (i,k,d) -> (i, k+d, -d). Involution.
inline Counter vertex_move(const Gos& g, const Counter& c) {
  std::uint32_t w = g.valency(c.vertex);
  std::uint32_t k = (c.slot + static_cast<std::uint32_t>(c.side > 0 ? 1 : w - 1)) % w;
  return {c.vertex, k, -c.side};
}

// Across the edge at stub (i,k) with signature eps: (i,k,d) -> (j,m,-eps*d).
// Involution since eps^2 = 1.
inline Counter edge_move(const Gos& g, const Counter& c) {
  Stub s = g.stub_at(c.vertex, c.slot);
  Stub t = g.partner(s);
  return {g.vertex_of(t), g.slot_of(t), -g.sign_at(s) * c.side};
}

namespace detail {

// Counters encoded as 0..4E-1: 2*(stub-1) + (side<0).
inline std::uint32_t counter_code(const Gos& g, const Counter& c) {
  return 2 * (g.stub_at(c.vertex, c.slot) - 1) + (c.side < 0 ? 1u : 0u);
}

inline Counter counter_decode(const Gos& g, std::uint32_t code) {
  Stub s = code / 2 + 1;
  return {g.vertex_of(s), g.slot_of(s), (code % 2) ? -1 : +1};
}

// Walks every orbit of the alternating game, calling sink(pile) with the
// counter codes of each pile in traversal order. Each orbit is started from
// its lowest unvisited counter with an edge-move and alternates strictly.
template <typename Sink>
void walk_orbits(const Gos& g, Sink&& sink) {
  const std::uint32_t n = 4 * g.edge_count();
  std::vector<bool> visited(n, false);
  std::vector<std::uint32_t> pile;
  for (std::uint32_t start = 0; start < n; ++start) {
    if (visited[start]) continue;
    pile.clear();
    Counter c = counter_decode(g, start);
    bool edge_next = true;
    std::uint32_t code = start;
    do {
      if (visited[code])
        throw InternalInconsistency("boundary orbit revisited counter " + to_string(c));
      visited[code] = true;
      pile.push_back(code);
      c = edge_next ? edge_move(g, c) : vertex_move(g, c);
      edge_next = !edge_next;
      code = counter_code(g, c);
    } while (code != start || !edge_next);
    sink(pile);
  }
}

}  // namespace detail

// Partition of the 4E counters into piles; each pile is one boundary circle
// of the surface, listed in traversal order. Pile sizes are even and sum to 4E.
inline std::vector<std::vector<Counter>> boundary_components(const Gos& g) {
  std::vector<std::vector<Counter>> piles;
  detail::walk_orbits(g, [&](const std::vector<std::uint32_t>& codes) {
    std::vector<Counter> pile;
    pile.reserve(codes.size());
    for (auto code : codes) pile.push_back(detail::counter_decode(g, code));
    piles.push_back(std::move(pile));
  });
  return piles;
}

inline std::uint32_t boundary_count(const Gos& g) {
  std::uint32_t b = 0;
  detail::walk_orbits(g, [&](const std::vector<std::uint32_t>&) { ++b; });
  return b;
}

// Which pile each counter belongs to, by counter code; used for rendering.
inline std::vector<std::uint32_t> pile_index_by_counter(const Gos& g) {
  std::vector<std::uint32_t> index(4 * g.edge_count(), 0);
  std::uint32_t pile = 0;
  detail::walk_orbits(g, [&](const std::vector<std::uint32_t>& codes) {
    for (auto code : codes) index[code] = pile;
    ++pile;
  });
  return index;
}

}  // namespace gos
