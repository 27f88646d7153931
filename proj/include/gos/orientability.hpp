#pragma once

#include <cstdint>
#include <deque>
#include <utility>
#include <vector>

#include "gos/core.hpp"
#include "gos/errors.hpp"

namespace gos {

// A maximal (spanning) tree of the underlying graph: V-1 tree edges plus the
// r = E-V+1 complement edges {alpha_1, ..., alpha_r}.
struct SpanningTree {
  std::vector<std::uint32_t> tree_edges;        // edge indices, ascending
  std::vector<std::uint32_t> complement_edges;  // edge indices, ascending
};

// Deterministic maximal tree: scan edges in canonical (lowest-label-first)
// order, keep each edge that connects two components.
inline SpanningTree spanning_tree(const Gos& g) {
  SpanningTree t;
  std::vector<std::uint32_t> parent(g.vertex_count());
  for (std::uint32_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::uint32_t i = 0; i < g.edge_count(); ++i) {
    std::uint32_t u = find(g.vertex_of(g.edge(i).a) - 1);
    std::uint32_t v = find(g.vertex_of(g.edge(i).b) - 1);
    if (u != v) {
      parent[u] = v;
      t.tree_edges.push_back(i);
    } else {
      t.complement_edges.push_back(i);
    }
  }
  return t;
}

namespace detail {

// Vertex colouring by tree propagation: colour(root)=+1 and every tree edge
// satisfies sign = colour(u) * colour(v). Equivalent to tracing minus-counts
// along tree paths, in O(E).
inline std::vector<int> tree_colouring(const Gos& g, const SpanningTree& t) {
  std::vector<std::vector<std::pair<VertexIndex, int>>> adj(g.vertex_count() + 1);
  for (auto ei : t.tree_edges) {
    const Edge& e = g.edge(ei);
    VertexIndex u = g.vertex_of(e.a), v = g.vertex_of(e.b);
    adj[u].push_back({v, e.sign});
    adj[v].push_back({u, e.sign});
  }
  std::vector<int> colour(g.vertex_count() + 1, 0);
  std::deque<VertexIndex> queue{1};
  colour[1] = +1;
  while (!queue.empty()) {
    VertexIndex u = queue.front();
    queue.pop_front();
    for (auto [v, sign] : adj[u])
      if (colour[v] == 0) {
        colour[v] = sign * colour[u];
        queue.push_back(v);
      }
  }
  return colour;
}

}  // namespace detail

// Parity of the number of minus signatures along the unique circuit in
// T + alpha (the complement edge alpha included). Even = "orientable type".
// A minus loop is an odd circuit all by itself.
inline int cycle_parity(const Gos& g, const SpanningTree& t, std::uint32_t complement_edge) {
  auto colour = detail::tree_colouring(g, t);
  const Edge& e = g.edge(complement_edge);
  VertexIndex u = g.vertex_of(e.a), v = g.vertex_of(e.b);
  // minus-count parity along the tree path u..v equals [colour(u) != colour(v)]
  int parity = (colour[u] != colour[v]) ? 1 : 0;
  if (e.sign < 0) parity ^= 1;
  return parity;
}

// Orientable iff every complement circuit has even minus-parity; independent
// of the tree choice.
inline bool is_orientable(const Gos& g, const SpanningTree& t) {
  auto colour = detail::tree_colouring(g, t);
  for (auto ei : t.complement_edges) {
    const Edge& e = g.edge(ei);
    if (e.sign != colour[g.vertex_of(e.a)] * colour[g.vertex_of(e.b)]) return false;
  }
  return true;
}

inline bool is_orientable(const Gos& g) { return is_orientable(g, spanning_tree(g)); }

// Flips turning an orientable GOS into an all-plus one: walk the tree from
// the root and flip every vertex whose tree-propagated colour is -1. Every
// edge then carries sign colour(u)*colour(v)*sign = +1.
struct Normalization {
  Gos gos;
  std::vector<VertexIndex> flips;
};

inline Normalization normalize_all_plus(const Gos& g) {
  SpanningTree t = spanning_tree(g);
  if (!is_orientable(g, t))
    throw GosError(ErrorKind::NotOrientable, "cannot normalize a non-orientable GOS to all-plus");
  auto colour = detail::tree_colouring(g, t);
  Normalization out{g, {}};
  for (VertexIndex v = 1; v <= g.vertex_count(); ++v)
    if (colour[v] < 0) {
      out.gos = flip_vertex(out.gos, v);
      out.flips.push_back(v);
    }
  return out;
}

}  // namespace gos
