#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "gos/errors.hpp"
#include "gos/permutation.hpp"

namespace gos {

using VertexIndex = std::uint32_t;  // 1-based: {1, ..., V}

// Edge joining two distinct stubs; sign +1 = straight strip join, -1 = flip
// join. A loop has both stubs at the same vertex.
struct Edge {
  Stub a = 0;
  Stub b = 0;
  int sign = +1;

  Edge() = default;
  Edge(Stub s, Stub t, int sgn) : a(std::min(s, t)), b(std::max(s, t)), sign(sgn) {}

  bool operator==(const Edge& o) const { return a == o.a && b == o.b && sign == o.sign; }
};

// Coding of a GOS as two permutations plus the signature map.
// sigma: one cycle per vertex, each cycle a contiguous increasing label block.
// tau: fixed-point-free involution pairing stubs into edges.
// eps[k]: sign of the k-th transposition of tau, transpositions ordered by
// smaller element (the same order Gos stores its edges in).
struct PermutationTriple {
  Permutation sigma;
  Permutation tau;
  std::vector<int> eps;
};

// A GOS in canonical labelling: vertex i owns the contiguous stub block
// following vertex i-1's, and the cyclic (anticlockwise) order at each vertex
// coincides with increasing label order within the block. Immutable after
// construction; all operations on it are pure functions.
class Gos {
 public:
  // min_valency: the validation floor. 2 is the standard floor; 1 is allowed
  // only for the degenerate generated families (a single strip between two
  // 1-valent endpoints is still a perfectly good surface).
  static Gos create(std::vector<std::uint32_t> valencies, std::vector<Edge> edges,
                    std::uint32_t min_valency = 2) {
    auto errs = check(valencies, edges, min_valency);
    if (!errs.empty()) throw ValidationFailure(std::move(errs));
    return Gos(std::move(valencies), std::move(edges));
  }

  // Structural validation with the full error taxonomy; empty result = valid.
  static std::vector<ValidationError> check(const std::vector<std::uint32_t>& valencies,
                                            const std::vector<Edge>& edges,
                                            std::uint32_t min_valency = 2) {
    std::vector<ValidationError> errs;
    if (valencies.empty()) {
      errs.push_back({ErrorKind::BadParameter, "a GOS needs at least one vertex"});
      return errs;
    }
    std::uint64_t total = 0;
    for (std::size_t v = 0; v < valencies.size(); ++v) {
      if (valencies[v] < min_valency)
        errs.push_back({ErrorKind::BadValency,
                        "vertex " + std::to_string(v + 1) + " has valency " +
                            std::to_string(valencies[v]) + " (minimum " +
                            std::to_string(min_valency) + ")"});
      total += valencies[v];
    }
    if (total % 2 != 0) {
      errs.push_back({ErrorKind::LabelGap, "total stub count " + std::to_string(total) +
                                               " is odd; cannot pair all stubs"});
      return errs;
    }
    const Stub n = static_cast<Stub>(total);  // = 2E
    if (edges.size() * 2 != n) {
      errs.push_back({ErrorKind::LabelGap,
                      "edge list pairs " + std::to_string(edges.size() * 2) + " stubs but vertices carry " +
                          std::to_string(n)});
      return errs;
    }
    std::vector<int> uses(n + 1, 0);
    for (const Edge& e : edges) {
      if (e.a == e.b) {
        errs.push_back({ErrorKind::TauFixedPoint,
                        "edge pairs stub " + std::to_string(e.a) + " with itself"});
        continue;
      }
      for (Stub s : {e.a, e.b}) {
        if (s < 1 || s > n)
          errs.push_back({ErrorKind::LabelGap, "edge references stub " + std::to_string(s) +
                                                   " outside {1.." + std::to_string(n) + "}"});
        else if (++uses[s] > 1)
          errs.push_back({ErrorKind::StubReused,
                          "stub " + std::to_string(s) + " appears in more than one edge"});
      }
      if (e.sign != 1 && e.sign != -1)
        errs.push_back({ErrorKind::BadParameter, "edge signature must be +1 or -1"});
    }
    for (Stub s = 1; s <= n; ++s)
      if (uses[s] == 0)
        errs.push_back({ErrorKind::TauFixedPoint, "stub " + std::to_string(s) +
                                                      " is not paired by any edge"});
    if (!errs.empty()) return errs;

    // connectivity over vertices through edges
    std::vector<std::uint32_t> parent(valencies.size());
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](std::uint32_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::vector<std::uint32_t> vtx(n + 1);
    {
      Stub s = 1;
      for (std::size_t v = 0; v < valencies.size(); ++v)
        for (std::uint32_t k = 0; k < valencies[v]; ++k) vtx[s++] = static_cast<std::uint32_t>(v);
    }
    for (const Edge& e : edges) parent[find(vtx[e.a])] = find(vtx[e.b]);
    for (std::size_t v = 1; v < valencies.size(); ++v)
      if (find(0) != find(static_cast<std::uint32_t>(v))) {
        errs.push_back({ErrorKind::DisconnectedGraph,
                        "vertex " + std::to_string(v + 1) + " is not reachable from vertex 1"});
        break;
      }
    return errs;
  }

  std::uint32_t vertex_count() const { return static_cast<std::uint32_t>(valency_.size()); }
  std::uint32_t edge_count() const { return static_cast<std::uint32_t>(edges_.size()); }
  Stub stub_count() const { return static_cast<Stub>(2 * edges_.size()); }

  // rank r = 1 - V + E; the number of independent cycles of the graph.
  int rank() const { return 1 - static_cast<int>(vertex_count()) + static_cast<int>(edge_count()); }

  std::uint32_t valency(VertexIndex v) const { return valency_[v - 1]; }
  std::uint32_t min_valency() const { return *std::min_element(valency_.begin(), valency_.end()); }
  const std::vector<std::uint32_t>& valencies() const { return valency_; }

  // First stub label of vertex v's block.
  Stub block_start(VertexIndex v) const { return offset_[v - 1]; }
  Stub stub_at(VertexIndex v, std::uint32_t slot) const { return offset_[v - 1] + slot; }

  VertexIndex vertex_of(Stub s) const { return stub_vertex_[s]; }
  std::uint32_t slot_of(Stub s) const { return s - offset_[stub_vertex_[s] - 1]; }

  // Cyclic successor / predecessor within the stub's vertex block.
  Stub succ_at_vertex(Stub s) const {
    VertexIndex v = stub_vertex_[s];
    Stub first = offset_[v - 1];
    return first + (s - first + 1) % valency_[v - 1];
  }
  Stub pred_at_vertex(Stub s) const {
    VertexIndex v = stub_vertex_[s];
    Stub first = offset_[v - 1];
    return first + (s - first + valency_[v - 1] - 1) % valency_[v - 1];
  }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::uint32_t index) const { return edges_[index]; }
  std::uint32_t edge_index_of(Stub s) const { return stub_edge_[s]; }

  Stub partner(Stub s) const {
    const Edge& e = edges_[stub_edge_[s]];
    return e.a == s ? e.b : e.a;
  }
  int sign_at(Stub s) const { return edges_[stub_edge_[s]].sign; }

  bool all_plus() const {
    return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.sign > 0; });
  }

  Permutation sigma() const {
    std::vector<Stub> img(stub_count());
    for (Stub s = 1; s <= stub_count(); ++s) img[s - 1] = succ_at_vertex(s);
    return Permutation::from_images(img);
  }

  Permutation tau() const {
    std::vector<Stub> img(stub_count());
    for (Stub s = 1; s <= stub_count(); ++s) img[s - 1] = partner(s);
    return Permutation::from_images(img);
  }

  PermutationTriple to_triple() const {
    PermutationTriple t;
    t.sigma = sigma();
    t.tau = tau();
    t.eps.reserve(edges_.size());
    for (const Edge& e : edges_) t.eps.push_back(e.sign);
    return t;
  }

  bool operator==(const Gos& o) const { return valency_ == o.valency_ && edges_ == o.edges_; }
  bool operator!=(const Gos& o) const { return !(*this == o); }

  // Canonical byte encoding, usable as an ordering / hashing key.
  std::string encode() const {
    std::string out;
    out.reserve(2 * valency_.size() + edges_.size() * 5 + 2);
    auto put = [&out](std::uint32_t x) {
      out.push_back(static_cast<char>(x & 0xff));
      out.push_back(static_cast<char>((x >> 8) & 0xff));
    };
    put(static_cast<std::uint32_t>(valency_.size()));
    for (auto w : valency_) put(w);
    for (const Edge& e : edges_) {
      put(e.a);
      put(e.b);
      out.push_back(e.sign > 0 ? '+' : '-');
    }
    return out;
  }

 private:
  Gos(std::vector<std::uint32_t> valencies, std::vector<Edge> edges)
      : valency_(std::move(valencies)), edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& x, const Edge& y) { return x.a < y.a; });
    offset_.resize(valency_.size() + 1);
    offset_[0] = 1;
    for (std::size_t v = 0; v < valency_.size(); ++v) offset_[v + 1] = offset_[v] + valency_[v];
    stub_vertex_.assign(stub_count() + 1, 0);
    stub_edge_.assign(stub_count() + 1, 0);
    for (VertexIndex v = 1; v <= vertex_count(); ++v)
      for (Stub s = offset_[v - 1]; s < offset_[v]; ++s) stub_vertex_[s] = v;
    for (std::uint32_t i = 0; i < edges_.size(); ++i) {
      stub_edge_[edges_[i].a] = i;
      stub_edge_[edges_[i].b] = i;
    }
  }

  std::vector<std::uint32_t> valency_;
  std::vector<Edge> edges_;        // sorted by smaller stub; each stub in exactly one edge
  std::vector<Stub> offset_;       // offset_[v-1] = first stub of vertex v; offset_[V] = 2E+1
  std::vector<VertexIndex> stub_vertex_;
  std::vector<std::uint32_t> stub_edge_;
};

// Validation of an already-constructed Gos is vacuous by construction; this
// exists so callers holding raw parts can run the taxonomy directly.
inline std::vector<ValidationError> validate(const std::vector<std::uint32_t>& valencies,
                                             const std::vector<Edge>& edges,
                                             std::uint32_t min_valency = 2) {
  return Gos::check(valencies, edges, min_valency);
}

// Reconstructs the unique Gos with the given coding. sigma's cycles must be
// exactly the contiguous label blocks in increasing order; tau must be a
// fixed-point-free involution.
inline Gos from_triple(const PermutationTriple& t, std::uint32_t min_valency = 2) {
  const std::size_t n = t.sigma.size();
  if (t.tau.size() != n)
    throw ValidationFailure({{ErrorKind::BadParameter, "sigma and tau act on different sets"}});

  // Decode vertex blocks from sigma: walk from each block start.
  std::vector<std::uint32_t> valencies;
  std::vector<bool> seen(n + 1, false);
  for (Stub s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    // s must be the smallest label of its cycle and the cycle must be
    // s, s+1, ..., s+w-1 in that order.
    std::uint32_t w = 0;
    Stub x = s;
    do {
      if (x != s + w || x > n)
        throw ValidationFailure({{ErrorKind::LabelGap,
                                  "sigma cycle through " + std::to_string(s) +
                                      " is not a contiguous increasing block"}});
      seen[x] = true;
      ++w;
      x = t.sigma(x);
    } while (x != s);
    valencies.push_back(w);
  }

  std::vector<Edge> edges;
  std::vector<bool> paired(n + 1, false);
  for (Stub s = 1; s <= n; ++s) {
    if (paired[s]) continue;
    Stub p = t.tau(s);
    if (p == s)
      throw ValidationFailure({{ErrorKind::TauFixedPoint,
                                "tau fixes stub " + std::to_string(s)}});
    if (t.tau(p) != s)
      throw ValidationFailure({{ErrorKind::BadParameter, "tau is not an involution"}});
    paired[s] = paired[p] = true;
    edges.emplace_back(s, p, +1);
  }
  if (t.eps.size() != edges.size())
    throw ValidationFailure({{ErrorKind::BadParameter,
                              "eps has " + std::to_string(t.eps.size()) + " entries for " +
                                  std::to_string(edges.size()) + " edges"}});
  for (std::size_t i = 0; i < edges.size(); ++i) edges[i].sign = t.eps[i];
  return Gos::create(std::move(valencies), std::move(edges), min_valency);
}

// Turning vertex v upside down: reverse the cyclic order at v and negate the
// signature of every non-loop edge incident at v; loops at v keep theirs.
// The reversed cyclic order is re-expressed in canonical labels by remapping
// stubs within v's block, so the result is again a canonical Gos. Involution.
inline Gos flip_vertex(const Gos& g, VertexIndex v) {
  if (v < 1 || v > g.vertex_count())
    throw GosError(ErrorKind::BadParameter, "no vertex " + std::to_string(v));
  const Stub first = g.block_start(v);
  const std::uint32_t w = g.valency(v);
  auto remap = [&](Stub s) -> Stub {
    if (s < first || s >= first + w) return s;
    return first + (w - (s - first)) % w;
  };
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    bool a_in = e.a >= first && e.a < first + w;
    bool b_in = e.b >= first && e.b < first + w;
    int sign = (a_in != b_in) ? -e.sign : e.sign;
    edges.emplace_back(remap(e.a), remap(e.b), sign);
  }
  return Gos::create(std::vector<std::uint32_t>(g.valencies()), std::move(edges),
                     g.min_valency() >= 2 ? 2u : 1u);
}

}  // namespace gos
