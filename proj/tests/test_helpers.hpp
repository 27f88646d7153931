#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "gos/core.hpp"

namespace gos::testing {

// Random connected GOS: pick a degree sequence with the requested valency
// floor, pair the stubs uniformly, resample until connected. Deterministic
// for a fixed generator state.
inline Gos random_gos(std::mt19937& rng, std::uint32_t max_edges = 12,
                      std::uint32_t min_valency = 3, bool random_signs = true) {
  std::uniform_int_distribution<std::uint32_t> vcount(1, 4);
  std::uniform_int_distribution<std::uint32_t> extra(0, 3);
  for (;;) {
    std::uint32_t V = vcount(rng);
    std::vector<std::uint32_t> valencies(V);
    std::uint64_t total = 0;
    for (auto& w : valencies) {
      w = min_valency + extra(rng);
      total += w;
    }
    if (total % 2) {
      ++valencies[0];
      ++total;
    }
    if (total / 2 > max_edges || total < 2) continue;

    std::vector<Stub> stubs(total);
    for (std::uint32_t s = 0; s < total; ++s) stubs[s] = s + 1;
    std::shuffle(stubs.begin(), stubs.end(), rng);

    std::vector<Edge> edges;
    for (std::size_t i = 0; i < stubs.size(); i += 2) {
      int sign = random_signs && (rng() & 1) ? -1 : +1;
      edges.emplace_back(stubs[i], stubs[i + 1], sign);
    }
    if (!Gos::check(valencies, edges, min_valency).empty()) continue;  // e.g. disconnected
    return Gos::create(std::move(valencies), std::move(edges), min_valency);
  }
}

}  // namespace gos::testing
