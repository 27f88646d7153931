#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "gos/classify.hpp"
#include "gos/core.hpp"
#include "gos/errors.hpp"

namespace gos {

// Underlying 1-complex: stub multisets per vertex and stub pairs per edge,
// with no cyclic orders and no signatures. Uses the same canonical block
// labelling as Gos.
struct Skeleton {
  std::vector<std::uint32_t> valencies;
  std::vector<std::pair<Stub, Stub>> edges;  // in declaration order; census flags index this

  static Skeleton of(const Gos& g) {
    Skeleton sk;
    sk.valencies = g.valencies();
    for (const Edge& e : g.edges()) sk.edges.push_back({e.a, e.b});
    return sk;
  }

  std::uint32_t edge_count() const { return static_cast<std::uint32_t>(edges.size()); }

  std::vector<ValidationError> check() const {
    std::vector<Edge> plain;
    for (auto [a, b] : edges) plain.emplace_back(a, b, +1);
    return Gos::check(valencies, plain, 2);
  }
};

struct CensusOptions {
  bool all_plus = false;   // every edge not explicitly fixed gets +
  std::vector<std::pair<std::uint32_t, int>> fixed_signs;  // (skeleton edge index, sign)
  bool orientable_only = false;
  bool quotient_flips = false;
  std::uint64_t budget = 1ull << 28;
  unsigned threads = 0;  // 0 = hardware concurrency
};

namespace detail {

inline std::uint64_t factorial(std::uint32_t n) {
  std::uint64_t f = 1;
  for (std::uint32_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// Per-edge sign state: +1 / -1 fixed, 0 = enumerated.
inline std::vector<int> sign_template(const Skeleton& sk, const CensusOptions& opts) {
  std::vector<int> tmpl(sk.edge_count(), opts.all_plus ? +1 : 0);
  for (auto [idx, sign] : opts.fixed_signs) {
    if (idx >= sk.edge_count())
      throw GosError(ErrorKind::BadParameter,
                     "fixed sign index " + std::to_string(idx) + " out of range");
    if (sign != 1 && sign != -1)
      throw GosError(ErrorKind::BadParameter, "fixed signs must be +1 or -1");
    tmpl[idx] = sign;
  }
  return tmpl;
}

}  // namespace detail

// Number of raw (cyclic order, signature) combinations the options allow.
inline std::uint64_t raw_census_count(const Skeleton& sk, const CensusOptions& opts) {
  auto tmpl = detail::sign_template(sk, opts);
  std::uint64_t count = 1;
  for (auto w : sk.valencies) {
    std::uint64_t f = detail::factorial(w - 1);
    if (count > (1ull << 62) / f)
      throw GosError(ErrorKind::BudgetExceeded, "combination count overflows");
    count *= f;
  }
  for (int s : tmpl)
    if (s == 0) {
      if (count > (1ull << 62) / 2)
        throw GosError(ErrorKind::BudgetExceeded, "combination count overflows");
      count *= 2;
    }
  return count;
}

// Yields every GOS on the skeleton: each vertex's cyclic order runs over the
// (w-1)! arrangements with the block's first stub held fixed (cyclic
// numberings that differ by rotation are the same orientation), and every
// non-fixed edge over both signatures. Orders are re-expressed in canonical
// labels, so each yielded Gos is canonical. The visitor may return false to
// stop early.
inline void enumerate_census(const Skeleton& sk, const CensusOptions& opts,
                             const std::function<bool(const Gos&)>& visit) {
  auto errs = sk.check();
  if (!errs.empty()) throw ValidationFailure(std::move(errs));
  std::uint64_t total = raw_census_count(sk, opts);
  if (total > opts.budget)
    throw GosError(ErrorKind::BudgetExceeded,
                   std::to_string(total) + " raw combinations exceed the budget of " +
                       std::to_string(opts.budget));

  const std::uint32_t V = static_cast<std::uint32_t>(sk.valencies.size());
  std::vector<Stub> offset(V + 1, 1);
  for (std::uint32_t v = 0; v < V; ++v) offset[v + 1] = offset[v] + sk.valencies[v];

  // tail[v]: current arrangement of the block minus its first stub
  std::vector<std::vector<Stub>> tail(V);
  for (std::uint32_t v = 0; v < V; ++v) {
    for (Stub s = offset[v] + 1; s < offset[v + 1]; ++s) tail[v].push_back(s);
  }
  auto tmpl = detail::sign_template(sk, opts);
  std::vector<std::uint32_t> free_edges;
  for (std::uint32_t e = 0; e < tmpl.size(); ++e)
    if (tmpl[e] == 0) free_edges.push_back(e);

  std::vector<Stub> relabel(offset[V]);  // skeleton stub -> canonical stub
  std::vector<int> signs(sk.edge_count());

  std::function<bool(std::uint32_t)> orders = [&](std::uint32_t v) -> bool {
    if (v == V) {
      // signature sweep for this arrangement
      std::uint64_t sign_combos = 1ull << free_edges.size();
      for (std::uint64_t bits = 0; bits < sign_combos; ++bits) {
        for (std::uint32_t e = 0; e < sk.edge_count(); ++e) signs[e] = tmpl[e];
        for (std::size_t i = 0; i < free_edges.size(); ++i)
          signs[free_edges[i]] = (bits >> i) & 1 ? -1 : +1;
        std::vector<Edge> edges;
        edges.reserve(sk.edge_count());
        for (std::uint32_t e = 0; e < sk.edge_count(); ++e)
          edges.emplace_back(relabel[sk.edges[e].first], relabel[sk.edges[e].second], signs[e]);
        Gos g = Gos::create(std::vector<std::uint32_t>(sk.valencies), std::move(edges));
        if (opts.orientable_only && !is_orientable(g)) continue;
        if (!visit(g)) return false;
      }
      return true;
    }
    std::sort(tail[v].begin(), tail[v].end());
    do {
      relabel[offset[v]] = offset[v];
      for (std::size_t j = 0; j < tail[v].size(); ++j)
        relabel[tail[v][j]] = offset[v] + static_cast<Stub>(j) + 1;
      if (!orders(v + 1)) return false;
    } while (std::next_permutation(tail[v].begin(), tail[v].end()));
    return true;
  };
  orders(0);
}

// Lexicographically least canonical encoding over all 2^V flip subsets, so
// GOS's related by turning vertices upside down share a key. Above 20
// vertices the subset sweep is refused and the key degrades to the identity
// encoding, flagged as inexact.
struct FlipOrbitKey {
  std::string key;
  bool exact;
};

inline FlipOrbitKey flip_orbit_key(const Gos& g) {
  if (g.vertex_count() > 20) return {g.encode(), false};
  std::string best = g.encode();
  const std::uint32_t V = g.vertex_count();
  for (std::uint64_t mask = 1; mask < (1ull << V); ++mask) {
    Gos h = g;
    for (std::uint32_t v = 0; v < V; ++v)
      if (mask & (1ull << v)) h = flip_vertex(h, v + 1);
    std::string enc = h.encode();
    if (enc < best) best = std::move(enc);
  }
  return {best, true};
}

struct CensusTable {
  std::map<SurfaceClass, std::uint64_t> counts;
  std::uint64_t total = 0;  // entries actually tallied (orbit reps under the quotient)
  std::uint64_t raw = 0;    // raw combinations enumerated
  CensusOptions options;
};

// Classifies every enumerated GOS (or one representative per flip orbit when
// the quotient is on) and tallies by surface class. The signature sweep is
// split into independent shards; tables merge by addition, so totals do not
// depend on the sharding.
inline CensusTable census(const Skeleton& sk, const CensusOptions& opts) {
  CensusTable table;
  table.options = opts;
  table.raw = raw_census_count(sk, opts);
  if (table.raw > opts.budget)
    throw GosError(ErrorKind::BudgetExceeded,
                   std::to_string(table.raw) + " raw combinations exceed the budget of " +
                       std::to_string(opts.budget));

  unsigned threads = opts.threads ? opts.threads : std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;

  if (opts.quotient_flips || table.raw < 4096 || threads == 1) {
    std::set<std::string> seen;
    enumerate_census(sk, opts, [&](const Gos& g) {
      if (opts.quotient_flips) {
        auto key = flip_orbit_key(g);
        if (!seen.insert(key.key).second) return true;
      }
      ++table.total;
      ++table.counts[classify(g)];
      return true;
    });
    return table;
  }

  // Shard by fixing a prefix of the enumerated signs.
  auto tmpl = detail::sign_template(sk, opts);
  std::vector<std::uint32_t> free_edges;
  for (std::uint32_t e = 0; e < tmpl.size(); ++e)
    if (tmpl[e] == 0) free_edges.push_back(e);
  std::uint32_t prefix = std::min<std::uint32_t>(static_cast<std::uint32_t>(free_edges.size()), 6);
  std::uint32_t shards = 1u << prefix;

  std::mutex merge_mutex;
  std::vector<std::thread> pool;
  std::atomic<std::uint32_t> next_shard{0};
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        std::uint32_t shard = next_shard.fetch_add(1);
        if (shard >= shards) break;
        CensusOptions local = opts;
        local.threads = 1;
        for (std::uint32_t i = 0; i < prefix; ++i)
          local.fixed_signs.push_back({free_edges[i], (shard >> i) & 1 ? -1 : +1});
        std::map<SurfaceClass, std::uint64_t> counts;
        std::uint64_t n = 0;
        enumerate_census(sk, local, [&](const Gos& g) {
          ++n;
          ++counts[classify(g)];
          return true;
        });
        std::lock_guard<std::mutex> lock(merge_mutex);
        table.total += n;
        for (auto& [cls, c] : counts) table.counts[cls] += c;
      }
    });
  }
  for (auto& th : pool) th.join();
  return table;
}

// ---------------------------------------------------------------------------
// Achievability sweep: which surface classes appear at all.

struct AchievabilityOptions {
  std::uint32_t max_vertices = 4;
  std::uint32_t max_edges = 6;
  std::uint64_t budget = 1ull << 28;
  unsigned threads = 0;
};

struct AchievabilityReport {
  bool disc_found = false;                   // (orientable, g=0, b=1) anywhere
  bool annulus_in_trivalent = false;         // (orientable, g=0, b=2) on all-trivalent skeletons
  bool moebius_in_trivalent = false;         // (non-orientable, h=1, b=1) likewise
  std::set<SurfaceClass> classes;            // everything that occurred
  std::set<SurfaceClass> trivalent_classes;  // occurrences on all-trivalent skeletons
  std::uint64_t classified = 0;
};

namespace detail {

inline std::uint64_t double_factorial_odd(std::uint32_t e) {
  // (2e-1)!! pairings of 2e stubs
  std::uint64_t f = 1;
  for (std::uint32_t i = 3; i <= 2 * e - 1; i += 2) f *= i;
  return f;
}

// All sorted degree sequences with V parts, each >= 2, summing to 2E.
inline void degree_sequences(std::uint32_t parts, std::uint32_t sum, std::uint32_t min_part,
                             std::vector<std::uint32_t>& prefix,
                             const std::function<void(const std::vector<std::uint32_t>&)>& emit) {
  if (parts == 1) {
    if (sum >= min_part) {
      prefix.push_back(sum);
      emit(prefix);
      prefix.pop_back();
    }
    return;
  }
  for (std::uint32_t w = min_part; w * parts <= sum; ++w) {
    prefix.push_back(w);
    degree_sequences(parts - 1, sum - w, w, prefix, emit);
    prefix.pop_back();
  }
}

template <typename Fn>
void for_each_pairing(std::uint32_t n_stubs, std::vector<std::pair<Stub, Stub>>& pairs,
                      std::vector<bool>& used, Fn&& fn) {
  Stub first = 0;
  for (Stub s = 1; s <= n_stubs; ++s)
    if (!used[s]) {
      first = s;
      break;
    }
  if (first == 0) {
    fn(pairs);
    return;
  }
  used[first] = true;
  for (Stub t = first + 1; t <= n_stubs; ++t) {
    if (used[t]) continue;
    used[t] = true;
    pairs.push_back({first, t});
    for_each_pairing(n_stubs, pairs, used, fn);
    pairs.pop_back();
    used[t] = false;
  }
  used[first] = false;
}

}  // namespace detail

// Enumerates every connected skeleton shape within the bound - all sorted
// degree sequences with valency >= 2 paired in every possible way (with the
// canonical cyclic orders; arbitrary orders are relabellings of some pairing)
// - and classifies every signature assignment on each.
inline AchievabilityReport achievability_report(const AchievabilityOptions& opts) {
  // budget pre-check
  if (opts.max_edges > 16)
    throw GosError(ErrorKind::BudgetExceeded, "achievability sweep is capped at 16 edges");
  std::uint64_t projected = 0;
  for (std::uint32_t V = 1; V <= opts.max_vertices; ++V)
    for (std::uint32_t E = 1; E <= opts.max_edges; ++E) {
      std::vector<std::uint32_t> prefix;
      detail::degree_sequences(V, 2 * E, 2, prefix, [&](const std::vector<std::uint32_t>&) {
        projected += detail::double_factorial_odd(E) << E;
      });
    }
  if (projected > opts.budget)
    throw GosError(ErrorKind::BudgetExceeded,
                   std::to_string(projected) + " raw combinations exceed the budget of " +
                       std::to_string(opts.budget));

  struct Job {
    std::vector<std::uint32_t> valencies;
    std::vector<std::pair<Stub, Stub>> pairing;
  };
  std::vector<Job> jobs;
  for (std::uint32_t V = 1; V <= opts.max_vertices; ++V)
    for (std::uint32_t E = 1; E <= opts.max_edges; ++E) {
      std::vector<std::uint32_t> prefix;
      detail::degree_sequences(V, 2 * E, 2, prefix, [&](const std::vector<std::uint32_t>& seq) {
        std::vector<std::pair<Stub, Stub>> pairs;
        std::vector<bool> used(2 * E + 1, false);
        detail::for_each_pairing(2 * E, pairs, used, [&](const std::vector<std::pair<Stub, Stub>>& p) {
          // connectivity of this pairing over the vertex blocks
          std::vector<Edge> plain;
          for (auto [a, b] : p) plain.emplace_back(a, b, +1);
          if (!Gos::check(seq, plain, 2).empty()) return;  // disconnected
          jobs.push_back({seq, p});
        });
      });
    }

  unsigned threads = opts.threads ? opts.threads : std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;

  AchievabilityReport report;
  std::mutex merge_mutex;
  std::atomic<std::size_t> next_job{0};
  auto worker = [&] {
    AchievabilityReport local;
    for (;;) {
      std::size_t j = next_job.fetch_add(1);
      if (j >= jobs.size()) break;
      const Job& job = jobs[j];
      bool trivalent = std::all_of(job.valencies.begin(), job.valencies.end(),
                                   [](std::uint32_t w) { return w == 3; });
      const std::uint32_t E = static_cast<std::uint32_t>(job.pairing.size());
      for (std::uint64_t bits = 0; bits < (1ull << E); ++bits) {
        std::vector<Edge> edges;
        edges.reserve(E);
        for (std::uint32_t e = 0; e < E; ++e)
          edges.emplace_back(job.pairing[e].first, job.pairing[e].second,
                             (bits >> e) & 1 ? -1 : +1);
        Gos g = Gos::create(std::vector<std::uint32_t>(job.valencies), std::move(edges));
        SurfaceClass s = classify(g);
        ++local.classified;
        local.classes.insert(s);
        if (s == SurfaceClass{true, 0, 1}) local.disc_found = true;
        if (trivalent) {
          local.trivalent_classes.insert(s);
          if (s == SurfaceClass{true, 0, 2}) local.annulus_in_trivalent = true;
          if (s == SurfaceClass{false, 1, 1}) local.moebius_in_trivalent = true;
        }
      }
    }
    std::lock_guard<std::mutex> lock(merge_mutex);
    report.classified += local.classified;
    report.disc_found |= local.disc_found;
    report.annulus_in_trivalent |= local.annulus_in_trivalent;
    report.moebius_in_trivalent |= local.moebius_in_trivalent;
    report.classes.insert(local.classes.begin(), local.classes.end());
    report.trivalent_classes.insert(local.trivalent_classes.begin(), local.trivalent_classes.end());
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return report;
}

}  // namespace gos
