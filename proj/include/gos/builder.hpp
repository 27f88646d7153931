#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gos/core.hpp"
#include "gos/errors.hpp"
#include "gos/orientability.hpp"
#include "gos/permutation.hpp"

namespace gos {

// Incremental construction of the surface, one propagator strip per edge.
//
// State after i strips: rho's disjoint cycles are the boundary circles of the
// partial surface S_i (untouched fat vertices contribute their sigma cycles),
// b counts them, and vertices are partitioned into path components, each
// knowing whether it is still orientable.
//
// dir[s] records, for every not-yet-attached stub s, the direction the stored
// cycle traverses the boundary arc of s: +1 means the cycle runs with the
// vertex's cyclic order (rho maps pred(s) to s), -1 against it (rho maps s to
// pred(s)). While s is unattached, s and pred(s) stay rho-adjacent, so this
// is exactly the p'C = p vs pC = p' dichotomy; carrying it explicitly also
// settles the 2-cycle case, where the permutation alone cannot distinguish
// the two traversal directions.

struct BuildStep {
  std::uint32_t edge_index;
  Stub p, q;
  int sign;
  std::string label;  // I-1(a), I-2(b), II-2(a)', ...
  std::uint32_t b_after;
  std::string rho_after;  // only filled when tracing
};

class BuildState {
 public:
  BuildState() = default;

  explicit BuildState(const Gos& g, bool tracing = false)
      : rho_(g.sigma()),
        dir_(g.stub_count() + 1, +1),
        attached_(g.stub_count() + 1, 0),
        b_(g.vertex_count()),
        parent_(g.vertex_count()),
        orientable_flag_(g.vertex_count(), 1),
        edges_done_(0),
        tracing_(tracing) {
    for (std::uint32_t i = 0; i < parent_.size(); ++i) parent_[i] = i;
  }

  const Permutation& rho() const { return rho_; }
  std::uint32_t boundary_count() const { return b_; }
  std::uint32_t edges_done() const { return edges_done_; }
  const std::vector<BuildStep>& trace() const { return trace_; }

  bool orientable() const {
    for (std::uint32_t v = 0; v < parent_.size(); ++v)
      if (!orientable_flag_[find(v)]) return false;
    return true;
  }

  std::uint32_t component_count() const {
    std::uint32_t n = 0;
    for (std::uint32_t v = 0; v < parent_.size(); ++v)
      if (find(v) == v) ++n;
    return n;
  }

  bool same_component(VertexIndex u, VertexIndex v) const { return find(u - 1) == find(v - 1); }

  void attach(const Gos& g, std::uint32_t edge_index) {
    if (g.min_valency() < 3)
      throw GosError(ErrorKind::ValencyTooLow,
                     "the incremental builder needs every vertex at least trivalent");
    const Edge& e = g.edge(edge_index);
    Stub p = e.a, q = e.b;
    if (attached_[p] || attached_[q])
      throw GosError(ErrorKind::BadParameter,
                     "edge " + std::to_string(edge_index) + " attached twice");

    check_adjacency(g, p);
    check_adjacency(g, q);

    const int dp = dir_[p], dq = dir_[q];
    const bool same_cycle = in_same_cycle(p, q);
    const bool twist = e.sign * dp * dq < 0;
    std::string label = make_label(g, p, q, dp, dq, same_cycle, twist);

    std::uint32_t rp = find(g.vertex_of(p) - 1), rq = find(g.vertex_of(q) - 1);
    if (!same_cycle) {
      // Case I: the strips ends lie on two distinct boundary circles.
      if (rp != rq) {
        bool both_orientable = orientable_flag_[rp] && orientable_flag_[rq];
        if (twist) reverse_component(g, rq);  // re-orient the far component
        straight_join(cut_link(g, p), cut_link(g, q));
        std::uint32_t root = unite(rp, rq);
        orientable_flag_[root] = both_orientable ? 1 : 0;
      } else {
        if (twist) {
          invert_cycle(q);
          orientable_flag_[rp] = 0;
        }
        straight_join(cut_link(g, p), cut_link(g, q));
      }
      --b_;
    } else {
      // Case II: both ends on one circle.
      if (rp != rq) throw InternalInconsistency("one boundary cycle spans two components");
      if (!twist) {
        straight_join(cut_link(g, p), cut_link(g, q));  // pinches the circle in two
        ++b_;
      } else {
        twist_reglue(cut_link(g, p), cut_link(g, q));
        orientable_flag_[rp] = 0;
      }
    }

    attached_[p] = attached_[q] = 1;
    ++edges_done_;
    if (rho_.cycle_count() != b_)
      throw InternalInconsistency("rho has " + std::to_string(rho_.cycle_count()) +
                                  " cycles but b = " + std::to_string(b_));
    last_label_ = label;
    if (tracing_)
      trace_.push_back({edge_index, p, q, e.sign, label, b_, rho_.to_string(true)});
  }

  const std::string& last_label() const { return last_label_; }

 private:
  struct CutLink {
    Stub from, to;  // rho(from) == to; the link crossing the stub's free tip
  };

  std::uint32_t find(std::uint32_t x) const {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  std::uint32_t unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[b] = a;
    return a;
  }

  // While s is unattached, exactly the relation recorded in dir must hold
  // between s and its vertex-predecessor (both hold only on a 2-cycle).
  void check_adjacency(const Gos& g, Stub s) const {
    Stub sp = g.pred_at_vertex(s);
    bool forward = rho_(sp) == s;
    bool backward = rho_(s) == sp;
    if (dir_[s] > 0 ? !forward : !backward)
      throw InternalInconsistency("stub " + std::to_string(s) +
                                  " lost adjacency with its vertex predecessor");
  }

  CutLink cut_link(const Gos& g, Stub s) const {
    Stub sp = g.pred_at_vertex(s);
    return dir_[s] > 0 ? CutLink{sp, s} : CutLink{s, sp};
  }

  bool in_same_cycle(Stub p, Stub q) const {
    Stub x = p;
    do {
      if (x == q) return true;
      x = rho_(x);
    } while (x != p);
    return false;
  }

  void straight_join(const CutLink& a, const CutLink& b) {
    rho_.set_image(a.from, b.to);
    rho_.set_image(b.from, a.to);
  }

  // Same cycle, cut both links, reattach with the far chain reversed:
  // ... -> a.from|a.to -> ... -> b.from|b.to -> ...   becomes
  // a.to ... b.from, then b-chain reversed from a.from back to b.to, closed
  // at a.to. Arcs on the reversed chain flip direction.
  void twist_reglue(const CutLink& a, const CutLink& b) {
    std::vector<Stub> beta;  // b.to -> ... -> a.from
    for (Stub x = b.to;; x = rho_(x)) {
      beta.push_back(x);
      if (x == a.from) break;
    }
    rho_.set_image(b.from, a.from);
    for (std::size_t i = 0; i + 1 < beta.size(); ++i) rho_.set_image(beta[i + 1], beta[i]);
    rho_.set_image(b.to, a.to);
    for (Stub x : beta) dir_[x] = -dir_[x];
  }

  void invert_cycle(Stub member) {
    std::vector<Stub> cyc;
    Stub x = member;
    do {
      cyc.push_back(x);
      x = rho_(x);
    } while (x != member);
    for (std::size_t i = 0; i < cyc.size(); ++i)
      rho_.set_image(cyc[(i + 1) % cyc.size()], cyc[i]);
    for (Stub s : cyc) dir_[s] = -dir_[s];
  }

  // Reversing the orientation of a whole path component: every one of its
  // boundary cycles gets inverted (a cycle never straddles components).
  void reverse_component(const Gos& g, std::uint32_t root) {
    std::vector<char> in_comp(rho_.size() + 1, 0);
    for (Stub s = 1; s <= rho_.size(); ++s)
      in_comp[s] = find(g.vertex_of(s) - 1) == root ? 1 : 0;
    std::vector<char> done(rho_.size() + 1, 0);
    for (Stub s = 1; s <= rho_.size(); ++s) {
      if (!in_comp[s] || done[s]) continue;
      std::vector<Stub> cyc;
      Stub x = s;
      do {
        if (!in_comp[x])
          throw InternalInconsistency("boundary cycle crosses path components");
        done[x] = 1;
        cyc.push_back(x);
        x = rho_(x);
      } while (x != s);
      for (std::size_t i = 0; i < cyc.size(); ++i)
        rho_.set_image(cyc[(i + 1) % cyc.size()], cyc[i]);
      for (Stub y : cyc) dir_[y] = -dir_[y];
    }
  }

  static std::string make_label(const Gos& g, Stub p, Stub q, int dp, int dq, bool same_cycle,
                                bool twist) {
    std::string label;
    if (!same_cycle)
      label = (dp == dq) ? "I-1" : "I-2";
    else
      label = (dp == dq) ? "II-2" : "II-1";
    label += twist ? "(b)" : "(a)";
    if (same_cycle && dp == dq &&
        (g.pred_at_vertex(q) == p || g.pred_at_vertex(p) == q))
      label += "'";  // strip between cyclically consecutive stubs
    return label;
  }

  Permutation rho_;
  std::vector<signed char> dir_;
  std::vector<char> attached_;
  std::uint32_t b_ = 0;
  mutable std::vector<std::uint32_t> parent_;  // vertices, 0-based
  std::vector<char> orientable_flag_;          // by union-find root
  std::uint32_t edges_done_ = 0;
  bool tracing_ = false;
  std::vector<BuildStep> trace_;
  std::string last_label_;
};

inline BuildState attach_edge(BuildState state, const Gos& g, std::uint32_t edge_index) {
  state.attach(g, edge_index);
  return state;
}

// Folds attach over all edges. The default order puts a maximal tree first,
// which keeps the first V-1 steps in Case I and leaves S_{V-1} a disc; both
// facts are asserted at runtime. Results do not depend on the order.
inline BuildState build(const Gos& g, std::optional<std::vector<std::uint32_t>> order = std::nullopt,
                        bool tracing = false) {
  std::vector<std::uint32_t> seq;
  bool default_order = !order.has_value();
  if (default_order) {
    SpanningTree t = spanning_tree(g);
    seq = t.tree_edges;
    seq.insert(seq.end(), t.complement_edges.begin(), t.complement_edges.end());
  } else {
    seq = *order;
    std::vector<char> seen(g.edge_count(), 0);
    for (auto i : seq)
      if (i >= g.edge_count() || seen[i]++)
        throw GosError(ErrorKind::BadParameter, "edge order must be a permutation of 0..E-1");
    if (seq.size() != g.edge_count())
      throw GosError(ErrorKind::BadParameter, "edge order must cover every edge");
  }

  BuildState s(g, tracing);
  const std::uint32_t tree_steps = g.vertex_count() - 1;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    s.attach(g, seq[i]);
    bool case_one = s.last_label().size() > 1 && s.last_label()[1] == '-';
    if (default_order && i < tree_steps && !case_one)
      throw InternalInconsistency("tree-first step fell outside Case I");
    if (default_order && i + 1 == tree_steps &&
        (s.boundary_count() != 1 || s.component_count() != 1 || !s.orientable()))
      throw InternalInconsistency("tree-first prefix did not build a disc");
  }
  return s;
}

}  // namespace gos
