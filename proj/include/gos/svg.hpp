#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gos/boundary.hpp"
#include "gos/core.hpp"

namespace gos {

// Strip-diagram rendering: discs per vertex, a band per edge with a twist
// glyph on minus edges, the graph itself dashed along the band mid-lines, and
// the boundary arcs coloured by pile. Layout is a best-effort spring
// embedding (crossings allowed); only counts and colours carry meaning.
inline std::string render_svg(const Gos& g, unsigned seed = 1) {
  const std::uint32_t V = g.vertex_count();
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<double> x(V + 1), y(V + 1);
  for (VertexIndex v = 1; v <= V; ++v) {
    double angle = 2 * M_PI * (v - 1) / V + 0.1 * unit(rng);
    double radius = V == 1 ? 0.0 : 1.0 + 0.05 * unit(rng);
    x[v] = radius * std::cos(angle);
    y[v] = radius * std::sin(angle);
  }
  // spring relaxation
  for (int iter = 0; iter < 300 && V > 1; ++iter) {
    std::vector<double> fx(V + 1, 0), fy(V + 1, 0);
    for (VertexIndex u = 1; u <= V; ++u)
      for (VertexIndex v = u + 1; v <= V; ++v) {
        double dx = x[u] - x[v], dy = y[u] - y[v];
        double d2 = dx * dx + dy * dy + 1e-6;
        double rep = 0.4 / d2;
        fx[u] += dx * rep;
        fy[u] += dy * rep;
        fx[v] -= dx * rep;
        fy[v] -= dy * rep;
      }
    for (const Edge& e : g.edges()) {
      VertexIndex u = g.vertex_of(e.a), v = g.vertex_of(e.b);
      if (u == v) continue;
      double dx = x[u] - x[v], dy = y[u] - y[v];
      double d = std::sqrt(dx * dx + dy * dy) + 1e-6;
      double att = 0.2 * (d - 1.2) / d;
      fx[u] -= dx * att;
      fy[u] -= dy * att;
      fx[v] += dx * att;
      fy[v] += dy * att;
    }
    for (VertexIndex v = 1; v <= V; ++v) {
      x[v] += std::clamp(fx[v], -0.1, 0.1);
      y[v] += std::clamp(fy[v], -0.1, 0.1);
    }
  }

  // fit into a viewBox
  const double disc_r = 26.0, stub_len = 22.0, scale = 160.0, margin = 90.0;
  double min_x = 1e9, min_y = 1e9, max_x = -1e9, max_y = -1e9;
  for (VertexIndex v = 1; v <= V; ++v) {
    min_x = std::min(min_x, x[v]);
    max_x = std::max(max_x, x[v]);
    min_y = std::min(min_y, y[v]);
    max_y = std::max(max_y, y[v]);
  }
  auto px = [&](double v) { return margin + (v - min_x) * scale; };
  auto py = [&](double v) { return margin + (v - min_y) * scale; };
  double width = px(max_x) + margin, height = py(max_y) + margin;

  // stub anchor points on each disc rim, anticlockwise by slot
  std::vector<double> sx(g.stub_count() + 1), sy(g.stub_count() + 1), sang(g.stub_count() + 1);
  for (Stub s = 1; s <= g.stub_count(); ++s) {
    VertexIndex v = g.vertex_of(s);
    double angle = 2 * M_PI * g.slot_of(s) / g.valency(v);
    sang[s] = angle;
    sx[s] = px(x[v]) + disc_r * std::cos(angle);
    sy[s] = py(y[v]) - disc_r * std::sin(angle);  // svg y grows downward
  }

  static const char* palette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00",
                                  "#a65628", "#f781bf", "#00bcd4", "#808000", "#1b5e20"};
  auto piles = pile_index_by_counter(g);
  auto colour = [&](std::uint32_t pile) { return palette[pile % 10]; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << width << " " << height
      << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // bands: straight quads stub tip to stub tip; mid-line dashed
  for (const Edge& e : g.edges()) {
    double ax = sx[e.a] + stub_len * std::cos(sang[e.a]), ay = sy[e.a] - stub_len * std::sin(sang[e.a]);
    double bx = sx[e.b] + stub_len * std::cos(sang[e.b]), by = sy[e.b] - stub_len * std::sin(sang[e.b]);
    out << "<line x1=\"" << sx[e.a] << "\" y1=\"" << sy[e.a] << "\" x2=\"" << ax << "\" y2=\"" << ay
        << "\" stroke=\"#bbb\" stroke-width=\"14\"/>\n";
    out << "<line x1=\"" << sx[e.b] << "\" y1=\"" << sy[e.b] << "\" x2=\"" << bx << "\" y2=\"" << by
        << "\" stroke=\"#bbb\" stroke-width=\"14\"/>\n";
    out << "<line x1=\"" << ax << "\" y1=\"" << ay << "\" x2=\"" << bx << "\" y2=\"" << by
        << "\" stroke=\"#bbb\" stroke-width=\"14\"/>\n";
    out << "<line x1=\"" << sx[e.a] << "\" y1=\"" << sy[e.a] << "\" x2=\"" << sx[e.b] << "\" y2=\""
        << sy[e.b] << "\" stroke=\"#555\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"/>\n";
    if (e.sign < 0) {
      double mx = (ax + bx) / 2, my = (ay + by) / 2;
      out << "<path d=\"M " << mx - 9 << " " << my - 9 << " L " << mx + 9 << " " << my + 9 << " M "
          << mx - 9 << " " << my + 9 << " L " << mx + 9 << " " << my - 9
          << "\" stroke=\"#d32\" stroke-width=\"3\"/>\n";
      out << "<circle cx=\"" << mx << "\" cy=\"" << my
          << "\" r=\"12\" fill=\"none\" stroke=\"#d32\" stroke-width=\"1.5\"/>\n";
    }
  }

  // vertex discs with dashed spokes to the stub anchors
  for (VertexIndex v = 1; v <= V; ++v) {
    out << "<circle cx=\"" << px(x[v]) << "\" cy=\"" << py(y[v]) << "\" r=\"" << disc_r
        << "\" fill=\"#eee\" stroke=\"#555\" stroke-width=\"1.5\"/>\n";
    out << "<text x=\"" << px(x[v]) << "\" y=\"" << py(y[v]) + 4
        << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\">" << v
        << "</text>\n";
  }

  // boundary arcs: one tick per counter, on the matching side of its stub,
  // plus the disc arc between consecutive stubs in the shared pile colour
  for (Stub s = 1; s <= g.stub_count(); ++s) {
    VertexIndex v = g.vertex_of(s);
    for (int side = 0; side < 2; ++side) {
      // side 0: left (+1), side 1: right (-1); left sits anticlockwise-forward
      double off = side == 0 ? +0.22 : -0.22;
      double a = sang[s] + off;
      std::uint32_t pile = piles[2 * (s - 1) + side];
      double x1 = px(x[v]) + disc_r * std::cos(a), y1 = py(y[v]) - disc_r * std::sin(a);
      double x2 = x1 + stub_len * std::cos(sang[s]), y2 = y1 - stub_len * std::sin(sang[s]);
      out << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
          << "\" stroke=\"" << colour(pile) << "\" stroke-width=\"3\"/>\n";
    }
    // disc arc from this stub's left side to the next stub's right side
    Stub nxt = g.succ_at_vertex(s);
    std::uint32_t pile = piles[2 * (s - 1)];  // left counter of s
    double a1 = sang[s] + 0.22, a2 = sang[nxt] - 0.22;
    if (g.valency(v) == 1) a2 = sang[nxt] + 2 * M_PI - 0.22;
    while (a2 < a1) a2 += 2 * M_PI;
    double x1 = px(x[v]) + disc_r * std::cos(a1), y1 = py(y[v]) - disc_r * std::sin(a1);
    double x2 = px(x[v]) + disc_r * std::cos(a2), y2 = py(y[v]) - disc_r * std::sin(a2);
    out << "<path d=\"M " << x1 << " " << y1 << " A " << disc_r << " " << disc_r << " 0 "
        << (a2 - a1 > M_PI ? 1 : 0) << " 0 " << x2 << " " << y2 << "\" fill=\"none\" stroke=\""
        << colour(pile) << "\" stroke-width=\"3\"/>\n";
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace gos
