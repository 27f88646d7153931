#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gos/core.hpp"
#include "gos/errors.hpp"

#include <json.hpp>

namespace gos {

// Parse result: the canonical Gos plus the user-label -> canonical-stub map
// kept for reporting. Input may use arbitrary stub labels; ingestion
// renumbers them into the contiguous block labelling.
struct ParsedGos {
  Gos gos;
  std::map<long long, Stub> label_to_stub;
};

namespace detail {

struct RawInput {
  std::vector<std::vector<long long>> vertex_stubs;
  struct RawEdge {
    long long a, b;
    int sign;
  };
  std::vector<RawEdge> edges;
};

inline ParsedGos canonicalize(const RawInput& raw, std::uint32_t min_valency) {
  std::vector<ValidationError> errs;
  std::map<long long, Stub> map;
  std::vector<std::uint32_t> valencies;
  Stub next = 1;
  for (std::size_t v = 0; v < raw.vertex_stubs.size(); ++v) {
    valencies.push_back(static_cast<std::uint32_t>(raw.vertex_stubs[v].size()));
    for (long long label : raw.vertex_stubs[v]) {
      if (!map.emplace(label, next).second)
        errs.push_back({ErrorKind::StubReused,
                        "stub label " + std::to_string(label) + " listed more than once"});
      ++next;
    }
  }
  std::vector<Edge> edges;
  for (const auto& e : raw.edges) {
    auto ia = map.find(e.a), ib = map.find(e.b);
    if (ia == map.end())
      errs.push_back({ErrorKind::LabelGap,
                      "edge references unknown stub label " + std::to_string(e.a)});
    if (ib == map.end())
      errs.push_back({ErrorKind::LabelGap,
                      "edge references unknown stub label " + std::to_string(e.b)});
    if (ia == map.end() || ib == map.end()) continue;
    if (ia->second == ib->second) {
      errs.push_back({ErrorKind::TauFixedPoint,
                      "edge pairs stub label " + std::to_string(e.a) + " with itself"});
      continue;
    }
    edges.emplace_back(ia->second, ib->second, e.sign);
  }
  if (errs.empty()) {
    auto more = Gos::check(valencies, edges, min_valency);
    errs.insert(errs.end(), more.begin(), more.end());
  }
  if (!errs.empty()) throw ValidationFailure(std::move(errs));
  return {Gos::create(std::move(valencies), std::move(edges), min_valency), std::move(map)};
}

}  // namespace detail

// .gos text format, one canonical form:
//   # comment
//   vertices V
//   v <i> : <stub labels in cyclic order>
//   e <stub> <stub> <+|->
inline ParsedGos parse_gos_text(const std::string& text, std::uint32_t min_valency = 2) {
  detail::RawInput raw;
  std::istringstream in(text);
  std::string line;
  long expected_vertices = -1;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw ValidationFailure({{ErrorKind::Syntax, "line " + std::to_string(lineno) + ": " + msg}});
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "vertices") {
      if (!(ls >> expected_vertices) || expected_vertices < 1) fail("bad vertex count");
    } else if (head == "v") {
      long long index;
      std::string colon;
      if (!(ls >> index >> colon) || colon != ":") fail("expected 'v <i> : <stubs>'");
      if (index != static_cast<long long>(raw.vertex_stubs.size()) + 1)
        fail("vertices must be listed in order 1..V");
      std::vector<long long> stubs;
      long long s;
      while (ls >> s) stubs.push_back(s);
      if (stubs.empty()) fail("vertex with no stubs");
      raw.vertex_stubs.push_back(std::move(stubs));
    } else if (head == "e") {
      long long a, b;
      std::string sign;
      if (!(ls >> a >> b >> sign) || (sign != "+" && sign != "-")) fail("expected 'e <s> <t> <+|->'");
      raw.edges.push_back({a, b, sign == "+" ? +1 : -1});
    } else {
      fail("unknown directive '" + head + "'");
    }
  }
  if (expected_vertices >= 0 && expected_vertices != static_cast<long>(raw.vertex_stubs.size()))
    throw ValidationFailure({{ErrorKind::Syntax,
                              "header says " + std::to_string(expected_vertices) + " vertices, found " +
                                  std::to_string(raw.vertex_stubs.size())}});
  if (raw.vertex_stubs.empty())
    throw ValidationFailure({{ErrorKind::Syntax, "no vertices in input"}});
  return detail::canonicalize(raw, min_valency);
}

// Canonical serialization; parsing it back is the identity, byte for byte.
inline std::string serialize_gos_text(const Gos& g) {
  std::string out = "vertices " + std::to_string(g.vertex_count()) + "\n";
  for (VertexIndex v = 1; v <= g.vertex_count(); ++v) {
    out += "v " + std::to_string(v) + " :";
    for (std::uint32_t k = 0; k < g.valency(v); ++k)
      out += " " + std::to_string(g.stub_at(v, k));
    out += "\n";
  }
  for (const Edge& e : g.edges()) {
    out += "e " + std::to_string(e.a) + " " + std::to_string(e.b) + " ";
    out += e.sign > 0 ? '+' : '-';
    out += "\n";
  }
  return out;
}

// JSON mirror: {"vertices": [[stub,...],...], "edges": [[s,t,sign],...]}
// with sign as +1/-1 (or "+"/"-" accepted on input).
inline ParsedGos parse_gos_json(const std::string& text, std::uint32_t min_valency = 2) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationFailure({{ErrorKind::Syntax, e.what()}});
  }
  detail::RawInput raw;
  if (!j.contains("vertices") || !j["vertices"].is_array() || !j.contains("edges"))
    throw ValidationFailure({{ErrorKind::Syntax, "expected fields 'vertices' and 'edges'"}});
  for (const auto& vs : j["vertices"]) {
    std::vector<long long> stubs;
    for (const auto& s : vs) stubs.push_back(s.get<long long>());
    raw.vertex_stubs.push_back(std::move(stubs));
  }
  for (const auto& ed : j["edges"]) {
    if (!ed.is_array() || ed.size() != 3)
      throw ValidationFailure({{ErrorKind::Syntax, "each edge is [stub, stub, sign]"}});
    int sign;
    if (ed[2].is_string())
      sign = ed[2].get<std::string>() == "-" ? -1 : +1;
    else
      sign = ed[2].get<int>() < 0 ? -1 : +1;
    raw.edges.push_back({ed[0].get<long long>(), ed[1].get<long long>(), sign});
  }
  return detail::canonicalize(raw, min_valency);
}

inline nlohmann::json gos_to_json(const Gos& g) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (VertexIndex v = 1; v <= g.vertex_count(); ++v) {
    nlohmann::json stubs = nlohmann::json::array();
    for (std::uint32_t k = 0; k < g.valency(v); ++k) stubs.push_back(g.stub_at(v, k));
    j["vertices"].push_back(std::move(stubs));
  }
  j["edges"] = nlohmann::json::array();
  for (const Edge& e : g.edges()) j["edges"].push_back({e.a, e.b, e.sign});
  return j;
}

}  // namespace gos
