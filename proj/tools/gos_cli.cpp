// Command-line front end: classify | orientable | boundary | build |
// normalize | census | achievability | generate | validate.
//
// Exit codes: 0 success, 1 validation error, 2 usage/budget error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gos/gos.hpp"

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw gos::GosError(gos::ErrorKind::BadParameter, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw gos::GosError(gos::ErrorKind::BadParameter, "cannot write '" + path + "'");
  out << content;
}

// Input is either a family spec (loop:-, theta:planar, ladder:5, ...) or a
// path to a .gos / .json file. Existing files win over family names.
gos::Gos load_input(const std::string& input, std::uint32_t min_valency) {
  if (!std::filesystem::exists(input)) {
    try {
      return gos::generate_family(input);
    } catch (const gos::GosError& e) {
      if (e.kind() == gos::ErrorKind::UnknownFamily)
        throw gos::GosError(gos::ErrorKind::BadParameter,
                            "'" + input + "' is neither a file nor a family spec");
      throw;
    }
  }
  std::string text = read_file(input);
  if (input.size() > 5 && input.substr(input.size() - 5) == ".json")
    return gos::parse_gos_json(text, min_valency).gos;
  return gos::parse_gos_text(text, min_valency).gos;
}

json class_to_json(const gos::SurfaceClass& s, const gos::Gos& g) {
  auto h = gos::homology(s);
  return json{{"orientable", s.orientable},
              {"genus", s.genus},
              {"boundary", s.boundary},
              {"r", g.rank()},
              {"V", g.vertex_count()},
              {"E", g.edge_count()},
              {"homology",
               {{"h0", h.h0}, {"h1_rank", h.h1_rank}, {"h1_torsion", h.h1_torsion}, {"h2", h.h2}}}};
}

std::string class_row(const gos::SurfaceClass& s) {
  std::ostringstream row;
  row << (s.orientable ? "orientable" : "non-orientable") << "," << s.genus << "," << s.boundary;
  return row.str();
}

int run(int argc, char** argv) {
  CLI::App app{"surface topology of string diagrams (signed ribbon graphs)"};
  app.require_subcommand(1);

  std::string input, output, format = "text", svg_path, order_spec;
  std::uint32_t min_valency = 2;
  unsigned svg_seed = 1;
  bool show_piles = false, trace = false, check = false;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "family spec (e.g. ladder:5) or .gos/.json file")->required();
    cmd->add_option("--min-valency", min_valency, "validation floor for file input (default 2)")
        ->check(CLI::Range(1u, 2u));
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
  };

  auto* cmd_classify = app.add_subcommand("classify", "full homeomorphism type");
  add_input(cmd_classify);
  add_format(cmd_classify);
  cmd_classify->add_flag("--check", check, "also run the cross-validation report");
  cmd_classify->add_option("--svg", svg_path, "write a strip diagram to this file");
  cmd_classify->add_option("--svg-seed", svg_seed, "layout seed");

  auto* cmd_orientable = app.add_subcommand("orientable", "spanning-tree orientability test");
  add_input(cmd_orientable);
  add_format(cmd_orientable);

  auto* cmd_boundary = app.add_subcommand("boundary", "boundary circles via the counter game");
  add_input(cmd_boundary);
  add_format(cmd_boundary);
  cmd_boundary->add_flag("--piles", show_piles, "print each pile as a counter sequence");
  cmd_boundary->add_option("--svg", svg_path, "write a strip diagram to this file");
  cmd_boundary->add_option("--svg-seed", svg_seed, "layout seed");

  auto* cmd_build = app.add_subcommand("build", "incremental strip-attachment run");
  add_input(cmd_build);
  add_format(cmd_build);
  cmd_build->add_flag("--trace", trace, "print per-step case labels, rho and b");
  cmd_build->add_option("--order", order_spec,
                        "comma-separated edge indices, or random:<seed> (default: tree first)");

  auto* cmd_normalize = app.add_subcommand("normalize", "flip vertices until all edges are +");
  add_input(cmd_normalize);
  add_format(cmd_normalize);
  cmd_normalize->add_option("-o,--output", output, "write the normalized .gos here (default stdout)");

  auto* cmd_generate = app.add_subcommand("generate", "write a built-in family as .gos");
  add_input(cmd_generate);
  cmd_generate->add_option("-o,--output", output, "output path (default stdout)");

  auto* cmd_validate = app.add_subcommand("validate", "check a file against the format rules");
  cmd_validate->add_option("input", input, ".gos or .json file")->required();

  std::string census_format = "csv";
  bool all_plus = false, quotient = false, orientable_only = false;
  std::vector<std::string> fix_signs;
  std::uint64_t budget = 1ull << 28;
  unsigned threads = 0;
  auto* cmd_census = app.add_subcommand("census", "classify every GOS structure on a skeleton");
  cmd_census->add_option("input", input, "skeleton source: family spec or file")->required();
  cmd_census->add_option("--format", census_format, "csv | json | text")
      ->check(CLI::IsMember({"csv", "json", "text"}));
  cmd_census->add_flag("--all-plus", all_plus, "fix every unpinned edge to +");
  cmd_census->add_flag("--quotient-flips", quotient, "count one representative per flip orbit");
  cmd_census->add_flag("--orientable-only", orientable_only, "tally orientable surfaces only");
  cmd_census->add_option("--fix-sign", fix_signs, "pin an edge signature, e.g. --fix-sign 10=-")
      ->expected(-1);
  cmd_census->add_option("--budget", budget, "refuse runs above this raw combination count");
  cmd_census->add_option("--threads", threads, "worker threads (0 = auto)");

  std::uint32_t max_vertices = 4, max_edges = 6;
  auto* cmd_achieve = app.add_subcommand("achievability", "sweep all small skeletons");
  cmd_achieve->add_option("--max-vertices", max_vertices, "vertex bound (default 4)");
  cmd_achieve->add_option("--max-edges", max_edges, "edge bound (default 6)");
  cmd_achieve->add_option("--budget", budget, "refuse sweeps above this combination count");
  cmd_achieve->add_option("--threads", threads, "worker threads (0 = auto)");
  cmd_achieve->add_option("--format", census_format, "csv | json | text")
      ->check(CLI::IsMember({"csv", "json", "text"}));

  CLI11_PARSE(app, argc, argv);

  if (cmd_validate->parsed()) {
    std::string text = read_file(input);
    try {
      if (input.size() > 5 && input.substr(input.size() - 5) == ".json")
        gos::parse_gos_json(text);
      else
        gos::parse_gos_text(text);
    } catch (const gos::ValidationFailure& f) {
      for (const auto& err : f.errors())
        std::cerr << gos::error_kind_name(err.kind) << ": " << err.message << "\n";
      return 1;
    }
    std::cout << "ok\n";
    return 0;
  }

  if (cmd_achieve->parsed()) {
    gos::AchievabilityOptions opts{max_vertices, max_edges, budget, threads};
    auto report = gos::achievability_report(opts);
    if (census_format == "json") {
      json j{{"classified", report.classified},
             {"disc_found", report.disc_found},
             {"annulus_in_trivalent", report.annulus_in_trivalent},
             {"moebius_in_trivalent", report.moebius_in_trivalent}};
      j["classes"] = json::array();
      for (const auto& s : report.classes)
        j["classes"].push_back({{"orientable", s.orientable}, {"genus", s.genus}, {"boundary", s.boundary}});
      j["trivalent_classes"] = json::array();
      for (const auto& s : report.trivalent_classes)
        j["trivalent_classes"].push_back(
            {{"orientable", s.orientable}, {"genus", s.genus}, {"boundary", s.boundary}});
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "classified " << report.classified << " GOS structures on skeletons with V <= "
                << max_vertices << ", E <= " << max_edges << "\n";
      std::cout << "closed disc found: " << (report.disc_found ? "yes" : "no") << "\n";
      std::cout << "annulus on trivalent skeletons: " << (report.annulus_in_trivalent ? "yes" : "no")
                << "\n";
      std::cout << "moebius band on trivalent skeletons: "
                << (report.moebius_in_trivalent ? "yes" : "no") << "\n";
      std::cout << "classes seen:\n";
      for (const auto& s : report.classes) std::cout << "  " << gos::to_string(s) << "\n";
    }
    return 0;
  }

  if (cmd_census->parsed()) {
    gos::Skeleton sk = gos::Skeleton::of(load_input(input, 2));
    gos::CensusOptions opts;
    opts.all_plus = all_plus;
    opts.quotient_flips = quotient;
    opts.orientable_only = orientable_only;
    opts.budget = budget;
    opts.threads = threads;
    for (const auto& spec : fix_signs) {
      auto eq = spec.find('=');
      if (eq == std::string::npos || eq + 1 >= spec.size() ||
          (spec[eq + 1] != '+' && spec[eq + 1] != '-'))
        throw gos::GosError(gos::ErrorKind::BadParameter,
                            "--fix-sign wants <edge-index>=<+|->, got '" + spec + "'");
      opts.fixed_signs.push_back(
          {static_cast<std::uint32_t>(std::stoul(spec.substr(0, eq))), spec[eq + 1] == '+' ? 1 : -1});
    }
    auto table = gos::census(sk, opts);
    if (census_format == "json") {
      json j{{"raw", table.raw}, {"total", table.total}};
      j["rows"] = json::array();
      for (const auto& [cls, count] : table.counts)
        j["rows"].push_back({{"orientable", cls.orientable},
                             {"genus", cls.genus},
                             {"boundary", cls.boundary},
                             {"count", count}});
      std::cout << j.dump(2) << "\n";
    } else if (census_format == "csv") {
      std::cout << "class,genus,boundary,count\n";
      for (const auto& [cls, count] : table.counts)
        std::cout << class_row(cls) << "," << count << "\n";
    } else {
      std::cout << table.total << " structures"
                << (table.raw != table.total ? " (of " + std::to_string(table.raw) + " raw)" : "")
                << "\n";
      for (const auto& [cls, count] : table.counts)
        std::cout << "  " << gos::to_string(cls) << ": " << count << "\n";
    }
    return 0;
  }

  gos::Gos g = load_input(input, min_valency);

  if (cmd_generate->parsed()) {
    write_output(output, gos::serialize_gos_text(g));
    return 0;
  }

  if (cmd_classify->parsed()) {
    gos::SurfaceClass s = gos::classify(g);
    if (!svg_path.empty()) write_output(svg_path, gos::render_svg(g, svg_seed));
    if (format == "json") {
      json j = class_to_json(s, g);
      if (check) {
        j["checks"] = json::array();
        for (const auto& c : gos::cross_validate(g))
          j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      }
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << gos::to_string(s) << "  (V=" << g.vertex_count() << " E=" << g.edge_count()
                << " r=" << g.rank() << ")\n";
      auto h = gos::homology(s);
      std::cout << "capped-surface homology: H0=Z  H1=Z^" << h.h1_rank
                << (h.h1_torsion ? "+Z2" : "") << "  H2=" << (h.h2 ? "Z" : "0") << "\n";
      if (check)
        for (const auto& c : gos::cross_validate(g))
          std::cout << (c.pass ? "  pass  " : "  FAIL  ") << c.name << "  (" << c.detail << ")\n";
    }
    return 0;
  }

  if (cmd_orientable->parsed()) {
    bool orientable = gos::is_orientable(g);
    if (format == "json")
      std::cout << json{{"orientable", orientable}}.dump(2) << "\n";
    else
      std::cout << (orientable ? "orientable" : "non-orientable") << "\n";
    return 0;
  }

  if (cmd_boundary->parsed()) {
    auto piles = gos::boundary_components(g);
    if (!svg_path.empty()) write_output(svg_path, gos::render_svg(g, svg_seed));
    if (format == "json") {
      json j{{"b", piles.size()}};
      j["pile_sizes"] = json::array();
      for (const auto& pile : piles) j["pile_sizes"].push_back(pile.size());
      if (show_piles) {
        j["piles"] = json::array();
        for (const auto& pile : piles) {
          json jp = json::array();
          for (const auto& c : pile) jp.push_back({c.vertex, c.slot, c.side});
          j["piles"].push_back(std::move(jp));
        }
      }
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "b = " << piles.size() << "\n";
      for (std::size_t i = 0; i < piles.size(); ++i) {
        std::cout << "pile " << i + 1 << " (size " << piles[i].size() << ")";
        if (show_piles) {
          std::cout << ":";
          for (const auto& c : piles[i]) std::cout << " " << gos::to_string(c);
        }
        std::cout << "\n";
      }
    }
    return 0;
  }

  if (cmd_build->parsed()) {
    std::optional<std::vector<std::uint32_t>> order;
    if (!order_spec.empty()) {
      std::vector<std::uint32_t> seq;
      if (order_spec.rfind("random:", 0) == 0) {
        std::mt19937 rng(static_cast<unsigned>(std::stoul(order_spec.substr(7))));
        seq.resize(g.edge_count());
        for (std::uint32_t i = 0; i < seq.size(); ++i) seq[i] = i;
        std::shuffle(seq.begin(), seq.end(), rng);
      } else {
        std::stringstream ss(order_spec);
        std::string tok;
        while (std::getline(ss, tok, ',')) seq.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
      }
      order = std::move(seq);
    }
    gos::BuildState s = gos::build(g, order, true);
    if (format == "json") {
      json j{{"b", s.boundary_count()}, {"orientable", s.orientable()}, {"rho", s.rho().to_string(true)}};
      j["steps"] = json::array();
      for (const auto& step : s.trace())
        j["steps"].push_back({{"edge", {step.p, step.q}},
                              {"sign", step.sign},
                              {"case", step.label},
                              {"b", step.b_after},
                              {"rho", step.rho_after}});
      std::cout << j.dump(2) << "\n";
    } else {
      if (trace)
        for (std::size_t i = 0; i < s.trace().size(); ++i) {
          const auto& step = s.trace()[i];
          std::cout << "step " << i + 1 << ": edge (" << step.p << "," << step.q << ") "
                    << (step.sign > 0 ? "+" : "-") << "  case " << step.label << "  b=" << step.b_after
                    << "  rho=" << step.rho_after << "\n";
        }
      std::cout << "b = " << s.boundary_count() << ", "
                << (s.orientable() ? "orientable" : "non-orientable") << "\n";
    }
    return 0;
  }

  if (cmd_normalize->parsed()) {
    auto n = gos::normalize_all_plus(g);
    if (format == "json") {
      json j{{"flips", n.flips}, {"gos", gos::gos_to_json(n.gos)}};
      std::cout << j.dump(2) << "\n";
      if (!output.empty()) write_output(output, gos::serialize_gos_text(n.gos));
    } else {
      std::cerr << "flipped vertices:";
      if (n.flips.empty()) std::cerr << " (none)";
      for (auto v : n.flips) std::cerr << " " << v;
      std::cerr << "\n";
      write_output(output, gos::serialize_gos_text(n.gos));
    }
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const gos::ValidationFailure& f) {
    for (const auto& err : f.errors())
      std::cerr << gos::error_kind_name(err.kind) << ": " << err.message << "\n";
    return 1;
  } catch (const gos::GosError& e) {
    std::cerr << e.what() << "\n";
    switch (e.kind()) {
      case gos::ErrorKind::BudgetExceeded:
      case gos::ErrorKind::UnknownFamily:
      case gos::ErrorKind::BadParameter:
        return 2;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
