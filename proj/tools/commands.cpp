#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ribbon/graph.hpp"
#include "ribbon/moves.hpp"
#include "ribbon/rotation.hpp"
#include "ribbon/schema.hpp"
#include "ribbon/schema_json.hpp"

namespace ribbon::cli {

namespace {

constexpr const char* kCycleMessage =
    "graph is a single cycle: it embeds essentially and isometrically on every closed hyperbolic surface "
    "after rescaling, so no genus is computed";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Validation, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct LoadedGraph {
  MetricGraph original;
  MetricGraph smoothed;
};

// Parses, rejects degree-1 vertices and cycles, and suppresses degree-2 vertices.
LoadedGraph load_graph(const std::string& path) {
  LoadedGraph out{parse_graph(read_file(path)), {}};
  for (const Violation& v : validate(out.original, 2)) throw Error(ErrorKind::Validation, v.message);
  if (is_cycle(out.original)) throw Error(ErrorKind::CycleGraph, kCycleMessage);
  out.smoothed = smooth(out.original);
  return out;
}

EnumerationOptions enumeration_options(const RunConfig& cfg) {
  EnumerationOptions opts;
  opts.max_rotations = cfg.max_rotations;
  opts.max_trees = cfg.max_trees;
  opts.threads = resolve_threads(cfg.threads);
  return opts;
}

template <class Body>
int guarded(std::ostream& err, Body body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::domain_error& e) {
    err << "error (validation): " << e.what() << '\n';
    return kValidation;
  }
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void print_diagnostics(const std::vector<Diagnostic>& diags, std::ostream& os) {
  for (const Diagnostic& d : diags) {
    os << (d.severity == Severity::Error ? "error " : "note ") << d.code << ": " << d.message << '\n';
  }
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::Validation: return kValidation;
    case ErrorKind::CycleGraph: return kCycle;
    case ErrorKind::InfeasibleTarget: return kInfeasibleTarget;
    case ErrorKind::CapExceeded: return kCapExceeded;
    case ErrorKind::InvariantViolation: return kInvariantViolation;
  }
  return kInvariantViolation;
}

std::optional<Target> parse_target(std::string_view text) {
  if (text == "minimal") return Target{TargetKind::Minimal, 0};
  if (text == "maximal") return Target{TargetKind::Maximal, 0};
  constexpr std::string_view prefix = "genus=";
  if (text.substr(0, prefix.size()) != prefix || text.size() == prefix.size()) return std::nullopt;
  std::size_t genus = 0;
  for (char c : text.substr(prefix.size())) {
    if (c < '0' || c > '9') return std::nullopt;
    genus = genus * 10 + static_cast<std::size_t>(c - '0');
    if (genus > 1'000'000) return std::nullopt;
  }
  return Target{TargetKind::Genus, genus};
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    LoadedGraph loaded = load_graph(cfg.input);
    const MetricGraph& g = loaded.smoothed;
    InvariantReport rep = analyze(g, enumeration_options(cfg));
    const bool genus_checked = rep.essential_genus_enumerated.has_value();
    const bool genus_agrees = !genus_checked || *rep.essential_genus_enumerated == rep.essential_genus;
    const bool bound_holds = !rep.ge_max_exact || static_cast<double>(*rep.ge_max_exact) <= rep.ge_max_bound.value();

    if (cfg.json) {
      nlohmann::ordered_json j;
      j["graph_hash"] = graph_hash(loaded.original);
      j["vertices"] = rep.vertices;
      j["edges"] = rep.edges;
      j["smoothed_vertices"] = loaded.original.vertex_count() - g.vertex_count();
      j["beta"] = rep.beta;
      j["zeta"] = rep.zeta;
      j["girth"] = rep.girth ? nlohmann::ordered_json(*rep.girth) : nlohmann::ordered_json("inf");
      j["euler"] = rep.euler;
      j["max_genus"] = rep.max_genus;
      j["essential_genus"] = rep.essential_genus;
      j["q"] = rep.q;
      j["r"] = rep.r;
      j["ge_max_bound"] = rep.ge_max_bound.str();
      j["ge_max_exact"] = rep.ge_max_exact ? nlohmann::ordered_json(*rep.ge_max_exact) : nullptr;
      j["min_boundaries"] = rep.min_boundaries ? nlohmann::ordered_json(*rep.min_boundaries) : nullptr;
      j["max_boundaries"] = rep.max_boundaries ? nlohmann::ordered_json(*rep.max_boundaries) : nullptr;
      j["essential_genus_certified"] = genus_checked && genus_agrees;
      j["ge_max_exact_certified"] = rep.ge_max_exact.has_value();
      out << j.dump(2) << '\n';
    } else {
      out << "graph_hash: " << graph_hash(loaded.original) << '\n'
          << "vertices: " << rep.vertices << '\n'
          << "edges: " << rep.edges << '\n'
          << "smoothed_vertices: " << loaded.original.vertex_count() - g.vertex_count() << '\n'
          << "beta: " << rep.beta << '\n'
          << "zeta: " << rep.zeta << '\n'
          << "girth: " << (rep.girth ? std::to_string(*rep.girth) : std::string("inf")) << '\n'
          << "euler: " << rep.euler << '\n'
          << "max_genus: " << rep.max_genus << '\n'
          << "essential_genus: " << rep.essential_genus << '\n'
          << "q: " << rep.q << '\n'
          << "r: " << rep.r << '\n'
          << "ge_max_bound: " << rep.ge_max_bound.str() << '\n'
          << "ge_max_exact: " << (rep.ge_max_exact ? std::to_string(*rep.ge_max_exact) : std::string("unavailable"))
          << '\n';
      if (rep.min_boundaries) {
        out << "min_boundaries: " << *rep.min_boundaries << '\n' << "max_boundaries: " << *rep.max_boundaries << '\n';
      }
      out << "essential_genus_certified: " << yes_no(genus_checked && genus_agrees) << '\n'
          << "ge_max_exact_certified: " << yes_no(rep.ge_max_exact.has_value()) << '\n';
    }
    if (!genus_agrees) {
      err << "invariant violation: enumerated essential genus " << *rep.essential_genus_enumerated
          << " differs from the formula value " << rep.essential_genus << '\n';
      return int{kInvariantViolation};
    }
    if (!bound_holds) {
      err << "invariant violation: ge_max_exact exceeds the girth bound\n";
      return int{kInvariantViolation};
    }
    return int{kOk};
  });
}

int cmd_embed(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!(cfg.margin > 0.0)) throw Error(ErrorKind::Validation, "--margin must be positive");
    LoadedGraph loaded = load_graph(cfg.input);
    const MetricGraph& g = loaded.smoothed;

    OptimizeOptions opts;
    opts.restarts = cfg.restarts;
    opts.seed = cfg.seed;
    opts.enumeration = enumeration_options(cfg);
    const RotationSystem start = default_rotation(g, cfg.seed);

    std::optional<std::size_t> essential;
    if (cfg.target.kind == TargetKind::Genus) {
      essential = essential_genus(g, cfg.max_trees);
      if (cfg.target.genus < *essential) {
        throw Error(ErrorKind::InfeasibleTarget, "target genus " + std::to_string(cfg.target.genus) +
                                                     " is below the essential genus g_e = " +
                                                     std::to_string(*essential));
      }
    }

    OptimizeResult best = cfg.target.kind == TargetKind::Maximal ? maximize_boundaries(g, start, opts)
                                                                  : minimize_boundaries(g, start, opts);
    if (!best.certified) {
      err << "warning: best rotation has " << best.boundaries << " boundary walks and is not certified optimal\n";
    }
    SurfaceSchema bordered = assemble_sigma_surface(g, best.rotation, cfg.margin);
    SurfaceSchema schema;
    if (cfg.target.kind == TargetKind::Genus) {
      SurfaceSchema standard = cap_standard(bordered);
      if (standard.summary.genus != *essential) {
        throw Error(ErrorKind::InvariantViolation, "minimal capping reached genus " +
                                                       std::to_string(standard.summary.genus) +
                                                       " instead of the essential genus " +
                                                       std::to_string(*essential));
      }
      schema = cap_target_genus(bordered, cfg.target.genus);
    } else {
      schema = cap_standard(bordered);
    }

    auto diags = verify_schema(schema);
    if (!is_clean(diags)) {
      print_diagnostics(diags, err);
      throw Error(ErrorKind::InvariantViolation, "emitted schema failed verification");
    }

    const std::string text = schema_to_json(schema);
    if (cfg.output.empty() || cfg.output == "-") {
      out << text;
    } else {
      std::ofstream file(cfg.output, std::ios::binary);
      if (!file) throw Error(ErrorKind::Validation, "cannot write '" + cfg.output + "'");
      file << text;
    }
    if (!cfg.moves_output.empty()) {
      std::ofstream log(cfg.moves_output, std::ios::binary);
      if (!log) throw Error(ErrorKind::Validation, "cannot write '" + cfg.moves_output + "'");
      for (const MoveRecord& m : best.moves) log << format_move(g, m) << '\n';
    }
    std::ostream& report = (cfg.output.empty() || cfg.output == "-") ? err : out;
    report << "genus: " << schema.summary.genus << '\n'
           << "boundary_walks: " << best.boundaries << '\n'
           << "minimal: " << yes_no(schema.summary.minimal) << '\n'
           << "certified: " << yes_no(best.certified) << " (" << to_string(best.method) << ")\n";
    return int{kOk};
  });
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    LoadedGraph loaded = load_graph(cfg.input);
    const MetricGraph& g = loaded.smoothed;
    const EnumerationOptions opts = enumeration_options(cfg);
    bool ok = true;
    auto check = [&](const std::string& what, bool pass) {
      out << "check " << what << ": " << (pass ? "ok" : "FAILED") << '\n';
      ok = ok && pass;
    };

    std::uint64_t trees = 0;
    for_each_spanning_tree(g, cfg.max_trees, [&](const SpanningTree&) { ++trees; });
    const std::size_t zeta = betti_deficiency(g, cfg.max_trees);
    BoundaryCensus census = boundary_census(g, opts);

    out << "rotations: " << census.total << '\n' << "boundary_histogram:";
    for (auto [b, count] : census.histogram) out << ' ' << b << ':' << count;
    out << '\n'
        << "min_boundaries: " << census.min_boundaries << '\n'
        << "max_boundaries: " << census.max_boundaries << '\n'
        << "spanning_trees: " << trees << '\n'
        << "zeta: " << zeta << '\n';

    check("min_boundaries == 1 + zeta", census.min_boundaries == 1 + zeta);
    bool same_parity = true;
    for (auto [b, count] : census.histogram) same_parity = same_parity && (b % 2 == census.min_boundaries % 2);
    check("boundary counts share one parity", same_parity);

    std::size_t lo = SIZE_MAX, hi = 0;
    for (auto [b, count] : census.histogram) {
      lo = std::min(lo, capped_genus_for_boundaries(g, b));
      hi = std::max(hi, capped_genus_for_boundaries(g, b));
    }
    const std::size_t formula = essential_genus(g, cfg.max_trees);
    out << "essential_genus: " << formula << '\n' << "ge_max_exact: " << hi << '\n';
    check("min capped genus == essential genus", lo == formula);
    const Rational bound = ge_max_bound(g);
    check("ge_max_exact <= " + bound.str(), static_cast<double>(hi) <= bound.value());

    RotationEnumerator enumerator(g, cfg.max_rotations);
    std::uint64_t attempts = 0, failures = 0, stalls = 0;
    enumerator.for_each([&](std::uint64_t, const RotationSystem& r) {
      auto incidence = vertex_boundary_incidence(g, r);
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (incidence[v] < 3) continue;
        ++attempts;
        auto move = find_move(g, r, v, -2);
        if (!move || boundary_count(g, move->rotation) + 2 != boundary_count(g, r)) ++failures;
      }
      if (greedy_minimize(g, r).boundaries != 1 + zeta) ++stalls;
    });
    out << "move_soundness: " << attempts << " reducible vertices, " << failures << " failures\n";
    check("every vertex meeting >= 3 walks admits a -2 move", failures == 0);
    out << "greedy_reach: " << census.total << " starts, " << stalls << " stalls\n";
    check("greedy descent reaches 1 + zeta from every rotation", stalls == 0);
    return ok ? int{kOk} : int{kInvariantViolation};
  });
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    SurfaceSchema schema = schema_from_json(read_file(cfg.input));
    auto diags = verify_schema(schema);
    print_diagnostics(diags, out);
    if (!is_clean(diags)) return int{kDiagnostics};
    out << "ok: genus " << schema.summary.genus << ", " << schema.summary.boundary_count << " boundaries, "
        << to_string(schema.summary.construction) << (schema.summary.minimal ? ", minimal" : "") << '\n';
    return int{kOk};
  });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Essential embeddings of metric graphs on hyperbolic surfaces", "ribbon-embed"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string target = "minimal";

  auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", cfg.threads, "Worker threads for enumeration (default: $RIBBON_EMBED_THREADS or 1)");
  };
  auto add_caps = [&](CLI::App* sub) {
    sub->add_option("--max-rotations", cfg.max_rotations, "Cap on enumerated rotation systems");
    sub->add_option("--max-trees", cfg.max_trees, "Cap on enumerated spanning trees");
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "Report Betti number, deficiency, girth and genus invariants");
  analyze_cmd->add_option("graph", cfg.input, "Graph file")->required();
  analyze_cmd->add_flag("--json", cfg.json, "Emit JSON instead of key: value lines");
  add_caps(analyze_cmd);
  add_threads(analyze_cmd);

  auto* embed_cmd = app.add_subcommand("embed", "Write a verified surface schema");
  embed_cmd->add_option("graph", cfg.input, "Graph file")->required();
  embed_cmd->add_option("--target", target, "minimal | maximal | genus=G");
  embed_cmd->add_option("--margin", cfg.margin, "Margin delta in t d(e) >= l(e) + f_min + delta");
  embed_cmd->add_option("--seed", cfg.seed, "Seed for the starting rotation and restarts");
  embed_cmd->add_option("--restarts", cfg.restarts, "Seeded greedy restarts before enumeration");
  embed_cmd->add_option("-o,--output", cfg.output, "Schema output path (default stdout)");
  embed_cmd->add_option("--moves", cfg.moves_output, "Write the applied move log here");
  add_caps(embed_cmd);
  add_threads(embed_cmd);

  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustively check boundary, parity and move claims");
  oracle_cmd->add_option("graph", cfg.input, "Graph file")->required();
  add_caps(oracle_cmd);
  add_threads(oracle_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Re-check a stored schema");
  verify_cmd->add_option("schema", cfg.input, "Schema JSON file")->required();

  std::vector<const char*> argv{"ribbon-embed"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? int{kOk} : int{kValidation};
  }

  if (analyze_cmd->parsed()) return cmd_analyze(cfg, out, err);
  if (oracle_cmd->parsed()) return cmd_oracle(cfg, out, err);
  if (verify_cmd->parsed()) return cmd_verify(cfg, out, err);
  auto parsed_target = parse_target(target);
  if (!parsed_target) {
    err << "error (validation): --target must be minimal, maximal or genus=G\n";
    return kValidation;
  }
  cfg.target = *parsed_target;
  return cmd_embed(cfg, out, err);
}

}  // namespace ribbon::cli
