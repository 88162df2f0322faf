// zdg command-line tool.
//
// Exit status: 0 on success (including "no realization"), 1 when a check
// subcommand reports a failure, 2 on usage or input errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <zdg/json.hpp>
#include <zdg/zdg.hpp>

namespace {

  using namespace zdg;

  constexpr int exit_ok    = 0;
  constexpr int exit_check = 1;
  constexpr int exit_usage = 2;

  struct Globals {
    unsigned    threads = 1;
    bool        json    = false;
    std::size_t max_n   = default_max_vertices;
  };

  void print_json(json const& j) {
    std::cout << j.dump(2) << "\n";
  }

  // Writes to path, or to standard output when path is empty.
  template <typename Writer>
  void emit(std::string const& path, Writer&& write) {
    if (path.empty()) {
      write(std::cout);
      return;
    }
    std::ofstream out(path);
    if (!out) {
      throw Error("cannot write " + path);
    }
    write(out);
  }

  void print_report(RealizationReport const& r, Graph const& g) {
    std::cout << "mode: " << to_string(r.mode) << "\n"
              << "status: " << to_string(r.status) << "\n"
              << "labeled: " << r.labeled_count << "\n"
              << "iso-classes: " << r.iso_class_count << "\n"
              << "truncated: " << (r.truncated ? "yes" : "no") << "\n";
    auto const names = element_names(g);
    for (std::size_t i = 0; i < r.tables.size(); ++i) {
      std::cout << "\ntable " << i + 1 << "\n"
                << render_table(r.tables[i], names);
    }
  }

  std::string set_text(Graph const& g, VertexSet s) {
    std::string out = "{";
    for (auto v : s) {
      out += (out.size() > 1 ? ", " : "") + g.label(v);
    }
    return out + "}";
  }

  std::string yes_no(bool b) {
    return b ? "yes" : "no";
  }

  // ----------------------------------------------------------------------

  int cmd_realize(Globals const& gl, std::string const& path, bool boolean,
                  std::optional<std::size_t> limit, bool oracle) {
    auto const g    = load_graph(path);
    auto const mode = boolean ? Mode::boolean : Mode::plain;
    RealizationReport report;
    if (oracle) {
      report = brute_force_realize(g, mode);
    } else {
      RealizeOptions opts;
      opts.mode    = mode;
      opts.limit   = limit;
      opts.max_n   = gl.max_n;
      opts.threads = gl.threads;
      report       = realize_all(g, opts);
    }
    if (gl.json) {
      print_json(to_json(report));
    } else {
      print_report(report, g);
    }
    return exit_ok;
  }

  int cmd_props(Globals const& gl, std::string const& path) {
    auto const g = load_graph(path);
    auto const p = properties(g);
    auto const twins = neighborhood_twins(g);
    auto const comp  = complementation_failure(g);
    auto const meet  = meet_closure_failure(g);
    if (gl.json) {
      auto j                     = to_json(p);
      j["graph"]                 = to_json(g);
      j["uniquely_determined"]   = !twins;
      j["complemented"]          = is_complemented(g);
      j["uniquely_complemented"] = !comp;
      j["meet_closed"]           = !meet;
      print_json(j);
      return exit_ok;
    }
    std::cout << "vertices: " << g.size() << "\n"
              << "edges: " << g.edge_count() << "\n"
              << "connected: " << yes_no(p.connected) << "\n"
              << "diameter: "
              << (p.diameter ? std::to_string(*p.diameter) : "infinite")
              << "\n"
              << "has-cycle: " << yes_no(p.has_cycle) << "\n"
              << "core-vertices: " << set_text(g, p.core_vertices) << "\n"
              << "core-edges: " << p.core_edges.size() << "\n"
              << "end-vertices: " << set_text(g, p.end_vertices) << "\n"
              << "uniquely-determined: " << yes_no(!twins);
    if (twins) {
      std::cout << " (N(" << g.label(twins->first) << ") = N("
                << g.label(twins->second) << "))";
    }
    std::cout << "\ncomplemented: " << yes_no(is_complemented(g)) << "\n"
              << "uniquely-complemented: " << yes_no(!comp);
    if (comp) {
      std::cout << " (fails at " << g.label(*comp) << ")";
    }
    std::cout << "\nmeet-closed: " << yes_no(!meet);
    if (meet) {
      std::cout << " (fails at " << g.label(meet->first) << ", "
                << g.label(meet->second) << ")";
    }
    std::cout << "\n";
    return exit_ok;
  }

  int cmd_boolean_ring(Globals const& gl, std::string const& path,
                       std::string const& emit_path, bool check_only) {
    auto const g = load_graph(path);
    auto const c = check_boolean_graph_conditions(g, gl.max_n);
    std::optional<RingConstruction> built;
    if (c.all() && !check_only) {
      built = ring_from_graph(g, gl.max_n);
      if (!emit_path.empty()) {
        save_ring(emit_path, built->ring);
      }
    }
    if (gl.json) {
      json j = {{"conditions", to_json(c)}};
      if (built) {
        j["ring"]  = to_json(built->ring);
        j["table"] = to_json(built->table);
      }
      print_json(j);
    } else {
      std::cout << "uniquely-determined: " << yes_no(c.uniquely_determined)
                << "\n"
                << "uniquely-complemented: "
                << yes_no(c.uniquely_complemented) << "\n"
                << "meet-closed: " << yes_no(c.meet_closed) << "\n"
                << "boolean-semigroup: " << yes_no(c.has_boolean_semigroup)
                << "\n"
                << "boolean-graph: " << yes_no(c.all()) << "\n";
      if (built) {
        std::cout << "\nrealization used\n"
                  << render_table(built->table, element_names(g)) << "\n"
                  << to_ring_string(built->ring);
      }
    }
    return c.all() ? exit_ok : exit_check;
  }

  Graph make_family(std::string const&              name,
                    std::vector<std::size_t> const& p) {
    auto need = [&](std::size_t k) {
      if (p.size() != k) {
        throw CLI::ValidationError("family " + name + " takes "
                                   + std::to_string(k) + " parameter(s)");
      }
    };
    if (name == "complete") {
      need(1);
      return complete(p[0]);
    }
    if (name == "complete-bipartite") {
      need(2);
      return complete_bipartite(p[0], p[1]);
    }
    if (name == "multipartite") {
      return complete_multipartite(p);
    }
    if (name == "clique-ends") {
      need(2);
      return clique_with_ends(p[0], p[1]);
    }
    if (name == "two-star") {
      need(2);
      return two_star(p[0], p[1]);
    }
    if (name == "square-triangle") {
      need(0);
      return square_triangle();
    }
    if (name == "shared-ends") {
      need(2);
      return square_triangle_shared_ends(p[0], p[1]);
    }
    if (name == "apex-ends") {
      need(1);
      return square_triangle_apex_ends(p[0]);
    }
    if (name == "corner-ends") {
      need(1);
      return square_triangle_corner_ends(p[0]);
    }
    if (name == "triangle-ends") {
      need(3);
      return triangle_ends(p[0], p[1], p[2]);
    }
    if (name == "boolean-power") {
      need(1);
      return boolean_power_graph(p[0]);
    }
    throw CLI::ValidationError("unknown family " + name);
  }

  std::string verdict_line(TheoremVerdict const& v) {
    std::string state = !v.hypotheses_met       ? "n/a"
                        : *v.conclusion_holds ? "holds"
                                              : "COUNTEREXAMPLE";
    std::string line = v.theorem + " [" + v.instance + "]: " + state;
    if (!v.witness.empty()) {
      line += " (" + v.witness + ")";
    }
    return line;
  }

  void print_summary(std::vector<TheoremVerdict> const& vs) {
    struct Tally {
      std::size_t applicable = 0, held = 0, skipped = 0;
    };
    std::map<std::string, Tally> tally;
    for (auto const& v : vs) {
      auto& t = tally[v.theorem];
      if (!v.hypotheses_met) {
        ++t.skipped;
      } else {
        ++t.applicable;
        t.held += *v.conclusion_holds ? 1 : 0;
      }
    }
    for (auto const& [id, t] : tally) {
      std::cout << id << ": " << t.held << "/" << t.applicable
                << " hold, " << t.skipped << " not applicable\n";
    }
  }

  int cmd_theorems(Globals const& gl, std::string const& path, bool sweep,
                   bool boolean) {
    if (!sweep) {
      auto const t  = load_table(path);
      auto const vs = verify_all(t);
      if (gl.json) {
        print_json(to_json(vs));
      } else {
        for (auto const& v : vs) {
          std::cout << verdict_line(v) << "\n";
        }
      }
      return count_counterexamples(vs) == 0 ? exit_ok : exit_check;
    }
    auto const     g = load_graph(path);
    RealizeOptions opts;
    opts.mode    = boolean ? Mode::boolean : Mode::plain;
    opts.max_n   = gl.max_n;
    opts.threads = gl.threads;
    auto const report = realize_all(g, opts);
    auto const all    = verify_tables(report.tables, {}, gl.threads);
    std::size_t failures = 0;
    std::vector<TheoremVerdict> flat;
    json tables = json::array();
    for (std::size_t i = 0; i < all.size(); ++i) {
      failures += count_counterexamples(all[i]);
      flat.insert(flat.end(), all[i].begin(), all[i].end());
      tables.push_back(
          {{"table", to_json(report.tables[i])}, {"verdicts", to_json(all[i])}});
    }
    if (gl.json) {
      print_json({{"mode", to_string(opts.mode)},
                  {"tables", tables},
                  {"counterexamples", failures}});
    } else {
      std::cout << "tables: " << report.tables.size() << "\n";
      print_summary(flat);
      for (std::size_t i = 0; i < all.size(); ++i) {
        for (auto const& v : all[i]) {
          if (v.counterexample()) {
            std::cout << "table " << i + 1 << ": " << verdict_line(v) << "\n";
          }
        }
      }
      std::cout << "counterexamples: " << failures << "\n";
    }
    return failures == 0 ? exit_ok : exit_check;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero-divisor graphs of finite commutative semigroups"};
  app.require_subcommand(1);
  Globals gl;
  app.add_option("--threads", gl.threads, "worker threads")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", gl.json, "JSON output");
  app.add_option("--max-n", gl.max_n, "vertex cap for searches")
      ->check(CLI::PositiveNumber);

  std::string                graph_path;
  bool                       boolean = false;
  bool                       oracle  = false;
  bool                       text    = false;
  std::optional<std::size_t> limit;

  auto* realize = app.add_subcommand("realize", "enumerate realizations");
  realize->fallthrough();
  realize->add_option("graph", graph_path, "graph file")->required();
  realize->add_flag("--boolean", boolean, "Boolean semigroups only");
  realize->add_option("--limit", limit, "stop after N labeled tables");
  realize->add_flag("--oracle", oracle, "use the brute-force enumeration");
  realize->add_flag("--text", text, "text output (default)");

  auto* props = app.add_subcommand("props", "graph properties");
  props->fallthrough();
  props->add_option("graph", graph_path, "graph file")->required();

  std::string emit_path;
  bool        check_only = false;
  auto*       ring = app.add_subcommand("boolean-ring",
                                        "Boolean-graph test and ring construction");
  ring->fallthrough();
  ring->add_option("graph", graph_path, "graph file")->required();
  ring->add_option("--emit-tables", emit_path, "write the ring here");
  ring->add_flag("--check-only", check_only, "only evaluate the conditions");

  std::string              family_name;
  std::vector<std::size_t> params;
  std::string              out_path;
  auto* family = app.add_subcommand("family", "write a family graph");
  family->fallthrough();
  family->add_option("name", family_name,
                     "complete | complete-bipartite | multipartite | "
                     "clique-ends | two-star | square-triangle | "
                     "shared-ends | apex-ends | corner-ends | "
                     "triangle-ends | boolean-power")
      ->required();
  family->add_option("params", params, "family parameters");
  family->add_option("-o,--output", out_path, "output file");

  std::size_t fixture_k = 0;
  std::string fixture_graph_path;
  auto* fixture = app.add_subcommand("fixture", "write a reference table");
  fixture->fallthrough();
  fixture->add_option("k", fixture_k, "fixture number")
      ->required()
      ->check(CLI::Range(std::size_t(1), fixture_count));
  fixture->add_option("-o,--output", out_path, "table file");
  fixture->add_option("--graph", fixture_graph_path,
                      "also write its zero-divisor graph");

  std::string input_path;
  bool        sweep = false;
  auto* theorems = app.add_subcommand("theorems", "verify theorem statements");
  theorems->fallthrough();
  theorems
      ->add_option("file", input_path,
                   "table file, or graph file with --sweep")
      ->required();
  theorems->add_flag("--sweep", sweep,
                     "realize the graph and verify every table");
  theorems->add_flag("--boolean", boolean, "sweep Boolean realizations only");

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force realize");
  oracle_cmd->fallthrough();
  oracle_cmd->add_option("graph", graph_path, "graph file")->required();
  oracle_cmd->add_flag("--boolean", boolean, "Boolean semigroups only");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    auto code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }
  if (text) {
    gl.json = false;
  }

  try {
    if (*realize) {
      return cmd_realize(gl, graph_path, boolean, limit, oracle);
    }
    if (*props) {
      return cmd_props(gl, graph_path);
    }
    if (*ring) {
      return cmd_boolean_ring(gl, graph_path, emit_path, check_only);
    }
    if (*family) {
      auto g = make_family(family_name, params);
      emit(out_path, [&](std::ostream& o) { write_graph(o, g); });
      return exit_ok;
    }
    if (*fixture) {
      emit(out_path,
           [&](std::ostream& o) { write_table(o, fixture_table(fixture_k)); });
      if (!fixture_graph_path.empty()) {
        save_graph(fixture_graph_path, fixture_graph(fixture_k));
      }
      return exit_ok;
    }
    if (*theorems) {
      return cmd_theorems(gl, input_path, sweep, boolean);
    }
    if (*oracle_cmd) {
      return cmd_realize(gl, graph_path, boolean, std::nullopt, true);
    }
  } catch (CLI::ValidationError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (zdg::Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
