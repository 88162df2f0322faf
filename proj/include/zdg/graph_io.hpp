// zdg - zero-divisor graphs of finite commutative semigroups
//
// The zdg-graph text format:
//
//   zdg-graph 1
//   n <count>
//   v <id> <name>      (optional, one per named vertex)
//   e <u> <v>          (u < v, sorted lexicographically on write)

#ifndef ZDG_GRAPH_IO_HPP_
#define ZDG_GRAPH_IO_HPP_

#include <fstream>  // for ifstream, ofstream
#include <istream>  // for istream
#include <ostream>  // for ostream
#include <sstream>  // for ostringstream, istringstream
#include <string>   // for string

#include "error.hpp"        // for Error, ParseError
#include "graph.hpp"        // for Graph
#include "text_format.hpp"  // for LineReader

namespace zdg {

  inline Graph read_graph(std::istream& in) {
    detail::LineReader reader(in);
    reader.expect_header("zdg-graph");
    auto n = reader.expect_count();
    if (n > Graph::max_vertices) {
      reader.fail("too many vertices");
    }
    Graph                    g(n);
    std::vector<std::string> tok;
    while (reader.next(tok)) {
      if (tok[0] == "v" && tok.size() >= 3) {
        auto id = reader.number(tok[1]);
        if (id >= n) {
          reader.fail("vertex id " + tok[1] + " out of range");
        }
        std::string name = tok[2];
        for (std::size_t i = 3; i < tok.size(); ++i) {
          name += " " + tok[i];
        }
        g.set_name(id, name);
      } else if (tok[0] == "e" && tok.size() == 3) {
        auto u = reader.number(tok[1]);
        auto v = reader.number(tok[2]);
        try {
          g.add_edge(u, v);
        } catch (Error const& e) {
          reader.fail(e.what());
        }
      } else {
        reader.fail("expected 'v <id> <name>' or 'e <u> <v>'");
      }
    }
    return g;
  }

  inline void write_graph(std::ostream& out, Graph const& g) {
    out << "zdg-graph 1\n";
    out << "n " << g.size() << "\n";
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (!g.name(v).empty()) {
        out << "v " << v << " " << g.name(v) << "\n";
      }
    }
    for (auto [u, v] : g.edges()) {
      out << "e " << u << " " << v << "\n";
    }
  }

  inline std::string to_graph_string(Graph const& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
  }

  inline Graph graph_from_string(std::string const& text) {
    std::istringstream in(text);
    return read_graph(in);
  }

  inline Graph load_graph(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open " + path);
    }
    try {
      return read_graph(in);
    } catch (ParseError const& e) {
      throw Error(path + ": " + e.what());
    }
  }

  inline void save_graph(std::string const& path, Graph const& g) {
    std::ofstream out(path);
    if (!out) {
      throw Error("cannot write " + path);
    }
    write_graph(out, g);
  }

}  // namespace zdg

#endif  // ZDG_GRAPH_IO_HPP_
