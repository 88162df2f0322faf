// zdg - zero-divisor graphs of finite commutative semigroups
//
// JSON views of the library's reports (nlohmann::json). Tables are encoded
// as their upper triangle, row x holding the products x*y for y = x..n.
// Vertex ids, element ids and edge pairs are numbers; vertex sets are
// sorted arrays. The shapes are pinned by the schemas under schemas/.

#ifndef ZDG_JSON_HPP_
#define ZDG_JSON_HPP_

#include <vector>  // for vector

#include <nlohmann/json.hpp>  // for nlohmann::json

#include "boolean_algebra.hpp"  // for BooleanGraphConditions
#include "boolean_ring.hpp"     // for BooleanRing
#include "graph.hpp"            // for Graph, GraphProps
#include "realize.hpp"          // for RealizationReport
#include "semigroup.hpp"        // for MulTable
#include "theorems.hpp"         // for TheoremVerdict

namespace zdg {

  using json = nlohmann::json;

  inline json to_json(SmallSet s) {
    return s.to_vector();
  }

  inline json to_json(std::vector<Edge> const& edges) {
    json out = json::array();
    for (auto [u, v] : edges) {
      out.push_back({u, v});
    }
    return out;
  }

  inline json to_json(Graph const& g) {
    json names = json::array();
    for (std::size_t v = 0; v < g.size(); ++v) {
      names.push_back(g.label(v));
    }
    return {{"n", g.size()}, {"names", names}, {"edges", to_json(g.edges())}};
  }

  inline json to_json(MulTable const& t) {
    json rows = json::array();
    for (Element a = 1; a <= t.size(); ++a) {
      json row = json::array();
      for (Element b = a; b <= t.size(); ++b) {
        row.push_back(t(a, b));
      }
      rows.push_back(row);
    }
    return rows;
  }

  inline json to_json(RealizationReport const& r) {
    json tables = json::array();
    for (auto const& t : r.tables) {
      tables.push_back(to_json(t));
    }
    return {{"mode", to_string(r.mode)},
            {"labeled_count", r.labeled_count},
            {"iso_class_count", r.iso_class_count},
            {"status", to_string(r.status)},
            {"truncated", r.truncated},
            {"tables", tables}};
  }

  inline json to_json(GraphProps const& p) {
    return {{"connected", p.connected},
            {"diameter", p.diameter ? json(*p.diameter) : json(nullptr)},
            {"has_cycle", p.has_cycle},
            {"core_vertices", to_json(p.core_vertices)},
            {"core_edges", to_json(p.core_edges)},
            {"end_vertices", to_json(p.end_vertices)}};
  }

  inline json to_json(BooleanGraphConditions const& c) {
    json out = {{"uniquely_determined", c.uniquely_determined},
                {"uniquely_complemented", c.uniquely_complemented},
                {"meet_closed", c.meet_closed},
                {"has_boolean_semigroup", c.has_boolean_semigroup},
                {"boolean_graph", c.all()}};
    out["twins"]
        = c.twins ? json{c.twins->first, c.twins->second} : json(nullptr);
    out["complement_failure"] = c.complement_failure
                                    ? json(*c.complement_failure)
                                    : json(nullptr);
    out["meet_failure"] = c.meet_failure ? json{c.meet_failure->first,
                                                c.meet_failure->second}
                                         : json(nullptr);
    out["boolean_table"]
        = c.boolean_table ? to_json(*c.boolean_table) : json(nullptr);
    return out;
  }

  inline json to_json(BooleanRing const& r) {
    auto triangle = [&](std::vector<Element> const& table) {
      json rows = json::array();
      for (std::size_t a = 0; a < r.size; ++a) {
        json row = json::array();
        for (std::size_t b = a; b < r.size; ++b) {
          row.push_back(table[a * r.size + b]);
        }
        rows.push_back(row);
      }
      return rows;
    };
    return {{"size", r.size},
            {"one", r.one},
            {"names", r.names},
            {"add", triangle(r.add)},
            {"mul", triangle(r.mul)}};
  }

  inline json to_json(TheoremVerdict const& v) {
    return {{"theorem", v.theorem},
            {"instance", v.instance},
            {"hypotheses_met", v.hypotheses_met},
            {"conclusion_holds", v.conclusion_holds
                                     ? json(*v.conclusion_holds)
                                     : json(nullptr)},
            {"witness", v.witness.empty() ? json(nullptr) : json(v.witness)}};
  }

  inline json to_json(std::vector<TheoremVerdict> const& vs) {
    json out = json::array();
    for (auto const& v : vs) {
      out.push_back(to_json(v));
    }
    return out;
  }

}  // namespace zdg

#endif  // ZDG_JSON_HPP_
