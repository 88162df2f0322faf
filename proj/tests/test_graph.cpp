#include <algorithm>
#include <set>

#include <catch_amalgamated.hpp>

#include <zdg/families.hpp>
#include <zdg/graph.hpp>
#include <zdg/graph_io.hpp>

#include "corpus.hpp"

using namespace zdg;

namespace {

  Graph path(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t v = 0; v + 1 < n; ++v) {
      edges.emplace_back(v, v + 1);
    }
    return Graph::from_edge_list(n, edges);
  }

  Graph star(std::size_t leaves) {
    std::vector<Edge> edges;
    for (std::size_t v = 1; v <= leaves; ++v) {
      edges.emplace_back(0, v);
    }
    return Graph::from_edge_list(leaves + 1, edges);
  }

  VertexSet vs(std::initializer_list<std::size_t> xs) {
    return VertexSet::of(std::vector<std::size_t>(xs));
  }

  // a1 a2 a3 x1 x2 = 0 1 2 3 4
  constexpr std::size_t a1 = 0, a2 = 1, a3 = 2, x1 = 3, x2 = 4;

}  // namespace

TEST_CASE("edge lists build simple graphs", "[graph]") {
  auto k2 = Graph::from_edge_list(2, {{0, 1}});
  CHECK(k2.size() == 2);
  CHECK(k2.edge_count() == 1);
  CHECK(k2.adjacent(0, 1));
  CHECK(k2.adjacent(1, 0));

  auto dup = Graph::from_edge_list(3, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(dup.edge_count() == 1);
  CHECK(dup.degree(2) == 0);

  auto g = Graph::from_edge_list(
      5, {{a1, x1}, {x1, x2}, {x2, a2}, {a2, a1}, {a1, a3}, {a2, a3}});
  CHECK(g == square_triangle());
  CHECK(g.edges()
        == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {3, 4}});
}

TEST_CASE("edge lists reject bad pairs", "[graph]") {
  CHECK_THROWS_AS(Graph::from_edge_list(2, {{0, 2}}), Error);
  CHECK_THROWS_AS(Graph::from_edge_list(2, {{1, 1}}), Error);
  CHECK_THROWS_WITH(Graph::from_edge_list(3, {{0, 1}, {2, 2}}),
                    Catch::Matchers::ContainsSubstring("2"));
  CHECK_THROWS_AS(Graph(65), TooLarge);
}

TEST_CASE("connectivity and diameter", "[graph]") {
  auto k2 = complete(2);
  CHECK(is_connected(k2));
  CHECK(diameter(k2) == 1);
  CHECK(diameter(square_triangle()) == 2);
  CHECK(diameter(Graph(1)) == 0);
  CHECK(diameter(path(4)) == 3);

  auto two_edges = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(is_connected(two_edges));
  CHECK_FALSE(diameter(two_edges).has_value());
  CHECK(component_count(two_edges) == 2);
  CHECK_FALSE(is_connected(Graph(0)));
}

TEST_CASE("core is the union of cycle edges", "[graph]") {
  auto p4 = core(path(4));
  CHECK(p4.vertices.empty());
  CHECK(p4.edges.empty());
  CHECK_FALSE(has_cycle(path(4)));

  auto g = square_triangle();
  auto k = core(g);
  CHECK(k.vertices == g.vertices());
  CHECK(k.edges == g.edges());

  auto tail = attach_ends(complete(3), {{0, 1}});
  auto kt   = core(tail);
  CHECK(kt.vertices == vs({0, 1, 2}));
  CHECK(kt.edges == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("end vertices and pendant sets", "[graph]") {
  auto m43 = clique_with_ends(4, 3);
  CHECK(pendant_set(m43, 0) == vs({4}));
  CHECK(pendant_set(m43, 3).empty());
  CHECK(end_vertices(m43) == vs({4, 5, 6}));

  auto k3 = complete(3);
  for (std::size_t v = 0; v < 3; ++v) {
    CHECK(pendant_set(k3, v).empty());
  }
  auto s = star(4);
  CHECK(pendant_set(s, 0) == vs({1, 2, 3, 4}));
}

TEST_CASE("internal vertices", "[graph]") {
  auto tail = attach_ends(complete(3), {{0, 1}});
  CHECK(is_internal_vertex(tail, 1));
  CHECK_FALSE(is_internal_vertex(tail, 0));
  CHECK_FALSE(is_internal_vertex(tail, 3));

  auto k2 = complete(2);
  CHECK_FALSE(is_internal_vertex(k2, 0));
  CHECK_FALSE(is_internal_vertex(k2, 1));

  auto g = square_triangle();
  CHECK(is_internal_vertex(g, a3));
  CHECK(is_internal_vertex(g, x1));
  CHECK(is_internal_vertex(g, x2));
}

TEST_CASE("unique determination by neighbourhoods", "[graph]") {
  CHECK_FALSE(is_uniquely_determined(complete_bipartite(2, 2)));
  CHECK(neighborhood_twins(complete_bipartite(2, 2)) == Edge{0, 1});
  CHECK(is_uniquely_determined(boolean_power_graph(3)));
  CHECK(is_uniquely_determined(complete(3)));

  // K_{2,1}: the twins have degree 1, the centre degree 2
  auto k21 = complete_bipartite(2, 1);
  CHECK_FALSE(is_m_uniquely_determined(k21, 1));
  CHECK(is_m_uniquely_determined(k21, 2));
}

TEST_CASE("complementation", "[graph]") {
  auto k2 = complete(2);
  CHECK(perpendicular(k2, 0, 1));
  CHECK(is_complemented(k2));
  CHECK(is_uniquely_complemented(k2));

  auto k3 = complete(3);
  CHECK_FALSE(perpendicular(k3, 0, 1));
  CHECK_FALSE(is_complemented(k3));
  CHECK(complementation_failure(k3) == 0);

  CHECK(is_uniquely_complemented(boolean_power_graph(3)));

  // the centre's partners are all leaves, which share a neighbourhood
  CHECK(is_uniquely_complemented(star(3)));
  // P_4 = x-a-b-y: a's partners are x and b with N(x) != N(b)
  CHECK(is_complemented(path(4)));
  CHECK_FALSE(is_uniquely_complemented(path(4)));
}

TEST_CASE("neighbourhood meets", "[graph]") {
  CHECK(neighborhood_meet_closed(complete(2)));
  CHECK(neighborhood_meet_closed(boolean_power_graph(3)));
  CHECK_FALSE(neighborhood_meet_closed(complete(3)));

  // K_3: N(a1) ∩ N(a2) = {a3} is nobody's neighbourhood
  auto h = complete(3);
  auto fail = meet_closure_failure(h);
  REQUIRE(fail.has_value());
  auto meet = h.neighbors(fail->first) & h.neighbors(fail->second);
  CHECK_FALSE(meet.empty());
  for (std::size_t z = 0; z < h.size(); ++z) {
    CHECK(h.neighbors(z) != meet);
  }
}

TEST_CASE("automorphisms and isomorphism", "[graph]") {
  CHECK(automorphisms(complete(3)).size() == 6);
  CHECK(automorphisms(path(3)).size() == 2);
  CHECK(automorphism_group(complete(5)).order == 120);

  // the swap (a1 a2)(x1 x2) is the only non-trivial symmetry
  auto autos = automorphisms(square_triangle());
  REQUIRE(autos.size() == 2);
  CHECK(std::find(autos.begin(), autos.end(),
                  Permutation{a2, a1, a3, x2, x1})
        != autos.end());

  auto p = path(4);
  auto q = Graph::from_edge_list(4, {{2, 0}, {0, 3}, {3, 1}});
  auto m = is_isomorphic(p, q);
  REQUIRE(m.has_value());
  for (auto [u, v] : p.edges()) {
    CHECK(q.adjacent((*m)[u], (*m)[v]));
  }
  CHECK_FALSE(is_isomorphic(path(4), star(3)).has_value());
  CHECK_FALSE(is_isomorphic(path(4), path(5)).has_value());

  CHECK_THROWS_AS(automorphisms(Graph(13)), TooLarge);
}

TEST_CASE("graph text format", "[graph][io]") {
  auto g    = fixture_graph(5);
  auto text = to_graph_string(g);
  CHECK(text
        == "zdg-graph 1\nn 4\nv 0 a1\nv 1 a2\nv 2 a3\nv 3 x1\n"
           "e 0 1\ne 0 2\ne 0 3\ne 1 2\n");
  auto back = graph_from_string(text);
  CHECK(back == g);
  CHECK(back.name(3) == "x1");
  CHECK(to_graph_string(back) == text);

  auto plain = graph_from_string(
      "# comment\nzdg-graph 1\nn 3\n\ne 1 2 # trailing\ne 0 1\n");
  CHECK(plain.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK_FALSE(plain.has_names());
  CHECK(to_graph_string(plain) == "zdg-graph 1\nn 3\ne 0 1\ne 1 2\n");
}

TEST_CASE("graph parse errors carry line numbers", "[graph][io]") {
  auto line_of = [](std::string const& text) {
    try {
      graph_from_string(text);
    } catch (ParseError const& e) {
      return e.line();
    }
    return std::size_t(0);
  };
  CHECK(line_of("zdg-graf 1\n") == 1);
  CHECK(line_of("zdg-graph 1\nm 3\n") == 2);
  CHECK(line_of("zdg-graph 1\nn 3\ne 0 1\ne 0 9\n") == 4);
  CHECK(line_of("zdg-graph 1\nn 3\ne 2 2\n") == 3);
  CHECK(line_of("zdg-graph 1\nn 3\nq 0 1\n") == 3);
  CHECK(line_of("zdg-graph 1\nn 3\ne 0 x\n") == 3);
  CHECK(line_of("zdg-graph 1\n") > 0);
}

TEST_CASE("graph invariants over the small corpus", "[graph][property]") {
  for (auto const& g : testing::connected_unlabelled_graphs_up_to(6)) {
    INFO(to_graph_string(g));
    // symmetric, loop-free
    for (std::size_t u = 0; u < g.size(); ++u) {
      CHECK_FALSE(g.adjacent(u, u));
      for (std::size_t v = 0; v < g.size(); ++v) {
        CHECK(g.adjacent(u, v) == g.adjacent(v, u));
      }
    }
    // core edges lie on explicit cycles; the rest is a forest
    auto k = core(g);
    Graph rest(g.size());
    for (auto [u, v] : g.edges()) {
      bool in_core = std::binary_search(k.edges.begin(), k.edges.end(),
                                        Edge{u, v});
      if (in_core) {
        auto cyc = cycle_through_edge(g, u, v);
        REQUIRE(cyc.has_value());
        CHECK(cyc->front() == u);
        CHECK(cyc->back() == v);
        CHECK(cyc->size() >= 3);
        for (std::size_t i = 0; i + 1 < cyc->size(); ++i) {
          CHECK(g.adjacent((*cyc)[i], (*cyc)[i + 1]));
        }
      } else {
        rest.add_edge(u, v);
      }
    }
    CHECK_FALSE(has_cycle(rest));

    bool all_m = true;
    for (std::size_t m = 1; m <= g.size(); ++m) {
      all_m = all_m && is_m_uniquely_determined(g, m);
    }
    CHECK(all_m == is_uniquely_determined(g));

    auto const autos = automorphisms(g);
    std::set<Permutation> group(autos.begin(), autos.end());
    CHECK(group.size() == autos.size());
    CHECK(automorphism_group(g).order == autos.size());
    for (auto const& p : autos) {
      CHECK(is_automorphism(g, p));
      CHECK(group.count(inverse(p)) == 1);
      for (auto const& q : autos) {
        CHECK(group.count(compose(p, q)) == 1);
      }
    }
  }
}
