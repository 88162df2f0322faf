#include <catch_amalgamated.hpp>

#include <zdg/boolean_algebra.hpp>
#include <zdg/boolean_ring.hpp>
#include <zdg/families.hpp>
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

}  // namespace

TEST_CASE("power rings are Boolean rings", "[boolean]") {
  for (std::size_t k = 1; k <= 4; ++k) {
    auto r = boolean_power_ring(k);
    CHECK(r.size == (std::size_t(1) << k));
    CHECK(check_ring_axioms(r).empty());
  }
  auto g2 = zero_divisor_graph_of_ring(boolean_power_ring(2));
  CHECK(g2.graph == complete(2));
  CHECK(g2.element_of == std::vector<Element>{1, 2});
  CHECK(zero_divisor_graph_of_ring(boolean_power_ring(3)).graph.size() == 6);
}

TEST_CASE("ring axiom violations are found", "[boolean]") {
  auto r = boolean_power_ring(2);
  r.set_plus(1, 2, 1);
  auto bad = check_ring_axioms(r);
  REQUIRE_FALSE(bad.empty());
  CHECK_FALSE(to_string(bad.front()).empty());

  auto s = boolean_power_ring(2);
  s.set_times(1, 1, 0);
  auto laws = check_ring_axioms(s);
  CHECK(std::any_of(laws.begin(), laws.end(),
                    [](auto const& v) { return v.law == "idempotence"; }));
}

TEST_CASE("ring isomorphism search", "[boolean]") {
  auto r = boolean_power_ring(3);
  auto m = ring_isomorphic(r, r);
  REQUIRE(m.has_value());
  CHECK(ring_isomorphic(r, boolean_power_ring(2)) == std::nullopt);

  // the four-element ring built from K_2
  auto built = ring_from_graph(complete(2));
  CHECK(built.ring.size == 4);
  CHECK(ring_isomorphic(built.ring, boolean_power_ring(2)).has_value());

  CHECK_THROWS_AS(ring_isomorphic(boolean_power_ring(5), boolean_power_ring(5)),
                  TooLarge);
}

TEST_CASE("Boolean graph conditions", "[boolean]") {
  auto f3 = check_boolean_graph_conditions(boolean_power_graph(3));
  CHECK(f3.uniquely_determined);
  CHECK(f3.uniquely_complemented);
  CHECK(f3.meet_closed);
  CHECK(f3.has_boolean_semigroup);
  CHECK(f3.all());

  auto k3 = check_boolean_graph_conditions(complete(3));
  CHECK_FALSE(k3.uniquely_complemented);
  CHECK(k3.complement_failure.has_value());
  CHECK_FALSE(k3.all());

  auto p4 = check_boolean_graph_conditions(two_star(1, 1));
  CHECK_FALSE(p4.has_boolean_semigroup);
  CHECK_FALSE(p4.boolean_table.has_value());

  auto k22 = check_boolean_graph_conditions(complete_bipartite(2, 2));
  CHECK_FALSE(k22.uniquely_determined);
  CHECK(k22.twins.has_value());
  CHECK(k22.has_boolean_semigroup);

  CHECK_THROWS_WITH(ring_from_graph(complete(3)),
                    Catch::Matchers::ContainsSubstring("complemented"));
}

TEST_CASE("neighbourhood algebra of K_2", "[boolean]") {
  auto g   = complete(2);
  auto s   = MulTable::from_upper({{1, 0}, {2}});
  auto alg = build_algebra(g, s);
  REQUIRE(alg.size() == 4);
  CHECK(alg.set(0) == g.vertices());
  CHECK(alg.set(1) == VertexSet::singleton(1));
  CHECK(alg.set(2) == VertexSet::singleton(0));
  CHECK(alg.set(3).empty());
  CHECK(alg.unit() == 3);
  CHECK(alg.complement(1) == 2);
  CHECK(alg.complement(0) == 3);
  CHECK(alg.join(1, 2) == 0);
  CHECK(alg.meet(1, 2) == 3);
  CHECK(alg.owner(VertexSet::singleton(0)) == 2);
  CHECK_FALSE(alg.owner(VertexSet(0b111)).has_value());
}

TEST_CASE("neighbourhood algebra laws", "[boolean]") {
  auto g   = boolean_power_graph(3);
  auto c   = ring_from_graph(g);
  auto alg = c.algebra;
  REQUIRE(alg.size() == 8);
  for (Element x = 0; x < alg.size(); ++x) {
    CHECK(alg.join(x, alg.complement(x)) == 0);
    CHECK(alg.meet(x, alg.complement(x)) == alg.unit());
    for (Element y = 0; y < alg.size(); ++y) {
      CHECK(alg.join(x, y) == alg.times(x, y));
      CHECK(alg.set(alg.meet(x, y)) == (alg.set(x) & alg.set(y)));
      CHECK((alg.set(x) | alg.set(y)).is_subset_of(alg.set(alg.join(x, y))));
    }
  }
  CHECK_THROWS_AS(build_algebra(g, fixture_table(1)), Error);
}

TEST_CASE("ring construction round trips power rings", "[boolean]") {
  for (std::size_t k = 2; k <= 3; ++k) {
    INFO("k = " << k);
    auto const r  = boolean_power_ring(k);
    auto const rg = zero_divisor_graph_of_ring(r);
    auto const c  = ring_from_graph(rg.graph);
    CHECK(check_ring_axioms(c.ring).empty());
    CHECK(ring_isomorphic(c.ring, r).has_value());
    for (Element x = 0; x < c.ring.size; ++x) {
      CHECK(c.ring.plus(x, x) == 0);
    }
    CHECK(zero_divisor_graph_of_ring(c.ring).graph == rg.graph);
  }
}

TEST_CASE("ring text format", "[boolean][io]") {
  auto r    = boolean_power_ring(2);
  auto text = to_ring_string(r);
  CHECK(text
        == "zdg-ring 1\nn 4\nv 0 00\nv 1 10\nv 2 01\nv 3 11\n"
           "add\n0 1 2 3\n0 3 2\n0 1\n0\n"
           "mul\n0 0 0 0\n1 0 1\n2 2\n3\n");
  std::istringstream in(text);
  auto               back = read_ring(in);
  CHECK(back.add == r.add);
  CHECK(back.mul == r.mul);
  CHECK(back.names == r.names);
  CHECK(back.one == r.one);

  std::istringstream bad("zdg-ring 1\nn 2\nv 0 zero\nv 1 one\nadd\n0 1\n");
  try {
    read_ring(bad);
    FAIL("expected a parse error");
  } catch (ParseError const& e) {
    CHECK(e.line() == 6);
  }
}

TEST_CASE("Boolean graphs in the corpus give back their graph",
          "[boolean][property]") {
  std::size_t boolean_graphs = 0;
  for (auto const& g : testing::connected_unlabelled_graphs_up_to(6)) {
    auto c = check_boolean_graph_conditions(g);
    if (!c.all()) {
      continue;
    }
    ++boolean_graphs;
    INFO(to_graph_string(g));
    auto built = ring_from_graph(g);
    auto rg    = zero_divisor_graph_of_ring(built.ring);
    CHECK(rg.graph == g);
  }
  // K_2 and the six-vertex graph of F_2^3
  CHECK(boolean_graphs == 2);
}

TEST_CASE("conditions on small paths", "[boolean]") {
  auto p3 = check_boolean_graph_conditions(path(3));
  CHECK_FALSE(p3.uniquely_determined);
  CHECK(p3.has_boolean_semigroup);
}
