#include <catch_amalgamated.hpp>

#include <zdg/families.hpp>
#include <zdg/semigroup.hpp>
#include <zdg/semigroup_io.hpp>

using namespace zdg;

namespace {

  ElementSet es(std::initializer_list<std::size_t> xs) {
    return ElementSet::of(std::vector<std::size_t>(xs));
  }

  std::string fixture_path(int k) {
    return std::string(ZDG_FIXTURE_DIR) + "/table" + std::to_string(k)
           + ".zdg-table";
  }

  // fixture 1 and fixture 5 element ids
  constexpr Element a1 = 1, a2 = 2, a3 = 3, x1 = 4, x2 = 5;

}  // namespace

TEST_CASE("fixture tables satisfy the axioms", "[semigroup]") {
  for (std::size_t k = 1; k <= fixture_count; ++k) {
    INFO("fixture " << k);
    CHECK(check_axioms(fixture_table(k)).empty());
    CHECK(is_semigroup(fixture_table(k)));
  }
}

TEST_CASE("axiom violations are reported with witnesses", "[semigroup]") {
  // fixture 3 with u1*v1 = a1 instead of a3
  auto t = fixture_table(3);
  t.set(6, 8, a1);
  auto bad = check_axioms(t);
  REQUIRE_FALSE(bad.empty());
  for (auto const& v : bad) {
    CHECK(v.kind == AxiomViolation::Kind::associativity);
    CHECK(t(t(v.a, v.b), v.c) != t(v.a, t(v.b, v.c)));
  }

  auto rows = MulTable::from_rows({{0, 0, 0}, {0, 1, 2}, {0, 1, 2}});
  auto kinds = check_axioms(rows);
  CHECK(std::any_of(kinds.begin(), kinds.end(), [](auto const& v) {
    return v.kind == AxiomViolation::Kind::commutativity;
  }));

  auto nonzero = MulTable::from_rows({{0, 1}, {1, 1}});
  CHECK(check_axioms(nonzero).front().kind == AxiomViolation::Kind::zero);

  auto range = MulTable::from_rows({{0, 0}, {0, 7}});
  auto r     = check_axioms(range);
  REQUIRE(r.size() == 1);
  CHECK(r.front().kind == AxiomViolation::Kind::range);
  CHECK_FALSE(to_string(r.front()).empty());
}

TEST_CASE("zero-divisor graphs of tables", "[semigroup]") {
  CHECK(zero_divisor_graph(fixture_table(1)) == square_triangle());
  CHECK(zero_divisor_graph(fixture_table(4)) == triangle_ends(2, 2, 2));
  CHECK(zero_divisor_graph(fixture_table(5))
        == attach_ends(complete(3), {{0, 1}}));

  // x^2 = 0 makes x a zero-divisor without a loop
  MulTable single(1);
  auto     g = zero_divisor_graph(single);
  CHECK(g.size() == 1);
  CHECK(g.edge_count() == 0);

  // {0, e} with e^2 = e has a non-zero-divisor
  auto idem = MulTable::from_upper({{1}});
  CHECK(non_zero_divisors(idem) == es({1}));
  CHECK_THROWS_WITH(zero_divisor_graph(idem),
                    Catch::Matchers::ContainsSubstring("1"));
}

TEST_CASE("sub-semigroups and ideals", "[semigroup]") {
  auto t5 = fixture_table(5);
  CHECK_FALSE(is_subsemigroup(t5, es({0, x1})));
  CHECK(is_subsemigroup(t5, es({0})));
  CHECK(is_subsemigroup(t5, es({0, a1, a2, a3})));

  auto t1 = fixture_table(1);
  // a3 * x1 = a2 stays inside, x1 * x1 = x1
  CHECK(is_subsemigroup(t1, es({0, a1, a2, a3, x1})));
  CHECK(is_subsemigroup(t1, es({0, a3})));
  CHECK_FALSE(is_subsemigroup(t1, es({0, a3, x2})));

  // {0, a1} is an ideal of fixture 1: a1*x2 = a1, everything else 0
  CHECK(is_ideal(t1, es({0, a1}), t1.all()));
  CHECK(is_ideal(t1, es({0, a2}), t1.all()));
  CHECK_FALSE(is_ideal(t1, es({0, x1}), t1.all()));
}

TEST_CASE("annihilators", "[semigroup]") {
  auto t1 = fixture_table(1);
  CHECK(annihilator(t1, es({x1})) == es({0, a1, x2}));
  CHECK(annihilator(t1, ElementSet()) == t1.all());
  CHECK(annihilator(t1, es({x1, a2})) == es({0, a1, x2}));
}

TEST_CASE("Boolean, nilpotent and reduced", "[semigroup]") {
  CHECK(is_boolean(boolean_multipartite_table({2, 2, 1})));
  CHECK_FALSE(is_boolean(fixture_table(1)));
  auto t5 = fixture_table(5);
  CHECK(is_nilpotent(t5, a1));
  CHECK_FALSE(is_reduced(t5));
  // a2^2 = a1, a1^2 = 0
  CHECK(is_nilpotent(t5, a2));
  CHECK_FALSE(is_nilpotent(t5, a3));
  CHECK(is_reduced(boolean_multipartite_table({3})));
}

TEST_CASE("neighbourhood classes and lower sets", "[semigroup]") {
  auto t = boolean_multipartite_table({2, 1});
  // elements a11 a12 a21 = 1 2 3
  CHECK(equivalence_class(t, 1) == es({1, 2}));
  CHECK(lower_set(t, 3) == es({3}));
  CHECK(lower_set(t, 1) == es({1, 2}));
  CHECK_THROWS_AS(equivalence_class(t, 0), Error);
  CHECK_THROWS_AS(lower_set(t, 0), Error);

  auto t1 = fixture_table(1);
  for (Element x = 1; x <= t1.size(); ++x) {
    CHECK(equivalence_class(t1, x) == ElementSet::singleton(x));
  }
}

TEST_CASE("relabelling follows a vertex permutation", "[semigroup]") {
  auto t  = fixture_table(1);
  auto sw = relabel(t, {1, 0, 2, 4, 3});
  CHECK(sw == t);
  auto other = relabel(t, {0, 1, 2, 4, 3});
  CHECK(other != t);
  CHECK(is_semigroup(other));
}

TEST_CASE("table text format", "[semigroup][io]") {
  auto t    = fixture_table(5);
  auto text = to_table_string(t);
  CHECK(text == "zdg-table 1\nn 4\n0 0 0 0\n1 0 1\n3 3\n3\n");
  CHECK(table_from_string(text) == t);

  auto line_of = [](std::string const& s) {
    try {
      table_from_string(s);
    } catch (ParseError const& e) {
      return e.line();
    }
    return std::size_t(0);
  };
  // truncated input reports the last line read
  CHECK(line_of("zdg-table 1\nn 2\n0 0\n") == 3);
  CHECK(line_of("zdg-table 1\nn 2\n0 0 0\n0\n") == 3);
  CHECK(line_of("zdg-table 1\nn 2\n0 0\n3\n") == 4);
  CHECK(line_of("zdg-table 1\nn 2\n0 0\n0\n0\n") == 5);
}

TEST_CASE("fixture files match the built-in tables", "[semigroup][io]") {
  for (int k = 1; k <= static_cast<int>(fixture_count); ++k) {
    INFO("fixture " << k);
    auto from_file = load_table(fixture_path(k));
    CHECK(from_file == fixture_table(k));
  }
  CHECK_THROWS_AS(load_table("/nonexistent/file"), Error);
}

TEST_CASE("triangular rendering uses element names", "[semigroup][io]") {
  auto out = render_table(fixture_table(5), element_names(fixture_graph(5)));
  CHECK(out
        == " . | a1 a2 a3 x1\n"
           "---+------------\n"
           "a1 |  0  0  0  0\n"
           "a2 |    a1  0 a1\n"
           "a3 |       a3 a3\n"
           "x1 |          a3\n");
}
