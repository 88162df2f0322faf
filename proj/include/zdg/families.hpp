// zdg - zero-divisor graphs of finite commutative semigroups
//
// Graph families and fixture semigroups. Vertices are numbered in the order
// documented on each generator; generators name their vertices so tables
// render readably.

#ifndef ZDG_FAMILIES_HPP_
#define ZDG_FAMILIES_HPP_

#include <cstddef>  // for size_t
#include <string>   // for string, to_string
#include <utility>  // for pair
#include <vector>   // for vector

#include "boolean_ring.hpp"  // for BooleanRing, zero_divisor_graph_of_ring
#include "error.hpp"         // for Error
#include "graph.hpp"         // for Graph
#include "semigroup.hpp"     // for MulTable

namespace zdg {

  namespace detail {
    inline void require(bool ok, std::string const& what) {
      if (!ok) {
        throw Error("invalid family parameters: " + what);
      }
    }

    inline std::string indexed(char const* stem, std::size_t i) {
      return stem + std::to_string(i);
    }
  }  // namespace detail

  //! K_n on a1..an.
  inline Graph complete(std::size_t n) {
    detail::require(n >= 1, "complete graph needs n >= 1");
    Graph g(n);
    for (std::size_t u = 0; u < n; ++u) {
      g.set_name(u, detail::indexed("a", u + 1));
      for (std::size_t v = u + 1; v < n; ++v) {
        g.add_edge(u, v);
      }
    }
    return g;
  }

  //! Complete multipartite graph, numbered part by part; vertex k of part i
  //! is named a<i><k>.
  inline Graph complete_multipartite(std::vector<std::size_t> const& sizes) {
    detail::require(!sizes.empty(), "at least one part");
    std::vector<std::size_t> part;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      detail::require(sizes[i] >= 1, "parts are nonempty");
      part.insert(part.end(), sizes[i], i);
    }
    Graph g(part.size());
    for (std::size_t u = 0, k = 0; u < part.size(); ++u) {
      k = (u == 0 || part[u] != part[u - 1]) ? 1 : k + 1;
      g.set_name(u, "a" + std::to_string(part[u] + 1) + std::to_string(k));
      for (std::size_t v = 0; v < u; ++v) {
        if (part[u] != part[v]) {
          g.add_edge(u, v);
        }
      }
    }
    return g;
  }

  inline Graph complete_bipartite(std::size_t m, std::size_t n) {
    return complete_multipartite({m, n});
  }

  //! Appends count end vertices to each listed vertex, in list order.
  inline Graph attach_ends(
      Graph const& g,
      std::vector<std::pair<std::size_t, std::size_t>> const& assignments) {
    std::size_t extra = 0;
    for (auto [v, count] : assignments) {
      detail::require(v < g.size(), "attachment vertex in range");
      extra += count;
    }
    Graph h(g.size() + extra);
    for (std::size_t v = 0; v < g.size(); ++v) {
      h.set_name(v, g.name(v));
    }
    for (auto [u, v] : g.edges()) {
      h.add_edge(u, v);
    }
    auto next = g.size();
    for (auto [v, count] : assignments) {
      for (std::size_t i = 0; i < count; ++i, ++next) {
        h.add_edge(v, next);
      }
    }
    return h;
  }

  //! Joins v to every vertex of h (appended after g's vertices). v must be
  //! an internal vertex of g.
  inline Graph attach_graph(Graph const& g, std::size_t v, Graph const& h) {
    detail::require(v < g.size(), "attachment vertex in range");
    if (!is_internal_vertex(g, v)) {
      throw Error("vertex " + std::to_string(v) + " is not internal");
    }
    Graph out(g.size() + h.size());
    for (std::size_t u = 0; u < g.size(); ++u) {
      out.set_name(u, g.name(u));
    }
    for (std::size_t u = 0; u < h.size(); ++u) {
      out.set_name(g.size() + u, h.name(u));
      out.add_edge(v, g.size() + u);
    }
    for (auto [a, b] : g.edges()) {
      out.add_edge(a, b);
    }
    for (auto [a, b] : h.edges()) {
      out.add_edge(g.size() + a, g.size() + b);
    }
    return out;
  }

  //! K_n on a1..an with end vertices x_i on a_i for i = 1..k.
  inline Graph clique_with_ends(std::size_t n, std::size_t k) {
    detail::require(n >= 1 && k <= n, "n >= 1 and k <= n");
    std::vector<std::pair<std::size_t, std::size_t>> ends;
    for (std::size_t i = 0; i < k; ++i) {
      ends.emplace_back(i, 1);
    }
    auto g = attach_ends(complete(n), ends);
    for (std::size_t i = 0; i < k; ++i) {
      g.set_name(n + i, detail::indexed("x", i + 1));
    }
    return g;
  }

  //! Centres a, b joined by an edge, with m ends x_i on a and n ends y_j on
  //! b; numbered a, b, x1..xm, y1..yn.
  inline Graph two_star(std::size_t m, std::size_t n) {
    Graph g(2 + m + n);
    g.set_name(0, "a");
    g.set_name(1, "b");
    g.add_edge(0, 1);
    for (std::size_t i = 0; i < m; ++i) {
      g.set_name(2 + i, detail::indexed("x", i + 1));
      g.add_edge(0, 2 + i);
    }
    for (std::size_t j = 0; j < n; ++j) {
      g.set_name(2 + m + j, detail::indexed("y", j + 1));
      g.add_edge(1, 2 + m + j);
    }
    return g;
  }

  //! The square a1-x1-x2-a2-a1 glued to the triangle a1-a2-a3 along a1-a2;
  //! numbered a1, a2, a3, x1, x2.
  inline Graph square_triangle() {
    auto g = Graph::from_edge_list(
        5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {3, 4}});
    for (std::size_t v = 0; auto const* s : {"a1", "a2", "a3", "x1", "x2"}) {
      g.set_name(v++, s);
    }
    return g;
  }

  namespace detail {
    inline Graph square_triangle_with(
        std::vector<std::pair<std::size_t, std::size_t>> const& ends,
        std::vector<char const*> const&                         stems) {
      auto        g    = attach_ends(square_triangle(), ends);
      std::size_t next = 5;
      for (std::size_t i = 0; i < ends.size(); ++i) {
        for (std::size_t k = 0; k < ends[i].second; ++k) {
          g.set_name(next++, indexed(stems[i], k + 1));
        }
      }
      return g;
    }
  }  // namespace detail

  //! square_triangle with u ends u1.. on a1 and v ends v1.. on a2, the two
  //! vertices shared by the square and the triangle.
  inline Graph square_triangle_shared_ends(std::size_t u, std::size_t v) {
    return detail::square_triangle_with({{0, u}, {1, v}}, {"u", "v"});
  }

  //! square_triangle with u ends on the triangle apex a3.
  inline Graph square_triangle_apex_ends(std::size_t u) {
    return detail::square_triangle_with({{2, u}}, {"u"});
  }

  //! square_triangle with u ends on the square corner x1.
  inline Graph square_triangle_corner_ends(std::size_t u) {
    return detail::square_triangle_with({{3, u}}, {"u"});
  }

  //! Triangle a1, a2, a3 with u ends on a1, v on a2 and w on a3, numbered
  //! a1, a2, a3, U, V, W.
  inline Graph triangle_ends(std::size_t u, std::size_t v, std::size_t w) {
    auto g = attach_ends(complete(3), {{0, u}, {1, v}, {2, w}});
    auto next = std::size_t(3);
    for (auto [stem, count] :
         {std::pair{"u", u}, std::pair{"v", v}, std::pair{"w", w}}) {
      for (std::size_t k = 0; k < count; ++k) {
        g.set_name(next++, detail::indexed(stem, k + 1));
      }
    }
    return g;
  }

  ////////////////////////////////////////////////////////////////////////
  // Semigroups and rings
  ////////////////////////////////////////////////////////////////////////

  //! Parts A_1..A_r with a^2 = a, a_ir a_is = a_i1 (r != s) and a_ik a_jl = 0
  //! (i != j); element ids follow complete_multipartite's vertex order.
  inline MulTable boolean_multipartite_table(
      std::vector<std::size_t> const& sizes) {
    auto const  g = complete_multipartite(sizes);
    MulTable    t(g.size());
    std::size_t first = 1;
    for (auto m : sizes) {
      for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t s = r; s < m; ++s) {
          auto a = static_cast<Element>(first + r);
          auto b = static_cast<Element>(first + s);
          t.set(a, b, r == s ? a : static_cast<Element>(first));
        }
      }
      first += m;
    }
    return t;
  }

  //! F_2^k with element ids equal to the bitmask; one is 2^k - 1.
  inline BooleanRing boolean_power_ring(std::size_t k) {
    detail::require(k >= 1 && k <= 5, "1 <= k <= 5");
    std::size_t const n = std::size_t(1) << k;
    BooleanRing       r(n);
    r.one = static_cast<Element>(n - 1);
    for (Element x = 0; x < n; ++x) {
      std::string name;
      for (std::size_t i = 0; i < k; ++i) {
        name += ((x >> i) & 1U) ? '1' : '0';
      }
      r.names[x] = name;
      for (Element y = 0; y < n; ++y) {
        r.add[x * n + y] = x ^ y;
        r.mul[x * n + y] = x & y;
      }
    }
    return r;
  }

  //! Γ(F_2^k): the nonzero non-identity bit vectors of length k, adjacent
  //! when disjoint, in increasing order of their bitmask.
  inline Graph boolean_power_graph(std::size_t k) {
    return zero_divisor_graph_of_ring(boolean_power_ring(k)).graph;
  }

  inline constexpr std::size_t fixture_count = 5;

  //! The five reference tables, element ids in the vertex order of
  //! fixture_graph(k):
  //!   1: square_triangle()
  //!   2: square_triangle_shared_ends(0, 2)
  //!   3: square_triangle_shared_ends(2, 2)
  //!   4: triangle_ends(2, 2, 2)
  //!   5: triangle with one end on a1 (non-reduced, x1^2 = a3)
  inline MulTable fixture_table(std::size_t k) {
    switch (k) {
      case 1:
        return MulTable::from_upper({{0, 0, 0, 0, 1},  //
                                     {0, 0, 2, 0},
                                     {0, 2, 1},
                                     {4, 0},
                                     {5}});
      case 2:
        return MulTable::from_upper({{0, 0, 0, 0, 1, 1, 1},
                                     {0, 0, 2, 0, 0, 0},
                                     {0, 2, 1, 1, 1},
                                     {4, 0, 2, 2},
                                     {5, 5, 5},
                                     {5, 5},
                                     {5}});
      case 3:
        return MulTable::from_upper({{0, 0, 0, 0, 1, 0, 0, 1, 1},
                                     {0, 0, 2, 0, 2, 2, 0, 0},
                                     {0, 2, 1, 2, 2, 1, 1},
                                     {4, 0, 4, 4, 2, 2},
                                     {5, 1, 1, 5, 5},
                                     {4, 4, 3, 3},
                                     {4, 3, 3},
                                     {5, 5},
                                     {5}});
      case 4:
        return MulTable::from_upper({{1, 0, 0, 0, 0, 1, 1, 1, 1},
                                     {2, 0, 2, 2, 0, 0, 2, 2},
                                     {3, 3, 3, 3, 3, 0, 0},
                                     {4, 4, 3, 3, 2, 2},
                                     {4, 3, 3, 2, 2},
                                     {6, 6, 1, 1},
                                     {6, 1, 1},
                                     {8, 8},
                                     {8}});
      case 5:
        return MulTable::from_upper({{0, 0, 0, 0},  //
                                     {1, 0, 1},
                                     {3, 3},
                                     {3}});
      default:
        throw Error("fixture index must be 1.." + std::to_string(fixture_count));
    }
  }

  //! The graph each fixture realizes, named as in the table headings.
  inline Graph fixture_graph(std::size_t k) {
    auto rename = [](Graph g, std::vector<char const*> const& names) {
      for (std::size_t v = 0; v < names.size(); ++v) {
        g.set_name(v, names[v]);
      }
      return g;
    };
    switch (k) {
      case 1:
        return square_triangle();
      case 2:
        return rename(square_triangle_shared_ends(0, 2),
                      {"a1", "a2", "a3", "x1", "x2", "u", "v"});
      case 3:
        return square_triangle_shared_ends(2, 2);
      case 4:
        return rename(triangle_ends(2, 2, 2),
                      {"a1", "a2", "a3", "x1", "u", "x2", "v", "x3", "w"});
      case 5:
        return rename(attach_ends(complete(3), {{0, 1}}),
                      {"a1", "a2", "a3", "x1"});
      default:
        throw Error("fixture index must be 1.." + std::to_string(fixture_count));
    }
  }

}  // namespace zdg

#endif  // ZDG_FAMILIES_HPP_
