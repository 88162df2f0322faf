// zdg - zero-divisor graphs of finite commutative semigroups
//
// Finite simple undirected graphs on dense vertex ids 0..n-1, together with
// the structural predicates used throughout the library: connectivity,
// diameter, core, end vertices, neighbourhood determination and
// complementation, and automorphisms/isomorphisms by pruned permutation
// search.

#ifndef ZDG_GRAPH_HPP_
#define ZDG_GRAPH_HPP_

#include <algorithm>  // for sort, all_of
#include <cstddef>    // for size_t
#include <cstdint>    // for uint64_t
#include <deque>      // for deque
#include <optional>   // for optional
#include <string>     // for string, to_string
#include <utility>    // for pair
#include <vector>     // for vector

#include "error.hpp"      // for Error, TooLarge
#include "small_set.hpp"  // for SmallSet

namespace zdg {

  using VertexSet   = SmallSet;
  using Edge        = std::pair<std::size_t, std::size_t>;
  using Permutation = std::vector<std::size_t>;

  class Graph {
   public:
    static constexpr std::size_t max_vertices = SmallSet::capacity;

    Graph() = default;

    explicit Graph(std::size_t n) : _adj(n), _names(n) {
      if (n > max_vertices) {
        throw TooLarge("graph has " + std::to_string(n)
                       + " vertices, at most "
                       + std::to_string(max_vertices) + " are supported");
      }
    }

    //! Throws Error naming the offending edge if an id is out of range or
    //! the edge is a loop. Duplicate edges are collapsed.
    static Graph from_edge_list(std::size_t n, std::vector<Edge> const& edges) {
      Graph g(n);
      for (auto [u, v] : edges) {
        g.add_edge(u, v);
      }
      return g;
    }

    std::size_t size() const noexcept {
      return _adj.size();
    }

    void add_edge(std::size_t u, std::size_t v) {
      if (u >= size() || v >= size()) {
        throw Error("edge (" + std::to_string(u) + ", " + std::to_string(v)
                    + ") has a vertex out of range 0.."
                    + std::to_string(size() == 0 ? 0 : size() - 1));
      }
      if (u == v) {
        throw Error("edge (" + std::to_string(u) + ", " + std::to_string(v)
                    + ") is a self-loop");
      }
      _adj[u].insert(v);
      _adj[v].insert(u);
    }

    bool adjacent(std::size_t u, std::size_t v) const {
      return _adj[u].contains(v);
    }

    VertexSet neighbors(std::size_t v) const {
      return _adj[v];
    }

    //! N(v) together with v itself.
    VertexSet closed_neighbors(std::size_t v) const {
      return _adj[v] | VertexSet::singleton(v);
    }

    std::size_t degree(std::size_t v) const {
      return _adj[v].size();
    }

    VertexSet vertices() const noexcept {
      return VertexSet::range(size());
    }

    //! All edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const {
      std::vector<Edge> out;
      for (std::size_t u = 0; u < size(); ++u) {
        for (auto v : _adj[u]) {
          if (u < v) {
            out.emplace_back(u, v);
          }
        }
      }
      return out;
    }

    std::size_t edge_count() const {
      std::size_t total = 0;
      for (auto const& a : _adj) {
        total += a.size();
      }
      return total / 2;
    }

    // Names are cosmetic: they never take part in comparisons.
    std::string const& name(std::size_t v) const {
      return _names[v];
    }
    void set_name(std::size_t v, std::string name) {
      _names[v] = std::move(name);
    }
    bool has_names() const {
      return std::any_of(_names.begin(), _names.end(), [](auto const& s) {
        return !s.empty();
      });
    }
    //! The vertex name, or its id when unnamed.
    std::string label(std::size_t v) const {
      return _names[v].empty() ? std::to_string(v) : _names[v];
    }

    friend bool operator==(Graph const& a, Graph const& b) {
      return a._adj == b._adj;
    }

   private:
    std::vector<VertexSet>   _adj;
    std::vector<std::string> _names;
  };

  ////////////////////////////////////////////////////////////////////////
  // Distances and connectivity
  ////////////////////////////////////////////////////////////////////////

  //! Distances from source; unreachable vertices get SIZE_MAX.
  inline std::vector<std::size_t> bfs_distances(Graph const& g,
                                                std::size_t source) {
    std::vector<std::size_t> dist(g.size(), SIZE_MAX);
    std::deque<std::size_t>  queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      for (auto v : g.neighbors(u)) {
        if (dist[v] == SIZE_MAX) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
    return dist;
  }

  inline std::size_t component_count(Graph const& g) {
    std::size_t count = 0;
    VertexSet   seen;
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (seen.contains(v)) {
        continue;
      }
      ++count;
      auto dist = bfs_distances(g, v);
      for (std::size_t u = 0; u < g.size(); ++u) {
        if (dist[u] != SIZE_MAX) {
          seen.insert(u);
        }
      }
    }
    return count;
  }

  inline bool is_connected(Graph const& g) {
    return g.size() > 0 && component_count(g) == 1;
  }

  //! Empty when g is disconnected; 0 for a single vertex.
  inline std::optional<std::size_t> diameter(Graph const& g) {
    if (!is_connected(g)) {
      return std::nullopt;
    }
    std::size_t result = 0;
    for (std::size_t v = 0; v < g.size(); ++v) {
      for (auto d : bfs_distances(g, v)) {
        result = std::max(result, d);
      }
    }
    return result;
  }

  inline bool has_cycle(Graph const& g) {
    return g.edge_count() + component_count(g) > g.size();
  }

  ////////////////////////////////////////////////////////////////////////
  // Core and end vertices
  ////////////////////////////////////////////////////////////////////////

  //! A cycle through the edge u-v as a vertex sequence starting at u and
  //! ending at v (the closing edge v-u is implied), or nothing if u-v is a
  //! bridge.
  inline std::optional<std::vector<std::size_t>>
  cycle_through_edge(Graph const& g, std::size_t u, std::size_t v) {
    if (!g.adjacent(u, v)) {
      return std::nullopt;
    }
    std::vector<std::size_t> parent(g.size(), SIZE_MAX);
    std::deque<std::size_t>  queue{u};
    parent[u] = u;
    while (!queue.empty()) {
      auto w = queue.front();
      queue.pop_front();
      for (auto x : g.neighbors(w)) {
        if ((w == u && x == v) || parent[x] != SIZE_MAX) {
          continue;
        }
        parent[x] = w;
        queue.push_back(x);
      }
    }
    if (parent[v] == SIZE_MAX) {
      return std::nullopt;
    }
    std::vector<std::size_t> path;
    for (auto w = v; w != u; w = parent[w]) {
      path.push_back(w);
    }
    path.push_back(u);
    std::reverse(path.begin(), path.end());
    return path;
  }

  struct Core {
    VertexSet         vertices;
    std::vector<Edge> edges;
  };

  //! The edges lying on at least one cycle, and their end points.
  inline Core core(Graph const& g) {
    Core result;
    for (auto [u, v] : g.edges()) {
      if (cycle_through_edge(g, u, v)) {
        result.edges.emplace_back(u, v);
        result.vertices.insert(u);
        result.vertices.insert(v);
      }
    }
    return result;
  }

  inline bool is_end_vertex(Graph const& g, std::size_t v) {
    return g.degree(v) == 1;
  }

  inline VertexSet end_vertices(Graph const& g) {
    VertexSet out;
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (is_end_vertex(g, v)) {
        out.insert(v);
      }
    }
    return out;
  }

  //! The end vertices adjacent to x.
  inline VertexSet pendant_set(Graph const& g, std::size_t x) {
    return g.neighbors(x) & end_vertices(g);
  }

  //! Neither an end vertex nor adjacent to one.
  inline bool is_internal_vertex(Graph const& g, std::size_t v) {
    return !is_end_vertex(g, v) && pendant_set(g, v).empty();
  }

  struct GraphProps {
    bool                       connected = false;
    std::optional<std::size_t> diameter;
    bool                       has_cycle = false;
    VertexSet                  core_vertices;
    std::vector<Edge>          core_edges;
    VertexSet                  end_vertices;
  };

  inline GraphProps properties(Graph const& g) {
    GraphProps p;
    p.connected    = is_connected(g);
    p.diameter     = diameter(g);
    p.has_cycle    = has_cycle(g);
    auto k         = core(g);
    p.core_vertices = k.vertices;
    p.core_edges   = std::move(k.edges);
    p.end_vertices = end_vertices(g);
    return p;
  }

  ////////////////////////////////////////////////////////////////////////
  // Neighbourhood predicates
  ////////////////////////////////////////////////////////////////////////

  //! Distinct vertices of degree m have distinct neighbourhoods.
  inline bool is_m_uniquely_determined(Graph const& g, std::size_t m) {
    for (std::size_t x = 0; x < g.size(); ++x) {
      if (g.degree(x) != m) {
        continue;
      }
      for (std::size_t y = x + 1; y < g.size(); ++y) {
        if (g.degree(y) == m && g.neighbors(x) == g.neighbors(y)) {
          return false;
        }
      }
    }
    return true;
  }

  //! A pair of distinct vertices with equal neighbourhoods, if any.
  inline std::optional<Edge> neighborhood_twins(Graph const& g) {
    for (std::size_t x = 0; x < g.size(); ++x) {
      for (std::size_t y = x + 1; y < g.size(); ++y) {
        if (g.neighbors(x) == g.neighbors(y)) {
          return Edge{x, y};
        }
      }
    }
    return std::nullopt;
  }

  inline bool is_uniquely_determined(Graph const& g) {
    return !neighborhood_twins(g).has_value();
  }

  //! x ⊥ y: distinct, adjacent, and the edge x-y lies in no triangle.
  inline bool perpendicular(Graph const& g, std::size_t x, std::size_t y) {
    return x != y && g.adjacent(x, y)
           && (g.neighbors(x) & g.neighbors(y)).empty();
  }

  inline VertexSet perpendicular_partners(Graph const& g, std::size_t x) {
    VertexSet out;
    for (auto y : g.neighbors(x)) {
      if (perpendicular(g, x, y)) {
        out.insert(y);
      }
    }
    return out;
  }

  inline bool is_complemented(Graph const& g) {
    for (std::size_t x = 0; x < g.size(); ++x) {
      if (perpendicular_partners(g, x).empty()) {
        return false;
      }
    }
    return true;
  }

  //! The first vertex that has no ⊥-partner, or whose ⊥-partners have
  //! different neighbourhoods.
  inline std::optional<std::size_t> complementation_failure(Graph const& g) {
    for (std::size_t x = 0; x < g.size(); ++x) {
      auto partners = perpendicular_partners(g, x);
      if (partners.empty()) {
        return x;
      }
      auto first = g.neighbors(partners.front());
      for (auto y : partners) {
        if (g.neighbors(y) != first) {
          return x;
        }
      }
    }
    return std::nullopt;
  }

  inline bool is_uniquely_complemented(Graph const& g) {
    return !complementation_failure(g).has_value();
  }

  //! A pair x, y whose neighbourhoods meet in a nonempty set that is not
  //! the neighbourhood of any vertex.
  inline std::optional<Edge> meet_closure_failure(Graph const& g) {
    for (std::size_t x = 0; x < g.size(); ++x) {
      for (std::size_t y = x + 1; y < g.size(); ++y) {
        auto meet = g.neighbors(x) & g.neighbors(y);
        if (meet.empty()) {
          continue;
        }
        bool found = false;
        for (std::size_t z = 0; z < g.size() && !found; ++z) {
          found = g.neighbors(z) == meet;
        }
        if (!found) {
          return Edge{x, y};
        }
      }
    }
    return std::nullopt;
  }

  inline bool neighborhood_meet_closed(Graph const& g) {
    return !meet_closure_failure(g).has_value();
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphisms and automorphisms
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    // Degree together with the sorted degrees of the neighbours; preserved
    // by every isomorphism.
    inline std::vector<std::vector<std::size_t>>
    vertex_invariants(Graph const& g) {
      std::vector<std::vector<std::size_t>> inv(g.size());
      for (std::size_t v = 0; v < g.size(); ++v) {
        inv[v].push_back(g.degree(v));
        std::vector<std::size_t> nd;
        for (auto w : g.neighbors(v)) {
          nd.push_back(g.degree(w));
        }
        std::sort(nd.begin(), nd.end());
        inv[v].insert(inv[v].end(), nd.begin(), nd.end());
      }
      return inv;
    }

    // Backtracking over maps g -> h extending a fixed prefix (the images of
    // vertices 0..prefix.size()-1). Calls visit on every complete map; a
    // visit returning true stops the search.
    class IsomorphismSearch {
     public:
      IsomorphismSearch(Graph const& g, Graph const& h)
          : _g(g),
            _h(h),
            _ginv(vertex_invariants(g)),
            _hinv(vertex_invariants(h)) {}

      template <typename Visit>
      bool run(Permutation prefix, Visit&& visit) {
        if (_g.size() != _h.size() || _g.edge_count() != _h.edge_count()) {
          return false;
        }
        VertexSet used;
        _map.assign(_g.size(), SIZE_MAX);
        for (std::size_t v = 0; v < prefix.size(); ++v) {
          auto w = prefix[v];
          if (used.contains(w) || !compatible(v, w)) {
            return false;
          }
          _map[v] = w;
          used.insert(w);
        }
        return extend(prefix.size(), used, visit);
      }

     private:
      bool compatible(std::size_t v, std::size_t w) const {
        if (_ginv[v] != _hinv[w]) {
          return false;
        }
        for (std::size_t u = 0; u < v; ++u) {
          if (_g.adjacent(u, v) != _h.adjacent(_map[u], w)) {
            return false;
          }
        }
        return true;
      }

      template <typename Visit>
      bool extend(std::size_t v, VertexSet used, Visit& visit) {
        if (v == _g.size()) {
          return visit(static_cast<Permutation const&>(_map));
        }
        for (std::size_t w = 0; w < _h.size(); ++w) {
          if (used.contains(w) || !compatible(v, w)) {
            continue;
          }
          _map[v] = w;
          used.insert(w);
          if (extend(v + 1, used, visit)) {
            return true;
          }
          used.erase(w);
        }
        _map[v] = SIZE_MAX;
        return false;
      }

      Graph const&                          _g;
      Graph const&                          _h;
      std::vector<std::vector<std::size_t>> _ginv;
      std::vector<std::vector<std::size_t>> _hinv;
      Permutation                           _map;
    };

  }  // namespace detail

  //! A map m with u-v in g iff m[u]-m[v] in h, if one exists.
  inline std::optional<Permutation> is_isomorphic(Graph const& g,
                                                  Graph const& h) {
    std::optional<Permutation> found;
    detail::IsomorphismSearch(g, h).run({}, [&](Permutation const& m) {
      found = m;
      return true;
    });
    return found;
  }

  struct AutomorphismGroup {
    //! Strong generating set relative to the base 0, 1, ..., n - 1.
    std::vector<Permutation> generators;
    //! Group order, saturating at UINT64_MAX.
    std::uint64_t order = 1;
  };

  //! Generators and order of Aut(g) via a stabiliser chain: at level i the
  //! search looks, for each j > i, for one automorphism fixing 0..i-1 and
  //! sending i to j.
  inline AutomorphismGroup automorphism_group(Graph const& g) {
    AutomorphismGroup        result;
    detail::IsomorphismSearch search(g, g);
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::uint64_t orbit = 1;
      for (std::size_t j = i + 1; j < g.size(); ++j) {
        Permutation prefix(i + 1);
        for (std::size_t k = 0; k < i; ++k) {
          prefix[k] = k;
        }
        prefix[i] = j;
        search.run(prefix, [&](Permutation const& m) {
          result.generators.push_back(m);
          ++orbit;
          return true;
        });
      }
      result.order = result.order > UINT64_MAX / orbit ? UINT64_MAX
                                                       : result.order * orbit;
    }
    return result;
  }

  inline constexpr std::size_t   max_automorphism_vertices = 12;
  inline constexpr std::uint64_t max_automorphism_count    = 1'000'000;

  //! Every automorphism of g as an explicit permutation, identity first.
  //! Throws TooLarge above the vertex or group-order caps.
  inline std::vector<Permutation>
  automorphisms(Graph const&  g,
                std::uint64_t max_count = max_automorphism_count) {
    if (g.size() > max_automorphism_vertices) {
      throw TooLarge("automorphism enumeration is limited to "
                     + std::to_string(max_automorphism_vertices)
                     + " vertices");
    }
    auto order = automorphism_group(g).order;
    if (order > max_count) {
      throw TooLarge("automorphism group of order " + std::to_string(order)
                     + " exceeds the cap " + std::to_string(max_count));
    }
    std::vector<Permutation> out;
    detail::IsomorphismSearch(g, g).run({}, [&](Permutation const& m) {
      out.push_back(m);
      return false;
    });
    return out;
  }

  inline Permutation compose(Permutation const& outer,
                             Permutation const& inner) {
    Permutation out(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) {
      out[i] = outer[inner[i]];
    }
    return out;
  }

  inline Permutation inverse(Permutation const& p) {
    Permutation out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      out[p[i]] = i;
    }
    return out;
  }

  inline bool is_automorphism(Graph const& g, Permutation const& p) {
    if (p.size() != g.size()) {
      return false;
    }
    for (std::size_t u = 0; u < g.size(); ++u) {
      for (std::size_t v = 0; v < g.size(); ++v) {
        if (g.adjacent(u, v) != g.adjacent(p[u], p[v])) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace zdg

#endif  // ZDG_GRAPH_HPP_
