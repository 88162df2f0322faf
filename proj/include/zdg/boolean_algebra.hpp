// zdg - zero-divisor graphs of finite commutative semigroups
//
// Recognition of Boolean graphs (zero-divisor graphs of Boolean rings) and
// reconstruction of the ring from the graph.
//
// A connected graph G is Boolean iff it is uniquely determined, uniquely
// complemented, closed under nonempty neighbourhood intersections, and has
// a Boolean semigroup S on V(G) ∪ {0}. Given such S, put R = V(G) ∪ {0, 1}
// with N(0) = V(G) and N(1) = ∅. The sets N(x), x in R, ordered by
// inclusion form a Boolean algebra in which N(x) ∨ N(y) = N(xy) and the
// meet is intersection; multiplication extends to R with 1 as identity and
//
//   x + y = z   where   N(z) = (N(x) ∨ N(y')) ∧ (N(x') ∨ N(y)),
//
// y' denoting the element whose neighbourhood complements N(y).

#ifndef ZDG_BOOLEAN_ALGEBRA_HPP_
#define ZDG_BOOLEAN_ALGEBRA_HPP_

#include <cstddef>    // for size_t
#include <optional>   // for optional
#include <stdexcept>  // for logic_error
#include <string>     // for string
#include <vector>     // for vector

#include "boolean_ring.hpp"  // for BooleanRing, check_ring_axioms
#include "error.hpp"         // for Error
#include "graph.hpp"         // for Graph
#include "realize.hpp"       // for realize_all
#include "semigroup.hpp"     // for MulTable

namespace zdg {

  struct BooleanGraphConditions {
    bool uniquely_determined   = false;
    bool uniquely_complemented = false;
    bool meet_closed           = false;
    bool has_boolean_semigroup = false;

    std::optional<Edge>        twins;                //!< N(x) = N(y), x != y
    std::optional<std::size_t> complement_failure;   //!< vertex
    std::optional<Edge>        meet_failure;         //!< pair x, y
    std::optional<MulTable>    boolean_table;        //!< a witness for (4)

    bool all() const noexcept {
      return uniquely_determined && uniquely_complemented && meet_closed
             && has_boolean_semigroup;
    }
  };

  //! Evaluates the four conditions; the last one by a search for a single
  //! Boolean realization (subject to the realize size cap).
  inline BooleanGraphConditions
  check_boolean_graph_conditions(Graph const& g,
                                 std::size_t  max_n = default_max_vertices) {
    BooleanGraphConditions c;
    c.twins                 = neighborhood_twins(g);
    c.uniquely_determined   = !c.twins;
    c.complement_failure    = complementation_failure(g);
    c.uniquely_complemented = !c.complement_failure;
    c.meet_failure          = meet_closure_failure(g);
    c.meet_closed           = !c.meet_failure;

    RealizeOptions opts;
    opts.mode  = Mode::boolean;
    opts.limit = 1;
    opts.max_n = max_n;
    auto report = realize_all(g, opts);
    c.has_boolean_semigroup = !report.tables.empty();
    if (c.has_boolean_semigroup) {
      c.boolean_table = report.tables.front();
    }
    return c;
  }

  //! The lattice {N(x) : x in R} indexed by ring element: 0 is the zero,
  //! 1..n the vertices (element e is vertex e - 1) and n + 1 the identity.
  class NeighborhoodAlgebra {
   public:
    NeighborhoodAlgebra() = default;

    std::size_t size() const noexcept {
      return _elems.size();
    }
    Element unit() const noexcept {
      return static_cast<Element>(_elems.size() - 1);
    }
    VertexSet const& set(Element x) const {
      return _elems[x];
    }
    std::vector<VertexSet> const& sets() const noexcept {
      return _elems;
    }
    //! The ring element whose neighbourhood is s, if any.
    std::optional<Element> owner(VertexSet s) const {
      for (Element x = 0; x < _elems.size(); ++x) {
        if (_elems[x] == s) {
          return x;
        }
      }
      return std::nullopt;
    }
    Element join(Element x, Element y) const {
      return _join[x * size() + y];
    }
    Element meet(Element x, Element y) const {
      return _meet[x * size() + y];
    }
    Element complement(Element x) const {
      return _complement[x];
    }
    //! x * y in R: the semigroup product extended by the identity.
    Element times(Element x, Element y) const {
      return _times[x * size() + y];
    }

   private:
    friend NeighborhoodAlgebra build_algebra(Graph const&, MulTable const&);

    std::vector<VertexSet> _elems;
    std::vector<Element>   _join;
    std::vector<Element>   _meet;
    std::vector<Element>   _complement;
    std::vector<Element>   _times;
  };

  //! Builds the algebra of g from a Boolean realization s and verifies,
  //! exhaustively, that it is a Boolean algebra whose join matches the
  //! product. Throws Error with a witness when any law fails.
  inline NeighborhoodAlgebra build_algebra(Graph const& g, MulTable const& s) {
    if (!realizes(s, g) || !is_boolean(s) || !is_semigroup(s)) {
      throw Error("the table is not a Boolean realization of the graph");
    }
    auto const          n    = g.size();
    auto const          size = n + 2;
    auto const          unit = static_cast<Element>(n + 1);
    NeighborhoodAlgebra alg;
    alg._elems.push_back(g.vertices());
    for (std::size_t v = 0; v < n; ++v) {
      alg._elems.push_back(g.neighbors(v));
    }
    alg._elems.push_back(VertexSet());
    for (Element x = 0; x < size; ++x) {
      for (Element y = x + 1; y < size; ++y) {
        if (alg._elems[x] == alg._elems[y]) {
          throw Error("elements " + std::to_string(x) + " and "
                      + std::to_string(y) + " share a neighbourhood");
        }
      }
    }

    alg._times.resize(size * size);
    for (Element x = 0; x < size; ++x) {
      for (Element y = 0; y < size; ++y) {
        alg._times[x * size + y] = x == unit   ? y
                                   : y == unit ? x
                                               : s(x, y);
      }
    }

    auto w = [](Element x) { return std::to_string(x); };
    alg._join.resize(size * size);
    alg._meet.resize(size * size);
    for (Element x = 0; x < size; ++x) {
      for (Element y = 0; y < size; ++y) {
        auto both = alg._elems[x] | alg._elems[y];
        // least upper bound: the upper bound contained in all others
        std::optional<Element> lub;
        for (Element z = 0; z < size; ++z) {
          if (!both.is_subset_of(alg._elems[z])) {
            continue;
          }
          if (!lub || alg._elems[z].is_subset_of(alg._elems[*lub])) {
            lub = z;
          }
        }
        for (Element z = 0; z < size; ++z) {
          if (both.is_subset_of(alg._elems[z])
              && !alg._elems[*lub].is_subset_of(alg._elems[z])) {
            throw Error("no least upper bound for " + w(x) + ", " + w(y));
          }
        }
        if (*lub != alg.times(x, y)) {
          throw Error("join of " + w(x) + ", " + w(y)
                      + " is not the neighbourhood of their product");
        }
        alg._join[x * size + y] = *lub;
        auto meet = alg.owner(alg._elems[x] & alg._elems[y]);
        if (!meet) {
          throw Error("intersection of the neighbourhoods of " + w(x) + ", "
                      + w(y) + " is not a neighbourhood");
        }
        alg._meet[x * size + y] = *meet;
      }
    }

    alg._complement.resize(size);
    for (Element x = 0; x < size; ++x) {
      std::optional<Element> comp;
      for (Element y = 0; y < size; ++y) {
        if (alg.join(x, y) == 0 && alg.meet(x, y) == unit) {
          if (comp) {
            throw Error("element " + w(x) + " has two complements");
          }
          comp = y;
        }
      }
      if (!comp) {
        throw Error("element " + w(x) + " has no complement");
      }
      alg._complement[x] = *comp;
    }

    for (Element x = 0; x < size; ++x) {
      for (Element y = 0; y < size; ++y) {
        for (Element z = 0; z < size; ++z) {
          if (alg.join(alg.meet(x, y), z)
              != alg.meet(alg.join(x, z), alg.join(y, z))) {
            throw Error("distributivity fails at (" + w(x) + ", " + w(y)
                        + ", " + w(z) + ")");
          }
        }
      }
    }
    return alg;
  }

  struct RingConstruction {
    BooleanRing         ring;
    MulTable            table;  //!< the Boolean realization used
    NeighborhoodAlgebra algebra;
  };

  //! The ring on V(g) ∪ {0, 1} built from the Boolean realization s: zero
  //! is element 0, vertex v is element v + 1 and the identity is n + 1.
  //! The ring axioms and Γ(R) = g are verified before returning; a failure
  //! there throws std::logic_error.
  inline RingConstruction ring_from_table(Graph const& g, MulTable const& s) {
    RingConstruction out;
    out.table   = s;
    out.algebra = build_algebra(g, s);
    auto const& alg  = out.algebra;
    auto const  size = alg.size();

    BooleanRing r(size);
    r.one      = alg.unit();
    r.names[0] = "0";
    for (std::size_t v = 0; v < g.size(); ++v) {
      r.names[v + 1] = g.label(v);
    }
    r.names[size - 1] = "1";
    for (Element x = 0; x < size; ++x) {
      for (Element y = 0; y < size; ++y) {
        r.set_times(x, y, alg.times(x, y));
        auto lhs = alg.join(x, alg.complement(y));
        auto rhs = alg.join(alg.complement(x), y);
        r.set_plus(x, y, alg.meet(lhs, rhs));
      }
    }
    if (auto bad = check_ring_axioms(r); !bad.empty()) {
      throw std::logic_error("constructed ring violates "
                             + to_string(bad.front()));
    }
    auto rg = zero_divisor_graph_of_ring(r);
    bool same = rg.graph == g;
    for (std::size_t v = 0; same && v < g.size(); ++v) {
      same = rg.element_of[v] == v + 1;
    }
    if (!same) {
      throw std::logic_error("zero-divisor graph of the constructed ring "
                             "differs from the input");
    }
    out.ring = std::move(r);
    return out;
  }

  //! Checks the four conditions (throwing Error listing the failures) and
  //! builds the ring from the lexicographically first Boolean realization.
  inline RingConstruction
  ring_from_graph(Graph const& g, std::size_t max_n = default_max_vertices) {
    auto c = check_boolean_graph_conditions(g, max_n);
    if (!c.all()) {
      std::string failed;
      auto        add = [&](bool ok, char const* what) {
        if (!ok) {
          failed += failed.empty() ? what : std::string(", ") + what;
        }
      };
      add(c.uniquely_determined, "uniquely determined");
      add(c.uniquely_complemented, "uniquely complemented");
      add(c.meet_closed, "neighbourhood meets");
      add(c.has_boolean_semigroup, "Boolean semigroup");
      throw Error("not a Boolean graph; failing conditions: " + failed);
    }
    RealizeOptions opts;
    opts.mode  = Mode::boolean;
    opts.max_n = max_n;
    auto report = realize_all(g, opts);
    return ring_from_table(g, report.tables.front());
  }

}  // namespace zdg

#endif  // ZDG_BOOLEAN_ALGEBRA_HPP_
