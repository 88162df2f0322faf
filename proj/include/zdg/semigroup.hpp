// zdg - zero-divisor graphs of finite commutative semigroups
//
// Finite commutative semigroups with zero given by their multiplication
// tables. Elements are ids 0..n where 0 is the zero; the nonzero element e
// corresponds to vertex e - 1 of the zero-divisor graph.

#ifndef ZDG_SEMIGROUP_HPP_
#define ZDG_SEMIGROUP_HPP_

#include <compare>  // for strong_ordering
#include <cstddef>  // for size_t
#include <cstdint>  // for uint32_t
#include <string>   // for string, to_string
#include <vector>   // for vector

#include "error.hpp"      // for Error
#include "graph.hpp"      // for Graph
#include "small_set.hpp"  // for SmallSet

namespace zdg {

  using Element    = std::uint32_t;
  using ElementSet = SmallSet;

  inline constexpr Element zero = 0;

  class MulTable {
   public:
    MulTable() = default;

    //! The table on {0, 1, ..., n} with every product equal to zero.
    explicit MulTable(std::size_t n)
        : _n(n), _prod((n + 1) * (n + 1), zero) {
      if (n + 1 > SmallSet::capacity) {
        throw TooLarge("tables are limited to "
                       + std::to_string(SmallSet::capacity - 1)
                       + " nonzero elements");
      }
    }

    //! Full (n + 1) x (n + 1) rows, taken verbatim (no symmetry or range
    //! checks; see check_axioms).
    static MulTable from_rows(std::vector<std::vector<Element>> const& rows) {
      if (rows.empty()) {
        throw Error("a table needs at least the zero row");
      }
      MulTable t(rows.size() - 1);
      for (std::size_t a = 0; a < rows.size(); ++a) {
        if (rows[a].size() != rows.size()) {
          throw Error("row " + std::to_string(a) + " has "
                      + std::to_string(rows[a].size()) + " entries, expected "
                      + std::to_string(rows.size()));
        }
        for (std::size_t b = 0; b < rows.size(); ++b) {
          t._prod[a * (t._n + 1) + b] = rows[a][b];
        }
      }
      return t;
    }

    //! Nonzero rows of the upper triangle: row a (1 <= a <= n) lists the
    //! products a*b for b = a..n.
    static MulTable from_upper(std::vector<std::vector<Element>> const& rows) {
      MulTable t(rows.size());
      for (std::size_t a = 1; a <= t._n; ++a) {
        auto const& row = rows[a - 1];
        if (row.size() != t._n - a + 1) {
          throw Error("upper row " + std::to_string(a) + " has "
                      + std::to_string(row.size()) + " entries, expected "
                      + std::to_string(t._n - a + 1));
        }
        for (std::size_t b = a; b <= t._n; ++b) {
          t.set(a, b, row[b - a]);
        }
      }
      return t;
    }

    //! Number of nonzero elements.
    std::size_t size() const noexcept {
      return _n;
    }

    Element operator()(Element a, Element b) const {
      return _prod[a * (_n + 1) + b];
    }

    //! Sets a*b and b*a.
    void set(Element a, Element b, Element value) {
      _prod[a * (_n + 1) + b] = value;
      _prod[b * (_n + 1) + a] = value;
    }

    ElementSet nonzero() const noexcept {
      return ElementSet::range(_n + 1) - ElementSet::singleton(zero);
    }
    ElementSet all() const noexcept {
      return ElementSet::range(_n + 1);
    }

    //! Row-major entries a*b for 1 <= a <= b <= n.
    std::vector<Element> upper_triangle() const {
      std::vector<Element> out;
      out.reserve(_n * (_n + 1) / 2);
      for (Element a = 1; a <= _n; ++a) {
        for (Element b = a; b <= _n; ++b) {
          out.push_back((*this)(a, b));
        }
      }
      return out;
    }

    friend bool operator==(MulTable const&, MulTable const&) = default;

    //! Size first, then lexicographic on the upper triangle.
    friend std::strong_ordering operator<=>(MulTable const& x,
                                            MulTable const& y) {
      if (auto c = x._n <=> y._n; c != 0) {
        return c;
      }
      return x.upper_triangle() <=> y.upper_triangle();
    }

   private:
    std::size_t          _n = 0;
    std::vector<Element> _prod;
  };

  ////////////////////////////////////////////////////////////////////////
  // Axioms
  ////////////////////////////////////////////////////////////////////////

  struct AxiomViolation {
    enum class Kind { range, zero, commutativity, associativity };
    Kind    kind;
    // range: (a, b) holds an id > n; zero: 0*a != 0 (a in slot a);
    // commutativity: a*b != b*a; associativity: (a*b)*c != a*(b*c).
    Element a = 0;
    Element b = 0;
    Element c = 0;

    friend bool operator==(AxiomViolation const&,
                           AxiomViolation const&) = default;
  };

  inline std::string to_string(AxiomViolation const& v) {
    auto s = [](Element e) { return std::to_string(e); };
    switch (v.kind) {
      case AxiomViolation::Kind::range:
        return "entry (" + s(v.a) + ", " + s(v.b) + ") out of range";
      case AxiomViolation::Kind::zero:
        return "zero is not absorbing at " + s(v.a);
      case AxiomViolation::Kind::commutativity:
        return s(v.a) + "*" + s(v.b) + " != " + s(v.b) + "*" + s(v.a);
      case AxiomViolation::Kind::associativity:
        return "(" + s(v.a) + "*" + s(v.b) + ")*" + s(v.c) + " != " + s(v.a)
               + "*(" + s(v.b) + "*" + s(v.c) + ")";
    }
    return {};
  }

  //! Every violated axiom with its witness; empty iff t is a commutative
  //! semigroup with absorbing zero. Associativity is only examined once all
  //! entries are in range.
  inline std::vector<AxiomViolation> check_axioms(MulTable const& t) {
    using Kind = AxiomViolation::Kind;
    std::vector<AxiomViolation> out;
    auto const                  n = static_cast<Element>(t.size());
    for (Element a = 0; a <= n; ++a) {
      for (Element b = 0; b <= n; ++b) {
        if (t(a, b) > n) {
          out.push_back({Kind::range, a, b, 0});
        }
      }
    }
    if (!out.empty()) {
      return out;
    }
    for (Element a = 0; a <= n; ++a) {
      if (t(zero, a) != zero || t(a, zero) != zero) {
        out.push_back({Kind::zero, a, 0, 0});
      }
      for (Element b = a + 1; b <= n; ++b) {
        if (t(a, b) != t(b, a)) {
          out.push_back({Kind::commutativity, a, b, 0});
        }
      }
    }
    for (Element a = 1; a <= n; ++a) {
      for (Element b = 1; b <= n; ++b) {
        for (Element c = 1; c <= n; ++c) {
          if (t(t(a, b), c) != t(a, t(b, c))) {
            out.push_back({Kind::associativity, a, b, c});
          }
        }
      }
    }
    return out;
  }

  inline bool is_semigroup(MulTable const& t) {
    return check_axioms(t).empty();
  }

  ////////////////////////////////////////////////////////////////////////
  // Zero-divisor graph
  ////////////////////////////////////////////////////////////////////////

  //! Nonzero y != x with x*y = 0, as element ids.
  inline ElementSet element_neighbors(MulTable const& t, Element x) {
    ElementSet out;
    for (Element y = 1; y <= t.size(); ++y) {
      if (y != x && t(x, y) == zero) {
        out.insert(y);
      }
    }
    return out;
  }

  //! Nonzero elements x with no nonzero y (possibly x) such that x*y = 0.
  inline ElementSet non_zero_divisors(MulTable const& t) {
    ElementSet out;
    for (Element x = 1; x <= t.size(); ++x) {
      bool divides = false;
      for (Element y = 1; y <= t.size() && !divides; ++y) {
        divides = t(x, y) == zero;
      }
      if (!divides) {
        out.insert(x);
      }
    }
    return out;
  }

  //! Γ(t) on vertices 0..n-1 (element e is vertex e - 1). Throws Error
  //! naming the first nonzero element that is not a zero-divisor.
  inline Graph zero_divisor_graph(MulTable const& t) {
    if (auto bad = non_zero_divisors(t); !bad.empty()) {
      throw Error("element " + std::to_string(bad.front())
                  + " is not a zero-divisor");
    }
    Graph g(t.size());
    for (Element x = 1; x <= t.size(); ++x) {
      for (Element y = x + 1; y <= t.size(); ++y) {
        if (t(x, y) == zero) {
          g.add_edge(x - 1, y - 1);
        }
      }
    }
    return g;
  }

  //! True iff every nonzero element is a zero-divisor and Γ(t) equals g
  //! with element e on vertex e - 1.
  inline bool realizes(MulTable const& t, Graph const& g) {
    if (t.size() != g.size() || !non_zero_divisors(t).empty()) {
      return false;
    }
    for (Element x = 1; x <= t.size(); ++x) {
      for (Element y = x + 1; y <= t.size(); ++y) {
        if ((t(x, y) == zero) != g.adjacent(x - 1, y - 1)) {
          return false;
        }
      }
    }
    return true;
  }

  //! Element set <-> vertex set under e <-> e - 1 (zero is dropped).
  inline VertexSet to_vertices(ElementSet s) {
    return VertexSet(s.bits() >> 1);
  }
  inline ElementSet to_elements(VertexSet s) {
    return ElementSet(s.bits() << 1);
  }

  ////////////////////////////////////////////////////////////////////////
  // Subsets
  ////////////////////////////////////////////////////////////////////////

  inline ElementSet product(MulTable const& t, ElementSet xs, ElementSet ys) {
    ElementSet out;
    for (auto x : xs) {
      for (auto y : ys) {
        out.insert(t(x, y));
      }
    }
    return out;
  }

  //! Closed under the product (the empty set is trivially closed).
  inline bool is_subsemigroup(MulTable const& t, ElementSet sub) {
    return product(t, sub, sub).is_subset_of(sub);
  }

  //! within * sub is contained in sub. Products of within*sub landing
  //! outside `within` make the answer false.
  inline bool is_ideal(MulTable const& t, ElementSet sub, ElementSet within) {
    if (!sub.is_subset_of(within)) {
      return false;
    }
    return product(t, within, sub).is_subset_of(sub);
  }

  //! {s : s*x = 0 for every x in xs}, zero included.
  inline ElementSet annihilator(MulTable const& t, ElementSet xs) {
    ElementSet out;
    for (Element s = 0; s <= t.size(); ++s) {
      bool kills = true;
      for (auto x : xs) {
        kills = kills && t(s, x) == zero;
      }
      if (kills) {
        out.insert(s);
      }
    }
    return out;
  }

  inline bool is_boolean(MulTable const& t) {
    for (Element x = 1; x <= t.size(); ++x) {
      if (t(x, x) != x) {
        return false;
      }
    }
    return true;
  }

  //! Some power of x is zero. Follows x, x^2, x^4, ... until zero or a
  //! repeat; in a finite commutative semigroup the repeated-squaring orbit
  //! reaches zero iff x is nilpotent.
  inline bool is_nilpotent(MulTable const& t, Element x) {
    ElementSet seen;
    while (!seen.contains(x)) {
      if (x == zero) {
        return true;
      }
      seen.insert(x);
      x = t(x, x);
    }
    return false;
  }

  inline bool is_reduced(MulTable const& t) {
    for (Element x = 1; x <= t.size(); ++x) {
      if (is_nilpotent(t, x)) {
        return false;
      }
    }
    return true;
  }

  //! Nonzero y with N(y) = N(x) in Γ(t).
  inline ElementSet equivalence_class(MulTable const& t, Element x) {
    if (x == zero || x > t.size()) {
      throw Error("equivalence classes are defined for nonzero elements");
    }
    auto       nx = element_neighbors(t, x);
    ElementSet out;
    for (Element y = 1; y <= t.size(); ++y) {
      if (element_neighbors(t, y) == nx) {
        out.insert(y);
      }
    }
    return out;
  }

  //! Nonzero y with N(y) contained in N(x) in Γ(t).
  inline ElementSet lower_set(MulTable const& t, Element x) {
    if (x == zero || x > t.size()) {
      throw Error("lower sets are defined for nonzero elements");
    }
    auto       nx = element_neighbors(t, x);
    ElementSet out;
    for (Element y = 1; y <= t.size(); ++y) {
      if (element_neighbors(t, y).is_subset_of(nx)) {
        out.insert(y);
      }
    }
    return out;
  }

  //! Applies a vertex permutation of Γ to the table: element e = v + 1 is
  //! sent to perm[v] + 1 and zero is fixed.
  inline MulTable relabel(MulTable const& t, Permutation const& perm) {
    auto     map = [&](Element e) -> Element {
      return e == zero ? zero : static_cast<Element>(perm[e - 1] + 1);
    };
    MulTable out(t.size());
    for (Element a = 1; a <= t.size(); ++a) {
      for (Element b = a; b <= t.size(); ++b) {
        out.set(map(a), map(b), map(t(a, b)));
      }
    }
    return out;
  }

}  // namespace zdg

#endif  // ZDG_SEMIGROUP_HPP_
