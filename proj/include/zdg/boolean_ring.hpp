// zdg - zero-divisor graphs of finite commutative semigroups
//
// Finite Boolean rings given by explicit addition and multiplication
// tables, with exhaustive axiom checks, isomorphism search and the
// zero-divisor graph. The zero is always element 0.

#ifndef ZDG_BOOLEAN_RING_HPP_
#define ZDG_BOOLEAN_RING_HPP_

#include <cstddef>   // for size_t
#include <fstream>   // for ifstream, ofstream
#include <optional>  // for optional
#include <sstream>   // for ostringstream
#include <string>    // for string
#include <vector>    // for vector

#include "error.hpp"         // for Error, TooLarge
#include "graph.hpp"         // for Graph
#include "semigroup.hpp"     // for Element
#include "semigroup_io.hpp"  // for detail::read_triangle
#include "text_format.hpp"   // for LineReader

namespace zdg {

  struct BooleanRing {
    std::size_t              size = 0;
    Element                  one  = 0;
    std::vector<std::string> names;
    std::vector<Element>     add;
    std::vector<Element>     mul;

    BooleanRing() = default;
    explicit BooleanRing(std::size_t n)
        : size(n), names(n), add(n * n, zero), mul(n * n, zero) {
      for (std::size_t i = 0; i < n; ++i) {
        names[i] = std::to_string(i);
      }
    }

    Element plus(Element a, Element b) const {
      return add[a * size + b];
    }
    Element times(Element a, Element b) const {
      return mul[a * size + b];
    }
    void set_plus(Element a, Element b, Element v) {
      add[a * size + b] = add[b * size + a] = v;
    }
    void set_times(Element a, Element b, Element v) {
      mul[a * size + b] = mul[b * size + a] = v;
    }
  };

  struct RingViolation {
    std::string law;
    Element     a = 0;
    Element     b = 0;
    Element     c = 0;
  };

  inline std::string to_string(RingViolation const& v) {
    return v.law + " fails at (" + std::to_string(v.a) + ", "
           + std::to_string(v.b) + ", " + std::to_string(v.c) + ")";
  }

  //! Checks, over all elements/pairs/triples: (R, +) is an abelian group
  //! with identity 0 and x + x = 0; multiplication is commutative,
  //! associative, idempotent with identity `one`; multiplication
  //! distributes over addition.
  inline std::vector<RingViolation> check_ring_axioms(BooleanRing const& r) {
    std::vector<RingViolation> out;
    auto const                 n = static_cast<Element>(r.size);
    if (r.add.size() != r.size * r.size || r.mul.size() != r.size * r.size
        || r.one >= n) {
      out.push_back({"shape", 0, 0, 0});
      return out;
    }
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (r.plus(a, b) >= n || r.times(a, b) >= n) {
          out.push_back({"closure", a, b, 0});
        }
      }
    }
    if (!out.empty()) {
      return out;
    }
    for (Element a = 0; a < n; ++a) {
      if (r.plus(zero, a) != a) {
        out.push_back({"additive identity", a, 0, 0});
      }
      if (r.plus(a, a) != zero) {
        out.push_back({"characteristic two", a, 0, 0});
      }
      if (r.times(r.one, a) != a) {
        out.push_back({"multiplicative identity", a, 0, 0});
      }
      if (r.times(a, a) != a) {
        out.push_back({"idempotence", a, 0, 0});
      }
      for (Element b = 0; b < n; ++b) {
        if (r.plus(a, b) != r.plus(b, a)) {
          out.push_back({"additive commutativity", a, b, 0});
        }
        if (r.times(a, b) != r.times(b, a)) {
          out.push_back({"multiplicative commutativity", a, b, 0});
        }
        for (Element c = 0; c < n; ++c) {
          if (r.plus(r.plus(a, b), c) != r.plus(a, r.plus(b, c))) {
            out.push_back({"additive associativity", a, b, c});
          }
          if (r.times(r.times(a, b), c) != r.times(a, r.times(b, c))) {
            out.push_back({"multiplicative associativity", a, b, c});
          }
          if (r.times(a, r.plus(b, c))
              != r.plus(r.times(a, b), r.times(a, c))) {
            out.push_back({"distributivity", a, b, c});
          }
        }
      }
    }
    return out;
  }

  //! Vertices are the nonzero elements x with x*y = 0 for some nonzero y,
  //! in increasing element order; vertex_of[x] is the vertex of x (or
  //! SIZE_MAX).
  struct RingGraph {
    Graph                    graph;
    std::vector<Element>     element_of;
    std::vector<std::size_t> vertex_of;
  };

  inline RingGraph zero_divisor_graph_of_ring(BooleanRing const& r) {
    RingGraph out;
    out.vertex_of.assign(r.size, SIZE_MAX);
    for (Element x = 1; x < r.size; ++x) {
      for (Element y = 1; y < r.size; ++y) {
        if (r.times(x, y) == zero) {
          out.vertex_of[x] = out.element_of.size();
          out.element_of.push_back(x);
          break;
        }
      }
    }
    out.graph = Graph(out.element_of.size());
    for (std::size_t u = 0; u < out.element_of.size(); ++u) {
      out.graph.set_name(u, r.names[out.element_of[u]]);
      for (std::size_t v = u + 1; v < out.element_of.size(); ++v) {
        if (r.times(out.element_of[u], out.element_of[v]) == zero) {
          out.graph.add_edge(u, v);
        }
      }
    }
    return out;
  }

  inline constexpr std::size_t max_ring_isomorphism_size = 16;

  namespace detail {

    class RingIsomorphismSearch {
     public:
      RingIsomorphismSearch(BooleanRing const& r, BooleanRing const& s)
          : _r(r), _s(s) {}

      std::optional<std::vector<Element>> run() {
        std::vector<Element> map(_r.size, unset);
        std::vector<bool>    used(_s.size, false);
        if (!bind(map, used, zero, zero) || !bind(map, used, _r.one, _s.one)
            || !close(map, used)) {
          return std::nullopt;
        }
        if (search(map, used)) {
          return map;
        }
        return std::nullopt;
      }

     private:
      static constexpr Element unset = ~Element(0);

      static bool bind(std::vector<Element>& map, std::vector<bool>& used,
                       Element x, Element y) {
        if (map[x] != unset) {
          return map[x] == y;
        }
        if (used[y]) {
          return false;
        }
        map[x]  = y;
        used[y] = true;
        return true;
      }

      // Forces f(a + b) = f(a) + f(b) and f(ab) = f(a)f(b) on the mapped
      // part until nothing changes.
      bool close(std::vector<Element>& map, std::vector<bool>& used) const {
        bool changed = true;
        while (changed) {
          changed = false;
          for (Element a = 0; a < _r.size; ++a) {
            if (map[a] == unset) {
              continue;
            }
            for (Element b = a; b < _r.size; ++b) {
              if (map[b] == unset) {
                continue;
              }
              for (auto [x, y] :
                   {std::pair{_r.plus(a, b), _s.plus(map[a], map[b])},
                    std::pair{_r.times(a, b), _s.times(map[a], map[b])}}) {
                bool fresh = map[x] == unset;
                if (!bind(map, used, x, y)) {
                  return false;
                }
                changed = changed || fresh;
              }
            }
          }
        }
        return true;
      }

      bool search(std::vector<Element>& map, std::vector<bool>& used) const {
        Element x = 0;
        while (x < _r.size && map[x] != unset) {
          ++x;
        }
        if (x == _r.size) {
          return true;
        }
        for (Element y = 0; y < _s.size; ++y) {
          if (used[y]) {
            continue;
          }
          auto m = map;
          auto u = used;
          if (bind(m, u, x, y) && close(m, u) && search(m, u)) {
            map  = std::move(m);
            used = std::move(u);
            return true;
          }
        }
        return false;
      }

      BooleanRing const& _r;
      BooleanRing const& _s;
    };

  }  // namespace detail

  //! A bijection f with f(0) = 0, f(1) = 1, f(x + y) = f(x) + f(y) and
  //! f(xy) = f(x)f(y), if one exists. Throws TooLarge above 16 elements.
  inline std::optional<std::vector<Element>>
  ring_isomorphic(BooleanRing const& r, BooleanRing const& s) {
    if (r.size > max_ring_isomorphism_size
        || s.size > max_ring_isomorphism_size) {
      throw TooLarge("ring isomorphism search is limited to "
                     + std::to_string(max_ring_isomorphism_size)
                     + " elements");
    }
    if (r.size != s.size) {
      return std::nullopt;
    }
    return detail::RingIsomorphismSearch(r, s).run();
  }

  ////////////////////////////////////////////////////////////////////////
  // zdg-ring text format
  ////////////////////////////////////////////////////////////////////////
  //
  //   zdg-ring 1
  //   n <count>              elements 0..count-1; 0 is zero, the last is one
  //   v <id> <name>          one line per element
  //   add
  //   <upper triangle of + over all elements, row 0 first>
  //   mul
  //   <upper triangle of * over all elements, row 0 first>

  inline void write_ring(std::ostream& out, BooleanRing const& r) {
    out << "zdg-ring 1\n";
    out << "n " << r.size << "\n";
    for (std::size_t i = 0; i < r.size; ++i) {
      out << "v " << i << " " << r.names[i] << "\n";
    }
    for (auto [label, table] : {std::pair{"add", &r.add},
                                std::pair{"mul", &r.mul}}) {
      out << label << "\n";
      for (std::size_t a = 0; a < r.size; ++a) {
        for (std::size_t b = a; b < r.size; ++b) {
          out << (b == a ? "" : " ") << (*table)[a * r.size + b];
        }
        out << "\n";
      }
    }
  }

  inline BooleanRing read_ring(std::istream& in) {
    detail::LineReader reader(in);
    reader.expect_header("zdg-ring");
    auto n = reader.expect_count();
    if (n < 2) {
      reader.fail("a ring file needs at least the elements 0 and 1");
    }
    BooleanRing r(n);
    r.one = static_cast<Element>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      auto tok = reader.expect("'v <id> <name>'");
      if (tok.size() < 3 || tok[0] != "v" || reader.number(tok[1]) != i) {
        reader.fail("expected 'v " + std::to_string(i) + " <name>'");
      }
      r.names[i] = tok[2];
    }
    for (auto [label, table] : {std::pair{"add", &r.add},
                                std::pair{"mul", &r.mul}}) {
      auto tok = reader.expect(label);
      if (tok.size() != 1 || tok[0] != label) {
        reader.fail(std::string("expected '") + label + "'");
      }
      auto rows = detail::read_triangle(reader, 0, n - 1);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) {
          (*table)[a * n + b] = (*table)[b * n + a] = rows[a][b - a];
        }
      }
    }
    return r;
  }

  inline std::string to_ring_string(BooleanRing const& r) {
    std::ostringstream out;
    write_ring(out, r);
    return out.str();
  }

  inline void save_ring(std::string const& path, BooleanRing const& r) {
    std::ofstream out(path);
    if (!out) {
      throw Error("cannot write " + path);
    }
    write_ring(out, r);
  }

  inline BooleanRing load_ring(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open " + path);
    }
    try {
      return read_ring(in);
    } catch (ParseError const& e) {
      throw Error(path + ": " + e.what());
    }
  }

}  // namespace zdg

#endif  // ZDG_BOOLEAN_RING_HPP_
