// zdg - zero-divisor graphs of finite commutative semigroups
//
// Enumeration of every commutative semigroup structure on V(G) ∪ {0} whose
// zero-divisor graph is exactly G.
//
// The unknowns are the products a*b for 1 <= a <= b <= n. Each carries a
// candidate set (its domain):
//
//   * a != b adjacent in G      {0}
//   * a != b not adjacent       {1..n}
//   * a == b (plain)            {0..n}
//   * a == b (boolean)          {a}
//
// Associativity is imposed on every multiset {a, b, c} of nonzero elements
// as "the three bracketings (ab)c, (bc)a, (ac)b agree". A bracketing (pq)r
// can take any value of dom(v, r) for v in dom(p, q) (or 0 when v = 0); the
// common value must lie in the intersection I of the three value sets.
// Values v of dom(p, q) with dom(v, r) ∩ I empty are removed, and once
// (p, q) is fixed to v the cell (v, r) is narrowed to I. Annihilator
// reasoning (xz = 0 forces xy in ann(z)) is the special case where one
// bracketing is 0.
//
// The search runs propagation to a fixpoint, branches on the open cell with
// the smallest domain (ties by row, then column) trying values in ascending
// order, and collects every complete table. Results are sorted, so output
// is independent of the search order and of the thread count.

#ifndef ZDG_REALIZE_HPP_
#define ZDG_REALIZE_HPP_

#include <algorithm>  // for sort, min
#include <array>      // for array
#include <atomic>     // for atomic
#include <exception>  // for exception_ptr
#include <cstddef>    // for size_t
#include <map>        // for map
#include <memory>     // for shared_ptr, make_shared
#include <numeric>    // for iota
#include <optional>   // for optional
#include <stdexcept>  // for logic_error
#include <string>     // for string
#include <thread>     // for thread
#include <utility>    // for pair
#include <vector>     // for vector

#include "error.hpp"      // for Error, TooLarge
#include "graph.hpp"      // for Graph, automorphism_group
#include "semigroup.hpp"  // for MulTable, check_axioms, realizes

namespace zdg {

  enum class Mode { plain, boolean };

  inline char const* to_string(Mode m) {
    return m == Mode::plain ? "plain" : "boolean";
  }

  enum class Uniqueness { none, unique, multiple };

  inline char const* to_string(Uniqueness u) {
    switch (u) {
      case Uniqueness::none:
        return "none";
      case Uniqueness::unique:
        return "unique";
      case Uniqueness::multiple:
        return "multiple";
    }
    return "";
  }

  inline constexpr std::size_t default_max_vertices = 12;

  struct RealizeOptions {
    Mode                       mode = Mode::plain;
    std::optional<std::size_t> limit;
    std::size_t                max_n   = default_max_vertices;
    unsigned                   threads = 1;
  };

  struct RealizationReport {
    Mode                  mode = Mode::plain;
    std::vector<MulTable> tables;
    std::size_t           labeled_count   = 0;
    std::size_t           iso_class_count = 0;
    Uniqueness            status          = Uniqueness::none;
    bool                  truncated       = false;
  };

  ////////////////////////////////////////////////////////////////////////
  // SearchState and propagation
  ////////////////////////////////////////////////////////////////////////

  struct Triple {
    std::array<Element, 3> members;
    ElementSet             mask;
  };

  namespace detail {
    // Multisets {a <= b <= c} of nonzero elements other than {a, a, a},
    // whose associativity already follows from commutativity.
    inline std::vector<Triple> associativity_triples(std::size_t n) {
      std::vector<Triple> out;
      for (Element a = 1; a <= n; ++a) {
        for (Element b = a; b <= n; ++b) {
          for (Element c = b; c <= n; ++c) {
            if (a == c) {
              continue;
            }
            ElementSet m;
            m.insert(a);
            m.insert(b);
            m.insert(c);
            out.push_back({{a, b, c}, m});
          }
        }
      }
      return out;
    }
  }  // namespace detail

  struct Cell {
    Element row = 0;
    Element col = 0;

    friend bool operator==(Cell const&, Cell const&) = default;
  };

  //! A propagation dead end: cell's domain became empty while revising
  //! triple.
  struct Conflict {
    Cell                   cell;
    std::array<Element, 3> triple{};
  };

  class SearchState {
   public:
    SearchState(Graph const& g, Mode mode)
        : _n(g.size()),
          _dom((_n + 1) * (_n + 1)),
          _triples(std::make_shared<std::vector<Triple> const>(
              detail::associativity_triples(_n))) {
      auto const all     = ElementSet::range(_n + 1);
      auto const nonzero = all - ElementSet::singleton(zero);
      for (Element a = 0; a <= _n; ++a) {
        for (Element b = a; b <= _n; ++b) {
          ElementSet d;
          if (a == zero) {
            d = ElementSet::singleton(zero);
          } else if (a == b) {
            d = mode == Mode::boolean ? ElementSet::singleton(a) : all;
            if (g.degree(a - 1) == 0) {
              // an isolated vertex is a zero-divisor only through a*a = 0
              d &= ElementSet::singleton(zero);
            }
          } else {
            d = g.adjacent(a - 1, b - 1) ? ElementSet::singleton(zero)
                                         : nonzero;
          }
          put(a, b, d);
        }
      }
      _dirty = nonzero;
    }

    std::size_t size() const noexcept {
      return _n;
    }

    ElementSet domain(Element a, Element b) const {
      return _dom[a * (_n + 1) + b];
    }

    std::optional<Element> value(Element a, Element b) const {
      auto d = domain(a, b);
      if (d.size() == 1) {
        return static_cast<Element>(d.front());
      }
      return std::nullopt;
    }

    //! Intersects the domain of (a, b) with keep; true if it changed.
    bool narrow(Element a, Element b, ElementSet keep) {
      auto d = domain(a, b) & keep;
      if (d == domain(a, b)) {
        return false;
      }
      put(a, b, d);
      _dirty.insert(a);
      _dirty.insert(b);
      return true;
    }

    //! Decision: fixes a*b = v and records it on the trail.
    void assign(Element a, Element b, Element v) {
      narrow(a, b, ElementSet::singleton(v));
      _trail.push_back({Cell{a, b}, v});
    }

    std::vector<std::pair<Cell, Element>> const& trail() const noexcept {
      return _trail;
    }

    ElementSet dirty() const noexcept {
      return _dirty;
    }
    ElementSet take_dirty() noexcept {
      auto d = _dirty;
      _dirty = ElementSet();
      return d;
    }

    std::vector<Triple> const& triples() const noexcept {
      return *_triples;
    }

    //! The open cell with the smallest domain, ties by (row, col).
    std::optional<Cell> choose() const {
      std::optional<Cell> best;
      std::size_t         best_size = SIZE_MAX;
      for (Element a = 1; a <= _n; ++a) {
        for (Element b = a; b <= _n; ++b) {
          auto s = domain(a, b).size();
          if (s > 1 && s < best_size) {
            best      = Cell{a, b};
            best_size = s;
          }
        }
      }
      return best;
    }

    //! Requires every domain to be a singleton.
    MulTable table() const {
      MulTable t(_n);
      for (Element a = 1; a <= _n; ++a) {
        for (Element b = a; b <= _n; ++b) {
          t.set(a, b, static_cast<Element>(domain(a, b).front()));
        }
      }
      return t;
    }

   private:
    void put(Element a, Element b, ElementSet d) {
      _dom[a * (_n + 1) + b] = d;
      _dom[b * (_n + 1) + a] = d;
    }

    std::size_t                                _n;
    std::vector<ElementSet>                    _dom;
    std::shared_ptr<std::vector<Triple> const> _triples;
    ElementSet                                 _dirty;
    std::vector<std::pair<Cell, Element>>      _trail;
  };

  namespace detail {

    // Possible values of the bracketing (p*q)*r.
    inline ElementSet bracket_values(SearchState const& s, Element p,
                                     Element q, Element r) {
      ElementSet out;
      for (auto v : s.domain(p, q)) {
        out |= v == zero ? ElementSet::singleton(zero)
                         : s.domain(static_cast<Element>(v), r);
      }
      return out;
    }

    inline std::optional<Conflict> revise(SearchState& s, Triple const& tr) {
      auto const [a, b, c] = tr.members;
      std::array<std::array<Element, 3>, 3> const terms{
          {{a, b, c}, {b, c, a}, {a, c, b}}};

      ElementSet common = ElementSet::range(s.size() + 1);
      for (auto const& [p, q, r] : terms) {
        common &= bracket_values(s, p, q, r);
      }
      if (common.empty()) {
        return Conflict{{a, b}, tr.members};
      }
      for (auto const& [p, q, r] : terms) {
        ElementSet keep;
        for (auto v : s.domain(p, q)) {
          auto reach = v == zero ? ElementSet::singleton(zero)
                                 : s.domain(static_cast<Element>(v), r);
          if (!(reach & common).empty()) {
            keep.insert(v);
          }
        }
        if (keep.empty()) {
          return Conflict{{p, q}, tr.members};
        }
        s.narrow(p, q, keep);
        if (keep.size() == 1 && keep.front() != zero) {
          auto v = static_cast<Element>(keep.front());
          if ((s.domain(v, r) & common).empty()) {
            return Conflict{{v, r}, tr.members};
          }
          s.narrow(v, r, common);
        }
      }
      return std::nullopt;
    }

  }  // namespace detail

  //! Runs every associativity triple touching a changed row until nothing
  //! changes. Returns the first conflict found, leaving s in an
  //! unspecified (but still valid) state.
  inline std::optional<Conflict> propagate(SearchState& s) {
    for (Element a = 1; a <= s.size(); ++a) {
      for (Element b = a; b <= s.size(); ++b) {
        if (s.domain(a, b).empty()) {
          return Conflict{{a, b}, {a, b, 0}};
        }
      }
    }
    while (!s.dirty().empty()) {
      auto dirty = s.take_dirty();
      for (auto const& tr : s.triples()) {
        if ((tr.mask & dirty).empty()) {
          continue;
        }
        if (auto conflict = detail::revise(s, tr)) {
          return conflict;
        }
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Orbits under Aut(G)
  ////////////////////////////////////////////////////////////////////////

  //! Number of orbits of Aut(g) on a set of realizations of g, by
  //! union-find over the generators. When closed is true the set must be
  //! invariant under Aut(g) (it is, for an exhaustive enumeration) and a
  //! missing image throws std::logic_error; otherwise missing images are
  //! ignored and the count is an upper bound.
  inline std::size_t count_orbits(std::vector<MulTable> const& tables,
                                  Graph const& g, bool closed = true) {
    std::map<std::vector<Element>, std::size_t> index;
    for (std::size_t i = 0; i < tables.size(); ++i) {
      index.emplace(tables[i].upper_triangle(), i);
    }
    std::vector<std::size_t> parent(tables.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) {
        x = parent[x] = parent[parent[x]];
      }
      return x;
    };
    std::size_t components = tables.size();
    for (auto const& gen : automorphism_group(g).generators) {
      for (std::size_t i = 0; i < tables.size(); ++i) {
        auto it = index.find(relabel(tables[i], gen).upper_triangle());
        if (it == index.end()) {
          if (closed) {
            throw std::logic_error(
                "realization set is not closed under automorphisms");
          }
          continue;
        }
        auto x = find(i);
        auto y = find(it->second);
        if (x != y) {
          parent[x] = y;
          --components;
        }
      }
    }
    return components;
  }

  namespace detail {

    inline Uniqueness status_of(std::size_t labeled, std::size_t orbits) {
      if (labeled == 0) {
        return Uniqueness::none;
      }
      return orbits == 1 ? Uniqueness::unique : Uniqueness::multiple;
    }

    inline void check_instance(Graph const& g, std::size_t max_n) {
      if (g.size() > max_n) {
        throw TooLarge("graph has " + std::to_string(g.size())
                       + " vertices, the cap is " + std::to_string(max_n));
      }
      if (g.size() + 1 > SmallSet::capacity) {
        throw TooLarge("graph too large for element sets");
      }
      if (!is_connected(g)) {
        throw Error("zero-divisor graphs are connected; the input is not");
      }
    }

    // Sorts, truncates to limit and fills in the counts.
    inline RealizationReport finish(Graph const& g, Mode mode,
                                    std::vector<MulTable>      tables,
                                    std::optional<std::size_t> limit) {
      RealizationReport report;
      report.mode = mode;
      if (limit && tables.size() > *limit) {
        tables.resize(*limit);
        report.truncated = true;
      }
      std::sort(tables.begin(), tables.end());
      report.tables          = std::move(tables);
      report.labeled_count   = report.tables.size();
      report.iso_class_count = count_orbits(report.tables, g,
                                            !report.truncated);
      report.status = status_of(report.labeled_count, report.iso_class_count);
      return report;
    }

    class Searcher {
     public:
      Searcher(Graph const& g, std::size_t cap) : _g(g), _cap(cap) {}

      // True once cap tables have been collected.
      bool run(SearchState s) {
        if (propagate(s)) {
          return false;
        }
        auto cell = s.choose();
        if (!cell) {
          emit(s.table());
          return _found.size() >= _cap;
        }
        for (auto v : s.domain(cell->row, cell->col)) {
          SearchState child = s;
          child.assign(cell->row, cell->col, static_cast<Element>(v));
          if (run(std::move(child))) {
            return true;
          }
        }
        return false;
      }

      std::vector<MulTable>& found() noexcept {
        return _found;
      }

     private:
      void emit(MulTable t) {
        if (!check_axioms(t).empty() || !realizes(t, _g)) {
          throw std::logic_error("search emitted an invalid realization");
        }
        _found.push_back(std::move(t));
      }

      Graph const&          _g;
      std::size_t           _cap;
      std::vector<MulTable> _found;
    };

  }  // namespace detail

  //! Every table t on V(g) ∪ {0} with Γ(t) = g (element e on vertex e - 1),
  //! in ascending order of the upper triangle. With a limit at most that
  //! many are returned and the report is flagged truncated when more exist.
  //! Throws TooLarge above opts.max_n vertices and Error when g is
  //! disconnected.
  inline RealizationReport realize_all(Graph const&          g,
                                       RealizeOptions const& opts = {}) {
    detail::check_instance(g, opts.max_n);
    auto const cap = opts.limit ? *opts.limit + 1 : SIZE_MAX;

    SearchState root(g, opts.mode);
    if (propagate(root)) {
      return detail::finish(g, opts.mode, {}, opts.limit);
    }
    auto cell = root.choose();
    if (!cell || opts.threads <= 1) {
      detail::Searcher searcher(g, cap);
      searcher.run(std::move(root));
      return detail::finish(g, opts.mode, std::move(searcher.found()),
                            opts.limit);
    }

    // One task per value of the first branching cell. Each task collects up
    // to cap tables; concatenating in branch order reproduces the
    // sequential prefix exactly.
    auto values = root.domain(cell->row, cell->col).to_vector();
    std::vector<std::vector<MulTable>> per_branch(values.size());
    std::vector<std::exception_ptr>    errors(values.size());
    std::atomic<std::size_t>           next{0};
    auto                               worker = [&] {
      for (auto i = next++; i < values.size(); i = next++) {
        try {
          SearchState child = root;
          child.assign(cell->row, cell->col, static_cast<Element>(values[i]));
          detail::Searcher searcher(g, cap);
          searcher.run(std::move(child));
          per_branch[i] = std::move(searcher.found());
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    auto const count = std::min<std::size_t>(opts.threads, values.size());
    for (std::size_t i = 0; i < count; ++i) {
      pool.emplace_back(worker);
    }
    for (auto& t : pool) {
      t.join();
    }
    for (auto const& e : errors) {
      if (e) {
        std::rethrow_exception(e);
      }
    }
    std::vector<MulTable> tables;
    for (auto& branch : per_branch) {
      for (auto& t : branch) {
        if (tables.size() < cap) {
          tables.push_back(std::move(t));
        }
      }
    }
    return detail::finish(g, opts.mode, std::move(tables), opts.limit);
  }

  inline constexpr std::size_t max_brute_force_vertices = 4;

  //! Reference enumeration: every symmetric table on {0..n} with absorbing
  //! zero is generated and kept iff it realizes g, is associative, and (in
  //! boolean mode) idempotent. Refuses graphs above four vertices.
  inline RealizationReport brute_force_realize(Graph const& g, Mode mode) {
    if (g.size() > max_brute_force_vertices) {
      throw TooLarge("brute force is limited to "
                     + std::to_string(max_brute_force_vertices)
                     + " vertices");
    }
    detail::check_instance(g, max_brute_force_vertices);
    auto const        n = static_cast<Element>(g.size());
    std::vector<Cell> cells;
    for (Element a = 1; a <= n; ++a) {
      for (Element b = a; b <= n; ++b) {
        cells.push_back({a, b});
      }
    }
    MulTable              t(n);
    std::vector<MulTable> found;
    std::vector<Element>  digits(cells.size(), 0);
    while (true) {
      if (realizes(t, g) && (mode == Mode::plain || is_boolean(t))
          && is_semigroup(t)) {
        found.push_back(t);
      }
      std::size_t i = 0;
      while (i < cells.size() && digits[i] == n) {
        digits[i] = 0;
        t.set(cells[i].row, cells[i].col, 0);
        ++i;
      }
      if (i == cells.size()) {
        break;
      }
      ++digits[i];
      t.set(cells[i].row, cells[i].col, digits[i]);
    }
    return detail::finish(g, mode, std::move(found), std::nullopt);
  }

  //! none / unique / multiple up to relabelling by Aut(g), recomputed from
  //! the tables. Throws Error on a truncated report.
  inline Uniqueness classify_uniqueness(RealizationReport const& report,
                                        Graph const&             g) {
    if (report.truncated) {
      throw Error("cannot classify a truncated report");
    }
    return detail::status_of(report.tables.size(),
                             count_orbits(report.tables, g));
  }

}  // namespace zdg

#endif  // ZDG_REALIZE_HPP_
