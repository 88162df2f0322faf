// zdg - zero-divisor graphs of finite commutative semigroups
//
// Executable statements about zero-divisor semigroups, evaluated on a
// concrete table. Each verifier first evaluates its hypotheses; only when
// they hold is the conclusion evaluated, otherwise the verdict is
// not-applicable. A verdict with hypotheses met and a false conclusion is a
// counterexample.
//
// Notation below: S the table's elements, T_x the end vertices adjacent to
// x, N(x) the neighbourhood of x in Γ(S), K(G) the core.

#ifndef ZDG_THEOREMS_HPP_
#define ZDG_THEOREMS_HPP_

#include <algorithm>  // for max, min
#include <atomic>     // for atomic
#include <cstddef>   // for size_t
#include <exception>  // for exception_ptr
#include <optional>  // for optional
#include <string>    // for string
#include <thread>    // for thread
#include <vector>    // for vector

#include "error.hpp"      // for Error
#include "graph.hpp"      // for Graph, core, ...
#include "semigroup.hpp"  // for MulTable, is_subsemigroup, ...

namespace zdg {

  struct TheoremVerdict {
    std::string theorem;
    std::string instance;
    bool        hypotheses_met = false;
    //! Empty when not applicable.
    std::optional<bool> conclusion_holds;
    std::string         witness;

    bool counterexample() const noexcept {
      return hypotheses_met && conclusion_holds == false;
    }
  };

  namespace theorem_id {
    inline constexpr char const* graph_structure = "graph-structure";
    inline constexpr char const* complement_subsemigroup
        = "complement-subsemigroup";
    inline constexpr char const* pendant_complement = "pendant-complement";
    inline constexpr char const* pendant_closure    = "pendant-closure";
    inline constexpr char const* twin_pendants      = "twin-pendant-products";
    inline constexpr char const* top_degree_ideal   = "top-degree-ideal";
    inline constexpr char const* neighborhood_classes
        = "neighborhood-classes";
    inline constexpr char const* inclusion_absorption
        = "inclusion-absorption";
    inline constexpr char const* reduced_boolean = "reduced-determined-boolean";
  }  // namespace theorem_id

  namespace detail {

    // Γ(S) and the derived data every verifier needs, in element ids.
    struct TableContext {
      explicit TableContext(MulTable const& table)
          : t(table), g(zero_divisor_graph(table)) {
        auto const k = core(g);
        core_elems   = to_elements(k.vertices);
        ends         = to_elements(end_vertices(g));
        cycle        = has_cycle(g);
        nbr.push_back(ElementSet());
        for (Element x = 1; x <= t.size(); ++x) {
          nbr.push_back(element_neighbors(t, x));
        }
      }

      ElementSet pendants(Element x) const {
        return nbr[x] & ends;
      }
      ElementSet nonzero() const {
        return t.nonzero();
      }
      std::size_t degree(Element x) const {
        return nbr[x].size();
      }

      MulTable const&         t;
      Graph                   g;
      ElementSet              core_elems;
      ElementSet              ends;
      bool                    cycle = false;
      std::vector<ElementSet> nbr;
    };

    inline std::string show(ElementSet s) {
      std::string out = "{";
      for (auto x : s) {
        out += (out.size() > 1 ? "," : "") + std::to_string(x);
      }
      return out + "}";
    }

    inline std::string el(Element x) {
      return std::to_string(x);
    }

    // The first product of xs*ys outside target, as "a*b=c".
    inline std::string escape(MulTable const& t, ElementSet xs, ElementSet ys,
                              ElementSet target) {
      for (auto a : xs) {
        for (auto b : ys) {
          auto c = t(static_cast<Element>(a), static_cast<Element>(b));
          if (!target.contains(c)) {
            return el(static_cast<Element>(a)) + "*"
                   + el(static_cast<Element>(b)) + "=" + el(c);
          }
        }
      }
      return {};
    }

    inline void check_element(MulTable const& t, Element x) {
      if (x == zero || x > t.size()) {
        throw Error("element " + std::to_string(x)
                    + " is not a nonzero element of the table");
      }
    }

    inline TheoremVerdict verdict(char const* id, std::string instance) {
      TheoremVerdict v;
      v.theorem  = id;
      v.instance = std::move(instance);
      return v;
    }

    inline void conclude(TheoremVerdict& v, bool holds, std::string witness) {
      v.hypotheses_met   = true;
      v.conclusion_holds = holds;
      if (!holds) {
        v.witness = std::move(witness);
      }
    }

    // Some 4-cycle of g uses the edge s-t.
    inline bool edge_in_square(Graph const& g, std::size_t s, std::size_t t) {
      for (auto d : g.neighbors(s) - VertexSet::singleton(t)) {
        for (auto h : g.neighbors(t) - VertexSet::singleton(s)) {
          if (d != h && g.adjacent(d, h)) {
            return true;
          }
        }
      }
      return false;
    }

    inline TheoremVerdict complement_subsemigroup(TableContext const& c,
                                                  Element x, ElementSet tx) {
      auto v = verdict(theorem_id::complement_subsemigroup,
                       "x=" + el(x) + " T=" + show(tx));
      auto const& t     = c.t;
      auto const  xs    = ElementSet::singleton(x);
      auto const  pend  = c.pendants(x);
      auto const  rest  = c.nonzero() - tx - xs;
      bool        cross = false;
      for (auto a : tx) {
        cross = cross || !(c.nbr[a] & rest).empty();
      }
      bool const in_range = tx.is_subset_of(c.nonzero() - xs);
      bool const h1       = pend.is_subset_of(tx);
      bool const h2       = rest.empty() || !cross;
      bool const h3       = !rest.empty() || (c.cycle && !pend.empty());
      if (!(in_range && h1 && h2 && h3)) {
        return v;
      }
      auto const kept   = t.all() - tx;
      bool       closed = is_subsemigroup(t, kept);
      std::string witness;
      if (!closed) {
        witness = escape(t, kept, kept, kept);
      }
      // x adjacent to an end vertex in a graph with a cycle: x^2 in {0, x}
      if (closed && !pend.empty() && c.cycle) {
        auto sq = t(x, x);
        if (sq != zero && sq != x) {
          closed  = false;
          witness = el(x) + "*" + el(x) + "=" + el(sq);
        }
      }
      conclude(v, closed, witness);
      return v;
    }

  }  // namespace detail

  //! Facts every zero-divisor graph satisfies: connected with diameter at
  //! most 3; when there is a cycle, every core edge lies in a triangle or a
  //! square and every vertex is an end vertex or in the core; for
  //! non-adjacent x, y some z has N(x) ∪ N(y) contained in N(z) ∪ {z}.
  inline TheoremVerdict verify_graph_structure(MulTable const& t) {
    auto v = detail::verdict(theorem_id::graph_structure, "table");
    if (!is_semigroup(t) || !non_zero_divisors(t).empty()) {
      return v;
    }
    auto const g = zero_divisor_graph(t);
    auto const d = diameter(g);
    if (!d || *d > 3) {
      detail::conclude(v, false,
                       d ? "diameter " + std::to_string(*d) : "disconnected");
      return v;
    }
    if (has_cycle(g)) {
      auto const k = core(g);
      for (auto [a, b] : k.edges) {
        bool triangle = !(g.neighbors(a) & g.neighbors(b)).empty();
        if (!triangle && !detail::edge_in_square(g, a, b)) {
          detail::conclude(v, false,
                           "core edge " + std::to_string(a + 1) + "-"
                               + std::to_string(b + 1)
                               + " in no triangle or square");
          return v;
        }
      }
      for (std::size_t x = 0; x < g.size(); ++x) {
        if (!is_end_vertex(g, x) && !k.vertices.contains(x)) {
          detail::conclude(v, false,
                           "vertex " + std::to_string(x + 1)
                               + " neither end nor core");
          return v;
        }
      }
    }
    for (std::size_t x = 0; x < g.size(); ++x) {
      for (std::size_t y = x + 1; y < g.size(); ++y) {
        if (g.adjacent(x, y)) {
          continue;
        }
        auto both    = g.neighbors(x) | g.neighbors(y);
        bool covered = false;
        for (std::size_t z = 0; z < g.size() && !covered; ++z) {
          covered = both.is_subset_of(g.closed_neighbors(z));
        }
        if (!covered) {
          detail::conclude(v, false,
                           "no closed neighbourhood covers N("
                               + std::to_string(x + 1) + ") and N("
                               + std::to_string(y + 1) + ")");
          return v;
        }
      }
    }
    detail::conclude(v, true, {});
    return v;
  }

  //! For x and T in S - {0, x} such that (1) T contains every end vertex
  //! adjacent to x, (2) no edge joins T to C = S - (T ∪ {0, x}) when C is
  //! nonempty, and (3) C is nonempty or Γ has a cycle and x has an adjacent
  //! end vertex: S - T is a sub-semigroup. Also checks that x^2 is 0 or x
  //! whenever x has an adjacent end vertex and Γ has a cycle.
  inline TheoremVerdict verify_complement_subsemigroup(MulTable const& t,
                                                       Element x,
                                                       ElementSet tx) {
    detail::check_element(t, x);
    return detail::complement_subsemigroup(detail::TableContext(t), x, tx);
  }

  //! For T_x nonempty with S - (T_x ∪ {0, x}) nonempty or Γ cyclic:
  //! S - T_x is a sub-semigroup, and {0, x} is one too when Γ has a cycle.
  inline TheoremVerdict verify_pendant_complement(MulTable const& t,
                                                  Element         x) {
    detail::check_element(t, x);
    detail::TableContext c(t);
    auto v = detail::verdict(theorem_id::pendant_complement,
                             "x=" + detail::el(x));
    auto const tx   = c.pendants(x);
    auto const rest = c.nonzero() - tx - ElementSet::singleton(x);
    if (tx.empty() || (rest.empty() && !c.cycle)) {
      return v;
    }
    auto const kept = t.all() - tx;
    if (!is_subsemigroup(t, kept)) {
      detail::conclude(v, false, detail::escape(t, kept, kept, kept));
      return v;
    }
    if (c.cycle) {
      auto pair = ElementSet::singleton(zero) | ElementSet::singleton(x);
      if (!is_subsemigroup(t, pair)) {
        detail::conclude(v, false, detail::escape(t, pair, pair, pair));
        return v;
      }
    }
    detail::conclude(v, true, {});
    return v;
  }

  //! Γ has a cycle, x is not an end vertex and x^2 != 0: T_x ∪ {0} is a
  //! sub-semigroup.
  inline TheoremVerdict verify_pendant_closure(MulTable const& t, Element x) {
    detail::check_element(t, x);
    detail::TableContext c(t);
    auto v = detail::verdict(theorem_id::pendant_closure,
                             "x=" + detail::el(x));
    if (!c.cycle || c.ends.contains(x) || t(x, x) == zero) {
      return v;
    }
    auto const sub = c.pendants(x) | ElementSet::singleton(zero);
    detail::conclude(v, is_subsemigroup(t, sub),
                     detail::escape(t, sub, sub, sub));
    return v;
  }

  //! Distinct s, u, neither an end vertex, with T_s, T_u nonempty and
  //! s^2 = u^2 = 0:
  //! (1) T_s T_u is contained in N(s) ∩ N(u), sS = {0, s} and uS = {0, u};
  //! (2) if every core neighbour of s squares to zero, or the edge s-u lies
  //! in no 4-cycle, then T_s ∪ {0} is a sub-semigroup without nonzero
  //! nilpotents.
  //! Without the end-vertex exclusion the statement fails on K_2 with the
  //! null multiplication, where T_s T_u = {0}.
  inline TheoremVerdict verify_twin_pendant_products(MulTable const& t,
                                                     Element s, Element u) {
    detail::check_element(t, s);
    detail::check_element(t, u);
    detail::TableContext c(t);
    auto v = detail::verdict(theorem_id::twin_pendants,
                             "s=" + detail::el(s) + " u=" + detail::el(u));
    auto const ts = c.pendants(s);
    auto const tu = c.pendants(u);
    if (s == u || ts.empty() || tu.empty() || t(s, s) != zero
        || t(u, u) != zero || c.ends.contains(s) || c.ends.contains(u)) {
      return v;
    }
    auto const common = c.nbr[s] & c.nbr[u];
    if (auto w = detail::escape(t, ts, tu, common); !w.empty()) {
      detail::conclude(v, false, w);
      return v;
    }
    for (auto x : {s, u}) {
      auto const orbit = product(t, ElementSet::singleton(x), t.all());
      auto const want  = ElementSet::singleton(zero) | ElementSet::singleton(x);
      if (orbit != want) {
        detail::conclude(v, false,
                         detail::el(x) + "S=" + detail::show(orbit));
        return v;
      }
    }
    bool cond_i = true;
    for (auto w : c.nbr[s] & c.core_elems) {
      cond_i = cond_i && t(static_cast<Element>(w), static_cast<Element>(w)) == zero;
    }
    bool const cond_ii = c.g.adjacent(s - 1, u - 1)
                         && !detail::edge_in_square(c.g, s - 1, u - 1);
    if (cond_i || cond_ii) {
      auto const sub = ts | ElementSet::singleton(zero);
      if (!is_subsemigroup(t, sub)) {
        detail::conclude(v, false, detail::escape(t, sub, sub, sub));
        return v;
      }
      for (auto y : ts) {
        if (is_nilpotent(t, static_cast<Element>(y))) {
          detail::conclude(v, false, detail::el(static_cast<Element>(y))
                                         + " is nilpotent");
          return v;
        }
      }
    }
    detail::conclude(v, true, {});
    return v;
  }

  //! For every vertex s of the greatest degree m with s^2 = s, when Γ is
  //! m-uniquely determined: {0, s} is an ideal of S.
  inline TheoremVerdict verify_top_degree_ideal(MulTable const& t) {
    detail::TableContext c(t);
    auto v = detail::verdict(theorem_id::top_degree_ideal, "");
    std::size_t m = 0;
    for (Element x = 1; x <= t.size(); ++x) {
      m = std::max(m, c.degree(x));
    }
    if (!is_m_uniquely_determined(c.g, m)) {
      return v;
    }
    ElementSet eligible;
    for (Element s = 1; s <= t.size(); ++s) {
      if (c.degree(s) == m && t(s, s) == s) {
        eligible.insert(s);
      }
    }
    v.instance = "s in " + detail::show(eligible);
    if (eligible.empty()) {
      return v;
    }
    for (auto s : eligible) {
      auto ideal = ElementSet::singleton(zero) | ElementSet::singleton(s);
      if (!is_ideal(t, ideal, t.all())) {
        detail::conclude(v, false, detail::escape(t, t.all(), ideal, ideal));
        return v;
      }
    }
    detail::conclude(v, true, {});
    return v;
  }

  //! For Boolean S and every nonzero x: the class S_x and the lower set
  //! S_{<=x} are sub-semigroups avoiding 0, and S_x is an ideal of S_{<=x}.
  inline TheoremVerdict verify_neighborhood_classes(MulTable const& t) {
    auto v = detail::verdict(theorem_id::neighborhood_classes, "all x");
    if (!is_boolean(t)) {
      return v;
    }
    for (Element x = 1; x <= t.size(); ++x) {
      auto const cls   = equivalence_class(t, x);
      auto const lower = lower_set(t, x);
      std::string where = "x=" + detail::el(x) + ": ";
      if (!is_subsemigroup(t, cls)) {
        detail::conclude(v, false,
                         where + detail::escape(t, cls, cls, cls));
        return v;
      }
      if (!is_subsemigroup(t, lower)) {
        detail::conclude(v, false,
                         where + detail::escape(t, lower, lower, lower));
        return v;
      }
      if (!is_ideal(t, cls, lower)) {
        detail::conclude(v, false,
                         where + detail::escape(t, lower, cls, cls));
        return v;
      }
    }
    detail::conclude(v, true, {});
    return v;
  }

  //! For Boolean S: Γ is uniquely determined iff N(y) ⊆ N(x) implies
  //! yx = x for all nonzero x, y.
  inline TheoremVerdict verify_inclusion_absorption(MulTable const& t) {
    detail::TableContext c(t);
    auto v = detail::verdict(theorem_id::inclusion_absorption, "table");
    if (!is_boolean(t)) {
      return v;
    }
    bool        absorbs = true;
    std::string failure;
    for (Element x = 1; x <= t.size() && absorbs; ++x) {
      for (Element y = 1; y <= t.size() && absorbs; ++y) {
        if (c.nbr[y].is_subset_of(c.nbr[x]) && t(y, x) != x) {
          absorbs = false;
          failure = "N(" + detail::el(y) + ") in N(" + detail::el(x) + ") but "
                    + detail::el(y) + "*" + detail::el(x) + "="
                    + detail::el(t(y, x));
        }
      }
    }
    bool const determined = is_uniquely_determined(c.g);
    detail::conclude(v, determined == absorbs,
                     determined ? failure : "graph has equal neighbourhoods "
                                            "yet inclusion implies absorption");
    return v;
  }

  //! Reduced S with uniquely determined Γ is Boolean.
  inline TheoremVerdict verify_reduced_is_boolean(MulTable const& t) {
    detail::TableContext c(t);
    auto v = detail::verdict(theorem_id::reduced_boolean, "table");
    if (!is_reduced(t) || !is_uniquely_determined(c.g)) {
      return v;
    }
    std::string witness;
    for (Element x = 1; x <= t.size() && witness.empty(); ++x) {
      if (t(x, x) != x) {
        witness = detail::el(x) + "*" + detail::el(x) + "="
                  + detail::el(t(x, x));
      }
    }
    detail::conclude(v, witness.empty(), witness);
    return v;
  }

  struct VerifyOptions {
    //! The complement-subsemigroup check tries every subset T of
    //! S - {0, x} when n is at most this; above it only T_x and S - {0, x}.
    std::size_t exhaustive_subsets_up_to = 8;
  };

  //! Every verifier on every eligible element, pair and subset of t. Subset
  //! sweeps are reported as one verdict per x.
  inline std::vector<TheoremVerdict>
  verify_all(MulTable const& t, VerifyOptions const& opts = {}) {
    detail::TableContext        c(t);
    std::vector<TheoremVerdict> out;
    out.push_back(verify_graph_structure(t));
    auto const n = static_cast<Element>(t.size());

    for (Element x = 1; x <= n; ++x) {
      auto const others = c.nonzero() - ElementSet::singleton(x);
      std::vector<ElementSet> subsets;
      if (t.size() <= opts.exhaustive_subsets_up_to) {
        auto const members = others.to_vector();
        for (std::size_t mask = 0; mask < (std::size_t(1) << members.size());
             ++mask) {
          ElementSet s;
          for (std::size_t i = 0; i < members.size(); ++i) {
            if ((mask >> i) & 1U) {
              s.insert(members[i]);
            }
          }
          subsets.push_back(s);
        }
      } else {
        subsets = {c.pendants(x), others};
      }
      auto agg = detail::verdict(theorem_id::complement_subsemigroup,
                                 "x=" + detail::el(x) + " all T");
      std::size_t qualifying = 0;
      for (auto tx : subsets) {
        auto v = detail::complement_subsemigroup(c, x, tx);
        if (v.hypotheses_met) {
          ++qualifying;
          if (v.counterexample() && agg.witness.empty()) {
            agg.witness = v.instance + ": " + v.witness;
          }
        }
      }
      if (qualifying > 0) {
        agg.hypotheses_met   = true;
        agg.conclusion_holds = agg.witness.empty();
        agg.instance += " (" + std::to_string(qualifying) + " qualifying)";
      }
      out.push_back(agg);
      out.push_back(verify_pendant_complement(t, x));
      out.push_back(verify_pendant_closure(t, x));
      for (Element u = 1; u <= n; ++u) {
        if (u != x) {
          out.push_back(verify_twin_pendant_products(t, x, u));
        }
      }
    }
    out.push_back(verify_top_degree_ideal(t));
    out.push_back(verify_neighborhood_classes(t));
    out.push_back(verify_inclusion_absorption(t));
    out.push_back(verify_reduced_is_boolean(t));
    return out;
  }

  inline std::size_t count_counterexamples(
      std::vector<TheoremVerdict> const& verdicts) {
    std::size_t k = 0;
    for (auto const& v : verdicts) {
      k += v.counterexample() ? 1 : 0;
    }
    return k;
  }

  //! verify_all on each table, spread over up to `threads` workers.
  //! Result i belongs to tables[i] whatever the schedule.
  inline std::vector<std::vector<TheoremVerdict>>
  verify_tables(std::vector<MulTable> const& tables,
                VerifyOptions const& opts = {}, std::size_t threads = 1) {
    std::vector<std::vector<TheoremVerdict>> out(tables.size());
    std::vector<std::exception_ptr>          errors(tables.size());
    std::atomic<std::size_t>                 next{0};
    auto work = [&] {
      for (auto i = next++; i < tables.size(); i = next++) {
        try {
          out[i] = verify_all(tables[i], opts);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    auto const workers = std::min(std::max<std::size_t>(threads, 1),
                                  std::max<std::size_t>(tables.size(), 1));
    if (workers == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back(work);
      }
      for (auto& t : pool) {
        t.join();
      }
    }
    for (auto const& e : errors) {
      if (e) {
        std::rethrow_exception(e);
      }
    }
    return out;
  }

}  // namespace zdg

#endif  // ZDG_THEOREMS_HPP_
