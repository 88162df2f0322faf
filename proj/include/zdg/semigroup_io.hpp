// zdg - zero-divisor graphs of finite commutative semigroups
//
// The zdg-table text format:
//
//   zdg-table 1
//   n <count>
//   <row 1>            prod[1][j] for j = 1..n
//   <row 2>            prod[2][j] for j = 2..n
//   ...
//
// Entries are element ids separated by spaces, 0 is the zero. The reader
// fills the lower triangle by symmetry.

#ifndef ZDG_SEMIGROUP_IO_HPP_
#define ZDG_SEMIGROUP_IO_HPP_

#include <algorithm>  // for max
#include <fstream>    // for ifstream, ofstream
#include <iomanip>    // for setw
#include <istream>    // for istream
#include <ostream>    // for ostream
#include <sstream>    // for ostringstream
#include <string>     // for string
#include <vector>     // for vector

#include "error.hpp"        // for Error, ParseError
#include "graph.hpp"        // for Graph
#include "semigroup.hpp"    // for MulTable, Element
#include "text_format.hpp"  // for LineReader

namespace zdg {

  namespace detail {

    // Rows of an upper triangle on ids 0..limit. first_row is the id of
    // the first row, so a block of m rows covers ids first_row..last.
    inline std::vector<std::vector<Element>>
    read_triangle(LineReader& reader, std::size_t first_row,
                  std::size_t last) {
      std::vector<std::vector<Element>> rows;
      for (std::size_t a = first_row; a <= last; ++a) {
        auto tok = reader.expect("a table row");
        if (tok.size() != last - a + 1) {
          reader.fail("row " + std::to_string(a) + " has "
                      + std::to_string(tok.size()) + " entries, expected "
                      + std::to_string(last - a + 1));
        }
        std::vector<Element> row;
        for (auto const& s : tok) {
          auto v = reader.number(s);
          if (v > last) {
            reader.fail("entry " + s + " out of range 0.."
                        + std::to_string(last));
          }
          row.push_back(static_cast<Element>(v));
        }
        rows.push_back(std::move(row));
      }
      return rows;
    }

  }  // namespace detail

  inline MulTable read_table(std::istream& in) {
    detail::LineReader reader(in);
    reader.expect_header("zdg-table");
    auto n = reader.expect_count();
    if (n + 1 > SmallSet::capacity) {
      reader.fail("too many elements");
    }
    auto                     rows = detail::read_triangle(reader, 1, n);
    std::vector<std::string> extra;
    if (reader.next(extra)) {
      reader.fail("unexpected content after the last row");
    }
    return MulTable::from_upper(rows);
  }

  inline void write_table(std::ostream& out, MulTable const& t) {
    out << "zdg-table 1\n";
    out << "n " << t.size() << "\n";
    for (Element a = 1; a <= t.size(); ++a) {
      for (Element b = a; b <= t.size(); ++b) {
        out << (b == a ? "" : " ") << t(a, b);
      }
      out << "\n";
    }
  }

  inline std::string to_table_string(MulTable const& t) {
    std::ostringstream out;
    write_table(out, t);
    return out.str();
  }

  inline MulTable table_from_string(std::string const& text) {
    std::istringstream in(text);
    return read_table(in);
  }

  inline MulTable load_table(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open " + path);
    }
    try {
      return read_table(in);
    } catch (ParseError const& e) {
      throw Error(path + ": " + e.what());
    }
  }

  inline void save_table(std::string const& path, MulTable const& t) {
    std::ofstream out(path);
    if (!out) {
      throw Error("cannot write " + path);
    }
    write_table(out, t);
  }

  //! Element names taken from the vertex labels of g (element e is vertex
  //! e - 1); "0" for zero.
  inline std::vector<std::string> element_names(Graph const& g) {
    std::vector<std::string> names{"0"};
    for (std::size_t v = 0; v < g.size(); ++v) {
      names.push_back(g.name(v).empty() ? std::to_string(v + 1) : g.name(v));
    }
    return names;
  }

  inline std::vector<std::string> element_names(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t e = 0; e <= n; ++e) {
      names.push_back(std::to_string(e));
    }
    return names;
  }

  //! Upper-triangular rendering with element names:
  //!
  //!     .  | a1 a2
  //!   -----+------
  //!     a1 |  0 a1
  //!     a2 |     0
  inline std::string render_table(MulTable const&                 t,
                                  std::vector<std::string> const& names) {
    std::size_t w = 1;
    for (auto const& s : names) {
      w = std::max(w, s.size());
    }
    std::ostringstream out;
    out << std::setw(static_cast<int>(w)) << "." << " |";
    for (Element b = 1; b <= t.size(); ++b) {
      out << " " << std::setw(static_cast<int>(w)) << names[b];
    }
    out << "\n" << std::string(w + 1, '-') << "+"
        << std::string(t.size() * (w + 1), '-') << "\n";
    for (Element a = 1; a <= t.size(); ++a) {
      out << std::setw(static_cast<int>(w)) << names[a] << " |";
      for (Element b = 1; b <= t.size(); ++b) {
        out << " " << std::setw(static_cast<int>(w))
            << (b < a ? std::string() : names[t(a, b)]);
      }
      out << "\n";
    }
    return out.str();
  }

}  // namespace zdg

#endif  // ZDG_SEMIGROUP_IO_HPP_
