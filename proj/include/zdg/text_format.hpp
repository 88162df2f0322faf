// zdg - zero-divisor graphs of finite commutative semigroups
//
// Line tokenizer shared by the zdg-graph, zdg-table and zdg-ring readers.
// Blank lines are skipped and '#' starts a comment running to end of line.

#ifndef ZDG_TEXT_FORMAT_HPP_
#define ZDG_TEXT_FORMAT_HPP_

#include <charconv>  // for from_chars
#include <cstddef>   // for size_t
#include <istream>   // for istream
#include <sstream>   // for istringstream
#include <string>    // for string, getline
#include <vector>    // for vector

#include "error.hpp"  // for ParseError

namespace zdg::detail {

  class LineReader {
   public:
    explicit LineReader(std::istream& in) : _in(in) {}

    //! Next non-blank, comment-stripped line split on whitespace; false at
    //! end of input.
    bool next(std::vector<std::string>& tokens) {
      std::string line;
      while (std::getline(_in, line)) {
        ++_line;
        if (auto hash = line.find('#'); hash != std::string::npos) {
          line.erase(hash);
        }
        std::istringstream ss(line);
        tokens.clear();
        for (std::string tok; ss >> tok;) {
          tokens.push_back(tok);
        }
        if (!tokens.empty()) {
          return true;
        }
      }
      return false;
    }

    //! Like next, but end of input is an error.
    std::vector<std::string> expect(char const* what) {
      std::vector<std::string> tokens;
      if (!next(tokens)) {
        fail(std::string("unexpected end of input, expected ") + what);
      }
      return tokens;
    }

    void expect_header(char const* magic) {
      auto tok = expect("header");
      if (tok.size() != 2 || tok[0] != magic || tok[1] != "1") {
        fail(std::string("expected header '") + magic + " 1'");
      }
    }

    std::size_t expect_count() {
      auto tok = expect("'n <count>'");
      if (tok.size() != 2 || tok[0] != "n") {
        fail("expected 'n <count>'");
      }
      return number(tok[1]);
    }

    std::size_t number(std::string const& tok) const {
      std::size_t value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        fail("'" + tok + "' is not a non-negative integer");
      }
      return value;
    }

    [[noreturn]] void fail(std::string const& what) const {
      throw ParseError(_line, what);
    }

    std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::istream& _in;
    std::size_t   _line = 0;
  };

}  // namespace zdg::detail

#endif  // ZDG_TEXT_FORMAT_HPP_
