// Text formats.
//
// Solution file:
//   pentagon-solution v1
//   size <n>
//   <i> <j> <k> <l>        (n^2 rows, s(i,j) = (k,l), 0-based)
//
// Sigma file: one line per a in 0 .. 2^r - 1 listing sigma_a(0) .. sigma_a(m-1).
//
// Parsing is lenient about row order, repeated blanks, CRLF line endings,
// blank lines and '#' comment lines; emission is canonical.

#ifndef PENTAGON_IO_HPP_
#define PENTAGON_IO_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pentagon/constructors.hpp"
#include "pentagon/core.hpp"

namespace pentagon {

  class ParseError : public std::runtime_error {
   public:
    ParseError(std::size_t line, std::string const& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    //! 1-based; 0 when the problem is not tied to a line (e.g. missing rows).
    std::size_t line() const noexcept {
      return line_;
    }

   private:
    std::size_t line_;
  };

  inline constexpr std::string_view solution_magic = "pentagon-solution v1";

  SolutionTable parse_solution(std::string_view text);
  std::string   emit_solution(SolutionTable const& s);

  SigmaMap parse_sigma(std::string_view text, std::size_t x_size, std::size_t a_dim);

  //! "(1 4 3 2)(5 6)" with 1-based labels, or "()" for the identity.
  Permutation parse_cycles(std::string_view text, std::size_t n);

}  // namespace pentagon

#endif  // PENTAGON_IO_HPP_
