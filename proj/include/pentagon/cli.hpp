// Command-line front end. The only part of the library that performs I/O.
//
// Exit codes: 0 success / property holds, 1 property fails, 2 usage or input
// error, 3 resource budget exceeded.

#ifndef PENTAGON_CLI_HPP_
#define PENTAGON_CLI_HPP_

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "pentagon/core.hpp"

namespace pentagon::cli {

  inline constexpr std::string_view version = "1.0.0";

  enum exit_code : int {
    success         = 0,
    property_fails  = 1,
    usage_error     = 2,
    budget_exceeded = 3,
  };

  //! Resolves a solution argument: either a path to a solution file or one of
  //! identity(n), canonical(x,a,g), irretractable(r), ext(x,a), group(NAME).
  SolutionTable load_solution(std::string const& arg);

  //! args excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace pentagon::cli

#endif  // PENTAGON_CLI_HPP_
