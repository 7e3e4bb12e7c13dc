// Exhaustive enumeration of involutive solutions of the pentagon equation on
// small carriers, operating on raw tables so that completeness does not rely
// on any structure theorem.

#ifndef PENTAGON_ENUMERATION_HPP_
#define PENTAGON_ENUMERATION_HPP_

#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pentagon/analysis.hpp"
#include "pentagon/core.hpp"

namespace pentagon {

  class EnumerationError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  struct EnumerationOptions {
    //! 0 means std::thread::hardware_concurrency().
    std::size_t workers = 1;
    //! Wall-clock budget; unset means unbounded.
    std::optional<std::chrono::milliseconds> budget;
  };

  struct EnumerationResult {
    std::vector<SolutionTable> tables;
    //! False when the budget ran out; tables is then a partial list.
    bool complete = true;
    //! Search-tree nodes visited (deterministic for complete runs).
    std::size_t nodes = 0;
  };

  struct EnumerationReport {
    std::size_t                       size        = 0;
    std::size_t                       raw_count   = 0;
    std::size_t                       class_count = 0;
    std::vector<SolutionTable>        representatives;
    std::vector<ClassificationTriple> triples;
    std::chrono::milliseconds         elapsed{0};
    bool                              complete = true;
  };

  //! All involutions of S x S (n <= 3) that pass check_pentagon.
  std::vector<SolutionTable> enumerate_naive(std::size_t n);

  //! Backtracking search in lexicographic (i, j) order; s(p) = q forces
  //! s(q) = p and every pentagon triple is checked as soon as its entries are
  //! known. Output sorted lexicographically. n <= 6.
  EnumerationResult enumerate_pruned(std::size_t n, EnumerationOptions const& opts = {});

  //! Groups the enumerated tables into isomorphism classes.
  EnumerationReport count_up_to_iso(std::size_t n, EnumerationOptions const& opts = {});

  //! binom(k + 2, 2) where 2^k is the largest power of two dividing n.
  std::size_t expected_count(std::size_t n);

  //! Lexicographically smallest relabelling of s.
  SolutionTable canonical_form(SolutionTable const& s);

}  // namespace pentagon

#endif  // PENTAGON_ENUMERATION_HPP_
