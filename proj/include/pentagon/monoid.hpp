// The structure monoid M(S, tau s) = < S | x o y = theta_x(y) o xy >.
//
// Every defining relation has length two on both sides, so the congruence
// never identifies words of different lengths and each length stratum is a
// finite closure problem that can be solved exactly.

#ifndef PENTAGON_MONOID_HPP_
#define PENTAGON_MONOID_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pentagon/core.hpp"

namespace pentagon {

  //! Raised when a computation would exceed its configured memory budget.
  class BudgetExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  using Word = std::vector<index_t>;

  //! The default refuses strata with more than 2^24 cells.
  inline constexpr std::size_t default_word_budget = std::size_t(1) << 24;

  struct Relation {
    std::array<index_t, 2> lhs;
    std::array<index_t, 2> rhs;

    bool is_trivial() const noexcept {
      return lhs == rhs;
    }
    friend constexpr auto operator<=>(Relation const&, Relation const&) = default;
  };

  struct MonoidPresentation {
    std::size_t generators = 0;
    //! Each relation stored with lhs <= rhs; sorted, without duplicates.
    std::vector<Relation> relations;

    std::size_t nontrivial_count() const;
  };

  struct GrowthSeries {
    //! counts[l] = number of congruence classes of words of length l.
    std::vector<std::size_t> counts;
  };

  struct GrowthDegree {
    //! Empty when the series is too short to stabilise.
    std::optional<std::size_t> degree;
    //! First length from which the cumulative counts follow the polynomial.
    std::size_t onset = 0;
  };

  //! Relations (x o y, theta_x(y) o xy) for all x, y in S.
  MonoidPresentation presentation_of(SolutionTable const& s);

  //! Per-length class counts up to max_length. Length l is computed from the
  //! classes of length l - 1 extended by one letter, with relations applied
  //! at the last position; budget bounds the number of (class, letter) cells.
  GrowthSeries growth_series(MonoidPresentation const& p,
                             std::size_t               max_length,
                             std::size_t               budget = default_word_budget);
  GrowthSeries growth_series(SolutionTable const& s,
                             std::size_t          max_length,
                             std::size_t          budget = default_word_budget);

  //! The same counts by union-find over all n^l words; budget bounds n^l.
  GrowthSeries growth_series_by_words(MonoidPresentation const& p,
                                      std::size_t               max_length,
                                      std::size_t               budget = default_word_budget);

  //! The lexicographically smallest word of every class of the given length,
  //! sorted.
  std::vector<Word> normal_forms(MonoidPresentation const& p,
                                 std::size_t               length,
                                 std::size_t               budget = default_word_budget);
  std::vector<Word> normal_forms(SolutionTable const& s,
                                 std::size_t          length,
                                 std::size_t          budget = default_word_budget);
  std::vector<Word> normal_forms_by_words(MonoidPresentation const& p,
                                          std::size_t               length,
                                          std::size_t               budget = default_word_budget);

  //! |E(S)| / |Ret(S, s)| for an involutive solution.
  std::size_t rank_expected(SolutionTable const& s);

  //! Degree of the polynomial eventually matched by the cumulative counts,
  //! found as the smallest k whose k-th finite differences end in a run of
  //! at least three equal values.
  GrowthDegree estimate_growth_degree(GrowthSeries const& g);

}  // namespace pentagon

#endif  // PENTAGON_MONOID_HPP_
