// Structure of involutive solutions: the retract, irretractable solutions and
// their elementary abelian group, the left group decomposition of the
// underlying semigroup, classification triples and isomorphism testing.

#ifndef PENTAGON_ANALYSIS_HPP_
#define PENTAGON_ANALYSIS_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pentagon/core.hpp"
#include "pentagon/group.hpp"

namespace pentagon {

  //! Thrown when an operation is applied outside of its hypotheses, e.g. the
  //! retract of a solution that is not an involutive solution of the PE.
  class PreconditionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  struct RetractResult {
    SolutionTable            quotient;
    std::vector<index_t>     class_of;
    std::vector<std::size_t> class_sizes;
  };

  struct ClassificationTriple {
    std::size_t x_size = 1;
    std::size_t a_dim  = 0;
    std::size_t g_dim  = 0;

    std::size_t carrier_size() const noexcept {
      return x_size << (a_dim + g_dim);
    }
    friend constexpr auto operator<=>(ClassificationTriple const&,
                                      ClassificationTriple const&) = default;
  };

  struct LeftGroupDecomposition {
    std::vector<index_t> idempotents;
    //! eSe for the smallest idempotent e, relabelled 0 .. |eSe| - 1 in
    //! increasing order of the original indices.
    GroupTable           group_part;
    std::vector<index_t> group_elements;
  };

  //! Throws PreconditionError unless s is an involutive solution of the PE.
  void require_involutive_solution(SolutionTable const& s);

  //! Quotient by x ~ y iff theta_x = theta_y; classes are numbered by their
  //! smallest member.
  RetractResult retract(SolutionTable const& s);

  bool is_irretractable(SolutionTable const& s);

  //! Sizes |S|, |Ret(S)|, |Ret(Ret(S))|, ... until two consecutive sizes agree.
  std::vector<std::size_t> retract_tower(SolutionTable const& s);

  //! x + y := theta_x(y) on an irretractable involutive solution.
  GroupTable abelian_structure(SolutionTable const& s);

  std::vector<index_t> idempotents(MultTable const& m);

  //! Present iff m is a left group, i.e. isomorphic to (left zero) x (group).
  std::optional<LeftGroupDecomposition> left_group_decomposition(MultTable const& m);

  //! True iff every principal two-sided ideal S^1 y S^1 is all of S.
  bool check_simple(MultTable const& m);

  ClassificationTriple classify(SolutionTable const& s);

  bool is_isomorphic_invariant(SolutionTable const& s, SolutionTable const& s_prime);

  //! Backtracking search for f with (f x f) s = s' (f x f). Throws
  //! PreconditionError if the sizes differ or exceed max_size.
  std::optional<Bijection> find_isomorphism(SolutionTable const& s,
                                            SolutionTable const& s_prime,
                                            std::size_t          max_size = 8);

}  // namespace pentagon

#endif  // PENTAGON_ANALYSIS_HPP_
