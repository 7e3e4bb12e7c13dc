// Every family of solutions of the pentagon equation that the classification
// of involutive solutions is built from, together with the search for
// permutations satisfying sigma^(sigma(i) + 1) = sigma^i.
//
// Carriers that are products are encoded row-major over the declared factor
// order; this encoding is part of the public contract (golden files depend on
// it).

#ifndef PENTAGON_CONSTRUCTORS_HPP_
#define PENTAGON_CONSTRUCTORS_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pentagon/core.hpp"
#include "pentagon/group.hpp"

namespace pentagon {

  class ConstructionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  //! A map a -> sigma_a from C2^a_dim to Sym(X). Not required to be a
  //! homomorphism.
  class SigmaMap {
   public:
    SigmaMap(std::size_t a_dim, std::size_t x_size, std::vector<Permutation> sigmas);
    static SigmaMap trivial(std::size_t a_dim, std::size_t x_size);

    std::size_t a_dim() const noexcept {
      return a_dim_;
    }
    std::size_t x_size() const noexcept {
      return x_size_;
    }
    Permutation const& operator[](index_t a) const {
      return sigmas_[a];
    }

   private:
    std::size_t              a_dim_;
    std::size_t              x_size_;
    std::vector<Permutation> sigmas_;
  };

  //! S = X x A x G with |X| = x_size, A = C2^a_dim, G = C2^g_dim.
  struct Decomposition {
    std::size_t             x_size = 1;
    std::size_t             a_dim  = 0;
    std::size_t             g_dim  = 0;
    std::optional<SigmaMap> sigma;

    std::size_t carrier_size() const noexcept {
      return x_size << (a_dim + g_dim);
    }
  };

  //! s(x, y) = (xy, y).
  SolutionTable group_solution(GroupTable const& g);

  //! t(x, y) = (x, x xor y) on C2^r.
  SolutionTable irretractable_solution(std::size_t r);

  //! s((x,a),(y,b)) = ((x,a),(sigma_{a+b} sigma_b^-1 (y), a+b)); requires
  //! d.g_dim == 0. Index of (x, a) is x * 2^a_dim + a.
  SolutionTable ext_solution(Decomposition const& d);

  //! The general involutive solution on X x A x G:
  //! s((x,a,g),(y,b,h)) = ((x,a,gh),(sigma_{a+b} sigma_b^-1 (y), a+b, h)).
  SolutionTable decomposition_solution(Decomposition const& d);

  //! (X, id) x (A, t_A) x (G, s_G), the canonical representative of the
  //! isomorphism class (x_size, a_dim, g_dim).
  SolutionTable canonical_solution(std::size_t x_size, std::size_t a_dim, std::size_t g_dim);

  //! s(x, y) = (xy, f(y)) for a semigroup M and an idempotent endomorphism f.
  SolutionTable endo_solution(MultTable const& m, std::span<index_t const> f);

  //! s(x, y) = (f(x), g(y)) for commuting idempotent maps f, g.
  SolutionTable idempotent_pair_solution(std::size_t              n,
                                         std::span<index_t const> f,
                                         std::span<index_t const> g);

  //! First label i (1-based) where sigma^(sigma(i)+1) != sigma^i.
  std::optional<index_t> sigma_condition_witness(Permutation const& sigma);

  //! s((i,a),(j,b)) = ((i,ab),(sigma^i(j),b)) with i read as a 1-based label.
  //! Index of (i, a) is i * |G| + a.
  SolutionTable cycle_solution(Permutation const& sigma, GroupTable const& g);

  //! All sigma in Sym(n) satisfying the sigma-condition, in lexicographic
  //! order of image sequences.
  std::vector<Permutation> sigma_search(std::size_t n);

}  // namespace pentagon

#endif  // PENTAGON_CONSTRUCTORS_HPP_
