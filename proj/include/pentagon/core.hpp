// Finite quadratic sets (S, s) and the axiom predicates used throughout the
// library. Elements of S are the dense indices 0, ..., n - 1; any labelling
// lives in the I/O layer.

#ifndef PENTAGON_CORE_HPP_
#define PENTAGON_CORE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pentagon {

  using index_t = std::uint32_t;

  //! An ordered pair of elements, used both as an input and an output of s.
  struct Pair {
    index_t first  = 0;
    index_t second = 0;

    friend constexpr auto operator<=>(Pair const&, Pair const&) = default;
  };

  struct Triple {
    index_t x = 0;
    index_t y = 0;
    index_t z = 0;

    friend constexpr auto operator<=>(Triple const&, Triple const&) = default;
  };

  //! Thrown when a table or map is malformed (wrong size, index out of range).
  class InvalidTable : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  ////////////////////////////////////////////////////////////////////////
  // Permutation
  ////////////////////////////////////////////////////////////////////////

  //! A bijection of {0, ..., n - 1} stored by its image sequence.
  class Permutation {
   public:
    Permutation() = default;
    explicit Permutation(std::vector<index_t> images);

    static Permutation identity(std::size_t n);
    //! Builds from disjoint cycles written with 1-based labels, e.g.
    //! {{1, 4, 3, 2}} for the 4-cycle 1 -> 4 -> 3 -> 2 -> 1.
    static Permutation from_cycles(std::size_t                               n,
                                   std::vector<std::vector<index_t>> const& cycles);

    std::size_t size() const noexcept {
      return images_.size();
    }
    index_t operator()(index_t i) const {
      return images_[i];
    }
    std::span<index_t const> images() const noexcept {
      return images_;
    }

    Permutation inverse() const;
    //! (*this * other)(i) = (*this)(other(i)).
    Permutation operator*(Permutation const& other) const;
    //! k-fold composition, computed literally (k multiplications).
    Permutation power(std::size_t k) const;
    std::size_t order() const;
    bool        is_identity() const noexcept;
    //! Cycle notation with 1-based labels, "()" for the identity.
    std::string to_cycle_string() const;

    friend auto operator<=>(Permutation const&, Permutation const&) = default;

   private:
    std::vector<index_t> images_;
  };

  using Bijection = Permutation;

  ////////////////////////////////////////////////////////////////////////
  // Tables
  ////////////////////////////////////////////////////////////////////////

  //! A total map s: S x S -> S x S, entries in lexicographic (i, j) order.
  class SolutionTable {
   public:
    SolutionTable() = default;
    SolutionTable(std::size_t n, std::vector<Pair> entries);

    static SolutionTable identity(std::size_t n);

    template <typename F>
    static SolutionTable from_function(std::size_t n, F&& f) {
      std::vector<Pair> entries;
      entries.reserve(n * n);
      for (index_t i = 0; i < n; ++i) {
        for (index_t j = 0; j < n; ++j) {
          entries.push_back(f(i, j));
        }
      }
      return SolutionTable(n, std::move(entries));
    }

    std::size_t size() const noexcept {
      return n_;
    }
    Pair operator()(index_t x, index_t y) const {
      return entries_[x * n_ + y];
    }
    Pair at(index_t x, index_t y) const;
    std::span<Pair const> entries() const noexcept {
      return entries_;
    }

    // Points of S x S are numbered i * n + j.
    std::size_t point(Pair p) const noexcept {
      return p.first * n_ + p.second;
    }
    Pair pair_of(std::size_t point) const noexcept {
      return {static_cast<index_t>(point / n_), static_cast<index_t>(point % n_)};
    }

    friend bool operator==(SolutionTable const&, SolutionTable const&) = default;
    //! Lexicographic on (size, entries).
    friend std::strong_ordering operator<=>(SolutionTable const& a,
                                            SolutionTable const& b);

   private:
    std::size_t       n_ = 0;
    std::vector<Pair> entries_;
  };

  //! The multiplication x . y read off the first output coordinate of s.
  class MultTable {
   public:
    MultTable() = default;
    MultTable(std::size_t n, std::vector<index_t> table);

    std::size_t size() const noexcept {
      return n_;
    }
    index_t operator()(index_t x, index_t y) const {
      return table_[x * n_ + y];
    }
    std::span<index_t const> table() const noexcept {
      return table_;
    }

    friend bool operator==(MultTable const&, MultTable const&) = default;

   private:
    std::size_t          n_ = 0;
    std::vector<index_t> table_;
  };

  //! The maps theta_x read off the second output coordinate of s.
  class ThetaFamily {
   public:
    ThetaFamily() = default;
    ThetaFamily(std::size_t n, std::vector<index_t> table);

    std::size_t size() const noexcept {
      return n_;
    }
    //! theta_x(y)
    index_t operator()(index_t x, index_t y) const {
      return table_[x * n_ + y];
    }
    std::span<index_t const> map(index_t x) const {
      return std::span<index_t const>(table_).subspan(x * n_, n_);
    }
    bool is_bijective(index_t x) const;
    bool is_identity(index_t x) const;
    bool same_map(index_t x, index_t y) const;

    friend bool operator==(ThetaFamily const&, ThetaFamily const&) = default;

   private:
    std::size_t          n_ = 0;
    std::vector<index_t> table_;
  };

  struct DerivedTables {
    MultTable   mul;
    ThetaFamily theta;
  };

  DerivedTables derive_tables(SolutionTable const& s);

  ////////////////////////////////////////////////////////////////////////
  // Axiom predicates; all total, never throw on well-formed tables.
  ////////////////////////////////////////////////////////////////////////

  //! First triple on which s23 s13 s12 and s12 s23 differ, if any.
  std::optional<Triple> pentagon_witness(SolutionTable const& s);
  bool                  check_pentagon(SolutionTable const& s);
  //! The same property through the three identities on (x . y, theta).
  bool pentagon_by_identities(DerivedTables const& t);

  std::optional<Triple> reversed_pentagon_witness(SolutionTable const& s);
  bool                  check_reversed_pentagon(SolutionTable const& s);

  bool check_involutive(SolutionTable const& s);
  bool check_bijective(SolutionTable const& s);
  //! Smallest m <= cap with s^m = id; empty if there is none.
  std::optional<std::size_t> order_of(SolutionTable const& s, std::size_t cap);

  //! s12 s13 = s13 s12
  bool check_commutative(SolutionTable const& s);
  //! s13 s23 = s23 s13
  bool check_cocommutative(SolutionTable const& s);
  bool commutative_by_identities(DerivedTables const& t);
  bool cocommutative_by_identities(DerivedTables const& t);

  //! (f x f) s = s' (f x f). Returns false if f is not a total map into S'.
  bool is_morphism(std::span<index_t const> f,
                   SolutionTable const&     s,
                   SolutionTable const&     s_prime);

  //! Carrier S1 x S2 with index i1 * |S2| + i2.
  SolutionTable product_solution(SolutionTable const& s1, SolutionTable const& s2);

  //! tau s tau, where tau is the flip (x, y) -> (y, x).
  SolutionTable flip_conjugate(SolutionTable const& s);

  //! The table of f . s . (f^-1 x f^-1), i.e. s transported along f.
  SolutionTable relabel(SolutionTable const& s, Permutation const& f);

  std::optional<Triple> associativity_witness(MultTable const& m);
  bool                  is_associative(MultTable const& m);

}  // namespace pentagon

#endif  // PENTAGON_CORE_HPP_
