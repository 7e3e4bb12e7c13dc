// Finite groups given by Cayley tables, and the bitmask groups C2^r.

#ifndef PENTAGON_GROUP_HPP_
#define PENTAGON_GROUP_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "pentagon/core.hpp"

namespace pentagon {

  //! Thrown when a Cayley table violates a group axiom. The message names the
  //! violated axiom ("associativity", "identity" or "inverse").
  class GroupAxiomError : public std::invalid_argument {
   public:
    GroupAxiomError(std::string axiom, std::string const& detail)
        : std::invalid_argument(axiom + ": " + detail), axiom_(std::move(axiom)) {}

    std::string const& axiom() const noexcept {
      return axiom_;
    }

   private:
    std::string axiom_;
  };

  class GroupTable {
   public:
    GroupTable() = default;
    //! Validates the table and locates the identity; throws GroupAxiomError.
    GroupTable(std::size_t n, std::vector<index_t> cayley);

    static GroupTable trivial();
    static GroupTable cyclic(std::size_t n);
    //! Symmetric group on k points, elements in lexicographic order of their
    //! image sequences (index 0 is the identity).
    static GroupTable symmetric(std::size_t k);
    static GroupTable direct_product(GroupTable const& g, GroupTable const& h);
    //! Parses names such as "1", "C4", "C2xC2", "S3".
    static GroupTable from_name(std::string const& name);

    std::size_t size() const noexcept {
      return n_;
    }
    index_t operator()(index_t g, index_t h) const {
      return cayley_[g * n_ + h];
    }
    index_t identity() const noexcept {
      return identity_;
    }
    index_t     inverse(index_t g) const;
    std::size_t element_order(index_t g) const;
    //! lcm of the element orders.
    std::size_t exponent() const noexcept {
      return exponent_;
    }
    bool is_abelian() const;
    bool is_elementary_abelian_2() const;

    MultTable as_mult_table() const {
      return MultTable(n_, cayley_);
    }

    friend bool operator==(GroupTable const&, GroupTable const&) = default;

   private:
    std::size_t          n_ = 0;
    std::vector<index_t> cayley_;
    index_t              identity_ = 0;
    std::size_t          exponent_ = 1;
  };

  //! C2^r with elements the bitmasks 0 .. 2^r - 1 under exclusive-or.
  class Elementary2Group {
   public:
    explicit Elementary2Group(std::size_t dim);

    std::size_t dim() const noexcept {
      return dim_;
    }
    std::size_t size() const noexcept {
      return std::size_t(1) << dim_;
    }
    static constexpr index_t add(index_t a, index_t b) noexcept {
      return a ^ b;
    }
    GroupTable table() const;

   private:
    std::size_t dim_;
  };

}  // namespace pentagon

#endif  // PENTAGON_GROUP_HPP_
