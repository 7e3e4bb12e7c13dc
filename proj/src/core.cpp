#include "pentagon/core.hpp"

#include <algorithm>
#include <numeric>

namespace pentagon {

  namespace {
    void check_range(std::span<index_t const> xs, std::size_t n, char const* what) {
      for (auto x : xs) {
        if (x >= n) {
          throw InvalidTable(std::string(what) + ": index " + std::to_string(x)
                             + " out of range for size " + std::to_string(n));
        }
      }
    }

    // The three composites on S^3 are evaluated by the same small helpers so
    // every predicate reads like its defining identity.
    struct Composer {
      SolutionTable const& s;

      Triple s12(Triple t) const {
        auto [a, b] = s(t.x, t.y);
        return {a, b, t.z};
      }
      Triple s23(Triple t) const {
        auto [b, c] = s(t.y, t.z);
        return {t.x, b, c};
      }
      Triple s13(Triple t) const {
        auto [a, c] = s(t.x, t.z);
        return {a, t.y, c};
      }
    };

    template <typename Pred>
    std::optional<Triple> first_failing_triple(std::size_t n, Pred&& holds) {
      for (index_t x = 0; x < n; ++x) {
        for (index_t y = 0; y < n; ++y) {
          for (index_t z = 0; z < n; ++z) {
            if (!holds(Triple{x, y, z})) {
              return Triple{x, y, z};
            }
          }
        }
      }
      return std::nullopt;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Permutation
  ////////////////////////////////////////////////////////////////////////

  Permutation::Permutation(std::vector<index_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (auto x : images_) {
      if (x >= images_.size() || seen[x]) {
        throw InvalidTable("permutation: image sequence is not a bijection");
      }
      seen[x] = true;
    }
  }

  Permutation Permutation::identity(std::size_t n) {
    std::vector<index_t> images(n);
    std::iota(images.begin(), images.end(), index_t(0));
    return Permutation(std::move(images));
  }

  Permutation Permutation::from_cycles(std::size_t                               n,
                                       std::vector<std::vector<index_t>> const& cycles) {
    std::vector<index_t> images(n);
    std::iota(images.begin(), images.end(), index_t(0));
    std::vector<bool> used(n, false);
    for (auto const& cycle : cycles) {
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        index_t from = cycle[k];
        index_t to   = cycle[(k + 1) % cycle.size()];
        if (from == 0 || from > n || to == 0 || to > n) {
          throw InvalidTable("permutation: cycle label out of range 1.."
                             + std::to_string(n));
        }
        if (used[from - 1]) {
          throw InvalidTable("permutation: cycles are not disjoint");
        }
        used[from - 1]     = true;
        images[from - 1]   = to - 1;
      }
    }
    return Permutation(std::move(images));
  }

  Permutation Permutation::inverse() const {
    std::vector<index_t> inv(images_.size());
    for (index_t i = 0; i < images_.size(); ++i) {
      inv[images_[i]] = i;
    }
    Permutation p;
    p.images_ = std::move(inv);
    return p;
  }

  Permutation Permutation::operator*(Permutation const& other) const {
    if (other.size() != size()) {
      throw InvalidTable("permutation: composing permutations of different degree");
    }
    Permutation p;
    p.images_.resize(size());
    for (index_t i = 0; i < size(); ++i) {
      p.images_[i] = images_[other.images_[i]];
    }
    return p;
  }

  Permutation Permutation::power(std::size_t k) const {
    auto result = identity(size());
    for (std::size_t i = 0; i < k; ++i) {
      result = *this * result;
    }
    return result;
  }

  std::size_t Permutation::order() const {
    std::size_t       result = 1;
    std::vector<bool> seen(size(), false);
    for (index_t i = 0; i < size(); ++i) {
      if (seen[i]) {
        continue;
      }
      std::size_t len = 0;
      for (index_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        ++len;
      }
      result = std::lcm(result, len);
    }
    return result;
  }

  bool Permutation::is_identity() const noexcept {
    for (index_t i = 0; i < size(); ++i) {
      if (images_[i] != i) {
        return false;
      }
    }
    return true;
  }

  std::string Permutation::to_cycle_string() const {
    std::string       out;
    std::vector<bool> seen(size(), false);
    for (index_t i = 0; i < size(); ++i) {
      if (seen[i] || images_[i] == i) {
        continue;
      }
      out += '(';
      for (index_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        if (j != i) {
          out += ' ';
        }
        out += std::to_string(j + 1);
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Tables
  ////////////////////////////////////////////////////////////////////////

  SolutionTable::SolutionTable(std::size_t n, std::vector<Pair> entries)
      : n_(n), entries_(std::move(entries)) {
    if (n_ == 0) {
      throw InvalidTable("solution table: the carrier must be non-empty");
    }
    if (entries_.size() != n_ * n_) {
      throw InvalidTable("solution table: expected " + std::to_string(n_ * n_)
                         + " entries, got " + std::to_string(entries_.size()));
    }
    for (auto const& p : entries_) {
      if (p.first >= n_ || p.second >= n_) {
        throw InvalidTable("solution table: output index out of range");
      }
    }
  }

  SolutionTable SolutionTable::identity(std::size_t n) {
    return from_function(n, [](index_t x, index_t y) { return Pair{x, y}; });
  }

  Pair SolutionTable::at(index_t x, index_t y) const {
    if (x >= n_ || y >= n_) {
      throw std::out_of_range("solution table: input index out of range");
    }
    return (*this)(x, y);
  }

  std::strong_ordering operator<=>(SolutionTable const& a, SolutionTable const& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) {
      return c;
    }
    return std::lexicographical_compare_three_way(
        a.entries_.begin(), a.entries_.end(), b.entries_.begin(), b.entries_.end());
  }

  MultTable::MultTable(std::size_t n, std::vector<index_t> table)
      : n_(n), table_(std::move(table)) {
    if (table_.size() != n_ * n_) {
      throw InvalidTable("multiplication table: wrong number of entries");
    }
    check_range(table_, n_, "multiplication table");
  }

  ThetaFamily::ThetaFamily(std::size_t n, std::vector<index_t> table)
      : n_(n), table_(std::move(table)) {
    if (table_.size() != n_ * n_) {
      throw InvalidTable("theta family: wrong number of entries");
    }
    check_range(table_, n_, "theta family");
  }

  bool ThetaFamily::is_bijective(index_t x) const {
    std::vector<bool> hit(n_, false);
    for (auto y : map(x)) {
      if (hit[y]) {
        return false;
      }
      hit[y] = true;
    }
    return true;
  }

  bool ThetaFamily::is_identity(index_t x) const {
    auto m = map(x);
    for (index_t y = 0; y < n_; ++y) {
      if (m[y] != y) {
        return false;
      }
    }
    return true;
  }

  bool ThetaFamily::same_map(index_t x, index_t y) const {
    auto a = map(x);
    auto b = map(y);
    return std::equal(a.begin(), a.end(), b.begin());
  }

  DerivedTables derive_tables(SolutionTable const& s) {
    auto const           n = s.size();
    std::vector<index_t> mul(n * n), theta(n * n);
    for (std::size_t p = 0; p < n * n; ++p) {
      mul[p]   = s.entries()[p].first;
      theta[p] = s.entries()[p].second;
    }
    return {MultTable(n, std::move(mul)), ThetaFamily(n, std::move(theta))};
  }

  ////////////////////////////////////////////////////////////////////////
  // Predicates
  ////////////////////////////////////////////////////////////////////////

  std::optional<Triple> pentagon_witness(SolutionTable const& s) {
    Composer c{s};
    return first_failing_triple(
        s.size(), [&](Triple t) { return c.s23(c.s13(c.s12(t))) == c.s12(c.s23(t)); });
  }

  bool check_pentagon(SolutionTable const& s) {
    return !pentagon_witness(s).has_value();
  }

  bool pentagon_by_identities(DerivedTables const& t) {
    auto const& mul   = t.mul;
    auto const& theta = t.theta;
    return !first_failing_triple(mul.size(), [&](Triple u) {
      auto [x, y, z] = u;
      return mul(mul(x, y), z) == mul(x, mul(y, z))
             && mul(theta(x, y), theta(mul(x, y), z)) == theta(x, mul(y, z))
             && theta(theta(x, y), theta(mul(x, y), z)) == theta(y, z);
    });
  }

  std::optional<Triple> reversed_pentagon_witness(SolutionTable const& s) {
    Composer c{s};
    return first_failing_triple(
        s.size(), [&](Triple t) { return c.s12(c.s13(c.s23(t))) == c.s23(c.s12(t)); });
  }

  bool check_reversed_pentagon(SolutionTable const& s) {
    return !reversed_pentagon_witness(s).has_value();
  }

  bool check_involutive(SolutionTable const& s) {
    for (index_t x = 0; x < s.size(); ++x) {
      for (index_t y = 0; y < s.size(); ++y) {
        auto [a, b] = s(x, y);
        if (s(a, b) != Pair{x, y}) {
          return false;
        }
      }
    }
    return true;
  }

  bool check_bijective(SolutionTable const& s) {
    std::vector<bool> hit(s.size() * s.size(), false);
    for (auto const& p : s.entries()) {
      auto q = s.point(p);
      if (hit[q]) {
        return false;
      }
      hit[q] = true;
    }
    return true;
  }

  std::optional<std::size_t> order_of(SolutionTable const& s, std::size_t cap) {
    if (!check_bijective(s)) {
      return std::nullopt;
    }
    auto const               points = s.size() * s.size();
    std::vector<std::size_t> step(points), cur(points);
    for (std::size_t p = 0; p < points; ++p) {
      step[p] = s.point(s.entries()[p]);
      cur[p]  = step[p];
    }
    for (std::size_t m = 1; m <= cap; ++m) {
      bool is_id = true;
      for (std::size_t p = 0; p < points && is_id; ++p) {
        is_id = cur[p] == p;
      }
      if (is_id) {
        return m;
      }
      for (auto& q : cur) {
        q = step[q];
      }
    }
    return std::nullopt;
  }

  bool check_commutative(SolutionTable const& s) {
    Composer c{s};
    return !first_failing_triple(
        s.size(), [&](Triple t) { return c.s12(c.s13(t)) == c.s13(c.s12(t)); });
  }

  bool check_cocommutative(SolutionTable const& s) {
    Composer c{s};
    return !first_failing_triple(
        s.size(), [&](Triple t) { return c.s13(c.s23(t)) == c.s23(c.s13(t)); });
  }

  bool commutative_by_identities(DerivedTables const& t) {
    auto const& mul   = t.mul;
    auto const& theta = t.theta;
    return !first_failing_triple(mul.size(), [&](Triple u) {
      auto [x, y, z] = u;
      return mul(mul(x, y), z) == mul(mul(x, z), y) && theta(x, z) == theta(mul(x, y), z);
    });
  }

  bool cocommutative_by_identities(DerivedTables const& t) {
    auto const& mul   = t.mul;
    auto const& theta = t.theta;
    return !first_failing_triple(mul.size(), [&](Triple u) {
      auto [x, y, z] = u;
      return mul(x, theta(y, z)) == mul(x, z)
             && theta(x, theta(y, z)) == theta(y, theta(x, z));
    });
  }

  bool is_morphism(std::span<index_t const> f,
                   SolutionTable const&     s,
                   SolutionTable const&     s_prime) {
    if (f.size() != s.size()) {
      return false;
    }
    for (auto v : f) {
      if (v >= s_prime.size()) {
        return false;
      }
    }
    for (index_t x = 0; x < s.size(); ++x) {
      for (index_t y = 0; y < s.size(); ++y) {
        auto [a, b] = s(x, y);
        if (s_prime(f[x], f[y]) != Pair{f[a], f[b]}) {
          return false;
        }
      }
    }
    return true;
  }

  SolutionTable product_solution(SolutionTable const& s1, SolutionTable const& s2) {
    auto const n2 = static_cast<index_t>(s2.size());
    return SolutionTable::from_function(s1.size() * s2.size(), [&](index_t x, index_t y) {
      auto [a1, b1] = s1(x / n2, y / n2);
      auto [a2, b2] = s2(x % n2, y % n2);
      return Pair{a1 * n2 + a2, b1 * n2 + b2};
    });
  }

  SolutionTable flip_conjugate(SolutionTable const& s) {
    return SolutionTable::from_function(s.size(), [&](index_t x, index_t y) {
      auto [a, b] = s(y, x);
      return Pair{b, a};
    });
  }

  SolutionTable relabel(SolutionTable const& s, Permutation const& f) {
    if (f.size() != s.size()) {
      throw InvalidTable("relabel: permutation degree differs from table size");
    }
    auto const        n = s.size();
    std::vector<Pair> entries(n * n);
    for (index_t x = 0; x < n; ++x) {
      for (index_t y = 0; y < n; ++y) {
        auto [a, b]                  = s(x, y);
        entries[f(x) * n + f(y)] = Pair{f(a), f(b)};
      }
    }
    return SolutionTable(n, std::move(entries));
  }

  std::optional<Triple> associativity_witness(MultTable const& m) {
    return first_failing_triple(m.size(), [&](Triple t) {
      return m(m(t.x, t.y), t.z) == m(t.x, m(t.y, t.z));
    });
  }

  bool is_associative(MultTable const& m) {
    return !associativity_witness(m).has_value();
  }

}  // namespace pentagon
