#include <random>
#include <set>

#include "doctest.h"
#include "pentagon/analysis.hpp"
#include "pentagon/constructors.hpp"
#include "support/oracles.hpp"

using namespace pentagon;

namespace {
  Permutation cycles(std::size_t n, std::vector<std::vector<index_t>> const& c) {
    return Permutation::from_cycles(n, c);
  }

  // sigma^k on a plain image vector, k-fold.
  std::vector<index_t> power(std::vector<index_t> const& p, std::size_t k) {
    std::vector<index_t> r(p.size());
    std::iota(r.begin(), r.end(), index_t(0));
    for (std::size_t t = 0; t < k; ++t) {
      for (auto& v : r) {
        v = p[v];
      }
    }
    return r;
  }

  // The sigma-condition straight from its statement, labels 1..n.
  bool satisfies_condition(std::vector<index_t> const& p) {
    for (std::size_t i = 1; i <= p.size(); ++i) {
      std::size_t label = p[i - 1] + 1;
      if (power(p, label + 1) != power(p, i)) {
        return false;
      }
    }
    return true;
  }

  // The cycle-solution formula without validation, for non-members of the search.
  SolutionTable cycle_formula(std::vector<index_t> const& p, GroupTable const& g) {
    auto const G = static_cast<index_t>(g.size());
    return SolutionTable::from_function(p.size() * G, [&](index_t u, index_t v) {
      index_t i = u / G, a = u % G, j = v / G, b = v % G;
      return Pair{i * G + g(a, b), power(p, i + 1)[j] * G + b};
    });
  }

  std::vector<GroupTable> groups_up_to(std::size_t max_size) {
    std::vector<GroupTable> out;
    for (std::size_t n = 1; n <= max_size; ++n) {
      out.push_back(GroupTable::cyclic(n));
    }
    for (char const* name : {"C2xC2", "C2xC4", "C2xC2xC2", "S3", "C2xC2xC4", "C4xC4", "C2xS3",
                             "C2xC2xC2xC2"}) {
      auto g = GroupTable::from_name(name);
      if (g.size() <= max_size) {
        out.push_back(g);
      }
    }
    return out;
  }
}  // namespace

TEST_SUITE("groups") {
  TEST_CASE("axioms are validated with the failing axiom named") {
    auto axiom_of = [](std::size_t n, std::vector<index_t> t) {
      try {
        GroupTable g(n, std::move(t));
      } catch (GroupAxiomError const& e) {
        return e.axiom();
      }
      return std::string("none");
    };
    CHECK(axiom_of(2, {0, 1, 1, 0}) == "none");
    CHECK(axiom_of(2, {0, 1, 1, 1}) == "inverse");
    CHECK(axiom_of(2, {1, 1, 1, 1}) == "identity");
    // A Latin square with identity 0 that is not associative.
    CHECK(axiom_of(5, {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1,
                       4, 3, 1, 2, 0}) == "associativity");
    CHECK_THROWS_AS(GroupTable(2, {0, 1, 1}), InvalidTable);
    CHECK_THROWS_AS(GroupTable::from_name("D4"), std::invalid_argument);
    CHECK_THROWS_AS(GroupTable::from_name("C2x"), std::invalid_argument);
  }

  TEST_CASE("named groups") {
    CHECK(GroupTable::from_name("1").size() == 1);
    CHECK(GroupTable::from_name("C4").exponent() == 4);
    CHECK(GroupTable::from_name("C2xC4").exponent() == 4);
    CHECK(GroupTable::from_name("C2xC2").is_elementary_abelian_2());
    CHECK_FALSE(GroupTable::from_name("C4").is_elementary_abelian_2());
    auto s3 = GroupTable::symmetric(3);
    CHECK(s3.size() == 6);
    CHECK(s3.identity() == 0);
    CHECK(s3.exponent() == 6);
    CHECK_FALSE(s3.is_abelian());
    for (index_t g = 0; g < s3.size(); ++g) {
      CHECK(s3(g, s3.inverse(g)) == s3.identity());
    }
  }

  TEST_CASE("bitmask groups") {
    for (std::size_t d = 0; d <= 4; ++d) {
      Elementary2Group e(d);
      auto             t = e.table();
      CHECK(t.size() == e.size());
      CHECK(t.is_elementary_abelian_2());
      CHECK(t.is_abelian());
      CHECK(t.identity() == 0);
      CHECK(Elementary2Group::add(5, 3) == 6);
    }
  }
}

TEST_SUITE("constructors") {
  TEST_CASE("group_solution examples") {
    auto c2 = group_solution(GroupTable::cyclic(2));
    CHECK(c2(1, 1) == Pair{0, 1});
    CHECK(group_solution(GroupTable::trivial()) == SolutionTable::identity(1));
    auto c4 = group_solution(GroupTable::cyclic(4));
    CHECK(check_pentagon(c4));
    CHECK_FALSE(check_involutive(c4));
    CHECK(order_of(c4, 100) == 4u);
  }

  TEST_CASE("irretractable_solution examples") {
    CHECK(irretractable_solution(0) == SolutionTable::identity(1));
    auto t = irretractable_solution(1);
    CHECK(t(1, 1) == Pair{1, 0});
    CHECK(t(1, 0) == Pair{1, 1});
    CHECK(t(0, 0) == Pair{0, 0});
    CHECK(t(0, 1) == Pair{0, 1});
    CHECK(classify(irretractable_solution(2)) == ClassificationTriple{1, 2, 0});
  }

  TEST_CASE("ext_solution examples") {
    CHECK(ext_solution(Decomposition{1, 1, 0, std::nullopt}) == irretractable_solution(1));
    auto sigma = SigmaMap(1, 2, {Permutation::identity(2), Permutation({1, 0})});
    auto s     = ext_solution(Decomposition{2, 1, 0, sigma});
    CHECK(check_pentagon(s));
    CHECK(check_involutive(s));
    CHECK(retract(s).quotient.size() == 2);
    auto trivial = ext_solution(Decomposition{2, 1, 0, std::nullopt});
    CHECK(find_isomorphism(s, trivial));
    CHECK(oracle::isomorphic(s, trivial));
    CHECK_THROWS_AS(ext_solution(Decomposition{2, 1, 1, std::nullopt}), ConstructionError);
  }

  TEST_CASE("canonical_solution examples") {
    CHECK(canonical_solution(12, 0, 0) == SolutionTable::identity(12));
    CHECK(canonical_solution(1, 0, 0) == SolutionTable::identity(1));
    // ((x,a,g),(y,b,h)) -> ((x,a,g h),(y,a+b,h)), index (x*2 + a)*2 + g.
    auto expected = SolutionTable::from_function(12, [](index_t u, index_t v) {
      index_t x = u / 4, a = (u / 2) % 2, g = u % 2;
      index_t y = v / 4, b = (v / 2) % 2, h = v % 2;
      return Pair{(x * 2 + a) * 2 + (g ^ h), (y * 2 + (a ^ b)) * 2 + h};
    });
    CHECK(canonical_solution(3, 1, 1) == expected);
    CHECK_THROWS_AS(canonical_solution(0, 1, 0), ConstructionError);
  }

  TEST_CASE("decomposition_solution with a twist") {
    auto sigma = SigmaMap(1, 3, {Permutation({1, 2, 0}), Permutation({0, 2, 1})});
    Decomposition d{3, 1, 1, sigma};
    auto          s = decomposition_solution(d);
    CHECK(s.size() == 12);
    CHECK(check_pentagon(s));
    CHECK(check_involutive(s));
    CHECK(classify(s) == ClassificationTriple{3, 1, 1});
    CHECK(find_isomorphism(s, canonical_solution(3, 1, 1), 12));
    CHECK_THROWS_AS(SigmaMap(1, 3, {Permutation::identity(3)}), ConstructionError);
    CHECK_THROWS_AS(SigmaMap(1, 3, {Permutation::identity(3), Permutation::identity(2)}),
                    ConstructionError);
    CHECK_THROWS_AS(decomposition_solution(Decomposition{2, 1, 0, sigma}), ConstructionError);
    CHECK_THROWS_AS(decomposition_solution(Decomposition{0, 0, 0, std::nullopt}),
                    ConstructionError);
  }

  TEST_CASE("endo_solution examples") {
    auto c2 = GroupTable::cyclic(2).as_mult_table();
    auto e  = endo_solution(c2, std::vector<index_t>{0, 0});
    for (index_t x = 0; x < 2; ++x) {
      for (index_t y = 0; y < 2; ++y) {
        CHECK(e(x, y) == Pair{x ^ y, 0});
      }
    }
    CHECK(check_pentagon(e));
    CHECK(endo_solution(c2, std::vector<index_t>{0, 1}) == group_solution(GroupTable::cyclic(2)));
    MultTable left_zero(2, {0, 0, 1, 1});
    CHECK(endo_solution(left_zero, std::vector<index_t>{0, 1}) == SolutionTable::identity(2));
    CHECK_THROWS_AS(endo_solution(c2, std::vector<index_t>{1, 0}), ConstructionError);
    CHECK_THROWS_AS(endo_solution(MultTable(3, {1, 1, 1, 2, 2, 2, 0, 0, 0}),
                                  std::vector<index_t>{0, 1, 2}),
                    ConstructionError);
  }

  TEST_CASE("idempotent_pair_solution examples") {
    std::vector<index_t> id3{0, 1, 2}, id2{0, 1}, zero{0, 0}, one{1, 1};
    CHECK(idempotent_pair_solution(3, id3, id3) == SolutionTable::identity(3));
    auto a = idempotent_pair_solution(2, zero, id2);
    CHECK(a(1, 1) == Pair{0, 1});
    CHECK(check_pentagon(a));
    CHECK(check_reversed_pentagon(a));
    auto b = idempotent_pair_solution(2, id2, one);
    CHECK(check_pentagon(b));
    CHECK(check_reversed_pentagon(b));
    CHECK(oracle::pentagon(b));
    CHECK_THROWS_AS(idempotent_pair_solution(2, std::vector<index_t>{1, 0}, id2), ConstructionError);
    CHECK_THROWS_AS(idempotent_pair_solution(2, zero, one), ConstructionError);
  }

  TEST_CASE("cycle_solution examples") {
    auto s = cycle_solution(cycles(4, {{1, 4, 3, 2}}), GroupTable::cyclic(2));
    CHECK(check_pentagon(s));
    CHECK(order_of(s, 100) == 4u);
    CHECK(cycle_solution(Permutation::identity(1), GroupTable::trivial())
          == SolutionTable::identity(1));
    auto t = cycle_solution(cycles(4, {{1, 2}, {3, 4}}), GroupTable::trivial());
    CHECK(check_pentagon(t));
    CHECK(check_involutive(t));
    CHECK(check_reversed_pentagon(t));
    CHECK(sigma_condition_witness(cycles(3, {{1, 2, 3}})) == index_t(1));
    CHECK_THROWS_AS(cycle_solution(cycles(3, {{1, 2, 3}}), GroupTable::trivial()),
                    ConstructionError);
  }

  TEST_CASE("sigma_search examples") {
    auto four = sigma_search(4);
    std::vector<Permutation> expected{Permutation::identity(4), cycles(4, {{1, 2}, {3, 4}}),
                                      cycles(4, {{1, 4}, {2, 3}}), cycles(4, {{1, 4, 3, 2}})};
    std::sort(expected.begin(), expected.end());
    CHECK(four == expected);
    CHECK(sigma_search(1) == std::vector<Permutation>{Permutation::identity(1)});
    CHECK(sigma_search(2) == std::vector<Permutation>{Permutation::identity(2), cycles(2, {{1, 2}})});
    CHECK_THROWS_AS(sigma_search(0), ConstructionError);
  }
}

TEST_SUITE("constructor properties") {
  TEST_CASE("sigma_search agrees with the condition read literally") {
    for (std::size_t n = 1; n <= 6; ++n) {
      std::vector<Permutation> brute;
      for (auto const& p : oracle::all_permutations(n)) {
        if (satisfies_condition(p)) {
          brute.emplace_back(p);
        }
      }
      CHECK(sigma_search(n) == brute);
    }
  }

  TEST_CASE("construct then verify for every carrier up to 16") {
    for (auto const& s : oracle::constructed_panel()) {
      CHECK(s.size() <= 16);
      CHECK(check_pentagon(s));
      CHECK(check_involutive(s));
    }
    for (std::size_t r = 0; r <= 4; ++r) {
      auto t = irretractable_solution(r);
      CHECK(check_pentagon(t));
      CHECK(check_involutive(t));
    }
    for (auto const& g : groups_up_to(16)) {
      auto s = group_solution(g);
      CHECK(check_pentagon(s));
      CHECK(check_involutive(s) == g.is_elementary_abelian_2());
    }
  }

  TEST_CASE("the order of s_G is the exponent of G") {
    for (auto const& g : groups_up_to(8)) {
      auto s = group_solution(g);
      CHECK(order_of(s, 100) == g.exponent());
      CHECK(oracle::order(s, 100) == g.exponent());
    }
  }

  TEST_CASE("ext with trivial sigma is (X, id) x (A, t_A)") {
    for (std::size_t x = 1; x <= 4; ++x) {
      for (std::size_t a = 0; (x << a) <= 16; ++a) {
        CHECK(ext_solution(Decomposition{x, a, 0, std::nullopt})
              == product_solution(SolutionTable::identity(x), irretractable_solution(a)));
      }
    }
  }

  // The literal composites give RPE exactly when s is involutive, i.e. sigma
  // squares to one and G has exponent at most two. With G = C2 this is wider
  // than "G trivial": (E, id) x s_C2 is involutive, hence an RPE solution.
  TEST_CASE("cycle solutions satisfy the RPE iff they are involutive") {
    for (std::size_t n = 1; n <= 5; ++n) {
      for (auto const& p : sigma_search(n)) {
        for (char const* name : {"1", "C2", "C3", "C4", "C2xC2", "S3"}) {
          auto g = GroupTable::from_name(name);
          auto s = cycle_solution(p, g);
          CHECK(check_pentagon(s));
          bool rpe = check_reversed_pentagon(s);
          CHECK(rpe == oracle::reversed_pentagon(s));
          CHECK(rpe == (g.exponent() <= 2 && p.power(2).is_identity()));
          CHECK(rpe == check_involutive(s));
        }
      }
    }
    auto s = cycle_solution(Permutation::identity(1), GroupTable::cyclic(2));
    CHECK(s == group_solution(GroupTable::cyclic(2)));
    CHECK(check_reversed_pentagon(s));
  }

  TEST_CASE("permutations outside the search fail the PE") {
    std::mt19937_64 rng(5);
    for (std::size_t n = 3; n <= 5; ++n) {
      auto                  found = sigma_search(n);
      std::set<Permutation> members(found.begin(), found.end());
      auto                  all = oracle::all_permutations(n);
      std::shuffle(all.begin(), all.end(), rng);
      int tested = 0;
      for (auto const& p : all) {
        if (members.count(Permutation(p)) || tested == 12) {
          continue;
        }
        ++tested;
        CHECK_FALSE(check_pentagon(cycle_formula(p, GroupTable::trivial())));
      }
      CHECK(tested > 0);
    }
  }
}
