#include "pentagon/analysis.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <stdexcept>
#include <string>

namespace pentagon {

  namespace {
    bool is_power_of_two(std::size_t v) {
      return v != 0 && std::has_single_bit(v);
    }

    std::size_t log2_exact(std::size_t v, char const* what) {
      if (!is_power_of_two(v)) {
        throw std::logic_error(std::string("classify: ") + what + " = " + std::to_string(v)
                               + " is not a power of two");
      }
      return static_cast<std::size_t>(std::countr_zero(v));
    }

    // Isomorphism invariants of a single element, used to prune the search.
    using Signature = std::array<std::size_t, 7>;

    std::vector<Signature> signatures(SolutionTable const& s) {
      auto const             t = derive_tables(s);
      auto const             n = s.size();
      std::vector<Signature> sig(n);
      for (index_t x = 0; x < n; ++x) {
        std::vector<bool> image(n, false);
        Signature         v{};
        v[0] = t.mul(x, x) == x;
        for (index_t y = 0; y < n; ++y) {
          v[1] += t.theta(x, y) == y;
          image[t.theta(x, y)] = true;
          v[3] += t.mul(x, y) == x;
          v[4] += t.mul(y, x) == y;
          v[5] += t.theta.same_map(x, y);
          v[6] += t.mul(x, y) == y;
        }
        v[2] = static_cast<std::size_t>(std::count(image.begin(), image.end(), true));
        sig[x] = v;
      }
      return sig;
    }

    constexpr index_t unassigned = static_cast<index_t>(-1);

    class IsomorphismSearch {
     public:
      IsomorphismSearch(SolutionTable const& s, SolutionTable const& t)
          : s_(s),
            t_(t),
            n_(s.size()),
            sig_s_(signatures(s)),
            sig_t_(signatures(t)),
            f_(n_, unassigned),
            used_(n_, false) {}

      std::optional<Bijection> run() {
        auto a = sig_s_, b = sig_t_;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) {
          return std::nullopt;
        }
        if (!search()) {
          return std::nullopt;
        }
        return Bijection(f_);
      }

     private:
      bool assign(index_t x, index_t y) {
        if (used_[y] || sig_s_[x] != sig_t_[y]) {
          return false;
        }
        f_[x]    = y;
        used_[y] = true;
        trail_.push_back(x);
        return true;
      }

      void undo(std::size_t mark) {
        while (trail_.size() > mark) {
          auto x         = trail_.back();
          used_[f_[x]]   = false;
          f_[x]          = unassigned;
          trail_.pop_back();
        }
      }

      // (f x f) s(x, y) must equal t(f x, f y); forces images of s(x, y).
      bool force(index_t x, index_t y) {
        auto [k, l]   = s_(x, y);
        auto [k2, l2] = t_(f_[x], f_[y]);
        for (auto [u, v] : {Pair{k, k2}, Pair{l, l2}}) {
          if (f_[u] == unassigned) {
            if (!assign(u, v)) {
              return false;
            }
          } else if (f_[u] != v) {
            return false;
          }
        }
        return true;
      }

      bool propagate(std::size_t from) {
        for (std::size_t i = from; i < trail_.size(); ++i) {
          auto x = trail_[i];
          for (std::size_t j = 0; j <= i; ++j) {
            auto y = trail_[j];
            if (!force(x, y) || !force(y, x)) {
              return false;
            }
          }
        }
        return true;
      }

      bool search() {
        auto it = std::find(f_.begin(), f_.end(), unassigned);
        if (it == f_.end()) {
          return true;
        }
        auto x = static_cast<index_t>(it - f_.begin());
        for (index_t y = 0; y < n_; ++y) {
          auto mark = trail_.size();
          if (assign(x, y) && propagate(mark) && search()) {
            return true;
          }
          undo(mark);
        }
        return false;
      }

      SolutionTable const&   s_;
      SolutionTable const&   t_;
      std::size_t            n_;
      std::vector<Signature> sig_s_;
      std::vector<Signature> sig_t_;
      std::vector<index_t>   f_;
      std::vector<bool>      used_;
      std::vector<index_t>   trail_;
    };
  }  // namespace

  void require_involutive_solution(SolutionTable const& s) {
    if (!check_involutive(s)) {
      throw PreconditionError("expected an involutive solution: s o s is not the identity");
    }
    if (auto w = pentagon_witness(s)) {
      throw PreconditionError("expected an involutive solution: the pentagon equation fails at ("
                              + std::to_string(w->x) + ", " + std::to_string(w->y) + ", "
                              + std::to_string(w->z) + ")");
    }
  }

  RetractResult retract(SolutionTable const& s) {
    require_involutive_solution(s);
    auto const n     = s.size();
    auto const theta = derive_tables(s).theta;

    std::map<std::vector<index_t>, index_t> ids;
    std::vector<index_t>                    class_of(n), representative;
    std::vector<std::size_t>                class_sizes;
    for (index_t x = 0; x < n; ++x) {
      auto m            = theta.map(x);
      auto [it, is_new] = ids.try_emplace(std::vector<index_t>(m.begin(), m.end()),
                                          static_cast<index_t>(representative.size()));
      if (is_new) {
        representative.push_back(x);
        class_sizes.push_back(0);
      }
      class_of[x] = it->second;
      ++class_sizes[it->second];
    }
    auto quotient = SolutionTable::from_function(representative.size(), [&](index_t a, index_t b) {
      return Pair{a, class_of[theta(representative[a], representative[b])]};
    });
    return {std::move(quotient), std::move(class_of), std::move(class_sizes)};
  }

  bool is_irretractable(SolutionTable const& s) {
    return retract(s).quotient.size() == s.size();
  }

  std::vector<std::size_t> retract_tower(SolutionTable const& s) {
    std::vector<std::size_t> sizes{s.size()};
    SolutionTable            current = s;
    // Each proper step strictly shrinks the carrier, so this terminates.
    while (true) {
      auto next = retract(current).quotient;
      sizes.push_back(next.size());
      if (next.size() == current.size()) {
        return sizes;
      }
      current = std::move(next);
    }
  }

  GroupTable abelian_structure(SolutionTable const& s) {
    if (!is_irretractable(s)) {
      throw PreconditionError("abelian structure: the solution is not irretractable");
    }
    auto const           theta = derive_tables(s).theta;
    std::vector<index_t> plus(s.entries().size());
    for (std::size_t p = 0; p < plus.size(); ++p) {
      plus[p] = s.entries()[p].second;
    }
    std::optional<GroupTable> g;
    try {
      g.emplace(s.size(), std::move(plus));
    } catch (GroupAxiomError const& e) {
      throw std::logic_error(std::string("abelian structure: ") + e.what());
    }
    if (!g->is_elementary_abelian_2() || !theta.is_identity(g->identity())) {
      throw std::logic_error("abelian structure: not an elementary abelian 2-group");
    }
    return std::move(*g);
  }

  std::vector<index_t> idempotents(MultTable const& m) {
    std::vector<index_t> result;
    for (index_t x = 0; x < m.size(); ++x) {
      if (m(x, x) == x) {
        result.push_back(x);
      }
    }
    return result;
  }

  std::optional<LeftGroupDecomposition> left_group_decomposition(MultTable const& m) {
    if (!is_associative(m)) {
      throw PreconditionError("left group decomposition: multiplication is not associative");
    }
    auto const n  = m.size();
    auto       es = idempotents(m);
    if (es.empty()) {
      return std::nullopt;
    }
    auto const           e = es.front();
    std::vector<index_t> group_elements;
    for (index_t x = 0; x < n; ++x) {
      group_elements.push_back(m(m(e, x), e));
    }
    std::sort(group_elements.begin(), group_elements.end());
    group_elements.erase(std::unique(group_elements.begin(), group_elements.end()),
                         group_elements.end());
    if (es.size() * group_elements.size() != n) {
      return std::nullopt;
    }

    auto const           k        = group_elements.size();
    auto                 local_of = [&](index_t x) {
      return static_cast<index_t>(
          std::lower_bound(group_elements.begin(), group_elements.end(), x)
          - group_elements.begin());
    };
    std::vector<index_t> cayley(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        auto p = m(group_elements[i], group_elements[j]);
        if (!std::binary_search(group_elements.begin(), group_elements.end(), p)) {
          return std::nullopt;
        }
        cayley[i * k + j] = local_of(p);
      }
    }
    std::optional<GroupTable> group;
    try {
      group.emplace(k, std::move(cayley));
    } catch (GroupAxiomError const&) {
      return std::nullopt;
    }

    // (f, g) -> f g must be an isomorphism from (left zero E) x eSe onto S.
    std::vector<bool> hit(n, false);
    for (auto f : es) {
      for (auto g : group_elements) {
        auto p = m(f, g);
        if (hit[p]) {
          return std::nullopt;
        }
        hit[p] = true;
        for (auto f2 : es) {
          for (auto g2 : group_elements) {
            if (m(p, m(f2, g2)) != m(f, m(g, g2))) {
              return std::nullopt;
            }
          }
        }
      }
    }
    return LeftGroupDecomposition{std::move(es), std::move(*group), std::move(group_elements)};
  }

  bool check_simple(MultTable const& m) {
    if (!is_associative(m)) {
      throw PreconditionError("check simple: multiplication is not associative");
    }
    auto const n = m.size();
    for (index_t y = 0; y < n; ++y) {
      std::vector<bool> ideal(n, false);
      ideal[y] = true;
      for (index_t x = 0; x < n; ++x) {
        ideal[m(x, y)] = true;
        ideal[m(y, x)] = true;
        for (index_t z = 0; z < n; ++z) {
          ideal[m(m(x, y), z)] = true;
        }
      }
      if (std::find(ideal.begin(), ideal.end(), false) != ideal.end()) {
        return false;
      }
    }
    return true;
  }

  ClassificationTriple classify(SolutionTable const& s) {
    auto const n         = s.size();
    auto const ret_size  = retract(s).quotient.size();
    auto const idem      = idempotents(derive_tables(s).mul).size();
    auto const a_dim     = log2_exact(ret_size, "|Ret(S)|");
    if (idem == 0 || n % idem != 0) {
      throw std::logic_error("classify: |E(S)| does not divide |S|");
    }
    auto const g_dim = log2_exact(n / idem, "|S| / |E(S)|");
    if (idem % ret_size != 0) {
      throw std::logic_error("classify: |Ret(S)| does not divide |E(S)|");
    }
    return {idem / ret_size, a_dim, g_dim};
  }

  bool is_isomorphic_invariant(SolutionTable const& s, SolutionTable const& s_prime) {
    return s.size() == s_prime.size() && classify(s) == classify(s_prime);
  }

  std::optional<Bijection> find_isomorphism(SolutionTable const& s,
                                            SolutionTable const& s_prime,
                                            std::size_t          max_size) {
    if (s.size() != s_prime.size()) {
      throw PreconditionError("find isomorphism: carriers have different sizes");
    }
    if (s.size() > max_size) {
      throw PreconditionError("find isomorphism: size " + std::to_string(s.size())
                              + " exceeds the bound " + std::to_string(max_size));
    }
    auto f = IsomorphismSearch(s, s_prime).run();
    if (f && !is_morphism(f->images(), s, s_prime)) {
      throw std::logic_error("find isomorphism: search returned a non-morphism");
    }
    return f;
  }

}  // namespace pentagon
