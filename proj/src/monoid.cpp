#include "pentagon/monoid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "pentagon/analysis.hpp"

namespace pentagon {

  namespace {
    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::uint32_t(0));
      }
      std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) {
          parent_[x] = parent_[parent_[x]];
          x          = parent_[x];
        }
        return x;
      }
      void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
          // The smaller index stays the root.
          if (a < b) {
            parent_[b] = a;
          } else {
            parent_[a] = b;
          }
        }
      }

     private:
      std::vector<std::uint32_t> parent_;
    };

    // Classes of length l are numbered in order of their smallest cell
    // (class of the length l - 1 prefix, last letter). By induction on l this
    // is also the lexicographic order of their smallest words, and the
    // smallest word of a class is that of its first cell.
    struct Strata {
      std::vector<std::size_t> counts;
      // For normal forms: per length, the first cell (prefix class, letter)
      // of every class.
      std::vector<std::vector<std::uint32_t>> prefix;
      std::vector<std::vector<index_t>>       letter;
    };

    Strata run_strata(MonoidPresentation const& p,
                      std::size_t               max_length,
                      std::size_t               budget,
                      bool                      keep_cells) {
      auto const n = p.generators;
      Strata     st;
      st.counts.push_back(1);
      if (keep_cells) {
        st.prefix.emplace_back();
        st.letter.emplace_back();
      }
      // extend[q * n + z] = class of (word of class q) followed by z, for q
      // ranging over the classes two lengths back.
      std::vector<std::uint32_t> extend;
      std::size_t                prev2 = 0;
      for (std::size_t l = 1; l <= max_length; ++l) {
        auto const prev  = st.counts.back();
        auto const cells = prev * n;
        if (n != 0 && cells / n != prev) {
          throw BudgetExceeded("growth series: cell count overflow");
        }
        if (cells > budget) {
          throw BudgetExceeded("growth series: length " + std::to_string(l) + " needs "
                               + std::to_string(cells) + " cells, budget is "
                               + std::to_string(budget));
        }
        UnionFind uf(cells);
        if (l >= 2) {
          for (std::size_t q = 0; q < prev2; ++q) {
            for (auto const& r : p.relations) {
              auto a = extend[q * n + r.lhs[0]] * n + r.lhs[1];
              auto b = extend[q * n + r.rhs[0]] * n + r.rhs[1];
              uf.unite(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
            }
          }
        }
        std::vector<std::uint32_t> next(cells);
        std::vector<std::uint32_t> id_of_root(cells, std::uint32_t(-1));
        std::uint32_t              classes = 0;
        std::vector<std::uint32_t> prefix;
        std::vector<index_t>       letter;
        for (std::size_t c = 0; c < cells; ++c) {
          auto root = uf.find(static_cast<std::uint32_t>(c));
          if (id_of_root[root] == std::uint32_t(-1)) {
            id_of_root[root] = classes++;
            if (keep_cells) {
              prefix.push_back(static_cast<std::uint32_t>(c / n));
              letter.push_back(static_cast<index_t>(c % n));
            }
          }
          next[c] = id_of_root[root];
        }
        st.counts.push_back(classes);
        if (keep_cells) {
          st.prefix.push_back(std::move(prefix));
          st.letter.push_back(std::move(letter));
        }
        extend = std::move(next);
        prev2  = prev;
      }
      return st;
    }

    std::size_t checked_power(std::size_t n, std::size_t l, std::size_t budget) {
      std::size_t total = 1;
      for (std::size_t i = 0; i < l; ++i) {
        if (n != 0 && total > budget / n) {
          throw BudgetExceeded("word enumeration: " + std::to_string(n) + "^" + std::to_string(l)
                               + " words exceed the budget of " + std::to_string(budget));
        }
        total *= n;
      }
      return total;
    }

    // Union-find over all n^l words coded in base n, most significant letter
    // first, so that code order is lexicographic order.
    UnionFind word_classes(MonoidPresentation const& p, std::size_t l, std::size_t budget) {
      auto const n     = p.generators;
      auto const total = checked_power(n, l, budget);
      UnionFind  uf(total);
      if (l < 2) {
        return uf;
      }
      std::vector<std::vector<std::size_t>> partners(n * n);
      for (auto const& r : p.relations) {
        auto a = r.lhs[0] * n + r.lhs[1];
        auto b = r.rhs[0] * n + r.rhs[1];
        partners[a].push_back(b);
        partners[b].push_back(a);
      }
      for (std::size_t w = 0; w < total; ++w) {
        std::size_t weight = 1;  // n^(l - 2 - pos)
        for (std::size_t k = 0; k + 1 < l; ++k, weight *= n) {
          auto const c = (w / weight) % (n * n);
          for (auto d : partners[c]) {
            auto w2 = w - c * weight + d * weight;
            uf.unite(static_cast<std::uint32_t>(w), static_cast<std::uint32_t>(w2));
          }
        }
      }
      return uf;
    }

    Word decode(std::size_t code, std::size_t n, std::size_t l) {
      Word w(l);
      for (std::size_t i = l; i-- > 0;) {
        w[i] = static_cast<index_t>(code % n);
        code /= n;
      }
      return w;
    }
  }  // namespace

  std::size_t MonoidPresentation::nontrivial_count() const {
    return static_cast<std::size_t>(std::count_if(
        relations.begin(), relations.end(), [](Relation const& r) { return !r.is_trivial(); }));
  }

  MonoidPresentation presentation_of(SolutionTable const& s) {
    MonoidPresentation p;
    p.generators = s.size();
    for (index_t x = 0; x < s.size(); ++x) {
      for (index_t y = 0; y < s.size(); ++y) {
        auto [xy, t] = s(x, y);
        Relation r{{x, y}, {t, xy}};
        if (r.rhs < r.lhs) {
          std::swap(r.lhs, r.rhs);
        }
        p.relations.push_back(r);
      }
    }
    std::sort(p.relations.begin(), p.relations.end());
    p.relations.erase(std::unique(p.relations.begin(), p.relations.end()), p.relations.end());
    return p;
  }

  GrowthSeries growth_series(MonoidPresentation const& p,
                             std::size_t               max_length,
                             std::size_t               budget) {
    return {run_strata(p, max_length, budget, false).counts};
  }

  GrowthSeries growth_series(SolutionTable const& s, std::size_t max_length, std::size_t budget) {
    return growth_series(presentation_of(s), max_length, budget);
  }

  GrowthSeries growth_series_by_words(MonoidPresentation const& p,
                                      std::size_t               max_length,
                                      std::size_t               budget) {
    GrowthSeries g;
    for (std::size_t l = 0; l <= max_length; ++l) {
      auto        uf      = word_classes(p, l, budget);
      auto const  total   = checked_power(p.generators, l, budget);
      std::size_t classes = 0;
      for (std::size_t w = 0; w < total; ++w) {
        classes += uf.find(static_cast<std::uint32_t>(w)) == w;
      }
      g.counts.push_back(classes);
    }
    return g;
  }

  std::vector<Word> normal_forms(MonoidPresentation const& p,
                                 std::size_t               length,
                                 std::size_t               budget) {
    auto const        st = run_strata(p, length, budget, true);
    std::vector<Word> out;
    for (std::uint32_t c = 0; c < st.counts[length]; ++c) {
      Word w(length);
      auto cls = c;
      for (std::size_t l = length; l > 0; --l) {
        w[l - 1] = st.letter[l][cls];
        cls      = st.prefix[l][cls];
      }
      out.push_back(std::move(w));
    }
    return out;
  }

  std::vector<Word> normal_forms(SolutionTable const& s, std::size_t length, std::size_t budget) {
    return normal_forms(presentation_of(s), length, budget);
  }

  std::vector<Word> normal_forms_by_words(MonoidPresentation const& p,
                                          std::size_t               length,
                                          std::size_t               budget) {
    auto              uf    = word_classes(p, length, budget);
    auto const        total = checked_power(p.generators, length, budget);
    std::vector<Word> out;
    // Roots are the smallest member of each class.
    for (std::size_t w = 0; w < total; ++w) {
      if (uf.find(static_cast<std::uint32_t>(w)) == w) {
        out.push_back(decode(w, p.generators, length));
      }
    }
    return out;
  }

  std::size_t rank_expected(SolutionTable const& s) {
    auto const ret  = retract(s).quotient.size();
    auto const idem = idempotents(derive_tables(s).mul).size();
    if (idem % ret != 0) {
      throw std::logic_error("rank: |Ret(S)| does not divide |E(S)|");
    }
    return idem / ret;
  }

  GrowthDegree estimate_growth_degree(GrowthSeries const& g) {
    std::vector<long long> diff;
    long long              total = 0;
    for (auto c : g.counts) {
      total += static_cast<long long>(c);
      diff.push_back(total);
    }
    for (std::size_t k = 1;; ++k) {
      for (std::size_t i = 0; i + 1 < diff.size(); ++i) {
        diff[i] = diff[i + 1] - diff[i];
      }
      if (!diff.empty()) {
        diff.pop_back();
      }
      if (diff.size() < 3) {
        return {};
      }
      std::size_t run = 1;
      while (run < diff.size() && diff[diff.size() - 1 - run] == diff.back()) {
        ++run;
      }
      if (run >= 3) {
        return {diff.back() == 0 ? k - 1 : k, diff.size() - run};
      }
    }
  }

}  // namespace pentagon
