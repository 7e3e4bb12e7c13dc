#include "pentagon/constructors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace pentagon {

  namespace {
    void require_total_map(std::span<index_t const> f, std::size_t n, char const* name) {
      if (f.size() != n) {
        throw ConstructionError(std::string(name) + ": expected " + std::to_string(n)
                                + " images");
      }
      for (auto v : f) {
        if (v >= n) {
          throw ConstructionError(std::string(name) + ": image out of range");
        }
      }
    }

    bool is_idempotent_map(std::span<index_t const> f) {
      return std::all_of(f.begin(), f.end(), [&](index_t v) { return f[v] == v; });
    }
  }  // namespace

  SigmaMap::SigmaMap(std::size_t a_dim, std::size_t x_size, std::vector<Permutation> sigmas)
      : a_dim_(a_dim), x_size_(x_size), sigmas_(std::move(sigmas)) {
    if (sigmas_.size() != (std::size_t(1) << a_dim_)) {
      throw ConstructionError("sigma map: expected " + std::to_string(std::size_t(1) << a_dim_)
                              + " permutations, got " + std::to_string(sigmas_.size()));
    }
    for (auto const& p : sigmas_) {
      if (p.size() != x_size_) {
        throw ConstructionError("sigma map: permutation degree " + std::to_string(p.size())
                                + " differs from |X| = " + std::to_string(x_size_));
      }
    }
  }

  SigmaMap SigmaMap::trivial(std::size_t a_dim, std::size_t x_size) {
    return SigmaMap(a_dim,
                    x_size,
                    std::vector<Permutation>(std::size_t(1) << a_dim,
                                             Permutation::identity(x_size)));
  }

  SolutionTable group_solution(GroupTable const& g) {
    return SolutionTable::from_function(
        g.size(), [&](index_t x, index_t y) { return Pair{g(x, y), y}; });
  }

  SolutionTable irretractable_solution(std::size_t r) {
    Elementary2Group a(r);
    return SolutionTable::from_function(
        a.size(), [](index_t x, index_t y) { return Pair{x, Elementary2Group::add(x, y)}; });
  }

  SolutionTable ext_solution(Decomposition const& d) {
    if (d.g_dim != 0) {
      throw ConstructionError("ext solution: the decomposition must have g_dim = 0");
    }
    return decomposition_solution(d);
  }

  SolutionTable decomposition_solution(Decomposition const& d) {
    if (d.x_size == 0) {
      throw ConstructionError("decomposition: X must be non-empty");
    }
    if (d.a_dim + d.g_dim > 16) {
      throw ConstructionError("decomposition: carrier too large");
    }
    auto sigma = d.sigma.value_or(SigmaMap::trivial(d.a_dim, d.x_size));
    if (sigma.a_dim() != d.a_dim || sigma.x_size() != d.x_size) {
      throw ConstructionError("decomposition: sigma map dimensions (|X| = "
                              + std::to_string(sigma.x_size()) + ", dim A = "
                              + std::to_string(sigma.a_dim()) + ") do not match");
    }
    auto const A = index_t(1) << d.a_dim;
    auto const G = index_t(1) << d.g_dim;

    // theta on the X coordinate is sigma_{a+b} sigma_b^-1, tabulated per (a, b).
    std::vector<Permutation> inverses;
    for (index_t b = 0; b < A; ++b) {
      inverses.push_back(sigma[b].inverse());
    }
    std::vector<Permutation> twist;
    twist.reserve(A * A);
    for (index_t a = 0; a < A; ++a) {
      for (index_t b = 0; b < A; ++b) {
        twist.push_back(sigma[a ^ b] * inverses[b]);
      }
    }

    auto encode = [&](index_t x, index_t a, index_t g) { return (x * A + a) * G + g; };
    return SolutionTable::from_function(d.carrier_size(), [&](index_t u, index_t v) {
      index_t x = u / (A * G), a = (u / G) % A, g = u % G;
      index_t y = v / (A * G), b = (v / G) % A, h = v % G;
      return Pair{encode(x, a, g ^ h), encode(twist[a * A + b](y), a ^ b, h)};
    });
  }

  SolutionTable canonical_solution(std::size_t x_size, std::size_t a_dim, std::size_t g_dim) {
    if (x_size == 0) {
      throw ConstructionError("canonical solution: X must be non-empty");
    }
    return decomposition_solution(Decomposition{x_size, a_dim, g_dim, std::nullopt});
  }

  SolutionTable endo_solution(MultTable const& m, std::span<index_t const> f) {
    require_total_map(f, m.size(), "endo solution");
    if (auto w = associativity_witness(m)) {
      throw ConstructionError("endo solution: associativity fails at (" + std::to_string(w->x)
                              + ", " + std::to_string(w->y) + ", " + std::to_string(w->z)
                              + ")");
    }
    if (!is_idempotent_map(f)) {
      throw ConstructionError("endo solution: f is not idempotent");
    }
    for (index_t x = 0; x < m.size(); ++x) {
      for (index_t y = 0; y < m.size(); ++y) {
        if (f[m(x, y)] != m(f[x], f[y])) {
          throw ConstructionError("endo solution: f is not an endomorphism");
        }
      }
    }
    return SolutionTable::from_function(
        m.size(), [&](index_t x, index_t y) { return Pair{m(x, y), f[y]}; });
  }

  SolutionTable idempotent_pair_solution(std::size_t              n,
                                         std::span<index_t const> f,
                                         std::span<index_t const> g) {
    require_total_map(f, n, "idempotent pair solution (f)");
    require_total_map(g, n, "idempotent pair solution (g)");
    if (!is_idempotent_map(f)) {
      throw ConstructionError("idempotent pair solution: f is not idempotent");
    }
    if (!is_idempotent_map(g)) {
      throw ConstructionError("idempotent pair solution: g is not idempotent");
    }
    for (index_t x = 0; x < n; ++x) {
      if (f[g[x]] != g[f[x]]) {
        throw ConstructionError("idempotent pair solution: f and g do not commute");
      }
    }
    return SolutionTable::from_function(n, [&](index_t x, index_t y) { return Pair{f[x], g[y]}; });
  }

  std::optional<index_t> sigma_condition_witness(Permutation const& sigma) {
    auto const n = sigma.size();
    // Exponents range over 1 .. n + 1.
    std::vector<Permutation> powers;
    powers.reserve(n + 2);
    for (std::size_t k = 0; k <= n + 1; ++k) {
      powers.push_back(sigma.power(k));
    }
    for (index_t i = 1; i <= n; ++i) {
      index_t label = sigma(i - 1) + 1;
      if (powers[label + 1] != powers[i]) {
        return i;
      }
    }
    return std::nullopt;
  }

  SolutionTable cycle_solution(Permutation const& sigma, GroupTable const& g) {
    if (sigma.size() == 0) {
      throw ConstructionError("cycle solution: E must be non-empty");
    }
    if (auto w = sigma_condition_witness(sigma)) {
      throw ConstructionError("cycle solution: sigma " + sigma.to_cycle_string()
                              + " violates the sigma-condition at i = " + std::to_string(*w));
    }
    auto const               G = static_cast<index_t>(g.size());
    std::vector<Permutation> powers;
    for (std::size_t i = 1; i <= sigma.size(); ++i) {
      powers.push_back(sigma.power(i));
    }
    return SolutionTable::from_function(sigma.size() * g.size(), [&](index_t u, index_t v) {
      index_t i = u / G, a = u % G;
      index_t j = v / G, b = v % G;
      return Pair{i * G + g(a, b), powers[i](j) * G + b};
    });
  }

  std::vector<Permutation> sigma_search(std::size_t n) {
    if (n == 0) {
      throw ConstructionError("sigma search: n must be positive");
    }
    std::vector<Permutation> found;
    std::vector<index_t>     images(n);
    std::iota(images.begin(), images.end(), index_t(0));
    do {
      Permutation p(images);
      if (!sigma_condition_witness(p)) {
        found.push_back(std::move(p));
      }
    } while (std::next_permutation(images.begin(), images.end()));
    return found;
  }

}  // namespace pentagon
