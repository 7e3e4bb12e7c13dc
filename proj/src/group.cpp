#include "pentagon/group.hpp"

#include <algorithm>
#include <numeric>

namespace pentagon {

  GroupTable::GroupTable(std::size_t n, std::vector<index_t> cayley)
      : n_(n), cayley_(std::move(cayley)) {
    if (n_ == 0) {
      throw GroupAxiomError("identity", "a group is non-empty");
    }
    if (cayley_.size() != n_ * n_) {
      throw InvalidTable("group table: expected " + std::to_string(n_ * n_) + " entries");
    }
    for (auto v : cayley_) {
      if (v >= n_) {
        throw InvalidTable("group table: entry out of range");
      }
    }
    if (auto w = associativity_witness(MultTable(n_, cayley_))) {
      throw GroupAxiomError("associativity",
                            "fails at (" + std::to_string(w->x) + ", " + std::to_string(w->y)
                                + ", " + std::to_string(w->z) + ")");
    }
    auto is_identity = [&](index_t e) {
      for (index_t g = 0; g < n_; ++g) {
        if ((*this)(e, g) != g || (*this)(g, e) != g) {
          return false;
        }
      }
      return true;
    };
    index_t e = 0;
    while (e < n_ && !is_identity(e)) {
      ++e;
    }
    if (e == n_) {
      throw GroupAxiomError("identity", "no two-sided identity element");
    }
    identity_ = e;
    for (index_t g = 0; g < n_; ++g) {
      bool found = false;
      for (index_t h = 0; h < n_ && !found; ++h) {
        found = (*this)(g, h) == identity_ && (*this)(h, g) == identity_;
      }
      if (!found) {
        throw GroupAxiomError("inverse", "element " + std::to_string(g) + " has no inverse");
      }
    }
    exponent_ = 1;
    for (index_t g = 0; g < n_; ++g) {
      exponent_ = std::lcm(exponent_, element_order(g));
    }
  }

  GroupTable GroupTable::trivial() {
    return cyclic(1);
  }

  GroupTable GroupTable::cyclic(std::size_t n) {
    std::vector<index_t> t(n * n);
    for (index_t i = 0; i < n; ++i) {
      for (index_t j = 0; j < n; ++j) {
        t[i * n + j] = (i + j) % n;
      }
    }
    return GroupTable(n, std::move(t));
  }

  GroupTable GroupTable::symmetric(std::size_t k) {
    std::vector<std::vector<index_t>> perms;
    std::vector<index_t>              p(k);
    std::iota(p.begin(), p.end(), index_t(0));
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    auto const           n = perms.size();
    std::vector<index_t> t(n * n);
    std::vector<index_t> q(k);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t x = 0; x < k; ++x) {
          q[x] = perms[i][perms[j][x]];
        }
        auto it      = std::lower_bound(perms.begin(), perms.end(), q);
        t[i * n + j] = static_cast<index_t>(it - perms.begin());
      }
    }
    return GroupTable(n, std::move(t));
  }

  GroupTable GroupTable::direct_product(GroupTable const& g, GroupTable const& h) {
    auto const           nh = static_cast<index_t>(h.size());
    auto const           n  = g.size() * h.size();
    std::vector<index_t> t(n * n);
    for (index_t x = 0; x < n; ++x) {
      for (index_t y = 0; y < n; ++y) {
        t[x * n + y] = g(x / nh, y / nh) * nh + h(x % nh, y % nh);
      }
    }
    return GroupTable(n, std::move(t));
  }

  GroupTable GroupTable::from_name(std::string const& name) {
    if (name.empty()) {
      throw std::invalid_argument("group name: empty");
    }
    auto parse_factor = [](std::string const& f) -> GroupTable {
      if (f == "1") {
        return trivial();
      }
      if (f.size() >= 2 && (f[0] == 'C' || f[0] == 'S')) {
        std::size_t value = 0;
        for (std::size_t i = 1; i < f.size(); ++i) {
          if (f[i] < '0' || f[i] > '9') {
            throw std::invalid_argument("group name: bad factor '" + f + "'");
          }
          value = value * 10 + static_cast<std::size_t>(f[i] - '0');
        }
        if (value == 0 || value > 4096 || (f[0] == 'S' && value > 6)) {
          throw std::invalid_argument("group name: unsupported factor '" + f + "'");
        }
        return f[0] == 'C' ? cyclic(value) : symmetric(value);
      }
      throw std::invalid_argument("group name: bad factor '" + f + "'");
    };
    GroupTable  result = trivial();
    std::size_t start  = 0;
    while (start <= name.size()) {
      auto end = name.find('x', start);
      if (end == std::string::npos) {
        end = name.size();
      }
      result = direct_product(result, parse_factor(name.substr(start, end - start)));
      start  = end + 1;
    }
    return result;
  }

  index_t GroupTable::inverse(index_t g) const {
    for (index_t h = 0; h < n_; ++h) {
      if ((*this)(g, h) == identity_) {
        return h;
      }
    }
    return identity_;  // unreachable for a validated table
  }

  std::size_t GroupTable::element_order(index_t g) const {
    std::size_t k = 1;
    for (index_t p = g; p != identity_; p = (*this)(p, g)) {
      ++k;
    }
    return k;
  }

  bool GroupTable::is_abelian() const {
    for (index_t g = 0; g < n_; ++g) {
      for (index_t h = g + 1; h < n_; ++h) {
        if ((*this)(g, h) != (*this)(h, g)) {
          return false;
        }
      }
    }
    return true;
  }

  bool GroupTable::is_elementary_abelian_2() const {
    return is_abelian() && exponent_ <= 2;
  }

  Elementary2Group::Elementary2Group(std::size_t dim) : dim_(dim) {
    if (dim_ > 16) {
      throw std::invalid_argument("elementary abelian 2-group: dimension too large");
    }
  }

  GroupTable Elementary2Group::table() const {
    auto const           n = size();
    std::vector<index_t> t(n * n);
    for (index_t a = 0; a < n; ++a) {
      for (index_t b = 0; b < n; ++b) {
        t[a * n + b] = add(a, b);
      }
    }
    return GroupTable(n, std::move(t));
  }

}  // namespace pentagon
