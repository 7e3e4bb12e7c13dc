#include "pentagon/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <thread>

namespace pentagon {

  namespace {
    using Clock = std::chrono::steady_clock;

    constexpr std::uint16_t unknown = 0xFFFF;

    // A partial involution of the n^2 points of S x S.
    struct PartialTable {
      std::vector<std::uint16_t> val;
    };

    SolutionTable to_table(std::size_t n, std::vector<std::uint16_t> const& val) {
      std::vector<Pair> entries(n * n);
      for (std::size_t p = 0; p < n * n; ++p) {
        entries[p] = Pair{static_cast<index_t>(val[p] / n), static_cast<index_t>(val[p] % n)};
      }
      return SolutionTable(n, std::move(entries));
    }

    class PrunedSearch {
     public:
      PrunedSearch(std::size_t n, std::atomic<bool>& stop, std::optional<Clock::time_point> deadline)
          : n_(n), points_(n * n), stop_(stop), deadline_(deadline) {}

      // Every triple whose entries are known must agree coordinate-wise on
      // s23 s13 s12 and s12 s23.
      bool consistent(std::vector<std::uint16_t> const& v) const {
        auto const n = n_;
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t y = 0; y < n; ++y) {
            auto const xy = v[x * n + y];
            if (xy == unknown) {
              continue;
            }
            auto const a = xy / n, b = xy % n;
            for (std::size_t z = 0; z < n; ++z) {
              auto const az = v[a * n + z];
              auto const yz = v[y * n + z];
              auto const xc = yz == unknown ? unknown : v[x * n + yz / n];
              if (az != unknown && xc != unknown && az / n != xc / n) {
                return false;
              }
              if (az == unknown) {
                continue;
              }
              auto const bz = v[b * n + az % n];
              if (bz == unknown) {
                continue;
              }
              if (xc != unknown && bz / n != xc % n) {
                return false;
              }
              if (yz != unknown && bz % n != yz % n) {
                return false;
              }
            }
          }
        }
        return true;
      }

      // Children of a node in value order: s(p) = q for the smallest
      // unassigned p and each unassigned q >= p.
      template <typename F>
      void for_each_child(std::vector<std::uint16_t>& v, F&& f) const {
        std::size_t p = 0;
        while (p < points_ && v[p] != unknown) {
          ++p;
        }
        for (std::size_t q = p; q < points_; ++q) {
          if (v[q] != unknown) {
            continue;
          }
          v[p] = static_cast<std::uint16_t>(q);
          v[q] = static_cast<std::uint16_t>(p);
          if (consistent(v)) {
            f(v);
          }
          v[p] = unknown;
          v[q] = unknown;
        }
      }

      static bool is_full(std::vector<std::uint16_t> const& v) {
        return std::find(v.begin(), v.end(), unknown) == v.end();
      }

      void dfs(std::vector<std::uint16_t>& v, std::vector<SolutionTable>& out) {
        if (stop_.load(std::memory_order_relaxed)) {
          return;
        }
        if (++nodes_ % 1024 == 0 && deadline_ && Clock::now() > *deadline_) {
          stop_.store(true);
          return;
        }
        if (is_full(v)) {
          out.push_back(to_table(n_, v));
          return;
        }
        for_each_child(v, [&](std::vector<std::uint16_t>& child) { dfs(child, out); });
      }

      std::size_t nodes() const noexcept {
        return nodes_;
      }

     private:
      std::size_t                      n_;
      std::size_t                      points_;
      std::atomic<bool>&               stop_;
      std::optional<Clock::time_point> deadline_;
      std::size_t                      nodes_ = 0;
    };

    void collect_involutions(std::vector<std::uint16_t>&   v,
                             std::size_t                   n,
                             std::vector<SolutionTable>&   out) {
      auto p = std::find(v.begin(), v.end(), unknown);
      if (p == v.end()) {
        auto table = to_table(n, v);
        if (check_pentagon(table)) {
          out.push_back(std::move(table));
        }
        return;
      }
      auto const pi = static_cast<std::size_t>(p - v.begin());
      for (std::size_t q = pi; q < v.size(); ++q) {
        if (v[q] != unknown) {
          continue;
        }
        v[pi] = static_cast<std::uint16_t>(q);
        v[q]  = static_cast<std::uint16_t>(pi);
        collect_involutions(v, n, out);
        v[pi] = unknown;
        v[q]  = unknown;
      }
    }
  }  // namespace

  std::vector<SolutionTable> enumerate_naive(std::size_t n) {
    if (n == 0 || n > 3) {
      throw EnumerationError("enumerate naive: n must be in 1..3, got " + std::to_string(n));
    }
    std::vector<std::uint16_t> v(n * n, unknown);
    std::vector<SolutionTable> out;
    collect_involutions(v, n, out);
    std::sort(out.begin(), out.end());
    return out;
  }

  EnumerationResult enumerate_pruned(std::size_t n, EnumerationOptions const& opts) {
    if (n == 0 || n > 6) {
      throw EnumerationError("enumerate pruned: n must be in 1..6, got " + std::to_string(n));
    }
    std::optional<Clock::time_point> deadline;
    if (opts.budget) {
      deadline = Clock::now() + *opts.budget;
    }
    std::atomic<bool> stop{false};

    // The tree is cut after the first two assignments; each frontier node is
    // an independent job and results are merged in frontier order.
    std::vector<std::vector<std::uint16_t>> frontier;
    {
      PrunedSearch               root(n, stop, deadline);
      std::vector<std::uint16_t> v(n * n, unknown);
      root.for_each_child(v, [&](std::vector<std::uint16_t>& c1) {
        if (PrunedSearch::is_full(c1)) {
          frontier.push_back(c1);
          return;
        }
        root.for_each_child(c1, [&](std::vector<std::uint16_t>& c2) { frontier.push_back(c2); });
      });
    }

    std::size_t workers = opts.workers == 0 ? std::thread::hardware_concurrency() : opts.workers;
    workers             = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(frontier.size(), 1));

    std::vector<std::vector<SolutionTable>> results(frontier.size());
    std::vector<std::size_t>                nodes(workers, 0);
    std::atomic<std::size_t>                next{0};
    auto                                    work = [&](std::size_t id) {
      PrunedSearch search(n, stop, deadline);
      for (auto job = next++; job < frontier.size(); job = next++) {
        auto v = frontier[job];
        search.dfs(v, results[job]);
      }
      nodes[id] = search.nodes();
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t id = 0; id < workers; ++id) {
        pool.emplace_back(work, id);
      }
      for (auto& t : pool) {
        t.join();
      }
    }

    EnumerationResult result;
    for (auto& r : results) {
      std::move(r.begin(), r.end(), std::back_inserter(result.tables));
    }
    std::sort(result.tables.begin(), result.tables.end());
    result.complete = !stop.load();
    result.nodes    = std::accumulate(nodes.begin(), nodes.end(), std::size_t(0));
    return result;
  }

  SolutionTable canonical_form(SolutionTable const& s) {
    std::vector<index_t> images(s.size());
    std::iota(images.begin(), images.end(), index_t(0));
    SolutionTable best = s;
    do {
      auto candidate = relabel(s, Permutation(images));
      if (candidate < best) {
        best = std::move(candidate);
      }
    } while (std::next_permutation(images.begin(), images.end()));
    return best;
  }

  EnumerationReport count_up_to_iso(std::size_t n, EnumerationOptions const& opts) {
    auto const start  = Clock::now();
    auto       result = enumerate_pruned(n, opts);

    EnumerationReport report;
    report.size      = n;
    report.raw_count = result.tables.size();
    report.complete  = result.complete;

    // Re-verify on an independent path from the incremental search checks.
    for (auto const& t : result.tables) {
      if (!check_pentagon(t) || !check_involutive(t)) {
        throw std::logic_error("count up to iso: enumerator emitted a non-solution");
      }
    }

    std::map<ClassificationTriple, std::size_t> by_triple;  // triple -> first member
    for (std::size_t i = 0; i < result.tables.size(); ++i) {
      by_triple.try_emplace(classify(result.tables[i]), i);
    }

    if (n <= 4) {
      std::vector<std::size_t> reps;  // first member of each brute-force class
      for (std::size_t i = 0; i < result.tables.size(); ++i) {
        auto const& t         = result.tables[i];
        bool        has_class = false;
        for (auto r : reps) {
          if (find_isomorphism(t, result.tables[r])) {
            has_class = true;
            if (classify(t) != classify(result.tables[r])) {
              throw std::logic_error("count up to iso: isomorphic tables with different triples");
            }
            break;
          }
        }
        if (!has_class) {
          reps.push_back(i);
        }
      }
      if (reps.size() != by_triple.size()) {
        throw std::logic_error("count up to iso: brute-force and invariant class counts differ");
      }
    }

    for (auto const& [triple, member] : by_triple) {
      report.triples.push_back(triple);
      report.representatives.push_back(canonical_form(result.tables[member]));
    }
    report.class_count = by_triple.size();
    report.elapsed     = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    return report;
  }

  std::size_t expected_count(std::size_t n) {
    if (n == 0) {
      throw EnumerationError("expected count: n must be positive");
    }
    auto const k = static_cast<std::size_t>(std::countr_zero(n));
    return (k + 2) * (k + 1) / 2;
  }

}  // namespace pentagon
