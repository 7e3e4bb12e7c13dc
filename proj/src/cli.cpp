#include "pentagon/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "pentagon/analysis.hpp"
#include "pentagon/constructors.hpp"
#include "pentagon/enumeration.hpp"
#include "pentagon/io.hpp"
#include "pentagon/monoid.hpp"

namespace pentagon::cli {

  using json = nlohmann::ordered_json;

  namespace {
    class UsageError : public std::invalid_argument {
     public:
      using std::invalid_argument::invalid_argument;
    };

    std::string read_file(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw UsageError("cannot open '" + path + "'");
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }

    void write_file(std::string const& path, std::string const& text) {
      std::ofstream out(path, std::ios::binary);
      if (!out) {
        throw UsageError("cannot write '" + path + "'");
      }
      out << text;
    }

    std::vector<std::size_t> parse_arguments(std::string const& inner, std::string const& expr) {
      std::vector<std::size_t> values;
      std::stringstream        ss(inner);
      std::string              item;
      while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(' ');
        auto e = item.find_last_not_of(' ');
        if (b == std::string::npos) {
          throw UsageError("empty argument in '" + expr + "'");
        }
        item = item.substr(b, e - b + 1);
        if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit) || item.size() > 6) {
          throw UsageError("bad argument '" + item + "' in '" + expr + "'");
        }
        values.push_back(std::stoul(item));
      }
      return values;
    }

    std::string join(std::vector<std::size_t> const& xs, char const* sep = " ") {
      std::string out;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i ? sep : "") + std::to_string(xs[i]);
      }
      return out;
    }

    std::string triple_string(ClassificationTriple const& t) {
      return "(" + std::to_string(t.x_size) + "," + std::to_string(t.a_dim) + ","
             + std::to_string(t.g_dim) + ")";
    }

    json triple_json(ClassificationTriple const& t) {
      return json{{"x_size", t.x_size}, {"a_dim", t.a_dim}, {"g_dim", t.g_dim}};
    }

    struct Options {
      bool                       json_output = false;
      std::optional<long long>   budget_ms;
      std::size_t                workers = 1;
      std::uint64_t              seed    = 20200101;
    };

    struct Report {
      json        inputs  = json::object();
      json        results = json::object();
      std::string text;

      void line(std::string const& s) {
        text += s;
        text += '\n';
      }
    };

    EnumerationOptions enumeration_options(Options const& o) {
      EnumerationOptions e;
      e.workers = o.workers;
      if (o.budget_ms) {
        e.budget = std::chrono::milliseconds(*o.budget_ms);
      }
      return e;
    }

    ////////////////////////////////////////////////////////////////////////
    // Subcommands
    ////////////////////////////////////////////////////////////////////////

    int cmd_verify(std::string const& source, std::string const& axioms, Report& r) {
      auto s = load_solution(source);
      r.inputs["solution"] = source;
      r.inputs["axioms"]   = axioms;

      std::vector<std::string> names;
      std::stringstream        ss(axioms);
      for (std::string a; std::getline(ss, a, ',');) {
        if (!a.empty()) {
          names.push_back(a);
        }
      }
      if (names.empty()) {
        throw UsageError("no axioms given");
      }
      bool all  = true;
      json list = json::object();
      for (auto const& a : names) {
        bool                  holds = false;
        std::optional<Triple> witness;
        if (a == "pe") {
          witness = pentagon_witness(s);
          holds   = !witness;
        } else if (a == "rpe") {
          witness = reversed_pentagon_witness(s);
          holds   = !witness;
        } else if (a == "involutive") {
          holds = check_involutive(s);
        } else if (a == "bijective") {
          holds = check_bijective(s);
        } else if (a == "commutative") {
          holds = check_commutative(s);
        } else if (a == "cocommutative") {
          holds = check_cocommutative(s);
        } else {
          throw UsageError("unknown axiom '" + a
                           + "' (expected pe, rpe, involutive, bijective, commutative, "
                             "cocommutative)");
        }
        all = all && holds;
        json entry{{"holds", holds}};
        std::string msg = a + ": " + (holds ? "holds" : "fails");
        if (witness) {
          entry["witness"] = {witness->x, witness->y, witness->z};
          msg += " at (" + std::to_string(witness->x) + ", " + std::to_string(witness->y) + ", "
                 + std::to_string(witness->z) + ")";
        }
        list[a] = entry;
        r.line(msg);
      }
      r.results["size"]   = s.size();
      r.results["axioms"] = list;
      r.results["holds"]  = all;
      return all ? success : property_fails;
    }

    struct ConstructArgs {
      std::string family = "decomposition";
      std::size_t x = 1, a = 0, g = 0, n = 1, r = 0;
      std::string sigma_file;
      std::string group = "1";
      std::string perm  = "()";
      std::string out;
    };

    int emit_or_write(SolutionTable const& s, std::string const& out, Report& r) {
      auto text            = emit_solution(s);
      r.results["size"]    = s.size();
      r.results["solution"] = text;
      if (out.empty()) {
        r.text += text;
      } else {
        write_file(out, text);
        r.line("wrote " + out + " (size " + std::to_string(s.size()) + ")");
      }
      return success;
    }

    int cmd_construct(ConstructArgs const& c, Report& r) {
      r.inputs["family"] = c.family;
      SolutionTable s;
      if (c.family == "decomposition") {
        Decomposition d{c.x, c.a, c.g, std::nullopt};
        r.inputs["x"] = c.x;
        r.inputs["a"] = c.a;
        r.inputs["g"] = c.g;
        if (!c.sigma_file.empty()) {
          d.sigma            = parse_sigma(read_file(c.sigma_file), c.x, c.a);
          r.inputs["sigma"]  = c.sigma_file;
        }
        s = decomposition_solution(d);
      } else if (c.family == "identity") {
        r.inputs["n"] = c.n;
        s             = SolutionTable::identity(c.n);
      } else if (c.family == "irretractable") {
        r.inputs["r"] = c.r;
        s             = irretractable_solution(c.r);
      } else if (c.family == "group") {
        r.inputs["group"] = c.group;
        s                 = group_solution(GroupTable::from_name(c.group));
      } else if (c.family == "cycle") {
        r.inputs["n"]     = c.n;
        r.inputs["perm"]  = c.perm;
        r.inputs["group"] = c.group;
        s = cycle_solution(parse_cycles(c.perm, c.n), GroupTable::from_name(c.group));
      } else {
        throw UsageError("unknown family '" + c.family
                         + "' (expected decomposition, identity, irretractable, group, cycle)");
      }
      return emit_or_write(s, c.out, r);
    }

    int cmd_product(std::string const& a, std::string const& b, std::string const& out, Report& r) {
      r.inputs["left"]  = a;
      r.inputs["right"] = b;
      return emit_or_write(product_solution(load_solution(a), load_solution(b)), out, r);
    }

    int cmd_retract(std::string const& source, std::string const& out, Report& r) {
      auto s                = load_solution(source);
      r.inputs["solution"]  = source;
      auto res              = retract(s);
      auto tower            = retract_tower(s);
      bool irretractable    = res.quotient.size() == s.size();
      std::vector<std::size_t> class_of(res.class_of.begin(), res.class_of.end());
      r.results["quotient_size"] = res.quotient.size();
      r.results["class_of"]      = class_of;
      r.results["class_sizes"]   = res.class_sizes;
      r.results["tower"]         = tower;
      r.results["irretractable"] = irretractable;
      r.results["quotient"]      = emit_solution(res.quotient);
      r.line("quotient size: " + std::to_string(res.quotient.size()));
      r.line("class of: " + join(class_of));
      r.line("class sizes: " + join(res.class_sizes));
      r.line("tower: " + join(tower));
      r.line(std::string("irretractable: ") + (irretractable ? "yes" : "no"));
      if (!out.empty()) {
        write_file(out, emit_solution(res.quotient));
        r.line("wrote " + out);
      }
      return success;
    }

    int cmd_classify(std::string const& source, Report& r) {
      auto s               = load_solution(source);
      r.inputs["solution"] = source;
      auto t               = classify(s);
      r.results            = triple_json(t);
      r.results["size"]    = s.size();
      r.line("size: " + std::to_string(s.size()));
      r.line("classification: x=" + std::to_string(t.x_size) + " a=" + std::to_string(t.a_dim)
             + " g=" + std::to_string(t.g_dim));
      return success;
    }

    int cmd_isomorphic(std::string const& a, std::string const& b, std::size_t bound, Report& r) {
      auto s = load_solution(a), t = load_solution(b);
      r.inputs["left"]  = a;
      r.inputs["right"] = b;
      r.inputs["bound"] = bound;
      if (s.size() != t.size()) {
        r.results["isomorphic"] = false;
        r.results["method"]     = "size";
        r.line("not isomorphic: sizes " + std::to_string(s.size()) + " and "
               + std::to_string(t.size()) + " differ");
        return property_fails;
      }
      bool const                 both_involutive = check_involutive(s) && check_pentagon(s)
                                   && check_involutive(t) && check_pentagon(t);
      std::optional<bool>        by_invariant;
      if (both_involutive) {
        auto ts = classify(s), tt = classify(t);
        by_invariant                 = ts == tt;
        r.results["triples"]         = {triple_json(ts), triple_json(tt)};
        r.results["by_invariant"]    = *by_invariant;
        r.line("classification: " + triple_string(ts) + " vs " + triple_string(tt));
      }
      bool iso = false;
      if (s.size() <= bound) {
        auto f              = find_isomorphism(s, t, bound);
        iso                 = f.has_value();
        r.results["method"] = "search";
        if (f) {
          std::vector<std::size_t> images(f->images().begin(), f->images().end());
          r.results["bijection"] = images;
          r.line("bijection: " + join(images));
        }
        if (by_invariant && *by_invariant != iso) {
          throw std::logic_error("isomorphism search disagrees with the classification");
        }
      } else if (by_invariant) {
        iso                 = *by_invariant;
        r.results["method"] = "invariant";
      } else {
        throw UsageError("size " + std::to_string(s.size()) + " exceeds --bound and the inputs "
                         "are not both involutive solutions");
      }
      r.results["isomorphic"] = iso;
      r.line(iso ? "isomorphic" : "not isomorphic");
      return iso ? success : property_fails;
    }

    // Oracle equivalence, closure under relabelling and triple sizes.
    bool self_check(std::size_t                       n,
                    std::vector<SolutionTable> const& tables,
                    std::uint64_t                     seed,
                    Report&                           r) {
      bool ok = true;
      if (n <= 3) {
        bool same = enumerate_naive(n) == tables;
        r.results["self_check"]["oracle_equivalence"] = same;
        r.line(std::string("self-check oracle equivalence: ") + (same ? "pass" : "FAIL"));
        ok = ok && same;
      }
      std::mt19937_64      rng(seed);
      std::vector<index_t> images(n);
      bool                 closed = true;
      for (int trial = 0; trial < 64 && !tables.empty(); ++trial) {
        std::iota(images.begin(), images.end(), index_t(0));
        std::shuffle(images.begin(), images.end(), rng);
        auto const& t = tables[rng() % tables.size()];
        closed        = closed
                 && std::binary_search(tables.begin(), tables.end(), relabel(t, Permutation(images)));
      }
      r.results["self_check"]["closure"] = closed;
      r.line(std::string("self-check relabelling closure: ") + (closed ? "pass" : "FAIL"));
      bool sizes = std::all_of(tables.begin(), tables.end(), [&](SolutionTable const& t) {
        return classify(t).carrier_size() == n;
      });
      r.results["self_check"]["triple_sizes"] = sizes;
      r.line(std::string("self-check triple sizes: ") + (sizes ? "pass" : "FAIL"));
      return ok && closed && sizes;
    }

    int cmd_enumerate(std::size_t    n,
                      bool           up_to_iso,
                      bool           naive,
                      bool           check,
                      std::string const& out_dir,
                      Options const& o,
                      Report&        r) {
      r.inputs["size"]      = n;
      r.inputs["up_to_iso"] = up_to_iso;
      r.inputs["naive"]     = naive;
      r.inputs["seed"]      = o.seed;
      r.line("size " + std::to_string(n));

      std::vector<SolutionTable> tables;
      bool                       complete = true;
      if (naive) {
        tables = enumerate_naive(n);
      } else {
        auto res = enumerate_pruned(n, enumeration_options(o));
        tables   = std::move(res.tables);
        complete = res.complete;
      }
      r.results["complete"] = complete;
      if (!complete) {
        r.results["raw_count_lower_bound"] = tables.size();
        r.line("inconclusive: budget exhausted after " + std::to_string(tables.size())
               + " tables");
        return budget_exceeded;
      }
      r.results["raw_count"] = tables.size();
      r.line(std::to_string(tables.size()) + " tables");
      if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        for (std::size_t i = 0; i < tables.size(); ++i) {
          char name[32];
          std::snprintf(name, sizeof name, "table_%04zu.sol", i);
          write_file((std::filesystem::path(out_dir) / name).string(), emit_solution(tables[i]));
        }
        r.results["out_dir"] = out_dir;
        r.line("wrote " + std::to_string(tables.size()) + " files to " + out_dir);
      }

      int code = success;
      if (up_to_iso) {
        auto rep = count_up_to_iso(n, enumeration_options(o));
        if (!rep.complete) {
          r.results["complete"] = false;
          r.line("inconclusive: budget exhausted while grouping");
          return budget_exceeded;
        }
        auto const expected       = expected_count(n);
        r.results["class_count"]  = rep.class_count;
        r.results["expected"]     = expected;
        json classes              = json::array();
        for (std::size_t i = 0; i < rep.triples.size(); ++i) {
          classes.push_back({{"triple", triple_json(rep.triples[i])},
                             {"representative", emit_solution(rep.representatives[i])}});
        }
        r.results["classes"] = classes;
        r.line(std::to_string(rep.class_count) + " classes");
        for (auto const& t : rep.triples) {
          r.line("  class " + triple_string(t));
        }
        r.line("expected " + std::to_string(expected) + " classes");
        if (rep.class_count != expected) {
          code = property_fails;
        }
      }
      if (check && !self_check(n, tables, o.seed, r)) {
        code = property_fails;
      }
      return code;
    }

    int cmd_sigma_search(std::size_t n, Report& r) {
      r.inputs["n"] = n;
      auto found    = sigma_search(n);
      json list     = json::array();
      for (auto const& p : found) {
        std::vector<std::size_t> images;
        for (auto v : p.images()) {
          images.push_back(v + 1);
        }
        list.push_back({{"cycles", p.to_cycle_string()}, {"images", images}});
        r.line(p.to_cycle_string() + "  images: " + join(images));
      }
      r.results["count"]        = found.size();
      r.results["permutations"] = list;
      r.line(std::to_string(found.size()) + " permutations");
      return success;
    }

    int cmd_growth(std::string const& source,
                   std::size_t        length,
                   std::size_t        budget_words,
                   long long          forms_length,
                   Report&            r) {
      auto s                    = load_solution(source);
      r.inputs["solution"]      = source;
      r.inputs["length"]        = length;
      r.inputs["budget_words"]  = budget_words;
      auto g                    = growth_series(s, length, budget_words);
      auto d                    = estimate_growth_degree(g);
      r.results["series"]       = g.counts;
      r.line("series: " + join(g.counts));
      if (d.degree) {
        r.results["degree"] = *d.degree;
        r.results["onset"]  = d.onset;
        r.line("growth degree: " + std::to_string(*d.degree) + " (from length "
               + std::to_string(d.onset) + ")");
      } else {
        r.results["degree"] = nullptr;
        r.line("growth degree: inconclusive (series too short)");
      }
      int code = success;
      if (check_involutive(s) && check_pentagon(s)) {
        auto rank              = rank_expected(s);
        r.results["rank_expected"] = rank;
        r.line("expected rank: " + std::to_string(rank));
        if (d.degree && *d.degree != rank) {
          code = property_fails;
        }
      }
      if (forms_length >= 0) {
        auto forms = normal_forms(s, static_cast<std::size_t>(forms_length), budget_words);
        json list  = json::array();
        r.line("normal forms of length " + std::to_string(forms_length) + ":");
        for (auto const& w : forms) {
          std::vector<std::size_t> letters(w.begin(), w.end());
          list.push_back(letters);
          r.line("  " + (w.empty() ? std::string("1") : join(letters, " o ")));
        }
        r.results["normal_forms"] = list;
      }
      return code;
    }

    int cmd_order(std::string const& source, std::size_t cap, Report& r) {
      auto s               = load_solution(source);
      r.inputs["solution"] = source;
      r.inputs["cap"]      = cap;
      auto m               = order_of(s, cap);
      r.results["bijective"] = check_bijective(s);
      if (m) {
        r.results["order"] = *m;
        r.line("order: " + std::to_string(*m));
        return success;
      }
      r.results["order"] = nullptr;
      r.line(check_bijective(s) ? "order: exceeds cap " + std::to_string(cap)
                                : std::string("order: none (not bijective)"));
      return property_fails;
    }
  }  // namespace

  SolutionTable load_solution(std::string const& arg) {
    auto open = arg.find('(');
    if (open != std::string::npos && !arg.empty() && arg.back() == ')') {
      auto name  = arg.substr(0, open);
      auto inner = arg.substr(open + 1, arg.size() - open - 2);
      if (name == "group") {
        return group_solution(GroupTable::from_name(inner));
      }
      auto v       = parse_arguments(inner, arg);
      auto require = [&](std::size_t k) {
        if (v.size() != k) {
          throw UsageError("'" + name + "' takes " + std::to_string(k) + " arguments");
        }
      };
      if (name == "identity") {
        require(1);
        if (v[0] == 0 || v[0] > 4096) {
          throw UsageError("identity: size must be in 1..4096");
        }
        return SolutionTable::identity(v[0]);
      }
      if (name == "canonical") {
        require(3);
        if (v[1] + v[2] > 16 || (v[0] << (v[1] + v[2])) > 4096) {
          throw UsageError("canonical: carrier too large");
        }
        return canonical_solution(v[0], v[1], v[2]);
      }
      if (name == "irretractable") {
        require(1);
        if (v[0] > 12) {
          throw UsageError("irretractable: dimension too large");
        }
        return irretractable_solution(v[0]);
      }
      if (name == "ext") {
        require(2);
        if (v[1] > 16 || (v[0] << v[1]) > 4096) {
          throw UsageError("ext: carrier too large");
        }
        return ext_solution(Decomposition{v[0], v[1], 0, std::nullopt});
      }
      throw UsageError("unknown solution expression '" + arg + "'");
    }
    return parse_solution(read_file(arg));
  }

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    auto const start = std::chrono::steady_clock::now();

    CLI::App app{"Finite set-theoretic solutions of the pentagon equation", "pentagon"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    long long budget_ms = -1;
    app.add_flag("--json", o.json_output, "Machine-readable JSON report");
    app.add_option("--budget-ms", budget_ms, "Wall-clock budget for enumeration");
    app.add_option("--workers", o.workers, "Worker threads for enumeration (0 = all cores)");
    app.add_option("--seed", o.seed, "Seed for randomized self-checks");

    std::string solution, second, out_file, axioms = "pe";
    auto* verify = app.add_subcommand("verify", "Check axioms of a solution");
    verify->add_option("solution", solution, "Solution file or expression")->required();
    verify->add_option("--axioms", axioms,
                       "Comma list of pe, rpe, involutive, bijective, commutative, cocommutative");

    ConstructArgs c;
    auto* construct = app.add_subcommand("construct", "Build a solution");
    construct->add_option("--family", c.family,
                          "decomposition (default), identity, irretractable, group, cycle");
    construct->add_option("--x", c.x, "|X|");
    construct->add_option("--a", c.a, "dim A");
    construct->add_option("--g", c.g, "dim G");
    construct->add_option("--sigma", c.sigma_file, "Sigma file for the decomposition family");
    construct->add_option("--n", c.n, "Size (identity) or degree of the permutation (cycle)");
    construct->add_option("--r", c.r, "Dimension (irretractable)");
    construct->add_option("--group", c.group, "Group name: 1, Cn, Sn or products like C2xC4");
    construct->add_option("--perm", c.perm, "Permutation in cycle notation, e.g. \"(1 4 3 2)\"");
    construct->add_option("--out", c.out, "Write the solution to a file");

    auto* product = app.add_subcommand("product", "Product of two solutions");
    product->add_option("left", solution)->required();
    product->add_option("right", second)->required();
    product->add_option("--out", out_file);

    auto* retract_cmd = app.add_subcommand("retract", "Retract of an involutive solution");
    retract_cmd->add_option("solution", solution)->required();
    retract_cmd->add_option("--out", out_file, "Write the quotient solution to a file");

    auto* classify_cmd = app.add_subcommand("classify", "Classification triple (|X|, dim A, dim G)");
    classify_cmd->add_option("solution", solution)->required();

    std::size_t bound = 8;
    auto* isomorphic = app.add_subcommand("isomorphic", "Decide isomorphism of two solutions");
    isomorphic->add_option("left", solution)->required();
    isomorphic->add_option("right", second)->required();
    isomorphic->add_option("--bound", bound, "Largest size searched by backtracking");

    std::size_t size = 0;
    bool        up_to_iso = false, naive = false, check = false;
    auto* enumerate = app.add_subcommand("enumerate", "Enumerate involutive solutions");
    enumerate->add_option("--size", size)->required();
    enumerate->add_flag("--up-to-iso", up_to_iso, "Count isomorphism classes");
    enumerate->add_flag("--naive", naive, "Use the unpruned enumerator (size <= 3)");
    enumerate->add_flag("--self-check", check, "Run oracle and closure checks");
    enumerate->add_option("--out-dir", out_file, "Write every table to this directory");

    std::size_t sigma_n = 0;
    auto* sigma = app.add_subcommand("sigma-search", "Permutations satisfying the sigma-condition");
    sigma->add_option("--n", sigma_n)->required();

    std::size_t length = 6, budget_words = default_word_budget;
    long long   forms  = -1;
    auto* growth = app.add_subcommand("growth", "Growth of the structure monoid");
    growth->add_option("solution", solution)->required();
    growth->add_option("--length", length, "Maximal word length");
    growth->add_option("--budget-words", budget_words, "Cells allowed per length");
    growth->add_option("--normal-forms", forms, "Also list normal forms of this length");

    std::size_t cap = 1000;
    auto* order = app.add_subcommand("order", "Order of a bijective solution");
    order->add_option("solution", solution)->required();
    order->add_option("--cap", cap, "Largest order tried");

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return usage_error;
    }
    if (budget_ms >= 0) {
      o.budget_ms = budget_ms;
    }

    auto*       sub     = app.get_subcommands().front();
    std::string command = sub->get_name();
    Report      r;
    int         code = success;
    try {
      if (sub == verify) {
        code = cmd_verify(solution, axioms, r);
      } else if (sub == construct) {
        code = cmd_construct(c, r);
      } else if (sub == product) {
        code = cmd_product(solution, second, out_file, r);
      } else if (sub == retract_cmd) {
        code = cmd_retract(solution, out_file, r);
      } else if (sub == classify_cmd) {
        code = cmd_classify(solution, r);
      } else if (sub == isomorphic) {
        code = cmd_isomorphic(solution, second, bound, r);
      } else if (sub == enumerate) {
        code = cmd_enumerate(size, up_to_iso, naive, check, out_file, o, r);
      } else if (sub == sigma) {
        code = cmd_sigma_search(sigma_n, r);
      } else if (sub == growth) {
        code = cmd_growth(solution, length, budget_words, forms, r);
      } else if (sub == order) {
        code = cmd_order(solution, cap, r);
      }
    } catch (BudgetExceeded const& e) {
      err << "pentagon " << command << ": budget exceeded: " << e.what() << '\n';
      return budget_exceeded;
    } catch (ParseError const& e) {
      err << "pentagon " << command << ": parse error: " << e.what() << '\n';
      return usage_error;
    } catch (std::exception const& e) {
      err << "pentagon " << command << ": error: " << e.what() << '\n';
      return usage_error;
    }

    if (o.json_output) {
      auto const elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start);
      json report{{"command", command},
                  {"inputs", r.inputs},
                  {"results", r.results},
                  {"elapsed_ms", elapsed.count()},
                  {"version", version}};
      out << report.dump(2) << '\n';
    } else {
      out << r.text;
    }
    return code;
  }

}  // namespace pentagon::cli
