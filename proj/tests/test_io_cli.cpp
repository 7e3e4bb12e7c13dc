#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "pentagon/cli.hpp"
#include "pentagon/constructors.hpp"
#include "pentagon/io.hpp"

using namespace pentagon;
namespace fs = std::filesystem;

namespace {
  fs::path const data_dir = PENTAGON_TEST_DATA_DIR;

  std::string slurp(fs::path const& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  std::string fixture(char const* name) {
    return (data_dir / "fixtures" / name).string();
  }

  std::string golden(char const* name) {
    return (data_dir / "golden" / name).string();
  }

  struct Run {
    int         code;
    std::string out;
    std::string err;
  };

  Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int                code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::size_t parse_error_line(std::string const& text) {
    try {
      parse_solution(text);
    } catch (ParseError const& e) {
      return e.line();
    }
    return 9999;
  }

  // JSON report with the timing field removed.
  std::string without_timing(std::string const& text) {
    auto j = nlohmann::ordered_json::parse(text);
    j.erase("elapsed_ms");
    return j.dump();
  }
}  // namespace

TEST_SUITE("io") {
  TEST_CASE("parse a well-formed file") {
    auto s = parse_solution("pentagon-solution v1\nsize 2\n0 0 0 0\n0 1 0 1\n1 0 1 0\n1 1 1 1\n");
    CHECK(s == SolutionTable::identity(2));
  }

  TEST_CASE("parse errors name the line") {
    CHECK(parse_error_line(slurp(fixture("duplicate_row.sol"))) == 5);
    CHECK(parse_error_line(slurp(fixture("bad_header.sol"))) == 1);
    CHECK(parse_error_line(slurp(fixture("out_of_range.sol"))) == 4);
    CHECK(parse_error_line(slurp(fixture("extra_token.sol"))) == 4);
    CHECK(parse_error_line(slurp(fixture("bad_size.sol"))) == 2);
    CHECK(parse_error_line(slurp(fixture("bad_token.sol"))) == 4);
    CHECK(parse_error_line(slurp(fixture("missing_row.sol"))) == 0);
    CHECK(parse_error_line("") == 1);
    CHECK(parse_error_line("pentagon-solution v1\n") == 2);
    CHECK(parse_error_line("pentagon-solution v1\nsize 0\n") == 2);
    CHECK(parse_error_line("pentagon-solution v1\nsize 99999\n") == 2);
    try {
      parse_solution(slurp(fixture("duplicate_row.sol")));
    } catch (ParseError const& e) {
      CHECK(std::string(e.what()).find("line 5") == 0);
      CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }
  }

  TEST_CASE("parsing is lenient and emission canonical") {
    auto s = parse_solution(slurp(fixture("messy_c2.sol")));
    CHECK(s == group_solution(GroupTable::cyclic(2)));
    CHECK(emit_solution(s) == slurp(golden("group_c2.sol")));
  }

  TEST_CASE("emit examples") {
    CHECK(emit_solution(SolutionTable::identity(1)) == "pentagon-solution v1\nsize 1\n0 0 0 0\n");
    auto text = emit_solution(canonical_solution(3, 1, 1));
    CHECK(std::count(text.begin(), text.end(), '\n') == 146);
    CHECK(text.find(" \n") == std::string::npos);
  }

  TEST_CASE("round trip over the golden corpus") {
    std::size_t files = 0;
    for (auto const& entry : fs::directory_iterator(data_dir / "golden")) {
      auto text = slurp(entry.path());
      CHECK_MESSAGE(emit_solution(parse_solution(text)) == text, entry.path().string());
      ++files;
    }
    CHECK(files >= 8);
  }

  TEST_CASE("golden files pin the constructors and their index encoding") {
    CHECK(slurp(golden("identity_1.sol")) == emit_solution(SolutionTable::identity(1)));
    CHECK(slurp(golden("irretractable_1.sol")) == emit_solution(irretractable_solution(1)));
    CHECK(slurp(golden("canonical_3_1_1.sol")) == emit_solution(canonical_solution(3, 1, 1)));
    CHECK(slurp(golden("canonical_2_1_0.sol")) == emit_solution(canonical_solution(2, 1, 0)));
    auto sigma = parse_sigma(slurp(fixture("sigma_3_1.txt")), 3, 1);
    CHECK(slurp(golden("decomposition_3_1_1_twisted.sol"))
          == emit_solution(decomposition_solution(Decomposition{3, 1, 1, sigma})));
    CHECK(slurp(golden("cycle_1432_c2.sol"))
          == emit_solution(cycle_solution(parse_cycles("(1 4 3 2)", 4), GroupTable::cyclic(2))));
  }

  TEST_CASE("sigma and cycle formats") {
    auto sigma = parse_sigma(slurp(fixture("sigma_3_1.txt")), 3, 1);
    CHECK(sigma[0] == Permutation({1, 2, 0}));
    CHECK(sigma[1] == Permutation({0, 2, 1}));
    CHECK_THROWS_AS(parse_sigma(slurp(fixture("bad_sigma.txt")), 3, 1), ParseError);
    CHECK_THROWS_AS(parse_sigma(slurp(fixture("short_sigma.txt")), 3, 1), ParseError);
    CHECK_THROWS_AS(parse_sigma("0 1\n1 0\n", 3, 1), ParseError);
    CHECK(parse_cycles("(1 4 3 2)", 4) == Permutation::from_cycles(4, {{1, 4, 3, 2}}));
    CHECK(parse_cycles("(1,2)(3,4)", 4) == Permutation::from_cycles(4, {{1, 2}, {3, 4}}));
    CHECK(parse_cycles("()", 3).is_identity());
    CHECK_THROWS_AS(parse_cycles("(1 2", 3), ParseError);
    CHECK_THROWS_AS(parse_cycles("1 2", 3), ParseError);
    CHECK_THROWS_AS(parse_cycles("(1 5)", 3), ParseError);
  }
}

TEST_SUITE("cli") {
  TEST_CASE("documented examples") {
    CHECK(run({"verify", "--axioms", "pe,involutive", "canonical(3,1,1)"}).code == 0);
    auto e = run({"enumerate", "--size", "4", "--up-to-iso"});
    CHECK(e.code == 0);
    CHECK(e.out.find("6 classes") != std::string::npos);
    auto s = run({"sigma-search", "--n", "4"});
    CHECK(s.code == 0);
    CHECK(s.out.find("4 permutations") != std::string::npos);
  }

  TEST_CASE("property failures exit 1") {
    auto v = run({"verify", fixture("flip2.sol")});
    CHECK(v.code == 1);
    CHECK(v.out.find("pe: fails at") != std::string::npos);
    CHECK(run({"verify", "--axioms", "involutive", "group(C4)"}).code == 1);
    CHECK(run({"isomorphic", "identity(2)", "group(C2)"}).code == 1);
    CHECK(run({"isomorphic", "identity(2)", "identity(3)"}).code == 1);
    CHECK(run({"order", "--cap", "3", "group(C4)"}).code == 1);
  }

  TEST_CASE("usage and input errors exit 2") {
    for (char const* bad : {"duplicate_row.sol", "bad_header.sol", "out_of_range.sol",
                            "missing_row.sol", "extra_token.sol", "bad_size.sol", "bad_token.sol"}) {
      auto r = run({"verify", fixture(bad)});
      CHECK_MESSAGE(r.code == 2, bad);
      CHECK(r.err.find("parse error") != std::string::npos);
    }
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"verify"}).code == 2);
    CHECK(run({"verify", "no/such/file.sol"}).code == 2);
    CHECK(run({"verify", "--axioms", "pe,foo", "identity(2)"}).code == 2);
    CHECK(run({"verify", "canonical(1,2)"}).code == 2);
    CHECK(run({"verify", "identity(0)"}).code == 2);
    CHECK(run({"verify", "group(D4)"}).code == 2);
    CHECK(run({"retract", "group(C4)"}).code == 2);
    CHECK(run({"classify", fixture("flip2.sol")}).code == 2);
    CHECK(run({"construct", "--family", "cycle", "--n", "3", "--perm", "(1 2 3)"}).code == 2);
    CHECK(run({"construct", "--family", "nope"}).code == 2);
    CHECK(run({"construct", "--x", "3", "--a", "1", "--sigma", fixture("bad_sigma.txt")}).code == 2);
    CHECK(run({"enumerate", "--size", "7"}).code == 2);
    CHECK(run({"enumerate", "--size", "4", "--naive"}).code == 2);
    CHECK(run({"enumerate", "--size", "abc"}).code == 2);
    CHECK(run({"isomorphic", "--bound", "4", "group(C2xC4)", "group(C8)"}).code == 2);
  }

  TEST_CASE("budget exhaustion exits 3") {
    auto e = run({"enumerate", "--size", "6", "--up-to-iso", "--budget-ms", "1"});
    CHECK(e.code == 3);
    CHECK(e.out.find("inconclusive") != std::string::npos);
    CHECK(e.out.find("classes") == std::string::npos);
    CHECK(run({"growth", "identity(12)", "--length", "9", "--budget-words", "1000"}).code == 3);
  }

  TEST_CASE("subcommands") {
    auto c = run({"construct", "--x", "3", "--a", "1", "--g", "1"});
    CHECK(c.code == 0);
    CHECK(c.out == slurp(golden("canonical_3_1_1.sol")));
    auto t = run({"construct", "--x", "3", "--a", "1", "--g", "1", "--sigma", fixture("sigma_3_1.txt")});
    CHECK(t.out == slurp(golden("decomposition_3_1_1_twisted.sol")));
    CHECK(run({"construct", "--family", "cycle", "--n", "4", "--perm", "(1 4 3 2)", "--group", "C2"}).out
          == slurp(golden("cycle_1432_c2.sol")));
    CHECK(run({"product", "irretractable(1)", "group(C2)"}).out
          == emit_solution(product_solution(irretractable_solution(1),
                                            group_solution(GroupTable::cyclic(2)))));
    auto r = run({"retract", golden("canonical_3_1_1.sol")});
    CHECK(r.out.find("tower: 12 2 2") != std::string::npos);
    CHECK(run({"classify", golden("decomposition_3_1_1_twisted.sol")}).out.find("x=3 a=1 g=1")
          != std::string::npos);
    CHECK(run({"isomorphic", golden("decomposition_3_1_1_twisted.sol"), "canonical(3,1,1)",
               "--bound", "12"}).code == 0);
    CHECK(run({"isomorphic", "canonical(4,1,1)", "canonical(2,1,2)"}).code == 1);
    auto o = run({"order", golden("cycle_1432_c2.sol")});
    CHECK(o.code == 0);
    CHECK(o.out == "order: 4\n");
    auto g = run({"growth", "irretractable(1)", "--length", "6"});
    CHECK(g.code == 0);
    CHECK(g.out.find("series: 1 2 2 2 2 2 2") != std::string::npos);
    CHECK(run({"enumerate", "--size", "3", "--naive", "--self-check"}).code == 0);
    CHECK(run({"verify", fixture("messy_c2.sol"), "--axioms", "pe,involutive,bijective"}).code == 0);
  }

  TEST_CASE("retract writes the quotient") {
    auto out = (fs::temp_directory_path() / "pentagon_retract_test.sol").string();
    CHECK(run({"retract", "canonical(3,1,1)", "--out", out}).code == 0);
    CHECK(slurp(out) == slurp(golden("retract_canonical_3_1_1.sol")));
    fs::remove(out);
  }

  TEST_CASE("json reports are schema stable and deterministic") {
    auto a = run({"--json", "enumerate", "--size", "4", "--up-to-iso", "--workers", "1"});
    auto b = run({"--json", "enumerate", "--size", "4", "--up-to-iso", "--workers", "4"});
    REQUIRE(a.code == 0);
    auto j = nlohmann::ordered_json::parse(a.out);
    std::vector<std::string> keys;
    for (auto const& [k, v] : j.items()) {
      keys.push_back(k);
    }
    CHECK(keys == std::vector<std::string>{"command", "inputs", "results", "elapsed_ms", "version"});
    CHECK(j["results"]["class_count"] == 6);
    CHECK(j["version"] == std::string(cli::version));
    CHECK(without_timing(a.out) == without_timing(b.out));

    auto h1 = run({"enumerate", "--size", "5", "--workers", "1"});
    auto h2 = run({"enumerate", "--size", "5", "--workers", "3"});
    CHECK(h1.out == h2.out);

    for (std::vector<std::string> args :
         {std::vector<std::string>{"--json", "verify", "identity(2)"},
          {"--json", "classify", "canonical(3,1,1)"}, {"--json", "sigma-search", "--n", "3"},
          {"--json", "growth", "canonical(2,1,0)", "--length", "6"},
          {"--json", "order", "group(C4)"}, {"--json", "retract", "irretractable(2)"}}) {
      auto r = run(args);
      CHECK(r.code == 0);
      auto p = nlohmann::ordered_json::parse(r.out);
      CHECK(p.size() == 5);
      CHECK(p.contains("elapsed_ms"));
      CHECK(without_timing(r.out) == without_timing(run(args).out));
    }
  }
}
