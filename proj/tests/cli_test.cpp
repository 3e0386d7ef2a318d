#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "pegsol/board.hpp"

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args, const std::string& input = "") {
  std::vector<const char*> argv;
  argv.push_back("pegsol");
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code =
      pegsol::cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return CliResult{code, out.str(), err.str()};
}

} // namespace

TEST_SUITE("cli") {

  TEST_CASE("check prints one word per board") {
    CliResult r = run_cli({"check", "1011"});
    CHECK(r.code == 0);
    CHECK(r.out == "solvable\n");
    CHECK(r.err.empty());

    r = run_cli({"check", "11"});
    CHECK(r.code == 0);
    CHECK(r.out == "unsolvable\n");

    r = run_cli({"check", "--json", "1011"});
    CHECK(r.code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["configuration"] == "1011");
    CHECK(j["solvable"] == true);
  }

  TEST_CASE("bad boards and bad usage exit with code 2") {
    CliResult r = run_cli({"check", "10x1"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(!r.err.empty());

    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"check", "1011", "--frobnicate"}).code == 2);
    CHECK(run_cli({"count"}).code == 2);
    CHECK(run_cli({"count", "zero"}).code == 2);
    CHECK(run_cli({"count", "0"}).code == 2);
    CHECK(run_cli({"verify", "--maxlen", "0"}).code == 2);
    CHECK(run_cli({"bench", "--len", "0"}).code == 2);
  }

  TEST_CASE("help goes to the output stream and exits cleanly") {
    const CliResult r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(!r.out.empty());
    CHECK(r.out.find("check") != std::string::npos);
  }

  TEST_CASE("solve prints a replayable move list or reports unsolvable") {
    CliResult r = run_cli({"solve", "1101"});
    CHECK(r.code == 0);
    CHECK(r.out == "0R 3L\n");

    r = run_cli({"solve", "11"});
    CHECK(r.code == 0);
    CHECK(r.out == "unsolvable\n");

    r = run_cli({"solve", "--json", "110101"});
    CHECK(r.code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["initial"] == "110101");
    CHECK(j["final_pegs"] == 1);
    pegsol::Configuration c = pegsol::Configuration::parse("110101");
    std::vector<pegsol::Move> moves;
    for (const auto& jm : j["moves"])
      moves.push_back(pegsol::Move{jm["from"].get<pegsol::Index>(),
                                   jm["dir"] == "L" ? pegsol::Direction::Left
                                                    : pegsol::Direction::Right});
    CHECK(pegsol::replay_moves(c, moves).peg_count() == 1);

    r = run_cli({"solve", "--json", "11"});
    CHECK(r.code == 0);
    const nlohmann::json ju = nlohmann::json::parse(r.out);
    CHECK(ju["configuration"] == "11");
    CHECK(ju["solvable"] == false);
  }

  TEST_CASE("min reports the documented segments for 11011") {
    CliResult r = run_cli({"min", "11011"});
    CHECK(r.code == 0);
    CHECK(r.out.find("k=2") == 0);
    CHECK(r.out.find("segment [0,4) 1101") != std::string::npos);
    CHECK(r.out.find("segment [4,5) 1") != std::string::npos);
    CHECK(r.out.find("combined: 0R 3L") != std::string::npos);

    r = run_cli({"min", "--json", "11011"});
    CHECK(r.code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["k"] == 2);
    REQUIRE(j["segments"].size() == 2);
    CHECK(j["segments"][0]["plan"]["initial"] == "1101");
    CHECK(j["segments"][1]["plan"]["initial"] == "1");
    CHECK(j["segments"][0]["kind"] == "self_contained");
  }

  TEST_CASE("min labels borrowed cells") {
    const CliResult r = run_cli({"min", "11110"});
    CHECK(r.code == 0);
    CHECK(r.out.find("k=2") == 0);
    CHECK(r.out.find("(borrows-right)") != std::string::npos);
  }

  TEST_CASE("count and enum report the class table") {
    CliResult r = run_cli({"count", "5"});
    CHECK(r.code == 0);
    CHECK(r.out == "6\n");

    r = run_cli({"count", "--json", "4"});
    CHECK(r.code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["n"] == 4);
    CHECK(j["count"] == 3);

    r = run_cli({"enum", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "101011\n110011\n110101\n");

    r = run_cli({"enum", "--json", "2"});
    CHECK(r.code == 0);
    const nlohmann::json je = nlohmann::json::parse(r.out);
    CHECK(je["n"] == 2);
    REQUIRE(je["configurations"].size() == 1);
    CHECK(je["configurations"][0] == "11");
  }

  TEST_CASE("oracle answers by exhaustive search") {
    CliResult r = run_cli({"oracle", "1011"});
    CHECK(r.code == 0);
    CHECK(r.out == "solvable\n");

    r = run_cli({"oracle", "--min", "11110"});
    CHECK(r.code == 0);
    CHECK(r.out == "2\n");

    r = run_cli({"oracle", "--min", "--json", "11110"});
    CHECK(r.code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["configuration"] == "11110");
    CHECK(j["min_pegs"] == 2);

    // 25 cells trips the size guard unless overridden.
    std::string wide(25, '0');
    wide[0] = '1';
    r = run_cli({"oracle", wide});
    CHECK(r.code == 2);
    CHECK(!r.err.empty());
    r = run_cli({"oracle", "--override-size-guard", wide});
    CHECK(r.code == 0);
    CHECK(r.out == "solvable\n");
  }

  TEST_CASE("with no board argument, boards stream one per line") {
    CliResult r = run_cli({"check"}, "1011\n11\n110101\n");
    CHECK(r.code == 0);
    CHECK(r.out == "solvable\nunsolvable\nsolvable\n");

    r = run_cli({"oracle", "--min"}, "1\n11\n111\n");
    CHECK(r.code == 0);
    CHECK(r.out == "1\n2\n3\n");

    // A bad line stops the batch with a usage error, after the good lines.
    r = run_cli({"check"}, "1011\nbogus\n110101\n");
    CHECK(r.code == 2);
    CHECK(r.out == "solvable\n");
    CHECK(!r.err.empty());
  }

  TEST_CASE("verify cross-checks the fast paths against the oracle") {
    CliResult r = run_cli({"verify", "--maxlen", "6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("all checks passed") != std::string::npos);

    r = run_cli({"verify", "--maxlen", "6", "--json"});
    CHECK(r.code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["maxlen"] == 6);
    CHECK(j["checked"] == 126); // 2^7 - 2 boards of length 1..6
    CHECK(j["membership_mismatches"] == 0);
    CHECK(j["min_pegs_mismatches"] == 0);
    CHECK(j["replay_failures"] == 0);
    CHECK(j["passed"] == true);
  }

  TEST_CASE("bench is reproducible for a fixed seed") {
    const CliResult a = run_cli({"bench", "--len", "300", "--seed", "5", "--json"});
    const CliResult b = run_cli({"bench", "--len", "300", "--seed", "5", "--json"});
    CHECK(a.code == 0);
    CHECK(b.code == 0);
    const nlohmann::json ja = nlohmann::json::parse(a.out);
    const nlohmann::json jb = nlohmann::json::parse(b.out);
    CHECK(ja["length"] == 300);
    CHECK(ja["seed"] == 5);
    CHECK(ja["pegs"] == jb["pegs"]);
    CHECK(ja["k"] == jb["k"]);
    CHECK(ja["solve_single_ms"].is_number());
    CHECK(ja["solve_min_ms"].is_number());

    const CliResult t = run_cli({"bench", "--len", "300", "--seed", "5"});
    CHECK(t.code == 0);
    CHECK(t.out.find("length=300") != std::string::npos);
    CHECK(t.out.find("solve_min_ms=") != std::string::npos);
  }
}
