#include <doctest.h>

#include <json.hpp>
#include <vector>

#include "pegsol/automaton.hpp"
#include "pegsol/solver.hpp"
#include "sweep.hpp"

using namespace pegsol;

namespace {

// A representative grid over every family shape and parameter that matters.
std::vector<Family> family_grid() {
  std::vector<Family> out;
  for (const Orientation o : {Orientation::AsIs, Orientation::Mirrored}) {
    out.push_back({FamilyTag::Singleton, o, 0, 0, 0});
    out.push_back({FamilyTag::TwoPegsWithHole, o, 0, 0, 0});
    for (Index a = 0; a <= 3; ++a) out.push_back({FamilyTag::Stage1, o, a, 0, 0});
    for (Index a = 0; a <= 2; ++a)
      for (Index c = 0; c <= 2; ++c) out.push_back({FamilyTag::Stage2, o, a, 0, c});
    for (Index a = 0; a <= 2; ++a)
      for (Index b = 1; b <= 2; ++b)
        for (Index c = 0; c <= 2; ++c) out.push_back({FamilyTag::Stage3, o, a, b, c});
    for (Index a = 0; a <= 2; ++a)
      for (Index b = 0; b <= 2; ++b) out.push_back({FamilyTag::Stage4, o, a, b, 0});
    for (Index a = 0; a <= 1; ++a)
      for (Index b = 0; b <= 1; ++b)
        for (Index c = 0; c <= 1; ++c) out.push_back({FamilyTag::Stage5, o, a, b, c});
  }
  return out;
}

} // namespace

TEST_SUITE("solver") {

  TEST_CASE("family shapes render to their documented strings") {
    CHECK(render({FamilyTag::Singleton, Orientation::AsIs, 0, 0, 0}).to_string() == "1");
    CHECK(render({FamilyTag::TwoPegsWithHole, Orientation::AsIs, 0, 0, 0}).to_string() == "110");
    CHECK(render({FamilyTag::TwoPegsWithHole, Orientation::Mirrored, 0, 0, 0}).to_string() ==
          "011");
    CHECK(render({FamilyTag::Stage1, Orientation::AsIs, 0, 0, 0}).to_string() == "1011");
    CHECK(render({FamilyTag::Stage1, Orientation::AsIs, 1, 0, 0}).to_string() == "101011");
    CHECK(render({FamilyTag::Stage2, Orientation::AsIs, 0, 0, 0}).to_string() == "110011");
    CHECK(render({FamilyTag::Stage3, Orientation::AsIs, 0, 1, 0}).to_string() == "11110011");
    CHECK(render({FamilyTag::Stage4, Orientation::AsIs, 0, 0, 0}).to_string() == "1101");
    CHECK(render({FamilyTag::Stage5, Orientation::AsIs, 0, 0, 0}).to_string() == "11101111");
    CHECK_THROWS_AS(render({FamilyTag::Stage3, Orientation::AsIs, 0, 0, 0}), DomainError);
    CHECK_THROWS_AS(render({FamilyTag::Stage1, Orientation::AsIs, -1, 0, 0}), DomainError);
  }

  TEST_CASE("classification inverts rendering on the whole grid") {
    for (const Family& f : family_grid()) {
      const Configuration board = render(f);
      CAPTURE(board.to_string());
      if (f.tag == FamilyTag::TwoPegsWithHole) continue; // matched by the fewest-pegs path only
      const Family g = classify(board);
      // Some strings match more than one description; what must hold is that
      // the chosen description denotes the same cells.
      CHECK(render(g) == board);
    }
  }

  TEST_CASE("classification validates its input") {
    CHECK_THROWS_AS(classify(Configuration::parse("011")), DomainError);
    CHECK_THROWS_AS(classify(Configuration::parse("0")), DomainError);
    CHECK_THROWS_AS(classify(Configuration::parse("11")), NotClassifiableError);
    CHECK(!try_classify(Configuration::parse("11")).has_value());
    CHECK(try_classify(Configuration::parse("1011")).has_value());
  }

  TEST_CASE("growth recipes rebuild their family from a single peg") {
    for (const Family& f : family_grid()) {
      const Configuration board = render(f);
      CAPTURE(board.to_string());
      const UnhopScript script = unhop_script(f);
      REQUIRE(script.board_length == board.size());
      REQUIRE(script.unhops.size() ==
              static_cast<std::size_t>(board.peg_count() - 1));
      REQUIRE(replay_unhops(script.board_length, script.start_peg, script.unhops) == board);
    }
  }

  TEST_CASE("documented boards reduce to one peg") {
    const char* good[] = {"1",           "011",          "110",          "1101",
                          "1011",        "1010101011",   "110010101011", "111111110011",
                          "111111101111", "111111111101"};
    for (const char* s : good) {
      CAPTURE(s);
      const Configuration c = Configuration::parse(s);
      const Plan plan = solve_single(c);
      CHECK(plan.initial == c);
      CHECK(plan.final_pegs == 1);
      CHECK(plan.moves.size() == static_cast<std::size_t>(c.peg_count() - 1));
      CHECK(replay_moves(c, plan.moves).peg_count() == 1);
    }
  }

  TEST_CASE("stuck boards are reported unsolvable") {
    for (const char* s : {"11", "1111", "0", "000", "101", "111"}) {
      CAPTURE(s);
      CHECK_THROWS_AS(solve_single(Configuration::parse(s)), UnsolvableError);
    }
  }

  TEST_CASE("a single peg needs no moves") {
    const Plan plan = solve_single(Configuration::parse("00100"));
    CHECK(plan.moves.empty());
    CHECK(to_text(plan).empty());
  }

  TEST_CASE("every board up to length 11 is solved or rejected, matching the recognizer") {
    testutil::for_each_board(11, [](const Configuration& c) {
      if (accepts(c)) {
        const Plan plan = solve_single(c);
        REQUIRE(plan.moves.size() == static_cast<std::size_t>(c.peg_count() - 1));
        REQUIRE(replay_moves(c, plan.moves).peg_count() == 1);
      } else {
        REQUIRE_THROWS_AS(solve_single(c), UnsolvableError);
      }
    });
  }

  TEST_CASE("mirroring a plan solves the mirrored board, up to length 10") {
    testutil::for_each_board(10, [](const Configuration& c) {
      if (!accepts(c)) return;
      const Plan plan = solve_single(c);
      std::vector<Move> flipped;
      for (const Move m : plan.moves) flipped.push_back(mirrored(m, c.size()));
      REQUIRE(replay_moves(c.reversed(), flipped).peg_count() == 1);
    });
  }

  TEST_CASE("plan json round trips") {
    const Configuration c = Configuration::parse("110101");
    const Plan plan = solve_single(c);
    const nlohmann::json j = nlohmann::json::parse(to_json_string(plan));
    CHECK(j["initial"] == "110101");
    CHECK(j["final_pegs"] == 1);
    REQUIRE(j["moves"].is_array());
    std::vector<Move> rebuilt;
    for (const auto& jm : j["moves"]) {
      const std::string dir = jm["dir"];
      REQUIRE((dir == "L" || dir == "R"));
      rebuilt.push_back(Move{jm["from"].get<Index>(),
                             dir == "L" ? Direction::Left : Direction::Right});
    }
    CHECK(rebuilt == plan.moves);
    CHECK(replay_moves(c, rebuilt).peg_count() == 1);
  }

  TEST_CASE("plan text is the space-separated move list") {
    const Plan plan = solve_single(Configuration::parse("1101"));
    CHECK(to_text(plan) == "0R 3L");
  }
}
