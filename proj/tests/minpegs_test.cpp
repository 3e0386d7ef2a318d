#include <doctest.h>

#include <json.hpp>
#include <string>
#include <vector>

#include "pegsol/minpegs.hpp"
#include "pegsol/oracle.hpp"
#include "sweep.hpp"

using namespace pegsol;

namespace {

void check_segments_tile(const Configuration& c, const SolveResult& r) {
  Index cursor = 0;
  for (const Segment& seg : r.segments) {
    REQUIRE(seg.start == cursor);
    REQUIRE(seg.end > seg.start);
    cursor = seg.end;
    REQUIRE(seg.plan.initial.to_string() ==
            c.to_string().substr(static_cast<std::size_t>(seg.start),
                                 static_cast<std::size_t>(seg.end - seg.start)));
  }
  REQUIRE(cursor == c.size());
  REQUIRE(r.segments.size() == static_cast<std::size_t>(r.k));
}

} // namespace

TEST_SUITE("minpegs") {

  TEST_CASE("the segment automaton is well formed") {
    const BlockAutomaton& a = block_automaton();
    CHECK(a.nfa.state_count() == 214);
    CHECK(a.entry[0] != a.entry[1]);
    CHECK(a.entry[1] != a.entry[2]);
    CHECK(a.entry[0] != a.entry[2]);
    CHECK(a.entry_for(Boundary::Plain) == a.entry[0]);
    CHECK(a.entry_for(Boundary::PegAvailable) == a.entry[1]);
    CHECK(a.entry_for(Boundary::BorrowPending) == a.entry[2]);
    REQUIRE(a.exports.size() == static_cast<std::size_t>(a.nfa.state_count()));
    for (State q = 0; q < a.nfa.state_count(); ++q) {
      REQUIRE(a.exports[static_cast<std::size_t>(q)] <= 3);
      REQUIRE(a.nfa.accepting(q) == (a.exports[static_cast<std::size_t>(q)] != 0));
    }
  }

  TEST_CASE("fewest reachable pegs on pinned boards") {
    const std::pair<const char*, Index> known[] = {
        {"1", 1},     {"11", 2},     {"111", 3},       {"1111", 4},
        {"11110", 2}, {"1110", 2},   {"110011", 1},    {"11011", 2},
        {"0", 0},     {"000", 0},    {"101", 2},       {"111101111", 2},
        {"1011", 1},  {"10101", 3},  {"110110011", 2},
    };
    for (const auto& [text, want] : known) {
      CAPTURE(text);
      CHECK(solve_min(Configuration::parse(text)).k == want);
    }
  }

  TEST_CASE("11011 splits into the documented segments") {
    const Configuration c = Configuration::parse("11011");
    const SolveResult r = solve_min(c);
    REQUIRE(r.k == 2);
    REQUIRE(r.segments.size() == 2);
    CHECK(r.segments[0].start == 0);
    CHECK(r.segments[0].end == 4);
    CHECK(r.segments[0].kind == SegmentKind::SelfContained);
    CHECK(r.segments[0].plan.initial.to_string() == "1101");
    CHECK(r.segments[1].start == 4);
    CHECK(r.segments[1].end == 5);
    CHECK(r.segments[1].plan.initial.to_string() == "1");
    CHECK(to_text(r.combined) == "0R 3L");
    CHECK(replay_moves(c, r.combined.moves).peg_count() == 2);
  }

  TEST_CASE("a bare pair can borrow a landing cell from its neighbour") {
    const Configuration c = Configuration::parse("11110");
    const SolveResult r = solve_min(c);
    REQUIRE(r.k == 2);
    REQUIRE(r.segments.size() == 2);
    CHECK(r.segments[0].start == 0);
    CHECK(r.segments[0].end == 2);
    CHECK(r.segments[0].kind == SegmentKind::BorrowsRight);
    CHECK(r.segments[0].plan.initial.to_string() == "11");
    CHECK(r.segments[1].start == 2);
    CHECK(r.segments[1].end == 5);
    CHECK(r.segments[1].kind == SegmentKind::SelfContained);
    // The untouched neighbour reduces first, freeing the cell the pair needs.
    CHECK(to_text(r.combined) == "2R 0R");
    const Configuration end = replay_moves(c, r.combined.moves);
    CHECK(end.peg_count() == 2);
    CHECK(end.to_string() == "00101");
  }

  TEST_CASE("segment kinds have readable names in text and json") {
    CHECK(to_string(SegmentKind::SelfContained) == "self-contained");
    CHECK(to_string(SegmentKind::BorrowsLeft) == "borrows-left");
    CHECK(to_string(SegmentKind::BorrowsRight) == "borrows-right");

    const nlohmann::json j =
        nlohmann::json::parse(to_json_string(solve_min(Configuration::parse("11110"))));
    CHECK(j["k"] == 2);
    REQUIRE(j["segments"].size() == 2);
    CHECK(j["segments"][0]["kind"] == "borrows_right");
    CHECK(j["segments"][0]["plan"]["initial"] == "11");
    CHECK(j["segments"][1]["kind"] == "self_contained");
    CHECK(j["combined"]["final_pegs"] == 2);
    CHECK(j["combined"]["initial"] == "11110");
  }

  TEST_CASE("the layered graph has one copy of the automaton per cell boundary") {
    const Configuration c = Configuration::parse("11011");
    const BlockAutomaton& a = block_automaton();
    const LayeredDag dag = build_layered_dag(c, a);
    CHECK(dag.cell_count == 5);
    CHECK(dag.state_count == a.nfa.state_count());
    CHECK(dag.vertex_count() == static_cast<std::int64_t>(6) * a.nfa.state_count());
    REQUIRE(!dag.arcs.empty());
    for (const auto& arc : dag.arcs) {
      REQUIRE(arc.from_state >= 0);
      REQUIRE(arc.from_state < dag.state_count);
      REQUIRE(arc.to_state >= 0);
      REQUIRE(arc.to_state < dag.state_count);
      REQUIRE(arc.from_position >= 0);
      REQUIRE(arc.to_position <= dag.cell_count);
      if (arc.restart) {
        REQUIRE(arc.to_position == arc.from_position);
        const bool is_entry = arc.to_state == a.entry[0] || arc.to_state == a.entry[1] ||
                              arc.to_state == a.entry[2];
        REQUIRE(is_entry);
      } else {
        REQUIRE(arc.to_position == arc.from_position + 1);
      }
    }
  }

  TEST_CASE("partitions match exhaustive search on every board up to length 10") {
    Oracle oracle;
    testutil::for_each_board(10, [&](const Configuration& c) {
      const Index truth = oracle.min_pegs(c);
      const SolveResult r = solve_min(c);
      CAPTURE(c.to_string());
      REQUIRE(r.k == truth);
      if (c.peg_count() > 0) {
        const PartitionResult p = min_peg_partition(c);
        REQUIRE(p.k == truth);
        REQUIRE(p.shortest_path_length == c.size() + p.k);
        check_segments_tile(c, r);
      }
      REQUIRE(r.combined.moves.size() ==
              static_cast<std::size_t>(c.peg_count() - truth));
      REQUIRE(replay_moves(c, r.combined.moves).peg_count() == truth);
    });
  }

  TEST_CASE("joining two boards never needs more pegs than solving them apart") {
    testutil::for_each_board(7, [&](const Configuration& left) {
      const Index kl = solve_min(left).k;
      const std::string ls = left.to_string();
      testutil::for_each_board(8 - static_cast<int>(left.size()),
                               [&](const Configuration& right) {
                                 const Index kr = solve_min(right).k;
                                 const Configuration both =
                                     Configuration::parse(ls + right.to_string());
                                 REQUIRE(solve_min(both).k <= kl + kr);
                               });
    });
  }

  TEST_CASE("a board with no pegs needs no moves, and the partition rejects it") {
    const SolveResult r = solve_min(Configuration::parse("0000"));
    CHECK(r.k == 0);
    CHECK(r.segments.empty());
    CHECK(r.combined.moves.empty());
    CHECK_THROWS_AS(min_peg_partition(Configuration::parse("0000")), DomainError);
  }
}
