#include <doctest.h>

#include <string>

#include "pegsol/automaton.hpp"
#include "pegsol/oracle.hpp"
#include "sweep.hpp"

using namespace pegsol;

TEST_SUITE("oracle") {

  TEST_CASE("ground truth on pinned boards") {
    Oracle oracle;
    const std::pair<const char*, Index> known[] = {
        {"1", 1},   {"11", 2},   {"111", 3},    {"1111", 4}, {"11110", 2},
        {"0", 0},   {"000", 0},  {"1011", 1},   {"101", 2},  {"110011", 1},
        {"11011", 2}, {"1110", 2},
    };
    for (const auto& [text, want] : known) {
      CAPTURE(text);
      CHECK(oracle.min_pegs(Configuration::parse(text)) == want);
    }
    CHECK(oracle.solvable(Configuration::parse("1011")));
    CHECK(!oracle.solvable(Configuration::parse("11")));
    CHECK(!oracle.solvable(Configuration::parse("000")));
  }

  TEST_CASE("memoization does not change answers") {
    Oracle cached;
    Oracle fresh(Oracle::Options{.use_cache = false, .max_length = 24,
                                 .override_size_guard = false});
    testutil::for_each_board(8, [&](const Configuration& c) {
      REQUIRE(cached.min_pegs(c) == fresh.min_pegs(c));
    });
    CHECK(cached.cache_size() > 0);
    CHECK(fresh.cache_size() == 0);
    cached.clear_cache();
    CHECK(cached.cache_size() == 0);
    CHECK(cached.min_pegs(Configuration::parse("1011")) == 1);
  }

  TEST_CASE("agrees with the recognizer on every board up to length 10") {
    Oracle oracle;
    testutil::for_each_board(10, [&](const Configuration& c) {
      REQUIRE(oracle.solvable(c) == accepts(c));
    });
  }

  TEST_CASE("class counting matches the closed-form counts") {
    CHECK(oracle_count_classes(1) == 1);
    CHECK(oracle_count_classes(2) == 1);
    CHECK(oracle_count_classes(3) == 2);
    CHECK(oracle_count_classes(4) == 3);
    CHECK(oracle_count_classes(5) == 6);
    for (int n = 1; n <= 5; ++n) {
      CAPTURE(n);
      CHECK(oracle_count_classes(n) == count_solvable(n));
    }
    // A wider window finds no additional classes: every solvable class with
    // n pegs already fits in 2n + 2 cells.
    CHECK(oracle_count_classes(4, 12) == 3);
  }

  TEST_CASE("the size guard protects the exhaustive search") {
    std::string wide(25, '0');
    wide[0] = '1';
    Oracle guarded;
    CHECK_THROWS_AS(guarded.min_pegs(Configuration::parse(wide)), SizeGuardError);
    CHECK_THROWS_AS(oracle_count_classes(2, 24), SizeGuardError);

    Oracle open(Oracle::Options{.use_cache = true, .max_length = 24,
                                .override_size_guard = true});
    CHECK(open.min_pegs(Configuration::parse(wide)) == 1);
    Oracle wider(Oracle::Options{.use_cache = true, .max_length = 30,
                                 .override_size_guard = false});
    CHECK(wider.min_pegs(Configuration::parse(wide)) == 1);
  }
}
