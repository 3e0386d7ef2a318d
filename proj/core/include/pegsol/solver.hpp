#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pegsol/board.hpp"
#include "pegsol/errors.hpp"

namespace pegsol {

// The solvable configurations, once trimmed, fall into a handful of shapes;
// each shape comes with a mechanical recipe that grows it from a single peg
// by unhops.  Reading the recipe backwards plays the board down to one peg.
//
// Shapes, written for the AsIs orientation (Mirrored means the reverse):
//   Singleton         1
//   TwoPegsWithHole   110            (needs the hole next to the pair)
//   Stage1            10(10)^a 11
//   Stage2            11(01)^a 00(10)^c 11
//   Stage3            11(01)^a (11)^b 00(10)^c 11     with b >= 1
//   Stage4            11(01)^a (11)^b 01
//   Stage5            11(01)^a (11)^b 1011(10)^c 11
enum class FamilyTag : std::uint8_t {
  Singleton,
  TwoPegsWithHole,
  Stage1,
  Stage2,
  Stage3,
  Stage4,
  Stage5,
};

enum class Orientation : std::uint8_t { AsIs, Mirrored };

struct Family {
  FamilyTag tag = FamilyTag::Singleton;
  Orientation orientation = Orientation::AsIs;
  // Repetition counts, one per starred group, in left-to-right order of the
  // AsIs pattern: a = (01) or leading (10) repeats, b = (11) repeats,
  // c = trailing (10) repeats.  Unused parameters stay zero.
  Index a = 0;
  Index b = 0;
  Index c = 0;

  friend bool operator==(const Family&, const Family&) = default;
};

std::string to_string(FamilyTag tag);
std::string to_string(const Family& family);

// The exact cell string the family shape denotes.
Configuration render(const Family& family);

// Match a trimmed, nonempty configuration against the shapes, trying
// Singleton then Stage1..Stage5 as written, then the same order against the
// reversed string (orientation Mirrored).  TwoPegsWithHole is never returned
// here: a bare "11" has no room to move and is reported not classifiable.
// Throws NotClassifiableError when nothing matches.
Family classify(const Configuration& trimmed);

// Nonthrowing variant of classify.
std::optional<Family> try_classify(const Configuration& trimmed);

// Growth recipe for a family: starting from a board of board_length holes
// with a single peg at start_peg, applying the unhops in order produces
// exactly render(family).  Recipe length is peg count minus one.
struct UnhopScript {
  Index board_length = 0;
  Index start_peg = 0;
  std::vector<Unhop> unhops;
};

UnhopScript unhop_script(const Family& family);

// An executable reduction: replaying moves from initial never errors and
// ends with exactly final_pegs pegs; moves.size() == peg_count - final_pegs.
struct Plan {
  Configuration initial;
  std::vector<Move> moves;
  Index final_pegs = 1;

  friend bool operator==(const Plan&, const Plan&) = default;
};

// Reduce a solvable configuration to a single peg.  Moves are expressed in
// the input's own coordinates.  Throws UnsolvableError when the
// configuration is not solvable.
Plan solve_single(const Configuration& config);

// {"initial": "...", "final_pegs": 1, "moves": [{"from": 3, "dir": "L"}, ...]}
std::string to_json_string(const Plan& plan);

// Space-separated move list, e.g. "3L 0R"; empty string for no moves.
std::string to_text(const Plan& plan);

} // namespace pegsol
