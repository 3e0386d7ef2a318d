#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pegsol/automaton.hpp"
#include "pegsol/board.hpp"
#include "pegsol/errors.hpp"
#include "pegsol/solver.hpp"

namespace pegsol {

// ---------------------------------------------------------------------------
// Minimum-peg reduction.
//
// A board reducible to k pegs splits into k stretches of cells, one per
// surviving peg.  Most stretches are reducible to one peg entirely within
// their own cells, but a bare peg pair ("11" with no adjacent hole of its
// own) can still be reduced by hopping into the neighboring stretch's edge
// cell once the neighbor has vacated it: the pair's survivor comes to rest
// one cell outside its own range.  Two restrictions make that exchange
// sound, and both are visible in small boards:
//
//   * the landing cell must not be the neighbor's own survivor cell, which
//     rules out lone-peg neighbors ("111" stays at three pegs);
//   * two adjacent bare pairs cannot hop into each other - each would wait
//     for the other to clear the landing cell first ("1111" stays at four).
//
// The recognizer below encodes those rules as a three-way interface between
// consecutive stretches.
// ---------------------------------------------------------------------------

// What the stretch just read hands to the stretch on its right.
enum class Boundary : std::uint8_t {
  Plain = 0,         // last cell unusable by the next stretch
  PegAvailable = 1,  // ends in a peg a bare pair to the right may hop onto
  BorrowPending = 2, // bare pair whose hop lands on the NEXT stretch's first
                     // cell: that stretch must start with a peg it will
                     // vacate, so not a lone peg and not a pair hopping left
};

// Recognizer for one stretch, with one entry state per left-boundary flavor
// and every accepting state tagged with the flavor it exports rightward.
// Entry states have no incoming transitions; stretch boundaries are the
// restart arcs of the layered graph below.
struct BlockAutomaton {
  Nfa nfa;
  std::array<State, 3> entry{};       // indexed by Boundary
  std::vector<std::uint8_t> exports;  // per state: 0 = none, else Boundary + 1

  State entry_for(Boundary b) const { return entry[static_cast<std::size_t>(b)]; }
};

// Process-wide immutable instance (built on first use).
const BlockAutomaton& block_automaton();

// The search space behind min_peg_partition, spelled out as a real graph.
// Vertex (state, position) means "the recognizer is in `state` after reading
// that many cells".  A symbol arc advances one cell; a restart arc jumps
// from an accepting state to the entry state matching its exported boundary
// flavor, inside the same layer, and marks a stretch boundary.
//
// The partition routine never materializes this graph - it scans it layer by
// layer in O(1) automaton space - but small instances can be built
// explicitly for inspection and tests.
struct LayeredDag {
  struct Arc {
    State from_state = 0;
    Index from_position = 0;
    State to_state = 0;
    Index to_position = 0;
    bool restart = false;
  };

  Index cell_count = 0;
  State state_count = 0;
  std::vector<Arc> arcs;

  std::size_t vertex_count() const {
    return static_cast<std::size_t>(state_count) *
           (static_cast<std::size_t>(cell_count) + 1);
  }
};

LayeredDag build_layered_dag(const Configuration& config, const BlockAutomaton& a);

enum class SegmentKind : std::uint8_t {
  SelfContained, // reduces to one peg within its own cells
  BorrowsLeft,   // bare pair; its survivor lands one cell left of the range
  BorrowsRight,  // bare pair; its survivor lands one cell right of the range
};

// "self-contained", "borrows-left", "borrows-right"
std::string to_string(SegmentKind kind);

struct PartitionResult {
  struct Stretch {
    Index start = 0;
    Index end = 0;
    SegmentKind kind = SegmentKind::SelfContained;

    friend bool operator==(const Stretch&, const Stretch&) = default;
  };

  // Minimum number of pegs the board can be reduced to.
  Index k = 0;
  // [start, end) cell ranges, left to right, partitioning the whole board.
  std::vector<Stretch> segments;
  // Arc count of the shortest start-to-finish path: cell_count + k.
  Index shortest_path_length = 0;
};

// Split the board into the fewest stretches whose reductions compose into a
// whole-board reduction to k pegs.  Ties are broken by making each segment,
// left to right, as long as optimality allows; a segment that could equally
// lend its edge peg or hop rightward prefers to lend.  Throws DomainError
// when the board has no pegs.
PartitionResult min_peg_partition(const Configuration& config, const BlockAutomaton& a);
PartitionResult min_peg_partition(const Configuration& config);

struct Segment {
  Index start = 0;
  Index end = 0;
  SegmentKind kind = SegmentKind::SelfContained;
  // Coordinates local to [start, end).  For SelfContained segments the plan
  // replays within the range; a Borrows* segment holds the pair's single
  // move, landing one cell outside it.
  Plan plan;

  friend bool operator==(const Segment&, const Segment&) = default;
};

struct SolveResult {
  Index k = 0;
  std::vector<Segment> segments;
  // All segment plans lifted to whole-board coordinates and ordered so every
  // borrowed landing cell is vacated before it is used: self-contained
  // segments left to right, then left-borrowing pairs left to right, then
  // right-borrowing pairs right to left.  Replays to exactly k pegs.
  Plan combined;
};

// Reduce any board to the minimum reachable number of pegs.  Total: a board
// with no pegs yields k = 0 and an empty plan.
SolveResult solve_min(const Configuration& config);

// {"k": 2, "segments": [{"start": 0, "end": 4, "kind": "self_contained",
//  "plan": {...}}, ...], "combined": {...}}
std::string to_json_string(const SolveResult& result);

// Human-oriented multi-line summary.
std::string to_text(const SolveResult& result);

} // namespace pegsol
