#ifndef PEGSOL_BOARD_HPP
#define PEGSOL_BOARD_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pegsol/errors.hpp"

namespace pegsol {

using Index = std::int64_t;

enum class Cell : std::uint8_t { Hole = 0, Peg = 1 };

// Left before Right so that (from, dir) pairs sort the same way their
// text forms ("3L" < "3R") do.
enum class Direction : std::uint8_t { Left = 0, Right = 1 };

constexpr Index delta(Direction d) { return d == Direction::Left ? -1 : +1; }
constexpr Direction opposite(Direction d) {
  return d == Direction::Left ? Direction::Right : Direction::Left;
}
constexpr char dir_char(Direction d) { return d == Direction::Left ? 'L' : 'R'; }

// A hop: the peg at `from` jumps over the adjacent peg at from+d and lands
// in the hole at from+2d; the jumped peg is removed.
struct Move {
  Index from = 0;
  Direction dir = Direction::Left;
  friend auto operator<=>(const Move&, const Move&) = default;
};

// The time-reversal of a hop: the peg at `at` vacates its cell and two pegs
// appear at at+d and at+2d (both previously holes).
struct Unhop {
  Index at = 0;
  Direction dir = Direction::Left;
  friend auto operator<=>(const Unhop&, const Unhop&) = default;
};

// A finite strip of cells.  The string is the whole board: there are no
// implicit holes beyond either end, so "11" is stuck while "011" is not.
class Configuration {
public:
  Configuration() = default;
  explicit Configuration(std::vector<Cell> cells) : cells_(std::move(cells)) {}

  // Strict text form: '0' = hole, '1' = peg; anything else (or "") is a ParseError.
  static Configuration parse(std::string_view text);

  Index size() const { return static_cast<Index>(cells_.size()); }
  bool empty() const { return cells_.empty(); }
  Cell at(Index i) const { return cells_[static_cast<std::size_t>(i)]; }
  bool peg(Index i) const { return at(i) == Cell::Peg; }
  bool in_bounds(Index i) const { return i >= 0 && i < size(); }
  std::span<const Cell> cells() const { return cells_; }

  Index peg_count() const;
  std::string to_string() const;
  Configuration reversed() const;

  // Mutating fast path used by replay loops and the instance generator;
  // the named operations below stay pure.
  void set(Index i, Cell c) { cells_[static_cast<std::size_t>(i)] = c; }

  friend bool operator==(const Configuration&, const Configuration&) = default;

private:
  std::vector<Cell> cells_;
};

struct TrimResult {
  Configuration config; // cells from the first peg through the last peg
  Index offset = 0;     // index of the first peg in the original board
};

// Window from the first peg to the last peg.  All-hole boards trim to the
// empty configuration with offset 0.
TrimResult trim(const Configuration& c);

// nullopt when legal, otherwise the first violated clause
// (checked in the order: bounds, jumper, victim, landing).
std::optional<MoveViolation> move_violation(const Configuration& c, Move m);
std::optional<UnhopViolation> unhop_violation(const Configuration& c, Unhop u);

bool is_legal(const Configuration& c, Move m);
bool is_legal(const Configuration& c, Unhop u);

// All legal hops in ascending (from, dir) order.
std::vector<Move> legal_moves(const Configuration& c);

// Pure: return the successor board, throwing on an illegal move/unhop.
Configuration apply_move(const Configuration& c, Move m);
Configuration apply_unhop(const Configuration& c, Unhop u);

// In-place equivalents (same legality checks, no copy).
void apply_move_in_place(Configuration& c, Move m);
void apply_unhop_in_place(Configuration& c, Unhop u);

// The unhop that restores c after apply_move(c, m), and vice versa.
constexpr Unhop inverse(Move m) { return Unhop{m.from + 2 * delta(m.dir), opposite(m.dir)}; }
constexpr Move inverse(Unhop u) { return Move{u.at + 2 * delta(u.dir), opposite(u.dir)}; }

// Index-mirror on a board of the given length.
constexpr Move mirrored(Move m, Index board_length) {
  return Move{board_length - 1 - m.from, opposite(m.dir)};
}
constexpr Unhop mirrored(Unhop u, Index board_length) {
  return Unhop{board_length - 1 - u.at, opposite(u.dir)};
}

// Replay helpers; both validate every step.
Configuration replay_moves(const Configuration& start, std::span<const Move> moves);
Configuration replay_unhops(Index board_length, Index start_peg, std::span<const Unhop> unhops);

// Text forms: "3L"; peg_count, parse_config aliases for the operation names.
std::string to_string(Move m);
std::string to_string(Unhop u);
Move parse_move(std::string_view text);

inline Configuration parse_config(std::string_view text) { return Configuration::parse(text); }
inline Index peg_count(const Configuration& c) { return c.peg_count(); }
inline Configuration reverse(const Configuration& c) { return c.reversed(); }

} // namespace pegsol

#endif
