#include "pegsol/board.hpp"

#include <sstream>

namespace pegsol {

Configuration Configuration::parse(std::string_view text) {
  if (text.empty()) throw ParseError("configuration text is empty");
  std::vector<Cell> cells;
  cells.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '0') {
      cells.push_back(Cell::Hole);
    } else if (ch == '1') {
      cells.push_back(Cell::Peg);
    } else {
      std::ostringstream msg;
      msg << "bad character '" << ch << "' at position " << i << " (want '0' or '1')";
      throw ParseError(msg.str());
    }
  }
  return Configuration(std::move(cells));
}

Index Configuration::peg_count() const {
  Index n = 0;
  for (Cell c : cells_) n += (c == Cell::Peg);
  return n;
}

std::string Configuration::to_string() const {
  std::string s(cells_.size(), '0');
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i] == Cell::Peg) s[i] = '1';
  return s;
}

Configuration Configuration::reversed() const {
  std::vector<Cell> cells(cells_.rbegin(), cells_.rend());
  return Configuration(std::move(cells));
}

TrimResult trim(const Configuration& c) {
  Index first = -1, last = -1;
  for (Index i = 0; i < c.size(); ++i) {
    if (c.peg(i)) {
      if (first < 0) first = i;
      last = i;
    }
  }
  if (first < 0) return TrimResult{Configuration{}, 0};
  std::vector<Cell> cells(c.cells().begin() + first, c.cells().begin() + last + 1);
  return TrimResult{Configuration(std::move(cells)), first};
}

std::optional<MoveViolation> move_violation(const Configuration& c, Move m) {
  Index d = delta(m.dir);
  if (!c.in_bounds(m.from) || !c.in_bounds(m.from + 2 * d)) return MoveViolation::OutOfBounds;
  if (!c.peg(m.from)) return MoveViolation::JumperMissing;
  if (!c.peg(m.from + d)) return MoveViolation::VictimMissing;
  if (c.peg(m.from + 2 * d)) return MoveViolation::LandingOccupied;
  return std::nullopt;
}

std::optional<UnhopViolation> unhop_violation(const Configuration& c, Unhop u) {
  Index d = delta(u.dir);
  if (!c.in_bounds(u.at) || !c.in_bounds(u.at + 2 * d)) return UnhopViolation::OutOfBounds;
  if (!c.peg(u.at)) return UnhopViolation::PegMissing;
  if (c.peg(u.at + d)) return UnhopViolation::NearCellOccupied;
  if (c.peg(u.at + 2 * d)) return UnhopViolation::FarCellOccupied;
  return std::nullopt;
}

bool is_legal(const Configuration& c, Move m) { return !move_violation(c, m); }
bool is_legal(const Configuration& c, Unhop u) { return !unhop_violation(c, u); }

std::vector<Move> legal_moves(const Configuration& c) {
  std::vector<Move> out;
  for (Index i = 0; i < c.size(); ++i) {
    for (Direction d : {Direction::Left, Direction::Right}) {
      Move m{i, d};
      if (is_legal(c, m)) out.push_back(m);
    }
  }
  return out;
}

namespace {

[[noreturn]] void throw_illegal(const Configuration& c, Move m, MoveViolation v) {
  std::ostringstream msg;
  msg << "illegal move " << to_string(m) << " on \"" << c.to_string() << "\": ";
  switch (v) {
    case MoveViolation::OutOfBounds: msg << "cells off the board"; break;
    case MoveViolation::JumperMissing: msg << "no peg to move"; break;
    case MoveViolation::VictimMissing: msg << "no adjacent peg to jump"; break;
    case MoveViolation::LandingOccupied: msg << "landing cell is not a hole"; break;
  }
  throw IllegalMoveError(v, msg.str());
}

[[noreturn]] void throw_illegal(const Configuration& c, Unhop u, UnhopViolation v) {
  std::ostringstream msg;
  msg << "illegal unhop " << to_string(u) << " on \"" << c.to_string() << "\": ";
  switch (v) {
    case UnhopViolation::OutOfBounds: msg << "cells off the board"; break;
    case UnhopViolation::PegMissing: msg << "no peg to split"; break;
    case UnhopViolation::NearCellOccupied: msg << "adjacent cell is not a hole"; break;
    case UnhopViolation::FarCellOccupied: msg << "far cell is not a hole"; break;
  }
  throw IllegalUnhopError(v, msg.str());
}

} // namespace

void apply_move_in_place(Configuration& c, Move m) {
  if (auto v = move_violation(c, m)) throw_illegal(c, m, *v);
  Index d = delta(m.dir);
  c.set(m.from, Cell::Hole);
  c.set(m.from + d, Cell::Hole);
  c.set(m.from + 2 * d, Cell::Peg);
}

void apply_unhop_in_place(Configuration& c, Unhop u) {
  if (auto v = unhop_violation(c, u)) throw_illegal(c, u, *v);
  Index d = delta(u.dir);
  c.set(u.at, Cell::Hole);
  c.set(u.at + d, Cell::Peg);
  c.set(u.at + 2 * d, Cell::Peg);
}

Configuration apply_move(const Configuration& c, Move m) {
  Configuration out = c;
  apply_move_in_place(out, m);
  return out;
}

Configuration apply_unhop(const Configuration& c, Unhop u) {
  Configuration out = c;
  apply_unhop_in_place(out, u);
  return out;
}

Configuration replay_moves(const Configuration& start, std::span<const Move> moves) {
  Configuration c = start;
  for (Move m : moves) apply_move_in_place(c, m);
  return c;
}

Configuration replay_unhops(Index board_length, Index start_peg, std::span<const Unhop> unhops) {
  Configuration c(std::vector<Cell>(static_cast<std::size_t>(board_length), Cell::Hole));
  if (start_peg < 0 || start_peg >= board_length)
    throw DomainError("start peg off the board");
  c.set(start_peg, Cell::Peg);
  for (Unhop u : unhops) apply_unhop_in_place(c, u);
  return c;
}

std::string to_string(Move m) {
  return std::to_string(m.from) + dir_char(m.dir);
}

std::string to_string(Unhop u) {
  return std::to_string(u.at) + dir_char(u.dir);
}

Move parse_move(std::string_view text) {
  if (text.size() < 2) throw ParseError("move text too short: \"" + std::string(text) + "\"");
  char dc = text.back();
  Direction dir;
  if (dc == 'L') {
    dir = Direction::Left;
  } else if (dc == 'R') {
    dir = Direction::Right;
  } else {
    throw ParseError("move direction must be 'L' or 'R'");
  }
  Index from = 0;
  for (std::size_t i = 0; i + 1 < text.size(); ++i) {
    char ch = text[i];
    if (ch < '0' || ch > '9') throw ParseError("bad move index in \"" + std::string(text) + "\"");
    from = from * 10 + (ch - '0');
  }
  return Move{from, dir};
}

} // namespace pegsol
