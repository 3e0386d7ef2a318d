#ifndef PEGSOL_ERRORS_HPP
#define PEGSOL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pegsol {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad board text (characters other than '0'/'1', or empty input).
class ParseError : public Error {
public:
  using Error::Error;
};

// Which legality clause a rejected hop violated.
enum class MoveViolation {
  OutOfBounds,     // jumper, jumped cell, or landing cell off the board
  JumperMissing,   // cell(from) is not a peg
  VictimMissing,   // cell(from + d) is not a peg
  LandingOccupied, // cell(from + 2d) is not a hole
};

// Which legality clause a rejected unhop violated.
enum class UnhopViolation {
  OutOfBounds,      // source or either target cell off the board
  PegMissing,       // cell(at) is not a peg
  NearCellOccupied, // cell(at + d) is not a hole
  FarCellOccupied,  // cell(at + 2d) is not a hole
};

class IllegalMoveError : public Error {
public:
  IllegalMoveError(MoveViolation v, const std::string& what) : Error(what), violation(v) {}
  MoveViolation violation;
};

class IllegalUnhopError : public Error {
public:
  IllegalUnhopError(UnhopViolation v, const std::string& what) : Error(what), violation(v) {}
  UnhopViolation violation;
};

// Argument outside an operation's documented domain (e.g. count of
// configurations for n < 1, or an untrimmed input to classify()).
class DomainError : public Error {
public:
  using Error::Error;
};

// Board too large for the exhaustive reference search.
class SizeGuardError : public Error {
public:
  using Error::Error;
};

// solve_single() called on a configuration that cannot reach one peg.
class UnsolvableError : public Error {
public:
  using Error::Error;
};

// A trimmed configuration matching none of the solvable families.
class NotClassifiableError : public Error {
public:
  using Error::Error;
};

// An internal consistency check failed; indicates a bug, not bad input.
class InternalError : public Error {
public:
  using Error::Error;
};

} // namespace pegsol

#endif
