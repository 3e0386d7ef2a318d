#pragma once

#include <cstdint>

#include "pegsol/board.hpp"
#include "pegsol/errors.hpp"

namespace pegsol {

// Grow a random solvable board of exactly `length` cells: start from one peg
// at a random cell and apply random legal unhops until none remains.  Every
// result is reducible back to a single peg by construction.  The same length
// and seed always produce the same board (the generator avoids
// implementation-defined distributions).
Configuration generate_solvable(Index length, std::uint64_t seed);

} // namespace pegsol
