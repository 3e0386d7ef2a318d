#include "pegsol/generate.hpp"

#include <random>
#include <vector>

namespace pegsol {

Configuration generate_solvable(Index length, std::uint64_t seed) {
  if (length < 1) throw DomainError("board length must be at least 1");
  std::mt19937_64 rng(seed);

  std::vector<Cell> cells(static_cast<std::size_t>(length), Cell::Hole);
  const Index start = static_cast<Index>(rng() % static_cast<std::uint64_t>(length));
  cells[static_cast<std::size_t>(start)] = Cell::Peg;

  auto legal = [&](Unhop u) {
    const Index near = u.at + delta(u.dir);
    const Index far = u.at + 2 * delta(u.dir);
    if (far < 0 || far >= length) return false;
    return cells[static_cast<std::size_t>(u.at)] == Cell::Peg &&
           cells[static_cast<std::size_t>(near)] == Cell::Hole &&
           cells[static_cast<std::size_t>(far)] == Cell::Hole;
  };

  // Bag of candidate unhops with lazy deletion: entries may go stale when a
  // nearby unhop fires first, so legality is rechecked when drawn.  Any
  // unhop whose legality an application could have changed reads a cell
  // within two of the cells just rewritten, so refilling that window keeps
  // every legal unhop in the bag.
  std::vector<Unhop> bag;
  auto refill = [&](Index lo, Index hi) {
    for (Index at = std::max<Index>(lo, 0); at <= std::min(hi, length - 1); ++at) {
      for (Direction dir : {Direction::Left, Direction::Right}) {
        Unhop u{at, dir};
        if (legal(u)) bag.push_back(u);
      }
    }
  };
  refill(start - 2, start + 2);

  while (!bag.empty()) {
    const std::size_t pick = static_cast<std::size_t>(rng() % bag.size());
    std::swap(bag[pick], bag.back());
    const Unhop u = bag.back();
    bag.pop_back();
    if (!legal(u)) continue;
    const Index near = u.at + delta(u.dir);
    const Index far = u.at + 2 * delta(u.dir);
    cells[static_cast<std::size_t>(u.at)] = Cell::Hole;
    cells[static_cast<std::size_t>(near)] = Cell::Peg;
    cells[static_cast<std::size_t>(far)] = Cell::Peg;
    refill(std::min(u.at, far) - 2, std::max(u.at, far) + 2);
  }

  return Configuration(std::move(cells));
}

} // namespace pegsol
