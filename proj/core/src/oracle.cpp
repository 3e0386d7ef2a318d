#include "pegsol/oracle.hpp"

#include <bit>
#include <sstream>
#include <string>

namespace pegsol {

namespace {

// Boards are memoized as bits 0..len-1 plus a marker bit at `len`, so equal
// peg patterns of different lengths never collide.  Caps boards at 63 cells.
std::uint64_t pack(const std::vector<Cell>& cells) {
  std::uint64_t key = 1ull << cells.size();
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i] == Cell::Peg) key |= 1ull << i;
  return key;
}

} // namespace

Index Oracle::search(std::vector<Cell>& cells, Index pegs) {
  if (pegs <= 1) return pegs;
  std::uint64_t key = 0;
  if (options_.use_cache) {
    key = pack(cells);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }

  Index best = pegs; // no hop legal: the board stays as it is
  const Index n = static_cast<Index>(cells.size());
  for (Index from = 0; from < n && best > 1; ++from) {
    if (cells[static_cast<std::size_t>(from)] != Cell::Peg) continue;
    for (Direction dir : {Direction::Left, Direction::Right}) {
      const Index over = from + delta(dir);
      const Index to = from + 2 * delta(dir);
      if (to < 0 || to >= n) continue;
      if (cells[static_cast<std::size_t>(over)] != Cell::Peg ||
          cells[static_cast<std::size_t>(to)] != Cell::Hole)
        continue;
      cells[static_cast<std::size_t>(from)] = Cell::Hole;
      cells[static_cast<std::size_t>(over)] = Cell::Hole;
      cells[static_cast<std::size_t>(to)] = Cell::Peg;
      best = std::min(best, search(cells, pegs - 1));
      cells[static_cast<std::size_t>(from)] = Cell::Peg;
      cells[static_cast<std::size_t>(over)] = Cell::Peg;
      cells[static_cast<std::size_t>(to)] = Cell::Hole;
      if (best == 1) break; // one peg is the floor; the value is already exact
    }
  }

  if (options_.use_cache) memo_.emplace(key, best);
  return best;
}

Index Oracle::search_config(const Configuration& config) {
  std::vector<Cell> cells(config.cells().begin(), config.cells().end());
  return search(cells, config.peg_count());
}

Index Oracle::min_pegs(const Configuration& config) {
  if (config.size() > 63)
    throw SizeGuardError("exhaustive search supports boards of at most 63 cells");
  if (config.size() > options_.max_length && !options_.override_size_guard) {
    std::ostringstream os;
    os << "board of " << config.size() << " cells exceeds the exhaustive-search guard of "
       << options_.max_length << "; enable the override to search anyway";
    throw SizeGuardError(os.str());
  }
  return search_config(config);
}

bool Oracle::solvable(const Configuration& config) { return min_pegs(config) == 1; }

std::uint64_t Oracle::count_classes(int n, Index maxlen) {
  if (n < 1) throw DomainError("peg count must be at least 1");
  if (maxlen < n) throw DomainError("maxlen must be at least the peg count");
  if (maxlen + 1 > 63)
    throw SizeGuardError("exhaustive search supports boards of at most 63 cells");
  if (maxlen + 1 > options_.max_length && !options_.override_size_guard) {
    std::ostringstream os;
    os << "counting up to length " << maxlen << " pads boards to " << (maxlen + 1)
       << " cells, exceeding the exhaustive-search guard of " << options_.max_length
       << "; enable the override to search anyway";
    throw SizeGuardError(os.str());
  }

  auto solvable_with_room = [&](const std::string& t) {
    std::vector<Cell> cells;
    cells.reserve(t.size() + 2);
    for (char ch : t) cells.push_back(ch == '1' ? Cell::Peg : Cell::Hole);
    const Index pegs = static_cast<Index>(n);
    if (search(cells, pegs) == 1) return true;
    cells.insert(cells.begin(), Cell::Hole);
    if (search(cells, pegs) == 1) return true;
    cells.erase(cells.begin());
    cells.push_back(Cell::Hole);
    return search(cells, pegs) == 1;
  };

  std::uint64_t count = 0;
  if (n == 1 && maxlen >= 1 && solvable_with_room("1")) ++count;
  if (n < 2) return count;

  // Trimmed strings begin and end with a peg; enumerate the interiors.
  for (Index len = n; len <= maxlen; ++len) {
    if (len < 2) continue;
    const int interior = static_cast<int>(len) - 2;
    const std::uint64_t top = 1ull << interior;
    for (std::uint64_t mask = 0; mask < top; ++mask) {
      if (std::popcount(mask) != n - 2) continue;
      std::string t(static_cast<std::size_t>(len), '0');
      t.front() = '1';
      t.back() = '1';
      for (int b = 0; b < interior; ++b)
        if (mask >> b & 1) t[static_cast<std::size_t>(1 + b)] = '1';
      if (solvable_with_room(t)) ++count;
    }
  }
  return count;
}

namespace {

Oracle& shared_oracle() {
  static Oracle instance;
  return instance;
}

} // namespace

Index oracle_min_pegs(const Configuration& config) { return shared_oracle().min_pegs(config); }

bool oracle_solvable(const Configuration& config) { return shared_oracle().solvable(config); }

std::uint64_t oracle_count_classes(int n, Index maxlen) {
  return shared_oracle().count_classes(n, maxlen);
}

std::uint64_t oracle_count_classes(int n) { return shared_oracle().count_classes(n); }

} // namespace pegsol
