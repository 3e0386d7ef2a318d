#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "pegsol/board.hpp"
#include "pegsol/errors.hpp"

namespace pegsol {

// Ground truth by exhaustive search: explores every hop sequence, memoizing
// on the exact cell string (boundaries matter for legality, so "11" and
// "011" are distinct keys).  Exponential in board length; guarded by a size
// cap that the caller must override explicitly to exceed.
class Oracle {
public:
  struct Options {
    bool use_cache = true;
    Index max_length = 24;
    bool override_size_guard = false;
  };

  Oracle() = default;
  explicit Oracle(Options options) : options_(options) {}

  // Fewest pegs any hop sequence can leave on the board; equals the peg
  // count when no hop is legal (in particular 0 for an all-hole board).
  Index min_pegs(const Configuration& config);

  // min_pegs == 1.
  bool solvable(const Configuration& config);

  // Number of distinct trimmed strings of length <= maxlen with n pegs that
  // are solvable once granted a single outside hole when they need one:
  // t counts when t, "0"+t, or t+"0" is solvable.  The two-peg class counts
  // once ("11" is the only trimmed two-peg candidate).
  std::uint64_t count_classes(int n, Index maxlen);
  std::uint64_t count_classes(int n) { return count_classes(n, 2 * static_cast<Index>(n) + 2); }

  std::size_t cache_size() const { return memo_.size(); }
  void clear_cache() { memo_.clear(); }

private:
  Index search(std::vector<Cell>& cells, Index pegs);
  Index search_config(const Configuration& config);

  Options options_;
  std::unordered_map<std::uint64_t, Index> memo_;
};

// Convenience wrappers over one shared process-wide Oracle with default
// options (single-threaded use).
Index oracle_min_pegs(const Configuration& config);
bool oracle_solvable(const Configuration& config);
std::uint64_t oracle_count_classes(int n, Index maxlen);
std::uint64_t oracle_count_classes(int n);

} // namespace pegsol
