#pragma once

#include <cstdint>
#include <string>

#include "pegsol/board.hpp"

namespace pegsol::testutil {

// Call fn on every cell string of every length in [1, maxlen], the all-hole
// boards included.  Visits 2^(maxlen+1) - 2 configurations.
template <typename Fn>
void for_each_board(int maxlen, Fn&& fn) {
  std::string text;
  for (int len = 1; len <= maxlen; ++len) {
    text.assign(static_cast<std::size_t>(len), '0');
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      for (int i = 0; i < len; ++i)
        text[static_cast<std::size_t>(i)] = (bits >> i) & 1 ? '1' : '0';
      fn(Configuration::parse(text));
    }
  }
}

} // namespace pegsol::testutil
