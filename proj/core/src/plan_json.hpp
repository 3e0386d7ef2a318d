#pragma once

#include <json.hpp>

#include "pegsol/solver.hpp"

namespace pegsol::detail {

inline nlohmann::json plan_to_json(const Plan& plan) {
  nlohmann::json j;
  j["initial"] = plan.initial.to_string();
  j["final_pegs"] = plan.final_pegs;
  nlohmann::json moves = nlohmann::json::array();
  for (const Move& m : plan.moves)
    moves.push_back({{"from", m.from}, {"dir", std::string(1, dir_char(m.dir))}});
  j["moves"] = std::move(moves);
  return j;
}

} // namespace pegsol::detail
