#pragma once

#include <cstdint>
#include <vector>

#include "tileforge/lattice.hpp"
#include "tileforge/solver.hpp"

namespace tileforge::oracle {

// Plain recursive enumeration: cover the first empty cell in rank order with
// every tile translate through it. Shares no code with the exact-cover search.
// Throws ResourceError after `max_nodes` placements.
bool brute_force_tileable(const Region& region, const std::vector<LatticeTile>& tiles,
                          std::uint64_t max_nodes = 50'000'000);

}  // namespace tileforge::oracle
