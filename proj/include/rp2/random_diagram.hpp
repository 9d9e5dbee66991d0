#pragma once

// Seeded random diagrams: a normal form for a random tuple, scrambled by a few
// random regular moves. The result is reproducible from (start, scramble).

#include <cstdint>
#include <vector>

#include "rp2/invariants.hpp"
#include "rp2/moves.hpp"

namespace rp2 {

InvariantTuple random_tuple(int n, std::uint64_t seed);

struct RandomDiagram {
  InvariantTuple start;
  std::vector<MoveSpec> scramble;
  BouquetDiagram diagram;
};

RandomDiagram random_diagram(int n, std::uint64_t seed, int scramble_moves = 3);

}  // namespace rp2
