// Terminal game loop against the engine.

#pragma once

#include <iosfwd>

#include "ueg/solver.hpp"

namespace ueg {

/// Reads moves as "x y" lines from `in` until the game ends. Illegal or
/// unparsable input re-prompts without changing the game. Returns 0 when the
/// game finished, 2 if input ran out first.
int play_game(const GridDims& dims, const Vertex& start, HumanRole human,
              std::istream& in, std::ostream& out);

}  // namespace ueg
