// Win/loss classification of fresh grid positions and a perfect-play engine
// that keeps the game inside a fixed even kernel.

#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "ueg/core.hpp"
#include "ueg/kernels.hpp"

namespace ueg {

/// P iff d divides neither coordinate of v.
Outcome classify(const GridDims& dims, const Vertex& v);

/// The move u -> v from kernel_from_90. Throws std::invalid_argument on a
/// P-position.
Vertex winning_move(const GridDims& dims, const Vertex& u);

struct Hint {
  std::optional<Outcome> outcome;  // empty: budget exhausted
  std::optional<Vertex> move;      // set only for N
};

inline constexpr long long default_hint_budget = 2'000'000;

/// Fresh grids are answered in closed form; anything else by bounded search.
Hint hint(const GameState& state, long long budget = default_hint_budget);

enum class Role { first, second };
enum class HumanRole { first, second, automatic };
enum class SessionStatus { in_progress, engine_won, opponent_won };

const char* to_string(Role role);
const char* to_string(SessionStatus status);

class session_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Session {
  GameState state;
  Vertex start;
  Role engine_role = Role::second;
  /// The engine holds the winning role and plays from `kernel`; otherwise it
  /// falls back to hint() and `kernel` is empty.
  bool kernel_strategy = true;
  VertexSet kernel;
  std::vector<Vertex> history;
  SessionStatus status = SessionStatus::in_progress;
  long long hint_budget = default_hint_budget;

  bool engine_to_move() const;
  bool over() const { return status != SessionStatus::in_progress; }

  friend bool operator==(const Session&, const Session&) = default;
};

/// With `automatic` the engine takes whichever role wins. When the engine moves
/// first, its opening move is already applied.
Session new_session(const GridDims& dims, const Vertex& start,
                    HumanRole human = HumanRole::automatic,
                    long long hint_budget = default_hint_budget);

/// The kernel the engine plays from, given its role at `start`; empty when the
/// role is losing.
VertexSet session_kernel(const GridDims& dims, const Vertex& start, Role engine_role);

/// Applies the opponent's move and then the engine's answer. Returns the
/// engine's move, or nullopt when the game ended before the engine moved.
/// Throws move_error for an illegal move (session unchanged) and
/// session_error when the game is over or it is not the opponent's turn.
std::optional<Vertex> engine_reply(Session& session, const Vertex& opponent_move);

}  // namespace ueg
