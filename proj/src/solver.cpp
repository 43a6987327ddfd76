#include "ueg/solver.hpp"

#include <algorithm>

#include "ueg/billiard.hpp"
#include "ueg/oracle.hpp"

namespace ueg {

Outcome classify(const GridDims& dims, const Vertex& v) {
  if (!is_valid(dims, v)) {
    throw std::invalid_argument("invalid vertex " + to_string(v));
  }
  return divides_a_coordinate(dims, v) ? Outcome::N : Outcome::P;
}

Vertex winning_move(const GridDims& dims, const Vertex& u) {
  if (classify(dims, u) == Outcome::P) {
    throw std::invalid_argument(to_string(u) + " is a P-position; no winning move");
  }
  return kernel_from_90(dims, u).move;
}

Hint hint(const GameState& state, long long budget) {
  if (!is_valid(state.dims, state.root)) {
    throw std::invalid_argument("invalid root " + to_string(state.root));
  }
  if (state.removed.empty()) {
    if (classify(state.dims, state.root) == Outcome::P) return {Outcome::P, {}};
    return {Outcome::N, winning_move(state.dims, state.root)};
  }
  try {
    oracle::GameSearch search(state.dims, {64, true, budget});
    auto outcome = search.outcome(state);
    if (!outcome) return {};
    if (*outcome == Outcome::P) return {Outcome::P, {}};
    auto move = search.winning_reply(state);
    if (!move) return {};
    return {Outcome::N, move};
  } catch (const oracle::guard_error&) {
    return {};
  }
}

const char* to_string(Role role) { return role == Role::first ? "first" : "second"; }

const char* to_string(SessionStatus status) {
  switch (status) {
    case SessionStatus::in_progress: return "in_progress";
    case SessionStatus::engine_won: return "engine_won";
    case SessionStatus::opponent_won: return "opponent_won";
  }
  return "?";
}

bool Session::engine_to_move() const {
  if (over()) return false;
  const bool first_to_move = history.size() % 2 == 0;
  return first_to_move == (engine_role == Role::first);
}

VertexSet session_kernel(const GridDims& dims, const Vertex& start, Role engine_role) {
  const Role winning = classify(dims, start) == Outcome::N ? Role::first : Role::second;
  if (engine_role != winning) return {};
  if (engine_role == Role::first) return kernel_from_90(dims, start).kernel;
  return kernel_from_180(dims, build_180_trail(dims, start));
}

namespace {

Vertex choose_engine_move(const Session& session, std::vector<Vertex> moves) {
  std::sort(moves.begin(), moves.end());
  if (session.kernel_strategy) {
    auto back_in = std::find_if(moves.begin(), moves.end(), [&](const Vertex& w) {
      return session.kernel.contains(w);
    });
    if (back_in == moves.end()) {
      throw invariant_violation("no remaining edge from " +
                                to_string(session.state.root) +
                                " back into the kernel");
    }
    return *back_in;
  }
  Hint h = hint(session.state, session.hint_budget);
  if (h.move) return *h.move;
  return moves.front();
}

// Plays the engine's move if it has one, then settles the status.
std::optional<Vertex> engine_move(Session& session) {
  auto moves = legal_moves(session.state);
  if (moves.empty()) {
    session.status = SessionStatus::opponent_won;
    return std::nullopt;
  }
  const Vertex w = choose_engine_move(session, std::move(moves));
  session.state = apply_move(session.state, w);
  session.history.push_back(w);
  if (legal_moves(session.state).empty()) session.status = SessionStatus::engine_won;
  return w;
}

}  // namespace

Session new_session(const GridDims& dims, const Vertex& start, HumanRole human,
                    long long hint_budget) {
  Session session;
  session.state = initial_state(dims, start);
  session.start = start;
  session.hint_budget = hint_budget;

  const Role winning = classify(dims, start) == Outcome::N ? Role::first : Role::second;
  switch (human) {
    case HumanRole::automatic: session.engine_role = winning; break;
    case HumanRole::first: session.engine_role = Role::second; break;
    case HumanRole::second: session.engine_role = Role::first; break;
  }
  session.kernel_strategy = session.engine_role == winning;
  session.kernel = session_kernel(dims, start, session.engine_role);

  if (session.engine_role == Role::first) {
    engine_move(session);
  } else if (legal_moves(session.state).empty()) {
    session.status = SessionStatus::engine_won;
  }
  return session;
}

std::optional<Vertex> engine_reply(Session& session, const Vertex& opponent_move) {
  if (session.over()) throw session_error("game is over");
  if (session.engine_to_move()) throw session_error("it is the engine's turn");

  session.state = apply_move(session.state, opponent_move);
  session.history.push_back(opponent_move);
  return engine_move(session);
}

}  // namespace ueg
