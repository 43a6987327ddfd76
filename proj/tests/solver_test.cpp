#include <random>

#include "gtest/gtest.h"

#include "ueg/oracle.hpp"
#include "ueg/solver.hpp"

using namespace ueg;

TEST(Classify, ElevenByEight) {
  const GridDims dims = make_dims(11, 8);
  EXPECT_EQ(classify(dims, {3, 4}), Outcome::N);
  EXPECT_EQ(classify(dims, {2, 4}), Outcome::P);
  EXPECT_EQ(winning_move(dims, {3, 4}), (Vertex{2, 4}));
  EXPECT_THROW(winning_move(dims, {2, 4}), std::invalid_argument);
  EXPECT_THROW(classify(dims, {12, 1}), std::invalid_argument);
}

TEST(Classify, CoprimeBoardsAreAllN) {
  for (int m = 1; m <= 20; ++m) {
    for (int n = 1; n <= 20; ++n) {
      const GridDims dims = make_dims(m, n);
      if (dims.d != 1) continue;
      for (const Vertex& v : all_vertices(dims)) EXPECT_EQ(classify(dims, v), Outcome::N);
    }
  }
}

TEST(Classify, CornerRule) {
  for (int m = 2; m <= 30; ++m) {
    for (int n = 2; n <= 30; ++n) {
      const GridDims dims = make_dims(m, n);
      EXPECT_EQ(classify(dims, {1, 1}) == Outcome::P, dims.d != 1) << m << "x" << n;
    }
  }
}

TEST(Classify, WinningMoveLeadsToP) {
  for (auto [m, n] : oracle::boards_up_to(16)) {
    const GridDims dims = make_dims(m, n);
    for (const Vertex& v : all_vertices(dims)) {
      if (classify(dims, v) != Outcome::N) continue;
      GameState after = apply_move(initial_state(dims, v), winning_move(dims, v));
      EXPECT_EQ(oracle::brute_outcome(after), Outcome::P) << m << "x" << n << " " << v;
    }
  }
}

TEST(Hint, FreshGridUsesClosedForm) {
  const GridDims dims = make_dims(11, 8);
  Hint h = hint(initial_state(dims, {3, 4}), 0);
  EXPECT_EQ(h.outcome, Outcome::N);
  EXPECT_EQ(h.move, (Vertex{2, 4}));
  Hint p = hint(initial_state(dims, {2, 4}), 0);
  EXPECT_EQ(p.outcome, Outcome::P);
  EXPECT_FALSE(p.move.has_value());
}

TEST(Hint, MatchesSearchOnThreeByTwo) {
  const GridDims dims = make_dims(3, 2);
  std::mt19937 rng(11);
  for (int round = 0; round < 300; ++round) {
    GameState s = initial_state(dims, vertex_at(dims, rng() % 6));
    const int steps = 1 + rng() % 6;
    for (int k = 0; k < steps; ++k) {
      auto moves = legal_moves(s);
      if (moves.empty()) break;
      s = apply_move(s, moves[rng() % moves.size()]);
    }
    Hint h = hint(s);
    ASSERT_TRUE(h.outcome.has_value());
    EXPECT_EQ(*h.outcome, oracle::brute_outcome(s));
    if (*h.outcome == Outcome::N) {
      ASSERT_TRUE(h.move.has_value());
      EXPECT_EQ(oracle::brute_outcome(apply_move(s, *h.move)), Outcome::P);
    }
  }
}

TEST(Hint, UnknownWhenBudgetRunsOut) {
  const GridDims dims = make_dims(5, 5);
  GameState s = apply_move(initial_state(dims, {3, 3}), {3, 4});
  Hint h = hint(s, 5);
  EXPECT_FALSE(h.outcome.has_value());
  EXPECT_FALSE(h.move.has_value());

  const GridDims big = make_dims(20, 20);
  Hint g = hint(apply_move(initial_state(big, {1, 1}), {2, 1}));
  EXPECT_FALSE(g.outcome.has_value());
}

TEST(Session, TwoByTwoPlayout) {
  Session s = new_session(make_dims(2, 2), {1, 1});
  EXPECT_EQ(s.engine_role, Role::second);
  EXPECT_TRUE(s.kernel_strategy);
  EXPECT_EQ(s.kernel, (VertexSet{{1, 1}, {2, 2}}));
  EXPECT_FALSE(s.engine_to_move());

  EXPECT_EQ(engine_reply(s, {2, 1}), (Vertex{2, 2}));
  EXPECT_EQ(s.status, SessionStatus::in_progress);
  EXPECT_EQ(engine_reply(s, {1, 2}), (Vertex{1, 1}));
  EXPECT_EQ(s.status, SessionStatus::engine_won);
  EXPECT_EQ(s.history, (std::vector<Vertex>{{2, 1}, {2, 2}, {1, 2}, {1, 1}}));
  EXPECT_THROW(engine_reply(s, {2, 1}), session_error);
}

TEST(Session, EngineOpensOnNPosition) {
  Session s = new_session(make_dims(3, 2), {1, 1});
  EXPECT_EQ(s.engine_role, Role::first);
  EXPECT_EQ(s.history, (std::vector<Vertex>{Vertex{2, 1}}));
  EXPECT_EQ(s.state.root, (Vertex{2, 1}));
  EXPECT_EQ(s.kernel, (VertexSet{{2, 1}, {3, 2}}));
  EXPECT_FALSE(s.engine_to_move());
}

TEST(Session, IllegalMoveLeavesSessionUnchanged) {
  Session s = new_session(make_dims(2, 2), {1, 1});
  const Session before = s;
  EXPECT_THROW(engine_reply(s, {2, 2}), move_error);
  EXPECT_TRUE(s == before);
}

TEST(Session, ForcedLosingRoleFallsBackToSearch) {
  Session s = new_session(make_dims(2, 2), {1, 1}, HumanRole::second);
  EXPECT_EQ(s.engine_role, Role::first);
  EXPECT_FALSE(s.kernel_strategy);
  EXPECT_TRUE(s.kernel.empty());
  EXPECT_EQ(s.history.size(), 1u);
}

TEST(Session, TrivialBoards) {
  Session s = new_session(make_dims(1, 1), {1, 1});
  EXPECT_EQ(s.status, SessionStatus::engine_won);
  Session t = new_session(make_dims(1, 1), {1, 1}, HumanRole::second);
  EXPECT_EQ(t.status, SessionStatus::opponent_won);
  Session u = new_session(make_dims(2, 1), {1, 1});
  EXPECT_EQ(u.status, SessionStatus::engine_won);
}

TEST(Session, RandomOpponentsAlwaysLose) {
  std::mt19937 rng(3);
  for (int m = 1; m <= 6; ++m) {
    for (int n = 1; n <= 6; ++n) {
      const GridDims dims = make_dims(m, n);
      for (int round = 0; round < 20; ++round) {
        Session s = new_session(dims, vertex_at(dims, rng() % dims.vertex_count()));
        while (!s.over()) {
          ASSERT_FALSE(s.engine_to_move());
          // After each engine move the root sits in the kernel.
          if (!s.history.empty()) EXPECT_TRUE(s.kernel.contains(s.state.root));
          else EXPECT_TRUE(s.kernel.contains(s.start));
          auto moves = legal_moves(s.state);
          ASSERT_FALSE(moves.empty());
          engine_reply(s, moves[rng() % moves.size()]);
        }
        EXPECT_EQ(s.status, SessionStatus::engine_won) << m << "x" << n;
        EXPECT_EQ(static_cast<int>(s.history.size()), s.state.removed.size());
      }
    }
  }
}

TEST(Session, Names) {
  EXPECT_STREQ(to_string(Role::first), "first");
  EXPECT_STREQ(to_string(SessionStatus::opponent_won), "opponent_won");
}
