// Ground truth for small boards, independent of the trail constructions:
// memoized game-tree search, subset enumeration of even kernels, and a GF(2)
// solver for one-sided even kernels.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ueg/core.hpp"
#include "ueg/kernels.hpp"

namespace ueg::oracle {

inline constexpr int default_max_edges = 26;

class guard_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Memoized negamax over one board. Keys pack the removed-edge mask and the
/// root index into 64 bits, so edge_count + ceil(log2(vertex_count)) <= 64.
class GameSearch {
 public:
  struct Options {
    int max_edges = default_max_edges;
    bool memoize = true;
    /// Node expansions allowed per call to outcome(); unlimited when empty.
    std::optional<long long> node_budget;
  };

  explicit GameSearch(const GridDims& dims);
  GameSearch(const GridDims& dims, Options options);

  /// Outcome for the player to move, or nullopt if the node budget ran out.
  std::optional<Outcome> outcome(const GameState& state);

  /// A move to a P-position, if the state is N (within budget).
  std::optional<Vertex> winning_reply(const GameState& state);

  std::size_t memo_size() const { return memo_.size(); }
  long long nodes_expanded() const { return total_nodes_; }
  const GridDims& dims() const { return dims_; }

 private:
  struct budget_exhausted {};

  bool mover_wins(std::uint64_t removed, int root);
  std::uint64_t key(std::uint64_t removed, int root) const {
    return removed | (static_cast<std::uint64_t>(root) << dims_.edge_count());
  }

  GridDims dims_;
  Options options_;
  // adjacency_[v] = (neighbor index, edge index) pairs in N, E, S, W order.
  std::vector<std::vector<std::pair<int, int>>> adjacency_;
  std::unordered_map<std::uint64_t, bool> memo_;
  long long call_nodes_ = 0;
  long long total_nodes_ = 0;
};

/// One-shot search; throws guard_error above `max_edges`.
Outcome brute_outcome(const GameState& state, int max_edges = default_max_edges);

inline constexpr int max_enumeration_vertices = 20;

/// Every even kernel of G - removed that contains v, in increasing bitmask
/// order over vertex indices, stopping after `cap` results.
std::vector<VertexSet> enumerate_even_kernels(const GridDims& dims,
                                              const EdgeSet& removed,
                                              const Vertex& v,
                                              std::size_t cap = SIZE_MAX);

/// A one-sided even kernel (all members share v's parity) containing v, found
/// by Gaussian elimination mod 2 with free unknowns set to zero.
std::optional<VertexSet> gf2_kernel(const GridDims& dims, const EdgeSet& removed,
                                    const Vertex& v);

struct Mismatch {
  int m;
  int n;
  Vertex root;
  Outcome classified;
  Outcome searched;
};

struct BoardReport {
  int m;
  int n;
  int edges;
  int positions;
  std::size_t states;
  double seconds;
};

struct SweepReport {
  int max_edges = 0;
  std::vector<BoardReport> boards;
  std::vector<Mismatch> mismatches;
  double seconds = 0;

  int positions() const;
  std::string to_text() const;
  std::string to_json() const;
};

/// classify versus brute_outcome on every fresh board with at most
/// `max_edges` edges and every root.
SweepReport verify_sweep(int max_edges);

/// Boards (m, n) with 1 <= m, n and edge count <= max_edges, ordered by
/// edge count, then m.
std::vector<std::pair<int, int>> boards_up_to(int max_edges);

struct SuiteReport {
  std::string name;
  long checked = 0;
  std::vector<std::string> failures;
  double seconds = 0;

  bool ok() const { return failures.empty(); }
};

/// For all 1 <= m, n <= max_side and every vertex: the 180-degree trail kernel
/// (P-vertices) or the closed 90-degree trail kernel of G - uv (N-vertices)
/// must pass is_even_kernel and contain the expected vertex.
SuiteReport verify_trail_kernels(int max_side);

/// For all 1 <= m, n <= max_side with d > 1: every S_k is a nonempty even
/// kernel and every admissible vertex lies in exactly two of them.
SuiteReport verify_s_k(int max_side);

/// For all 1 <= m, n <= max_side: `games` sessions from random roots with the
/// engine on the winning side against a uniformly random opponent. Every game
/// must end engine_won with the root inside the kernel before each opponent
/// turn.
SuiteReport verify_playouts(int max_side, int games, unsigned seed);

}  // namespace ueg::oracle
