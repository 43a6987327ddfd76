#include "ueg/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <random>
#include <sstream>

#include <json.hpp>

#include "ueg/billiard.hpp"
#include "ueg/solver.hpp"

namespace ueg::oracle {

namespace {

int bits_for(int count) {
  return count <= 1 ? 0 : std::bit_width(static_cast<unsigned>(count - 1));
}

std::uint64_t removed_mask(const EdgeSet& removed) { return removed.low_word(); }

}  // namespace

GameSearch::GameSearch(const GridDims& dims) : GameSearch(dims, Options{}) {}

GameSearch::GameSearch(const GridDims& dims, Options options)
    : dims_(dims), options_(options), adjacency_(dims.vertex_count()) {
  if (dims.edge_count() > options.max_edges) {
    throw guard_error("board " + std::to_string(dims.m) + "x" +
                      std::to_string(dims.n) + " has " +
                      std::to_string(dims.edge_count()) +
                      " edges; search guard is " +
                      std::to_string(options.max_edges));
  }
  if (dims.edge_count() + bits_for(dims.vertex_count()) > 64) {
    throw guard_error("board too large for a 64-bit search key");
  }
  for (const Vertex& v : all_vertices(dims)) {
    auto& adj = adjacency_[vertex_index(dims, v)];
    for (const Vertex& w : neighbors(dims, v)) {
      adj.emplace_back(vertex_index(dims, w), edge_index(dims, Edge(v, w)));
    }
  }
}

bool GameSearch::mover_wins(std::uint64_t removed, int root) {
  std::uint64_t k = 0;
  if (options_.memoize) {
    k = key(removed, root);
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
  }
  if (options_.node_budget && call_nodes_ >= *options_.node_budget) {
    throw budget_exhausted{};
  }
  ++call_nodes_;
  ++total_nodes_;

  bool wins = false;
  for (auto [next, edge] : adjacency_[root]) {
    const std::uint64_t bit = std::uint64_t{1} << edge;
    if (removed & bit) continue;
    if (!mover_wins(removed | bit, next)) {
      wins = true;
      break;
    }
  }
  if (options_.memoize) memo_.emplace(k, wins);
  return wins;
}

std::optional<Outcome> GameSearch::outcome(const GameState& state) {
  if (!(state.dims == dims_)) {
    throw std::invalid_argument("state belongs to a different board");
  }
  call_nodes_ = 0;
  try {
    const bool wins =
        mover_wins(removed_mask(state.removed), vertex_index(dims_, state.root));
    return wins ? Outcome::N : Outcome::P;
  } catch (const budget_exhausted&) {
    return std::nullopt;
  }
}

std::optional<Vertex> GameSearch::winning_reply(const GameState& state) {
  for (const Vertex& w : legal_moves(state)) {
    auto after = outcome(apply_move(state, w));
    if (!after) return std::nullopt;
    if (*after == Outcome::P) return w;
  }
  return std::nullopt;
}

Outcome brute_outcome(const GameState& state, int max_edges) {
  GameSearch search(state.dims, {max_edges, true, std::nullopt});
  return *search.outcome(state);
}

namespace {

// Neighbor masks over vertex indices under the remaining edges.
std::vector<std::uint32_t> neighbor_masks(const GridDims& dims,
                                          const EdgeSet& removed) {
  std::vector<std::uint32_t> masks(dims.vertex_count(), 0);
  for (const Vertex& v : all_vertices(dims)) {
    for (const Vertex& w : neighbors(dims, v)) {
      if (!removed.contains(dims, Edge(v, w))) {
        masks[vertex_index(dims, v)] |= 1u << vertex_index(dims, w);
      }
    }
  }
  return masks;
}

}  // namespace

std::vector<VertexSet> enumerate_even_kernels(const GridDims& dims,
                                              const EdgeSet& removed,
                                              const Vertex& v, std::size_t cap) {
  if (dims.vertex_count() > max_enumeration_vertices) {
    throw guard_error("subset enumeration limited to " +
                      std::to_string(max_enumeration_vertices) + " vertices");
  }
  if (!is_valid(dims, v)) {
    throw std::invalid_argument("invalid vertex " + to_string(v));
  }
  const int count = dims.vertex_count();
  const auto masks = neighbor_masks(dims, removed);
  const std::uint32_t root_bit = 1u << vertex_index(dims, v);
  const std::uint32_t limit = count == 32 ? 0 : (1u << count);

  std::vector<VertexSet> out;
  for (std::uint32_t subset = 1; subset < limit && out.size() < cap; ++subset) {
    if (!(subset & root_bit)) continue;
    bool ok = true;
    for (int u = 0; u < count && ok; ++u) {
      const int inside = std::popcount(masks[u] & subset);
      ok = (subset >> u) & 1u ? inside == 0 : inside % 2 == 0;
    }
    if (!ok) continue;
    VertexSet s;
    for (int u = 0; u < count; ++u) {
      if ((subset >> u) & 1u) s.insert(vertex_at(dims, u));
    }
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

class BitRow {
 public:
  explicit BitRow(int width) : words_((width + 64) / 64, 0) {}

  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void flip(int i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  BitRow& operator^=(const BitRow& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace

std::optional<VertexSet> gf2_kernel(const GridDims& dims, const EdgeSet& removed,
                                    const Vertex& v) {
  if (!is_valid(dims, v)) {
    throw std::invalid_argument("invalid vertex " + to_string(v));
  }
  const Parity side = parity(v);
  std::vector<Vertex> unknowns;
  std::vector<int> column(dims.vertex_count(), -1);
  for (const Vertex& w : all_vertices(dims)) {
    if (parity(w) == side) {
      column[vertex_index(dims, w)] = static_cast<int>(unknowns.size());
      unknowns.push_back(w);
    }
  }
  const int width = static_cast<int>(unknowns.size());
  const int rhs = width;  // augmented column

  std::vector<BitRow> rows;
  {
    BitRow pin(width);
    pin.flip(column[vertex_index(dims, v)]);
    pin.flip(rhs);
    rows.push_back(pin);
  }
  for (const Vertex& u : all_vertices(dims)) {
    if (parity(u) == side) continue;
    BitRow row(width);
    for (const Vertex& w : neighbors(dims, u)) {
      if (!removed.contains(dims, Edge(u, w))) row.flip(column[vertex_index(dims, w)]);
    }
    rows.push_back(row);
  }

  std::vector<int> pivot_of_row;
  std::size_t rank = 0;
  for (int col = 0; col < width && rank < rows.size(); ++col) {
    auto it = std::find_if(rows.begin() + rank, rows.end(),
                           [col](const BitRow& r) { return r.test(col); });
    if (it == rows.end()) continue;
    std::swap(*it, rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r].test(col)) rows[r] ^= rows[rank];
    }
    pivot_of_row.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (rows[r].test(rhs)) return std::nullopt;
  }

  VertexSet out;
  for (std::size_t r = 0; r < rank; ++r) {
    if (rows[r].test(rhs)) out.insert(unknowns[pivot_of_row[r]]);
  }
  return out;
}

std::vector<std::pair<int, int>> boards_up_to(int max_edges) {
  std::vector<std::pair<int, int>> out;
  for (int m = 1; m <= max_edges + 1; ++m) {
    for (int n = 1; n <= max_edges + 1; ++n) {
      if (m * (n - 1) + n * (m - 1) <= max_edges) out.emplace_back(m, n);
    }
  }
  std::stable_sort(out.begin(), out.end(), [](auto a, auto b) {
    return make_dims(a.first, a.second).edge_count() <
           make_dims(b.first, b.second).edge_count();
  });
  return out;
}

SweepReport verify_sweep(int max_edges) {
  using clock = std::chrono::steady_clock;
  SweepReport report;
  report.max_edges = max_edges;
  const auto sweep_start = clock::now();

  for (auto [m, n] : boards_up_to(max_edges)) {
    const auto board_start = clock::now();
    const GridDims dims = make_dims(m, n);
    GameSearch search(dims, {std::max(max_edges, dims.edge_count()), true, std::nullopt});
    for (const Vertex& v : all_vertices(dims)) {
      const Outcome searched = *search.outcome(initial_state(dims, v));
      const Outcome classified = classify(dims, v);
      if (searched != classified) {
        report.mismatches.push_back({m, n, v, classified, searched});
      }
    }
    const std::chrono::duration<double> took = clock::now() - board_start;
    report.boards.push_back({m, n, dims.edge_count(), dims.vertex_count(),
                             search.memo_size(), took.count()});
  }
  const std::chrono::duration<double> took = clock::now() - sweep_start;
  report.seconds = took.count();
  return report;
}

int SweepReport::positions() const {
  int total = 0;
  for (const auto& b : boards) total += b.positions;
  return total;
}

std::string SweepReport::to_text() const {
  std::ostringstream ss;
  ss << "sweep: boards with <= " << max_edges << " edges\n";
  for (const auto& b : boards) {
    ss << "  " << b.m << "x" << b.n << "  edges=" << b.edges
       << "  roots=" << b.positions << "  states=" << b.states
       << "  time=" << b.seconds << "s\n";
  }
  for (const auto& mm : mismatches) {
    ss << "  MISMATCH " << mm.m << "x" << mm.n << " root " << mm.root
       << ": classify=" << to_string(mm.classified)
       << " search=" << to_string(mm.searched) << "\n";
  }
  ss << boards.size() << " boards, " << positions() << " positions, "
     << mismatches.size() << " mismatches, " << seconds << "s\n";
  return ss.str();
}

std::string SweepReport::to_json() const {
  nlohmann::json j;
  j["max_edges"] = max_edges;
  j["positions"] = positions();
  j["seconds"] = seconds;
  j["boards"] = nlohmann::json::array();
  for (const auto& b : boards) {
    j["boards"].push_back({{"m", b.m},
                           {"n", b.n},
                           {"edges", b.edges},
                           {"roots", b.positions},
                           {"states", b.states},
                           {"seconds", b.seconds}});
  }
  j["mismatches"] = nlohmann::json::array();
  for (const auto& mm : mismatches) {
    j["mismatches"].push_back({{"m", mm.m},
                               {"n", mm.n},
                               {"root", {mm.root.i, mm.root.j}},
                               {"classified", to_string(mm.classified)},
                               {"searched", to_string(mm.searched)}});
  }
  return j.dump(2);
}

namespace {

std::string where(const GridDims& dims, const Vertex& v) {
  return std::to_string(dims.m) + "x" + std::to_string(dims.n) + " at " + to_string(v);
}

}  // namespace

SuiteReport verify_trail_kernels(int max_side) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report{"trail kernels up to " + std::to_string(max_side), 0, {}, 0};
  for (int m = 1; m <= max_side; ++m) {
    for (int n = 1; n <= max_side; ++n) {
      const GridDims dims = make_dims(m, n);
      for (const Vertex& v : all_vertices(dims)) {
        ++report.checked;
        try {
          if (classify(dims, v) == Outcome::P) {
            VertexSet k = kernel_from_180(dims, build_180_trail(dims, v));
            if (!k.contains(v)) report.failures.push_back(where(dims, v) + ": root not in kernel");
            if (!is_even_kernel(dims, k)) report.failures.push_back(where(dims, v) + ": 180 kernel fails checker");
          } else {
            WinningKernel wk = kernel_from_90(dims, v);
            EdgeSet cut(dims);
            cut.insert(dims, Edge(v, wk.move));
            if (!wk.kernel.contains(wk.move)) report.failures.push_back(where(dims, v) + ": move not in kernel");
            if (!is_even_kernel(dims, cut, wk.kernel)) report.failures.push_back(where(dims, v) + ": 90 kernel fails checker on G - uv");
          }
        } catch (const std::exception& e) {
          report.failures.push_back(where(dims, v) + ": " + e.what());
        }
      }
    }
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

SuiteReport verify_s_k(int max_side) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report{"S_k kernels up to " + std::to_string(max_side), 0, {}, 0};
  for (int m = 1; m <= max_side; ++m) {
    for (int n = 1; n <= max_side; ++n) {
      const GridDims dims = make_dims(m, n);
      if (dims.d == 1) continue;
      for (int k = 0; k <= dims.d; ++k) {
        ++report.checked;
        VertexSet s = s_k_kernel(dims, k);
        if (!is_even_kernel(dims, s)) {
          report.failures.push_back(std::to_string(m) + "x" + std::to_string(n) +
                                    " S_" + std::to_string(k) + " (d=" +
                                    std::to_string(dims.d) + ") " +
                                    (s.empty() ? "is empty" : "is not an even kernel"));
        }
      }
      for (const Vertex& v : all_vertices(dims)) {
        if (divides_a_coordinate(dims, v)) continue;
        ++report.checked;
        if (kernel_memberships(dims, v).size() != 2) {
          report.failures.push_back(where(dims, v) + ": not in exactly two S_k");
        }
      }
    }
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

SuiteReport verify_playouts(int max_side, int games, unsigned seed) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report{"random playouts up to " + std::to_string(max_side) + ", " +
                         std::to_string(games) + " per board, seed " + std::to_string(seed),
                     0, {}, 0};
  std::mt19937 rng(seed);
  for (int m = 1; m <= max_side; ++m) {
    for (int n = 1; n <= max_side; ++n) {
      const GridDims dims = make_dims(m, n);
      for (int g = 0; g < games; ++g) {
        ++report.checked;
        const Vertex root = vertex_at(dims, rng() % dims.vertex_count());
        Session s = new_session(dims, root);
        bool outside = false;
        while (!s.over()) {
          outside |= !s.kernel.contains(s.state.root);
          auto moves = legal_moves(s.state);
          engine_reply(s, moves[rng() % moves.size()]);
        }
        if (outside) report.failures.push_back(where(dims, root) + ": root left the kernel");
        if (s.status != SessionStatus::engine_won) {
          report.failures.push_back(where(dims, root) + ": engine lost");
        }
      }
    }
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace ueg::oracle
