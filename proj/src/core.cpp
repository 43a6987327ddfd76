#include "ueg/core.hpp"

#include <bit>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <sstream>

namespace ueg {

GridDims make_dims(int m, int n) {
  if (m < 1 || n < 1) {
    throw std::invalid_argument("grid dimensions must be positive, got " +
                                std::to_string(m) + "x" + std::to_string(n));
  }
  return GridDims{m, n, std::gcd(m + 1, n + 1)};
}

std::ostream& operator<<(std::ostream& os, const Vertex& v) {
  return os << '(' << v.i << ',' << v.j << ')';
}

std::string to_string(const Vertex& v) {
  std::ostringstream ss;
  ss << v;
  return ss.str();
}

bool is_valid(const GridDims& dims, const Vertex& v) {
  return v.i >= 1 && v.i <= dims.m && v.j >= 1 && v.j <= dims.n;
}

std::vector<Vertex> all_vertices(const GridDims& dims) {
  std::vector<Vertex> out;
  out.reserve(dims.vertex_count());
  for (int idx = 0; idx < dims.vertex_count(); ++idx) {
    out.push_back(vertex_at(dims, idx));
  }
  return out;
}

bool adjacent(const Vertex& a, const Vertex& b) {
  return std::abs(a.i - b.i) + std::abs(a.j - b.j) == 1;
}

Edge::Edge(Vertex a, Vertex b) {
  if (!adjacent(a, b)) {
    throw std::invalid_argument(to_string(a) + " and " + to_string(b) +
                                " are not adjacent");
  }
  lo_ = std::min(a, b);
  hi_ = std::max(a, b);
}

std::ostream& operator<<(std::ostream& os, const Edge& e) {
  return os << e.lo() << '-' << e.hi();
}

std::string to_string(const Edge& e) {
  std::ostringstream ss;
  ss << e;
  return ss.str();
}

int edge_index(const GridDims& dims, const Edge& e) {
  const Vertex& a = e.lo();
  if (e.horizontal()) {
    return (a.j - 1) * (dims.m - 1) + (a.i - 1);
  }
  return dims.n * (dims.m - 1) + (a.j - 1) * dims.m + (a.i - 1);
}

Edge edge_at(const GridDims& dims, int index) {
  const int horizontal = dims.n * (dims.m - 1);
  if (index < horizontal) {
    Vertex a{index % (dims.m - 1) + 1, index / (dims.m - 1) + 1};
    return Edge(a, {a.i + 1, a.j});
  }
  index -= horizontal;
  Vertex a{index % dims.m + 1, index / dims.m + 1};
  return Edge(a, {a.i, a.j + 1});
}

EdgeSet::EdgeSet(const GridDims& dims)
    : capacity_(dims.edge_count()),
      words_(static_cast<std::size_t>(capacity_ + 63) / 64 + (capacity_ == 0), 0) {}

int EdgeSet::size() const {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

std::vector<Edge> EdgeSet::edges(const GridDims& dims) const {
  std::vector<Edge> out;
  for (int idx = 0; idx < capacity_; ++idx) {
    if (test(idx)) out.push_back(edge_at(dims, idx));
  }
  return out;
}

std::size_t EdgeSet::hash() const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto w : words_) {
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

const char* to_string(Outcome o) { return o == Outcome::P ? "P" : "N"; }

GameState initial_state(const GridDims& dims, Vertex root) {
  if (!is_valid(dims, root)) {
    throw std::invalid_argument("root " + to_string(root) + " is outside the " +
                                std::to_string(dims.m) + "x" +
                                std::to_string(dims.n) + " grid");
  }
  return GameState{dims, EdgeSet(dims), root};
}

std::vector<Vertex> neighbors(const GridDims& dims, const Vertex& v) {
  if (!is_valid(dims, v)) {
    throw std::invalid_argument("invalid vertex " + to_string(v));
  }
  std::vector<Vertex> out;
  out.reserve(4);
  if (v.j < dims.n) out.push_back({v.i, v.j + 1});
  if (v.i < dims.m) out.push_back({v.i + 1, v.j});
  if (v.j > 1) out.push_back({v.i, v.j - 1});
  if (v.i > 1) out.push_back({v.i - 1, v.j});
  return out;
}

std::vector<Vertex> legal_moves(const GameState& state) {
  std::vector<Vertex> out;
  for (const Vertex& w : neighbors(state.dims, state.root)) {
    if (!state.removed.contains(state.dims, Edge(state.root, w))) {
      out.push_back(w);
    }
  }
  return out;
}

bool has_edge(const GameState& state, const Vertex& a, const Vertex& b) {
  return is_valid(state.dims, a) && is_valid(state.dims, b) && adjacent(a, b) &&
         !state.removed.contains(state.dims, Edge(a, b));
}

GameState apply_move(const GameState& state, const Vertex& w) {
  if (!is_valid(state.dims, w)) {
    throw move_error(move_error::kind::invalid_vertex,
                     "move target " + to_string(w) + " is outside the grid");
  }
  if (!adjacent(state.root, w)) {
    throw move_error(move_error::kind::not_adjacent,
                     to_string(w) + " is not adjacent to root " +
                         to_string(state.root));
  }
  Edge e(state.root, w);
  if (state.removed.contains(state.dims, e)) {
    throw move_error(move_error::kind::edge_removed,
                     "edge " + to_string(e) + " was already removed");
  }
  GameState next = state;
  next.removed.insert(state.dims, e);
  next.root = w;
  return next;
}

}  // namespace ueg
