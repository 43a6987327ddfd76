// Grid graph G(m x n), positions (H, v) and the move rule of undirected edge
// geography. Vertices are 1-based: V = [m] x [n].

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace ueg {

/// Board shape: m columns, n rows, and d = gcd(m+1, n+1).
struct GridDims {
  int m = 1;
  int n = 1;
  int d = 2;

  int vertex_count() const { return m * n; }
  int edge_count() const { return m * (n - 1) + n * (m - 1); }

  friend bool operator==(const GridDims&, const GridDims&) = default;
};

GridDims make_dims(int m, int n);

struct Vertex {
  int i = 1;
  int j = 1;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

std::ostream& operator<<(std::ostream& os, const Vertex& v);
std::string to_string(const Vertex& v);

bool is_valid(const GridDims& dims, const Vertex& v);

/// Row-major index j*m + i over 0-based coordinates.
inline int vertex_index(const GridDims& dims, const Vertex& v) {
  return (v.j - 1) * dims.m + (v.i - 1);
}
inline Vertex vertex_at(const GridDims& dims, int index) {
  return {index % dims.m + 1, index / dims.m + 1};
}

std::vector<Vertex> all_vertices(const GridDims& dims);

/// An unordered pair of adjacent vertices, stored with the smaller endpoint
/// first.
class Edge {
 public:
  /// Throws std::invalid_argument unless |i-i'| + |j-j'| = 1.
  Edge(Vertex a, Vertex b);

  const Vertex& lo() const { return lo_; }
  const Vertex& hi() const { return hi_; }
  bool horizontal() const { return lo_.j == hi_.j; }

  friend auto operator<=>(const Edge&, const Edge&) = default;

 private:
  Vertex lo_;
  Vertex hi_;
};

std::ostream& operator<<(std::ostream& os, const Edge& e);
std::string to_string(const Edge& e);

bool adjacent(const Vertex& a, const Vertex& b);

/// Canonical edge numbering: horizontal edges row-major, then vertical edges
/// row-major.
int edge_index(const GridDims& dims, const Edge& e);
Edge edge_at(const GridDims& dims, int index);

/// Membership flags over the canonical edge enumeration.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(const GridDims& dims);

  bool contains(const GridDims& dims, const Edge& e) const {
    return test(edge_index(dims, e));
  }
  void insert(const GridDims& dims, const Edge& e) { set(edge_index(dims, e)); }
  void erase(const GridDims& dims, const Edge& e) { reset(edge_index(dims, e)); }

  bool test(int index) const {
    return index < capacity_ && ((words_[index >> 6] >> (index & 63)) & 1u);
  }
  void set(int index) { words_[index >> 6] |= std::uint64_t{1} << (index & 63); }
  void reset(int index) {
    words_[index >> 6] &= ~(std::uint64_t{1} << (index & 63));
  }

  int capacity() const { return capacity_; }
  int size() const;
  bool empty() const { return size() == 0; }

  /// Members in canonical order.
  std::vector<Edge> edges(const GridDims& dims) const;

  /// The low 64 bits of the membership mask; exact when capacity() <= 64.
  std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }
  std::size_t hash() const;

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  int capacity_ = 0;
  std::vector<std::uint64_t> words_;
};

enum class Outcome { P, N };

const char* to_string(Outcome o);

enum class Parity { even, odd };

inline Parity parity(const Vertex& v) {
  return ((v.i + v.j) % 2 == 0) ? Parity::even : Parity::odd;
}

/// A position (H, v): H is the full grid minus `removed`, `root` is v.
struct GameState {
  GridDims dims;
  EdgeSet removed;
  Vertex root;

  friend bool operator==(const GameState&, const GameState&) = default;
};

/// Fresh position on the full grid. Throws std::invalid_argument for an
/// out-of-range root.
GameState initial_state(const GridDims& dims, Vertex root);

/// Neighbors in N, E, S, W order; throws for an invalid vertex.
std::vector<Vertex> neighbors(const GridDims& dims, const Vertex& v);

/// Neighbors reachable over edges not yet removed.
std::vector<Vertex> legal_moves(const GameState& state);

bool has_edge(const GameState& state, const Vertex& a, const Vertex& b);

class move_error : public std::invalid_argument {
 public:
  enum class kind { invalid_vertex, not_adjacent, edge_removed };

  move_error(kind k, const std::string& what)
      : std::invalid_argument(what), kind_(k) {}

  kind reason() const { return kind_; }

 private:
  kind kind_;
};

/// Removes root-w and re-roots at w. Throws move_error.
GameState apply_move(const GameState& state, const Vertex& w);

/// Raised when an internal guarantee fails (a bug, never an input condition).
class invariant_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ueg

template <>
struct std::hash<ueg::Vertex> {
  std::size_t operator()(const ueg::Vertex& v) const noexcept {
    return std::hash<long long>{}((static_cast<long long>(v.i) << 32) ^ v.j);
  }
};
