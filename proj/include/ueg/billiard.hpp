// Slope +-1 rays inside the rectangle [0, m+1] x [0, n+1] that reflect off the
// sides, and the 90-degree and 180-degree trails assembled from them.
//
// All geometry is on integer lattice points: a ray advances one diagonal unit
// step at a time, reflects on arrival at a side, and stops on reaching a
// corner or on first returning to its start vertex.

#pragma once

#include <compare>
#include <string>
#include <variant>
#include <vector>

#include "ueg/core.hpp"

namespace ueg {

struct Point {
  int x = 0;
  int y = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
};

inline Point to_point(const Vertex& v) { return {v.i, v.j}; }

enum class Direction { NE, NW, SE, SW };

inline constexpr Direction all_directions[] = {Direction::NE, Direction::NW,
                                               Direction::SE, Direction::SW};

int dx(Direction dir);
int dy(Direction dir);
Direction direction_of(int dx, int dy);
Direction opposite(Direction dir);
const char* to_string(Direction dir);

/// A straight diagonal piece from p to q; |q.x - p.x| = |q.y - p.y| > 0.
struct Segment {
  Point p;
  Point q;

  int slope() const { return (q.x - p.x) * (q.y - p.y) > 0 ? 1 : -1; }
  int length() const { return q.x > p.x ? q.x - p.x : p.x - q.x; }
  Segment reversed() const { return {q, p}; }
  bool contains(const Point& pt) const;
  /// Lattice points from p to q inclusive.
  std::vector<Point> points() const;
  /// Identifies the diagonal line carrying the segment: x - y for slope +1,
  /// x + y for slope -1 (paired with slope()).
  int line_constant() const { return slope() > 0 ? p.x - p.y : p.x + p.y; }

  friend bool operator==(const Segment&, const Segment&) = default;
};

struct CornerHit {
  Point corner;
};

/// The ray came back to its start; `from` is the side it arrived from, i.e.
/// the reverse of its final direction of travel.
struct Returned {
  Direction from;
};

struct RayPath {
  Vertex start;
  Direction out;
  std::vector<Segment> segments;
  std::variant<CornerHit, Returned> terminal;

  bool hit_corner() const { return std::holds_alternative<CornerHit>(terminal); }
  bool returned() const { return std::holds_alternative<Returned>(terminal); }
  Direction returned_from() const { return std::get<Returned>(terminal).from; }
  Point corner() const { return std::get<CornerHit>(terminal).corner; }
};

RayPath trace_ray(const GridDims& dims, const Vertex& start, Direction dir);

bool is_corner(const GridDims& dims, const Point& p);

enum class Angle { right = 90, straight = 180 };

/// A trail with exactly two segment-ends at its root. Open trails run from
/// corner to corner; in an open 180-degree trail the two collinear halves
/// through the root are merged into one segment.
struct Trail {
  Vertex root;
  std::vector<Segment> segments;
  Angle angle = Angle::right;
  bool closed = false;
};

/// The SW ray if it returns at a right angle, else the NE ray (one of the two
/// always does). Requires d | a or d | b.
Trail build_closed_90_trail(const GridDims& dims, const Vertex& u);

/// Requires d does not divide a and d does not divide b. Uses the NE/SW pair.
Trail build_180_trail(const GridDims& dims, const Vertex& v);

/// Every trail at v with exactly two segment-ends there: one per closed ray
/// (deduplicated against its reverse) and one per pair of corner-bound rays.
std::vector<Trail> all_trails(const GridDims& dims, const Vertex& v);

/// Grid vertices (1 <= x <= m, 1 <= y <= n) lying on any trail segment,
/// sorted.
std::vector<Vertex> trail_vertices(const GridDims& dims, const Trail& trail);

bool divides_a_coordinate(const GridDims& dims, const Vertex& v);

}  // namespace ueg
