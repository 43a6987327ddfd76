#include "ueg/billiard.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace ueg {

int dx(Direction dir) {
  return (dir == Direction::NE || dir == Direction::SE) ? 1 : -1;
}

int dy(Direction dir) {
  return (dir == Direction::NE || dir == Direction::NW) ? 1 : -1;
}

Direction direction_of(int x, int y) {
  if (x > 0) return y > 0 ? Direction::NE : Direction::SE;
  return y > 0 ? Direction::NW : Direction::SW;
}

Direction opposite(Direction dir) { return direction_of(-dx(dir), -dy(dir)); }

const char* to_string(Direction dir) {
  switch (dir) {
    case Direction::NE: return "NE";
    case Direction::NW: return "NW";
    case Direction::SE: return "SE";
    case Direction::SW: return "SW";
  }
  return "?";
}

bool Segment::contains(const Point& pt) const {
  const int sx = q.x > p.x ? 1 : -1;
  const int sy = q.y > p.y ? 1 : -1;
  const int t = (pt.x - p.x) * sx;
  return t >= 0 && t <= length() && pt.y - p.y == t * sy;
}

std::vector<Point> Segment::points() const {
  const int sx = q.x > p.x ? 1 : -1;
  const int sy = q.y > p.y ? 1 : -1;
  std::vector<Point> out;
  out.reserve(length() + 1);
  for (int t = 0; t <= length(); ++t) out.push_back({p.x + t * sx, p.y + t * sy});
  return out;
}

bool is_corner(const GridDims& dims, const Point& p) {
  return (p.x == 0 || p.x == dims.m + 1) && (p.y == 0 || p.y == dims.n + 1);
}

RayPath trace_ray(const GridDims& dims, const Vertex& start, Direction dir) {
  if (!is_valid(dims, start)) {
    throw std::invalid_argument("ray start " + to_string(start) +
                                " is outside the grid");
  }
  RayPath path{start, dir, {}, CornerHit{}};
  const Point origin = to_point(start);
  Point pos = origin;
  Point piece_start = origin;
  int vx = dx(dir);
  int vy = dy(dir);

  // (point, direction) pairs in the closed rectangle bound the walk.
  const long cap = 4L * (dims.m + 2) * (dims.n + 2);
  for (long step = 0; step < cap; ++step) {
    pos.x += vx;
    pos.y += vy;
    const bool wall_x = pos.x == 0 || pos.x == dims.m + 1;
    const bool wall_y = pos.y == 0 || pos.y == dims.n + 1;
    if (wall_x && wall_y) {
      path.segments.push_back({piece_start, pos});
      path.terminal = CornerHit{pos};
      return path;
    }
    if (pos == origin) {
      path.segments.push_back({piece_start, pos});
      path.terminal = Returned{direction_of(-vx, -vy)};
      return path;
    }
    if (wall_x || wall_y) {
      path.segments.push_back({piece_start, pos});
      piece_start = pos;
      if (wall_x) vx = -vx;
      if (wall_y) vy = -vy;
    }
  }
  throw invariant_violation("ray from " + to_string(start) + " heading " +
                            to_string(dir) + " exceeded " + std::to_string(cap) +
                            " steps");
}

bool divides_a_coordinate(const GridDims& dims, const Vertex& v) {
  return v.i % dims.d == 0 || v.j % dims.d == 0;
}

namespace {

bool right_angle_return(const RayPath& ray) {
  if (!ray.returned()) return false;
  const Direction from = ray.returned_from();
  return from != ray.out && from != opposite(ray.out);
}

Trail closed_trail(const RayPath& ray) {
  const bool straight = ray.returned_from() == opposite(ray.out);
  return Trail{ray.start, ray.segments,
               straight ? Angle::straight : Angle::right, true};
}

// Corner-to-corner polyline through the root: the first ray reversed, then the
// second. Collinear halves meeting at the root are merged.
Trail open_trail(const RayPath& first, const RayPath& second) {
  Trail trail{first.start, {}, Angle::right, false};
  for (auto it = first.segments.rbegin(); it != first.segments.rend(); ++it) {
    trail.segments.push_back(it->reversed());
  }
  auto rest = second.segments.begin();
  if (second.out == opposite(first.out)) {
    trail.angle = Angle::straight;
    trail.segments.back().q = rest->q;
    ++rest;
  }
  trail.segments.insert(trail.segments.end(), rest, second.segments.end());
  return trail;
}

}  // namespace

Trail build_closed_90_trail(const GridDims& dims, const Vertex& u) {
  if (!is_valid(dims, u)) {
    throw std::invalid_argument("invalid vertex " + to_string(u));
  }
  if (!divides_a_coordinate(dims, u)) {
    throw std::invalid_argument("closed 90-degree trail needs d | a or d | b; d=" +
                                std::to_string(dims.d) + ", vertex " + to_string(u));
  }
  for (Direction dir : {Direction::SW, Direction::NE}) {
    RayPath ray = trace_ray(dims, u, dir);
    if (right_angle_return(ray)) return closed_trail(ray);
  }
  throw invariant_violation("no closed 90-degree trail at " + to_string(u) +
                            " from the SW or NE ray");
}

Trail build_180_trail(const GridDims& dims, const Vertex& v) {
  if (!is_valid(dims, v)) {
    throw std::invalid_argument("invalid vertex " + to_string(v));
  }
  if (divides_a_coordinate(dims, v)) {
    throw std::invalid_argument("180-degree trail needs d to divide neither "
                                "coordinate; d=" + std::to_string(dims.d) +
                                ", vertex " + to_string(v));
  }
  RayPath ne = trace_ray(dims, v, Direction::NE);
  if (ne.returned()) {
    if (ne.returned_from() != Direction::SW) {
      throw invariant_violation("NE ray at " + to_string(v) +
                                " returned at a right angle");
    }
    return closed_trail(ne);
  }
  RayPath sw = trace_ray(dims, v, Direction::SW);
  if (sw.hit_corner()) return open_trail(sw, ne);
  if (sw.returned_from() != Direction::NE) {
    throw invariant_violation("SW ray at " + to_string(v) +
                              " returned at a right angle");
  }
  return closed_trail(sw);
}

std::vector<Trail> all_trails(const GridDims& dims, const Vertex& v) {
  std::vector<RayPath> rays;
  for (Direction dir : all_directions) rays.push_back(trace_ray(dims, v, dir));

  std::vector<Trail> out;
  std::set<std::pair<Direction, Direction>> seen;
  for (const RayPath& ray : rays) {
    if (!ray.returned()) continue;
    // The loop traced from `out` is the reverse of the one traced from `from`.
    const Direction from = ray.returned_from();
    const std::pair<Direction, Direction> key = std::minmax(ray.out, from);
    if (seen.insert(key).second) out.push_back(closed_trail(ray));
  }
  for (std::size_t a = 0; a < rays.size(); ++a) {
    for (std::size_t b = a + 1; b < rays.size(); ++b) {
      if (rays[a].hit_corner() && rays[b].hit_corner()) {
        out.push_back(open_trail(rays[a], rays[b]));
      }
    }
  }
  return out;
}

std::vector<Vertex> trail_vertices(const GridDims& dims, const Trail& trail) {
  std::set<Vertex> found;
  for (const Segment& seg : trail.segments) {
    for (const Point& pt : seg.points()) {
      Vertex v{pt.x, pt.y};
      if (is_valid(dims, v)) found.insert(v);
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace ueg
